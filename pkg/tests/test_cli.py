"""CLI behaviour: reports, determinism, exit codes."""

import json

import pytest

from hexaform.cli import main
from hexaform.triangulation import Triangulation, load, save

SINGLE = Triangulation("one", ((0, 1, 2, 3, 4),))
DISCONNECTED = Triangulation("two", ((0, 1, 2, 3, 4), (5, 6, 7, 8, 9)))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def single_file(tmp_path):
    path = tmp_path / "one.json"
    save(SINGLE, str(path))
    return str(path)


class TestInvariant:
    def test_s4_form_rank0(self, capsys):
        doc = run_json(capsys, "invariant", "--manifold", "s4", "--mode", "form")
        assert doc["invariants"]["rank"] == 0
        assert doc["invariants"]["dim"] == 9

    def test_s4_prob_concentrated(self, capsys):
        doc = run_json(capsys, "invariant", "--manifold", "s4", "--mode", "prob",
                       "--p", "2", "--n", "1", "--m", "0")
        assert doc["distribution"]["entries"] == [{"count": "512", "value": "0"}]

    def test_cp2_form(self, capsys):
        doc = run_json(capsys, "invariant", "--manifold", "cp2", "--mode", "form")
        inv = doc["invariants"]
        assert inv["rank"] == 1
        assert inv["factors"] == [1]

    def test_file_input(self, capsys, single_file):
        # open manifolds carry the probability invariant but not the form
        doc = run_json(capsys, "invariant", "--file", single_file,
                       "--mode", "prob", "--p", "2")
        assert doc["manifold"] == "one"
        assert doc["distribution"]["total"] == "32"
        code, _, _ = run(capsys, "invariant", "--file", single_file)
        assert code == 1

    def test_out_flag(self, capsys, tmp_path):
        dest = tmp_path / "report.json"
        code, out, _ = run(capsys, "invariant", "--manifold", "s4",
                           "--out", str(dest))
        assert code == 0 and out == ""
        assert json.loads(dest.read_text())["command"] == "invariant"


class TestVerify:
    def test_chained_sequence(self, capsys):
        doc = run_json(capsys, "verify", "--manifold", "s4",
                       "--moves", "1-5,2-4,3-3")
        assert doc["all_equal"] is True
        assert [s["dim_shift"] for s in doc["steps"]] == [4, 1, 0]

    def test_random_moves_form(self, capsys):
        doc = run_json(capsys, "verify", "--manifold", "s4",
                       "--random", "4", "--seed", "9")
        assert doc["all_equal"] is True
        assert doc["seed"] == 9
        assert len(doc["steps"]) == 4

    def test_prob_mode(self, capsys):
        doc = run_json(capsys, "verify", "--manifold", "s4",
                       "--moves", "1-5,2-4", "--mode", "prob",
                       "--p", "2", "--n", "1", "--m", "1")
        assert doc["all_equal"] is True

    def test_empty_script_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--manifold", "s4")
        assert code == 1
        assert "verify" in err or "moves" in err


class TestFrobenius:
    def test_quadratic(self, capsys):
        doc = run_json(capsys, "frobenius", "--p", "2", "--m", "0", "--check")
        assert doc["degree"] == 2
        assert doc["cocycle"] is True
        assert "x_jklm" in doc["polynomial"]

    def test_sextic(self, capsys):
        doc = run_json(capsys, "frobenius", "--p", "2", "--m1", "1", "--m2", "2")
        assert doc["degree"] == 6
        assert doc["mode"] == {"kind": "double", "m1": 1, "m2": 2}

    def test_reference_cubic(self, capsys):
        doc = run_json(capsys, "frobenius", "--reference-cubic")
        assert doc["degree"] == 3
        assert doc["cocycle"] is True
        assert doc["polynomial"].count("+") == 4

    def test_missing_p(self, capsys):
        code, _, _ = run(capsys, "frobenius", "--m", "1")
        assert code == 1

    def test_conflicting_modes(self, capsys):
        code, _, _ = run(capsys, "frobenius", "--p", "2", "--m", "1", "--m1", "0",
                         "--m2", "1")
        assert code == 1


class TestCompareAndManifold:
    def test_compare_s4(self, capsys):
        doc = run_json(capsys, "compare", "--manifold", "s4")
        assert doc["hexagon"]["rank"] == 0
        assert doc["cup"]["rank"] == 0

    def test_manifold_info(self, capsys):
        doc = run_json(capsys, "manifold", "--manifold", "cp2")
        assert doc["pentachora"] == 36
        assert doc["closed"] is True
        assert doc["euler_characteristic"] == 3

    def test_manifold_save(self, capsys, tmp_path):
        dest = tmp_path / "saved.json"
        code, _, _ = run(capsys, "manifold", "--manifold", "s4", "--save", str(dest))
        assert code == 0
        t = load(str(dest))
        assert len(t.pentachora) == 6
        assert t.signs is not None


class TestExitCodes:
    def test_usage_no_manifold(self, capsys):
        code, _, err = run(capsys, "invariant")
        assert code == 1
        assert "manifold" in err

    def test_usage_both_sources(self, capsys, single_file):
        code, _, _ = run(capsys, "invariant", "--manifold", "s4",
                         "--file", single_file)
        assert code == 1

    def test_orientation_error(self, capsys, tmp_path):
        path = tmp_path / "two.json"
        save(DISCONNECTED, str(path))
        code, _, err = run(capsys, "invariant", "--file", str(path))
        assert code == 2
        assert "orientation" in err

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "invariant", "--manifold", "s4", "--mode",
                           "prob", "--p", "2", "--cap", "100")
        assert code == 3
        assert "cap" in err

    def test_no_applicable_move(self, capsys, single_file):
        code, _, err = run(capsys, "verify", "--file", single_file,
                           "--moves", "3-3", "--mode", "prob", "--p", "2")
        assert code == 4
        assert "3-3" in err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"name": "bad", "vertices": 5, "pentachora": [[0,1,1,3,4]]}')
        code, _, err = run(capsys, "invariant", "--file", str(path))
        assert code == 5
        assert "malformed" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "invariant", "--file", str(tmp_path / "no.json"))
        assert code == 1


class TestDeterminism:
    def test_byte_identical_reports(self, capsys):
        configs = [
            ("invariant", "--manifold", "cp2", "--mode", "form"),
            ("verify", "--manifold", "s4", "--random", "3", "--seed", "42"),
            ("invariant", "--manifold", "s4", "--mode", "prob",
             "--p", "2", "--n", "2", "--m", "1", "--model", "tensor"),
            ("compare", "--manifold", "cp2"),
        ]
        for argv in configs:
            _, first, _ = run(capsys, *argv)
            _, second, _ = run(capsys, *argv)
            assert first == second, argv

    def test_relabel_robustness(self, capsys, tmp_path):
        # renumbering the vertices must not change the invariants
        from hexaform.manifolds import builtin_manifold
        from hexaform.triangulation import relabel
        t = builtin_manifold("cp2")
        shifted = relabel(t, {i: i + 20 for i in range(9)})
        path = tmp_path / "shifted.json"
        save(shifted, str(path))
        a = run_json(capsys, "invariant", "--manifold", "cp2")
        b = run_json(capsys, "invariant", "--file", str(path))
        for key in ("rank", "signature", "det", "parity", "factors"):
            assert a["invariants"][key] == b["invariants"][key]
