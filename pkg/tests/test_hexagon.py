"""Constraint systems, permitted colorings, the cocycle and the action."""

import random

import pytest

from hexaform.gf import make_field
from hexaform.hexagon import (R_MATRIX, Coloring, build_constraints,
                              coboundary_terms, coboundary_terms_alt,
                              gram_matrix, permitted_space, phi, phi_expanded,
                              action_value, solve_permitted, symmetry_defect,
                              verify_cocycle, reduce_mod)
from hexaform.manifolds import builtin_manifold
from hexaform.triangulation import Triangulation, boundary_delta5, faces

SINGLE = Triangulation("one", ((0, 1, 2, 3, 4),))

R_EXPECTED = (
    (0, -2, 1, 1, -2),
    (0, -1, 0, 1, -1),
    (-1, 2, -2, 0, 1),
    (-1, 3, -2, -1, 2),
    (0, 1, -1, 0, 0),
)


def random_coloring(space, rng, lo=-4, hi=5):
    return space.combination([rng.randrange(lo, hi) for _ in range(space.dim)])


def random_gf_coloring(space, rng):
    f = space.ring
    return space.combination([f(rng.randrange(f.q)) for _ in range(space.dim)])


def test_r_matrix_constant():
    assert R_MATRIX == R_EXPECTED


class TestConstraints:
    def test_single_pentachoron_counts(self):
        c = build_constraints(SINGLE)
        assert len(c.rows) == 5
        assert c.num_variables == 10

    def test_boundary_delta5_counts(self):
        c = build_constraints(boundary_delta5())
        assert len(c.rows) == 30
        assert c.num_variables == 30

    def test_zero_coloring_satisfies(self):
        c = build_constraints(boundary_delta5())
        for row in c.rows:
            assert sum(v * 0 for v in row) == 0

    def test_rows_encode_y_equals_rx(self):
        c = build_constraints(SINGLE)
        tets = c.tets
        rng = random.Random(1)
        x = [rng.randrange(-5, 6) for _ in tets]
        fs = faces(SINGLE.pentachora[0])
        y = [sum(R_MATRIX[r][j] * x[tets.index(fs[j])] for j in range(5))
             for r in range(5)]
        vec = x + [y[fs.index(tet)] for tet in tets]
        for row in c.rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


class TestPermittedSpace:
    def test_single_pentachoron_dims(self):
        assert permitted_space(SINGLE).dim == 5
        for f in (make_field(2), make_field(3), make_field(2, 2)):
            assert permitted_space(SINGLE, f).dim == 5

    def test_boundary_delta5_integer_dim(self):
        assert permitted_space(boundary_delta5()).dim == 9

    def test_boundary_delta5_field_dims(self):
        # rank does not drop mod any of these primes
        for f in (make_field(2), make_field(3), make_field(5), make_field(7)):
            assert permitted_space(boundary_delta5(), f).dim == 9

    def test_mod_p_reduction_embeds(self):
        f = make_field(3)
        zspace = permitted_space(boundary_delta5())
        fspace = permitted_space(boundary_delta5(), f)
        reduced = reduce_mod(zspace, f)
        sys = build_constraints(boundary_delta5(), f)
        for vec in reduced:
            for row in sys.rows:
                assert sum((f(c) * v for c, v in zip(row, vec)), f.zero) == f.zero
        assert len(reduced) <= fspace.dim or fspace.dim == len(reduced)

    def test_basis_satisfies_system(self):
        space = permitted_space(boundary_delta5())
        sys = build_constraints(boundary_delta5())
        for vec in space.basis:
            for row in sys.rows:
                assert sum(c * v for c, v in zip(row, vec)) == 0


class TestPhi:
    def test_zero(self):
        z = Coloring.zero(faces(SINGLE.pentachora[0]))
        assert phi(SINGLE.pentachora[0], z, z) == 0

    def test_all_ones(self):
        # x = 1 on every face, y = R x: factors are -1 and 1
        u = SINGLE.pentachora[0]
        tets = sorted(faces(u))
        fs = faces(u)
        x = [1] * 5
        y_by_face = [sum(R_MATRIX[r][c] for c in range(5)) for r in range(5)]
        vals = x + [y_by_face[fs.index(t)] for t in tets]
        col = Coloring(tets, vals)
        assert phi(u, col, col) == -1
        assert phi_expanded(u, col, col) == -1

    def test_two_lines_agree_gf5(self):
        f = make_field(5)
        space = permitted_space(SINGLE, f)
        rng = random.Random(2)
        for _ in range(100):
            lat = random_gf_coloring(space, rng)
            grk = random_gf_coloring(space, rng)
            assert phi(SINGLE.pentachora[0], lat, grk) == \
                phi_expanded(SINGLE.pentachora[0], lat, grk)

    def test_two_lines_agree_on_integer_basis(self):
        space = permitted_space(boundary_delta5())
        cols = space.colorings()
        for u in boundary_delta5().pentachora:
            for a in cols:
                for b in cols:
                    assert phi(u, a, b) == phi_expanded(u, a, b)


class TestAction:
    def test_zero_colorings(self):
        t = boundary_delta5()
        z = Coloring.zero(t.tetrahedra())
        assert action_value(t, z, z) == 0

    def test_bilinearity_gf3(self):
        f = make_field(3)
        t = boundary_delta5()
        space = permitted_space(t, f)
        rng = random.Random(3)
        v = random_gf_coloring(space, rng)
        w = random_gf_coloring(space, rng)
        for a in range(3):
            scaled = v.map(lambda e: f(a) * e)
            assert action_value(t, scaled, w) == f(a) * action_value(t, v, w)

    def test_unoriented_rejected(self):
        with pytest.raises(ValueError):
            action_value(boundary_delta5().without_signs(), None, None)

    def test_vanishes_on_boundary_delta5(self):
        t = boundary_delta5()
        space = permitted_space(t)
        for a in space.colorings():
            for b in space.colorings():
                assert action_value(t, a, b) == 0


class TestGram:
    def test_boundary_delta5_zero(self):
        g = gram_matrix(boundary_delta5())
        assert g.dim == 9
        assert all(v == 0 for row in g.matrix for v in row)

    def test_congruence_transform(self):
        from hexaform import linalg
        t = builtin_manifold("cp2")
        g = gram_matrix(t)
        m = g.int_matrix()
        rng = random.Random(4)
        # random small unimodular change of basis
        p = linalg.identity(g.dim)
        for _ in range(20):
            i, j = rng.sample(range(g.dim), 2)
            for row in p:
                row[j] += rng.choice((-1, 1)) * row[i]
        pt = linalg.transpose(p)
        transformed = linalg.mat_mul(linalg.mat_mul(pt, m), p)
        # recompute the Gram on the transformed basis directly
        cols = [g.space.combination([p[k][b] for k in range(g.dim)])
                for b in range(g.dim)]
        direct = [[action_value(t, a, c) for c in cols] for a in cols]
        assert direct == transformed

    def test_symmetric_on_closed(self):
        m = gram_matrix(builtin_manifold("cp2")).int_matrix()
        assert m == [list(row) for row in zip(*m)]


class TestSymmetryCoboundary:
    def test_identity_single_pentachoron_gf7(self):
        f = make_field(7)
        space = permitted_space(SINGLE, f)
        u = SINGLE.pentachora[0]
        rng = random.Random(5)
        for _ in range(200):
            lat = random_gf_coloring(space, rng)
            grk = random_gf_coloring(space, rng)
            lhs = phi(u, grk, lat) - phi(u, lat, grk)
            terms = coboundary_terms(u, lat, grk)
            alt = coboundary_terms_alt(u, lat, grk)
            s1 = sum(((-1) ** r * v for r, v in enumerate(terms)), f.zero)
            s2 = sum(((-1) ** r * v for r, v in enumerate(alt)), f.zero)
            assert lhs == s1 == s2

    def test_identity_over_z(self):
        space = permitted_space(SINGLE)
        u = SINGLE.pentachora[0]
        rng = random.Random(6)
        for _ in range(50):
            lat = random_coloring(space, rng)
            grk = random_coloring(space, rng)
            lhs = phi(u, grk, lat) - phi(u, lat, grk)
            assert lhs == sum((-1) ** r * v
                              for r, v in enumerate(coboundary_terms(u, lat, grk)))

    def test_zero_colorings(self):
        u = SINGLE.pentachora[0]
        z = Coloring.zero(faces(u))
        assert coboundary_terms(u, z, z) == [0] * 5
        assert coboundary_terms_alt(u, z, z) == [0] * 5

    def test_defect_vanishes_on_closed(self):
        for name in ("s4", "cp2"):
            t = builtin_manifold(name)
            space = permitted_space(t)
            rng = random.Random(7)
            lat = random_coloring(space, rng)
            grk = random_coloring(space, rng)
            acc = symmetry_defect(t, lat, grk)
            assert all(v == 0 for v in acc.values())


class TestVerifyCocycle:
    def test_over_z(self):
        assert verify_cocycle()["cocycle"] is True

    @pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (5, 1)])
    def test_over_fields(self, p, n):
        assert verify_cocycle(make_field(p, n))["cocycle"] is True

    def test_perturbed_r_fails(self):
        # negative control: bump entry (0, 0) of the constraint matrix
        bad = tuple(tuple(v + (1 if (r, c) == (0, 0) else 0) for c, v in enumerate(row))
                    for r, row in enumerate(R_MATRIX))
        assert verify_cocycle(r_matrix=bad)["cocycle"] is False
