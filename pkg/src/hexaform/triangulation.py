"""Triangulated 4-manifolds with numbered vertices and Pachner moves.

A triangulation is a list of pentachora (5-tuples of vertex ids, strictly
increasing) plus optional orientation signs, one per pentachoron.  All
operations return new values; nothing is mutated in place.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from itertools import combinations

Pentachoron = tuple[int, int, int, int, int]
Tetrahedron = tuple[int, int, int, int]


class TriangulationError(ValueError):
    pass


class NonOrientableError(TriangulationError):
    pass


class DisconnectedError(TriangulationError):
    pass


class MoveError(TriangulationError):
    pass


class ConfigurationNotFound(MoveError):
    pass


class LinkConditionViolation(MoveError):
    pass


class StaleVertex(MoveError):
    pass


class MalformedFile(TriangulationError):
    pass


# before-pentachoron count per move kind; after count is 6 - k
MOVE_KINDS = {"1-5": 1, "2-4": 2, "3-3": 3, "4-2": 4, "5-1": 5}


def faces(u: Pentachoron) -> list[Tetrahedron]:
    """The five 3-faces in inverse lexicographic order: the face omitting
    the smallest vertex comes first, the one omitting the largest last."""
    return [u[:i] + u[i + 1:] for i in range(5)]


@dataclass(frozen=True)
class Triangulation:
    name: str
    pentachora: tuple[Pentachoron, ...]
    signs: tuple[int, ...] | None = None

    def __post_init__(self):
        for u in self.pentachora:
            if len(u) != 5 or any(a >= b for a, b in zip(u, u[1:])) or min(u) < 0:
                raise TriangulationError(f"invalid pentachoron {u}")
        if self.signs is not None:
            if len(self.signs) != len(self.pentachora):
                raise TriangulationError("signs length mismatch")
            if any(s not in (1, -1) for s in self.signs):
                raise TriangulationError("signs must be +-1")
        counts = self._tet_counts()
        bad = [t for t, c in counts.items() if c > 2]
        if bad:
            raise TriangulationError(f"tetrahedron {bad[0]} shared by more than 2 pentachora")

    def _tet_counts(self) -> dict[Tetrahedron, int]:
        counts: dict[Tetrahedron, int] = {}
        for u in self.pentachora:
            for t in faces(u):
                counts[t] = counts.get(t, 0) + 1
        return counts

    @property
    def vertex_ids(self) -> frozenset[int]:
        return frozenset(v for u in self.pentachora for v in u)

    def tetrahedra(self) -> list[Tetrahedron]:
        return sorted(self._tet_counts())

    def is_closed(self) -> bool:
        return all(c == 2 for c in self._tet_counts().values())

    def simplices(self, dim: int) -> list[tuple[int, ...]]:
        return sorted({c for u in self.pentachora for c in combinations(u, dim + 1)})

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(self.simplices(d)) for d in range(5))

    def without_signs(self) -> "Triangulation":
        return replace(self, signs=None)


def _face_incidence(t: Triangulation) -> dict[Tetrahedron, list[tuple[int, int]]]:
    inc: dict[Tetrahedron, list[tuple[int, int]]] = {}
    for ui, u in enumerate(t.pentachora):
        for pos, tet in enumerate(faces(u)):
            inc.setdefault(tet, []).append((ui, pos))
    return inc


def orient(t: Triangulation, anchor: int = 0, anchor_sign: int = 1) -> Triangulation:
    """Fill in coherent orientation signs, fixing the anchor pentachoron.

    Two pentachora sharing a tetrahedron must induce opposite orientations
    on it: sign_u * (-1)^pos_u = -sign_u' * (-1)^pos_u'.  Raises
    NonOrientableError if no coherent assignment exists and
    DisconnectedError if the complex is not face-connected.
    """
    n = len(t.pentachora)
    if n == 0:
        raise TriangulationError("empty triangulation")
    inc = _face_incidence(t)
    signs = [0] * n
    signs[anchor] = anchor_sign
    stack = [anchor]
    while stack:
        ui = stack.pop()
        for pos, tet in enumerate(faces(t.pentachora[ui])):
            pair = inc[tet]
            if len(pair) != 2:
                continue
            (a, pa), (b, pb) = pair
            other, opos = (b, pb) if a == ui else (a, pa)
            want = -signs[ui] * (-1) ** pos * (-1) ** opos
            if signs[other] == 0:
                signs[other] = want
                stack.append(other)
            elif signs[other] != want:
                raise NonOrientableError(f"{t.name}: no coherent orientation exists")
    if any(s == 0 for s in signs):
        raise DisconnectedError(f"{t.name}: complex is not connected")
    return replace(t, signs=tuple(signs))


def boundary_delta5() -> Triangulation:
    """The 6-pentachoron sphere S^4 (facets of a 5-simplex), oriented.

    Facets are listed by omitted vertex; the facet omitting vertex i gets
    sign (-1)^i.
    """
    verts = tuple(range(6))
    pents = tuple(tuple(v for v in verts if v != i) for i in range(6))
    return orient(Triangulation("s4", pents))


@dataclass(frozen=True)
class MoveDescriptor:
    kind: str
    target: tuple[int, ...]       # indices of the before-pentachora
    six_vertices: tuple[int, ...]  # the supporting del-Delta^5 vertex set

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise MoveError(f"unknown move kind {self.kind!r}")
        if len(self.target) != MOVE_KINDS[self.kind]:
            raise MoveError(f"{self.kind} move needs {MOVE_KINDS[self.kind]} target pentachora")
        if len(set(self.six_vertices)) != 6:
            raise MoveError("six_vertices must be 6 distinct ids")


def _move_parts(t: Triangulation, d: MoveDescriptor):
    """Validate a move descriptor against t; return (before, after) facets."""
    k = MOVE_KINDS[d.kind]
    n = len(t.pentachora)
    if len(set(d.target)) != k or any(i < 0 or i >= n for i in d.target):
        raise ConfigurationNotFound("target indices invalid")
    six = tuple(sorted(d.six_vertices))
    six_set = set(six)
    before = [t.pentachora[i] for i in d.target]
    omitted = []
    for u in before:
        if not set(u) <= six_set:
            raise ConfigurationNotFound(f"pentachoron {u} not supported on {six}")
        (o,) = six_set - set(u)
        omitted.append(o)
    if len(set(omitted)) != k:
        raise ConfigurationNotFound("target pentachora are not distinct facets")
    if d.kind == "1-5":
        fresh = omitted[0]
        if fresh in t.vertex_ids:
            raise StaleVertex(f"new vertex {fresh} already present")
    rest = [u for i, u in enumerate(t.pentachora) if i not in d.target]
    if d.kind == "5-1":
        (gone,) = six_set - set(omitted)
        if any(gone in u for u in rest):
            raise LinkConditionViolation(f"vertex {gone} still used outside the move support")
    # simplices interior to the union of the before facets must not meet the
    # rest of the triangulation, and simplices that become interior to the
    # replacement union must not pre-exist there either
    o_set = set(omitted)
    for core, extras in ((six_set - o_set, o_set), (o_set, six_set - o_set)):
        for extra in range(0, 5 - len(core)):
            for s in combinations(sorted(extras), extra):
                sigma = core | set(s)
                if not sigma or len(sigma) > 4 or set(s) == extras:
                    continue
                for u in rest:
                    if sigma <= set(u):
                        raise LinkConditionViolation(
                            f"interior simplex {tuple(sorted(sigma))} meets pentachoron {u}")
    after = [tuple(v for v in six if v != o) for o in sorted(six_set - o_set)]
    for u in after:
        if u in t.pentachora:
            raise LinkConditionViolation(f"replacement pentachoron {u} already present")
    return before, after


def apply_move(t: Triangulation, d: MoveDescriptor) -> Triangulation:
    """Replace the k target pentachora by the complementary 6-k facets of
    the same del-Delta^5.  Orientation signs are re-propagated from a
    surviving pentachoron when the input carries signs."""
    _, after = _move_parts(t, d)
    target = set(d.target)
    kept = [(i, u) for i, u in enumerate(t.pentachora) if i not in target]
    new_pents = sorted([u for _, u in kept] + after)
    out = Triangulation(t.name, tuple(new_pents))
    if t.signs is not None:
        if kept:
            anchor_old_idx, anchor_pent = kept[0]
            out = orient(out, anchor=new_pents.index(anchor_pent),
                         anchor_sign=t.signs[anchor_old_idx])
        else:
            out = orient(out)
    return out


def find_moves(t: Triangulation, kind: str) -> list[MoveDescriptor]:
    """All valid move descriptors of the given kind, by exhaustive search."""
    if kind not in MOVE_KINDS:
        raise MoveError(f"unknown move kind {kind!r}")
    k = MOVE_KINDS[kind]
    out = []
    if kind == "1-5":
        fresh = (max(t.vertex_ids) + 1) if t.pentachora else 0
        for i, u in enumerate(t.pentachora):
            d = MoveDescriptor(kind, (i,), tuple(sorted(u + (fresh,))))
            try:
                _move_parts(t, d)
            except MoveError:
                continue
            out.append(d)
        return out
    verts = sorted(t.vertex_ids)
    six_sets = sorted({tuple(sorted(set(u) | {w}))
                       for u in t.pentachora for w in verts if w not in u})
    for six in six_sets:
        six_set = set(six)
        present = [i for i, u in enumerate(t.pentachora) if set(u) <= six_set]
        if len(present) < k:
            continue
        for combo in combinations(present, k):
            d = MoveDescriptor(kind, combo, six)
            try:
                _move_parts(t, d)
            except MoveError:
                continue
            out.append(d)
    return out


def _perm_parity(perm: list[int]) -> int:
    seen = [False] * len(perm)
    parity = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


def relabel(t: Triangulation, mapping: dict[int, int]) -> Triangulation:
    """Rename vertices by a bijection; signs are adjusted by the parity of
    the sorting permutation so the orientation class is preserved."""
    if len(set(mapping.values())) != len(mapping):
        raise TriangulationError("mapping is not injective")
    new_pents = []
    parities = []
    for u in t.pentachora:
        img = [mapping.get(v, v) for v in u]
        order = sorted(range(5), key=lambda i: img[i])
        perm = [0] * 5
        for newpos, oldpos in enumerate(order):
            perm[oldpos] = newpos
        parities.append(_perm_parity(perm))
        new_pents.append(tuple(sorted(img)))
    order = sorted(range(len(new_pents)), key=lambda i: new_pents[i])
    pents = tuple(new_pents[i] for i in order)
    signs = None
    if t.signs is not None:
        signs = tuple(t.signs[i] * parities[i] for i in order)
    return Triangulation(t.name, pents, signs)


def isomorphic(a: Triangulation, b: Triangulation) -> bool:
    """Relabeling-aware equality: is there a vertex bijection carrying the
    pentachoron set of a onto that of b?  Backtracking search."""
    if len(a.pentachora) != len(b.pentachora):
        return False
    va, vb = sorted(a.vertex_ids), sorted(b.vertex_ids)
    if len(va) != len(vb):
        return False
    set_a = {tuple(u) for u in a.pentachora}
    set_b = {tuple(u) for u in b.pentachora}

    def degree_profile(t, v):
        return sum(1 for u in t.pentachora if v in u)

    prof_a = {v: degree_profile(a, v) for v in va}
    prof_b = {v: degree_profile(b, v) for v in vb}
    # order vertices of a by constraint (appearing in many pentachora first)
    order = sorted(va, key=lambda v: -prof_a[v])

    def extend(i: int, mapping: dict[int, int], used: set[int]) -> bool:
        if i == len(order):
            return {tuple(sorted(mapping[v] for v in u)) for u in set_a} == set_b
        v = order[i]
        for w in vb:
            if w in used or prof_a[v] != prof_b[w]:
                continue
            mapping[v] = w
            ok = True
            for u in set_a:
                if all(x in mapping for x in u):
                    if tuple(sorted(mapping[x] for x in u)) not in set_b:
                        ok = False
                        break
            if ok and extend(i + 1, mapping, used | {w}):
                return True
            del mapping[v]
        return False

    return extend(0, {}, set())


# --- file format -----------------------------------------------------------

def save(t: Triangulation, path: str) -> None:
    doc = {
        "name": t.name,
        "vertices": (max(t.vertex_ids) + 1) if t.pentachora else 0,
        "pentachora": [list(u) for u in t.pentachora],
    }
    if t.signs is not None:
        doc["signs"] = list(t.signs)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")


def from_dict(doc: dict, source: str = "<dict>") -> Triangulation:
    if not isinstance(doc, dict):
        raise MalformedFile(f"{source}: top-level JSON object expected")
    for key in ("name", "vertices", "pentachora"):
        if key not in doc:
            raise MalformedFile(f"{source}: missing field {key!r}")
    pents = []
    for i, raw in enumerate(doc["pentachora"]):
        if (not isinstance(raw, list) or len(raw) != 5
                or any(not isinstance(x, int) for x in raw)):
            raise MalformedFile(f"{source}: pentachora[{i}] must be 5 ints")
        if len(set(raw)) != 5 or raw != sorted(raw):
            raise MalformedFile(f"{source}: pentachora[{i}] = {raw} must be strictly increasing")
        if raw and raw[-1] >= doc["vertices"]:
            raise MalformedFile(f"{source}: pentachora[{i}] uses vertex >= declared count")
        pents.append(tuple(raw))
    signs = None
    if "signs" in doc and doc["signs"] is not None:
        signs = doc["signs"]
        if len(signs) != len(pents) or any(s not in (1, -1) for s in signs):
            raise MalformedFile(f"{source}: signs must be +-1, one per pentachoron")
        signs = tuple(signs)
    try:
        return Triangulation(doc["name"], tuple(pents), signs)
    except TriangulationError as exc:
        raise MalformedFile(f"{source}: {exc}") from exc


def load(path: str) -> Triangulation:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedFile(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from exc
    return from_dict(doc, source=path)
