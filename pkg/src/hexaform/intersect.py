"""Cup-product intersection form baseline.

Triangles carry single values forming a simplicial 2-cocycle; the
pentachoron cocycle multiplies the front triangle value of one coloring
with the rear triangle value of another.  On a closed oriented manifold
the resulting Gram matrix, quotiented by coboundaries, is the classical
intersection form; this module also probes whether the hexagon Z-form
agrees with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .gf import GF, gf_nullspace
from .hexagon import gram_matrix
from .invariants import FormInvariants, form_invariants
from .triangulation import Triangulation


@dataclass(frozen=True)
class TwoCocycleSpace:
    ring: GF | None
    triangles: tuple
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def _cocycle_rows(t: Triangulation):
    triangles = tuple(t.simplices(2))
    idx = {s: i for i, s in enumerate(triangles)}
    rows = []
    for tet in t.tetrahedra():
        row = [0] * len(triangles)
        for r in range(4):
            face = tet[:r] + tet[r + 1:]
            row[idx[face]] += (-1) ** (3 - r)
        rows.append(row)
    return triangles, rows


def solve_2cocycles(t: Triangulation, ring: GF | None = None) -> TwoCocycleSpace:
    """Kernel of the tetrahedron-coboundary system over triangles; over Z
    the basis is saturated and Hermite-canonical."""
    triangles, rows = _cocycle_rows(t)
    if not rows:
        raise ValueError("triangulation has no tetrahedra")
    if ring is None:
        basis = linalg.integer_kernel_basis(rows)
        return TwoCocycleSpace(None, triangles, tuple(basis))
    grows = [[ring(v) for v in row] for row in rows]
    return TwoCocycleSpace(ring, triangles, tuple(gf_nullspace(grows, ring)))


@dataclass(frozen=True)
class IntersectionGram:
    matrix: tuple
    space: TwoCocycleSpace

    @property
    def dim(self) -> int:
        return self.space.dim

    def int_matrix(self) -> list[list[int]]:
        return [list(row) for row in self.matrix]


def cup_gram(t: Triangulation) -> IntersectionGram:
    """Gram matrix of sum over pentachora of sign * x_front * xi_rear on the
    integral 2-cocycle basis (both coloring copies share the basis)."""
    if t.signs is None:
        raise ValueError("triangulation must be oriented (signs missing)")
    space = solve_2cocycles(t)
    idx = {s: i for i, s in enumerate(space.triangles)}
    terms = []
    for sign, u in zip(t.signs, t.pentachora):
        i, j, k, l, m = u
        terms.append((sign, idx[(i, j, k)], idx[(k, l, m)]))
    g = tuple(tuple(sum(s * a[fi] * b[ri] for s, fi, ri in terms)
                    for b in space.basis) for a in space.basis)
    return IntersectionGram(g, space)


def coboundary_coordinates(t: Triangulation, space: TwoCocycleSpace) -> list[list[int]]:
    """Coordinates, in the cocycle basis, of the coboundaries of the edge
    indicator 1-cochains."""
    if space.ring is not None:
        raise ValueError("integer cocycle space required")
    triangles = space.triangles
    idx = {s: i for i, s in enumerate(triangles)}
    edges = sorted({e for s in triangles for e in combinations(s, 2)})
    z = [[space.basis[j][i] for j in range(space.dim)] for i in range(len(triangles))]
    snf = linalg.smith_normal_form(z)
    r = space.dim
    if snf.rank != r or any(x != 1 for x in snf.diagonal[:r]):
        raise AssertionError("cocycle basis should be saturated")
    coords = []
    for e in edges:
        b = [0] * len(triangles)
        for s in triangles:
            for pos in range(3):
                if s[:pos] + s[pos + 1:] == e:
                    b[idx[s]] += (-1) ** pos
        ub = linalg.mat_vec(snf.u, b)
        if any(x != 0 for x in ub[r:]):
            raise AssertionError("coboundary not in the cocycle space")
        coords.append(linalg.mat_vec(snf.v, ub[:r]))
    return coords


def reduced_cup_invariants(t: Triangulation) -> FormInvariants:
    """Invariants of the cup form after quotienting the cocycle lattice by
    the saturation of the coboundary sublattice (the standard passage to
    second cohomology)."""
    gram = cup_gram(t)
    r = gram.dim
    coords = coboundary_coordinates(t, gram.space)
    cols = [list(c) for c in coords if any(c)]
    _, comp = linalg.saturation_and_complement(cols, r)
    rank = len(comp)
    c = [[comp[j][i] for j in range(rank)] for i in range(r)]
    ct = linalg.transpose(c)
    reduced = linalg.mat_mul(linalg.mat_mul(ct, gram.int_matrix()), c)
    # on a closed manifold the coboundaries lie in the radical, so this is
    # the well-defined quotient form
    return form_invariants(reduced)


COMPARED_FIELDS = ("rank", "signature", "det", "parity", "factors")


def compare_forms(t: Triangulation) -> dict:
    """Probe whether the hexagon Z-form matches the intersection form.

    Produces a report of both invariant tuples and which fields agree;
    evidence only, never a proof either way.
    """
    if not t.is_closed():
        raise ValueError("comparison needs a closed triangulation")
    if t.signs is None:
        raise ValueError("triangulation must be oriented (signs missing)")
    hexagon_inv = form_invariants(gram_matrix(t).int_matrix())
    cup_inv = reduced_cup_invariants(t)
    h_json, c_json = hexagon_inv.to_json(), cup_inv.to_json()
    equal = [f for f in COMPARED_FIELDS if h_json[f] == c_json[f]]
    return {
        "manifold": t.name,
        "hexagon": h_json,
        "cup": c_json,
        "equal_fields": equal,
    }
