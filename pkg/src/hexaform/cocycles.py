"""Polynomial cocycles on a generic pentachoron over prime fields.

Linking the Greek coloring half to the Latin one through Frobenius powers
turns the bilinear pentachoron cocycle into a polynomial in the five
face variables; this module generates those polynomials, ships the known
cubic that no such specialization produces, and checks the hexagon
cocycle property by exhaustive evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import GF
from .invariants import CapExceeded, enumeration_cap
from .mpoly import MPoly, linear_combination
from .triangulation import boundary_delta5, faces

# the five face variables of a pentachoron ijklm, inverse lexicographic order
FACE_VARIABLES = ("x_jklm", "x_iklm", "x_ijlm", "x_ijkm", "x_ijkl")

# coefficients of the two linear factors of the expanded cocycle
LATIN_COEFFS = {"x_jklm": 1, "x_iklm": -2, "x_ijlm": 1, "x_ijkm": 1, "x_ijkl": -2}
GREEK_COEFFS = {"x_iklm": 1, "x_ijlm": -1, "x_ijkl": 1}


@dataclass(frozen=True)
class CocyclePolynomial:
    p: int
    poly: MPoly

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self):
        return str(self.poly)


def specialize(p: int, m: int) -> CocyclePolynomial:
    """Polynomial obtained by setting the Greek half to the p^m-th Frobenius
    power of the Latin one; homogeneous of degree p^m + 1."""
    return specialize_double(p, 0, m)


def specialize_double(p: int, m1: int, m2: int) -> CocyclePolynomial:
    """Both halves are Frobenius powers of a common coloring; degree
    p^m1 + p^m2.  Raising a linear form into a p-power distributes over the
    sum and fixes GF(p) coefficients, so each factor just gets its
    exponents scaled."""
    if m1 < 0 or m2 < 0:
        raise ValueError("exponents must be >= 0")
    latin = linear_combination(FACE_VARIABLES, LATIN_COEFFS, p)
    greek = linear_combination(FACE_VARIABLES, GREEK_COEFFS, p)
    poly = latin.raise_exponents(p ** m1) * greek.raise_exponents(p ** m2)
    return CocyclePolynomial(p, poly)


def reference_cubic() -> CocyclePolynomial:
    """The known cubic hexagon cocycle in characteristic 2 that no single or
    double Frobenius specialization reproduces."""
    v = FACE_VARIABLES
    monomials = [
        ("x_iklm", "x_ijkm", "x_ijkl"),
        ("x_iklm", "x_ijlm", "x_ijkl"),
        ("x_jklm", "x_ijlm", "x_ijkl"),
        ("x_jklm", "x_ijlm", "x_ijkm"),
        ("x_jklm", "x_iklm", "x_ijkm"),
    ]
    poly = MPoly.zero(v, 2)
    for mono in monomials:
        term = MPoly.constant(v, 1, 2)
        for name in mono:
            term = term * MPoly.variable(v, name, 2)
        poly = poly + term
    return CocyclePolynomial(2, poly)


def _eval_poly_vec(poly: MPoly, field: GF, var_arrays: dict[str, np.ndarray],
                   size: int) -> np.ndarray:
    add = field.add_table()
    mul = field.mul_table()
    total = np.zeros(size, dtype=np.int16)
    for exps, c in sorted(poly.terms.items()):
        term = np.full(size, field(c).code, dtype=np.int16)
        for name, k in zip(poly.variables, exps):
            arr = var_arrays[name]
            for _ in range(k):
                term = mul[term, arr].astype(np.int16)
        total = add[total, term].astype(np.int16)
    return total


def is_hexagon_cocycle(c: CocyclePolynomial, field: GF,
                       cap: int | None = None) -> bool:
    """Exhaustively evaluate the alternating facet sum of the polynomial on
    every permitted coloring of the boundary of the 5-simplex."""
    if field.p != c.p:
        raise ValueError("field characteristic must match the polynomial")
    from .hexagon import permitted_space
    s4 = boundary_delta5()
    space = permitted_space(s4, field)
    d = space.dim
    total = field.q ** d
    limit = enumeration_cap(cap)
    if total > limit:
        raise CapExceeded(total, limit)
    nt = len(space.tets)
    # x-coordinate value array per tetrahedron, over the whole coloring space
    from .invariants import _enumerate_functional
    tet_vals = {}
    for i, tet in enumerate(space.tets):
        codes = [vec[i].code for vec in space.basis]
        tet_vals[tet] = _enumerate_functional(field, codes)
    add = field.add_table()
    neg = field.neg_table()
    acc = np.zeros(total, dtype=np.int16)
    for sign, u in zip(s4.signs, s4.pentachora):
        var_arrays = {name: tet_vals[tet]
                      for name, tet in zip(FACE_VARIABLES, faces(u))}
        val = _eval_poly_vec(c.poly, field, var_arrays, total)
        if sign == -1:
            val = neg[val].astype(np.int16)
        acc = add[acc, val].astype(np.int16)
    return not np.any(acc)
