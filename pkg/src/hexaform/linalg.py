"""Exact integer linear algebra: Smith normal form, saturated kernels, inertia.

Matrices are plain lists of lists of Python ints (row-major); arbitrary
precision comes for free.  Everything here is deterministic: the same input
always yields the same decomposition, which downstream code relies on for
reproducible Gram matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with D diagonal, d_1 | d_2 | ... >= 0, U, V unimodular."""

    u: Matrix
    d: Matrix
    v: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def _swap_rows(a: Matrix, i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: Matrix, i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a: Matrix, dst: int, src: int, q: int) -> None:
    # row dst += q * row src
    rd, rs = a[dst], a[src]
    for k in range(len(rd)):
        rd[k] += q * rs[k]


def _add_col(a: Matrix, dst: int, src: int, q: int) -> None:
    for row in a:
        row[dst] += q * row[src]


def _scale_row(a: Matrix, i: int, s: int) -> None:
    a[i] = [s * x for x in a[i]]


def _scale_col(a: Matrix, j: int, s: int) -> None:
    for row in a:
        row[j] = s * row[j]


def smith_normal_form(a: Matrix) -> SmithDecomposition:
    """Compute the Smith normal form of an integer matrix.

    Pivoting picks the smallest nonzero entry in absolute value, which keeps
    coefficient growth tame at the matrix sizes this project deals with.
    """
    if not a or not a[0]:
        raise ValueError("matrix must be nonempty")
    m, n = len(a), len(a[0])
    d = [row[:] for row in a]
    u = identity(m)
    v = identity(n)

    def pivot_search(t: int) -> tuple[int, int] | None:
        best = None
        best_abs = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                x = row[j]
                if x:
                    ax = abs(x)
                    if best_abs is None or ax < best_abs:
                        best, best_abs = (i, j), ax
                        if ax == 1:
                            return best
        return best

    t = 0
    while t < min(m, n):
        loc = pivot_search(t)
        if loc is None:
            break
        i, j = loc
        if i != t:
            _swap_rows(d, t, i)
            _swap_rows(u, t, i)
        if j != t:
            _swap_cols(d, t, j)
            _swap_cols(v, t, j)
        if d[t][t] < 0:
            _scale_row(d, t, -1)
            _scale_row(u, t, -1)
        p = d[t][t]
        # clear column t
        dirty = False
        for i in range(t + 1, m):
            if d[i][t]:
                q = d[i][t] // p
                _add_row(d, i, t, -q)
                _add_row(u, i, t, -q)
                if d[i][t]:
                    dirty = True
        if dirty:
            continue
        # clear row t
        for j in range(t + 1, n):
            if d[t][j]:
                q = d[t][j] // p
                _add_col(d, j, t, -q)
                _add_col(v, j, t, -q)
                if d[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the submatrix
        culprit = None
        for i in range(t + 1, m):
            row = d[i]
            for j in range(t + 1, n):
                if row[j] % p:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            _add_row(d, t, culprit, 1)
            _add_row(u, t, culprit, 1)
            continue
        t += 1

    # enforce the divisibility chain on the diagonal
    k = min(m, n)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a_i, a_j = d[i][i], d[i + 1][i + 1]
            if a_j and a_i and a_j % a_i:
                g = gcd(a_i, a_j)
                x, y = _ext_gcd(a_i, a_j)
                # col i += col i+1, then unimodular row mix of rows i, i+1
                _add_col(d, i, i + 1, 1)
                _add_col(v, i, i + 1, 1)
                _row_mix(d, u, i, i + 1, x, y, -(a_j // g), a_i // g)
                # now D[i][i] = g, D[i+1][i] = 0, D[i][i+1] = y*a_j
                q = d[i][i + 1] // g
                _add_col(d, i + 1, i, -q)
                _add_col(v, i + 1, i, -q)
                changed = True
    for i in range(k):
        if d[i][i] < 0:
            _scale_row(d, i, -1)
            _scale_row(u, i, -1)
    return SmithDecomposition(u, d, v)


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    # x, y with x*a + y*b == gcd(a, b)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_s, old_t


def _row_mix(d: Matrix, u: Matrix, i: int, j: int, a: int, b: int, c: int, e: int) -> None:
    # rows (i, j) <- (a*row_i + b*row_j, c*row_i + e*row_j); a*e - b*c must be +-1
    for mat in (d, u):
        ri, rj = mat[i], mat[j]
        mat[i] = [a * x + b * y for x, y in zip(ri, rj)]
        mat[j] = [c * x + e * y for x, y in zip(ri, rj)]


def det(a: Matrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0 or len(a[0]) != n:
        raise ValueError("square matrix required")
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def unimodular_inverse(a: Matrix) -> Matrix:
    """Inverse of a matrix with determinant +-1; result is integral."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        inv = 1 / work[c][c]
        work[c] = [x * inv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    out = [[x for x in row[n:]] for row in work]
    for row in out:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def hermite_columns(basis: list[list[int]]) -> list[list[int]]:
    """Canonical basis (as columns) of the lattice spanned by the given columns.

    Row-HNF of the transposed generator matrix, transposed back: pivots
    positive, entries above each pivot reduced to [0, pivot).
    """
    if not basis:
        return []
    rows = [col[:] for col in basis]
    m, n = len(rows), len(rows[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-combine everything below r into row r
        for i in range(r + 1, m):
            while rows[i][c]:
                if rows[r][c] == 0:
                    rows[r], rows[i] = rows[i], rows[r]
                    continue
                q = rows[i][c] // rows[r][c]
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                if rows[i][c]:
                    rows[r], rows[i] = rows[i], rows[r]
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return [row for row in rows[:r]]


def integer_kernel_basis(a: Matrix) -> list[list[int]]:
    """Saturated Z-basis (list of column vectors) of {v : A v = 0}.

    The kernel columns are read off the Smith decomposition (columns of V
    past the rank), then Hermite-reduced to a canonical basis.
    """
    snf = smith_normal_form(a)
    n = len(a[0])
    r = snf.rank
    cols = [[snf.v[i][j] for i in range(n)] for j in range(r, n)]
    return hermite_columns(cols)


def saturation_and_complement(cols: list[list[int]], n: int
                              ) -> tuple[list[list[int]], list[list[int]]]:
    """Saturation of the column span inside Z^n, plus a complementary basis.

    With U M V = D of rank r, the first r columns of U^-1 span the
    saturation (rational span intersected with Z^n) and the remaining
    columns complete it to a basis of Z^n.
    """
    if not cols:
        return [], [[int(i == j) for i in range(n)] for j in range(n)]
    k = len(cols)
    m = [[cols[j][i] for j in range(k)] for i in range(n)]
    snf = smith_normal_form(m)
    r = snf.rank
    uinv = unimodular_inverse(snf.u)
    sat = [[uinv[i][j] for i in range(n)] for j in range(r)]
    comp = [[uinv[i][j] for i in range(n)] for j in range(r, n)]
    return sat, comp


def kernel_complement(kernel_cols: list[list[int]], n: int) -> list[list[int]]:
    """Columns completing a saturated sublattice basis to a basis of Z^n.

    With U K V = D = [I; 0], the first r columns of U^-1 span the same
    sublattice as K, so the remaining columns of U^-1 form a complement.
    """
    if not kernel_cols:
        return [[int(i == j) for i in range(n)] for j in range(n)]
    r = len(kernel_cols)
    k = [[kernel_cols[j][i] for j in range(r)] for i in range(n)]
    snf = smith_normal_form(k)
    if any(x != 1 for x in snf.diagonal[:r]):
        raise ValueError("sublattice is not saturated")
    uinv = unimodular_inverse(snf.u)
    return [[uinv[i][j] for i in range(n)] for j in range(r, n)]


def inertia(g: Matrix) -> tuple[int, int]:
    """(p_plus, p_minus) of a symmetric integer matrix, by exact rational
    symmetric Gaussian elimination (Sylvester's law of inertia)."""
    n = len(g)
    a = [[Fraction(x) for x in row] for row in g]
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            loc = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j]:
                        loc = (i, j)
                        break
                if loc:
                    break
            if loc is None:
                break
            i, j = loc
            # symmetric row+col add creates a nonzero diagonal at i
            for col in range(n):
                a[i][col] += a[j][col]
            for row in range(n):
                a[row][i] += a[row][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / d
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
        for j in range(k + 1, n):
            if a[k][j]:
                f = a[k][j] / d
                for i in range(k, n):
                    a[i][j] -= f * a[i][k]
        k += 1
    return pos, neg
