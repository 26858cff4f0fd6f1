"""Exact rational arithmetic, integer lattice algebra, and real-root counting.

Everything in this module is exact: integers are arbitrary precision,
rationals are `fractions.Fraction`, and no floating point appears anywhere.
Integer matrices are lists of rows; where a function speaks of "columns"
(HNF, edge bases) the data is still stored row-major.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

IntVec = tuple[int, ...]
IntMatrix = list[list[int]]
RatVec = tuple[Fraction, ...]
RatMatrix = list[list[Fraction]]

#: Sentinel for the valuation of the zero polynomial.
INFINITE = float("inf")


# ---------------------------------------------------------------------------
# integer vectors


def primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries.

    The sign of the first nonzero entry is preserved.  Rejects the zero
    vector.
    """
    if not any(v):
        raise ValueError("primitive: zero vector")
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return tuple(x // g for x in v)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("dot: dimension mismatch")
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# integer matrices


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if len(A[0]) != len(B):
        raise ValueError("mat_mul: dimension mismatch")
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def mat_vec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in A)


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]


def int_det(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("int_det: matrix not square")
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def det_and_unimodular(A: Sequence[Sequence[int]]) -> tuple[int, bool]:
    """Exact determinant together with the |det| = 1 flag."""
    d = int_det(A)
    return d, abs(d) == 1


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def hnf(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form.

    Returns (H, U) with H = A @ U, U unimodular.  H is lower triangular in
    the sense that pivot rows descend left to right, pivots are positive,
    and in each pivot row the entries in earlier columns are reduced into
    [0, pivot).  Rank deficiency shows up as trailing zero columns of H.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    H = [list(row) for row in A]
    U = identity_matrix(cols)

    def combine(p: int, c: int, m11: int, m12: int, m21: int, m22: int) -> None:
        # (col_p, col_c) <- (m11*col_p + m21*col_c, m12*col_p + m22*col_c)
        for M in (H, U):
            for i in range(len(M)):
                vp, vc = M[i][p], M[i][c]
                M[i][p] = m11 * vp + m21 * vc
                M[i][c] = m12 * vp + m22 * vc

    pivot = 0
    for r in range(rows):
        if pivot >= cols:
            break
        # zero out row r to the right of the pivot column
        for c in range(pivot + 1, cols):
            a, b = H[r][pivot], H[r][c]
            if b == 0:
                continue
            g, x, y = _ext_gcd(a, b)
            combine(pivot, c, x, -(b // g), y, a // g)
        if H[r][pivot] == 0:
            continue  # no pivot in this row
        if H[r][pivot] < 0:
            for M in (H, U):
                for i in range(len(M)):
                    M[i][pivot] = -M[i][pivot]
        # reduce earlier columns against the pivot
        p = H[r][pivot]
        for c in range(pivot):
            q = H[r][c] // p
            if q:
                for M in (H, U):
                    for i in range(len(M)):
                        M[i][c] -= q * M[i][pivot]
        pivot += 1
    return H, U


def rank(A: Sequence[Sequence[int]]) -> int:
    if not A:
        return 0
    H, _ = hnf(transpose(A))  # column rank of A^t = row rank of A
    return sum(1 for col in zip(*H) if any(col))


def integer_kernel_basis(A: Sequence[Sequence[int]]) -> list[IntVec]:
    """Primitive integer basis of the rational null space {x : A x = 0}."""
    if not A:
        return []
    n = len(A[0])
    frac_rows = [[Fraction(x) for x in row] for row in A]
    res = solve_rational(frac_rows, tuple(Fraction(0) for _ in A))
    basis = []
    for v in res.nullspace:
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in v]
        basis.append(primitive(ints))
    assert all(len(v) == n for v in basis)
    return basis


def saturation_index(cols: Sequence[IntVec]) -> int:
    """Index of span_Z(cols) inside its real-span lattice.

    Equals the gcd of all maximal minors; 1 means the columns extend to a
    Z-basis of Z^n.  Requires the columns to be linearly independent.
    """
    k = len(cols)
    if k == 0:
        return 1
    n = len(cols[0])
    g = 0
    for rows_idx in itertools.combinations(range(n), k):
        minor = int_det([[cols[j][i] for j in range(k)] for i in rows_idx])
        g = gcd(g, abs(minor))
    if g == 0:
        raise ValueError("saturation_index: columns are linearly dependent")
    return g


# ---------------------------------------------------------------------------
# rational linear algebra


class SolveResult:
    """Outcome of solving A x = b over the rationals."""

    def __init__(self, status: str, solution: Optional[RatVec], nullspace: list[RatVec]):
        self.status = status  # 'unique' | 'none' | 'underdetermined'
        self.solution = solution
        self.nullspace = nullspace

    def __repr__(self) -> str:  # pragma: no cover
        return f"SolveResult({self.status}, {self.solution}, {self.nullspace})"


def solve_rational(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> SolveResult:
    """Gaussian elimination over Q with full diagnostics.

    Returns a unique solution, reports inconsistency, or returns a
    particular solution plus a nullspace basis when underdetermined.
    """
    m = len(A)
    if len(b) != m:
        raise ValueError("solve_rational: dimension mismatch")
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("solve_rational: ragged matrix")

    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        pr = next((i for i in range(row, m) if M[i][col] != 0), None)
        if pr is None:
            continue
        M[row], M[pr] = M[pr], M[row]
        pv = M[row][col]
        M[row] = [x / pv for x in M[row]]
        for i in range(m):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if M[i][n] != 0:
            return SolveResult("none", None, [])

    sol = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        sol[col] = M[r][n]
    free = [c for c in range(n) if c not in pivots]
    null = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -M[r][fc]
        null.append(tuple(v))
    if not free:
        return SolveResult("unique", tuple(sol), [])
    return SolveResult("underdetermined", tuple(sol), null)


def invert_rational(A: Sequence[Sequence[Fraction]]) -> RatMatrix:
    """Exact inverse of a square rational matrix."""
    n = len(A)
    cols = []
    for j in range(n):
        e = tuple(Fraction(1) if i == j else Fraction(0) for i in range(n))
        res = solve_rational(A, e)
        if res.status != "unique":
            raise ValueError("invert_rational: singular matrix")
        cols.append(res.solution)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# univariate rational polynomials (coefficient lists, lowest degree first)

RatPoly = list[Fraction]


def poly_trim(p: Sequence[Fraction]) -> RatPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_degree(p: Sequence[Fraction]) -> int:
    p = poly_trim(p)
    return len(p) - 1 if p else -1


def poly_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> RatPoly:
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_scale(p: Sequence[Fraction], c: Fraction) -> RatPoly:
    return poly_trim([c * x for x in p])


def poly_sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> RatPoly:
    return poly_add(p, poly_scale(q, Fraction(-1)))


def poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> RatPoly:
    p, q = poly_trim(p), poly_trim(q)
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_deriv(p: Sequence[Fraction]) -> RatPoly:
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def poly_divmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[RatPoly, RatPoly]:
    p, q = poly_trim(p), poly_trim(q)
    if not q:
        raise ZeroDivisionError("poly_divmod: division by zero polynomial")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    while len(rem) >= len(q) and rem:
        f = rem[-1] / q[-1]
        d = len(rem) - len(q)
        quot[d] = f
        for i, c in enumerate(q):
            rem[d + i] -= f * c
        rem = poly_trim(rem)
    return poly_trim(quot), rem


def poly_gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> RatPoly:
    a, b = poly_trim(p), poly_trim(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        a = poly_scale(a, 1 / a[-1])  # monic
    return a


def poly_compose_linear(p: Sequence[Fraction], shift: Fraction, scale: Fraction) -> RatPoly:
    """Coefficients of p(shift + scale * t) in t."""
    out: RatPoly = []
    lin = [Fraction(shift), Fraction(scale)]
    for c in reversed(poly_trim(p)):
        out = poly_add(poly_mul(out, lin), [c])
    return out


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Sequence[Fraction], left: Fraction, right: Fraction) -> int:
    """Number of distinct real roots of p strictly inside (left, right).

    Multiplicity is removed with a square-free reduction before building
    the Sturm chain.  The zero polynomial is rejected.
    """
    p = poly_trim(p)
    if not p:
        raise ValueError("sturm_count: zero polynomial")
    if not left < right:
        raise ValueError("sturm_count: empty interval")
    if len(p) == 1:
        return 0
    sf, _ = poly_divmod(p, poly_gcd(p, poly_deriv(p)))
    if poly_degree(sf) == 0:
        return 0
    chain = [sf, poly_deriv(sf)]
    while poly_trim(chain[-1]):
        _, r = poly_divmod(chain[-2], chain[-1])
        r = poly_scale(r, Fraction(-1))
        if not r:
            break
        chain.append(r)
    va = _sign_changes([poly_eval(q, left) for q in chain])
    vb = _sign_changes([poly_eval(q, right) for q in chain])
    count = va - vb  # roots in (left, right]
    if poly_eval(sf, right) == 0:
        count -= 1
    return count


def isolate_root(p: Sequence[Fraction], left: Fraction, right: Fraction,
                 width: Fraction = Fraction(1, 1024)) -> tuple[Fraction, Fraction]:
    """Shrink (left, right), known to contain at least one root, by bisection."""
    lo, hi = Fraction(left), Fraction(right)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if poly_eval(p, mid) == 0:
            return mid, mid
        if sturm_count(p, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi
