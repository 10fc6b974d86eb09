"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples of Python ints (arbitrary precision).
Rationals are :class:`fractions.Fraction`.  Nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DimensionError, NotPrimitiveError, SingularMatrixError

Rat = Fraction
IntMatrix = tuple[tuple[int, ...], ...]

__all__ = [
    "Rat",
    "IntMatrix",
    "as_matrix",
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "det",
    "rank",
    "solve_rational",
    "adjugate",
    "inverse_rational",
    "inverse_unimodular",
    "snf",
    "ext_gcd",
    "unimodular_completion",
    "lll_reduce",
    "cofactor_normal",
]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionError("ragged matrix")
    return m


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in bt) for r in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(r, v)) for r in a)


def _require_square(m):
    if any(len(r) != len(m) for r in m):
        raise DimensionError(f"expected a square matrix, got {len(m)} rows of lengths "
                             f"{sorted({len(r) for r in m})}")


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination.

    >>> det([[1, 0], [-1, 3]])
    3
    """
    a = [list(map(int, r)) for r in m]
    _require_square(a)
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of an integer or rational matrix."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    r = 0
    ncols = len(a[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c]:
                t = a[i][c] / a[r][c]
                a[i] = [x - t * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def solve_rational(m: Sequence[Sequence[int]], b: Sequence[int]) -> tuple[Fraction, ...]:
    """Solve ``m x = b`` exactly by Gauss-Jordan elimination over Q."""
    _require_square(m)
    n = len(m)
    if len(b) != n:
        raise DimensionError("right-hand side has wrong length")
    a = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(m, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                t = a[i][c]
                a[i] = [x - t * y for x, y in zip(a[i], a[c])]
    return tuple(row[n] for row in a)


def adjugate(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Integer adjugate, so that ``m @ adjugate(m) == det(m) * I``."""
    _require_square(m)
    n = len(m)
    if n == 1:
        return ((1,),)
    cof = [[(-1) ** (i + j) * det([[m[r][c] for c in range(n) if c != j]
                                   for r in range(n) if r != i])
            for j in range(n)] for i in range(n)]
    return transpose(cof)


def inverse_rational(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    d = det(m)
    if d == 0:
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(Fraction(x, d) for x in row) for row in adjugate(m))


def inverse_unimodular(m: Sequence[Sequence[int]]) -> IntMatrix:
    d = det(m)
    if abs(d) != 1:
        raise SingularMatrixError("matrix is not unimodular")
    return tuple(tuple(x * d for x in row) for row in adjugate(m))


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def snf(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms.

    Returns ``(U, D, V)`` with ``U @ m @ V == D``, ``U`` and ``V`` unimodular,
    ``D`` diagonal with nonnegative entries ``d1 | d2 | ...``.
    """
    a = [list(map(int, r)) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def row_op(i, j, p, q, r, s):
        # rows (i, j) <- [[p, q], [r, s]] @ rows (i, j), on a and u
        for mat in (a, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [p * x + q * y for x, y in zip(ri, rj)]
            mat[j] = [r * x + s * y for x, y in zip(ri, rj)]

    def col_op(i, j, p, q, r, s):
        # cols (i, j) <- cols (i, j) @ [[p, r], [q, s]], on a and v
        for mat in (a, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i], row[j] = p * x + q * y, r * x + s * y

    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            # the pivot only changes when it is replaced by a proper divisor
            for i in range(t + 1, rows):
                if a[i][t] % a[t][t] == 0:
                    row_op(t, i, 1, 0, -(a[i][t] // a[t][t]), 1)
                elif a[i][t]:
                    g, x, y = ext_gcd(a[t][t], a[i][t])
                    row_op(t, i, x, y, -(a[i][t] // g), a[t][t] // g)
            for j in range(t + 1, cols):
                if a[t][j] % a[t][t] == 0:
                    col_op(t, j, 1, 0, -(a[t][j] // a[t][t]), 1)
                elif a[t][j]:
                    g, x, y = ext_gcd(a[t][t], a[t][j])
                    col_op(t, j, x, y, -(a[t][j] // g), a[t][t] // g)
            if all(a[i][t] == 0 for i in range(t + 1, rows)):
                d = a[t][t]
                bad = next((i for i in range(t + 1, rows)
                            if any(a[i][j] % d for j in range(t + 1, cols))), None)
                if bad is None:
                    break
                row_op(t, bad, 1, 1, 0, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return as_matrix(u), as_matrix(a), as_matrix(v)


def unimodular_completion(q: Sequence[int]) -> IntMatrix:
    """Unimodular ``U`` with ``U @ q == (0, ..., 0, 1)`` for a primitive ``q``."""
    w = [int(x) for x in q]
    m = len(w)
    if m == 0:
        raise DimensionError("empty vector")
    g = 0
    for x in w:
        g = gcd(g, x)
    if g != 1:
        raise NotPrimitiveError(f"gcd of entries is {g}, expected 1")
    u = [list(r) for r in identity(m)]
    last = m - 1
    for i in range(last):
        a, b = w[i], w[last]
        if a == 0:
            continue
        g, x, y = ext_gcd(a, b)
        ri, rl = u[i], u[last]
        u[i] = [(b // g) * s - (a // g) * t for s, t in zip(ri, rl)]
        u[last] = [x * s + y * t for s, t in zip(ri, rl)]
        w[i], w[last] = 0, g
    if w[last] == -1:
        u[last] = [-x for x in u[last]]
    return as_matrix(u)


def cofactor_normal(vectors: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integer vector orthogonal to ``k - 1`` vectors in ``Z^k`` (generalized cross product).

    Zero iff the vectors are linearly dependent.
    """
    k = len(vectors) + 1
    out = []
    for j in range(k):
        minor = [[r[c] for c in range(k) if c != j] for r in vectors]
        out.append((-1) ** j * det(minor))
    return tuple(out)


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)):
    """LLL-reduce the rows of an integer matrix of full row rank.

    Returns ``(T, R)`` with ``T`` unimodular and ``R == T @ basis`` reduced.
    """
    b = [list(map(int, r)) for r in basis]
    n = len(b)
    t = [list(r) for r in identity(n)]

    def dot(x, y):
        return sum(p * q for p, q in zip(x, y))

    def gram_schmidt():
        bs, mu = [], [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = dot(b[i], bs[j]) / dot(bs[j], bs[j])
                v = [x - mu[i][j] * y for x, y in zip(v, bs[j])]
            bs.append(v)
        return bs, mu

    bs, mu = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                t[k] = [x - r * y for x, y in zip(t[k], t[j])]
                # size reduction leaves the orthogonal vectors unchanged
                for l in range(j):
                    mu[k][l] -= r * mu[j][l]
                mu[k][j] -= r
        if dot(bs[k], bs[k]) >= (delta - mu[k][k - 1] ** 2) * dot(bs[k - 1], bs[k - 1]):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            t[k], t[k - 1] = t[k - 1], t[k]
            bs, mu = gram_schmidt()
            k = max(k - 1, 1)
    return as_matrix(t), as_matrix(b)
