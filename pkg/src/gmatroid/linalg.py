"""Exact linear algebra over Q (via Fraction) and over GF(p)."""

from fractions import Fraction
from math import gcd


def _reduce(rows, p=None):
    """Row-reduce a copy of ``rows``; returns (reduced rows, pivot columns)."""
    if p is None:
        A = [[Fraction(x) for x in r] for r in rows]
    else:
        A = [[x % p for x in r] for r in rows]
    m = len(A)
    ncols = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, m) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        if p is None:
            inv = 1 / A[r][c]
            A[r] = [x * inv for x in A[r]]
        else:
            inv = pow(A[r][c], p - 2, p)
            A[r] = [(x * inv) % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                if p is None:
                    A[i] = [a - f * b for a, b in zip(A[i], A[r])]
                else:
                    A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rref(rows, p=None):
    return _reduce(rows, p)


def rank(rows, p=None):
    if not rows:
        return 0
    return len(_reduce(rows, p)[1])


def int_rank(rows):
    """Rank of an integer matrix by fraction-free elimination."""
    A = [list(r) for r in rows]
    m = len(A)
    if not m:
        return 0
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, m) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        piv = A[r][c]
        for i in range(r + 1, m):
            f = A[i][c]
            if f:
                row = [piv * a - f * b for a, b in zip(A[i], A[r])]
                g = 0
                for x in row:
                    g = gcd(g, x)
                A[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == m:
            break
    return r


def det(matrix):
    """Exact determinant of a square integer (or rational) matrix."""
    n = len(matrix)
    A = [[Fraction(x) for x in r] for r in matrix]
    result = Fraction(1)
    for c in range(n):
        k = next((i for i in range(c, n) if A[i][c]), None)
        if k is None:
            return 0
        if k != c:
            A[c], A[k] = A[k], A[c]
            result = -result
        piv = A[c][c]
        result *= piv
        for i in range(c + 1, n):
            f = A[i][c] / piv
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return result.numerator if result.denominator == 1 else result


def solve(matrix, rhs):
    """Solve ``x @ matrix == rhs`` for x, where the rows of ``matrix`` are independent.

    Returns None when rhs is not in the row space.
    """
    k = len(matrix)
    # columns of the augmented system: unknowns x_0..x_{k-1}
    ncols = len(rhs)
    system = [[Fraction(matrix[i][c]) for i in range(k)] + [Fraction(rhs[c])]
              for c in range(ncols)]
    R, piv = _reduce(system)
    if k in piv:
        return None
    x = [Fraction(0)] * k
    for row, c in zip(R, piv):
        x[c] = row[k]
    return x


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def clear_denominators(v):
    """Scale a rational vector to a primitive integer vector with the same direction."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(Fraction(x) * den) for x in v])
