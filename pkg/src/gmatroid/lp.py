"""Two-phase tableau simplex over exact rationals, with Bland's rule.

Only meant for the small feasibility problems that certify cells of a
regular subdivision (a few dozen variables, under a hundred constraints).
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list = None
    value: Fraction = None


def _pivot(A, b, obj, basis, r, c):
    piv = A[r][c]
    A[r] = [a / piv for a in A[r]]
    b[r] = b[r] / piv
    for i in range(len(A)):
        if i != r and A[i][c]:
            f = A[i][c]
            A[i] = [a - f * p for a, p in zip(A[i], A[r])]
            b[i] -= f * b[r]
    f = obj[0][c]
    if f:
        obj[0] = [a - f * p for a, p in zip(obj[0], A[r])]
        obj[1] -= f * b[r]
    basis[r] = c


def _run(A, b, obj, basis, allowed):
    """Maximize; obj[0] holds reduced costs and obj[1] the negated objective value."""
    while True:
        enter = next((j for j in allowed if obj[0][j] > 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(len(A)):
            if A[i][enter] > 0:
                ratio = b[i] / A[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(A, b, obj, basis, best[1], enter)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=()):
    """Maximize ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x == b_eq``.

    Variables are nonnegative unless their index is listed in ``free``.
    """
    nvar = len(c)
    free = set(free)
    # column layout: one column per variable, plus a negative part for free ones
    cols = []
    for j in range(nvar):
        cols.append((j, 1))
        if j in free:
            cols.append((j, -1))

    def expand(row):
        return [Fraction(row[j]) * s for j, s in cols]

    rows, rhs = [], []
    n_slack = len(A_ub)
    for k, (row, bi) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(0)] * n_slack
        slack[k] = Fraction(1)
        rows.append(expand(row) + slack)
        rhs.append(Fraction(bi))
    for row, bi in zip(A_eq, b_eq):
        rows.append(expand(row) + [Fraction(0)] * n_slack)
        rhs.append(Fraction(bi))
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]

    m = len(rows)
    nstruct = len(cols) + n_slack
    A = [r + [Fraction(int(i == k)) for k in range(m)] for i, r in enumerate(rows)]
    b = list(rhs)
    basis = [nstruct + i for i in range(m)]
    ncol = nstruct + m

    # phase 1: maximize -sum(artificials)
    red = [Fraction(0)] * ncol
    val = Fraction(0)
    for i in range(m):
        red = [r + a for r, a in zip(red, A[i])]
        val += b[i]
    for k in range(m):
        red[nstruct + k] = Fraction(0)
    obj = [red, val]
    _run(A, b, obj, basis, range(ncol))
    if obj[1] != 0:
        return LPResult("infeasible")

    # drive remaining artificials out of the basis; drop redundant rows
    i = 0
    while i < len(A):
        if basis[i] >= nstruct:
            col = next((j for j in range(nstruct) if A[i][j] != 0), None)
            if col is None:
                del A[i], b[i], basis[i]
                continue
            _pivot(A, b, obj, basis, i, col)
        i += 1

    cost = [Fraction(c[j]) * s for j, s in cols] + [Fraction(0)] * (ncol - len(cols))
    red = list(cost)
    val = Fraction(0)
    for i, bv in enumerate(basis):
        if cost[bv]:
            red = [r - cost[bv] * a for r, a in zip(red, A[i])]
            val += cost[bv] * b[i]
    obj = [red, -val]
    status = _run(A, b, obj, basis, range(nstruct))
    if status == "unbounded":
        return LPResult("unbounded")
    values = [Fraction(0)] * ncol
    for i, bv in enumerate(basis):
        values[bv] = b[i]
    x = [Fraction(0)] * nvar
    for k, (j, s) in enumerate(cols):
        x[j] += s * values[k]
    return LPResult("optimal", x, sum(Fraction(ci) * xi for ci, xi in zip(c, x)))
