"""Independent reference computations used by the tests.

None of these share code paths with the library beyond ``Matroid.rank_of``.
"""

from itertools import combinations
from math import comb

from gmatroid.poly import TuttePolynomial


def crapo_beta(M):
    """beta from the alternating rank sum."""
    total = 0
    for S in range(1 << M.n):
        total += (-1) ** S.bit_count() * M.rank_of(S)
    return (-1) ** M.rank * total


def tutte_by_rank(M):
    """Tutte polynomial from the rank generating function."""
    r = M.rank
    acc = {}
    for S in range(1 << M.n):
        rs = M.rank_of(S)
        a, b = r - rs, S.bit_count() - rs
        for i in range(a + 1):
            for j in range(b + 1):
                coef = comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
                acc[(i, j)] = acc.get((i, j), 0) + coef
    return TuttePolynomial(acc)


def graph_bases(n_vertices, edges):
    """Spanning forests of a small graph by cycle detection on each subset."""
    def acyclic(sub):
        comp = list(range(n_vertices))
        for k in sub:
            u, v = edges[k]
            cu, cv = comp[u], comp[v]
            if cu == cv:
                return False
            comp = [cu if c == cv else c for c in comp]
        return True

    best = []
    for size in range(len(edges), -1, -1):
        best = [set(s) for s in combinations(range(len(edges)), size) if acyclic(s)]
        if best:
            return size, best
    return 0, [set()]


def tangent_cone_points(M, I, degree):
    """Lattice points a of the tangent cone of Poly_M at e_I with sum over
    the complement of I equal to ``degree``, from the rank inequalities."""
    n = M.n
    inside = [e for e in range(n) if I >> e & 1]
    outside = [e for e in range(n) if not I >> e & 1]
    tight = [S for S in range(1, 1 << n) if (S & I).bit_count() == M.rank_of(S)]

    def splits(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(total + 1):
            for rest in splits(total - first, parts - 1):
                yield (first,) + rest

    out = []
    for up in splits(degree, len(outside)):
        for down in splits(degree, len(inside)):
            a = [0] * n
            for e, v in zip(outside, up):
                a[e] = v
            for e, v in zip(inside, down):
                a[e] = -v
            if all(sum(a[e] for e in range(n) if S >> e & 1) <= 0 for S in tight):
                out.append(tuple(a))
    return out


def series_coefficients(R, weight, max_degree):
    """Expand a RationalFn as a power series in the grading ``weight``.

    Each factor 1/(1 - x^b) is first rewritten so that b has positive weight,
    using 1/(1 - x^b) = -x^-b / (1 - x^-b). Returns {exponent: coefficient}
    for every term of weight at most ``max_degree``.
    """
    def wt(a):
        return sum(x * y for x, y in zip(a, weight))

    terms = dict(R.num.terms)
    dens = []
    for b, mult in R.den.items():
        if wt(b) == 0:
            raise ValueError("denominator of weight zero")
        for _ in range(mult):
            if wt(b) < 0:
                terms = {tuple(x - y for x, y in zip(a, b)): -c for a, c in terms.items()}
                b = tuple(-x for x in b)
            dens.append(b)
    for b in dens:
        new = {}
        for a, c in terms.items():
            k = 0
            while wt(a) + k * wt(b) <= max_degree:
                e = tuple(x + k * y for x, y in zip(a, b))
                new[e] = new.get(e, 0) + c
                k += 1
        terms = new
    return {a: c for a, c in terms.items() if c and wt(a) <= max_degree}
