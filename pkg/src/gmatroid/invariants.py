"""Tutte polynomial, beta invariant and the g-invariant engine."""

from functools import lru_cache
from math import comb, factorial

from . import errors
from .matroid import (coloops, component_matroids, contract, delete, dual,
                      find_isomorphism, is_connected, loops, parallel_classes,
                      separations, two_sum_factors, wheel, whirl)
from .poly import GPolynomial, TuttePolynomial

T = GPolynomial([0, 1])


# -- Tutte and beta -------------------------------------------------------

@lru_cache(maxsize=None)
def tutte(M):
    """Tutte polynomial by deletion-contraction."""
    lp, cl = loops(M), coloops(M)
    if len(lp) + len(cl) == M.n:
        return TuttePolynomial({(len(cl), len(lp)): 1})
    e = next(x for x in range(M.n) if x not in lp and x not in cl)
    return tutte(delete(M, e)) + tutte(contract(M, e))


@lru_cache(maxsize=None)
def _beta(M):
    if loops(M) or coloops(M):
        return 0
    if M.n == 2:
        return 1  # the only loopless, coloopless matroid on two elements is U(1,2)
    return _beta(contract(M, 0)) + _beta(delete(M, 0))


def beta(M):
    """Crapo's beta invariant via the deletion-contraction recurrence."""
    if M.n < 2:
        raise errors.GroundSetTooSmall("beta needs at least two elements")
    return _beta(M)


# -- series-parallel structure -------------------------------------------

def series_classes(M):
    return parallel_classes(dual(M))


def reduce_series_parallel(M):
    """Delete parallel and contract series elements until none remain.

    Stops at two elements so that U(1,2) survives. The result has the same g.
    """
    while M.n > 2:
        cls = next((c for c in parallel_classes(M) if len(c) > 1), None)
        if cls is not None:
            M = delete(M, cls[-1])
            continue
        cls = next((c for c in series_classes(M) if len(c) > 1), None)
        if cls is not None:
            M = contract(M, cls[-1])
            continue
        break
    return M


def is_series_parallel(M):
    """Connected, loopless, coloopless with beta = 1 (confirmed by reduction to U(1,2))."""
    if M.n < 2 or loops(M) or coloops(M) or not is_connected(M):
        return False
    by_beta = beta(M) == 1
    R = reduce_series_parallel(M)
    by_reduction = R.n == 2 and R.rank == 1 and len(R.bases) == 2
    if by_beta != by_reduction:
        raise AssertionError(f"series-parallel tests disagree on {M}")
    return by_beta


# -- closed forms --------------------------------------------------------

def g_uniform(d, n):
    if not 1 <= d <= n - 1:
        raise errors.PreconditionViolated(f"uniform g needs 1 <= d <= n-1, got d={d}, n={n}")
    terms = {}
    for i in range(1, min(d, n - d) + 1):
        terms[i] = factorial(n - i - 1) // (
            factorial(d - i) * factorial(n - d - i) * factorial(i - 1))
    return GPolynomial.from_dict(terms)


def g_whirl(d):
    if d < 2:
        raise errors.PreconditionViolated("whirls need d >= 2")
    return (GPolynomial([1, 1]) ** d) - GPolynomial([1])


def g_wheel(d):
    if d < 2:
        raise errors.PreconditionViolated("wheels need d >= 2")
    return g_whirl(d) - GPolynomial([0, 1, 1])


def rank2_flats(M):
    """Maximal rank-2 subsets (lines) of a simple rank-3 matroid, as masks."""
    flats = set()
    for a in range(M.n):
        for b in range(a + 1, M.n):
            pair = (1 << a) | (1 << b)
            closure = pair
            for e in range(M.n):
                if M.rank_of(pair | (1 << e)) == 2:
                    closure |= 1 << e
            flats.add(closure)
    return sorted(flats)


def g_rank3(M):
    """Closed form for simple connected rank-3 matroids from their line sizes."""
    if M.rank != 3 or loops(M) or not is_connected(M):
        raise errors.PreconditionViolated("g_rank3 needs a connected loopless rank-3 matroid")
    if any(len(c) > 1 for c in parallel_classes(M)):
        raise errors.PreconditionViolated("g_rank3 needs a simple matroid")
    n = M.n
    sizes = [f.bit_count() for f in rank2_flats(M)]
    if sum(comb(s, 2) for s in sizes) != comb(n, 2):
        raise errors.FlatCountMismatch(f"line sizes {sizes} do not cover all pairs")
    c1 = comb(n - 2, 2) - sum(comb(s - 1, 2) for s in sizes)
    c2 = (n - 3) * (n - 4) - sum((s - 2) ** 2 for s in sizes)
    c3 = comb(n - 4, 2) - sum(comb(s - 2, 2) for s in sizes)
    return GPolynomial([0, c1, c2, c3])


# -- the engine ----------------------------------------------------------

class GEngine:
    """Computes g through reductions, closed forms and subdivision additivity.

    ``closed_forms`` lists the base cases to use; dropping "rank3" forces
    rank-3 matroids through the subdivision fallback. ``trace`` records which
    rule produced each value.
    """

    ALL_FORMS = ("uniform", "wheel", "rank3")

    def __init__(self, closed_forms=ALL_FORMS, use_subdivision=True, max_fallback_n=9):
        self.closed_forms = set(closed_forms)
        self.use_subdivision = use_subdivision
        self.max_fallback_n = max_fallback_n
        self.memo = {}
        self.trace = {}
        self._active = set()

    def __call__(self, M):
        if loops(M) or coloops(M):
            raise errors.CoordinateSubgrassmannian(
                f"g is undefined with loops {loops(M)} or coloops {coloops(M)}")
        if M in self.memo:
            return self.memo[M]
        if M in self._active:
            raise errors.NotComputable("recursive dependency on the same matroid")
        self._active.add(M)
        try:
            g, rule = self._compute(M)
        finally:
            self._active.discard(M)
        self.memo[M] = g
        self.trace[M] = rule
        return g

    def _compute(self, M):
        parts = component_matroids(M)
        if len(parts) > 1:
            g = GPolynomial([1])
            for P in parts:
                g = g * self(P)
            return g, "direct sum"
        R = reduce_series_parallel(M)
        if R.n == 2:
            return T, "series-parallel"
        if R != M:
            return self(R), "series/parallel reduction"
        sep = next(separations(M, 2), None)
        if sep is not None:
            M1, _, M2, _ = two_sum_factors(M, *sep)
            return (self(M1) * self(M2)).divide_by_t(), "2-sum"
        return self._three_connected(M)

    def _three_connected(self, M):
        n, d = M.n, M.rank
        if "uniform" in self.closed_forms and len(M.bases) == comb(n, d):
            return g_uniform(d, n), "uniform"
        if "wheel" in self.closed_forms and n == 2 * d and d >= 3 and n <= 10:
            for build, form in ((wheel, g_wheel), (whirl, g_whirl)):
                W = build(d)
                if len(W.bases) == len(M.bases) and find_isomorphism(M, W) is not None:
                    return form(d), build.__name__
        if "rank3" in self.closed_forms:
            if d == 3:
                return g_rank3(M), "rank 3"
            if n - d == 3:
                return g_rank3(dual(M)), "corank 3"
        if self.use_subdivision and n <= self.max_fallback_n:
            g = self._by_subdivision(M)
            if g is not None:
                return g, "subdivision"
        raise errors.NotComputable(f"no rule applies to {M}")

    def _by_subdivision(self, M):
        from .polytope import (TropicalPlueckerVector, is_tropical_pluecker,
                               regular_subdivision)

        P = TropicalPlueckerVector.indicator(M)
        if not is_tropical_pluecker(P)[0]:
            return None
        S = regular_subdivision(P, verify_volume=False)
        if not any(F.vertices == M.bases for F in S.facets):
            return None
        known = {S.support: self(S.support)}
        for F in S.interior_faces:
            if F.matroid == M:
                continue
            known[F.matroid] = self(F.matroid)
        solved = g_from_subdivision(S, known)
        return solved.get(M)


default_engine = GEngine()


def g_invariant(M, engine=None):
    return (engine or default_engine)(M)


def g_from_subdivision(S, known):
    """Solve the single unknown in  g(whole) = sum of g over interior faces."""
    whole = S.support
    faces = [F.matroid for F in S.interior_faces]
    if any(m is None for m in faces):
        raise errors.NotMatroidal("subdivision has non-matroidal faces")
    unknown = [m for m in faces if m not in known]
    known = dict(known)
    if whole == faces[0] and len(faces) == 1:
        # trivial subdivision: nothing to solve beyond the identity
        return {whole: known[whole]} if whole in known else {}
    whole_known = whole in known
    if whole_known and len(unknown) == 0:
        return {}
    if len(unknown) + (0 if whole_known else 1) > 1:
        raise errors.TooManyUnknowns(
            f"{len(unknown) + (not whole_known)} unknown g values in one equation")
    if not whole_known:
        g = GPolynomial()
        for m in faces:
            g = g + known[m]
        result, target = g, whole
    else:
        g = known[whole]
        for m in faces:
            if m != unknown[0]:
                g = g - known[m]
        result, target = g, unknown[0]
    if result[0] != 0 or any(c < 0 for c in result.coeffs):
        raise errors.InconsistentSum(f"solved value {result} is not a valid g")
    return {target: result}


def g_sanity(M, g):
    """Run the identity checks on a computed g; returns {check name: bool}."""
    c = len(component_matroids(M))
    b = beta(M) if M.n >= 2 else 0
    checks = {
        "value_at_minus_one": g(-1) == (-1) ** c,
        "linear_coefficient_is_beta": g[1] == b,
        "degree_bound": g.degree <= min(M.rank, M.n - M.rank),
        "nonnegative": all(x >= 0 for x in g.coeffs),
        "t_power_of_components": all(g[i] == 0 for i in range(c)) and g[c] > 0,
    }
    return checks
