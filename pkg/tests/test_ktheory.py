import random

import pytest

from gmatroid import errors
from gmatroid.ktheory import (EquivariantClass, LaurentPoly, RationalFn, brion_check,
                              check_gkm, check_valuative, cone_hilbert_series,
                              localized_class, tangent_cone_generators)
from gmatroid.matroid import (Matroid, direct_sum, dual, mask_of, relabel, uniform, wheel,
                              whirl)
from gmatroid.polytope import TropicalPlueckerVector, random_tropical_minors, regular_subdivision
from oracles import series_coefficients, tangent_cone_points


def root(n, j, i):
    v = [0] * n
    v[j], v[i] = 1, -1
    return tuple(v)


def lp(n, terms):
    return LaurentPoly(n, terms)


class TestLaurentPoly:
    def test_zero_coefficients_dropped(self):
        f = lp(2, {(1, 0): 1, (0, 1): 0})
        assert f.terms == {(1, 0): 1}
        assert (f - f) == 0

    def test_binomial_division(self):
        b = (1, -1)
        f = LaurentPoly.binomial(b) * lp(2, {(0, 0): 1, (3, 1): 2})
        q = f.divide_binomial(b)
        assert q == lp(2, {(0, 0): 1, (3, 1): 2})
        assert lp(2, {(0, 0): 1}).divide_binomial(b) is None

    def test_substitute(self):
        f = lp(3, {(1, -1, 0): 1, (0, 0, 0): -1})
        assert f.substitute(0, 1) == 0

    def test_repr(self):
        assert repr(lp(2, {(0, 0): 1, (-1, 1): -1})) == "1 - x1^-1*x2"


class TestRationalFn:
    def test_orientation_and_cancel(self):
        # (1 - x^b) / (1 - x^-b) = -x^b
        b = (1, -1)
        R = RationalFn(LaurentPoly.binomial(b), [tuple(-x for x in b)])
        assert R.is_laurent()
        assert R.to_laurent() == lp(2, {b: -1})

    def test_not_laurent(self):
        R = RationalFn(LaurentPoly.one(2), [(1, -1)])
        with pytest.raises(errors.NotLaurent):
            R.to_laurent()

    def test_sum_of_geometric_series(self):
        # 1/(1-x) + 1/(1-1/x) = 1
        a = RationalFn(LaurentPoly.one(1), [(1,)])
        b = RationalFn(LaurentPoly.one(1), [(-1,)])
        assert (a + b) == RationalFn(LaurentPoly.one(1))


def test_tangent_cone_generators():
    assert tangent_cone_generators(uniform(1, 2), [0]) == [root(2, 1, 0)]
    gens = tangent_cone_generators(uniform(2, 4), [0, 1])
    assert sorted(gens) == sorted(root(4, j, i) for i in (0, 1) for j in (2, 3))
    single = Matroid(3, 2, [mask_of((0, 1))])
    assert tangent_cone_generators(single, [0, 1]) == []
    with pytest.raises(errors.NotABasis):
        tangent_cone_generators(single, [0, 2])


def test_hilbert_series_one_ray():
    R = cone_hilbert_series([root(2, 1, 0)])
    assert R == RationalFn(LaurentPoly.one(2), [root(2, 1, 0)])


def test_hilbert_series_simplicial_uniform_rank_one():
    n = 4
    gens = [root(n, j, 0) for j in range(1, n)]
    assert cone_hilbert_series(gens) == RationalFn(LaurentPoly.one(n), gens)


def test_hilbert_series_cone_over_square():
    gens = [root(4, j, i) for i in (0, 1) for j in (2, 3)]
    expected = RationalFn(LaurentPoly.binomial((-1, -1, 1, 1)), gens)
    assert cone_hilbert_series(gens) == expected


def test_hilbert_series_non_unimodular_cone():
    # cone in Z^2 spanned by (1,0) and (1,2): lattice points need the (1,1) shift
    R = cone_hilbert_series([(1, 0), (1, 2)])
    coeffs = series_coefficients(R, (1, 0), 4)
    expected = {(a, b): 1 for a in range(5) for b in range(2 * a + 1)}
    assert coeffs == expected


def test_hilbert_series_rejects_lines():
    with pytest.raises(errors.NotPointed):
        cone_hilbert_series([(1, 0), (-1, 0), (0, 1)])


@pytest.mark.parametrize("M", [uniform(2, 4), wheel(3), whirl(3), uniform(2, 5)],
                         ids=["U24", "W3", "whirl3", "U25"])
def test_hilbert_series_counts_each_lattice_point_once(M):
    for I in sorted(M.bases)[:4]:
        R = cone_hilbert_series(tangent_cone_generators(M, I), M.n)
        weight = tuple(-1 if I >> e & 1 else 1 for e in range(M.n))
        got = series_coefficients(R, weight, 6)
        points = {p for k in range(4) for p in tangent_cone_points(M, I, k)}
        assert set(got) == points
        assert set(got.values()) == {1}


def test_localized_class_small_cases():
    K = localized_class(uniform(1, 2))
    assert K[[0]] == LaurentPoly.one(2) and K[[1]] == LaurentPoly.one(2)
    single = Matroid(3, 2, [mask_of((0, 1))])
    f = localized_class(single)[[0, 1]]
    expected = LaurentPoly.binomial(root(3, 2, 0)) * LaurentPoly.binomial(root(3, 2, 1))
    assert f == expected
    K = localized_class(uniform(2, 4))
    assert K[[0, 1]] == lp(4, {(0, 0, 0, 0): 1, (-1, -1, 1, 1): -1})
    assert K[[2, 3]] == lp(4, {(0, 0, 0, 0): 1, (1, 1, -1, -1): -1})
    assert K[[0, 2]] == lp(4, {(0, 0, 0, 0): 1, (-1, 1, -1, 1): -1})


@pytest.mark.parametrize("M", [uniform(2, 4), uniform(3, 6), wheel(3), whirl(3),
                               direct_sum(uniform(1, 2), uniform(1, 2))],
                         ids=["U24", "U36", "W3", "whirl3", "U12+U12"])
def test_gkm_and_degree_zero(M):
    K = localized_class(M)
    assert all(f.is_degree_zero() for f in K.fI.values())
    assert check_gkm(K) == (True, None)


def test_gkm_detects_perturbation():
    K = localized_class(uniform(2, 4))
    fI = dict(K.fI)
    fI[mask_of((0, 1))] = fI[mask_of((0, 1))] + LaurentPoly.one(4)
    ok, witness = check_gkm(EquivariantClass(4, 2, fI))
    assert not ok
    assert witness["B"] in ([0], [1])


def test_relabelling_permutes_variables():
    rng = random.Random(5)
    M = whirl(3)
    K = localized_class(M)
    for _ in range(3):
        perm = list(range(M.n))
        rng.shuffle(perm)
        N = relabel(M, perm)
        KN = localized_class(N)
        for I, f in K.fI.items():
            image = mask_of(perm[e] for e in range(M.n) if I >> e & 1)
            assert KN.fI[image] == f.permute(perm)


def test_dual_generators_negate():
    M = wheel(3)
    D = dual(M)
    for I in M.bases:
        J = M.ground & ~I
        neg = sorted(tuple(-x for x in v) for v in tangent_cone_generators(M, I))
        assert sorted(tangent_cone_generators(D, J)) == neg


@pytest.mark.parametrize("M", [uniform(1, 2), uniform(1, 3), uniform(2, 4),
                               direct_sum(uniform(1, 2), uniform(1, 2))],
                         ids=["U12", "U13", "U24", "U12+U12"])
def test_brion(M):
    assert brion_check(M)


def test_valuative_trivial_and_split():
    S = regular_subdivision(TropicalPlueckerVector.zero(4, 2))
    assert check_valuative(S)[0]
    P = TropicalPlueckerVector.from_function(4, 2, lambda I: 1 if tuple(I) == (0, 1) else 0)
    S = regular_subdivision(P)
    ok, report = check_valuative(S)
    assert ok and len(report) == 6
    # at I = {1,3}: whole = pyramid + pyramid - wall
    I = mask_of((0, 2))
    whole = localized_class(uniform(2, 4))[I]
    parts = {F.matroid: localized_class(F.matroid)[I] for F in S.interior_faces}
    walls = [F.matroid for F in S.interior_faces if F.dim == 2]
    total = LaurentPoly(4)
    for m, f in parts.items():
        total = total + (f * -1 if m in walls else f)
    assert total == whole


def test_valuative_random_25():
    rng = random.Random(11)
    cache = {}
    for _ in range(5):
        S = regular_subdivision(random_tropical_minors(2, 5, rng))
        ok, report = check_valuative(S, cache=cache)
        assert ok and len(report) == 10
