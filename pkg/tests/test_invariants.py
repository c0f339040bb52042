import pytest

from gmatroid import errors
from gmatroid.invariants import (GEngine, beta, g_from_subdivision, g_invariant, g_rank3,
                                 g_sanity, g_uniform, g_wheel, g_whirl, is_series_parallel,
                                 rank2_flats, reduce_series_parallel, tutte)
from gmatroid.matroid import (direct_sum, dual, from_bases, parallel_ext, series_ext,
                              two_sum, uniform, wheel, whirl)
from gmatroid.poly import GPolynomial, TuttePolynomial
from gmatroid.polytope import TropicalPlueckerVector, regular_subdivision
from gmatroid.verify import load_corpus
from oracles import crapo_beta, tutte_by_rank

t = GPolynomial([0, 1])
SMALL = [e for e in load_corpus() if e.matroid.n <= 8]


def g(*coeffs):
    return GPolynomial([0, *coeffs])


@pytest.mark.parametrize("entry", SMALL, ids=lambda e: e.name)
def test_tutte_matches_rank_generating_function(entry):
    assert tutte(entry.matroid) == tutte_by_rank(entry.matroid)


@pytest.mark.parametrize("entry", SMALL, ids=lambda e: e.name)
def test_beta_matches_alternating_rank_sum(entry):
    assert beta(entry.matroid) == crapo_beta(entry.matroid)


def test_small_tutte_values():
    assert tutte(uniform(1, 2)) == TuttePolynomial({(1, 0): 1, (0, 1): 1})
    T = tutte(uniform(2, 4))
    assert T == TuttePolynomial({(2, 0): 1, (1, 0): 2, (0, 2): 1, (0, 1): 2})
    assert T(1, 1) == 6
    assert tutte(dual(wheel(3))) == tutte(wheel(3)).swap()


def test_beta_small_ground_set():
    with pytest.raises(errors.GroundSetTooSmall):
        beta(uniform(1, 1))
    assert beta(direct_sum(uniform(1, 2), uniform(1, 2))) == 0


def test_series_parallel_recognition():
    M = series_ext(parallel_ext(uniform(1, 2), 0), 1)
    assert is_series_parallel(M)
    R = reduce_series_parallel(M)
    assert R == uniform(1, 2)
    assert not is_series_parallel(uniform(2, 4))
    assert not is_series_parallel(direct_sum(uniform(1, 2), uniform(1, 2)))


@pytest.mark.parametrize("d, n, expected", [
    (1, 2, g(1)),
    (2, 4, g(2, 1)),
    (2, 5, g(3, 2)),
    (2, 6, g(4, 3)),
    (3, 6, g(6, 6, 1)),
    (3, 9, g(21, 30, 10)),
])
def test_uniform_closed_form(d, n, expected):
    assert g_uniform(d, n) == expected


def test_uniform_precondition():
    with pytest.raises(errors.PreconditionViolated):
        g_uniform(3, 3)


def test_wheel_whirl_closed_forms():
    assert g_wheel(3) == g(2, 2, 1)
    assert g_whirl(3) == g(3, 3, 1)
    assert g_wheel(4) == g(3, 5, 4, 1)
    assert g_whirl(4) == g(4, 6, 4, 1)


def test_rank3_formula_and_flats():
    for n in range(4, 10):
        assert g_rank3(uniform(3, n)) == g_uniform(3, n)
    assert len(rank2_flats(uniform(3, 5))) == 10
    with pytest.raises(errors.PreconditionViolated):
        g_rank3(parallel_ext(uniform(3, 4), 0))


@pytest.mark.parametrize("build", [lambda: wheel(3), lambda: whirl(3), lambda: wheel(4),
                                   lambda: whirl(4)])
def test_subdivision_engine_reproduces_closed_forms(build):
    M = build()
    closed = GEngine()(M)
    engine = GEngine(closed_forms=("uniform",))
    assert engine(M) == closed
    assert engine.trace[M] == "subdivision"


def test_subdivision_engine_reproduces_pappus():
    pappus = next(e.matroid for e in load_corpus() if e.name == "pappus")
    engine = GEngine(closed_forms=("uniform",))
    assert engine(pappus) == g(12, 21, 10)


def test_subdivision_engine_agrees_on_rank3_corpus():
    for e in load_corpus():
        if e.matroid.rank == 3 and e.matroid.n <= 7:
            assert GEngine(closed_forms=("uniform", "wheel"))(e.matroid) == GEngine()(e.matroid)


def test_engine_rules():
    E = GEngine()
    U = uniform(2, 4)
    assert E(direct_sum(U, uniform(1, 2))) == g(2, 1) * t
    assert E.trace[direct_sum(U, uniform(1, 2))] == "direct sum"
    T = two_sum(U, 0, U, 0)
    assert E(T) == g(4, 4, 1)
    assert E.trace[T] == "2-sum"
    P = parallel_ext(U, 1)
    assert E(P) == E(U)


def test_engine_rejects_loops_and_coloops():
    with pytest.raises(errors.CoordinateSubgrassmannian):
        g_invariant(direct_sum(uniform(2, 4), uniform(0, 1)))
    with pytest.raises(errors.CoordinateSubgrassmannian):
        g_invariant(direct_sum(uniform(2, 4), uniform(1, 1)))


def test_engine_without_fallback():
    # a rank-4 matroid on 8 elements with no closed form
    M = from_bases(8, 4, [b for b in uniform(4, 8).basis_sets() if list(b) != [0, 1, 2, 3]
                          and list(b) != [4, 5, 6, 7]])
    with pytest.raises(errors.NotComputable):
        GEngine(use_subdivision=False)(M)
    # two relaxed circuit-hyperplanes: two series-parallel pyramids and two walls removed
    assert GEngine()(M) == g_uniform(4, 8) - GPolynomial([0, 2, 2])


def test_g_from_subdivision_split():
    P = TropicalPlueckerVector.from_function(4, 2, lambda I: 1 if tuple(I) == (0, 1) else 0)
    S = regular_subdivision(P)
    faces = {F.matroid: GEngine()(F.matroid) for F in S.interior_faces}
    assert sorted(map(repr, faces.values())) == ["t", "t", "t^2"]
    assert g_from_subdivision(S, faces) == {S.support: g(2, 1)}
    # solve for one pyramid instead
    pyramid = S.facets[0].matroid
    known = {S.support: g(2, 1)}
    known.update({m: v for m, v in faces.items() if m != pyramid})
    assert g_from_subdivision(S, known) == {pyramid: t}


def test_g_from_subdivision_errors():
    P = TropicalPlueckerVector.from_function(4, 2, lambda I: 1 if tuple(I) == (0, 1) else 0)
    S = regular_subdivision(P)
    with pytest.raises(errors.TooManyUnknowns):
        g_from_subdivision(S, {})
    faces = {F.matroid: t for F in S.interior_faces}
    wall = next(F.matroid for F in S.interior_faces if F.dim == 2)
    faces[S.support] = t
    del faces[wall]
    with pytest.raises(errors.InconsistentSum):
        g_from_subdivision(S, faces)


def test_sanity_checks_flag_wrong_values():
    M = uniform(2, 4)
    assert all(g_sanity(M, g(2, 1)).values())
    bad = g_sanity(M, g(3, 1))
    assert not bad["linear_coefficient_is_beta"]
    assert not bad["value_at_minus_one"]


class TestGPolynomial:
    def test_arithmetic(self):
        a = GPolynomial([0, 2, 1])
        assert a * t == GPolynomial([0, 0, 2, 1])
        assert (a * t).divide_by_t() == a
        assert a(-1) == -1
        assert (GPolynomial([1, 1]) ** 3)[2] == 3
        assert repr(a) == "2t + t^2"
        assert repr(GPolynomial()) == "0"

    def test_divide_requires_t(self):
        with pytest.raises(ArithmeticError):
            GPolynomial([1, 1]).divide_by_t()
