"""Batch checks behind ``corpus verify`` and the acceptance tests.

Each ``criterion_*`` function returns a ``Result``; failures carry a
structured witness in ``detail``.
"""

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import errors
from .invariants import (GEngine, beta, g_from_subdivision, g_rank3, g_sanity,
                         g_uniform, tutte)
from .jsonio import (g_from_json, g_to_json, lift_from_json, lift_to_json,
                     matroid_from_json)
from .ktheory import brion_check, check_gkm, check_valuative, localized_class
from .matroid import (direct_sum, dual, elements_of, from_matrix, is_connected, mask_of,
                      parallel_ext, series_ext, two_sum, uniform, wheel,
                      whirl, whirl_matrix)
from .poly import GPolynomial
from .polytope import (TropicalPlueckerVector, check_fvector_bound,
                       interior_f_vector, is_matroidal, is_tropical_pluecker,
                       random_tropical_minors, regular_subdivision)


@dataclass
class CorpusEntry:
    name: str
    matroid: object
    expected_g: GPolynomial = None
    expected_beta: int = None
    source: str = ""


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def line(self):
        return f"criterion {self.number}: {'PASS' if self.passed else 'FAIL'} - {self.title}"

    def to_json(self):
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail}


def corpus_dir():
    return Path(str(resources.files("gmatroid") / "corpus"))


def load_corpus(root=None):
    root = Path(root) if root else corpus_dir()
    out = []
    for path in sorted((root / "matroids").glob("*.json")):
        data = json.loads(path.read_text())
        M = matroid_from_json(data)
        exp_path = root / "expected" / path.name
        g = b = None
        source = ""
        if exp_path.exists():
            exp = json.loads(exp_path.read_text())
            g = g_from_json(exp["g"]) if "g" in exp else None
            b = exp.get("beta")
            source = exp.get("source", "")
        out.append(CorpusEntry(data.get("name", path.stem), M, g, b, source))
    return out


def load_corpus_lift(name, root=None):
    root = Path(root) if root else corpus_dir()
    return lift_from_json(json.loads((root / "lifts" / f"{name}.json").read_text()))


def computable(entries, engine):
    out = []
    for e in entries:
        try:
            engine(e.matroid)
        except (errors.NotComputable, errors.CoordinateSubgrassmannian):
            continue
        out.append(e)
    return out


def split_24():
    return TropicalPlueckerVector.from_function(4, 2, lambda I: 1 if tuple(I) == (0, 1) else 0)


# -- criteria ------------------------------------------------------------

GOLDEN = [
    ("U(2,4)", lambda: uniform(2, 4), [0, 2, 1]),
    ("U(2,5)", lambda: uniform(2, 5), [0, 3, 2]),
    ("U(2,6)", lambda: uniform(2, 6), [0, 4, 3]),
    ("wheel(3)", lambda: wheel(3), [0, 2, 2, 1]),
    ("whirl(3)", lambda: whirl(3), [0, 3, 3, 1]),
    ("wheel(4)", lambda: wheel(4), [0, 3, 5, 4, 1]),
    ("whirl(4)", lambda: whirl(4), [0, 4, 6, 4, 1]),
    ("alpha-matrix, alpha=2", lambda: from_matrix(whirl_matrix(4, 2)), [0, 4, 6, 4, 1]),
]


def _pappus():
    return next(e.matroid for e in load_corpus() if e.name == "pappus")


def criterion_1(engine=None):
    engine = engine or GEngine()
    bad = {}
    rows = GOLDEN + [("Pappus", _pappus, [0, 12, 21, 10])]
    for name, build, coeffs in rows:
        got = engine(build())
        if got != GPolynomial(coeffs):
            bad[name] = {"got": repr(got), "expected": repr(GPolynomial(coeffs))}
    return Result(1, "golden g values", not bad, {"checked": len(rows), "mismatches": bad})


def criterion_2(engine=None):
    engine = engine or GEngine()
    bad = {}
    for n in range(4, 10):
        a, b = g_uniform(3, n), g_rank3(uniform(3, n))
        if a != b:
            bad[f"U(3,{n})"] = {"uniform": repr(a), "rank3": repr(b)}
    S = regular_subdivision(split_24())
    known = {F.matroid: engine(F.matroid) for F in S.interior_faces}
    solved = g_from_subdivision(S, known)
    whole = solved.get(S.support)
    if whole != GPolynomial([0, 2, 1]):
        bad["split"] = {"got": repr(whole)}
    return Result(2, "uniform closed form vs rank-3 formula and split additivity", not bad,
                  {"mismatches": bad})


def random_sp_extension(M, rng):
    e = rng.randrange(M.n)
    return (parallel_ext if rng.random() < 0.5 else series_ext)(M, e)


def criterion_3(rng=None, extensions=5, engine=None):
    rng = rng or random.Random(0)
    engine = engine or GEngine()
    entries = computable(load_corpus(), engine)
    failures = []
    for e in entries:
        M = e.matroid
        g = engine(M)
        checks = g_sanity(M, g)
        checks["dual"] = engine(dual(M)) == g
        N = M
        for k in range(extensions):
            if N.n < 16:
                N = random_sp_extension(N, rng)
            checks[f"extension_{k}"] = engine(N) == g
        if not all(checks.values()):
            failures.append({"name": e.name, "failed": [c for c, ok in checks.items() if not ok]})
    passed = not failures and len(entries) >= 15
    return Result(3, "identity suite on computable corpus matroids", passed,
                  {"matroids": len(entries), "failures": failures})


def criterion_4(rng=None, pairs=20, engine=None, max_n=7):
    rng = rng or random.Random(0)
    engine = engine or GEngine()
    pool = [e for e in computable(load_corpus(), engine)
            if e.matroid.n <= max_n and is_connected(e.matroid)]
    failures = []
    for _ in range(pairs):
        a, b = rng.choice(pool), rng.choice(pool)
        M1, M2 = a.matroid, b.matroid
        prod = engine(M1) * engine(M2)
        ok_sum = engine(direct_sum(M1, M2)) == prod
        T = two_sum(M1, rng.randrange(M1.n), M2, rng.randrange(M2.n))
        ok_two = GPolynomial([0, 1]) * engine(T) == prod
        if not (ok_sum and ok_two):
            failures.append({"pair": [a.name, b.name], "direct_sum": ok_sum, "two_sum": ok_two})
    return Result(4, "multiplicativity over direct sums and 2-sums", not failures,
                  {"pairs": pairs, "failures": failures})


SHAPES = ((2, 4), (2, 5), (2, 6), (3, 6))


def criterion_5(rng=None, trials=200):
    rng = rng or random.Random(0)
    failures = []
    equality_cases = 0
    for k in range(trials):
        d, n = SHAPES[k % len(SHAPES)]
        P = random_tropical_minors(d, n, rng)
        witness = {"lift": lift_to_json(P)}
        try:
            S = regular_subdivision(P)
            if not is_matroidal(S)[0]:
                failures.append(dict(witness, reason="not matroidal"))
                continue
            interior_f_vector(S)
            report = check_fvector_bound(S)
        except (errors.VolumeCertificateFailure, errors.DimComponentMismatch) as exc:
            failures.append(dict(witness, reason=str(exc)))
            continue
        if not report["satisfied"]:
            failures.append(dict(witness, reason="bound violated", rows=report["rows"]))
        elif report["all_series_parallel"]:
            equality_cases += 1
            if not report["equality"]:
                failures.append(dict(witness, reason="no equality", rows=report["rows"]))
    return Result(5, "random regular subdivisions: matroidal, volumes, f-vector bound", not failures,
                  {"trials": trials, "all_series_parallel": equality_cases, "failures": failures})


def criterion_6(engine=None):
    engine = engine or GEngine()
    M = _pappus()
    P = TropicalPlueckerVector.indicator(M)
    ok_tp = is_tropical_pluecker(P)[0]
    S = regular_subdivision(P)
    walls = len(S.interior_of_codim(2))
    known = {F.matroid: engine(F.matroid) for F in S.interior_faces if F.matroid != M}
    known[S.support] = g_uniform(3, 9)
    g = g_from_subdivision(S, known).get(M)
    detail = {"tropical_pluecker": ok_tp, "facets": len(S.facets), "walls": walls,
              "g": repr(g)}
    passed = ok_tp and len(S.facets) == 10 and walls == 9 and g == GPolynomial([0, 12, 21, 10])
    return Result(6, "Pappus end to end", passed, detail)


def criterion_7(max_n=6, brion_vertices=6):
    failures = []
    brion = []
    checked = 0
    for e in load_corpus():
        M = e.matroid
        if M.n > max_n:
            continue
        checked += 1
        try:
            K = localized_class(M)
        except errors.NotLaurent as exc:
            failures.append({"name": e.name, "reason": str(exc)})
            continue
        if not all(f.is_degree_zero() for f in K.fI.values()):
            failures.append({"name": e.name, "reason": "not degree zero"})
        ok, witness = check_gkm(K)
        if not ok:
            failures.append({"name": e.name, "reason": "GKM", "witness": witness})
        if len(M.bases) <= brion_vertices:
            brion.append((e.name, brion_check(M)))
    K = localized_class(uniform(2, 4))
    f12 = K[mask_of([0, 1])]
    f12_ok = f12.terms == {(0, 0, 0, 0): 1, (-1, -1, 1, 1): -1}
    brion_ok = len(brion) >= 5 and all(ok for _, ok in brion)
    detail = {"matroids": checked, "failures": failures, "f12": repr(f12),
              "brion": {name: ok for name, ok in brion}}
    return Result(7, "K-theory: Laurent, degree zero, GKM, Brion", not failures and f12_ok and brion_ok,
                  detail)


def criterion_8(rng=None, trials=50):
    rng = rng or random.Random(0)
    cache = {}
    failures = []
    shapes = ((2, 4), (2, 5), (3, 5))
    cases = [("split", split_24())]
    for k in range(trials):
        d, n = shapes[k % len(shapes)]
        cases.append((f"random_{k}", random_tropical_minors(d, n, rng)))
    for name, P in cases:
        S = regular_subdivision(P)
        ok, report = check_valuative(S, cache=cache)
        if not ok:
            failures.append({"case": name, "lift": lift_to_json(P),
                             "bad_fixed_points": [[e + 1 for e in elements_of(I)]
                                                  for I, good in report.items() if not good]})
    return Result(8, "valuativity of the localized class", not failures,
                  {"subdivisions": len(cases), "failures": failures})


def criterion_9():
    failures = []
    entries = load_corpus()
    for e in entries:
        M = e.matroid
        b = beta(M)
        if b != tutte(M)[(1, 0)]:
            failures.append({"name": e.name, "beta": b, "tutte_x": tutte(M)[(1, 0)]})
        if is_connected(M) and M.n >= 2 and b <= 0:
            failures.append({"name": e.name, "beta": b, "reason": "connected but beta <= 0"})
    return Result(9, "beta recurrence vs Tutte coefficient", not failures,
                  {"matroids": len(entries), "failures": failures})


def check_corpus(entries=None, engine=None):
    """Compare stored expected values with computed ones; returns failing names."""
    engine = engine or GEngine()
    entries = load_corpus() if entries is None else entries
    failures = []
    for e in entries:
        if e.expected_g is not None and engine(e.matroid) != e.expected_g:
            failures.append({"name": e.name, "field": "g", "expected": g_to_json(e.expected_g),
                             "got": g_to_json(engine(e.matroid))})
        if e.expected_beta is not None and beta(e.matroid) != e.expected_beta:
            failures.append({"name": e.name, "field": "beta", "expected": e.expected_beta,
                             "got": beta(e.matroid)})
    return failures


CRITERIA = {
    1: lambda rng, engine: criterion_1(engine),
    2: lambda rng, engine: criterion_2(engine),
    3: lambda rng, engine: criterion_3(rng, engine=engine),
    4: lambda rng, engine: criterion_4(rng, engine=engine),
    5: lambda rng, engine: criterion_5(rng),
    6: lambda rng, engine: criterion_6(engine),
    7: lambda rng, engine: criterion_7(),
    8: lambda rng, engine: criterion_8(rng),
    9: lambda rng, engine: criterion_9(),
}


def run_all(seed=0, only=None, root=None):
    engine = GEngine()
    results = []
    for k, fn in CRITERIA.items():
        if only and k not in only:
            continue
        results.append(fn(random.Random(seed * 1000 + k), engine))
    entries = load_corpus(root)
    corpus_failures = check_corpus(entries, engine)
    return {
        "seed": seed,
        "criteria": [r.to_json() for r in results],
        "corpus": {"entries": len(entries), "failures": corpus_failures},
        "passed": all(r.passed for r in results) and not corpus_failures,
    }
