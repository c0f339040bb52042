"""Command-line interface.

Exit codes: 0 success, 1 a check failed (the witness is in the output),
2 usage or input error.
"""

import argparse
import json
import sys

from . import errors
from .invariants import GEngine, beta, g_from_subdivision, is_series_parallel, tutte
from .jsonio import (class_to_json, dumps, g_to_json, load,
                     load_lift, matroid_from_json, matroid_to_json, tutte_to_json)
from .ktheory import check_gkm, check_valuative, localized_class
from .matroid import (check_exchange, coloops, components, contract, delete,
                      direct_sum, dual, elements_of, loops,
                      parallel_ext, series_ext, two_sum)
from .polytope import (check_fvector_bound, interior_f_vector, is_matroidal,
                       is_tropical_pluecker, regular_subdivision)


class Outcome:
    def __init__(self, payload, text=None, code=0):
        self.payload = payload
        self.text = text
        self.code = code


def _one_based(elems):
    return [e + 1 for e in elems]


def _element(M, e):
    """1-indexed CLI element to 0-indexed, with a range check."""
    if not 1 <= e <= M.n:
        raise errors.InvalidInput(f"element {e} outside 1..{M.n}")
    return e - 1


def _matroid(args, path):
    M = matroid_from_json(load(path))
    if M.n > args.max_n:
        raise errors.GroundSetTooLarge(f"n = {M.n} exceeds --max-n {args.max_n}")
    return M


def _lift(args, path):
    P = load_lift(path)
    if P.n > args.max_n:
        raise errors.GroundSetTooLarge(f"n = {P.n} exceeds --max-n {args.max_n}")
    return P


def _matroid_outcome(M):
    data = matroid_to_json(M)
    return Outcome(data, f"matroid of rank {M.rank} on {M.n} elements with {len(M.bases)} bases")


# -- handlers ------------------------------------------------------------

def cmd_check(args):
    data = load(args.matroid)
    M = matroid_from_json(data, validate=False)
    bad = check_exchange(M.n, M.bases)
    if bad is not None:
        b1, b2, i = bad
        witness = {"B1": _one_based(elements_of(b1)), "B2": _one_based(elements_of(b2)), "i": i + 1}
        return Outcome({"valid": False, "witness": witness},
                       f"exchange axiom fails for B1={witness['B1']}, B2={witness['B2']}, i={i + 1}", 1)
    comps = components(M)
    out = {
        "valid": True,
        "n": M.n,
        "rank": M.rank,
        "bases": len(M.bases),
        "loops": _one_based(loops(M)),
        "coloops": _one_based(coloops(M)),
        "components": [_one_based(b) for b in comps.blocks],
    }
    text = (f"valid matroid: rank {M.rank}, {M.n} elements, {len(M.bases)} bases, "
            f"{len(comps)} component(s)")
    return Outcome(out, text)


def cmd_dual(args):
    return _matroid_outcome(dual(_matroid(args, args.matroid)))


def cmd_delete(args):
    M = _matroid(args, args.matroid)
    return _matroid_outcome(delete(M, _element(M, args.element)))


def cmd_contract(args):
    M = _matroid(args, args.matroid)
    return _matroid_outcome(contract(M, _element(M, args.element)))


def cmd_dsum(args):
    return _matroid_outcome(direct_sum(_matroid(args, args.first), _matroid(args, args.second)))


def cmd_twosum(args):
    M1, M2 = _matroid(args, args.first), _matroid(args, args.second)
    return _matroid_outcome(two_sum(M1, _element(M1, args.e1), M2, _element(M2, args.e2)))


def cmd_sext(args):
    M = _matroid(args, args.matroid)
    return _matroid_outcome(series_ext(M, _element(M, args.element)))


def cmd_pext(args):
    M = _matroid(args, args.matroid)
    return _matroid_outcome(parallel_ext(M, _element(M, args.element)))


def cmd_tutte(args):
    T = tutte(_matroid(args, args.matroid))
    return Outcome({"tutte": tutte_to_json(T)}, repr(T))


def cmd_beta(args):
    b = beta(_matroid(args, args.matroid))
    return Outcome({"beta": b}, str(b))


def cmd_g(args):
    g = GEngine()(_matroid(args, args.matroid))
    return Outcome({"g": g_to_json(g)}, repr(g))


def cmd_tplv(args):
    P = _lift(args, args.lift)
    ok, witness = is_tropical_pluecker(P)
    out = {"tropical_pluecker": ok}
    if not ok:
        S, i, j, k, l, sums = witness
        out["witness"] = {"S": _one_based(S), "ijkl": _one_based([i, j, k, l]),
                          "sums": [str(s) for s in sums]}
    return Outcome(out, "tropical Pluecker" if ok else f"three-term relation fails: {out['witness']}",
                   0 if ok else 1)


def _cell_json(C):
    out = {"dim": C.dim, "vertices": len(C.vertices), "matroidal": C.matroidal}
    if C.matroidal:
        out["components"] = len(components(C.matroid))
    return out


def cmd_subdivide(args):
    P = _lift(args, args.lift)
    S = regular_subdivision(P)
    out = {
        "facets": [_cell_json(F) for F in S.facets],
        "interior_faces": len(S.interior_faces),
        "volumes": S.volumes,
    }
    lines = [f"{len(S.facets)} facets, {len(S.interior_faces)} interior faces, "
             f"volumes {S.volumes}"]
    code = 0
    ok, bad = is_matroidal(S)
    out["matroidal"] = ok
    if (args.fvector or args.verify_bound or args.solve_g) and not ok:
        out["witness"] = {"non_matroidal_cell": [_one_based(elements_of(v)) for v in bad.vertices]}
        return Outcome(out, "subdivision is not matroidal", 1)
    if args.fvector:
        f = interior_f_vector(S)
        out["f_vector"] = {str(c): v for c, v in f.items()}
        lines.append("f-vector by codimension: " + ", ".join(f"f_{c}={v}" for c, v in f.items()))
    if args.verify_bound:
        report = check_fvector_bound(S, is_series_parallel)
        out["bound"] = {
            "f": [r["f"] for r in report["rows"]],
            "bounds": [r["bound"] for r in report["rows"]],
            "satisfied": report["satisfied"],
            "equality": report["equality"],
            "allSP": report["all_series_parallel"],
        }
        lines.append(f"f = {out['bound']['f']}, bounds = {out['bound']['bounds']}, "
                     f"equality = {report['equality']}, all series-parallel = "
                     f"{report['all_series_parallel']}")
        if not report["satisfied"] or (report["all_series_parallel"] and not report["equality"]):
            code = 1
    if args.solve_g:
        out["solve_g"], text, ok_g = _solve_g(S)
        lines.append(text)
        if not ok_g:
            code = 1
    return Outcome(out, "\n".join(lines), code)


def _solve_g(S):
    """Use closed forms on as many faces as possible and solve for the rest."""
    engine = GEngine(use_subdivision=False)
    known = {}
    for M in [S.support] + [F.matroid for F in S.interior_faces]:
        try:
            known[M] = engine(M)
        except errors.NotComputable:
            pass
    total = None
    for F in S.interior_faces:
        if F.matroid in known:
            total = known[F.matroid] if total is None else total + known[F.matroid]
    unknown = [F.matroid for F in S.interior_faces if F.matroid not in known]
    if S.support in known and not unknown:
        ok = total == known[S.support]
        return ({"consistent": ok, "g": g_to_json(total)},
                f"sum over interior faces {total}, whole polytope {known[S.support]}", ok)
    try:
        solved = g_from_subdivision(S, known)
    except (errors.TooManyUnknowns, errors.InconsistentSum) as exc:
        return {"error": type(exc).__name__, "message": str(exc)}, str(exc), False
    ((M, g),) = solved.items()
    return ({"solved": {"matroid": matroid_to_json(M), "g": g_to_json(g)}},
            f"solved g = {g} for a face with {len(M.bases)} bases", True)


def cmd_kclass(args):
    M = _matroid(args, args.matroid)
    K = localized_class(M)
    out = {"class": class_to_json(K)}
    lines = [f"f_{_one_based(elements_of(I))} = {f}" for I, f in sorted(K.fI.items(), key=lambda t: elements_of(t[0]))]
    code = 0
    if args.verify_gkm:
        ok, witness = check_gkm(K)
        out["gkm"] = ok
        if not ok:
            out["witness"] = {"B": _one_based(witness["B"]), "i": witness["i"] + 1,
                              "j": witness["j"] + 1}
            code = 1
        lines.append(f"GKM congruences hold: {ok}")
    return Outcome(out, "\n".join(lines), code)


def cmd_valuative(args):
    P = _lift(args, args.lift)
    S = regular_subdivision(P)
    if not is_matroidal(S)[0]:
        return Outcome({"matroidal": False}, "subdivision is not matroidal", 1)
    ok, report = check_valuative(S)
    rows = sorted(({"I": _one_based(elements_of(I)), "holds": good} for I, good in report.items()),
                  key=lambda r: r["I"])
    out = {"valuative": ok, "fixed_points": rows}
    text = f"valuative at {sum(r['holds'] for r in rows)} of {len(rows)} fixed points"
    return Outcome(out, text, 0 if ok else 1)


def cmd_corpus(args):
    from .verify import run_all

    only = None
    if args.criteria:
        try:
            only = {int(c) for c in args.criteria.split(",")}
        except ValueError:
            raise errors.InvalidInput(f"bad --criteria {args.criteria!r}") from None
    report = run_all(seed=args.seed, only=only, root=args.corpus)
    lines = [f"criterion {r['criterion']}: {'PASS' if r['passed'] else 'FAIL'} - {r['title']}"
             for r in report["criteria"]]
    failures = report["corpus"]["failures"]
    lines.append(f"corpus: {report['corpus']['entries']} entries, {len(failures)} mismatch(es)"
                 + "".join(f"\n  {f['name']}: {f['field']}" for f in failures))
    return Outcome(report, "\n".join(lines), 0 if report["passed"] else 1)


# -- parser --------------------------------------------------------------

def _common(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "text"), default=default("json"))
    parser.add_argument("--seed", type=int, default=default(0),
                        help="seed for randomized drivers")
    parser.add_argument("--max-n", type=int, default=default(16),
                        help="refuse ground sets larger than this")


def build_parser():
    parser = argparse.ArgumentParser(prog="gmatroid",
                                     description="Matroid g-invariants, subdivisions and K-classes.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *positional):
        p = sub.add_parser(name, help=help_text)
        for arg, kind in positional:
            p.add_argument(arg, type=kind)
        _common(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    add("check", cmd_check, "validate a matroid file", ("matroid", str))
    add("dual", cmd_dual, "dual matroid", ("matroid", str))
    add("delete", cmd_delete, "delete an element (1-indexed)", ("matroid", str), ("element", int))
    add("contract", cmd_contract, "contract an element (1-indexed)", ("matroid", str), ("element", int))
    add("dsum", cmd_dsum, "direct sum", ("first", str), ("second", str))
    add("twosum", cmd_twosum, "2-sum along terminals e1 and e2",
        ("first", str), ("e1", int), ("second", str), ("e2", int))
    add("sext", cmd_sext, "series extension at an element", ("matroid", str), ("element", int))
    add("pext", cmd_pext, "parallel extension at an element", ("matroid", str), ("element", int))
    add("tutte", cmd_tutte, "Tutte polynomial", ("matroid", str))
    add("beta", cmd_beta, "beta invariant", ("matroid", str))
    add("g", cmd_g, "g-invariant", ("matroid", str))

    tp = sub.add_parser("tplv", help="tropical Pluecker vector tools")
    tps = tp.add_subparsers(dest="action", required=True)
    chk = tps.add_parser("check", help="check the three-term relations")
    chk.add_argument("lift")
    _common(chk, suppress=True)
    chk.set_defaults(func=cmd_tplv)
    _common(tp, suppress=True)

    p = add("subdivide", cmd_subdivide, "regular subdivision of a lift", ("lift", str))
    p.add_argument("--fvector", action="store_true", help="interior f-vector by codimension")
    p.add_argument("--verify-bound", action="store_true", help="compare with the f-vector bound")
    p.add_argument("--solve-g", action="store_true", help="use additivity of g over the faces")

    p = add("kclass", cmd_kclass, "localized equivariant K-class", ("matroid", str))
    p.add_argument("--verify-gkm", action="store_true")

    add("valuative", cmd_valuative, "check valuativity of the K-class on a lift", ("lift", str))

    cp = sub.add_parser("corpus", help="golden corpus")
    cps = cp.add_subparsers(dest="action", required=True)
    ver = cps.add_parser("verify", help="run every acceptance criterion and corpus check")
    ver.add_argument("--criteria", help="comma-separated subset, e.g. 1,2,9")
    ver.add_argument("--corpus", help="alternative corpus directory")
    _common(ver, suppress=True)
    ver.set_defaults(func=cmd_corpus)
    _common(cp, suppress=True)
    return parser


def _emit(args, outcome, stream):
    if args.format == "text" and outcome.text is not None:
        stream.write(outcome.text + "\n")
    else:
        stream.write(dumps(outcome.payload) + "\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.func(args)
    except (errors.MatroidError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if args.format == "text":
            sys.stderr.write(f"error: {exc}\n")
        else:
            sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 2
    _emit(args, outcome, sys.stdout)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
