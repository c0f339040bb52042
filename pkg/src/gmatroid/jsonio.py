"""JSON encodings. Ground sets are 1-indexed in files, rationals are strings."""

import json
from fractions import Fraction

from . import errors
from .ktheory import EquivariantClass, LaurentPoly
from .matroid import (check_exchange, elements_of, from_bases, from_graph, from_matrix,
                      mask_of)
from .poly import GPolynomial, TuttePolynomial
from .polytope import TropicalPlueckerVector


def rational_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise errors.InvalidInput(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise errors.InvalidInput(f"bad rational {s!r}: {exc}") from None


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _subset(values, n, what="subset"):
    if not isinstance(values, list):
        raise errors.InvalidInput(f"{what} must be a list")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
            raise errors.InvalidInput(f"element {v!r} of {what} outside 1..{n}")
        out.append(v - 1)
    if len(set(out)) != len(out):
        raise errors.InvalidInput(f"repeated element in {what} {values}")
    return out


def _get(data, key, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise errors.InvalidInput(f"missing field {key!r}")
    v = data[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise errors.InvalidInput(f"field {key!r} must be an integer")
    return v


# -- matroids ------------------------------------------------------------

def matroid_to_json(M):
    return {"n": M.n, "rank": M.rank, "bases": [[e + 1 for e in B] for B in M.basis_sets()]}


def matroid_from_json(data, validate=True):
    """Accepts the basis form, or ``{"matrix": ...}`` / ``{"graph": ...}`` wrappers."""
    if isinstance(data, dict) and "matrix" in data:
        return matrix_from_json(data["matrix"])
    if isinstance(data, dict) and "graph" in data:
        return graph_from_json(data["graph"])
    n, d = _get(data, "n", int), _get(data, "rank", int)
    bases = [_subset(B, n, "basis") for B in _get(data, "bases")]
    M = from_bases(n, d, bases, validate=False)
    if validate:
        bad = check_exchange(M.n, M.bases)
        if bad is not None:
            b1, b2, i = bad
            raise errors.ExchangeAxiomViolation(
                [e + 1 for e in elements_of(b1)], [e + 1 for e in elements_of(b2)], i + 1)
    return M


def matrix_from_json(data):
    field = _get(data, "field")
    rows = _get(data, "rows")
    if field == "Q":
        p = None
    elif isinstance(field, str) and field.startswith("GF(") and field.endswith(")"):
        try:
            p = int(field[3:-1])
        except ValueError:
            raise errors.InvalidInput(f"bad field {field!r}") from None
    else:
        raise errors.InvalidInput(f"unknown field {field!r}")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise errors.InvalidInput("rows must be a list of lists")
    if len({len(r) for r in rows}) > 1:
        raise errors.InvalidInput("rows have different lengths")
    return from_matrix([[parse_rational(x) for x in r] for r in rows], p)


def graph_from_json(data):
    edges = _get(data, "edges")
    vertices = data.get("vertices")
    if vertices is not None:
        known = set(vertices)
        for e in edges:
            if any(v not in known for v in e):
                raise errors.InvalidInput(f"edge {e} uses an unknown vertex")
    if not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise errors.InvalidInput("edges must be pairs")
    return from_graph(edges)


# -- lifts ---------------------------------------------------------------

def lift_to_json(P):
    values = [{"I": [e + 1 for e in elements_of(m)], "p": rational_str(v)}
              for m, v in P.values.items()]
    values.sort(key=lambda r: r["I"])
    return {"n": P.n, "d": P.d, "values": values}


def lift_from_json(data):
    """Values not listed default to 0, so a lift file may list only the nonzero heights."""
    n, d = _get(data, "n", int), _get(data, "d", int)
    if not 1 <= d <= n:
        raise errors.InvalidInput(f"need 1 <= d <= n, got d={d}, n={n}")
    if n > 16:
        raise errors.GroundSetTooLarge(f"ground set size {n} exceeds 16")
    base = TropicalPlueckerVector.zero(n, d).values
    for row in _get(data, "values"):
        I = _subset(_get(row, "I"), n, "I")
        if len(I) != d:
            raise errors.InvalidInput(f"subset {row['I']} does not have {d} elements")
        base[mask_of(I)] = parse_rational(_get(row, "p"))
    return TropicalPlueckerVector(n, d, base)


# -- polynomials and classes ---------------------------------------------

def g_to_json(g):
    return {"t": [[str(i), c] for i, c in sorted(g.terms().items())]}


def g_from_json(data):
    terms = {}
    for power, c in _get(data, "t"):
        terms[int(power)] = int(c)
    return GPolynomial.from_dict(terms)


def tutte_to_json(T):
    return {"xy": [[[i, j], c] for (i, j), c in sorted(T.coeffs.items())]}


def tutte_from_json(data):
    return TuttePolynomial({(int(i), int(j)): int(c) for (i, j), c in _get(data, "xy")})


def laurent_to_json(f):
    return [{"exp": list(a), "c": rational_str(c)} for a, c in f.sorted_terms()]


def laurent_from_json(terms, n):
    out = {}
    for t in terms:
        exp = _get(t, "exp")
        if len(exp) != n:
            raise errors.InvalidInput(f"exponent {exp} has length {len(exp)}, expected {n}")
        out[tuple(int(x) for x in exp)] = parse_rational(_get(t, "c"))
    return LaurentPoly(n, out)


def class_to_json(K):
    rows = [{"I": [e + 1 for e in elements_of(I)], "terms": laurent_to_json(f)}
            for I, f in K.fI.items() if f]
    rows.sort(key=lambda r: r["I"])
    return {"n": K.n, "d": K.d, "fI": rows}


def class_from_json(data):
    n, d = _get(data, "n", int), _get(data, "d", int)
    fI = {}
    for row in _get(data, "fI"):
        I = _subset(_get(row, "I"), n, "I")
        if len(I) != d:
            raise errors.InvalidInput(f"subset {row['I']} does not have {d} elements")
        fI[mask_of(I)] = laurent_from_json(_get(row, "terms"), n)
    return EquivariantClass(n, d, fI)


def load(path):
    """Parse a JSON file; syntax errors become InvalidInput with the position."""
    with open(path) as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.InvalidInput(
            f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_matroid(path):
    return matroid_from_json(load(path))


def load_lift(path):
    return lift_from_json(load(path))
