import json
from fractions import Fraction

import pytest

from gmatroid import errors
from gmatroid.jsonio import (class_from_json, class_to_json, dumps, g_from_json, g_to_json,
                             lift_from_json, lift_to_json, load, matroid_from_json,
                             matroid_to_json, parse_rational, rational_str, tutte_from_json,
                             tutte_to_json)
from gmatroid.invariants import tutte
from gmatroid.ktheory import localized_class
from gmatroid.matroid import uniform, wheel, whirl
from gmatroid.poly import GPolynomial
from gmatroid.polytope import TropicalPlueckerVector


def test_rationals():
    assert rational_str(Fraction(6, 4)) == "3/2"
    assert rational_str(Fraction(-4, 2)) == "-2"
    assert parse_rational("-3/6") == Fraction(-1, 2)
    for bad in ("1/0", "x", 1.5, True, None):
        with pytest.raises(errors.InvalidInput):
            parse_rational(bad)


def test_matroid_round_trip_is_one_indexed():
    data = matroid_to_json(uniform(1, 2))
    assert data == {"n": 2, "rank": 1, "bases": [[1], [2]]}
    for M in (wheel(3), whirl(4)):
        assert matroid_from_json(json.loads(dumps(matroid_to_json(M)))) == M


def test_matrix_and_graph_forms():
    M = matroid_from_json({"matrix": {"field": "Q", "rows": [["1", "0", "1"], ["0", "1", "1/2"]]}})
    assert M == uniform(2, 3)
    M = matroid_from_json({"matrix": {"field": "GF(2)",
                                      "rows": [["1", "0", "1"], ["0", "1", "1"]]}})
    assert M == uniform(2, 3)
    G = matroid_from_json({"graph": {"vertices": [1, 2, 3],
                                     "edges": [[1, 2], [2, 3], [1, 3]]}})
    assert G == uniform(2, 3)


@pytest.mark.parametrize("data", [
    {"n": 3, "rank": 1},
    {"n": 3, "rank": 1, "bases": [[0]]},
    {"n": 3, "rank": 1, "bases": [[4]]},
    {"n": "3", "rank": 1, "bases": [[1]]},
    {"matrix": {"field": "GF(q)", "rows": [["1"]]}},
    {"matrix": {"field": "R", "rows": [["1"]]}},
    {"matrix": {"field": "Q", "rows": [["1", "2"], ["1"]]}},
    {"graph": {"vertices": [1, 2], "edges": [[1, 3]]}},
])
def test_malformed_matroids(data):
    with pytest.raises(errors.MatroidError):
        matroid_from_json(data)


def test_exchange_witness_is_one_indexed():
    with pytest.raises(errors.ExchangeAxiomViolation) as info:
        matroid_from_json({"n": 4, "rank": 2, "bases": [[1, 2], [3, 4]]})
    assert info.value.i == 1 and sorted(info.value.b1) == [1, 2]


def test_lift_round_trip_and_defaults():
    P = TropicalPlueckerVector.from_function(4, 2, lambda I: Fraction(sum(I), 3))
    assert lift_from_json(lift_to_json(P)) == P
    Q = lift_from_json({"n": 4, "d": 2, "values": [{"I": [1, 2], "p": "1"}]})
    assert Q[(0, 1)] == 1 and Q[(2, 3)] == 0
    with pytest.raises(errors.InvalidInput):
        lift_from_json({"n": 4, "d": 2, "values": [{"I": [1], "p": "1"}]})


def test_polynomial_round_trips():
    g = GPolynomial([0, 12, 21, 10])
    assert g_to_json(g) == {"t": [["1", 12], ["2", 21], ["3", 10]]}
    assert g_from_json(g_to_json(g)) == g
    T = tutte(wheel(3))
    assert tutte_from_json(json.loads(dumps(tutte_to_json(T)))) == T


def test_class_round_trip():
    K = localized_class(uniform(2, 4))
    data = class_to_json(K)
    assert data["fI"][0] == {"I": [1, 2], "terms": [{"exp": [-1, -1, 1, 1], "c": "-1"},
                                                    {"exp": [0, 0, 0, 0], "c": "1"}]}
    back = class_from_json(json.loads(dumps(data)))
    assert back.fI == K.fI


def test_dumps_is_deterministic():
    a = dumps({"b": 1, "a": [2, 1]})
    assert a == '{"a":[2,1],"b":1}'


def test_load_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 3,\n "rank": }')
    with pytest.raises(errors.InvalidInput, match="line 2 column"):
        load(p)
