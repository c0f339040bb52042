"""Acceptance criteria 1-9.

Each test records a one-line PASS/FAIL verdict; the lines are printed in the
pytest terminal summary (see conftest.py) and also when this file is run
directly with ``python tests/test_acceptance.py``.
"""

import json
import random
import sys
import time

import pytest

from gmatroid.invariants import GEngine
from gmatroid.verify import CRITERIA

VERDICTS = {}
ENGINE = GEngine()


def _run(k):
    start = time.perf_counter()
    result = CRITERIA[k](random.Random(k), ENGINE)
    elapsed = time.perf_counter() - start
    VERDICTS[k] = f"{result.line()} ({elapsed:.1f}s)"
    return result, elapsed


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    result, elapsed = _run(k)
    assert result.passed, json.dumps(result.detail, default=str)[:2000]
    if k == 6:
        assert elapsed < 300


if __name__ == "__main__":
    ok = True
    for k in sorted(CRITERIA):
        result, _ = _run(k)
        print(VERDICTS[k])
        ok &= result.passed
    sys.exit(0 if ok else 1)
