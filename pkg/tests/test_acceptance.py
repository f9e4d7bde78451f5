"""Acceptance criteria A1-A8, one pass/fail line each.

A4, A7 and A8 each contain a statement that does not hold as written
(see the decisions ledger).  Their checks keep the statement, so they are
expected to fail and are marked strict xfail.
"""

from functools import lru_cache

import pytest

from braidhom.verify import run_all

IDS = [f"A{i}" for i in range(1, 9)]
KNOWN_FALSE = {
    "A4": "TP^2/TP^1 of S^2 has F2 homology in degrees 3,4, not 2,3,4",
    "A7": "same TP^2/TP^1 claim as A4; the oracle itself agrees with every model",
    "A8": "p(a)*p(b) = p(a+b-1) is false; the true identity is p(a)*p(b) = p(a+b)",
}


@lru_cache(maxsize=1)
def results():
    return {r.id: r for r in run_all(IDS)}


def test_print_acceptance_report(capsys):
    with capsys.disabled():
        print()
        for cid in IDS:
            print(results()[cid].line())


@pytest.mark.parametrize("cid", [
    pytest.param(c, marks=pytest.mark.xfail(strict=True, reason=KNOWN_FALSE[c])) if c in KNOWN_FALSE else c
    for c in IDS
])
def test_criterion(cid):
    r = results()[cid]
    assert r.passed, r.line()


@pytest.mark.parametrize("cid", sorted(KNOWN_FALSE))
def test_known_false_criteria_fail_only_on_the_stated_claim(cid):
    r = results()[cid]
    assert r.failures
    assert all(f.startswith("stated:") for f in r.failures)


def test_catalog_rederivation():
    (r,) = run_all(["CAT"])
    assert r.passed, r.line()


@pytest.mark.slow
def test_extended_catalog_with_oracle_plane_k4():
    # recomputes B(R^2,4) from TPbar^4(S^2) by brute force, about a minute
    (r,) = run_all(["CAT"], extended=True)
    assert r.passed, r.line()
