"""Acceptance criteria, one test per criterion.

Each test runs the corresponding verification sweep at its stated
population size, enforces the stated time budget where one exists, and
prints one pass/fail line (visible with `pytest -s`).
"""

import time

from sctop.verify import (suite_catalog, suite_continuity, suite_dsl,
                          suite_elementary, suite_finite_collapse,
                          suite_gamma, suite_universal)


def _report(number, label, results, elapsed=None, budget=None):
    failed = [r for r in results if not r.passed]
    in_budget = budget is None or (elapsed is not None and elapsed <= budget)
    status = "PASS" if not failed and in_budget else "FAIL"
    timing = ""
    if elapsed is not None:
        timing = f" [{elapsed:.1f}s" + (f", budget {budget:.0f}s]" if budget else "]")
    print(f"{status}  criterion {number}: {label}{timing}")
    for r in failed:
        print("      " + r.line())
    assert not failed, f"criterion {number} violated: {failed[0].line()}"
    if budget is not None:
        assert elapsed <= budget, f"criterion {number} blew its {budget}s budget"


def test_criterion_1_finite_collapse_suite():
    t0 = time.time()
    results = suite_finite_collapse(4)
    _report(1, "finite collapse over all labeled posets up to 4 elements",
            results, time.time() - t0, budget=30.0)


def test_criterion_2_elementary_properties():
    results = suite_elementary(4)
    _report(2, "elementary irreducibility / I-closure facts, exhaustively",
            results)


def test_criterion_3_continuity_hierarchy():
    t0 = time.time()
    results = suite_continuity(3)
    _report(3, "continuity hierarchy over all maps between spaces up to 3",
            results, time.time() - t0, budget=60.0)


def test_criterion_4_hyperspace_facts():
    results = suite_gamma(4)
    _report(4, "hyperspace specialization/completeness + lower Vietoris "
               "cross-check up to 4", results)


def test_criterion_5_universal_property():
    t0 = time.time()
    results = suite_universal(3)
    _report(5, "universal property, adjunction, uniqueness up to "
               "homeomorphism, spaces up to 3", results,
            time.time() - t0, budget=300.0)


def test_criterion_6_catalog_ground_truths():
    results = suite_catalog(trunc_n=10, probe=64)
    _report(6, "catalog completions and truncation consistency", results)


def test_criterion_7_dsl_io():
    results = suite_dsl()
    _report(7, "DSL fixpoint, positioned errors, JSON round-trips", results)
