"""The fifteen acceptance criteria at full size.

Each test records a one-line verdict; the lines are printed together in the
terminal summary (see conftest.py) and also to stdout as each check ends.
Time limits apply to the wall clock of a single check.
"""

from fractions import Fraction

import pytest

from treepack import checks

REPORT: dict[int, list[checks.CheckResult]] = {}
TITLES = {
    1: "alpha = 1/min l*",
    2: "lambda/2 < Phi <= lambda",
    3: "greedy concentration",
    4: "cut existence",
    5: "lower-bound golden",
    6: "lower-bound scaling",
    7: "Kaiser packing",
    8: "small packing existence",
    9: "contraction tracker",
    10: "dynamic min-cut",
    11: "load cap and queue",
    12: "deterministic arboricity",
    13: "sampled arboricity",
    14: "simple-graph combinator",
    15: "byte-identical reruns",
}
MINUTE = 60.0


def summary_lines() -> list[str]:
    out = []
    for c in sorted(REPORT):
        rs = REPORT[c]
        ok = all(r.ok for r in rs)
        secs = sum(r.seconds for r in rs)
        parts = "; ".join(r.line()[7:] for r in rs)
        out.append(f"criterion {c:2d} [{'PASS' if ok else 'FAIL'}] {TITLES[c]} ({secs:.1f}s): {parts}")
    return out


def _record(c: int, *results: checks.CheckResult, limit: float | None = None) -> None:
    REPORT.setdefault(c, []).extend(results)
    for r in results:
        print(f"criterion {c}: {r.line()} ({r.seconds:.1f}s)")
    for r in results:
        assert r.ok, r.line()
    if limit is not None:
        secs = sum(r.seconds for r in results)
        assert secs <= limit, f"criterion {c} took {secs:.0f}s, limit {limit:.0f}s"


def test_c01_alpha_is_inverse_min_ideal_load():
    _record(1, checks.check_alpha_loads(count=500), limit=2 * MINUTE)


def test_c02_phi_between_half_lambda_and_lambda():
    _record(2, checks.check_phi_lambda(count=500))


def test_c03_greedy_concentration():
    _record(3, checks.check_concentration(count=100, eta=Fraction(1, 2)))


def test_c04_cut_existence():
    _record(4, checks.check_cut_existence(count=50, const=1536), limit=10 * MINUTE)


@pytest.mark.parametrize("k,n", [(1, 10), (2, 14), (3, 20)])
def test_c05_lowerbound_golden(k, n):
    _record(5, *checks.check_lowerbound_golden(((k, n),)))


def test_c06_lowerbound_scaling():
    _record(6, checks.check_lowerbound_scaling(n=10, k=1, s=2))


def test_c07_kaiser_packing():
    _record(7, checks.check_kaiser(random_count=20))


def test_c08_small_packing_existence():
    _record(8, checks.check_existence((Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))))


def test_c09_contraction_tracker():
    _record(9, checks.check_tracker(events=10_000, n_max=32))


@pytest.fixture(scope="module")
def mincut_results():
    return checks.check_mincut_streams(seeds=(0, 1, 2), steps=1000, n=12, lambda_max=4)


def test_c10_dynamic_mincut(mincut_results):
    _record(10, mincut_results[0], limit=30 * MINUTE)


def test_c11_load_cap_and_queue(mincut_results):
    _record(11, mincut_results[1])


def test_c12_deterministic_arboricity():
    _record(12, *checks.check_arboricity_det(seeds=(0, 1, 2), steps=500, alpha_max=8,
                                             eps=Fraction(1, 4)), limit=10 * MINUTE)


def test_c13_samplers():
    _record(13, *checks.check_samplers(trials=200, eps=Fraction(1, 4)), limit=15 * MINUTE)


def test_c14_simple_combinator():
    _record(14, checks.check_simple(steps=200, eps=Fraction(1, 4)))


def test_c15_byte_identical_reruns():
    _record(15, checks.check_determinism())
