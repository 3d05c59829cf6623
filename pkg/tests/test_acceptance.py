"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run directly.
"""
from __future__ import annotations

import sys
import time

from flatcat.verify import (
    BIJECTION_BOUNDS,
    VerifyReport,
    suite_avoiders,
    suite_bijections,
    suite_cardinality,
    suite_equidistribution,
    suite_functional,
    suite_recurrences,
    suite_table1,
    suite_theorems,
    suite_totals,
)

RESULTS: dict[int, str] = {}


def _record(num: int, title: str, rep: VerifyReport, start: float) -> None:
    failed = [c for c in rep.cases if c.status != "pass"]
    notes = [f"{c.id}: {c.detail}" for c in rep.cases if c.status == "pass" and c.detail]
    status = "PASS" if not failed else "FAIL"
    line = f"[{status}] {num:2d}. {title} ({len(rep.cases) - len(failed)}/{len(rep.cases)} cases, {time.perf_counter() - start:.1f}s)"
    if failed:
        line += " first failure: " + f"{failed[0].id} {failed[0].detail}"
    elif notes:
        line += "; " + "; ".join(notes)
    RESULTS[num] = line
    assert not failed, line


def _only(rep: VerifyReport, ids: set[str]) -> VerifyReport:
    return VerifyReport(rep.suite, [c for c in rep.cases if c.id in ids], rep.elapsed)


def test_01_cardinality():
    start = time.perf_counter()
    rep = suite_cardinality(14)
    _record(1, "|F_n| = (3^(n-1)+1)/2 for 1 <= n <= 14", _only(rep, {"|F_n| = (3^(n-1)+1)/2"}), start)


def test_02_anchor_n6():
    start = time.perf_counter()
    rep = suite_cardinality(6)
    _record(2, "n=6: 122 words, the ten excluded Catalan words verbatim", _only(rep, {"n=6 anchor"}), start)


def test_03_table1():
    start = time.perf_counter()
    _record(3, "13 single-pattern GFs vs brute force, n <= 12", suite_table1(12), start)


def test_04_theorems():
    start = time.perf_counter()
    _record(4, "joint GFs A-E vs brute-force joint distributions, n <= 10", suite_theorems(10), start)


def test_05_functional_equations():
    start = time.perf_counter()
    _record(5, "functional-equation residuals zero through x^20", suite_functional(20), start)


def test_06_recurrences():
    start = time.perf_counter()
    _record(6, "arrays vs oracle n <= 10; double GFs and u/v/w through x^20", suite_recurrences(10, 20), start)


def test_07_totals():
    start = time.perf_counter()
    _record(7, "tot closed forms vs oracle (2..12), vs dF/dq (<= 20), shift identities (<= 20)", suite_totals(12, 20), start)


def test_08_avoiders():
    start = time.perf_counter()
    _record(8, "avoider sums vs oracle and q=0 GFs (<= 12); f_n(11) = 2^(n-2) for 2..14", suite_avoiders(12, 14), start)


def test_09_bijections():
    start = time.perf_counter()
    bounds = ", ".join(f"{k} <= {v}" for k, v in BIJECTION_BOUNDS.items())
    _record(9, f"bijections exhaustive ({bounds})", suite_bijections(None), start)


def test_10_equidistribution():
    start = time.perf_counter()
    _record(10, "112~122, 211~221~231 (n <= 12); tot(211)=tot(212) (n <= 20) with differing distributions",
            suite_equidistribution(12, 20), start)


def main() -> int:
    tests = [obj for name, obj in sorted(globals().items()) if name.startswith("test_")]
    ok = True
    for t in tests:
        try:
            t()
        except AssertionError:
            ok = False
    for num in sorted(RESULTS):
        print(RESULTS[num])
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
