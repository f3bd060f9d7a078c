"""The eleven acceptance criteria, run with exact equality.

Each criterion prints one line: ``[PASS] n name (checks, seconds)`` or
``[FAIL] ...`` followed by the failing check ids. Also runnable as a script.
"""

import sys
import time

import pytest

from qtpaths import verify

CRITERIA = [
    (1, "D-exchange relation", "d-exchange"),
    (2, "engine triple agreement", "engines"),
    (3, "explicit formula and coefficient sides", "explicit"),
    (4, "Macdonald eigen, orthogonality, Pieri, Cauchy", "macdonald"),
    (5, "commutation relations", "commutation"),
    (6, "A operator: commutator vs path sum", "dif-eq"),
    (7, "conjugation and tau PDE", "pde"),
    (8, "tau uniqueness via dual bases", "uniqueness"),
    (9, "a-basis determinant and q=t=1 leading term", "basis"),
    (10, "extended delta identity", "ext-delta"),
    (11, "soundness: mutations are rejected", "soundness"),
]


def evaluate(suite):
    t0 = time.perf_counter()
    report = verify.run_suite(suite, window=4, zmax=3)
    failed = [r.id for r in report.results if not r.passed]
    return report, failed, time.perf_counter() - t0


def line(num, name, report, failed, elapsed):
    status = "PASS" if report.passed and report.results else "FAIL"
    text = f"[{status}] {num:2d} {name} ({len(report.results)} checks, {elapsed:.1f}s)"
    if failed:
        text += " failing: " + ", ".join(sorted(set(failed)))
    return text


@pytest.mark.parametrize("num,name,suite", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(num, name, suite, capsys):
    report, failed, elapsed = evaluate(suite)
    with capsys.disabled():
        print("\n" + line(num, name, report, failed, elapsed))
    assert report.results
    assert report.passed, failed


if __name__ == "__main__":
    ok = True
    for num, name, suite in CRITERIA:
        report, failed, elapsed = evaluate(suite)
        print(line(num, name, report, failed, elapsed), flush=True)
        ok = ok and report.passed
    sys.exit(0 if ok else 1)
