"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL] criterion N`` line; the lines are
repeated in the terminal summary under "acceptance criteria".
"""

import json
import random
import subprocess
import sys
import time

import pytest

from borelreg.io import format_ideal
from borelreg.monomials import MonomialIdeal, RingContext, stats, truncate
from borelreg.structure import is_stable
from borelreg.suites import run_suite

EXHAUSTIVE_CASES = [(2, 4, 6), (3, 2, 6)]


def summary(res):
    return ", ".join(f"{k} {c.checked - c.failed}/{c.checked}" for k, c in res.checks.items())


@pytest.fixture(scope="module")
def char_runs():
    t0 = time.perf_counter()
    exhaustive = run_suite("char-exhaustive", cases=EXHAUSTIVE_CASES)
    t1 = time.perf_counter()
    rand = run_suite("char-random", count=10_000, seed=0, nmax=4, dmax=4)
    t2 = time.perf_counter()
    return exhaustive, t1 - t0, rand, t2 - t1


def test_criterion_01_worked_example(acceptance_log):
    I = MonomialIdeal(RingContext(2), [(2, 0), (0, 2)])

    def ops():
        return stats(I).q, is_stable(truncate(I, 2)), is_stable(truncate(I, 3))

    assert ops() == (3, False, True)
    best = min(_timed(ops) for _ in range(20))
    ok = best < 1e-3
    acceptance_log(1, "(x1^2, x2^2): q=3, I>=2 not stable, I>=3 stable, < 1 ms", ok,
                   f"best of 20 = {best * 1e3:.3f} ms")
    assert ok


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def test_criterion_02_exhaustive_equivalence(char_runs, acceptance_log):
    res, elapsed, _, _ = char_runs
    c = res.checks["consistent"]
    ok = c.failed == 0 and c.checked > 0 and elapsed < 300
    acceptance_log(2, "three-way equivalence on every enumerated ideal, < 5 min", ok,
                   f"{c.checked} ideals, {c.failed} violations, {elapsed:.1f} s")
    assert ok, c.examples


def test_criterion_03_random_equivalence(char_runs, acceptance_log):
    _, _, res, elapsed = char_runs
    c = res.checks["consistent"]
    ok = c.failed == 0 and c.checked == 10_000 and elapsed < 600
    acceptance_log(3, "three-way equivalence on 10,000 random ideals, < 10 min", ok,
                   f"{c.failed} violations, {elapsed:.1f} s")
    assert ok, c.examples


def test_criterion_04_regularity_bound(acceptance_log):
    res = run_suite("bound", count=1000, seed=0, nmax=4, dmax=3, components=3)
    ok = res.passed and res.checks["reg_le_q"].checked == 1000
    acceptance_log(4, "reg <= q on 1,000 Borel-type ideals with equality witnessed", ok,
                   f"{summary(res)}; tight {res.notes['tight']}, "
                   f"skipped {res.notes['skipped_budget']}")
    assert ok, res.to_json()


def test_criterion_05_stable_regularity(acceptance_log):
    res = run_suite("eliahou-kervaire", count=500, seed=0, nmax=3, dmax=4)
    ok = res.passed and res.checks["reg_eq_deg"].checked == 500
    acceptance_log(5, "reg == deg on 500 stable ideals", ok, summary(res))
    assert ok, res.to_json()


def test_criterion_06_intersection(acceptance_log):
    res = run_suite("intersection", count=500, seed=0)
    ok = res.passed and res.checks["intersection_truncation_stable"].checked == 500
    acceptance_log(6, "truncation at q stays stable under intersection, 500 pairs", ok,
                   summary(res))
    assert ok, res.to_json()


def test_criterion_07_pure_powers(acceptance_log):
    res = run_suite("pure-powers", nmax=4, amax=3)
    ok = res.passed and all(c.checked for c in res.checks.values())
    acceptance_log(7, "pure-power ideals: stable truncation iff prefix indices", ok,
                   summary(res))
    assert ok, res.to_json()


def test_criterion_08_exchange_agreement(char_runs, acceptance_log):
    exhaustive, _, rand, _ = char_runs
    a, b = exhaustive.checks["exchange_agrees"], rand.checks["exchange_agrees"]
    ok = a.failed == 0 and b.failed == 0
    acceptance_log(8, "exchange test agrees with the saturation test", ok,
                   f"{a.checked + b.checked} ideals, {a.failed + b.failed} disagreements")
    assert ok, a.examples + b.examples


def test_criterion_09_koszul(acceptance_log):
    res = run_suite("koszul", nmin=2, nmax=5)
    acceptance_log(9, "Betti table of (x1..xn), n = 2..5, is the Koszul pattern", res.passed,
                   summary(res))
    assert res.passed, res.to_json()


def test_criterion_10_saturation(acceptance_log):
    res = run_suite("saturation", cases=EXHAUSTIVE_CASES)
    acceptance_log(10, "prefix saturation equals the component-dropping oracle", res.passed,
                   summary(res))
    assert res.passed, res.to_json()


def test_criterion_11_decomposition(acceptance_log):
    res = run_suite("decomposition", cases=EXHAUSTIVE_CASES)
    acceptance_log(11, "irreducible decomposition round-trips and is irredundant",
                   res.passed, summary(res))
    assert res.passed, res.to_json()


def _six_generator_ideal(rng):
    while True:
        gens = [tuple(rng.randint(0, 3) for _ in range(4)) for _ in range(6)]
        ideal = MonomialIdeal(RingContext(4), [g for g in gens if any(g)])
        if len(ideal.gens) == 6:
            return ideal


def test_criterion_12_betti_performance(tmp_path, acceptance_log):
    rng = random.Random(12)
    worst, codes = 0.0, []
    for k in range(5):
        path = tmp_path / f"perf{k}.txt"
        path.write_text(format_ideal(_six_generator_ideal(rng)))
        t = time.perf_counter()
        try:
            proc = subprocess.run(
                [sys.executable, "-m", "borelreg.cli", "betti", "--json", str(path)],
                capture_output=True, text=True, timeout=10)
            codes.append(proc.returncode)
            if proc.returncode == 0:
                json.loads(proc.stdout)
        except subprocess.TimeoutExpired:
            codes.append(None)
        worst = max(worst, time.perf_counter() - t)
    ok = all(c in (0, 4) for c in codes)
    acceptance_log(12, "betti on 6-generator ideals in 4 variables finishes in 10 s", ok,
                   f"5 ideals, exit codes {codes}, slowest {worst:.2f} s")
    assert ok
