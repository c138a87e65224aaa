"""Named verification suites.

Each suite runs one family of checks over generated ideals and returns a
:class:`SuiteResult` that counts instances and keeps the first few
counterexamples per check.  The command line ``verify`` subcommand and the
acceptance tests both go through :data:`SUITES`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import BudgetExceededError
from .harness import (enumerate_ideals, prefix_normalize, pure_power_ideals,
                      random_antichain_ideal, random_borel_type,
                      random_intersection_ideal, random_mixed_ideal,
                      random_stable_ideal)
from .homology import FieldSpec
from .monomials import (MonomialIdeal, RingContext, intersect,
                        maximal_ideal_power, stats, truncate)
from .oracles import koszul_betti, saturate_prefix_by_components
from .regularity import betti_table, regularity_upper_bound
from .structure import (ass_totally_ordered, check_char_theorem,
                        intersect_all, irreducible_decomposition,
                        is_borel_type_exchange, is_stable, saturate_prefix)

__all__ = ["Check", "SuiteResult", "SUITES", "run_suite", "exhaustive_ideals"]

MAX_EXAMPLES = 10


@dataclass
class Check:
    checked: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, what=None):
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(str(what))


@dataclass
class SuiteResult:
    name: str
    params: dict
    checks: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def check(self, key) -> Check:
        return self.checks.setdefault(key, Check())

    @property
    def passed(self) -> bool:
        return all(c.failed == 0 for c in self.checks.values())

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "params": self.params,
            "passed": self.passed,
            "checks": {k: {"checked": c.checked, "failed": c.failed, "examples": c.examples}
                       for k, c in self.checks.items()},
            "notes": self.notes,
        }


def _seeds(seed, count):
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(count)]


def exhaustive_ideals(cases):
    """Chain ``enumerate_ideals(n, dmax, gmax)`` over a list of ``(n, dmax, gmax)``."""
    for n, dmax, gmax in cases:
        yield from enumerate_ideals(n, dmax, gmax)


def _cases(nmax, dmax, gmax, cases):
    if cases is not None:
        return [tuple(c) for c in cases]
    return [(n, dmax, gmax) for n in range(1, nmax + 1)]


def worked_example_suite() -> SuiteResult:
    res = SuiteResult("worked-example", {})
    I = MonomialIdeal(2, [(2, 0), (0, 2)])
    res.check("q_is_3").record(stats(I).q == 3, stats(I))
    res.check("truncation_2_not_stable").record(not is_stable(truncate(I, 2)), truncate(I, 2))
    res.check("truncation_3_stable").record(is_stable(truncate(I, 3)), truncate(I, 3))
    return res


def _char_checks(res, ideal):
    report = check_char_theorem(ideal)
    res.check("consistent").record(report.consistent, f"{ideal} n={ideal.n}: {report}")
    exch = is_borel_type_exchange(ideal)
    res.check("exchange_agrees").record(exch == report.is_borel_type, f"{ideal} n={ideal.n}")
    if report.is_borel_type:
        res.notes["borel_type"] = res.notes.get("borel_type", 0) + 1


def char_exhaustive_suite(nmax=2, dmax=4, gmax=6, cases=None) -> SuiteResult:
    cases = _cases(nmax, dmax, gmax, cases)
    res = SuiteResult("char-exhaustive", {"cases": [list(c) for c in cases]})
    for ideal in exhaustive_ideals(cases):
        _char_checks(res, ideal)
    return res


def char_random_suite(count=10_000, seed=0, nmax=4, dmax=4, gmax=6) -> SuiteResult:
    res = SuiteResult("char-random", {"count": count, "seed": seed, "nmax": nmax,
                                      "dmax": dmax, "gmax": gmax})
    for s in _seeds(seed, count):
        _char_checks(res, random_mixed_ideal(nmax, dmax, gmax, s))
    return res


def bound_suite(count=1000, seed=0, nmax=4, dmax=3, components=3, field=None,
                budget=None) -> SuiteResult:
    """Oracle regularity against ``q(I)`` on random Borel-type ideals."""
    res = SuiteResult("bound", {"count": count, "seed": seed, "nmax": nmax,
                                "dmax": dmax, "components": components})
    tight = skipped = 0
    for s in _seeds(seed, count):
        rng = random.Random(s)
        n = rng.randint(1, nmax)
        ideal = random_borel_type(n, dmax, rng.randint(1, components), rng)
        try:
            reg = betti_table(ideal, field, budget).regularity
        except BudgetExceededError:
            skipped += 1
            continue
        q = stats(ideal).q
        res.check("reg_le_q").record(reg <= q, f"{ideal}: reg={reg} q={q}")
        bound = regularity_upper_bound(ideal)
        res.check("certified_upper_sound").record(
            bound.certified_upper is not None and reg <= bound.certified_upper,
            f"{ideal}: reg={reg} bound={bound}")
        tight += reg == q
    res.check("equality_witnessed").record(tight > 0, "no instance with reg == q")
    res.notes.update(tight=tight, skipped_budget=skipped)
    return res


def eliahou_kervaire_suite(count=500, seed=0, nmax=3, dmax=4, gmax=4,
                           field=None) -> SuiteResult:
    res = SuiteResult("eliahou-kervaire", {"count": count, "seed": seed, "nmax": nmax,
                                           "dmax": dmax, "gmax": gmax})
    for s in _seeds(seed, count):
        rng = random.Random(s)
        ideal = random_stable_ideal(rng.randint(1, nmax), rng.randint(1, dmax), gmax, rng)
        reg = betti_table(ideal, field).regularity
        deg = stats(ideal).deg
        res.check("reg_eq_deg").record(reg == deg, f"{ideal}: reg={reg} deg={deg}")
        res.check("is_stable").record(is_stable(ideal), ideal)
    return res


def _truncation_stable(ideal):
    return is_stable(truncate(ideal, stats(ideal).q))


def _ideal_with_stable_truncation(n, dmax, rng):
    # half the draws come from the Borel-type generator, half by rejection
    if rng.random() < 0.5:
        return random_borel_type(n, dmax, rng.randint(1, 3), rng)
    makers = (random_antichain_ideal, random_intersection_ideal, random_stable_ideal)
    while True:
        ideal = makers[rng.randrange(3)](n, rng.randint(1, dmax), 4, rng)
        if _truncation_stable(ideal):
            return ideal


def intersection_suite(count=500, seed=0, nmax=4, dmax=3) -> SuiteResult:
    """Stability of the truncation at ``q`` survives intersection."""
    res = SuiteResult("intersection", {"count": count, "seed": seed, "nmax": nmax,
                                       "dmax": dmax})
    q_drops = 0
    for s in _seeds(seed, count):
        rng = random.Random(s)
        n = rng.randint(2, max(2, nmax))
        I = _ideal_with_stable_truncation(n, dmax, rng)
        J = _ideal_with_stable_truncation(n, dmax, rng)
        K = intersect(I, J)
        res.check("intersection_truncation_stable").record(
            _truncation_stable(K), f"I={I} J={J}")
        q_drops += stats(K).q < max(stats(I).q, stats(J).q)
    res.notes["pairs_where_q_decreased"] = q_drops
    return res


def pure_powers_suite(nmax=4, amax=3) -> SuiteResult:
    res = SuiteResult("pure-powers", {"nmax": nmax, "amax": amax})
    for idx, ideal in pure_power_ideals(nmax, amax):
        prefix = idx == tuple(range(1, len(idx) + 1))
        stable = _truncation_stable(ideal)
        if prefix:
            res.check("prefix_implies_stable").record(stable, ideal)
        else:
            res.check("stable_implies_prefix").record(not stable, ideal)
    return res


def koszul_suite(nmin=2, nmax=5, field=None) -> SuiteResult:
    res = SuiteResult("koszul", {"nmin": nmin, "nmax": nmax})
    for n in range(nmin, nmax + 1):
        table = betti_table(maximal_ideal_power(n, 1), field)
        res.check("koszul_pattern").record(table.graded() == koszul_betti(n),
                                           f"n={n}: {table.graded()}")
        res.check("reg_is_1").record(table.regularity == 1, f"n={n}")
    return res


def saturation_suite(nmax=2, dmax=4, gmax=6, cases=None) -> SuiteResult:
    cases = _cases(nmax, dmax, gmax, cases)
    res = SuiteResult("saturation", {"cases": [list(c) for c in cases]})
    for ideal in exhaustive_ideals(cases):
        for j in range(1, ideal.n + 1):
            res.check("chain_equals_component_oracle").record(
                saturate_prefix(ideal, j) == saturate_prefix_by_components(ideal, j),
                f"{ideal} n={ideal.n} j={j}")
    return res


def decomposition_suite(nmax=2, dmax=4, gmax=6, cases=None) -> SuiteResult:
    cases = _cases(nmax, dmax, gmax, cases)
    res = SuiteResult("decomposition", {"cases": [list(c) for c in cases]})
    for ideal in exhaustive_ideals(cases):
        comps = [c.as_ideal for c in irreducible_decomposition(ideal)]
        res.check("round_trip").record(intersect_all(comps, ideal.n) == ideal, ideal)
        irredundant = all(
            intersect_all(comps[:k] + comps[k + 1:], ideal.n) != ideal
            for k in range(len(comps)))
        res.check("irredundant").record(irredundant, ideal)
    return res


def chain_bound_suite(count=300, seed=0, nmax=4, dmax=3, components=3) -> SuiteResult:
    """Ideals whose associated primes form a chain in a scrambled variable order.

    The bound is checked with ``m(I)`` taken after relabelling the variables
    into prefix order; the bound in the original labels is only recorded.
    """
    res = SuiteResult("chain-bound", {"count": count, "seed": seed, "nmax": nmax,
                                      "dmax": dmax, "components": components})
    original_ok = 0
    for s in _seeds(seed, count):
        rng = random.Random(s)
        n = rng.randint(2, max(2, nmax))
        base = random_borel_type(n, dmax, rng.randint(1, components), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        scrambled = MonomialIdeal(RingContext(n), [tuple(g[p] for p in perm) for g in base.gens])
        res.check("ass_chain").record(ass_totally_ordered(scrambled), scrambled)
        normal = prefix_normalize(scrambled)
        reg = betti_table(scrambled).regularity
        res.check("reg_le_q_normalized").record(
            reg <= stats(normal).q, f"{scrambled}: reg={reg} q'={stats(normal).q}")
        res.check("normalized_is_prefix").record(
            check_char_theorem(normal).ass_all_prefix, normal)
        original_ok += reg <= stats(scrambled).q
    res.notes["reg_le_q_original_labels"] = original_ok
    return res


def field_suite(count=200, seed=0, nmax=3, dmax=4, primes=(2, 3)) -> SuiteResult:
    """Betti tables over Q agree with those over small prime fields."""
    res = SuiteResult("field", {"count": count, "seed": seed, "nmax": nmax, "dmax": dmax,
                                "primes": list(primes)})
    for s in _seeds(seed, count):
        ideal = random_mixed_ideal(nmax, dmax, 5, s)
        base = betti_table(ideal).entries
        for p in primes:
            other = betti_table(ideal, FieldSpec(p)).entries
            res.check(f"agrees_over_F{p}").record(other == base, ideal)
    return res


SUITES = {
    "worked-example": worked_example_suite,
    "char-exhaustive": char_exhaustive_suite,
    "char-random": char_random_suite,
    "bound": bound_suite,
    "eliahou-kervaire": eliahou_kervaire_suite,
    "intersection": intersection_suite,
    "pure-powers": pure_powers_suite,
    "koszul": koszul_suite,
    "saturation": saturation_suite,
    "decomposition": decomposition_suite,
    "chain-bound": chain_bound_suite,
    "field": field_suite,
}


def run_suite(name: str, **params) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return suite(**params)
