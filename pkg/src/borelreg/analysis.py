"""One-shot analysis of an ideal, bundling every invariant the package computes."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .homology import FieldSpec
from .io import ideal_to_json
from .monomials import IdealStats, MonomialIdeal, stats
from .regularity import RegularityBound, RegularityResult, compute_regularity, regularity_upper_bound
from .structure import (CharReport, associated_primes, check_char_theorem,
                        irreducible_decomposition, is_stable)

SCHEMA_VERSION = 1


@dataclass
class AnalysisReport:
    ideal: MonomialIdeal
    stats: IdealStats
    stable: bool
    char: CharReport
    ass: list
    decomposition: list
    regularity: RegularityResult
    bound: RegularityBound
    timings_ms: Optional[dict] = field(default=None)

    def __post_init__(self):
        upper = self.bound.certified_upper
        if upper is not None and self.regularity.value > upper:
            raise AssertionError(
                f"regularity {self.regularity.value} exceeds certified bound {upper}")

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "ideal": ideal_to_json(self.ideal),
            "stats": {"deg": self.stats.deg, "m": self.stats.m, "q": self.stats.q},
            "stable": self.stable,
            "char_theorem": {
                "is_borel_type": self.char.is_borel_type,
                "ass_all_prefix": self.char.ass_all_prefix,
                "truncation_stable": self.char.truncation_stable,
                "q_used": self.char.q_used,
                "consistent": self.char.consistent,
            },
            "ass": [list(p.support) for p in self.ass],
            "decomposition": [[list(e) for e in c.entries] for c in self.decomposition],
            "regularity": {"value": self.regularity.value, "method": self.regularity.method},
            "bound": {
                "q_bound": self.bound.q_bound,
                "stable_truncation_degree": self.bound.stable_truncation_degree,
                "certified_upper": self.bound.certified_upper,
            },
        }
        if self.timings_ms is not None:
            out["timings_ms"] = self.timings_ms
        return out

    def to_text(self) -> str:
        s, c, b = self.stats, self.char, self.bound
        lines = [
            f"ideal:          {self.ideal}  in {self.ideal.n} variables",
            f"deg, m, q:      {s.deg}, {s.m}, {s.q}",
            f"stable:         {self.stable}",
            f"Borel type:     {c.is_borel_type}",
            f"Ass all prefix: {c.ass_all_prefix}",
            f"I_>=q stable:   {c.truncation_stable}  (q = {c.q_used})",
            f"consistent:     {c.consistent}",
            "Ass(S/I):       " + ", ".join(str(p) for p in self.ass),
            "components:     " + " ∩ ".join(str(comp) for comp in self.decomposition),
            f"regularity:     {self.regularity.value}  ({self.regularity.method})",
            f"bound:          e = {b.stable_truncation_degree}, q = {b.q_bound}",
        ]
        if self.timings_ms is not None:
            lines.append("timings (ms):   " + ", ".join(
                f"{k}={v:.2f}" for k, v in self.timings_ms.items()))
        return "\n".join(lines)


def analyze(ideal: MonomialIdeal, field: FieldSpec | None = None, budget: int | None = None,
            timings: bool = False) -> AnalysisReport:
    clock = {}

    def timed(key, fn, *args):
        start = time.perf_counter()
        value = fn(*args)
        clock[key] = (time.perf_counter() - start) * 1000
        return value

    st = timed("stats", stats, ideal)
    report = AnalysisReport(
        ideal=ideal,
        stats=st,
        stable=timed("stable", is_stable, ideal),
        char=timed("char_theorem", check_char_theorem, ideal),
        ass=timed("ass", associated_primes, ideal),
        decomposition=timed("decomposition", irreducible_decomposition, ideal),
        regularity=timed("regularity", compute_regularity, ideal, field, "auto", budget),
        bound=timed("bound", regularity_upper_bound, ideal),
        timings_ms=None,
    )
    if timings:
        report.timings_ms = clock
    return report
