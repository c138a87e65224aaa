"""Castelnuovo-Mumford regularity of monomial ideals.

Three routes are available: the degree of a stable ideal, the least ``e`` with
``I_{>=e}`` stable (an upper bound), and the full multigraded Betti table
computed from upper Koszul simplicial complexes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod
from typing import Optional

from .errors import BudgetExceededError
from .homology import FieldSpec, SimplicialComplex, reduced_homology_ranks
from .monomials import Monomial, MonomialIdeal, contains, stats, truncate
from .structure import is_stable

__all__ = [
    "DEFAULT_BUDGET", "BettiTable", "RegularityBound", "RegularityResult",
    "default_budget", "upper_koszul_complex", "betti_table", "regularity",
    "compute_regularity", "regularity_upper_bound", "lcm_of_generators",
]

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    """Cell budget for the Betti oracle; ``BORELREG_BUDGET`` overrides the default."""
    value = os.environ.get("BORELREG_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def lcm_of_generators(ideal: MonomialIdeal) -> Monomial:
    return Monomial._raw(tuple(max(col) for col in zip(*ideal.gens)))


def upper_koszul_complex(ideal: MonomialIdeal, a) -> SimplicialComplex:
    """Complex on ``supp(a)`` of the sets ``F`` with ``x^a / x_F`` in ``I``.

    The empty face is present exactly when ``x^a`` itself lies in ``I``;
    otherwise the complex is void.
    """
    a = tuple(a)
    support = [i + 1 for i, e in enumerate(a) if e > 0]
    faces = []
    if contains(ideal, Monomial._raw(a)):
        for k in range(len(support) + 1):
            for F in combinations(support, k):
                exps = list(a)
                for i in F:
                    exps[i - 1] -= 1
                if contains(ideal, Monomial._raw(tuple(exps))):
                    faces.append(F)
    return SimplicialComplex(support, faces)


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers ``beta_{i,a}(I)`` keyed by ``(i, a)``."""

    num_vars: int
    entries: dict = field(default_factory=dict)
    field: FieldSpec = field(default_factory=FieldSpec)

    @property
    def regularity(self) -> int:
        return max(sum(a) - i for i, a in self.entries)

    def graded(self) -> dict:
        """``beta_{i,j}`` obtained by summing over multidegrees of total degree ``j``."""
        out = {}
        for (i, a), b in self.entries.items():
            out[(i, sum(a))] = out.get((i, sum(a)), 0) + b
        return dict(sorted(out.items()))

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def sorted_entries(self) -> list:
        # within a degree, multidegrees follow the canonical generator order
        return sorted(self.entries.items(),
                      key=lambda kv: (kv[0][0], sum(kv[0][1]), tuple(-x for x in kv[0][1])))

    def grid(self) -> str:
        """Macaulay2-style text grid: row ``j - i``, column ``i``."""
        graded = self.graded()
        if not graded:
            return "(empty)"
        imax = max(i for i, _ in graded)
        rows = sorted({j - i for i, j in graded})
        width = max(len(str(v)) for v in graded.values()) + 1
        lines = ["     " + "".join(str(i).rjust(width) for i in range(imax + 1))]
        for r in rows:
            cells = []
            for i in range(imax + 1):
                v = graded.get((i, i + r))
                cells.append(("." if v is None else str(v)).rjust(width))
            lines.append(f"{r:>3}: " + "".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "regularity": self.regularity,
            "graded": [{"i": i, "j": j, "value": v} for (i, j), v in self.graded().items()],
            "multigraded": [{"i": i, "a": list(a), "value": v}
                            for (i, a), v in self.sorted_entries()],
        }


def betti_table(ideal: MonomialIdeal, field: FieldSpec | None = None,
                budget: int | None = None) -> BettiTable:
    """Multigraded Betti numbers of ``I`` by brute force over the lcm lattice box.

    ``beta_{i,a}(I)`` is the rank of the reduced homology in dimension ``i - 1``
    of the upper Koszul complex at ``a``.  Every ``a`` with ``0 <= a <= lcm(G(I))``
    is visited.
    """
    ideal.require_proper()
    field = field or FieldSpec()
    budget = default_budget() if budget is None else budget
    top = lcm_of_generators(ideal)
    cells = prod(e + 1 for e in top)
    if cells > budget:
        raise BudgetExceededError(cells, budget)
    table = BettiTable(ideal.n, {}, field)
    for a in product(*(range(e + 1) for e in top)):
        if not contains(ideal, Monomial._raw(a)):
            continue
        K = upper_koszul_complex(ideal, a)
        for k, h in reduced_homology_ranks(K, field).items():
            if h:
                table.entries[(k + 1, a)] = h
    return table


@dataclass(frozen=True)
class RegularityResult:
    value: int
    method: str  # "fast-path" or "oracle"
    table: Optional[BettiTable] = None


def compute_regularity(ideal: MonomialIdeal, field: FieldSpec | None = None,
                       mode: str = "auto", budget: int | None = None) -> RegularityResult:
    """Regularity with the route that produced it.

    ``mode`` is ``"auto"`` (degree shortcut for stable ideals, oracle otherwise),
    ``"oracle"``, ``"fast"`` (refuses non-stable input) or ``"verify"`` (runs both
    on stable input and raises ``AssertionError`` if they disagree).
    """
    ideal.require_proper()
    if mode not in ("auto", "oracle", "fast", "verify"):
        raise ValueError(f"unknown mode {mode!r}")
    stable = mode != "oracle" and is_stable(ideal)
    if mode == "fast" and not stable:
        raise ValueError(f"{ideal} is not stable; the degree shortcut does not apply")
    if stable and mode in ("auto", "fast"):
        return RegularityResult(stats(ideal).deg, "fast-path")
    table = betti_table(ideal, field, budget)
    if stable and mode == "verify":
        deg = stats(ideal).deg
        if table.regularity != deg:
            raise AssertionError(
                f"oracle regularity {table.regularity} != deg {deg} for stable {ideal}")
    return RegularityResult(table.regularity, "oracle", table)


def regularity(ideal: MonomialIdeal, field: FieldSpec | None = None,
               mode: str = "auto", budget: int | None = None) -> int:
    return compute_regularity(ideal, field, mode, budget).value


@dataclass(frozen=True)
class RegularityBound:
    q_bound: int
    stable_truncation_degree: Optional[int]

    @property
    def certified_upper(self) -> Optional[int]:
        return self.stable_truncation_degree


def regularity_upper_bound(ideal: MonomialIdeal) -> RegularityBound:
    """Least ``e`` in ``deg(I) .. q(I)`` with ``I_{>=e}`` stable; then ``reg(I) <= e``."""
    s = stats(ideal)
    for e in range(s.deg, s.q + 1):
        if is_stable(truncate(ideal, e)):
            return RegularityBound(s.q, e)
    return RegularityBound(s.q, None)
