"""Structural predicates on monomial ideals.

Stability, saturations, the two Borel-type tests, irreducible decomposition,
associated primes and the three-way equivalence check between Borel type,
prefix associated primes and stability of ``I_{>=q(I)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import NotAChainError
from .monomials import (Monomial, MonomialIdeal, RingContext, colon_by_monomial,
                        contains, intersect, max_index, minimalize, stats,
                        truncate, variable)

__all__ = [
    "IrreducibleComponent", "AssociatedPrime", "CharReport",
    "is_stable", "saturate_variable", "saturate_prefix", "saturation_chain",
    "is_borel_type", "is_borel_type_exchange", "irreducible_decomposition",
    "intersect_all", "associated_primes", "ass_totally_ordered",
    "check_char_theorem", "ideal_contains",
]


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """The ideal ``(x_{i_1}^{a_1}, ..., x_{i_r}^{a_r})``.

    ``entries`` is a sorted tuple of ``(index, exponent)`` pairs.
    """

    entries: tuple
    num_vars: int

    def __post_init__(self):
        if not self.entries:
            raise ValueError("an irreducible component needs at least one entry")
        ring = RingContext(self.num_vars)
        seen = set()
        for i, a in self.entries:
            ring.check_index(i)
            if a < 1 or i in seen:
                raise ValueError(f"bad component entries {self.entries!r}")
            seen.add(i)

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "IrreducibleComponent":
        entries = []
        for g in ideal.gens:
            (i,) = g.support
            entries.append((i, g[i - 1]))
        return cls(tuple(sorted(entries)), ideal.n)

    @property
    def support(self) -> tuple:
        return tuple(i for i, _ in self.entries)

    @property
    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._from_minimal(
            RingContext(self.num_vars),
            [variable(i, self.num_vars, a) for i, a in self.entries])

    def __str__(self):
        return str(self.as_ideal)


@dataclass(frozen=True, order=True)
class AssociatedPrime:
    support: tuple

    @property
    def is_prefix(self) -> bool:
        return self.support == tuple(range(1, len(self.support) + 1))

    def __str__(self):
        return "(" + ", ".join(f"x{i}" for i in self.support) + ")"


@dataclass(frozen=True)
class CharReport:
    is_borel_type: bool
    ass_all_prefix: bool
    truncation_stable: bool
    q_used: int

    @property
    def consistent(self) -> bool:
        return self.is_borel_type == self.ass_all_prefix == self.truncation_stable


def _exchange(u, j, m):
    exps = list(u)
    exps[j - 1] += 1
    exps[m - 1] -= 1
    return Monomial._raw(tuple(exps))


def is_stable(ideal: MonomialIdeal) -> bool:
    """Whether ``x_j u / x_{m(u)}`` lies in ``I`` for every ``u`` in ``I`` and ``j < m(u)``.

    It is enough to test the minimal generators.
    """
    ideal.require_nonzero()
    for g in ideal.gens:
        if g.is_one:
            continue
        m = max_index(g)
        for j in range(1, m):
            if not contains(ideal, _exchange(g, j, m)):
                return False
    return True


def saturate_variable(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """``I : x_j^oo``, obtained by erasing ``x_j`` from every generator."""
    ideal.ring.check_index(j)
    ideal.require_nonzero()
    return minimalize(
        (Monomial._raw(g[:j - 1] + (0,) + g[j:]) for g in ideal.gens), ideal.ring)


def _colon_prefix(ideal, j):
    n = ideal.n
    return reduce(intersect, (colon_by_monomial(ideal, variable(k, n)) for k in range(1, j + 1)))


def saturation_chain(ideal: MonomialIdeal, j: int):
    """Yield ``I, I:P, I:P^2, ...`` for ``P = (x_1, ..., x_j)`` until it stabilizes."""
    ideal.ring.check_index(j)
    ideal.require_nonzero()
    current = ideal
    yield current
    while True:
        nxt = _colon_prefix(current, j)
        if nxt == current:
            return
        yield nxt
        current = nxt


def saturate_prefix(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """``I : (x_1, ..., x_j)^oo`` by iterating colons until the chain stops growing."""
    for current in saturation_chain(ideal, j):
        pass
    return current


def is_borel_type(ideal: MonomialIdeal) -> bool:
    ideal.require_proper()
    return all(saturate_variable(ideal, j) == saturate_prefix(ideal, j)
               for j in range(1, ideal.n + 1))


def is_borel_type_exchange(ideal: MonomialIdeal) -> bool:
    """Borel-type test by exchanging a full power of ``x_i`` for a power of ``x_j < x_i``.

    For each generator ``g`` and each ``x_i^q`` exactly dividing it, every
    ``j < i`` needs some ``t`` with ``x_j^t g / x_i^q`` in ``I``.  Any witness
    can be lowered to ``t <= deg(I) <= q(I)``, so the search stops at ``q(I)``.
    """
    ideal.require_proper()
    t_max = stats(ideal).q
    for g in ideal.gens:
        for i in g.support:
            stripped = list(g)
            stripped[i - 1] = 0
            for j in range(1, i):
                base = stripped[j - 1]
                found = False
                for t in range(t_max + 1):
                    stripped[j - 1] = base + t
                    if contains(ideal, Monomial._raw(tuple(stripped))):
                        found = True
                        break
                stripped[j - 1] = base
                if not found:
                    return False
    return True


def ideal_contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """Whether ``small`` is a subset of ``big``."""
    return all(contains(big, g) for g in small.gens)


def intersect_all(ideals, n: int) -> MonomialIdeal:
    """Intersection of a collection of ideals; the empty intersection is ``(1)``."""
    return reduce(intersect, ideals, MonomialIdeal.unit(n))


def _split_leaves(ideal, memo):
    key = ideal.gens
    if key in memo:
        return memo[key]
    target = next((g for g in ideal.gens if not g.is_pure_power), None)
    if target is None:
        leaves = {IrreducibleComponent.from_ideal(ideal)}
    else:
        i = target.support[0]
        first = variable(i, ideal.n, target[i - 1])
        second = target.over(first)
        rest = [g for g in ideal.gens if g != target]
        leaves = (_split_leaves(minimalize(rest + [first], ideal.ring), memo)
                  | _split_leaves(minimalize(rest + [second], ideal.ring), memo))
    memo[key] = leaves
    return leaves


def irreducible_decomposition(ideal: MonomialIdeal) -> list:
    """The unique irredundant decomposition of ``I`` into irreducible monomial ideals.

    A generator that is not a pure power is split as ``x_i^{a_i} * rest`` at its
    lowest variable, and ``I`` is written as the intersection of the two
    ideals obtained by replacing the generator with either factor.  Leaves are
    generated by pure powers.  An irreducible leaf contains the intersection of
    the others exactly when it contains one of them, so pruning leaves that
    contain another leaf yields the irredundant decomposition.
    """
    ideal.require_proper()
    leaves = sorted(_split_leaves(ideal, {}))
    ideals = [c.as_ideal for c in leaves]
    kept = []
    for idx, comp in enumerate(leaves):
        redundant = any(other != idx and ideal_contains(ideals[idx], ideals[other])
                        for other in range(len(leaves)))
        if not redundant:
            kept.append(comp)
    return kept


def associated_primes(ideal: MonomialIdeal) -> list:
    """Ass(S/I), as the distinct supports of the irreducible components, sorted."""
    return sorted({AssociatedPrime(c.support) for c in irreducible_decomposition(ideal)})


def _is_chain(primes):
    supports = sorted((set(p.support) for p in primes), key=len)
    return all(a <= b for a, b in zip(supports, supports[1:]))


def ass_totally_ordered(ideal: MonomialIdeal) -> bool:
    return _is_chain(associated_primes(ideal))


def check_char_theorem(ideal: MonomialIdeal) -> CharReport:
    """Evaluate the three equivalent conditions independently of each other."""
    ideal.require_proper()
    q = stats(ideal).q
    return CharReport(
        is_borel_type=is_borel_type(ideal),
        ass_all_prefix=all(p.is_prefix for p in associated_primes(ideal)),
        truncation_stable=is_stable(truncate(ideal, q)),
        q_used=q,
    )


def chain_order(ideal: MonomialIdeal) -> list:
    """Associated primes sorted along the inclusion chain; raises if they are not a chain."""
    primes = associated_primes(ideal)
    if not _is_chain(primes):
        raise NotAChainError(f"associated primes of {ideal} are not totally ordered")
    return sorted(primes, key=lambda p: len(p.support))
