"""Ideal generators for exhaustive and randomized verification runs."""

from __future__ import annotations

import random
from functools import reduce
from itertools import combinations, product
from typing import Iterator

from .monomials import (Monomial, MonomialIdeal, RingContext, intersect,
                        max_index, minimalize, monomials_of_degree, variable)
from .structure import IrreducibleComponent, chain_order

__all__ = [
    "enumerate_ideals", "random_irreducible", "random_borel_type",
    "random_antichain_ideal", "random_intersection_ideal", "random_stable_ideal",
    "random_mixed_ideal", "stable_closure", "prefix_normalize",
    "prefix_permutation", "pure_power_ideals",
]


def _comparable(u, v):
    return all(a <= b for a, b in zip(u, v)) or all(a >= b for a, b in zip(u, v))


def enumerate_ideals(n: int, dmax: int, gmax: int) -> Iterator[MonomialIdeal]:
    """Every monomial ideal with at most ``gmax`` minimal generators, all of degree
    ``1 .. dmax``, each exactly once.

    Ideals come out grouped by number of generators; inside a group the order is
    lexicographic in the list of non-unit monomials sorted by ascending degree
    (lex descending within a degree).
    """
    ring = RingContext(n)
    pool = [u for d in range(1, dmax + 1) for u in monomials_of_degree(n, d)]
    size = len(pool)
    # later[i]: indices j > i whose monomial is incomparable with pool[i]
    later = [frozenset(j for j in range(i + 1, size) if not _comparable(pool[i], pool[j]))
             for i in range(size)]

    def extend(chosen, allowed, k):
        if len(chosen) == k:
            yield MonomialIdeal._from_minimal(ring, [pool[i] for i in chosen])
            return
        for j in sorted(allowed):
            yield from extend(chosen + [j], allowed & later[j], k)

    for k in range(1, gmax + 1):
        yield from extend([], frozenset(range(size)), k)


def pure_power_ideals(n: int, amax: int) -> Iterator[tuple]:
    """Yield ``(indices, ideal)`` for every ideal ``(x_{i_1}^{a_1}, ..., x_{i_r}^{a_r})``
    with ``i_1 < ... < i_r`` in ``1..n`` and exponents in ``1..amax``."""
    for r in range(1, n + 1):
        for idx in combinations(range(1, n + 1), r):
            for exps in product(range(1, amax + 1), repeat=r):
                gens = [variable(i, n, a) for i, a in zip(idx, exps)]
                yield idx, MonomialIdeal._from_minimal(RingContext(n), gens)


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_irreducible(n: int, dmax: int, rng) -> IrreducibleComponent:
    """Random ``(x_1^{a_1}, ..., x_r^{a_r})`` with ``1 <= a_i <= dmax``."""
    rng = _rng(rng)
    r = rng.randint(1, n)
    return IrreducibleComponent(tuple((i, rng.randint(1, dmax)) for i in range(1, r + 1)), n)


def random_borel_type(n: int, dmax: int, components: int, seed) -> MonomialIdeal:
    """Intersection of ``components`` random irreducible ideals with prefix supports.

    Every associated prime of the result is some ``(x_1, ..., x_r)``, so the
    ideal is of Borel type by construction.
    """
    rng = _rng(seed)
    parts = [random_irreducible(n, dmax, rng).as_ideal for _ in range(components)]
    return reduce(intersect, parts)


def random_antichain_ideal(n: int, dmax: int, gmax: int, seed) -> MonomialIdeal:
    """Minimalization of up to ``gmax`` random monomials of degree ``1 .. dmax``."""
    rng = _rng(seed)
    count = rng.randint(1, gmax)
    gens = []
    for _ in range(count):
        d = rng.randint(1, dmax)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        gens.append(Monomial._raw(tuple(exps)))
    return minimalize(gens, n)


def random_intersection_ideal(n: int, dmax: int, gmax: int, seed) -> MonomialIdeal:
    """Intersection of two random ideals whose generators have degree at most
    ``dmax // 2`` (at least 1), so the result has degree at most ``dmax``
    whenever ``dmax >= 2``."""
    rng = _rng(seed)
    half = max(1, dmax // 2)
    I = random_antichain_ideal(n, half, gmax, rng)
    J = random_antichain_ideal(n, half, gmax, rng)
    return intersect(I, J)


def stable_closure(gens) -> MonomialIdeal:
    """Smallest stable ideal containing ``gens``.

    Closes the list under ``u -> x_j u / x_{m(u)}`` for ``j < m(u)``; all moves
    preserve degree, so the closure is finite.
    """
    gens = [Monomial(g) for g in gens]
    if not gens:
        raise ValueError("stable_closure needs at least one generator")
    seen = set(gens)
    todo = list(seen)
    while todo:
        u = todo.pop()
        if u.is_one:
            continue
        m = max_index(u)
        for j in range(1, m):
            exps = list(u)
            exps[j - 1] += 1
            exps[m - 1] -= 1
            v = Monomial._raw(tuple(exps))
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return minimalize(seen, len(gens[0]))


def random_stable_ideal(n: int, dmax: int, gmax: int, seed) -> MonomialIdeal:
    """Stable closure of a few random monomials."""
    return stable_closure(random_antichain_ideal(n, dmax, gmax, seed).gens)


_MIXED = (random_antichain_ideal, random_intersection_ideal, random_stable_ideal)


def random_mixed_ideal(nmax: int, dmax: int, gmax: int, seed) -> MonomialIdeal:
    """One ideal drawn from antichains, intersections or stable closures, with
    ``n`` chosen uniformly in ``2..nmax``."""
    rng = _rng(seed)
    n = rng.randint(min(2, nmax), nmax)
    d = rng.randint(1, dmax)
    maker = _MIXED[rng.randrange(len(_MIXED))]
    return maker(n, d, gmax, rng)


def prefix_permutation(ideal: MonomialIdeal) -> list:
    """Old variable indices listed in their new order.

    Variables of the smallest associated prime come first, then those added by
    the next prime along the chain, ties broken by original index, and any
    remaining variables last.
    """
    order = []
    for p in chain_order(ideal):
        order.extend(i for i in p.support if i not in order)
    order.extend(i for i in range(1, ideal.n + 1) if i not in order)
    return order


def prefix_normalize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Relabel variables so the associated primes become ``(x_1, ..., x_r)``.

    Only defined when the associated primes form a chain.
    """
    order = prefix_permutation(ideal)
    gens = [Monomial._raw(tuple(g[old - 1] for old in order)) for g in ideal.gens]
    return minimalize(gens, ideal.ring)
