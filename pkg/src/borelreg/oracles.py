"""Slow reference implementations used to cross-check the fast routines."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .monomials import Monomial, MonomialIdeal, contains, monomials_of_degree, stats
from .structure import intersect_all, irreducible_decomposition


def monomials_up_to(n: int, D: int):
    """All monomials of degree ``0 .. D`` in ``n`` variables."""
    for d in range(D + 1):
        yield from monomials_of_degree(n, d)


def brute_force_is_stable(ideal: MonomialIdeal, slack: int = 3) -> bool:
    """Check the exchange condition on every monomial of ``I`` of degree at most
    ``deg(I) + slack`` rather than on generators only."""
    top = max(g.degree for g in ideal.gens) + slack
    for u in monomials_up_to(ideal.n, top):
        if u.is_one or not contains(ideal, u):
            continue
        m = u.max_index
        for j in range(1, m):
            exps = list(u)
            exps[j - 1] += 1
            exps[m - 1] -= 1
            if not contains(ideal, Monomial._raw(tuple(exps))):
                return False
    return True


def saturate_prefix_by_components(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """``I : (x_1..x_j)^oo`` by dropping every irreducible component whose radical
    contains ``x_1, ..., x_j`` and intersecting the rest."""
    if ideal.is_unit:
        return ideal
    prefix = set(range(1, j + 1))
    keep = [c.as_ideal for c in irreducible_decomposition(ideal)
            if not prefix <= set(c.support)]
    return intersect_all(keep, ideal.n)


def rank_by_fractions(rows) -> int:
    """Rank over Q by textbook elimination on ``Fraction`` entries."""
    A = [[Fraction(x) for x in r] for r in rows]
    if not A or not A[0]:
        return 0
    r = 0
    for c in range(len(A[0])):
        pivot = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def koszul_betti(n: int) -> dict:
    """Graded Betti numbers of the maximal ideal: ``beta_{i,i+1} = C(n, i+1)``."""
    return {(i, i + 1): comb(n, i + 1) for i in range(n)}


def q_of(ideal: MonomialIdeal) -> int:
    return stats(ideal).q
