"""Exponent-vector monomials and monomial ideals in K[x_1, ..., x_n].

Ideals are stored by their minimal generating set, sorted in graded
lexicographic descending order, so two ideals are equal exactly when their
generator tuples are equal.  Exponents are plain Python integers and never
overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .errors import (RingMismatchError, UnitIdealError, UnitMonomialError,
                     ZeroIdealError, IndexOutOfRangeError, DomainError)

__all__ = [
    "RingContext", "Monomial", "MonomialIdeal", "IdealStats",
    "divides", "max_index", "lcm", "gcd", "minimalize", "contains",
    "colon_by_monomial", "intersect", "equals", "truncate", "stats",
    "monomials_of_degree", "variable", "maximal_ideal_power",
]


@dataclass(frozen=True)
class RingContext:
    num_vars: int

    def __post_init__(self):
        if not isinstance(self.num_vars, int) or self.num_vars < 1:
            raise DomainError(f"num_vars must be a positive integer, got {self.num_vars!r}")

    def check_index(self, i):
        if not 1 <= i <= self.num_vars:
            raise IndexOutOfRangeError(
                f"variable index {i} out of range 1..{self.num_vars}")


class Monomial(tuple):
    """An exponent vector; entry ``i - 1`` is the exponent of ``x_i``.

    >>> u = Monomial((2, 0, 1))
    >>> u.degree, u.max_index
    (3, 3)
    """

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise DomainError(f"exponents must be non-negative integers, got {exps!r}")
        if not exps:
            raise DomainError("a monomial needs at least one variable slot")
        return tuple.__new__(cls, exps)

    @classmethod
    def _raw(cls, exps):
        return tuple.__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls._raw((0,) * n)

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    @property
    def num_vars(self) -> int:
        return len(self)

    @property
    def ring(self) -> RingContext:
        return RingContext(len(self))

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def is_one(self) -> bool:
        return not any(self)

    @property
    def support(self) -> tuple:
        """1-based indices of the variables dividing this monomial."""
        return tuple(i + 1 for i, e in enumerate(self) if e)

    @property
    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    @property
    def max_index(self) -> int:
        return max_index(self)

    def times(self, other: "Monomial") -> "Monomial":
        _same_ring(self, other)
        return Monomial._raw(tuple(a + b for a, b in zip(self, other)))

    def over(self, other: "Monomial") -> "Monomial":
        """Exact quotient ``self / other``; ``other`` must divide ``self``."""
        if not divides(other, self):
            raise DomainError(f"{other} does not divide {self}")
        return Monomial._raw(tuple(a - b for a, b in zip(self, other)))

    def __repr__(self):
        return f"Monomial({tuple(self)!r})"

    def __str__(self):
        parts = []
        for i, e in enumerate(self, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def variable(i: int, n: int, power: int = 1) -> Monomial:
    """The monomial ``x_i ** power`` in ``n`` variables."""
    RingContext(n).check_index(i)
    exps = [0] * n
    exps[i - 1] = power
    return Monomial(exps)


def _same_ring(u, v):
    if len(u) != len(v):
        raise RingMismatchError(f"{len(u)} vs {len(v)} variables")


def divides(u: Monomial, v: Monomial) -> bool:
    _same_ring(u, v)
    return all(a <= b for a, b in zip(u, v))


def max_index(u: Monomial) -> int:
    """Largest ``i`` with ``x_i | u``.  Undefined for the unit monomial."""
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i + 1
    raise UnitMonomialError("max_index is undefined for the unit monomial")


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _same_ring(u, v)
    return Monomial._raw(tuple(a if a >= b else b for a, b in zip(u, v)))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _same_ring(u, v)
    return Monomial._raw(tuple(a if a <= b else b for a, b in zip(u, v)))


def _canonical_key(u):
    return (sum(u), tuple(u))


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All monomials of total degree ``d`` in ``n`` variables, lex descending."""
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield Monomial._raw(tuple(exps))


class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generating set G(I)."""

    __slots__ = ("ring", "gens", "_gen_set", "_hash")

    def __init__(self, ring: RingContext | int, gens: Iterable[Sequence[int]] = ()):
        if isinstance(ring, int):
            ring = RingContext(ring)
        ideal = minimalize([Monomial(g) for g in gens], ring)
        self._init(ring, ideal.gens)

    def _init(self, ring, gens):
        self.ring = ring
        self.gens = gens
        self._gen_set = frozenset(gens)
        self._hash = None

    @classmethod
    def _from_minimal(cls, ring, gens):
        # caller guarantees gens is an antichain under divisibility
        obj = cls.__new__(cls)
        obj._init(ring, tuple(sorted(gens, key=_canonical_key, reverse=True)))
        return obj

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls._from_minimal(RingContext(n), ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls._from_minimal(RingContext(n), (Monomial.one(n),))

    @property
    def n(self) -> int:
        return self.ring.num_vars

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    def require_nonzero(self):
        if self.is_zero:
            raise ZeroIdealError("operation undefined for the zero ideal")

    def require_proper(self):
        if self.is_zero:
            raise ZeroIdealError("operation undefined for the zero ideal")
        if self.is_unit:
            raise UnitIdealError("operation undefined for the unit ideal")

    def __contains__(self, u):
        return contains(self, u)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.num_vars, self.gens))
        return self._hash

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {[tuple(g) for g in self.gens]!r})"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


@dataclass(frozen=True)
class IdealStats:
    deg: int
    m: int
    q: int


def minimalize(gens: Iterable[Monomial], ring: RingContext | int | None = None) -> MonomialIdeal:
    """Drop duplicates and every monomial divisible by another one in the list."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise DomainError("cannot infer the ring of an empty generator list")
        ring = RingContext(len(gens[0]))
    elif isinstance(ring, int):
        ring = RingContext(ring)
    n = ring.num_vars
    for g in gens:
        if len(g) != n:
            raise RingMismatchError(f"generator {g} does not have {n} exponents")
    kept = []
    # a divisor never has larger degree, so scanning by degree keeps the result minimal
    for g in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return MonomialIdeal._from_minimal(ring, kept)


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != ideal.n:
        raise RingMismatchError(f"monomial has {len(u)} exponents, ring has {ideal.n}")
    if u in ideal._gen_set:
        return True
    for g in ideal.gens:
        if all(a <= b for a, b in zip(g, u)):
            return True
    return False


def colon_by_monomial(ideal: MonomialIdeal, w: Monomial) -> MonomialIdeal:
    """The colon ideal ``I : (w)``."""
    if len(w) != ideal.n:
        raise RingMismatchError("monomial and ideal live in different rings")
    if w.is_one:
        return ideal
    quotients = (Monomial._raw(tuple(a - b if a > b else 0 for a, b in zip(g, w)))
                 for g in ideal.gens)
    return minimalize(quotients, ideal.ring)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    return minimalize((lcm(g, h) for g in I.gens for h in J.gens), I.ring)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    return I.gens == J.gens


def truncate(ideal: MonomialIdeal, e: int) -> MonomialIdeal:
    """The ideal ``I_{>=e}`` generated by the monomials of ``I`` of degree at least ``e``.

    Every generator of degree below ``e`` is multiplied by all monomials of the
    missing degree.  The degree-``e`` products are pairwise incomparable and none
    divides a generator of higher degree (that would contradict minimality of
    G(I)), so the result needs no further reduction.
    """
    if ideal.is_zero:
        raise ZeroIdealError("cannot truncate the zero ideal")
    if e < 0:
        raise DomainError("truncation degree must be non-negative")
    n = ideal.n
    if all(g.degree >= e for g in ideal.gens):
        return ideal
    high = [g for g in ideal.gens if g.degree > e]
    level = set()
    for g in ideal.gens:
        d = g.degree
        if d > e:
            continue
        for w in monomials_of_degree(n, e - d):
            level.add(Monomial._raw(tuple(a + b for a, b in zip(g, w))))
    return MonomialIdeal._from_minimal(ideal.ring, high + list(level))


def stats(ideal: MonomialIdeal) -> IdealStats:
    ideal.require_proper()
    deg = max(g.degree for g in ideal.gens)
    m = max(max_index(g) for g in ideal.gens)
    return IdealStats(deg=deg, m=m, q=m * (deg - 1) + 1)


def maximal_ideal_power(n: int, d: int) -> MonomialIdeal:
    """``(x_1, ..., x_n)^d``."""
    return MonomialIdeal._from_minimal(RingContext(n), list(monomials_of_degree(n, d)))
