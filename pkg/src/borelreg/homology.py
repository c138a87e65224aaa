"""Reduced simplicial homology over Q or F_p with exact elimination."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import DomainError

__all__ = [
    "FieldSpec", "SimplicialComplex", "ExactMatrix",
    "boundary_matrix", "rank", "reduced_homology_ranks",
]


MAX_CHARACTERISTIC = 2**31


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: ``characteristic == 0`` means Q, otherwise F_p.

    Prime fields are limited to ``p < 2**31`` so that elimination fits in int64.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if not 2 <= p < MAX_CHARACTERISTIC:
            raise DomainError(f"characteristic must be 0 or a prime below 2**31, got {p}")
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """``"q"`` for the rationals, ``"f<p>"`` for the prime field F_p."""
        text = text.strip().lower()
        if text in ("q", "qq", "0"):
            return cls(0)
        if text.startswith("f") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise DomainError(f"unknown field {text!r}; use 'q' or 'f<p>'")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


class SimplicialComplex:
    """A finite abstract simplicial complex on a labelled vertex set.

    Faces are sorted tuples of vertex labels.  The void complex has no faces
    at all; the irrelevant complex has only the empty face.
    """

    __slots__ = ("vertices", "faces")

    def __init__(self, vertices: Iterable, faces: Iterable[Iterable]):
        self.vertices = tuple(sorted(vertices))
        faces = frozenset(tuple(sorted(f)) for f in faces)
        vset = set(self.vertices)
        for f in faces:
            if not vset.issuperset(f):
                raise DomainError(f"face {f} uses unknown vertices")
            for k in range(len(f)):
                if f[:k] + f[k + 1:] not in faces:
                    raise DomainError(f"face {f} is missing its facet {f[:k] + f[k + 1:]}")
        self.faces = faces

    @classmethod
    def from_facets(cls, vertices, facets) -> "SimplicialComplex":
        faces = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            for k in range(len(facet) + 1):
                faces.update(combinations(facet, k))
        return cls(vertices, faces)

    @classmethod
    def simplex(cls, vertices) -> "SimplicialComplex":
        return cls.from_facets(vertices, [vertices])

    @classmethod
    def void(cls, vertices=()) -> "SimplicialComplex":
        return cls(vertices, ())

    @classmethod
    def irrelevant(cls, vertices=()) -> "SimplicialComplex":
        return cls(vertices, [()])

    @property
    def dimension(self) -> int:
        """Largest face dimension; -1 for the irrelevant and the void complex."""
        return max((len(f) - 1 for f in self.faces), default=-1)

    @property
    def is_void(self) -> bool:
        return not self.faces

    def faces_of_dim(self, k: int) -> list:
        return sorted(f for f in self.faces if len(f) == k + 1)

    def f_vector(self) -> dict:
        """Number of faces in each dimension ``-1 .. dimension``."""
        counts = {k: 0 for k in range(-1, self.dimension + 1)}
        for f in self.faces:
            counts[len(f) - 1] += 1
        return counts

    def cone(self, apex) -> "SimplicialComplex":
        if apex in self.vertices:
            raise DomainError(f"apex {apex!r} is already a vertex")
        faces = set(self.faces)
        faces.update(tuple(sorted(f + (apex,))) for f in self.faces)
        return SimplicialComplex(self.vertices + (apex,), faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.faces == other.faces

    def __hash__(self):
        return hash((self.vertices, self.faces))

    def __repr__(self):
        return f"SimplicialComplex({list(self.vertices)}, {sorted(self.faces, key=lambda f: (len(f), f))})"


@dataclass
class ExactMatrix:
    rows: int
    cols: int
    entries: list = field(default_factory=list)  # list of rows of Python ints

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DomainError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def zeros(cls, rows, cols) -> "ExactMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])


def boundary_matrix(C: SimplicialComplex, k: int) -> ExactMatrix:
    """Matrix of the boundary map from k-faces to (k-1)-faces.

    For ``k == 0`` this is the augmentation onto the empty face, a row of ones.
    Faces are ordered lexicographically as sorted tuples; removing the vertex in
    position ``p`` carries the sign ``(-1)**p``.
    """
    if k < 0:
        raise DomainError("boundary maps start in dimension 0")
    cols = C.faces_of_dim(k)
    rows = C.faces_of_dim(k - 1)
    row_index = {f: r for r, f in enumerate(rows)}
    M = ExactMatrix.zeros(len(rows), len(cols))
    for c, face in enumerate(cols):
        for p in range(len(face)):
            M.entries[row_index[face[:p] + face[p + 1:]]][c] = -1 if p % 2 else 1
    return M


def _rank_bareiss(rows):
    """Rank over Q by fraction-free elimination on integer rows."""
    A = [list(r) for r in rows]
    if not A or not A[0]:
        return 0
    m, n = len(A), len(A[0])
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c + 1, n):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def _rank_mod_p(rows, p):
    A = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
    if A.size == 0:
        return 0
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + nz[0]
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        below = A[r + 1:, c].copy()
        if below.any():
            A[r + 1:] = (A[r + 1:] - np.outer(below, A[r])) % p
        r += 1
    return r


def rank(M: ExactMatrix, field: FieldSpec | None = None) -> int:
    """Exact rank: Bareiss over Q, plain Gaussian elimination over F_p."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if field is None or field.characteristic == 0:
        return _rank_bareiss(M.entries)
    return _rank_mod_p(M.entries, field.characteristic)


def reduced_homology_ranks(C: SimplicialComplex, field: FieldSpec | None = None) -> dict:
    """Dimensions of the reduced homology groups, keyed by ``k = -1 .. dim C``.

    >>> reduced_homology_ranks(SimplicialComplex.irrelevant())
    {-1: 1}
    """
    top = C.dimension
    f = C.f_vector()
    ranks = {k: rank(boundary_matrix(C, k), field) for k in range(0, top + 1)}
    ranks[-1] = 0
    ranks[top + 1] = 0
    return {k: f[k] - ranks[k] - ranks[k + 1] for k in range(-1, top + 1)}
