"""Brute-force linear algebra over GF(q)^n for prime q.

This module is the ground truth for the closed formulas in
:mod:`qdsd.dsdcount`: it builds every subspace explicitly, searches for all
direct-sum decompositions, and counts them.

Vectors are encoded as integers with the first coordinate most significant,
so in GF(2)^3 the vector ``(1, 0, 0)`` is 4. Subspaces are identified by
their RREF basis and ordered by ``(dim, row encodings)``. For ``q = 2`` the
"paper notation" names a vector by the set of basis letters in its support
(``a`` for the first coordinate, ``ab`` for ``(1, 1, 0)``, ...).
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .partitions import PartCountSignature

__all__ = [
    "DEFAULT_LIMIT",
    "ResourceLimitError",
    "GFVector",
    "Subspace",
    "Dsd",
    "is_prime",
    "subspace_span",
    "zero_subspace",
    "enumerate_subspaces",
    "intersect_dim",
    "enumerate_dsds",
    "count_dsds",
    "count_dsds_by_signature",
    "count_disjoint_subspaces",
    "parse_vector",
]

DEFAULT_LIMIT = 4096
LETTERS = "abcdefghijklmnopqrstuvwxyz"


class ResourceLimitError(RuntimeError):
    """The ambient space is larger than the configured enumeration cap."""


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q**0.5) + 1))


def _check_field(n: int, q: int, limit: int | None = DEFAULT_LIMIT) -> None:
    if not is_prime(q):
        raise ValueError(f"brute-force enumeration needs prime q, got {q}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if limit is not None and q**n > limit:
        raise ResourceLimitError(f"GF({q})^{n} has {q**n} vectors, above the limit {limit}")


def _encode(coords, q: int) -> int:
    code = 0
    for c in coords:
        code = code * q + int(c)
    return code


@dataclass(frozen=True, order=True)
class GFVector:
    q: int
    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(coords)}")
        if any(not 0 <= c < self.q for c in coords):
            raise ValueError(f"coordinates must lie in [0, {self.q}): {coords}")

    @classmethod
    def from_int(cls, code: int, q: int, n: int) -> "GFVector":
        if not 0 <= code < q**n:
            raise ValueError(f"code {code} out of range for GF({q})^{n}")
        coords = []
        for _ in range(n):
            code, c = divmod(code, q)
            coords.append(c)
        return cls(q, n, tuple(reversed(coords)))

    def encode(self) -> int:
        return _encode(self.coords, self.q)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "GFVector") -> "GFVector":
        _same_ambient(self, other)
        return GFVector(self.q, self.n, tuple((a + b) % self.q for a, b in zip(self.coords, other.coords)))

    def scale(self, c: int) -> "GFVector":
        return GFVector(self.q, self.n, tuple((c * a) % self.q for a in self.coords))

    def digits(self) -> str:
        if self.q > 10:
            return ".".join(map(str, self.coords))
        return "".join(map(str, self.coords))

    def paper(self) -> str:
        if self.q != 2:
            raise ValueError("paper notation is only defined for q = 2")
        if self.n > len(LETTERS):
            raise ValueError("paper notation supports n <= 26")
        return "".join(LETTERS[i] for i, c in enumerate(self.coords) if c) or "0"

    def __str__(self):
        return self.digits()


def _same_ambient(a, b) -> None:
    if (a.q, a.n) != (b.q, b.n):
        raise ValueError(f"ambient mismatch: GF({a.q})^{a.n} vs GF({b.q})^{b.n}")


def parse_vector(text: str, q: int, n: int) -> GFVector:
    """Parse ``"110"`` (digits, first coordinate leftmost) or, for ``q = 2``, ``"ab"``."""
    text = text.strip()
    if q <= 10 and len(text) == n and text.isdigit():
        return GFVector(q, n, tuple(int(ch) for ch in text))
    if "." in text:
        parts = text.split(".")
        if len(parts) == n and all(part.isdigit() for part in parts):
            return GFVector(q, n, tuple(int(part) for part in parts))
    if q == 2 and text and text.isalpha() and text.islower():
        coords = [0] * n
        for ch in text:
            idx = LETTERS.index(ch)
            if idx >= n or coords[idx]:
                raise ValueError(f"bad paper-notation vector {text!r} for n={n}")
            coords[idx] = 1
        return GFVector(q, n, tuple(coords))
    raise ValueError(f"cannot parse {text!r} as a vector of GF({q})^{n}")


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n given by its reduced row echelon basis."""

    q: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> list[GFVector]:
        return [GFVector(self.q, self.n, row) for row in self.rows]

    @cached_property
    def encoding(self) -> tuple[int, ...]:
        return tuple(_encode(row, self.q) for row in self.rows)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.dim, self.encoding)

    def __lt__(self, other: "Subspace") -> bool:
        return self.sort_key() < other.sort_key()

    def elements(self) -> Iterator[GFVector]:
        """All ``q**dim`` vectors, zero first."""
        for coeffs in itertools.product(range(self.q), repeat=self.dim):
            coords = [0] * self.n
            for c, row in zip(coeffs, self.rows):
                for j, x in enumerate(row):
                    coords[j] = (coords[j] + c * x) % self.q
            yield GFVector(self.q, self.n, tuple(coords))

    def contains(self, v: GFVector) -> bool:
        _same_ambient(self, v)
        return _rank(list(self.rows) + [v.coords], self.q, self.n) == self.dim

    def paper(self) -> str:
        names = sorted((v.paper() for v in self.elements() if not v.is_zero()), key=lambda s: (len(s), s))
        return "{" + ",".join(names) + "}"

    def digits(self) -> str:
        return ",".join(GFVector(self.q, self.n, row).digits() for row in self.rows)


def _as_matrix(rows, n: int) -> np.ndarray:
    mat = np.zeros((len(rows), n), dtype=np.int64)
    for i, row in enumerate(rows):
        mat[i] = row
    return mat


@lru_cache(maxsize=None)
def _inverse_table(q: int) -> np.ndarray:
    return kernels.inverse_table(q)


def _rank(rows, q: int, n: int) -> int:
    if not rows:
        return 0
    return int(kernels.rank_mod_p(_as_matrix(rows, n), q, _inverse_table(q)))


def zero_subspace(q: int, n: int) -> Subspace:
    return Subspace(q, n, ())


def subspace_span(vectors: Iterable[GFVector], q: int | None = None, n: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``vectors``.

    ``q`` and ``n`` are only needed when ``vectors`` is empty.
    """
    vectors = list(vectors)
    if vectors:
        q, n = vectors[0].q, vectors[0].n
        for v in vectors[1:]:
            _same_ambient(vectors[0], v)
    if q is None or n is None:
        raise ValueError("q and n are required to span an empty set")
    _check_field(n, q, limit=None)
    if not vectors:
        return zero_subspace(q, n)
    rref, rank = kernels.rref_mod_p(_as_matrix([v.coords for v in vectors], n), q, _inverse_table(q))
    return Subspace(q, n, tuple(tuple(int(x) for x in rref[i]) for i in range(rank)))


def intersect_dim(a: Subspace, b: Subspace) -> int:
    """``dim(A & B) = dim A + dim B - dim(A + B)``."""
    _same_ambient(a, b)
    return a.dim + b.dim - _rank(list(a.rows) + list(b.rows), a.q, a.n)


def _rref_rows(n: int, q: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            yield tuple(tuple(row) for row in rows)


@lru_cache(maxsize=64)
def _subspaces(n: int, q: int, k: int) -> tuple[Subspace, ...]:
    found = [Subspace(q, n, rows) for rows in _rref_rows(n, q, k)]
    found.sort(key=Subspace.sort_key)
    return tuple(found)


def enumerate_subspaces(n: int, q: int, k: int, limit: int | None = DEFAULT_LIMIT) -> Iterator[Subspace]:
    """Every ``k``-dimensional subspace of GF(q)^n once, in canonical order."""
    _check_field(n, q, limit)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    yield from _subspaces(n, q, k)


@dataclass(frozen=True)
class Dsd:
    q: int
    n: int
    blocks: tuple[Subspace, ...]

    @property
    def m(self) -> int:
        return len(self.blocks)

    def signature(self) -> PartCountSignature:
        counts = [0] * self.n
        for block in self.blocks:
            counts[block.dim - 1] += 1
        return PartCountSignature(self.n, tuple(counts))

    def is_valid(self) -> bool:
        """Nonzero blocks in canonical order whose dimensions add up to the span's."""
        if any(b.dim == 0 or (b.q, b.n) != (self.q, self.n) for b in self.blocks):
            return False
        if list(self.blocks) != sorted(self.blocks, key=Subspace.sort_key):
            return False
        rows = [row for b in self.blocks for row in b.rows]
        return len(rows) == self.n and _rank(rows, self.q, self.n) == self.n

    def has_block_containing(self, v: GFVector) -> bool:
        return any(b.contains(v) for b in self.blocks)

    def paper(self) -> str:
        return "{" + ",".join(b.paper() for b in self.blocks) + "}"

    def digits(self) -> str:
        return "\t".join(b.digits() for b in self.blocks)


class _CandidateTable:
    """All nonzero subspaces of GF(q)^n packed for the search kernel."""

    def __init__(self, n: int, q: int):
        self.n = n
        self.q = q
        self.subspaces = [s for k in range(1, n + 1) for s in _subspaces(n, q, k)]
        self.dims = np.array([s.dim for s in self.subspaces], dtype=np.int64)
        self.bases = np.zeros((len(self.subspaces), max(n, 1), max(n, 1)), dtype=np.int64)
        for i, s in enumerate(self.subspaces):
            for r, row in enumerate(s.rows):
                self.bases[i, r] = row
        self.inv = _inverse_table(q)

    def accept_mask(self, contains: GFVector | None) -> np.ndarray:
        if contains is None:
            return np.zeros(len(self.subspaces), dtype=np.bool_)
        return np.array([s.contains(contains) for s in self.subspaces], dtype=np.bool_)


@lru_cache(maxsize=16)
def _candidates(n: int, q: int) -> _CandidateTable:
    return _CandidateTable(n, q)


def _resolve_contains(contains, n: int, q: int) -> GFVector | None:
    if contains is None:
        return None
    if isinstance(contains, str):
        contains = parse_vector(contains, q, n)
    if (contains.q, contains.n) != (q, n):
        raise ValueError(f"vector {contains} is not in GF({q})^{n}")
    if contains.is_zero():
        raise ValueError("the designated vector must be nonzero")
    return contains


def _chunks(size: int, parallel: bool) -> list[tuple[int, int]]:
    if not parallel or size == 0:
        return [(0, size)]
    workers = os.cpu_count() or 1
    step = max(1, -(-size // (4 * workers)))
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)]


def _search(table: _CandidateTable, m: int | None, accept, need_accept: bool, lo: int, hi: int, fill: bool):
    n = table.n
    m_target = -1 if m is None else m
    dummy = np.zeros((0, n), dtype=np.int64)
    count = kernels.dsd_search(
        table.bases, table.dims, n, table.q, table.inv, m_target, accept, need_accept, lo, hi, dummy, False
    )
    if not fill:
        return count
    out = np.empty((count, n), dtype=np.int64)
    kernels.dsd_search(
        table.bases, table.dims, n, table.q, table.inv, m_target, accept, need_accept, lo, hi, out, True
    )
    return out


def dsd_index_array(
    n: int,
    q: int,
    m: int | None = None,
    contains=None,
    limit: int | None = DEFAULT_LIMIT,
    parallel: bool = False,
) -> np.ndarray:
    """Rows of candidate-block indices, one row per DSD, in canonical order.

    Intended for bulk counting; :func:`enumerate_dsds` wraps this into
    :class:`Dsd` objects. ``n = 0`` is handled by the callers.
    """
    _check_field(n, q, limit)
    vec = _resolve_contains(contains, n, q)
    table = _candidates(n, q)
    accept = table.accept_mask(vec)
    chunks = _chunks(len(table.subspaces), parallel)
    if len(chunks) == 1:
        return _search(table, m, accept, vec is not None, 0, len(table.subspaces), True)
    with ThreadPoolExecutor() as pool:
        parts = list(pool.map(lambda c: _search(table, m, accept, vec is not None, c[0], c[1], True), chunks))
    return np.concatenate(parts) if parts else np.empty((0, n), dtype=np.int64)


def enumerate_dsds(
    n: int,
    q: int,
    m: int | None = None,
    contains=None,
    limit: int | None = DEFAULT_LIMIT,
    parallel: bool = False,
) -> Iterator[Dsd]:
    """Every DSD of GF(q)^n once, optionally with ``m`` blocks and/or a block containing ``contains``."""
    _check_field(n, q, limit)
    vec = _resolve_contains(contains, n, q)
    if n == 0:
        if m in (None, 0):
            yield Dsd(q, 0, ())
        return
    table = _candidates(n, q)
    rows = dsd_index_array(n, q, m, vec, limit, parallel)
    subspaces = table.subspaces
    for row in rows:
        yield Dsd(q, n, tuple(subspaces[i] for i in row if i >= 0))


def count_dsds(n: int, q: int, m: int | None = None, contains=None, limit: int | None = DEFAULT_LIMIT) -> int:
    """Number of DSDs found by the search, without materializing them."""
    _check_field(n, q, limit)
    vec = _resolve_contains(contains, n, q)
    if n == 0:
        return 1 if m in (None, 0) else 0
    table = _candidates(n, q)
    return int(_search(table, m, table.accept_mask(vec), vec is not None, 0, len(table.subspaces), False))


def count_dsds_by_signature(
    n: int, q: int, limit: int | None = DEFAULT_LIMIT, parallel: bool = False
) -> dict[PartCountSignature, int]:
    """Histogram of enumerated DSDs by block-dimension signature."""
    _check_field(n, q, limit)
    if n == 0:
        return {PartCountSignature(0, ()): 1}
    table = _candidates(n, q)
    rows = dsd_index_array(n, q, limit=limit, parallel=parallel)
    dim_lookup = np.append(table.dims, 0)  # index -1 -> padding
    dims = dim_lookup[rows]
    hist: Counter = Counter()
    keys, counts = np.unique(dims, axis=0, return_counts=True) if len(dims) else ([], [])
    for key, c in zip(keys, counts):
        sizes = [int(d) for d in key if d > 0]
        hist[PartCountSignature.from_parts(sizes)] += int(c)
    return dict(hist)


def count_disjoint_subspaces(w: Subspace, k: int, limit: int | None = DEFAULT_LIMIT) -> int:
    """Number of ``k``-dim subspaces meeting ``w`` only in the zero vector."""
    if not 0 <= k <= w.n:
        return 0
    return sum(1 for u in enumerate_subspaces(w.n, w.q, k, limit) if intersect_dim(u, w) == 0)
