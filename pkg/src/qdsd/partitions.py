"""Number partitions in part-count form and classical set-partition counts.

A partition of ``n`` is stored as multiplicities ``a_1..a_n`` where ``a_k``
is the number of parts equal to ``k``. Signatures are generated in
descending lexicographic order of ``(a_n, ..., a_1)``, so for ``n = 4`` the
order is ``4, 3+1, 2+2, 2+1+1, 1+1+1+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator

from .qarith import exact_div

__all__ = [
    "PartCountSignature",
    "signatures_of",
    "signatures_with_parts",
    "set_partition_count",
    "stirling2",
    "stirling2_summation",
    "bell",
    "bell_summation",
]


@dataclass(frozen=True)
class PartCountSignature:
    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if self.n < 0 or len(parts) != self.n:
            raise ValueError(f"need exactly n={self.n} multiplicities, got {len(parts)}")
        if any(a < 0 for a in parts):
            raise ValueError(f"negative multiplicity in {parts}")
        if sum(a * k for k, a in enumerate(parts, start=1)) != self.n:
            raise ValueError(f"multiplicities {parts} do not partition {self.n}")

    @classmethod
    def from_parts(cls, sizes) -> "PartCountSignature":
        """Build from a list of part sizes, e.g. ``[2, 1]`` -> ``a_1 = a_2 = 1``."""
        sizes = list(sizes)
        n = sum(sizes)
        counts = [0] * n
        for size in sizes:
            if size < 1:
                raise ValueError(f"part sizes must be positive, got {size}")
            counts[size - 1] += 1
        return cls(n, tuple(counts))

    def a(self, k: int) -> int:
        """Multiplicity of part ``k`` (1-based)."""
        return self.parts[k - 1] if 1 <= k <= self.n else 0

    def block_count(self) -> int:
        return sum(self.parts)

    def part_sizes(self) -> list[int]:
        """Part sizes in nondecreasing order."""
        return [k for k, a in enumerate(self.parts, start=1) for _ in range(a)]

    def __str__(self):
        terms = [f"a{k}={a}" for k, a in enumerate(self.parts, start=1) if a]
        return "{" + ",".join(terms) + "}"


def _multiplicities(remaining: int, k: int, acc: list[int]) -> Iterator[list[int]]:
    # acc holds a_n..a_{k+1}; choose a_k from largest to smallest
    if k == 0:
        if remaining == 0:
            yield acc
        return
    for a in range(remaining // k, -1, -1):
        acc.append(a)
        yield from _multiplicities(remaining - a * k, k - 1, acc)
        acc.pop()


def signatures_of(n: int) -> Iterator[PartCountSignature]:
    """Every partition of ``n`` exactly once, largest parts first."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for high_to_low in _multiplicities(n, n, []):
        yield PartCountSignature(n, tuple(reversed(high_to_low)))


def signatures_with_parts(n: int, m: int) -> Iterator[PartCountSignature]:
    """Partitions of ``n`` into exactly ``m`` parts."""
    for sig in signatures_of(n):
        if sig.block_count() == m:
            yield sig


def set_partition_count(sig: PartCountSignature) -> int:
    """Set partitions of an ``n``-set whose block sizes follow ``sig``."""
    denom = 1
    for k, a in enumerate(sig.parts, start=1):
        denom *= factorial(a) * factorial(k) ** a
    return exact_div(factorial(sig.n), denom)


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind via the sum over signatures."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if m > n:
        return 0
    return sum(set_partition_count(sig) for sig in signatures_with_parts(n, m))


def bell(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(stirling2(n, m) for m in range(1, n + 1))


def stirling2_summation(n: int, m: int) -> int:
    """``S(n, m) = sum_k C(n-1, k) S(k, m-1)``, an independent route to :func:`stirling2`."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    # table[k][j] = S(k, j) built up with the same summation
    table = [[1 if j == 0 else 0 for j in range(m + 1)]]
    for row in range(1, n + 1):
        table.append(
            [0]
            + [
                sum(comb(row - 1, k) * table[k][j - 1] for k in range(row))
                for j in range(1, m + 1)
            ]
        )
    return table[n][m]


def bell_summation(n: int) -> int:
    """``B(n) = sum_k C(n-1, k) B(k)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    values = [1]
    for row in range(1, n + 1):
        values.append(sum(comb(row - 1, k) * values[k] for k in range(row)))
    return values[n]
