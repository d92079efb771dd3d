"""Counts of direct-sum decompositions (DSDs) of GF(q)^n.

``D_q(n, m)`` counts DSDs with ``m`` blocks and ``D_q(n)`` counts all of
them. The starred variants count DSDs having a block that contains one fixed
nonzero vector. All values are exact Python integers; ``q`` may be any
integer ``>= 1`` and ``q = 1`` reproduces the Stirling and Bell numbers.

Conventions for the empty space: ``D_q(0, 0) = D_q(0) = 1`` and the starred
counts also give 1 at ``n = m = 0``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import factorial

from .partitions import PartCountSignature, signatures_of, signatures_with_parts
from .qarith import check_q, exact_div, gaussian_binomial, q_factorial

__all__ = [
    "DsdCache",
    "DsdCountTable",
    "dsd_count_for_signature",
    "dsd_stirling",
    "dsd_bell",
    "dsd_bell_by_rows",
    "dsd_bell_by_signature",
    "basis_count",
    "dsd_stirling_star",
    "dsd_bell_star",
    "dsd_nonstar_complement",
    "knuth_generalized_stirling",
    "build_table",
]


def _check_n(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {n!r}")


def dsd_count_for_signature(sig: PartCountSignature, q: int) -> int:
    """Number of DSDs of GF(q)^n whose block dimensions follow ``sig``."""
    check_q(q)
    n = sig.n
    denom = 1
    square_sum = 0
    for k, a in enumerate(sig.parts, start=1):
        denom *= factorial(a) * q_factorial(k, q) ** a
        square_sum += a * k * k
    twice_exponent = n * n - square_sum
    if twice_exponent % 2:
        raise ArithmeticError(f"odd exponent {twice_exponent} for signature {sig}")
    return exact_div(q_factorial(n, q) * q ** (twice_exponent // 2), denom)


class DsdCache:
    """Memo of ``D_q(k, m)`` and ``D_q(k)`` for a single ``q``.

    Passed explicitly to the starred sums. Concurrent fills compute the same
    value, so the lock only guards the dict writes.
    """

    def __init__(self, q: int):
        check_q(q)
        self.q = q
        self._stirling: dict[tuple[int, int], int] = {}
        self._bell: dict[int, int] = {}
        self._lock = threading.Lock()

    def stirling(self, n: int, m: int) -> int:
        key = (n, m)
        if key not in self._stirling:
            value = _dsd_stirling(n, m, self.q)
            with self._lock:
                self._stirling[key] = value
        return self._stirling[key]

    def bell(self, n: int) -> int:
        if n not in self._bell:
            value = _dsd_bell(n, self.q)
            with self._lock:
                self._bell[n] = value
        return self._bell[n]


def _cache_for(q: int, cache: DsdCache | None) -> DsdCache:
    if cache is None:
        return DsdCache(q)
    if cache.q != q:
        raise ValueError(f"cache built for q={cache.q}, not q={q}")
    return cache


def _dsd_stirling(n: int, m: int, q: int) -> int:
    if m > n:
        return 0
    return sum(dsd_count_for_signature(sig, q) for sig in signatures_with_parts(n, m))


def _dsd_bell(n: int, q: int) -> int:
    return sum(dsd_count_for_signature(sig, q) for sig in signatures_of(n))


def dsd_stirling(n: int, m: int, q: int) -> int:
    """``D_q(n, m)``: DSDs of GF(q)^n with exactly ``m`` blocks."""
    _check_n(n)
    _check_n(m, "m")
    check_q(q)
    return _dsd_stirling(n, m, q)


def dsd_bell(n: int, q: int) -> int:
    """``D_q(n)``: all DSDs of GF(q)^n, summed over signatures.

    :func:`dsd_bell_by_rows` reaches the same number through ``D_q(n, m)``.
    """
    _check_n(n)
    check_q(q)
    return _dsd_bell(n, q)


def dsd_bell_by_rows(n: int, q: int) -> int:
    _check_n(n)
    check_q(q)
    if n == 0:
        return 1
    return sum(_dsd_stirling(n, m, q) for m in range(1, n + 1))


def dsd_bell_by_signature(n: int, q: int) -> dict[PartCountSignature, int]:
    """Per-signature breakdown of ``D_q(n)``."""
    _check_n(n)
    check_q(q)
    return {sig: dsd_count_for_signature(sig, q) for sig in signatures_of(n)}


def basis_count(n: int, q: int) -> int:
    """Number of unordered bases of GF(q)^n, ``[n]_q! q^C(n,2) (q-1)^n / n!``.

    Cross-checked against ``D_q(n, n) (q-1)^n`` on every call.
    """
    _check_n(n)
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"basis_count needs q >= 2, got {q!r}")
    value = exact_div(q_factorial(n, q) * q ** (n * (n - 1) // 2) * (q - 1) ** n, factorial(n))
    via_blocks = _dsd_stirling(n, n, q) * (q - 1) ** n
    if value != via_blocks:
        raise ArithmeticError(f"basis count {value} != D_q(n,n)(q-1)^n = {via_blocks}")
    return value


def dsd_stirling_star(n: int, m: int, q: int, cache: DsdCache | None = None) -> int:
    """``D*_q(n, m)``: DSDs with ``m`` blocks, one of which holds a fixed nonzero vector."""
    _check_n(n)
    _check_n(m, "m")
    check_q(q)
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0:
        return 0
    cache = _cache_for(q, cache)
    return sum(
        gaussian_binomial(n - 1, k, q) * q ** (k * (n - k)) * cache.stirling(k, m - 1)
        for k in range(n)
    )


def dsd_bell_star(n: int, q: int, cache: DsdCache | None = None) -> int:
    """``D*_q(n)``: DSDs having a block that holds a fixed nonzero vector."""
    _check_n(n)
    check_q(q)
    if n == 0:
        return 1
    cache = _cache_for(q, cache)
    return sum(
        gaussian_binomial(n - 1, k, q) * q ** (k * (n - k)) * cache.bell(k)
        for k in range(n)
    )


def dsd_nonstar_complement(n: int, m: int | None, q: int, cache: DsdCache | None = None) -> int:
    """DSDs in which no block contains the fixed vector.

    ``m=None`` gives the total over all block counts.
    """
    cache = _cache_for(q, cache)
    if m is None:
        value = dsd_bell(n, q) - dsd_bell_star(n, q, cache)
    else:
        value = dsd_stirling(n, m, q) - dsd_stirling_star(n, m, q, cache)
    if value < 0:
        raise ArithmeticError(f"starred count exceeds unstarred at n={n}, m={m}, q={q}")
    return value


def knuth_generalized_stirling(n: int, m: int, q: int) -> int:
    """Knuth's q-recurrence ``{n+1, m} = [m]_q {n, m} + {n, m-1}``.

    Only for comparison: these numbers do NOT count DSDs (``{n, n}_q = 1``
    whereas ``D_q(n, n)`` counts bases).
    """
    _check_n(n)
    _check_n(m, "m")
    check_q(q)
    row = [1] + [0] * m
    for _ in range(n):
        nxt = [0] * (m + 1)
        weight = 0  # [j]_q accumulated incrementally
        power = 1
        for j in range(1, m + 1):
            weight += power
            power *= q
            nxt[j] = weight * row[j] + row[j - 1]
        row = nxt
    return row[m]


@dataclass
class DsdCountTable:
    """Triangle of ``D_q(n, m)`` (or ``D*_q(n, m)``) for ``0 <= m <= n <= max_n``."""

    q: int
    max_n: int
    starred: bool
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def entry(self, n: int, m: int) -> int:
        if m > n:
            return 0
        return self.entries[(n, m)]

    def row(self, n: int) -> list[int]:
        return [self.entries[(n, m)] for m in range(n + 1)]

    def total(self, n: int) -> int:
        return sum(self.row(n))

    def totals(self) -> list[int]:
        return [self.total(n) for n in range(self.max_n + 1)]


def build_table(q: int, max_n: int, starred: bool = False) -> DsdCountTable:
    """Fill the whole triangle and check each row sum against the direct total."""
    check_q(q)
    _check_n(max_n, "max_n")
    cache = DsdCache(q)
    table = DsdCountTable(q=q, max_n=max_n, starred=starred)
    for n in range(max_n + 1):
        for m in range(n + 1):
            if starred:
                value = dsd_stirling_star(n, m, q, cache)
            else:
                value = cache.stirling(n, m)
            table.entries[(n, m)] = value
        expected = dsd_bell_star(n, q, cache) if starred else cache.bell(n)
        if table.total(n) != expected:
            raise ArithmeticError(f"row {n} sums to {table.total(n)}, expected {expected}")
    return table
