"""Cross-check the closed formulas against exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import dsdcount, gfenum
from .partitions import signatures_of


@dataclass(frozen=True)
class Check:
    kind: str  # "stirling", "bell", "signature", "star-stirling", "star-bell"
    n: int
    m: int | None
    detail: str
    formula: int
    oracle: int

    @property
    def ok(self) -> bool:
        return self.formula == self.oracle

    def describe(self) -> str:
        where = f"n={self.n}" + ("" if self.m is None else f" m={self.m}")
        extra = f" {self.detail}" if self.detail else ""
        return f"{self.kind} {where}{extra}: formula={self.formula} oracle={self.oracle}"


def designated_vectors(n: int, q: int, sample: int = 5) -> list[gfenum.GFVector]:
    """All nonzero vectors for ``n <= 3``, otherwise ``sample`` evenly spaced ones."""
    total = q**n - 1
    if total <= 0:
        return []
    if n <= 3 or total <= sample:
        codes = range(1, total + 1)
    else:
        codes = sorted({1 + (i * (total - 1)) // (sample - 1) for i in range(sample)})
    return [gfenum.GFVector.from_int(c, q, n) for c in codes]


def run_checks(
    q: int, max_n: int, limit: int | None = gfenum.DEFAULT_LIMIT, parallel: bool = False
) -> Iterator[Check]:
    """Yield one :class:`Check` per (n, m), signature and designated-vector case."""
    gfenum._check_field(max_n, q, limit)
    cache = dsdcount.DsdCache(q)
    for n in range(max_n + 1):
        by_sig = gfenum.count_dsds_by_signature(n, q, limit=limit, parallel=parallel)
        for sig in signatures_of(n):
            yield Check("signature", n, sig.block_count(), str(sig),
                        dsdcount.dsd_count_for_signature(sig, q), by_sig.get(sig, 0))
        for m in range(n + 1):
            yield Check("stirling", n, m, "", cache.stirling(n, m), gfenum.count_dsds(n, q, m, limit=limit))
        yield Check("bell", n, None, "", cache.bell(n), sum(by_sig.values()))
        for v in designated_vectors(n, q):
            tag = f"v*={v.digits()}"
            for m in range(1, n + 1):
                yield Check("star-stirling", n, m, tag, dsdcount.dsd_stirling_star(n, m, q, cache),
                            gfenum.count_dsds(n, q, m, v, limit=limit))
            yield Check("star-bell", n, None, tag, dsdcount.dsd_bell_star(n, q, cache),
                        gfenum.count_dsds(n, q, None, v, limit=limit))
