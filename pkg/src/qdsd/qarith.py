"""Exact q-analog arithmetic on Python integers.

Every function accepts any integer ``q >= 1``; ``q = 1`` recovers the
classical set-theoretic quantities (n, n!, binomial coefficients).
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "check_q",
    "exact_div",
    "q_integer",
    "q_factorial",
    "gaussian_binomial",
    "disjoint_subspace_count",
]


def check_q(q: int) -> None:
    if not isinstance(q, int) or isinstance(q, bool) or q < 1:
        raise ValueError(f"q must be an integer >= 1, got {q!r}")


def _check_nonneg(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def exact_div(a: int, b: int) -> int:
    """Divide ``a`` by ``b``, asserting there is no remainder."""
    quotient, remainder = divmod(a, b)
    if remainder:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return quotient


def q_integer(n: int, q: int) -> int:
    """``1 + q + ... + q**(n-1)``; zero for ``n = 0``.

    Summed term by term so that ``q = 1`` needs no special case.
    """
    _check_nonneg("n", n)
    check_q(q)
    total = 0
    term = 1
    for _ in range(n):
        total += term
        term *= q
    return total


@lru_cache(maxsize=4096)
def _q_factorial(n: int, q: int) -> int:
    result = 1
    for k in range(1, n + 1):
        result *= q_integer(k, q)
    return result


def q_factorial(n: int, q: int) -> int:
    """Product ``[1]_q [2]_q ... [n]_q``; the empty product is 1."""
    _check_nonneg("n", n)
    check_q(q)
    return _q_factorial(n, q)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of an ``n``-dimensional space over GF(q).

    Returns 0 for ``k > n`` so callers can sum over uniform ranges.
    """
    _check_nonneg("n", n)
    _check_nonneg("k", k)
    check_q(q)
    if k > n:
        return 0
    return exact_div(_q_factorial(n, q), _q_factorial(n - k, q) * _q_factorial(k, q))


def disjoint_subspace_count(n: int, k: int, q: int) -> int:
    """Number of ``k``-dim subspaces meeting a fixed ``(n-k)``-dim subspace only in 0."""
    _check_nonneg("n", n)
    _check_nonneg("k", k)
    check_q(q)
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    return q ** (k * (n - k))
