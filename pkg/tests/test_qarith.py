from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from qdsd.qarith import disjoint_subspace_count, exact_div, gaussian_binomial, q_factorial, q_integer


def test_q_integer_values():
    assert q_integer(3, 2) == 7
    assert q_integer(4, 3) == 40
    assert q_integer(0, 5) == 0
    for q in range(1, 8):
        assert q_integer(1, q) == 1


def test_q_integer_matches_quotient_for_q_above_one():
    for q in range(2, 7):
        for n in range(12):
            assert q_integer(n, q) == (q**n - 1) // (q - 1)


def test_q_factorial_values():
    assert q_factorial(3, 2) == 21
    assert q_factorial(0, 3) == 1
    for n in range(10):
        assert q_factorial(n, 1) == factorial(n)


@pytest.mark.parametrize("fn,args", [
    (q_integer, (3, 0)),
    (q_factorial, (3, 0)),
    (gaussian_binomial, (3, 1, 0)),
    (q_integer, (-1, 2)),
])
def test_rejects_bad_parameters(fn, args):
    with pytest.raises(ValueError):
        fn(*args)


def test_gaussian_binomial_values():
    # 3 and 35 counted by subspace closure in tests/oracles.py
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 5, 2) == 0
    for q in (1, 2, 3):
        assert gaussian_binomial(6, 0, q) == 1


def test_exact_div_refuses_remainder():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(13, 4)


@given(st.integers(0, 12), st.integers(1, 5), st.data())
def test_gaussian_binomial_symmetry(n, q, data):
    k = data.draw(st.integers(0, n))
    assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)


@given(st.integers(0, 12), st.data())
def test_gaussian_binomial_reduces_to_binomial(n, data):
    k = data.draw(st.integers(0, n))
    assert gaussian_binomial(n, k, 1) == comb(n, k)


@given(st.integers(0, 12), st.integers(1, 6), st.data())
def test_gaussian_binomial_quotient_is_exact(n, q, data):
    k = data.draw(st.integers(0, n))
    num = q_factorial(n, q)
    den = q_factorial(n - k, q) * q_factorial(k, q)
    assert num % den == 0


@given(st.integers(0, 10), st.integers(2, 6), st.data())
def test_gaussian_binomial_pascal_rule(n, q, data):
    # [n+1, k] = [n, k-1] + q^k [n, k]
    k = data.draw(st.integers(1, n + 1))
    assert gaussian_binomial(n + 1, k, q) == gaussian_binomial(n, k - 1, q) + q**k * gaussian_binomial(n, k, q)


def test_disjoint_subspace_count():
    assert disjoint_subspace_count(3, 1, 2) == 4
    assert disjoint_subspace_count(4, 2, 2) == 16
    assert disjoint_subspace_count(5, 0, 3) == 1
    with pytest.raises(ValueError):
        disjoint_subspace_count(2, 3, 2)
