import pytest
from hypothesis import given, strategies as st

from oracles import partition_count, stirling_by_enumeration, stirling_by_recurrence
from qdsd.partitions import (
    PartCountSignature,
    bell,
    bell_summation,
    set_partition_count,
    signatures_of,
    signatures_with_parts,
    stirling2,
    stirling2_summation,
)


def sig(n, **parts):
    counts = [0] * n
    for key, value in parts.items():
        counts[int(key[1:]) - 1] = value
    return PartCountSignature(n, tuple(counts))


def test_signature_counts():
    assert list(signatures_of(0)) == [PartCountSignature(0, ())]
    assert len(list(signatures_of(4))) == 5
    assert len(list(signatures_of(7))) == 15


def test_signature_order_n4():
    sizes = [s.part_sizes() for s in signatures_of(4)]
    assert sizes == [[4], [1, 3], [2, 2], [1, 1, 2], [1, 1, 1, 1]]


@pytest.mark.parametrize("n", range(21))
def test_signature_count_matches_partition_function(n):
    sigs = list(signatures_of(n))
    assert len(sigs) == partition_count(n)
    assert len(set(sigs)) == len(sigs)


def test_signatures_with_parts():
    assert set(signatures_with_parts(4, 2)) == {sig(4, a1=1, a3=1), sig(4, a2=2)}
    for n in range(1, 9):
        assert list(signatures_with_parts(n, 1)) == [sig(n, **{f"a{n}": 1})]
        assert list(signatures_with_parts(n, n)) == [sig(n, a1=n)]


def test_invalid_signature_rejected():
    with pytest.raises(ValueError):
        PartCountSignature(3, (1, 0, 1))
    with pytest.raises(ValueError):
        PartCountSignature(3, (3, 0))


def test_from_parts_round_trip():
    s = PartCountSignature.from_parts([2, 1, 2])
    assert s == sig(5, a1=1, a2=2)
    assert s.block_count() == 3
    assert s.part_sizes() == [1, 2, 2]


def test_set_partition_count():
    assert set_partition_count(sig(3, a1=1, a2=1)) == 3
    assert set_partition_count(sig(4, a2=2)) == 3
    for n in range(1, 10):
        assert set_partition_count(sig(n, **{f"a{n}": 1})) == 1


def test_stirling_and_bell_values():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(3, 5) == 0
    assert [bell(n) for n in range(5)] == [1, 1, 2, 5, 15]
    assert stirling2_summation(4, 2) == 7
    assert stirling2_summation(5, 3) == 25
    for n in range(1, 8):
        assert stirling2(n, 1) == stirling2_summation(n, 1) == 1


@pytest.mark.parametrize("n", range(9))
def test_stirling_against_brute_force(n):
    for m in range(n + 1):
        assert stirling2(n, m) == stirling_by_enumeration(n, m)


@pytest.mark.parametrize("n", range(13))
def test_bell_identities(n):
    assert sum(stirling2(n, m) for m in range(n + 1)) == bell(n)
    assert bell_summation(n) == bell(n)


@pytest.mark.parametrize("n", range(11))
def test_summation_route_agrees(n):
    for m in range(n + 1):
        assert stirling2_summation(n, m) == stirling2(n, m) == stirling_by_recurrence(n, m)


@given(st.integers(0, 15))
def test_every_signature_is_valid(n):
    for s in signatures_of(n):
        assert sum(k * a for k, a in enumerate(s.parts, start=1)) == n
        assert s.block_count() == sum(s.parts)
