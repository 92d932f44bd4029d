"""Coset machinery against direct modular arithmetic."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bchkit import cosets
from bchkit.errors import (
    BadDivisor,
    ModulusTooLarge,
    NotCoprime,
    OutOfRange,
    PreconditionViolated,
    TooLargeToMaterialize,
)


def test_multiplicative_order_examples():
    assert cosets.multiplicative_order(5, 1) == 1
    assert cosets.multiplicative_order(2, 3) == 2
    assert cosets.multiplicative_order(5, 21) == 6
    with pytest.raises(NotCoprime):
        cosets.multiplicative_order(2, 6)
    with pytest.raises(ModulusTooLarge):
        cosets.multiplicative_order(3, 1 << 63)


def test_coset_of_examples():
    p171 = cosets.coset_params(2, 171)
    assert cosets.coset_of(0, p171) == [0]
    assert len(cosets.coset_of(19, p171)) == 6
    p28 = cosets.coset_params(3, 28)
    assert cosets.coset_of(1, p28) == [1, 3, 9, 19, 25, 27]
    with pytest.raises(OutOfRange):
        cosets.coset_of(28, p28)


def test_is_coset_leader_examples():
    p21 = cosets.coset_params(5, 21)
    v = cosets.is_coset_leader(0, p21)
    assert v.is_leader and v.size == 1
    assert cosets.is_coset_leader(7, p21).is_leader
    v = cosets.is_coset_leader(58, cosets.coset_params(2, 171))
    assert not v.is_leader and v.leader < 58


def test_partition_small_and_invariants():
    p1 = cosets.coset_params(7, 1)
    assert cosets.coset_partition(p1).leaders == ((0, 1),)

    p28 = cosets.coset_params(3, 28)
    part = cosets.coset_partition(p28)
    assert [lead for lead, _ in part.leaders] == [0, 1, 2, 4, 5, 7, 14]
    assert sum(size for _, size in part.leaders) == 28
    assert all(p28.ord % size == 0 for _, size in part.leaders)

    p43 = cosets.coset_params(2, 43)
    part = cosets.coset_partition(p43)
    assert p43.ord == 14
    assert dict(part.leaders)[1] == 14
    assert [lead for lead, _ in part.leaders] == [0, 1, 3, 7]


def test_partition_cap():
    with pytest.raises(TooLargeToMaterialize):
        cosets.coset_partition(cosets.CosetParams(2, 10 ** 7 + 1, 1))


@pytest.mark.parametrize("q,n", [(3, 28), (2, 43), (5, 21), (2, 171), (3, 61), (4, 65)])
def test_leader_stability_and_symmetry(q, n):
    params = cosets.coset_params(q, n)
    part = dict(cosets.coset_partition(params).leaders)
    for a in range(n):
        v = cosets.is_coset_leader(a, params)
        assert v.is_leader == (a in part)
        assert v.leader <= a and (v.leader == a) == v.is_leader
        if v.is_leader:
            assert part[a] == v.size
        assert cosets.leads(a, params) == v.is_leader
        # mirror symmetry of leaders: min C_a == min C_{n-a}
        assert v.leader == cosets.is_coset_leader((n - a) % n, params).leader


def test_largest_leaders_examples():
    assert cosets.largest_coset_leaders(cosets.coset_params(2, 171), 2) == [(57, 2), (25, 18)]
    assert cosets.largest_coset_leaders(cosets.coset_params(2, 683), 2) == [(113, 22), (111, 22)]
    assert cosets.largest_coset_leaders(cosets.coset_params(3, 28), 1) == [(14, 1)]
    with pytest.raises(OutOfRange):
        cosets.largest_coset_leaders(cosets.coset_params(3, 28), 0)


def test_largest_leaders_match_partition():
    for q, n in [(3, 28), (2, 43), (5, 21), (2, 171)]:
        params = cosets.coset_params(q, n)
        part = sorted(cosets.coset_partition(params).leaders, reverse=True)
        assert cosets.largest_coset_leaders(params, 3) == part[:3]


def test_gcd_closed_form_examples():
    assert cosets.gcd_power_plus_minus(2, 3, 3) == 1
    assert cosets.gcd_power_plus_minus(3, 2, 4) == 10
    assert cosets.gcd_power_plus_minus(3, 5, 5) == 2


def test_gcd_closed_form_vs_euclid():
    for l in range(2, 11):
        for u in range(0, 13):
            for v in range(1, 13):
                assert cosets.gcd_power_plus_minus(l, u, v) == math.gcd(l ** u + 1, l ** v - 1)


def test_scaled_correspondence_examples():
    assert cosets.scaled_leader_correspondence(19, 3, 2, 9) == (True, True, 6, 6)
    lead_s, lead_ns, size_s, size_ns = cosets.scaled_leader_correspondence(7, 6, 5, 3)
    assert lead_s and lead_ns and size_s == size_ns
    # s = 1 is always a leader on both sides
    for q, m, N in [(2, 3, 3), (3, 5, 4), (5, 3, 2)]:
        r = cosets.scaled_leader_correspondence(1, N, q, m)
        assert r[0] and r[1] and r[2] == r[3]
    with pytest.raises(BadDivisor):
        cosets.scaled_leader_correspondence(1, 4, 2, 3)


def test_q_adic_examples():
    assert cosets.q_adic_expansion(11, 2, 5) == (1, 1, 0, 1, 0)
    assert cosets.q_adic_expansion(0, 7, 4) == (0, 0, 0, 0)
    assert cosets.q_adic_expansion(3 ** 4 - 1, 3, 4) == (2, 2, 2, 2)
    with pytest.raises(OutOfRange):
        cosets.q_adic_expansion(32, 2, 5)


@settings(max_examples=300, derandomize=True)
@given(st.integers(2, 16), st.integers(1, 12), st.data())
def test_q_adic_round_trip(q, width, data):
    a = data.draw(st.integers(0, q ** width - 1))
    digits = cosets.q_adic_expansion(a, q, width)
    assert len(digits) == width and all(0 <= d < q for d in digits)
    assert sum(d * q ** i for i, d in enumerate(digits)) == a


def test_adjacent_pair_count_examples():
    assert cosets.adjacent_pair_count(11, 5) == 1
    assert cosets.adjacent_pair_count(9, 5) == 1
    assert cosets.adjacent_pair_count(3, 3) == 1
    with pytest.raises(PreconditionViolated):
        cosets.adjacent_pair_count(8, 5)  # even
    with pytest.raises(PreconditionViolated):
        cosets.adjacent_pair_count(7, 9)  # run of three ones
    with pytest.raises(PreconditionViolated):
        cosets.adjacent_pair_count(3, 4)  # even m


@pytest.mark.parametrize("m", [5, 7, 9])
def test_adjacent_pair_count_parity(m):
    for s in range(1, 2 ** (m - 1), 2):
        try:
            count = cosets.adjacent_pair_count(s, m)
        except PreconditionViolated:
            continue
        assert count % 2 == 1, (m, s)


@pytest.mark.parametrize("q,m", [(q, m) for q in (2, 3, 4, 5) for m in (3, 5)])
def test_order_is_2m_for_family(q, m):
    n = (q ** m + 1) // (q + 1)
    expected = 2 if (q, m) == (2, 3) else 2 * m
    assert cosets.multiplicative_order(q, n) == expected
