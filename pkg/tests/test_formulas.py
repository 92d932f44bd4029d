"""Closed-form catalogs and formulas: frozen examples plus oracle spot checks.

The full-grid formula-vs-oracle sweeps live in the verify module and the
acceptance suite; here each operation is pinned on its worked examples
and its error surface.
"""

import pytest

from bchkit import cosets, formulas
from bchkit.errors import (
    BranchAmbiguity,
    DegenerateQ,
    EvenM,
    HypothesisViolated,
    NotALeader,
    OutOfStatedRange,
)


def test_small_range_leader():
    assert formulas.small_range_leader(3, 5, 1)
    assert not formulas.small_range_leader(3, 5, 7)  # the single listed exception
    # q=5, m=3: the exception value is (q^2-1)/(q+1) = 4, and the orbit
    # of 4 mod 21 indeed drops below 4
    assert not formulas.small_range_leader(5, 3, 4)
    assert not cosets.leads(4, cosets.coset_params(5, 21))
    assert formulas.small_range_leader(5, 3, 3)
    with pytest.raises(OutOfStatedRange):
        formulas.small_range_leader(3, 5, 6)  # multiple of q
    with pytest.raises(OutOfStatedRange):
        formulas.small_range_leader(3, 4, 1)  # even m


def test_coset_size_rule():
    assert formulas.coset_size_rule(5, 3, 7) == 2
    assert formulas.coset_size_rule(4, 5, 41) == 2
    assert formulas.coset_size_rule(2, 9, 19) == 6
    assert formulas.coset_size_rule(3, 5, 1) == 10
    with pytest.raises(NotALeader):
        formulas.coset_size_rule(3, 5, 6)
    with pytest.raises(OutOfStatedRange):
        formulas.coset_size_rule(2, 3, 1)
    with pytest.raises(OutOfStatedRange):
        formulas.coset_size_rule(5, 3, 21)  # above q^2 - q


def test_is_leader_m3_examples():
    assert formulas.is_leader_m3(5, 7)        # the largest leader mod 21
    assert not formulas.is_leader_m3(8, 17)
    assert not formulas.is_leader_m3(7, 15)
    with pytest.raises(OutOfStatedRange):
        formulas.is_leader_m3(5, 10)  # multiple of q
    with pytest.raises(OutOfStatedRange):
        formulas.is_leader_m3(5, 4)   # below q+1


def test_m3_exception_clauses_report():
    assert formulas.exception_clause(8, 3, 17) == "p3.2-c2"
    assert formulas.exception_clause(5, 3, 7) is None


def test_delta1_m3():
    assert formulas.delta1_m3(5) == 7
    assert formulas.delta1_m3(3) == 1
    assert formulas.delta1_m3(7) == 10
    assert formulas.delta1_m3(8) == 19
    with pytest.raises(DegenerateQ):
        formulas.delta1_m3(2)


def test_dim_m3_examples():
    assert formulas.dim_m3(8, 2) == 3
    assert formulas.dim_m3(8, 6) == 1
    assert formulas.dim_m3(7, 2) == 1
    with pytest.raises(OutOfStatedRange):
        formulas.dim_m3(2, 2)
    with pytest.raises(OutOfStatedRange):
        formulas.dim_m3(7, 7)


def test_is_leader_m5_examples():
    assert not formulas.is_leader_m5(3, 13)
    assert formulas.is_leader_m5(5, 26)
    with pytest.raises(OutOfStatedRange):
        formulas.is_leader_m5(3, 12)  # multiple of q inside the window


def test_m5_point_exception_erratum():
    """The two point exceptions are (1,0,q-1) and (q-2,0,q-1).

    A common misprint lists q^2+q+1 for the first; orbit walks refute
    that for every q >= 5, so the corrected value is pinned here.
    """
    for q in (5, 7, 8):
        n = formulas.family_length(q, 5)
        params = cosets.coset_params(q, n)
        good = q * q + q - 1
        bad = q * q + q + 1
        assert formulas.exception_clause(q, 5, good) == "p3.3-a"
        assert not cosets.leads(good, params)
        assert formulas.is_leader_m5(q, bad)
        assert cosets.leads(bad, params)
        second = (q - 2) * q * q + q - 1
        assert formulas.exception_clause(q, 5, second) == "p3.3-a"
        assert not cosets.leads(second, params)


def test_exception_maps_stay_in_window():
    for q, m in [(5, 3), (8, 3), (13, 3), (5, 5), (8, 5), (3, 7), (4, 7), (5, 7), (3, 9)]:
        if m == 3:
            catalog = formulas.m3_exception_map(q)
            lo, hi = q + 1, (q - 1) * q
        elif m == 5:
            catalog = formulas.m5_exception_map(q)
            lo, hi = q * q + 1, (q - 1) * q * q
        else:
            catalog = formulas.general_exception_map(q, m)
            h = (m - 1) // 2
            lo, hi = q ** h + 1, (q - 1) * q ** h
        assert catalog, (q, m)
        for a in catalog:
            assert lo <= a <= hi and a % q != 0


def test_is_leader_general_examples():
    # digit-form value (a_h=1, a_0=2) for q=3, m=9 lands on 122 and is excluded
    assert formulas.general_exception_map(3, 9)[122] in ("p3.5-c1", "p3.5-c5")
    assert not formulas.is_leader_general(3, 9, 122)
    assert not cosets.leads(122, cosets.coset_params(3, formulas.family_length(3, 9)))
    # (3,7): window [28, 54]; 29 is a leader, 34 is not (clause p3.4-c4)
    assert formulas.is_leader_general(3, 7, 29)
    assert not formulas.is_leader_general(3, 7, 34)
    assert formulas.exception_clause(3, 7, 34) == "p3.4-c4"
    with pytest.raises(OutOfStatedRange):
        formulas.is_leader_general(3, 7, 27)
    with pytest.raises(OutOfStatedRange):
        formulas.is_leader_general(3, 5, 10)  # m=5 not in scope here


def test_dim_m5_examples():
    assert formulas.dim_m5(5, 4) == 31
    assert formulas.dim_m5(4, 3) == 3
    assert formulas.dim_m5(4, 2) == 25
    assert formulas.dim_m5(3, 2) == 1
    assert formulas.dim_m5(5, 2) == 181
    with pytest.raises(OutOfStatedRange):
        formulas.dim_m5(5, 5)


def test_dim_general_examples():
    r = formulas.dim_general(3, 7, 2)
    assert (r.dim, r.delta, r.branch) == (113, 55, "mid")
    assert formulas.dim_general(5, 7, 2).dim == 10305
    assert formulas.dim_general(4, 7, 3).dim == 1443  # even-q middle branch, oracle value
    assert formulas.dim_general(4, 7, 3).branch == "mid"
    with pytest.raises(OutOfStatedRange):
        formulas.dim_general(2, 7, 2)
    with pytest.raises(OutOfStatedRange):
        formulas.dim_general(5, 6, 2)


def test_dim_branches_cover_without_overlap():
    # branch predicates must fire exactly once for every l in range
    for q in (3, 4, 5, 7, 8, 9, 11, 13):
        for l in range(2, q):
            formulas.dim_m3(q, l)
            if q >= 3:
                formulas.dim_m5(q, l)
            formulas.dim_general(q, 7, l)


def test_binary_top_two():
    assert formulas.binary_top_two(9) == ((57, 2), (25, 18))
    assert formulas.binary_top_two(11) == ((113, 22), (111, 22))
    assert formulas.binary_top_two(13) == ((455, 26), (441, 26))
    assert formulas.binary_top_two(7) == ((7, 14), (3, 14))
    assert formulas.binary_top_two(3) == ((1, 2), None)
    assert formulas.binary_top_two(5) == ((1, 10), None)
    with pytest.raises(EvenM):
        formulas.binary_top_two(6)


def test_ternary_dual_cuts_examples():
    rep = formulas.ternary_dual_cuts(3, 2)
    assert (rep.level, rep.i1, rep.i2, rep.bound) == (1, 9, 19, 10)
    rep = formulas.ternary_dual_cuts(3, 5)
    assert (rep.level, rep.i1, rep.i2, rep.bound) == (2, 12, 16, 4)
    rep = formulas.ternary_dual_cuts(3, 14)
    assert (rep.i1, rep.i2, rep.bound) == (13, 15, 2)
    with pytest.raises(OutOfStatedRange):
        formulas.ternary_dual_cuts(3, 15)  # above the largest leader
    with pytest.raises(OutOfStatedRange):
        formulas.ternary_dual_cuts(1, 2)


def test_ternary_dual_bound_examples():
    assert formulas.ternary_dual_bound(3, 2) == 10
    assert formulas.ternary_dual_bound(3, 3) == 8
    assert formulas.ternary_dual_bound(4, 5) == 10
    assert formulas.ternary_dual_bound(3, 20) == 2
    with pytest.raises(OutOfStatedRange):
        formulas.ternary_dual_bound(3, 29)


def test_cuts_invariants_small_grid():
    for m in (2, 3, 4):
        n = 3 ** m + 1
        for delta in range(2, n // 2 + 1):
            rep = formulas.ternary_dual_cuts(m, delta)
            assert rep.i2 == n - rep.i1
            assert rep.bound == rep.i2 - rep.i1 >= 2
            assert formulas.ternary_dual_bound(m, delta) == rep.bound


def test_theorem_code_params():
    claim = formulas.theorem_code_params("t4.1", m=9, delta=57)
    assert (claim.narrow.n, claim.narrow.k, claim.narrow.d, claim.narrow.exact) == (171, 3, 57, True)
    assert (claim.even_like.k, claim.even_like.d, claim.even_like.exact) == (2, 114, True)

    claim = formulas.theorem_code_params("t3.1", q=5)
    assert claim.narrow.render() == "[21,3,7]" and claim.even_like.render() == "[21,2,14]"

    claim = formulas.theorem_code_params("t4.2", m=7, delta=3)
    assert claim.narrow.render() == "[43,29,>=3]" and claim.even_like.render() == "[43,28,>=6]"

    claim = formulas.theorem_code_params("t4.3", m=11, delta=113)
    assert (claim.narrow.k, claim.narrow.d) == (23, 113)

    with pytest.raises(HypothesisViolated):
        formulas.theorem_code_params("t4.1", m=9, delta=10)  # below delta2
    with pytest.raises(HypothesisViolated):
        formulas.theorem_code_params("t4.1", m=7, delta=7)   # wrong residue class
    with pytest.raises(HypothesisViolated):
        formulas.theorem_code_params("t9.9", q=5)


def test_lookup_claims():
    claim = formulas.lookup_claims(2, 171, 57, 1)
    assert claim is not None and claim.narrow.k == 3
    claim = formulas.lookup_claims(2, 171, 58, 0)
    assert claim is not None and claim.even_like.k == 2
    assert formulas.lookup_claims(2, 43, 2, 1) is None  # below delta2
    assert formulas.lookup_claims(3, 28, 5, 1) is None  # wrong family
    claim = formulas.lookup_claims(5, 21, 7, 1)
    assert claim is not None and claim.which == "t3.1"
