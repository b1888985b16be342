from dataclasses import fields
from fractions import Fraction
from math import comb

import pytest

from codequiv import affine, hsp
from codequiv.errors import InvalidParams


def test_theorem1_m10_shows_aut_condition_failing():
    v = hsp.theorem1_check(2, 2**10, 11, 512, log2_aut=110)
    assert v.size_cond  # 121 <= 2048
    assert not v.aut_cond  # 110 > 102.4
    assert v.degree_cond
    assert not v.overall
    assert v.size_lhs == 121 and v.size_rhs == 2048


def test_theorem1_m20_all_true():
    v = hsp.theorem1_check(2, 2**20, 211, 2**19, log2_aut=420)
    assert v.size_cond and v.aut_cond and v.degree_cond and v.overall
    assert v.size_lhs == 44521 and v.size_rhs == 4194304


def test_theorem1_full_dimension_fails_size():
    assert not hsp.theorem1_check(2, 4, 4, 2, log2_aut=0).size_cond


def test_theorem1_validation():
    with pytest.raises(InvalidParams):
        hsp.theorem1_check(3, 8, 2, 4, log2_aut=1)
    with pytest.raises(InvalidParams):
        hsp.theorem1_check(2, 8, 9, 4, log2_aut=1)
    with pytest.raises(InvalidParams):
        hsp.theorem1_check(2, 8, 2, 4)


@pytest.mark.parametrize("n", [3, 5, 6, 7, 10, 12, 24, 100])
def test_size_condition_general_n_matches_direct_powers(n):
    for k in range(1, n + 1):
        # q^(k^2) <= n^(n/5)  <=>  2^(5 k^2) <= n^n
        expected = 2 ** (5 * k * k) <= n**n
        assert hsp.size_condition(2, n, k)[0] == expected


def test_aut_condition_exact_at_boundary():
    # log2 |Aut| = n/10 exactly is allowed
    assert hsp.theorem1_check(2, 10 * 8, 1, 40, aut_order=2**8).aut_cond
    assert not hsp.theorem1_check(2, 10 * 8, 1, 40, aut_order=2**8 + 1).aut_cond


def test_rm_hsp_check_examples():
    v = hsp.rm_hsp_check(2, 20)
    assert v.k == 211 and v.size_cond and v.k_squared_cond and v.r_small
    assert v.overall
    v = hsp.rm_hsp_check(1, 3)
    assert v.r_small is False
    v = hsp.rm_hsp_check(2, 30)
    assert v.k == 1 + 30 + 435
    assert v.k_squared_cond and v.overall
    with pytest.raises(InvalidParams):
        hsp.rm_hsp_check(0, 5)


def test_verdicts_contain_no_floats():
    v = hsp.rm_hsp_check(3, 40)
    for f in fields(v):
        assert not isinstance(getattr(v, f.name), float)
    assert "e^o(n)" in v.surrogates[0]


@pytest.mark.parametrize("r", range(1, 6))
def test_size_condition_monotone_in_m(r):
    previous = False
    for m in range(r + 1, 65):
        cond = hsp.rm_hsp_check(r, m).size_cond
        assert cond or not previous
        previous = cond
    assert previous


def test_ga_order_within_bound_up_to_64():
    for m in range(0, 65):
        order, bound = affine.ga_order(m)
        assert order == 2**m * affine.gl_order(m)
        assert order <= bound == 2 ** (m * m + m)


@pytest.mark.parametrize("m", [20, 30, 50])
def test_dimension_bound(m):
    b = hsp.dimension_bound_check(m)
    r = m // 10
    assert b.holds and b.r == r
    assert b.k == sum(comb(m, j) for j in range(r + 1))
    assert b.binom_bound == r * comb(m, r)
    # pow_bound is r * ceil(2^(0.47 m)) computed with integers only
    c = b.pow_bound // r
    assert c**100 >= 2 ** (47 * m) > (c - 1) ** 100


def test_dimension_bound_m20_values():
    b = hsp.dimension_bound_check(20)
    assert b.k == 211 and b.pow_bound == 2 * 676


def test_iroot_ceil():
    for x in range(0, 300):
        for e in (1, 2, 3, 5):
            c = hsp.iroot_ceil(x, e)
            assert c**e >= x and (c == 0 or (c - 1) ** e < x)


def test_pow2_le_rational_exponents():
    assert hsp.pow2_le(Fraction(1, 2), 2)  # sqrt(2) <= 2
    assert not hsp.pow2_le(Fraction(3, 2), 2)
    assert hsp.pow2_le(Fraction(10), 1024)
    assert not hsp.pow2_le(Fraction(10), 1023)
