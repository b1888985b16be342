from math import comb

import numpy as np
import pytest

from codequiv import codes, rm
from codequiv import f2linalg as la
from codequiv.errors import DecodeFailure, InvalidParams, LengthMismatch
from codequiv.rm import RMParams


def evaluate(message, r, m):
    """Direct polynomial evaluation at every point: the encoding oracle."""
    mons = rm.monomials(r, m)
    out = []
    for i in range(1 << m):
        x = rm.point(i, m)
        out.append(sum(c * all(x[j] for j in T) for c, T in zip(message, mons)) % 2)
    return out


def test_dimension_examples():
    assert rm.rm_dimension(0, 5) == 1
    assert rm.rm_dimension(1, 3) == 4
    assert rm.rm_dimension(2, 4) == 11
    for bad in [(3, 3), (-1, 2), (4, 2)]:
        with pytest.raises(InvalidParams):
            rm.rm_dimension(*bad)


@pytest.mark.parametrize("m", range(1, 9))
def test_generator_rank_equals_dimension(m):
    for r in range(m):
        C = rm.rm_generator(r, m)
        assert C.n == 2**m
        assert C.k == la.rank(rm.raw_generator(r, m)) == sum(comb(m, j) for j in range(r + 1))


def test_generator_examples():
    assert rm.rm_generator(0, 3) == codes.repetition(8)
    C = rm.rm_generator(1, 2)
    assert (C.n, C.k) == (4, 3)
    assert codes.weight_enumerator(C).counts == (1, 0, 6, 0, 1)
    assert rm.rm_generator(2, 3) == codes.dual(codes.repetition(8))


def test_point_ordering_is_lsb_first():
    assert rm.point(1, 3) == (1, 0, 0)
    assert rm.point(6, 3) == (0, 1, 1)
    # x_1 evaluates to the low bit of the point index
    assert rm.monomial_row((0,), 3) == 0b10101010


def test_monomial_order():
    assert rm.monomials(2, 3) == [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("m", range(2, 7))
def test_dual_is_complementary_order(m):
    for r in range(m):
        assert codes.dual(rm.rm_generator(r, m)) == rm.rm_generator(m - r - 1, m)


@pytest.mark.parametrize("m", range(3, 9))
def test_nesting(m):
    for r in range(m - 1):
        small, big = rm.rm_generator(r, m), rm.rm_generator(r + 1, m)
        assert all(big.contains(row) for row in small.gen.rows)


def test_encode_examples():
    p = RMParams(1, 3)
    assert not rm.rm_encode(p, [0, 0, 0, 0]).any()
    assert rm.rm_encode(p, [1, 0, 0, 0]).all()
    # f = x_1
    assert rm.rm_encode(p, [0, 1, 0, 0]).tolist() == [rm.point(i, 3)[0] for i in range(8)]
    with pytest.raises(LengthMismatch):
        rm.rm_encode(p, [1, 0])


@pytest.mark.parametrize("r,m", [(1, 3), (2, 4), (2, 5), (3, 5)])
def test_encode_matches_polynomial_evaluation(r, m, rng):
    p = RMParams(r, m)
    for _ in range(20):
        msg = rng.integers(0, 2, p.k).tolist()
        assert rm.rm_encode(p, msg).tolist() == evaluate(msg, r, m)


def test_min_distance_formula():
    assert rm.rm_min_distance(0, 3) == 8
    for m in range(2, 7):
        for r in range(m):
            if rm.rm_dimension(r, m) <= 16:
                assert codes.min_distance(rm.rm_generator(r, m)) == rm.rm_min_distance(r, m) == 2 ** (m - r)


def test_decode_without_errors(rng):
    for r, m in [(0, 3), (1, 3), (2, 4), (2, 5), (3, 6)]:
        p = RMParams(r, m)
        msg = rng.integers(0, 2, p.k)
        word = rm.rm_encode(p, msg)
        got, cw = rm.reed_decode(p, word)
        assert got.tolist() == msg.tolist() and cw.tolist() == word.tolist()


def test_decode_rm13_exhaustive_single_errors():
    p = RMParams(1, 3)
    assert p.radius == 1
    for v in range(16):
        msg = [(v >> i) & 1 for i in range(4)]
        word = rm.rm_encode(p, msg)
        for e in range(8):
            noisy = word.copy()
            noisy[e] ^= 1
            got, cw = rm.reed_decode(p, noisy)
            assert got.tolist() == msg
            assert cw.tolist() == word.tolist()


@pytest.mark.parametrize("r,m,weight", [(1, 4, 3), (2, 5, 3)])
def test_decode_random_errors_within_radius(r, m, weight, rng):
    p = RMParams(r, m)
    assert p.radius == weight
    for _ in range(1000):
        msg = rng.integers(0, 2, p.k)
        word = rm.rm_encode(p, msg)
        noisy = word.copy()
        noisy[rng.choice(p.n, size=int(rng.integers(0, weight + 1)), replace=False)] ^= 1
        got, _ = rm.reed_decode(p, noisy)
        assert np.array_equal(got, msg)


def test_decode_reports_ties():
    p = RMParams(1, 3)
    word = np.zeros(8, dtype=np.uint8)
    word[[0, 1]] = 1
    with pytest.raises(DecodeFailure):
        rm.reed_decode(p, word)


def test_decode_length_check():
    with pytest.raises(LengthMismatch):
        rm.reed_decode(RMParams(1, 3), [0] * 7)


def test_hadamard_decoder_agrees_with_reed(rng):
    p = RMParams(1, 5)
    for _ in range(300):
        msg = rng.integers(0, 2, p.k)
        noisy = rm.rm_encode(p, msg)
        noisy[rng.choice(p.n, size=int(rng.integers(0, p.radius + 1)), replace=False)] ^= 1
        a, _ = rm.reed_decode(p, noisy)
        b, _ = rm.fht_decode_first_order(p, noisy)
        assert a.tolist() == b.tolist() == msg.tolist()
