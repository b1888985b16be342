import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codequiv import codes, rm
from codequiv import f2linalg as la
from codequiv.codes import LinearCode, from_generator
from codequiv.errors import AllPunctured, CostExceeded
from codequiv.f2linalg import BitMatrix, Permutation

from conftest import brute_weights, linear_codes, span


def test_from_generator_examples():
    C = from_generator(BitMatrix.from_array([[1, 1], [1, 1]]))
    assert (C.n, C.k) == (2, 1)
    assert C.gen.to_lists() == [[1, 1]]
    assert from_generator(rm.raw_generator(1, 3)).k == 4
    assert from_generator(BitMatrix.identity(3)) == codes.full_space(3)


def test_zero_code_is_flagged_not_fatal():
    C = from_generator(BitMatrix.zeros(2, 5))
    assert C.is_zero_code and C.k == 0
    assert codes.weight_enumerator(C).counts == (1, 0, 0, 0, 0, 0)
    assert codes.dual(C) == codes.full_space(5)
    assert codes.hull(C).k == 0


def test_linear_code_requires_canonical_generator():
    with pytest.raises(ValueError):
        LinearCode(BitMatrix.from_array([[1, 1], [1, 1]]))


def test_dual_examples():
    assert codes.dual(codes.full_space(3)).k == 0
    even = codes.dual(codes.repetition(4))
    assert (even.n, even.k) == (4, 3)
    assert span(even.gen.rows) == {v for v in range(16) if bin(v).count("1") % 2 == 0}
    C = rm.rm_generator(1, 3)
    assert codes.dual(C) == C


@given(linear_codes())
def test_dual_is_involution(C):
    D = codes.dual(C)
    assert D.k == C.n - C.k
    assert codes.dual(D) == C
    for a in C.gen.rows:
        for b in D.gen.rows:
            assert la.parity(a & b) == 0


def test_hull_examples():
    C = from_generator(BitMatrix.from_array([[1, 1]]))
    assert codes.hull(C) == C
    assert codes.hull(codes.full_space(4)).k == 0
    R = rm.rm_generator(1, 3)
    assert codes.hull(R) == R and R.k == 4


@given(linear_codes(max_n=10, max_k=6))
def test_hull_is_intersection(C):
    H = codes.hull(C)
    D = codes.dual(C)
    assert span(H.gen.rows) == span(C.gen.rows) & span(D.gen.rows)
    assert H.k <= min(C.k, C.n - C.k)
    assert codes.hull(D) == H


def test_puncture_examples():
    P = codes.puncture(codes.repetition(4), {0})
    assert P == codes.repetition(3)
    assert codes.puncture(rm.rm_generator(1, 2), {0}) == codes.full_space(3)
    C = rm.rm_generator(1, 3)
    assert codes.puncture(C, set()) is C
    with pytest.raises(AllPunctured):
        codes.puncture(codes.repetition(3), {0, 1, 2})


@given(linear_codes(), st.data())
def test_puncture_dimension_drop_is_bounded(C, data):
    J = data.draw(st.sets(st.integers(0, C.n - 1), max_size=C.n - 1))
    P = codes.puncture(C, J)
    assert P.n == C.n - len(J)
    assert P.k >= C.k - len(J)
    assert P.k <= C.k


def test_weight_enumerator_examples():
    assert codes.weight_enumerator(codes.repetition(5)).counts == (1, 0, 0, 0, 0, 1)
    assert codes.weight_enumerator(rm.rm_generator(1, 2)).counts == (1, 0, 6, 0, 1)
    assert codes.weight_enumerator(rm.rm_generator(1, 3)).counts == (1, 0, 0, 0, 14, 0, 0, 0, 1)


@given(linear_codes(max_n=14, max_k=8))
def test_weight_enumerator_matches_brute_force(C):
    we = codes.weight_enumerator(C)
    assert list(we.counts) == brute_weights(C.gen.rows, C.n)
    assert we.total() == 2**C.k


@pytest.mark.parametrize("k,n", [(16, 20), (15, 70), (14, 130)])
def test_weight_enumerator_split_tables_and_multiword(k, n, rng):
    # exercises the two-table split (k > 13) and codewords wider than 64 bits
    C = from_generator(la.random_full_rank(k, n, rng))
    assert list(codes.weight_enumerator(C).counts) == brute_weights(C.gen.rows, n)


def test_weight_enumerator_cost_cap():
    C = rm.rm_generator(2, 5)
    with pytest.raises(CostExceeded) as info:
        codes.weight_enumerator(C, cap=12)
    assert info.value.required == 16 and info.value.cap == 12
    assert codes.weight_enumerator(C, cap=16).total() == 2**16


@settings(max_examples=30)
@given(linear_codes(max_n=12, max_k=6), st.data())
def test_weight_enumerator_permutation_invariant(C, data):
    P = Permutation(tuple(data.draw(st.permutations(range(C.n)))))
    assert codes.weight_enumerator(C.permuted(P)) == codes.weight_enumerator(C)


def test_min_distance_examples():
    assert codes.min_distance(codes.repetition(5)) == 5
    assert codes.min_distance(rm.rm_generator(1, 3)) == 4
    assert codes.min_distance(rm.rm_generator(2, 4)) == 4


def test_macwilliams_identity_small():
    # repetition and even-weight codes are duals
    we = codes.weight_enumerator(codes.repetition(4))
    assert codes.macwilliams_transform(we, 1).counts == (1, 0, 6, 0, 1)


@settings(max_examples=40)
@given(linear_codes(max_n=10, max_k=6))
def test_macwilliams_against_dual(C):
    predicted = codes.macwilliams_transform(codes.weight_enumerator(C), C.k)
    assert predicted == codes.weight_enumerator(codes.dual(C))
