import random

import pytest

from lcgraph.gf2 import (
    BitMatrix,
    BitVector,
    SingularMatrixError,
    StreamingEliminator,
    invert,
    mat_mul,
    mat_vec,
    null_space,
    rank,
    reduced_row_echelon,
    vstack,
    hstack,
)


def random_matrix(nrows, ncols, rng):
    return BitMatrix(nrows, ncols, [rng.getrandbits(ncols) for _ in range(nrows)])


# ---------------------------------------------------------------------------
# BitVector
# ---------------------------------------------------------------------------


def test_bitvector_roundtrip():
    v = BitVector.from_bits([1, 0, 1, 1, 0])
    assert len(v) == 5
    assert v.to_bits() == [1, 0, 1, 1, 0]
    assert v[0] == 1 and v[1] == 0
    assert v.popcount() == 3


def test_bitvector_rejects_stray_bits():
    with pytest.raises(ValueError):
        BitVector(3, 0b1000)


def test_bitvector_xor_self_is_zero():
    v = BitVector(7, 0b1011001)
    assert (v ^ v).is_zero()


def test_bitvector_xor_length_mismatch():
    with pytest.raises(ValueError):
        BitVector(3, 0b101) ^ BitVector(4, 0b101)


def test_bitvector_unit():
    v = BitVector.unit(4, 2)
    assert v.to_bits() == [0, 0, 1, 0]
    with pytest.raises(ValueError):
        BitVector.unit(4, 4)


# ---------------------------------------------------------------------------
# mat_mul
# ---------------------------------------------------------------------------


def test_mat_mul_identity():
    m = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert mat_mul(m, BitMatrix.identity(3)) == m
    assert mat_mul(BitMatrix.identity(2), m) == m


def test_mat_mul_annihilator():
    m = BitMatrix.from_rows([[1, 1], [0, 1]])
    z = BitMatrix.zeros(2, 2)
    assert mat_mul(m, z) == z
    assert mat_mul(z, m) == z


def test_mat_mul_mod2_involution():
    s = BitMatrix.from_rows([[1, 1], [0, 1]])
    assert mat_mul(s, s) == BitMatrix.identity(2)


def test_mat_mul_dimension_mismatch():
    a = BitMatrix.zeros(2, 3)
    b = BitMatrix.zeros(2, 3)
    with pytest.raises(ValueError):
        mat_mul(a, b)


def test_mat_mul_associative(rng):
    for _ in range(50):
        a = random_matrix(rng.randrange(1, 8), rng.randrange(1, 8), rng)
        b = random_matrix(a.ncols, rng.randrange(1, 8), rng)
        c = random_matrix(b.ncols, rng.randrange(1, 8), rng)
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


def test_mat_vec_matches_mat_mul(rng):
    for _ in range(20):
        a = random_matrix(rng.randrange(1, 8), rng.randrange(1, 8), rng)
        vbits = rng.getrandbits(a.ncols)
        v = BitVector(a.ncols, vbits)
        col = BitMatrix(a.ncols, 1, [(vbits >> i) & 1 for i in range(a.ncols)])
        expect = mat_mul(a, col)
        got = mat_vec(a, v)
        assert got.to_bits() == [expect.get(i, 0) for i in range(a.nrows)]


# ---------------------------------------------------------------------------
# invert
# ---------------------------------------------------------------------------


def test_invert_identity():
    for n in (1, 2, 5):
        assert invert(BitMatrix.identity(n)) == BitMatrix.identity(n)


def test_invert_permutation_self_inverse():
    swap = BitMatrix.from_rows([[0, 1], [1, 0]])
    assert invert(swap) == swap


def test_invert_singular():
    with pytest.raises(SingularMatrixError):
        invert(BitMatrix.from_rows([[1, 1], [1, 1]]))


def test_invert_non_square():
    with pytest.raises(ValueError):
        invert(BitMatrix.zeros(2, 3))


def test_invert_random(rng):
    # invert succeeds exactly when the rank is full, and then M M^-1 = I
    for _ in range(200):
        n = rng.randrange(1, 9)
        m = random_matrix(n, n, rng)
        if rank(m) == n:
            assert mat_mul(m, invert(m)) == BitMatrix.identity(n)
            assert mat_mul(invert(m), m) == BitMatrix.identity(n)
        else:
            with pytest.raises(SingularMatrixError):
                invert(m)


# ---------------------------------------------------------------------------
# rank / null_space
# ---------------------------------------------------------------------------


def test_rank_examples():
    assert rank(BitMatrix.identity(4)) == 4
    assert rank(BitMatrix.zeros(3, 3)) == 0
    assert rank(BitMatrix.from_rows([[1, 1], [1, 1]])) == 1


def test_rank_transpose_invariant(rng):
    for _ in range(50):
        m = random_matrix(rng.randrange(1, 10), rng.randrange(1, 10), rng)
        assert rank(m) == rank(m.transpose())


def test_null_space_trivial_kernel():
    assert null_space(BitMatrix.identity(4)) == []


def test_null_space_full_kernel():
    basis = null_space(BitMatrix.zeros(3, 3))
    assert basis == [BitVector.unit(3, 0), BitVector.unit(3, 1), BitVector.unit(3, 2)]


def test_null_space_single_relation():
    basis = null_space(BitMatrix.from_rows([[1, 1]]))
    assert basis == [BitVector.from_bits([1, 1])]


def test_null_space_property(rng):
    for _ in range(100):
        m = random_matrix(rng.randrange(1, 12), rng.randrange(1, 12), rng)
        basis = null_space(m)
        assert len(basis) == m.ncols - rank(m)
        for v in basis:
            assert mat_vec(m, v).is_zero()
        # basis is independent
        if basis:
            stacked = BitMatrix.from_bitvectors(basis, m.ncols)
            assert rank(stacked) == len(basis)


def test_null_space_deterministic(rng):
    m = random_matrix(9, 14, rng)
    assert null_space(m) == null_space(m)


# ---------------------------------------------------------------------------
# StreamingEliminator
# ---------------------------------------------------------------------------


def test_eliminator_zero_row_adds_no_pivot():
    e = StreamingEliminator(5)
    e.feed(BitVector.zeros(5))
    assert e.rank == 0
    assert e.pivot_columns == ()


def test_eliminator_duplicate_row_absorbed():
    e = StreamingEliminator(4)
    e.feed(BitVector.unit(4, 2))
    e.feed(BitVector.unit(4, 2))
    assert e.rank == 1
    assert e.pivot_columns == (2,)


def test_eliminator_width_mismatch():
    e = StreamingEliminator(4)
    with pytest.raises(ValueError):
        e.feed(BitVector.zeros(5))


def test_eliminator_k2_system():
    # the four compatibility equations of theta = theta' = K2, fed as rows:
    # c1+b0, a1+d0, a0+d1, c0+b1 in layout [a0 a1 b0 b1 c0 c1 d0 d1]
    rows = [
        [0, 0, 1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 1, 0, 0, 0],
    ]
    e = StreamingEliminator(8)
    for r in rows:
        e.feed(BitVector.from_bits(r))
    assert e.rank == 4
    assert len(e.null_space()) == 4
    # cross-check against the materialized batch computation
    m = BitMatrix.from_rows(rows)
    assert e.null_space() == null_space(m)
    reduced, _ = reduced_row_echelon(m)
    assert e.pivot_rows() == reduced


def test_eliminator_matches_batch_rref(rng):
    for _ in range(30):
        nrows = rng.randrange(1, 40)
        ncols = rng.randrange(1, 40)
        m = random_matrix(nrows, ncols, rng)
        e = StreamingEliminator(ncols)
        for i in range(nrows):
            e.feed(m.row(i))
        reduced, pivots = reduced_row_echelon(m)
        assert e.pivot_rows() == reduced
        assert e.pivot_columns == pivots
        assert e.null_space() == null_space(m)


def test_eliminator_matches_batch_rref_large(rng):
    m = random_matrix(200, 200, rng)
    e = StreamingEliminator(200)
    for i in range(200):
        e.feed(m.row(i))
    reduced, pivots = reduced_row_echelon(m)
    assert e.pivot_rows() == reduced
    assert e.pivot_columns == pivots


# ---------------------------------------------------------------------------
# stacking helpers
# ---------------------------------------------------------------------------


def test_vstack_hstack(rng):
    a = random_matrix(3, 4, rng)
    b = random_matrix(2, 4, rng)
    v = vstack(a, b)
    assert v.shape == (5, 4)
    assert v.to_lists() == a.to_lists() + b.to_lists()
    c = random_matrix(3, 2, rng)
    h = hstack(a, c)
    assert h.shape == (3, 6)
    assert h.to_lists() == [ra + rc for ra, rc in zip(a.to_lists(), c.to_lists())]
    with pytest.raises(ValueError):
        vstack(a, c)
    with pytest.raises(ValueError):
        hstack(a, b)


def test_transpose_involution(rng):
    for _ in range(20):
        m = random_matrix(rng.randrange(1, 10), rng.randrange(1, 10), rng)
        assert m.transpose().transpose() == m
