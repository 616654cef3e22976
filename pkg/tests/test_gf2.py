import random

import pytest

from wsteenrod.gf2 import (
    BitMatrix,
    BitVector,
    DimensionMismatch,
    Subspace,
    kernel,
    quotient,
    rank,
    rref,
    solve,
)


def M(entries, ncols=None):
    return BitMatrix.from_entries(entries, ncols)


def test_rref_identity():
    m = BitMatrix.identity(2)
    ech, pivots, rk = rref(m)
    assert ech == m
    assert pivots == (0, 1)
    assert rk == 2


def test_rref_duplicate_rows():
    ech, pivots, rk = rref(M([[1, 1], [1, 1]]))
    assert ech == M([[1, 1], [0, 0]])
    assert rk == 1


def test_rref_zero_matrix():
    ech, pivots, rk = rref(BitMatrix.zero(3, 4))
    assert rk == 0
    assert pivots == ()
    assert ech == BitMatrix.zero(3, 4)


def test_rref_idempotent_random():
    rng = random.Random(11)
    for _ in range(50):
        nrows = rng.randrange(1, 9)
        ncols = rng.randrange(1, 9)
        m = BitMatrix(ncols, (rng.getrandbits(ncols) for _ in range(nrows)))
        ech, _, _ = rref(m)
        again, _, _ = rref(ech)
        assert again == ech


def test_kernel_sum_zero():
    sub = kernel(M([[1, 1]]))
    assert sub.dim == 1
    assert BitVector.from_support(2, [0, 1]) in sub


def test_kernel_identity_and_zero():
    assert kernel(BitMatrix.identity(4)).dim == 0
    full = kernel(BitMatrix.zero(2, 3))
    assert full.dim == 3


def test_kernel_members_annihilate():
    rng = random.Random(5)
    for _ in range(40):
        nrows = rng.randrange(0, 7)
        ncols = rng.randrange(0, 7)
        m = BitMatrix(ncols, (rng.getrandbits(ncols) for _ in range(nrows)))
        sub = kernel(m)
        assert rank(m) + sub.dim == ncols
        for i in range(sub.basis.nrows):
            assert m.mul_vec(sub.basis.row(i)).is_zero()


def test_rank_nullity_wide():
    rng = random.Random(99)
    for ncols in (64, 200, 512):
        nrows = ncols // 2 + 3
        m = BitMatrix(ncols, (rng.getrandbits(ncols) for _ in range(nrows)))
        assert rank(m) + kernel(m).dim == ncols


def test_solve_identity():
    m = BitMatrix.identity(3)
    b = BitVector.from_support(3, [0, 2])
    x = solve(m, b)
    assert x == b


def test_solve_absent():
    assert solve(M([[1, 1]]), BitVector.from_support(2, [0])) is None


def test_solve_zero():
    x = solve(BitMatrix.zero(2, 3), BitVector(3, 0))
    assert x is not None
    assert x.is_zero()


def test_solve_roundtrip_random():
    rng = random.Random(17)
    for _ in range(60):
        nrows = rng.randrange(1, 8)
        ncols = rng.randrange(1, 8)
        m = BitMatrix(ncols, (rng.getrandbits(ncols) for _ in range(nrows)))
        combo = BitVector(nrows, rng.getrandbits(nrows))
        b = m.vec_mul(combo)
        x = solve(m, b)
        assert x is not None
        assert m.vec_mul(x) == b


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve(M([[1, 1]]), BitVector(3, 0))


def test_quotient_zero_subspace():
    sub = Subspace.from_vectors(3, [])
    reps, project = quotient(3, sub)
    assert reps == [0, 1, 2]
    v = BitVector.from_support(3, [1])
    assert project(v) == v


def test_quotient_full_space():
    sub = Subspace.from_matrix_rows(BitMatrix.identity(2))
    reps, project = quotient(2, sub)
    assert reps == []
    assert project(BitVector.from_support(2, [1])).is_zero()


def test_quotient_diagonal():
    # span{(1,1)} in dim 2: the two unit vectors land in the same coset
    sub = Subspace.from_vectors(2, [BitVector.from_support(2, [0, 1])])
    reps, project = quotient(2, sub)
    assert len(reps) == 1
    assert project(BitVector.from_support(2, [0])) == project(
        BitVector.from_support(2, [1])
    )
    # brute force over all four vectors: projection is constant on cosets
    seen = {}
    for bits in range(4):
        v = BitVector(2, bits)
        key = project(v).bits
        coset = min(bits, bits ^ 0b11)
        seen.setdefault(coset, set()).add(key)
    assert all(len(vals) == 1 for vals in seen.values())


def test_project_idempotent_and_kernel():
    rng = random.Random(23)
    for _ in range(40):
        dim = rng.randrange(1, 9)
        vecs = [BitVector(dim, rng.getrandbits(dim)) for _ in range(rng.randrange(0, 4))]
        sub = Subspace.from_vectors(dim, vecs)
        reps, project = quotient(dim, sub)
        for _ in range(10):
            v = BitVector(dim, rng.getrandbits(dim))
            assert project(project(v)) == project(v)
        # kernel of the projection is exactly the subspace, both inclusions
        for i in range(sub.basis.nrows):
            assert project(sub.basis.row(i)).is_zero()
        for bits in range(1 << dim if dim <= 6 else 0):
            v = BitVector(dim, bits)
            if project(v).is_zero():
                assert v in sub


def test_vec_mul_and_transpose():
    m = M([[1, 0, 1], [0, 1, 1]])
    v = BitVector.from_support(2, [0, 1])
    assert m.vec_mul(v) == BitVector.from_support(3, [0, 1])
    assert m.transpose().transpose() == m
