import random

import pytest

from permweb.combinatorics import partitions
from permweb.errors import DomainError
from permweb.kron import (block_lowering, block_raising, decompose_tensor,
                          oracle_tensor, tensor_generator, tensor_identity)
from permweb.tabloids import (Tabloid, identity_morphism, lowering_op,
                              perm_module, permutation_matrix, raising_op,
                              transposition)


def test_decomposition_worked_examples():
    dec = decompose_tensor((3, 1), (2, 2))
    assert dec.blocks == [((2, 1), (0, 1)), ((1, 2), (1, 0))]
    assert [tuple(p for p in s if p) for s in dec.flat_shapes] == \
        [(2, 1, 1), (1, 2, 1)]

    dec = decompose_tensor((3, 1), (3, 1))
    assert dec.blocks == [((3, 0), (0, 1)), ((2, 1), (1, 0))]

    dec = decompose_tensor((3, 1), (4,))
    assert dec.blocks == [((3,), (1,))]

    dec = decompose_tensor((4,), (4,))
    assert dec.blocks == [((4,),)]

    with pytest.raises(DomainError):
        decompose_tensor((2, 1), (1, 1))


def test_bijection_is_permutation():
    for lam, mu in [((3, 1), (2, 2)), ((2, 1), (2, 1)), ((2, 2), (2, 1, 1))]:
        for side in ("left", "right"):
            dec = decompose_tensor(lam, mu, side)
            assert sorted(dec.bijection) == list(range(dec.total_dim))
            assert dec.total_dim == perm_module(lam).dim * perm_module(mu).dim


def test_bijection_equivariance_blocks():
    # conjugating the place-permutation action is block diagonal, and each
    # diagonal block is the action on the flattened block module
    lam, mu = (2, 1), (2, 1)
    dec = decompose_tensor(lam, mu)
    d = 3
    for i in range(d - 1):
        g = transposition(d, i, i + 1)
        big = oracle_tensor(permutation_matrix(lam, g),
                            permutation_matrix(mu, g))
        for (r, c) in big.blocks:
            assert r == c
        for b, shape in enumerate(dec.flat_shapes):
            assert big.block(b, b) == permutation_matrix(shape, g)


def test_block_ladder_zero_conditions():
    a = ((2, 1), (0, 1))
    m = block_raising(a, 1, 1)          # needs A_{12} > 0: nonzero
    assert not m.is_zero()
    assert m.source == (2, 1, 0, 1) and m.target == (3, 0, 0, 1)
    assert block_lowering(a, 2, 1).is_zero()      # A_{21} = 0
    b = ((3, 0), (0, 1))
    assert block_raising(b, 1, 1).is_zero()       # A_{12} = 0


def test_eq_oldman_property():
    # c_{i,k} T (x) c_{j,k} T' corresponds to the single block move
    rng = random.Random(5)
    lam, mu = (2, 2, 1), (3, 2)
    ml, mr = perm_module(lam), perm_module(mu)
    dec = decompose_tensor(lam, mu)
    for _ in range(50):
        t = ml.basis[rng.randrange(ml.dim)]
        u = mr.basis[rng.randrange(mr.dim)]
        k = rng.randint(1, 5)
        i = rng.randint(1, len(lam))
        j = rng.randint(1, len(mu))
        t2 = t.move(i, {k})
        u2 = u.move(j, {k})
        # pair words: block cell of element k becomes (i,j)
        from permweb.kron import _cells_matrix
        _, word = _cells_matrix(t, u, "right")
        _, word2 = _cells_matrix(t2, u2, "right")
        moved = Tabloid(word, len(lam) * len(mu)).move(
            (i - 1) * len(mu) + j, {k})
        assert word2 == moved.word


@pytest.mark.parametrize("d", [2, 3])
def test_generator_matches_oracle_small(d):
    parts = list(partitions(d))
    for lam in parts:
        for mu in parts:
            for gen in ("E", "F"):
                for j in range(1, len(mu)):
                    op = (raising_op if gen == "E" else lowering_op)(mu, j, 1)
                    got = tensor_generator("right", gen, j, lam, mu)
                    want = oracle_tensor(identity_morphism(lam), op, "right")
                    assert got == want
                for j in range(1, len(lam)):
                    op = (raising_op if gen == "E" else lowering_op)(lam, j, 1)
                    got = tensor_generator("left", gen, j, lam, mu)
                    want = oracle_tensor(op, identity_morphism(mu), "left")
                    assert got == want


def test_tensor_identity_blocks():
    block = tensor_identity((2, 1), (2, 1))
    assert set(block.blocks) == {(0, 0), (1, 1), (2, 2)} or \
        all(r == c for r, c in block.blocks)
    oracle = oracle_tensor(identity_morphism((2, 1)), identity_morphism((2, 1)))
    assert block == oracle


def test_two_indexings_are_conjugate():
    lam, mu = (3, 1), (2, 2)
    right = decompose_tensor(lam, mu, "right")
    left = decompose_tensor(lam, mu, "left")
    transposed = sorted(tuple(zip(*a)) for a in left.blocks)
    assert sorted(right.blocks) == transposed
