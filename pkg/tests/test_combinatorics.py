import pytest
from hypothesis import given, settings, strategies as st

from permweb.combinatorics import (compositions, dominates,
                                   dominating_partition, enumerate_contingency,
                                   gl_irrep_dimension, gl_weights_of_irrep,
                                   kappa, multinomial, partitions,
                                   schur_algebra_dimension)
from permweb.errors import DomainError, UnsupportedError


def test_kappa():
    assert kappa((1, 0, 2)) == (1, 2)
    assert kappa((0, 0, 0)) == ()
    assert kappa((3, 1)) == (3, 1)
    with pytest.raises(DomainError):
        kappa((1, -1))


def test_dominating_partition():
    assert dominating_partition((1, 3)) == (3, 1)
    assert dominating_partition((2, 2)) == (2, 2)
    assert dominating_partition((1, 0, 2, 1)) == (2, 1, 1)


def test_contingency_worked_sets():
    assert enumerate_contingency((3, 1), (2, 2)) == [
        ((2, 1), (0, 1)), ((1, 2), (1, 0))]
    assert enumerate_contingency((3, 1), (3, 1)) == [
        ((3, 0), (0, 1)), ((2, 1), (1, 0))]
    assert len(enumerate_contingency((2, 1), (2, 1))) == 2


def test_contingency_brute_force_count():
    # direct enumeration of all 2x2 nonnegative matrices with given margins
    lam, mu = (2, 1), (2, 1)
    count = 0
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a + b, c + d) == lam and (a + c, b + d) == mu:
                        count += 1
    assert count == len(enumerate_contingency(lam, mu))


def test_contingency_degree_mismatch():
    with pytest.raises(DomainError):
        enumerate_contingency((2, 1), (1, 1))


def test_contingency_transpose_symmetry():
    for d in range(1, 5):
        for lam in compositions(d, 2):
            for mu in compositions(d, 3):
                assert len(enumerate_contingency(lam, mu)) == \
                    len(enumerate_contingency(mu, lam))


def test_gl_irrep_dimension():
    assert gl_irrep_dimension((2,), 2) == 3
    assert gl_irrep_dimension((1, 1), 2) == 1
    assert gl_irrep_dimension((1,), 5) == 5
    assert gl_irrep_dimension((1, 1, 1), 2) == 0
    assert gl_irrep_dimension((2, 1), 3) == 8


def test_gl_weights():
    assert gl_weights_of_irrep((1,), 2) == {(1, 0), (0, 1)}
    assert gl_weights_of_irrep((2, 0), 2) == {(2, 0), (1, 1), (0, 2)}
    assert gl_weights_of_irrep((1, 1), 2) == {(1, 1)}
    with pytest.raises(UnsupportedError):
        gl_weights_of_irrep((1, -1), 2)


def test_gl_weights_of_sym_square_against_tensor_square():
    # brute force: weights of Sym^2 C^2 from the tensor square basis
    sym_weights = set()
    for i in range(2):
        for j in range(i, 2):
            w = [0, 0]
            w[i] += 1
            w[j] += 1
            sym_weights.add(tuple(w))
    assert gl_weights_of_irrep((2, 0), 2) == sym_weights


@settings(max_examples=50)
@given(st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=4))
def test_weight_set_closed_under_permutation(seq):
    lam = dominating_partition(tuple(seq))
    n = len(seq)
    if len(lam) > n:
        return
    weights = gl_weights_of_irrep(lam, n)
    from itertools import permutations
    for w in weights:
        for p in permutations(w):
            assert p in weights


def test_wedderburn_dimension_identity():
    for n in range(1, 5):
        for d in range(0, 5):
            total = sum(gl_irrep_dimension(lam, n) ** 2
                        for lam in partitions(d, n))
            assert total == schur_algebra_dimension(n, d)


def test_contingency_total_is_schur_dimension():
    for n in range(1, 5):
        for d in range(0, 5):
            weights = list(compositions(d, n))
            total = sum(len(enumerate_contingency(lam, mu))
                        for lam in weights for mu in weights)
            assert total == schur_algebra_dimension(n, d)


def test_multinomial():
    assert multinomial((2, 1)) == 3
    assert multinomial(()) == 1
    assert multinomial((1, 1, 1, 1)) == 24


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert dominates((2, 2), (2, 2))
