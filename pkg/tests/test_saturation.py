import pytest

from permweb.combinatorics import partitions
from permweb.errors import UnsupportedError
from permweb.saturation import (is_saturated_gl, module_weight_set,
                                schur_block_dims, sl2_doty_demo)


def test_sl2_demo():
    rep = sl2_doty_demo()
    assert rep.annihilates_irreducible
    assert not rep.annihilates_saturated
    assert rep.z_on_saturated[(1, 1)] == -4
    assert rep.words_stay_inside
    assert not rep.saturated_flag
    assert rep.witness == (1, 1)


def test_saturation_examples():
    # rank-two encoding: the three-dimensional irreducible alone misses
    # the invariant line; adding it saturates
    flag, witness = is_saturated_gl([(2, 0)], 2)
    assert not flag and witness == (1, 1)
    flag, witness = is_saturated_gl([(2, 0), (1, 1)], 2)
    assert flag and witness is None


def test_tensor_space_weight_data_is_saturated():
    for n, d in [(2, 2), (2, 3), (3, 3), (4, 4)]:
        hw = list(partitions(d, n))
        flag, witness = is_saturated_gl(hw, n)
        assert flag, witness


def test_saturation_rejects_nonpolynomial():
    with pytest.raises(UnsupportedError):
        is_saturated_gl([(1, -1)], 2)


def test_module_weight_set():
    weights = module_weight_set([(2, 0)], 2)
    assert weights == {(2, 0), (1, 1), (0, 2)}


def test_schur_dims_smallest():
    table = schur_block_dims(2, 2)
    assert table.total_span == 10
    assert table.expected_total == 10
    assert table.irrep_square_sum == 10
    assert table.all_match
    by_pair = {(r.lam, r.mu): r for r in table.rows}
    assert by_pair[((2, 0), (1, 1))].span_dim == 1
    assert by_pair[((2, 0), (1, 1))].contingency_count == 1
    for lam in [(2, 0), (1, 1), (0, 2)]:
        assert by_pair[(lam, lam)].span_dim >= 1


def test_schur_dims_rectangular():
    table = schur_block_dims(3, 2)
    assert table.all_match
    assert table.total_span == table.expected_total
