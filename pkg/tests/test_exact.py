from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from permweb.errors import BoundaryError
from permweb.exact import (LinMap, SpanAccumulator, binomial, commutant_dimension,
                           compose, format_rational, hom_space_dimension,
                           linmap_from_json, linmap_to_json, parse_rational,
                           rank, tensor)


def mat(rows, cols, data, dom="a", cod="b"):
    entries = {}
    for r in range(rows):
        for c in range(cols):
            if data[r][c]:
                entries[(r, c)] = Fraction(data[r][c])
    return LinMap(dom, cod, rows, cols, entries)


def test_identity_compose():
    i3 = LinMap.identity("x", 3)
    assert compose(i3, i3) == i3


def test_compose_row_times_column():
    # the 1x2 times 2x1 hand product; this is the k=l=1 bigon count
    row = mat(1, 2, [[1, 1]], dom="p", cod="q")
    col = mat(2, 1, [[1], [1]], dom="r", cod="p")
    out = compose(row, col)
    assert out.rows == 1 and out.cols == 1
    assert out[(0, 0)] == 2


def test_compose_zero_annihilates():
    f = mat(2, 2, [[1, 2], [3, 4]], dom="m", cod="n")
    z = LinMap.zero("k", "m", 2, 2)
    assert compose(f, z).is_zero()


def test_compose_label_mismatch():
    f = mat(2, 2, [[1, 0], [0, 1]], dom="m", cod="n")
    g = mat(2, 2, [[1, 0], [0, 1]], dom="k", cod="l")
    with pytest.raises(BoundaryError):
        compose(f, g)


def test_tensor_identities():
    assert tensor(LinMap.identity("a", 2), LinMap.identity("b", 3)).entries == \
        {(i, i): Fraction(1) for i in range(6)}
    s = tensor(mat(1, 1, [[2]]), mat(1, 1, [[3]]))
    assert s[(0, 0)] == 6


def test_rank_examples():
    assert rank(LinMap.identity("x", 5)) == 5
    assert rank(LinMap.zero("a", "b", 3, 4)) == 0
    assert rank(mat(2, 2, [[1, 1], [1, 1]])) == 1
    assert rank(mat(2, 2, [[Fraction(1, 2), 1], [1, 3]])) == 2


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def linmaps(rows, cols, dom="a", cod="b"):
    return st.lists(small_rationals, min_size=rows * cols, max_size=rows * cols).map(
        lambda vals: LinMap(dom, cod, rows, cols,
                            {(i // cols, i % cols): v
                             for i, v in enumerate(vals) if v}))


@settings(max_examples=60)
@given(linmaps(2, 3, "c", "d"), linmaps(3, 2, "b", "c"), linmaps(2, 2, "a", "b"))
def test_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@settings(max_examples=60)
@given(linmaps(3, 3, "b", "c"), linmaps(3, 3, "a", "b"))
def test_rank_of_product_bounded(f, g):
    assert rank(compose(f, g)) <= min(rank(f), rank(g))


@settings(max_examples=40)
@given(linmaps(2, 2, "b", "c"), linmaps(2, 2, "a", "b"),
       linmaps(2, 2, "e", "f"), linmaps(2, 2, "d", "e"))
def test_tensor_distributes_over_compose(f1, f2, g1, g2):
    lhs = tensor(compose(f1, f2), compose(g1, g2))
    rhs = compose(tensor(f1, g1), tensor(f2, g2))
    assert lhs.entries == rhs.entries


def test_commutant_dimensions():
    assert commutant_dimension([], dim=4) == 16
    assert commutant_dimension([LinMap.identity("x", 3)]) == 9
    # place permutation of two tensor factors of C^2: 3x3 + 1x1 blocks
    lbl = "c2c2"
    swap = LinMap(lbl, lbl, 4, 4,
                  {(0, 0): 1, (3, 3): 1, (1, 2): 1, (2, 1): 1})
    assert commutant_dimension([swap]) == 10


def test_hom_space_dimension_transporter():
    # intertwiners between the swap action and itself on different labels
    a = LinMap("u", "u", 2, 2, {(0, 1): 1, (1, 0): 1})
    b = LinMap("v", "v", 2, 2, {(0, 1): 1, (1, 0): 1})
    assert hom_space_dimension([a], [b]) == 2


def test_span_accumulator():
    acc = SpanAccumulator()
    assert acc.add({0: Fraction(1), 1: Fraction(2)})
    assert not acc.add({0: Fraction(2), 1: Fraction(4)})
    assert acc.add({1: Fraction(1)})
    assert acc.rank == 2


def test_json_round_trip():
    f = mat(2, 3, [[Fraction(1, 2), 0, -2], [0, 3, 0]], dom="src", cod="dst")
    obj = linmap_to_json(f)
    assert obj["entries"] == [[0, 0, "1/2"], [0, 2, "-2"], [1, 1, "3"]]
    assert linmap_from_json(obj) == f


def test_rational_strings():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational("-7/2") == Fraction(-7, 2)


def test_generalized_binomial():
    assert binomial(5, 2) == 10
    assert binomial(-1, 1) == -1
    assert binomial(-2, 3) == -4
    assert binomial(3, 0) == 1
    assert binomial(2, 5) == 0
