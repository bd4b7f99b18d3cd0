import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from permweb.errors import BoundaryError, ParseError, UnsupportedError
from permweb.spiders import (BellX, Cross, Id, LadderE, LadderF, Merge, Split,
                             SpiderDiagram, SpiderExpr, empty_expr, evaluate,
                             expand_cross, hcompose, identity_expr, parse,
                             parse_diagram, parse_linear, print_diagram,
                             print_expr, vcompose)
from permweb.tabloids import (braid_op, circle, format_image,
                              identity_morphism, lowering_op, merge_op,
                              parse_tabloid, split_op)


def test_parse_single_generators():
    e = parse("on [1,1]: merge(1,1)")
    (diag, coeff), = e.terms.items()
    assert coeff == 1
    assert diag.bottom == (1, 1) and diag.top == (2,)
    assert evaluate(e) == merge_op(1, 1)

    e = parse("on [2,1]: F(1,1)")
    assert evaluate(e) == lowering_op((2, 1), 1, 1)

    e = parse("on [3]: split(2,1) ; id(2) | id(1)")
    assert evaluate(e) == split_op(2, 1)


def test_parse_whitespace_insensitive():
    assert parse("on[2,1]:F(1,1)") == parse("on [ 2 , 1 ] :  F( 1 , 1 )")


def test_parse_syntax_error_position():
    with pytest.raises(ParseError) as exc:
        parse("on [2,1]: wibble(1)")
    assert exc.value.position is not None


def test_parse_boundary_error_reports_layer():
    with pytest.raises(BoundaryError) as exc:
        parse("on [2,1]: merge(1,1)")
    assert "layer 0" in str(exc.value)
    with pytest.raises(BoundaryError) as exc:
        parse("on [1,1]: merge(1,1) ; split(1,1) ; merge(2,1)")
    assert "layer 2" in str(exc.value)


atom_st = st.one_of(
    st.builds(Id, st.integers(0, 3)),
    st.builds(Merge, st.integers(0, 3), st.integers(0, 3)),
    st.builds(Cross, st.integers(0, 3), st.integers(0, 3)),
    st.builds(Split, st.integers(0, 3), st.integers(0, 3)),
)


@st.composite
def diagrams(draw):
    first = draw(st.lists(atom_st, min_size=1, max_size=3))
    bottom = []
    for a in first:
        from permweb.spiders import atom_inputs
        bottom.extend(atom_inputs(a))
    layers = [tuple(first)]
    boundary = []
    from permweb.spiders import atom_outputs
    for a in first:
        boundary.extend(atom_outputs(a))
    n_more = draw(st.integers(0, 2))
    for _ in range(n_more):
        if not boundary:
            break
        use_wide = draw(st.booleans()) and len(boundary) >= 2
        if use_wide:
            i = draw(st.integers(1, len(boundary) - 1))
            r = draw(st.integers(0, 2))
            atom = LadderE(i, r) if draw(st.booleans()) else LadderF(i, r)
            layers.append(atom)
            from permweb.spiders import wide_output
            boundary = list(wide_output(atom, tuple(boundary)))
        else:
            layer = []
            rest = list(boundary)
            new_boundary = []
            while rest:
                if len(rest) >= 2 and draw(st.booleans()):
                    k, l = rest[0], rest[1]
                    atom = draw(st.sampled_from(
                        [Merge(k, l), Cross(k, l)]))
                    rest = rest[2:]
                else:
                    atom = Id(rest[0])
                    rest = rest[1:]
                layer.append(atom)
                from permweb.spiders import atom_outputs as ao
                new_boundary.extend(ao(atom))
            layers.append(tuple(layer))
            boundary = new_boundary
    return SpiderDiagram(tuple(bottom), tuple(layers))


@settings(max_examples=150)
@given(diagrams())
def test_print_parse_round_trip(diag):
    text = print_diagram(diag)
    assert parse_diagram(text) == diag


def test_vcompose_stacks():
    lower = parse("on [3]: split(2,1)")
    upper = parse("on [2,1]: merge(2,1)")
    both = vcompose(upper, lower)
    assert evaluate(both) == merge_op(2, 1) @ split_op(2, 1)
    with pytest.raises(BoundaryError):
        vcompose(lower, lower)


def test_vcompose_bilinear():
    a = parse("on [1,1]: cross(1,1)")
    b = parse("on [1,1]: id(1) | id(1)")
    top = parse("on [1,1]: merge(1,1)")
    combo = (a + b.scale(Fraction(1, 2)))
    out = vcompose(top, combo)
    assert evaluate(out) == (merge_op(1, 1) @ braid_op(1, 1)) + \
        merge_op(1, 1).scale(Fraction(1, 2))


def test_hcompose_unit():
    d = parse("on [2,1]: F(1,1) ; merge(1,2)")
    assert hcompose(d, empty_expr()) == d
    assert hcompose(empty_expr(), d) == d


def test_hcompose_shifts_wide_atoms():
    left = identity_expr((1, 1))
    right = parse("on [2,1]: F(1,1)")
    combined = hcompose(left, right)
    (diag, _), = combined.terms.items()
    assert diag.bottom == (1, 1, 2, 1)
    wides = [l for l in diag.layers if isinstance(l, LadderF)]
    assert wides and wides[0].i == 3
    assert evaluate(combined) == circle(identity_morphism((1, 1)),
                                        lowering_op((2, 1), 1, 1))


def test_functoriality_both_compositions():
    pairs = [
        (parse("on [3]: split(2,1)"), parse("on [2,1]: merge(2,1)")),
        (parse("on [1,1]: cross(1,1)"), parse("on [1,1]: merge(1,1)")),
        (parse("on [2,2]: E(1,1)"), parse("on [3,1]: F(1,2)")),
    ]
    for lower, upper in pairs:
        assert evaluate(vcompose(upper, lower)) == \
            evaluate(upper) @ evaluate(lower)
    for a, b in [(parse("on [2]: split(1,1)"), parse("on [1,1]: merge(1,1)")),
                 (parse("on [2,1]: F(1,1)"), parse("on [1]: id(1)"))]:
        assert evaluate(hcompose(a, b)) == circle(evaluate(a), evaluate(b))


def test_interchange_law_instance():
    # disjoint merge and split slide past each other across layers
    one = parse("on [1,1,3]: merge(1,1) | split(2,1) ; id(2) | id(2) | id(1)")
    other = parse("on [1,1,3]: id(1) | id(1) | split(2,1) ; merge(1,1) | id(2) | id(1)")
    assert evaluate(one) == evaluate(other)


def test_evaluate_identity_layer():
    e = parse("on [2,1]: id(2) | id(1)")
    assert evaluate(e) == identity_morphism((2, 1))


def test_evaluate_worked_example():
    out = evaluate(parse("on [2,1]: F(1,1)")).apply(parse_tabloid("1,2|3"))
    assert format_image(out) == "1·{1|2,3} + 1·{2|1,3}"


def test_cross_evaluation_vs_ladder_difference():
    # swap = EF - id on the two-strand module with unit labels
    swap = evaluate(parse("on [1,1]: cross(1,1)"))
    ef = evaluate(parse("on [1,1]: F(1,1) ; E(1,1)"))
    assert swap == ef - identity_morphism((1, 1))


def test_expand_cross_terms():
    e = expand_cross(1, 1)
    assert len(e.terms) == 2
    coeffs = sorted(e.terms.values())
    assert coeffs == [Fraction(-1), Fraction(1)]
    single = expand_cross(3, 0)
    assert len(single.terms) == 1
    for k in range(0, 5):
        for l in range(0, 5):
            assert evaluate(expand_cross(k, l, "EF")) == braid_op(k, l)
            assert evaluate(expand_cross(k, l, "FE")) == braid_op(k, l)


def test_negative_labels_are_zero():
    d = SpiderDiagram((1, 1), (LadderE(1, 2), LadderF(1, 2)))
    assert d.is_zero()
    assert SpiderExpr.from_diagram(d).terms == {}
    assert evaluate(SpiderExpr.from_diagram(d)).is_zero()


def test_bells_unsupported_outside_sp():
    d = SpiderDiagram((1, 1), (BellX(1),))
    with pytest.raises(UnsupportedError):
        evaluate(SpiderExpr.from_diagram(d))


def test_parse_linear():
    e = parse_linear("1/2 * on [2]: split(1,1) + on [2]: split(1,1)")
    (diag, coeff), = e.terms.items()
    assert coeff == Fraction(3, 2)
    e = parse_linear("on [1,1]: cross(1,1) - on [1,1]: id(1) | id(1)")
    assert len(e.terms) == 2
    assert print_expr(e)
