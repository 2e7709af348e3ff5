import pytest

from forestcalc.errors import (
    DomainError,
    LabelOutOfRangeError,
    MalformedTwistedError,
    ParseError,
)
from forestcalc.forest import (
    forest_add,
    forest_scale,
    make_forest,
    parse_forest,
    parse_tree_term,
)
from forestcalc.trees import twisted_tree


def test_parse_single_framed():
    f = parse_forest("+1*<1,2>", 2)
    assert len(f.terms) == 1
    assert f.terms[0][0] == 1
    assert str(f.terms[0][1]) == "<1,2>"


def test_parse_folds_canonical_sign():
    f = parse_forest("+1*<(2,1),3>", 3)
    assert f.terms[0][0] == -1
    assert str(f.terms[0][1]) == "<(1,2),3>"


def test_parse_twisted_keeps_coefficient():
    f = parse_forest("+2*((1,2),3)^inf", 3)
    assert f.terms[0][0] == 2
    assert f.terms[0][1].order == 2


def test_twisted_sign_free():
    # (-J)^inf = J^inf: a vertex swap does not change the term
    f1 = parse_forest("+1*((1,2),3)^inf", 3)
    f2 = parse_forest("+1*((2,1),3)^inf", 3)
    assert f1 == f2


def test_merge_and_cancel():
    assert parse_forest("+1*<1,2> + -1*<1,2>", 2).is_zero
    f = parse_forest("+1*<1,2> + +1*<1,2>", 2)
    assert f.terms[0][0] == 2


def test_mixed_kind_forest():
    f = parse_forest("+1*<1,2> + +1*(1,2)^inf", 2)
    assert len(f.terms) == 2


def test_print_parse_roundtrip():
    texts = [
        "+2*<1,2> + -1*<(1,2),3>",
        "+1*((1,2),1)^inf + +3*<(1,1),(2,2)>",
        "0",
    ]
    for text in texts:
        f = parse_forest(text, 3)
        assert parse_forest(str(f), 3) == f


def test_parse_errors():
    with pytest.raises(LabelOutOfRangeError):
        parse_forest("+1*<1,4>", 2)
    with pytest.raises(ParseError):
        parse_forest("+1*<1,2", 2)
    with pytest.raises(MalformedTwistedError):
        parse_forest("+1*<1,2>^inf", 2)
    with pytest.raises(ParseError):
        parse_forest("1,2", 2)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_forest("+1*<1,x>", 2)
    assert err.value.position is not None


def test_make_forest_rejects_rooted():
    from forestcalc.trees import rooted_tree

    t, _ = rooted_tree((1, 2))
    with pytest.raises(DomainError):
        make_forest(2, [(1, t)])


def test_add_scale():
    f = parse_forest("+1*<1,2>", 2)
    g = parse_forest("+2*<1,1>", 2)
    assert str(forest_add(f, g)) == "+2*<1,1> + +1*<1,2>"
    assert forest_scale(f, 0).is_zero
    with pytest.raises(DomainError):
        forest_add(f, parse_forest("+1*<1,2>", 3))


def test_parse_tree_term():
    coeff, tree = parse_tree_term("-3*(1,1)^inf", 1)
    assert coeff == -3
    assert tree == twisted_tree((1, 1))
    with pytest.raises(ParseError):
        parse_tree_term("+1*<1,2> + +1*<1,1>", 2)


def test_deterministic_term_order():
    f = parse_forest("+1*<2,2> + +1*<1,1> + +1*(1,1)^inf", 2)
    assert str(f) == str(parse_forest(str(f), 2))
