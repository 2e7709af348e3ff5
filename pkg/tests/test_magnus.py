import pytest

from forestcalc.errors import ParseError
from forestcalc.eta import milnor_from_forest
from forestcalc.forest import parse_forest
from forestcalc.magnus import (
    AllVanishing,
    MagnusSeries,
    magnus_expand,
    milnor_from_longitudes,
    parse_longitudes,
    parse_word,
)

HOPF = "m = 2\nl1: x2\nl2: x1\n"
BORROMEAN = (
    "m = 3\n"
    "l1: x2 x3 X2 X3\n"
    "l2: x3 x1 X3 X1\n"
    "l3: x1 x2 X1 X2\n"
)


def test_word_parsing():
    assert parse_word("x1 X2 x1", 2) == [(1, False), (2, True), (1, False)]
    with pytest.raises(ParseError):
        parse_word("x1 y2", 2)
    with pytest.raises(ParseError):
        parse_word("x3", 2)


def test_longitude_file_parsing():
    data = parse_longitudes(HOPF)
    assert data.m == 2
    assert data.words == (((2, False),), ((1, False),))
    with pytest.raises(ParseError):
        parse_longitudes("l1: x1\n")
    with pytest.raises(ParseError):
        parse_longitudes("m = 2\nl1: x1\nl1: x2\n")


def test_inverse_cancellation():
    s = magnus_expand(parse_word("x1 X1", 2), 2, 4)
    assert s.coeffs == {(): 1}


def test_truncation():
    s = magnus_expand(parse_word("x1 x1 x1", 1), 1, 2)
    assert max(len(w) for w in s.coeffs) <= 2
    assert s.coefficient((1, 1)) == 3


def test_geometric_series_inverse():
    s = MagnusSeries.generator(2, 3, 1, inverse=True)
    assert s.coefficient(()) == 1
    assert s.coefficient((1,)) == -1
    assert s.coefficient((1, 1)) == 1
    assert s.coefficient((1, 1, 1)) == -1


def test_hopf_matches_forest():
    result = milnor_from_longitudes(parse_longitudes(HOPF))
    assert result.order == 0
    assert result.value == milnor_from_forest(parse_forest("+1*<1,2>", 2), 0)


def test_borromean():
    result = milnor_from_longitudes(parse_longitudes(BORROMEAN))
    assert result.order == 1
    coeffs = dict(((w, i), c) for w, i, c in result.table)
    assert coeffs[((1, 2), 3)] == 1
    assert all(c in (-1, 0, 1) for c in coeffs.values())


def test_unlink_vanishes():
    with pytest.raises(AllVanishing):
        milnor_from_longitudes(parse_longitudes("m = 2\nl1:\nl2:\n"), cap=3)


def test_k_filtered_longitudes():
    # the only order-0 term repeats index 1, so the 1-repeating part vanishes
    data = parse_longitudes("m = 1\nl1: x1\n")
    full = milnor_from_longitudes(data)
    assert full.order == 0
    with pytest.raises(AllVanishing):
        milnor_from_longitudes(data, cap=4, k=1)


def test_whitehead_style_longitudes():
    # l1 = [x2,[x1,x2]], l2 = [[x1,x2],x1]: the cycle condition
    # [x1,l1] + [x2,l2] = 0 holds by Jacobi, first contribution at degree 3
    data = parse_longitudes(
        "m = 2\n"
        "l1: x2 x1 x2 X1 X2 X2 x2 x1 X2 X1\n"
        "l2: x1 x2 X1 X2 x1 x2 x1 X2 X1 X1\n"
    )
    result = milnor_from_longitudes(data)
    assert result.order == 2
    coeffs = dict(((w, i), c) for w, i, c in result.table)
    assert coeffs.get(((1, 1, 2), 2), 0) != 0 or coeffs.get(((1, 2, 2), 1), 0) != 0
