import pytest

from forestcalc.errors import ParameterError
from forestcalc.forest import make_forest, parse_forest
from forestcalc.groups import build_group, enumerate_generators


def test_order_zero_framed_free():
    g = build_group(2, 0, "framed")
    assert g.invariants() == (3, [])
    assert g.invariants_str() == "Z^3"


def test_order_one_single_index():
    g = build_group(1, 1, "framed")
    assert g.invariants_str() == "Z^0 + Z/2"


def test_order_one_framed_all_torsion_except_distinct():
    assert build_group(2, 1, "framed").invariants() == (0, [2, 2, 2, 2])
    free, torsion = build_group(3, 1, "framed").invariants()
    assert free == 1 and torsion == [2] * 9


def test_odd_twisted_boundary_twist():
    assert build_group(2, 1, "twisted").invariants() == (0, [])
    assert build_group(3, 1, "twisted").invariants() == (1, [])


def test_even_twisted():
    assert build_group(1, 2, "twisted").invariants() == (0, [2])
    assert build_group(2, 2, "twisted").invariants() == (1, [2, 2])


def test_order_zero_twisted():
    # 2*i^inf = <i,i> makes i^inf a free generator replacing <i,i>
    assert build_group(1, 0, "twisted").invariants() == (1, [])
    assert build_group(2, 0, "twisted").invariants() == (3, [])


def test_generator_enumeration_examples():
    gens = enumerate_generators(2, 0, "framed")
    assert [str(t) for t in gens] == ["<1,1>", "<1,2>", "<2,2>"]
    gens = enumerate_generators(2, 0, "framed", k=1)
    assert [str(t) for t in gens] == ["<1,2>"]
    gens = enumerate_generators(1, 1, "framed")
    assert [str(t) for t in gens] == ["<(1,1),1>"]


def test_reduce_zero_cases():
    g = build_group(2, 0, "framed")
    assert g.is_zero(parse_forest("+1*<1,2> + -1*<1,2>", 2))
    assert not g.is_zero(parse_forest("+1*<1,2>", 2))
    g = build_group(1, 1, "framed")
    assert g.is_zero(parse_forest("+2*<(1,1),1>", 1))


def test_reduce_order_filter():
    g = build_group(2, 1, "framed")
    f = parse_forest("+1*<(1,2),2> + +5*<1,2>", 2)
    e = g.reduce_forest(f)
    assert not e.is_zero
    # only the order-1 term contributes
    assert g.reduce_forest(parse_forest("+1*<(1,2),2>", 2)) == e


def test_interior_twist_relation():
    g = build_group(1, 2, "twisted")
    f = parse_forest("+2*(1,1)^inf + -1*<(1,1),(1,1)>", 1)
    assert g.is_zero(f)


def test_twisted_ihx_rows_vanish_in_group():
    g = build_group(2, 4, "twisted")
    for rel in g.relations:
        terms = [(c, g.generators[i]) for i, c in enumerate(rel) if c]
        assert g.is_zero(make_forest(2, terms))


def test_ihx_relation_order_two():
    # the three Jacobi partners at an internal split sum to zero in the group
    from forestcalc.groups import _ihx_triples
    from forestcalc.trees import framed_tree

    g = build_group(3, 2, "framed")
    terms = []
    for c, (p, q) in _ihx_triples(((1, 2), (3, 3))):
        tree, sign = framed_tree(p, q)
        terms.append((c * sign, tree))
    assert g.is_zero(make_forest(3, terms))


def test_k_group_quotient():
    g = build_group(2, 0, "framed", k=1)
    assert g.invariants() == (1, [])
    # multiplicity-2 trees reduce to zero in the quotient
    assert g.is_zero(parse_forest("+1*<1,1>", 2))


def test_mod2_reduction_coords():
    g = build_group(1, 1, "framed")
    e3 = g.reduce_forest(parse_forest("+3*<(1,1),1>", 1))
    e1 = g.reduce_forest(parse_forest("+1*<(1,1),1>", 1))
    assert e3 == e1


def test_bad_parameters():
    with pytest.raises(ParameterError):
        build_group(0, 1, "framed")
    with pytest.raises(ParameterError):
        enumerate_generators(2, 1, "fancy")
