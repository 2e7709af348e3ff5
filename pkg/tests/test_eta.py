import pytest

from forestcalc.errors import OrderMismatchError, ParameterError
from forestcalc.eta import (
    arf_classes,
    eta,
    eta_cokernel_invariants,
    eta_k,
    eta_kernel,
    eta_tree,
    milnor_from_forest,
)
from forestcalc.forest import make_forest, parse_forest
from forestcalc.freelie import bracket_kernel, bracket_map, k_project_tensor
from forestcalc.groups import build_group
from forestcalc.trees import multiplicity, twisted_tree


def test_eta_order_zero():
    x = eta(parse_forest("+1*<1,2>", 2), 0)
    assert str(x) == "+1*x1 (x) x2 + +1*x2 (x) x1"


def test_eta_order_one_in_kernel():
    x = eta(parse_forest("+1*<(1,2),3>", 3), 1)
    assert len(x.items()) == 3
    assert bracket_map(x).is_zero


def test_eta_image_always_in_kernel():
    for m, n in [(2, 1), (2, 2), (2, 3), (3, 1)]:
        g = build_group(m, n, "twisted")
        for gen in g.generators:
            assert bracket_map(eta_tree(m, n, gen)).is_zero


def test_eta_twisted_half_rule():
    for m, n in [(1, 2), (2, 2)]:
        g = build_group(m, n, "twisted")
        for gen in g.generators:
            if gen.kind != "twisted":
                continue
            from forestcalc.trees import framed_tree

            tree, sign = framed_tree(gen.data, gen.data)
            lhs = eta_tree(m, n, gen, 2)
            rhs = eta_tree(m, n, tree, sign)
            assert lhs == rhs


def test_eta_order_mismatch():
    with pytest.raises(OrderMismatchError):
        eta(parse_forest("+1*<1,2>", 2), 1)


def test_relation_rows_map_to_zero():
    for m in (1, 2):
        for n in range(0, 4):
            g = build_group(m, n, "twisted")
            for rel in g.relations:
                terms = [(c, g.generators[i]) for i, c in enumerate(rel) if c]
                assert eta(make_forest(m, terms), n).is_zero


def test_eta_k_drops_high_multiplicity():
    assert eta_k(parse_forest("+1*<(1,2),2>", 2), 1, 1).is_zero
    f = parse_forest("+1*<(1,2),3>", 3)
    assert eta_k(f, 1, 1) == eta(f, 1)


def test_eta_k_factorization():
    f = parse_forest("+1*<(1,2),3> + +1*<(1,1),2> + +1*(1,2)^inf", 3)
    for k in (1, 2):
        filtered = make_forest(
            3, [(c, t) for c, t in f.terms if multiplicity(t) <= k]
        )
        for n in (1, 2):
            part = make_forest(
                3,
                [
                    (c, t)
                    for c, t in filtered.terms
                    if (t.order if t.kind == "framed" else 2 * t.order) == n
                ],
            )
            assert eta_k(part, n, k) == k_project_tensor(eta(part, n), k)


def test_milnor_from_forest_kernel_membership():
    x = milnor_from_forest(parse_forest("+1*(1,2)^inf", 2), 2)
    kern = bracket_kernel(2, 2)
    assert kern.coordinates(x) is not None


def test_eta_iso_orders():
    for m, n in [(1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1), (1, 3), (2, 3)]:
        assert eta_kernel(m, n)[0] == []
        assert eta_cokernel_invariants(m, n) == ([], 0)


def test_eta_kernel_order_two():
    for m in (1, 2):
        invfac, lifts = eta_kernel(m, 2)
        assert invfac == [2] * m
        g = build_group(m, 2, "twisted")
        reps = {
            tuple(g.reduce_forest(make_forest(m, [(1, twisted_tree((i, i)))])).coords)
            for i in range(1, m + 1)
        }
        assert {tuple(g.reduce_forest(f).coords) for f in lifts} == reps


def test_arf_classes():
    classes = arf_classes(2, 1, 4)
    assert [str(t) for _, t in classes] == ["(1,1)^inf", "(2,2)^inf"]
    classes = arf_classes(2, 2, 4)
    # degree-2 word (1,2) has multiplicity 1 = 4//4
    assert [w for w, _ in classes] == [(1, 2)]
    with pytest.raises(ParameterError):
        arf_classes(2, 1, 3)
