"""Summation maps from tree groups into the bracket kernel.

eta sends a framed tree of order n to the sum over its univalent vertices v
of X_{label(v)} (x) B_v, where B_v is the Lie bracket read off the tree
re-rooted at v.  A twisted tree J^inf maps to half of eta(<J,J>); those
coefficients are always even, so the result stays integral.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    BracketNonzeroError,
    DomainError,
    OddCoefficientError,
    OrderMismatchError,
    ParameterError,
)
from .forest import IntersectionForest, make_forest
from .freelie import (
    BracketKernel,
    TensorElement,
    bracket_kernel,
    bracket_map,
    k_project_tensor,
    lyndon_words,
    shape_to_lie,
    standard_bracketing,
)
from .groups import FLAVOR_TWISTED, build_group
from .intlinalg import left_kernel, smith_normal_form, solve_left
from .trees import (
    FRAMED,
    TWISTED,
    DecoratedTree,
    canonical_framed,
    leaf_rootings,
    oriented_shape,
    twisted_tree,
)


def _eta_framed_raw(m: int, pair) -> dict:
    """Raw tensor coefficients of eta on a framed pair, no basis reduction."""
    acc = {}
    for label, shape in leaf_rootings(*pair):
        lie = shape_to_lie(m, oriented_shape(shape))
        for w, c in lie.coeffs:
            key = (label, w)
            acc[key] = acc.get(key, 0) + c
    return acc


def eta_tree(m: int, n: int, tree: DecoratedTree, coeff: int = 1) -> TensorElement:
    """eta of a single canonical tree of generating order n."""
    if tree.kind == FRAMED:
        if tree.order != n:
            raise OrderMismatchError(f"framed tree {tree} has order {tree.order} != {n}")
        acc = {k: coeff * c for k, c in _eta_framed_raw(m, tree.data).items()}
        return TensorElement.make(m, n + 1, acc)
    if tree.kind == TWISTED:
        if 2 * tree.order != n:
            raise OrderMismatchError(
                f"twisted tree {tree} has order {tree.order} != {n}/2"
            )
        pair, sign, _ = canonical_framed(tree.data, tree.data)
        acc = {}
        for key, c in _eta_framed_raw(m, pair).items():
            half, rem = divmod(sign * coeff * c, 2)
            if rem:
                raise OddCoefficientError(
                    f"odd coefficient halving eta(<J,J>) for {tree}"
                )
            acc[key] = half
        return TensorElement.make(m, n + 1, acc)
    raise DomainError("eta is defined on framed and twisted trees")


def eta(forest: IntersectionForest, n: int) -> TensorElement:
    """eta_n of a forest; every term must have generating order n."""
    out = TensorElement.zero(forest.m, n + 1)
    for coeff, tree in forest.terms:
        out = out + eta_tree(forest.m, n, tree, coeff)
    return out


def eta_k(forest: IntersectionForest, n: int, k: int) -> TensorElement:
    """k-repeating eta: drop trees of multiplicity > k, project the image."""
    from .trees import multiplicity

    filtered = make_forest(
        forest.m,
        [(c, t) for c, t in forest.terms if multiplicity(t) <= k],
    )
    return k_project_tensor(eta(filtered, n), k)


def milnor_from_forest(forest: IntersectionForest, n: int, k=None) -> TensorElement:
    """The order-n invariant of a forest, checked to lie in the bracket kernel."""
    image = eta(forest, n) if k is None else eta_k(forest, n, k)
    check = bracket_map(image)
    if k is not None:
        from .freelie import k_project_lie

        check = k_project_lie(check, k)
    if not check.is_zero:
        raise BracketNonzeroError("eta image escapes the bracket kernel")
    return image


def _tensor_coords(kern: BracketKernel, x: TensorElement):
    return kern.coordinates(x)


@lru_cache(maxsize=None)
def eta_matrix(m: int, n: int):
    """Integer matrix of eta over (generators of T_n^inf) x (basis of D_n)."""
    group = build_group(m, n, FLAVOR_TWISTED)
    kern = bracket_kernel(m, n)
    rows = []
    for g in group.generators:
        image = eta_tree(m, n, g)
        rows.append(_tensor_coords(kern, image) if kern.rank else [])
    return group, kern, rows


def eta_cokernel_invariants(m: int, n: int):
    """Invariant factors of coker(eta_n) plus its free rank, as (torsion, free)."""
    group, kern, rows = eta_matrix(m, n)
    if kern.rank == 0:
        return [], 0
    matrix = rows if rows else [[0] * kern.rank]
    diag = smith_normal_form([list(r) for r in matrix])[0] if rows else []
    free = kern.rank - len(diag)
    return sorted(d for d in diag if d > 1), free


def eta_kernel(m: int, n: int):
    """Kernel of the induced map T_n^inf -> D_n.

    Returns (invariant factors, generator lifts as forests).  The kernel
    lattice of the generator-level matrix is divided by the relation rows of
    the group presentation.
    """
    group, kern, rows = eta_matrix(m, n)
    gens = group.generators
    if not gens:
        return [], []
    cols = kern.rank
    matrix = [list(r) if r else [0] * cols for r in rows]
    if cols == 0:
        lattice = [[1 if i == j else 0 for j in range(len(gens))] for i in range(len(gens))]
    else:
        lattice = left_kernel(matrix)
    if not lattice:
        return [], []
    # express each relation row in lattice coordinates (relations map to 0
    # under eta, hence lie in the kernel lattice)
    rel_coords = []
    for rel in group.relations:
        rel_coords.append(solve_left([list(r) for r in lattice], list(rel)))
    if rel_coords:
        diag, _, v = smith_normal_form(rel_coords, want_v=True)
    else:
        diag, v = [], [
            [1 if i == j else 0 for j in range(len(lattice))] for i in range(len(lattice))
        ]
    torsion = sorted(d for d in diag if d > 1)
    free = len(lattice) - len(diag)
    # generator lifts: columns of v past the torsion block give the surviving
    # classes; map lattice coordinates back to forests
    import_forests = []
    vt = [[v[i][j] for i in range(len(lattice))] for j in range(len(lattice))]
    picked = [i for i, d in enumerate(diag) if d > 1]
    picked += list(range(len(diag), len(lattice)))
    for j in picked:
        coeffs = vt[j]
        vec = [0] * len(gens)
        for ci, row in zip(coeffs, lattice):
            for t, x in enumerate(row):
                vec[t] += ci * x
        terms = [(c, gens[t]) for t, c in enumerate(vec) if c]
        import_forests.append(make_forest(m, terms))
    return torsion + [0] * free, import_forests


def arf_classes(m: int, j: int, k: int):
    """Representatives (J,J)^inf indexed by degree-j Lyndon words.

    In the k-repeating setting only words of multiplicity <= k//4 survive;
    k < 4 leaves nothing.
    """
    if k < 4:
        raise ParameterError("arf classes require k >= 4")
    bound = k // 4
    out = []
    for w in lyndon_words(m, j):
        if max(w.count(i) for i in set(w)) > bound:
            continue
        shape = standard_bracketing(w)
        out.append((w, twisted_tree((shape, shape))))
    return out
