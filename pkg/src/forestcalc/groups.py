"""Finitely presented abelian groups of decorated trees.

A group is presented by an ordered generator list (canonical trees) and an
integer relation matrix.  Framed groups impose 2t = 0 on symmetric trees and
Jacobi rows; twisted groups add boundary-twist rows in odd order and
interior-twist plus twisted-Jacobi rows in even order.  Normal forms and
invariants come from the Smith decomposition of the relation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, GeneratorNotFoundError, ParameterError
from .forest import IntersectionForest
from .intlinalg import mat_mul, smith_normal_form
from .trees import (
    FRAMED,
    TWISTED,
    DecoratedTree,
    framed_generators,
    framed_tree,
    internal_splits,
    leaf_rootings,
    multiplicity,
    rooted_shapes,
    twisted_generators,
    twisted_tree,
)

FLAVOR_FRAMED = "framed"
FLAVOR_TWISTED = "twisted"


def enumerate_generators(m: int, n: int, flavor: str, k=None):
    """Ordered canonical generators of the order-n tree group."""
    if flavor not in (FLAVOR_FRAMED, FLAVOR_TWISTED):
        raise ParameterError(f"unknown flavor {flavor!r}")
    gens = list(framed_generators(m, n))
    if flavor == FLAVOR_TWISTED and n % 2 == 0:
        gens += list(twisted_generators(m, n // 2))
    if k is not None:
        if k < 1:
            raise ParameterError("k must be >= 1")
        gens = [t for t in gens if multiplicity(t) <= k]
    return gens


def _ihx_triples(presentation):
    """The Jacobi partners of a framed tree split at an internal edge.

    For the split ((A,B),(C,D)) the three terms are
    I = <(A,B),(C,D)>, H = <(A,C),(B,D)>, X = <(A,D),(B,C)>,
    entering the relation as I - H + X = 0.
    """
    (a, b), (c, d) = presentation
    return [
        (1, ((a, b), (c, d))),
        (-1, ((a, c), (b, d))),
        (1, ((a, d), (b, c))),
    ]


def _accumulate(row, index, tree, coeff):
    try:
        row[index[tree]] += coeff
    except KeyError:
        raise GeneratorNotFoundError(
            f"relation tree {tree} missing from generators"
        ) from None


def _framed_rows(gens, index):
    rows = []
    for g in gens:
        if g.kind != FRAMED:
            continue
        if g.torsion:
            row = [0] * len(index)
            row[index[g]] = 2
            rows.append(row)
        for split in internal_splits(*g.data):
            row = [0] * len(index)
            for c, (p, q) in _ihx_triples(split):
                tree, sign = framed_tree(p, q)
                _accumulate(row, index, tree, c * sign)
            if any(row):
                rows.append(row)
    return rows


def _boundary_twist_rows(m, j, index):
    # i-<(J,J) = 0 for every label i and every rooted J of order j-1
    rows = []
    for i in range(1, m + 1):
        for shape in rooted_shapes(m, j - 1):
            tree, _ = framed_tree(i, (shape, shape))
            if tree not in index:
                continue  # filtered out by multiplicity in a k-group
            row = [0] * len(index)
            row[index[tree]] = 1
            rows.append(row)
    return rows


def _interior_twist_rows(gens, index):
    # 2*J^inf = <J,J>
    rows = []
    for g in gens:
        if g.kind != TWISTED:
            continue
        row = [0] * len(index)
        row[index[g]] = 2
        tree, sign = framed_tree(g.data, g.data)
        _accumulate(row, index, tree, -sign)
        rows.append(row)
    return rows


def _reroot_at_zero(half_a, half_b):
    for label, shape in leaf_rootings(half_a, half_b):
        if label == 0:
            return shape
    raise DomainError("no 0-labeled leaf to re-root at")


def _twisted_ihx_rows(gens, index):
    """I^inf - H^inf - X^inf + <H,X> = 0 at each internal edge.

    The root of the twisted tree is carried along as a reserved leaf 0; the
    Jacobi partners are re-rooted there, and the framed correction term pairs
    the two partner shapes.
    """
    rows = []
    for g in gens:
        if g.kind != TWISTED:
            continue
        for split in internal_splits(g.data, 0):
            terms = _ihx_triples(split)
            shapes = [_reroot_at_zero(p, q) for _, (p, q) in terms]
            row = [0] * len(index)
            _accumulate(row, index, twisted_tree(shapes[0]), 1)
            _accumulate(row, index, twisted_tree(shapes[1]), -1)
            _accumulate(row, index, twisted_tree(shapes[2]), -1)
            tree, sign = framed_tree(shapes[1], shapes[2])
            _accumulate(row, index, tree, sign)
            if any(row):
                rows.append(row)
    return rows


@dataclass(frozen=True)
class GroupElement:
    group: "TreeGroup"
    coords: tuple  # normal-form coordinates over the Smith basis

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return self.group is other.group and self.coords == other.coords


class TreeGroup:
    """A graded tree group with cached Smith normal-form data."""

    def __init__(self, m, n, flavor, k=None):
        self.m = m
        self.n = n
        self.flavor = flavor
        self.k = k
        self.generators = enumerate_generators(m, n, flavor, k)
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.relations = self._build_relations()
        self._snf = None

    def _build_relations(self):
        gens, index = self.generators, self.index
        rows = _framed_rows(gens, index)
        if self.flavor == FLAVOR_TWISTED:
            if self.n % 2 == 1:
                rows += _boundary_twist_rows(self.m, (self.n + 1) // 2, index)
            else:
                rows += _interior_twist_rows(gens, index)
                rows += _twisted_ihx_rows(gens, index)
        return sorted(set(tuple(r) for r in rows))

    @property
    def snf(self):
        """(diag, v) with U*R*V = diag over the generator basis."""
        if self._snf is None:
            cols = len(self.generators)
            if self.relations:
                diag, _, v = smith_normal_form(
                    [list(r) for r in self.relations], want_v=True
                )
            else:
                diag, v = [], [
                    [1 if i == j else 0 for j in range(cols)] for i in range(cols)
                ]
            self._snf = (diag, v)
        return self._snf

    def element_from_coords(self, coords) -> GroupElement:
        diag, v = self.snf
        if len(coords) != len(self.generators):
            raise DomainError("coordinate length mismatch")
        w = mat_mul([list(coords)], v)[0] if self.generators else []
        out = []
        for i, x in enumerate(w):
            if i < len(diag) and diag[i]:
                out.append(x % diag[i])
            else:
                out.append(x)
        return GroupElement(self, tuple(out))

    def reduce_forest(self, forest: IntersectionForest) -> GroupElement:
        """Normal form of the order-n (and matching kind) part of a forest."""
        if forest.m != self.m:
            raise DomainError("index count mismatch")
        coords = [0] * len(self.generators)
        for coeff, tree in forest.terms:
            if not self._selects(tree):
                continue
            if tree not in self.index:
                raise GeneratorNotFoundError(
                    f"canonical tree {tree} not among generators"
                )
            coords[self.index[tree]] += coeff
        return self.element_from_coords(coords)

    def _selects(self, tree: DecoratedTree) -> bool:
        if tree.kind == FRAMED:
            ok = tree.order == self.n
        elif tree.kind == TWISTED:
            ok = self.flavor == FLAVOR_TWISTED and 2 * tree.order == self.n
        else:
            ok = False
        if ok and self.k is not None and multiplicity(tree) > self.k:
            return False  # maps to zero in the multiplicity quotient
        return ok

    def is_zero(self, forest: IntersectionForest) -> bool:
        return self.reduce_forest(forest).is_zero

    def invariants(self):
        """(free_rank, [torsion orders]) of the presented group."""
        diag, _ = self.snf
        free = len(self.generators) - len(diag)
        return free, sorted(d for d in diag if d > 1)

    def invariants_str(self) -> str:
        free, torsion = self.invariants()
        parts = [f"Z^{free}"] + [f"Z/{d}" for d in torsion]
        return " + ".join(parts)


@lru_cache(maxsize=None)
def build_group(m: int, n: int, flavor: str, k=None) -> TreeGroup:
    if m < 1 or n < 0:
        raise ParameterError("build_group requires m >= 1, n >= 0")
    return TreeGroup(m, n, flavor, k)
