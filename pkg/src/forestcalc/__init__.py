"""forestcalc: exact integer calculus for decorated trees and free Lie algebras."""

from .errors import (
    DomainError,
    ForestcalcError,
    HypothesisViolationError,
    LabelOutOfRangeError,
    MalformedTwistedError,
    NotPrimitiveError,
    OddCoefficientError,
    ParameterError,
    ParseError,
)
from .forest import IntersectionForest, forest_add, forest_scale, make_forest, parse_forest
from .trees import (
    DecoratedTree,
    framed_tree,
    orientation_convention,
    rooted_tree,
    set_orientation_convention,
    twisted_tree,
)

__all__ = [
    "DecoratedTree",
    "DomainError",
    "ForestcalcError",
    "HypothesisViolationError",
    "IntersectionForest",
    "LabelOutOfRangeError",
    "MalformedTwistedError",
    "NotPrimitiveError",
    "OddCoefficientError",
    "ParameterError",
    "ParseError",
    "forest_add",
    "forest_scale",
    "framed_tree",
    "make_forest",
    "orientation_convention",
    "parse_forest",
    "rooted_tree",
    "set_orientation_convention",
    "twisted_tree",
]
