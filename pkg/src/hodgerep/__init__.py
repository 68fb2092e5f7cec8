"""Hodge representations of reductive Lie algebras from root data.

A tuple (simple factors, grading elements, highest weights, center scalar c)
determines a real Hodge representation; this package computes its Hodge
numbers and invariants and enumerates all tuples with prescribed Hodge numbers.
"""

from .enumerator import (
    ClassifiedTuple,
    SearchConstraints,
    canonicalize,
    classify_gradings,
    classify_tuple,
    enumerate_tuples,
)
from .errors import DomainError, HodgeRepError, InvalidTupleError, ResourceCapError, UsageError
from .hodgecore import (
    AlgebraFactor,
    HodgeDescriptor,
    HodgeTuple,
    RealityType,
    describe,
    hodge_numbers,
    is_cy_type,
    reality_type,
)
from .oracle import oracle_weight_system
from .repdata import graded_character, weight_system, weyl_dimension
from .rootdata import (
    SimpleType,
    build_root_datum,
    dual_weight,
    eval_on_grading,
    highest_root_eval,
    parity_element_eval,
)

__all__ = [
    "AlgebraFactor",
    "ClassifiedTuple",
    "DomainError",
    "HodgeDescriptor",
    "HodgeRepError",
    "HodgeTuple",
    "InvalidTupleError",
    "RealityType",
    "ResourceCapError",
    "SearchConstraints",
    "SimpleType",
    "UsageError",
    "build_root_datum",
    "canonicalize",
    "classify_gradings",
    "classify_tuple",
    "describe",
    "dual_weight",
    "enumerate_tuples",
    "eval_on_grading",
    "graded_character",
    "highest_root_eval",
    "hodge_numbers",
    "is_cy_type",
    "oracle_weight_system",
    "parity_element_eval",
    "reality_type",
    "weight_system",
    "weyl_dimension",
]
