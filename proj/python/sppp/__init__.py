"""Saturated pure partial planes: search, canonical forms and feasibility."""

from ._core import (
    InvalidArgument,
    ParseError,
    PartialPlane,
    StructuralError,
    Unsupported,
    appendix_planes,
    case_ids,
    construct_odd_order,
    dedupe,
    exhaustive_small_order,
    feasibility,
    isomorphic,
    read_planes,
    run_case,
    seed,
    write_planes,
)

__all__ = [
    "InvalidArgument",
    "ParseError",
    "PartialPlane",
    "StructuralError",
    "Unsupported",
    "appendix_planes",
    "case_ids",
    "construct_odd_order",
    "dedupe",
    "exhaustive_small_order",
    "feasibility",
    "isomorphic",
    "read_planes",
    "run_case",
    "seed",
    "write_planes",
]
