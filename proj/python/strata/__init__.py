"""Delaunay depth layers, contours and point queries."""

from ._core import (
    DegenerateInputError,
    DomainError,
    DuplicatePointError,
    LevelSet,
    ParseError,
    RangeError,
    SizeError,
    StrataError,
    component_extremal_gadget,
    convex_depths,
    delaunay_depths,
    depth_contours,
    element_uniqueness_gadget,
    layers,
    nested_triangle_gadget,
    query_depth,
    run_cli,
    tukey_depth,
    verify,
)

__all__ = [
    "DegenerateInputError",
    "DomainError",
    "DuplicatePointError",
    "LevelSet",
    "ParseError",
    "RangeError",
    "SizeError",
    "StrataError",
    "component_extremal_gadget",
    "convex_depths",
    "delaunay_depths",
    "depth_contours",
    "element_uniqueness_gadget",
    "layers",
    "nested_triangle_gadget",
    "query_depth",
    "run_cli",
    "tukey_depth",
    "verify",
]
