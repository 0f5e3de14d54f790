"""Kronecker, reduced Kronecker and Littlewood-Richardson coefficients."""

from ._core import (
    Engine,
    Error,
    InvalidPartition,
    NotIntegral,
    PadTooSmall,
    ParseError,
    SizeMismatch,
    StabilizationNotDetected,
    StoreIO,
    conjugate,
    dim_log_concavity,
    gamma,
    kostka,
    lr_coefficient,
    midpoint,
    pad,
    parse_partition,
    reduced_hook,
    reduced_two_row,
    syt_count,
)

__all__ = [
    "Engine",
    "Error",
    "InvalidPartition",
    "NotIntegral",
    "PadTooSmall",
    "ParseError",
    "SizeMismatch",
    "StabilizationNotDetected",
    "StoreIO",
    "conjugate",
    "dim_log_concavity",
    "gamma",
    "kostka",
    "lr_coefficient",
    "midpoint",
    "pad",
    "parse_partition",
    "reduced_hook",
    "reduced_two_row",
    "syt_count",
]
