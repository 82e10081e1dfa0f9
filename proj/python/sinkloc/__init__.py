"""Minmax k-sink location and evacuation on trees."""

from ._sinkloc import (
    Instance,
    InstanceError,
    OptimizationError,
    ParseError,
    Solution,
    TooLarge,
    brute_force,
    check,
    cost,
    generate,
    partition,
    solve,
)

__all__ = [
    "Instance",
    "InstanceError",
    "OptimizationError",
    "ParseError",
    "Solution",
    "TooLarge",
    "brute_force",
    "check",
    "cost",
    "generate",
    "partition",
    "solve",
]
