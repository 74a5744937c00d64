"""p-negative type gaps and combinations of finite semi-metric spaces."""

from ._negtype import (
    DomainError,
    Space,
    ValidationError,
    __version__,
    bound,
    check,
    combine,
    compose_gaps,
    equivalent,
    gamma,
    gap,
    refine,
    supremal,
    tree_gap,
)

__all__ = [
    "DomainError",
    "Space",
    "ValidationError",
    "__version__",
    "bound",
    "check",
    "combine",
    "compose_gaps",
    "equivalent",
    "gamma",
    "gap",
    "refine",
    "supremal",
    "tree_gap",
]
