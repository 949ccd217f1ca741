"""Exceptions and resource limits shared across the package."""

from __future__ import annotations

import os
from dataclasses import dataclass

HARD_MAX_POINTS = 63
DEFAULT_MAX_POINTS = 24
DEFAULT_MAX_GROUP_ORDER = 1 << 20


class HomconError(Exception):
    """Base class for every error raised by this package."""


class GroupSpecError(HomconError, ValueError):
    """A group specification string could not be parsed."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class LimitExceeded(HomconError):
    """A computation would exceed a configured size limit."""


class ClaimViolation(HomconError):
    """A verified mathematical claim failed on a concrete instance."""


@dataclass(frozen=True)
class Limits:
    """Size caps for exhaustive sweeps.

    ``max_points`` bounds full 2**n subset sweeps; rectangle/box cell
    enumerations are capped at ``2**max_points`` cells.
    """

    max_points: int = DEFAULT_MAX_POINTS
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER

    @property
    def max_cells(self) -> int:
        return 1 << self.max_points

    @classmethod
    def from_env(cls, override: int | None = None) -> "Limits":
        value = override
        if value is None and os.environ.get("HOMCON_LIMIT"):
            value = int(os.environ["HOMCON_LIMIT"])
        if value is None:
            return cls()
        if not 0 <= value <= HARD_MAX_POINTS:
            raise LimitExceeded(f"--limit must lie in [0, {HARD_MAX_POINTS}], got {value}")
        return cls(max_points=value)

    def check_points(self, n: int) -> None:
        if n > HARD_MAX_POINTS:
            raise LimitExceeded(f"n={n} exceeds the hard cap of {HARD_MAX_POINTS} points")
        if n > self.max_points:
            raise LimitExceeded(
                f"n={n} exceeds the subset-sweep limit {self.max_points}; "
                "raise it with --limit or HOMCON_LIMIT"
            )

    def check_cells(self, count: int, what: str = "cells") -> None:
        if count > self.max_cells:
            raise LimitExceeded(
                f"{count} {what} exceeds the enumeration limit 2**{self.max_points}; "
                "raise it with --limit or HOMCON_LIMIT"
            )


DEFAULT_LIMITS = Limits()
