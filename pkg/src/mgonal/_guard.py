"""Overflow guards shared by every module.

Python integers never wrap, but the library keeps to the 64-bit envelope so
results match a fixed-width implementation bit for bit.
"""

from __future__ import annotations

MAX_ORDER = 1 << 20
MAX_INDEX = 1 << 20
MAX_TARGET = 1 << 40


class OverflowGuardError(OverflowError):
    """An input left the guarded integer range."""


def check_order(m: int) -> None:
    if m < 3:
        raise ValueError(f"polygon order must be >= 3, got {m}")
    if m > MAX_ORDER:
        raise OverflowGuardError(f"polygon order {m} exceeds 2^20")


def check_index(x: int) -> None:
    if abs(x) > MAX_INDEX:
        raise OverflowGuardError(f"index {x} exceeds 2^20 in absolute value")


def check_target(n: int, what: str = "target") -> None:
    if abs(n) > MAX_TARGET:
        raise OverflowGuardError(f"{what} {n} exceeds 2^40 in absolute value")
