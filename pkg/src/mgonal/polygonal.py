"""Generalized m-gonal numbers P_m(x) = ((m-2)x^2 - (m-4)x) / 2 for x in Z."""

from __future__ import annotations

from collections.abc import Iterator
from math import isqrt

from ._guard import check_index, check_order, check_target


def eval_polygonal(m: int, x: int) -> int:
    """Return the x-th generalized m-gonal number.

    >>> eval_polygonal(5, 2)
    5
    >>> eval_polygonal(12, -1)
    9
    """
    check_order(m)
    check_index(x)
    # (m-2)x^2 - (m-4)x = x((m-2)x - (m-4)) is always even
    return ((m - 2) * x * x - (m - 4) * x) // 2


def is_generalized_polygonal(m: int, n: int) -> int | None:
    """Return an index x with P_m(x) = n, or None if n is not m-gonal.

    Among valid indices the one of smallest absolute value is returned,
    positive on ties (m = 4 gives +-x, m = 3 gives x and -1-x).
    """
    check_order(m)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    check_target(n)
    a, b = m - 2, m - 4
    # a x^2 - b x - 2n = 0  =>  x = (b +- sqrt(b^2 + 8an)) / (2a)
    disc = b * b + 8 * a * n
    r = isqrt(disc)
    if r * r != disc:
        return None
    roots = [num // (2 * a) for num in (b + r, b - r) if num % (2 * a) == 0]
    if not roots:
        return None
    return min(roots, key=lambda x: (abs(x), -x))


def index_order(limit: int) -> Iterator[int]:
    """Yield 0, 1, -1, 2, -2, ... up to absolute value ``limit``."""
    yield 0
    for k in range(1, limit + 1):
        yield k
        yield -k


def values_up_to(m: int, bound: int, weight: int = 1) -> list[tuple[int, int]]:
    """List ``(x, weight * P_m(x))`` with value <= bound, in search order.

    Indices are visited as 0, 1, -1, 2, -2, ...; enumeration stops once both
    indices at the current absolute value exceed the bound.
    """
    check_order(m)
    out = [(0, 0)]
    k = 1
    while True:
        pos = weight * eval_polygonal(m, k)
        neg = weight * eval_polygonal(m, -k)
        if pos > bound and neg > bound:
            return out
        if pos <= bound:
            out.append((k, pos))
        if neg <= bound:
            out.append((-k, neg))
        k += 1
