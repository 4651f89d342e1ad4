"""Closed-form rank bounds for m-gonal forms."""

from __future__ import annotations

from dataclasses import dataclass

from ._guard import check_order
from .forms import MGonalForm, check_coverage


@dataclass(frozen=True)
class RankBound:
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound above upper bound")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


def ell(m: int) -> int:
    """Fewest generalized m-gonal numbers that sum to every positive integer.

    Known only for m in {3, 4, 5, 6, 8} and m >= 10.
    """
    check_order(m)
    if m >= 10:
        return m - 4
    if m in (3, 5, 6):
        return 3
    if m in (4, 8):
        return 4
    raise ValueError(f"no known value for m = {m}")


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError("ceil_log2 needs n >= 1")
    return (n - 1).bit_length()


def min_rank_escalation(m: int) -> int:
    """Smallest rank of a form covering 1..m-4, i.e. ceil(log2(m-3))."""
    check_order(m)
    if m < 4:
        raise ValueError("needs m >= 4")
    return ceil_log2(m - 3)


def min_rank_universal(m: int) -> RankBound:
    """Bracket for the minimal rank of a universal m-gonal form, m >= 12.

    With k = ceil(log2(m-3)) and d = 2^k - m the rank is k+1 when
    -3 <= d <= 1, and k or k+1 when d >= 2.
    """
    check_order(m)
    if m < 12:
        raise ValueError("rank bracket is only established for m >= 12")
    k = min_rank_escalation(m)
    d = (1 << k) - m
    if -3 <= d <= 1:
        return RankBound(k + 1, k + 1)
    if d >= 2:
        return RankBound(k, k + 1)
    raise AssertionError(f"d = {d} < -3 is impossible for m = {m}")


def _candidates(rank: int, t: int, cap: int):
    """Sorted coefficient lists of length ``rank`` that could cover 1..t.

    Pruned with the subset-sum necessity a_{i+1} <= a_1+...+a_i+1 (while the
    prefix sum is below ``cap``); entries above t are useless and dropped.
    """

    def walk(prefix, s):
        if len(prefix) == rank:
            yield tuple(prefix)
            return
        hi = t if s >= cap else min(t, s + 1)
        for a in range(prefix[-1], hi + 1):
            prefix.append(a)
            yield from walk(prefix, s + a)
            prefix.pop()

    yield from walk([1], 1)


def check_rank_lower_bound(m: int, rank: int, n_max: int | None = None) -> bool:
    """True iff no rank-``rank`` m-gonal form covers 1..n_max.

    ``n_max`` defaults to m-4. Requires rank below the escalation bound.
    """
    if rank >= min_rank_escalation(m):
        raise ValueError(f"rank {rank} is not below ceil(log2(m-3)) = {min_rank_escalation(m)}")
    if rank < 1:
        raise ValueError("rank must be >= 1")
    t = m - 4 if n_max is None else n_max
    for coeffs in _candidates(rank, t, min(t, m - 4)):
        if check_coverage(MGonalForm(m, coeffs), t).complete:
            return False
    return True

