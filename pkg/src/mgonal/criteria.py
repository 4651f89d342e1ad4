"""Explicit sufficient conditions for five quaternary forms to hit A(m-2)+B.

Each criterion pairs a coefficient quadruple with a weight w and requires
w*A + (w/2)*B - B^2 >= 0 plus a congruence side condition. The conditions
are sufficient only: cells where a predicate is false may still be solvable.
"""

from __future__ import annotations

import enum
from math import isqrt

from ._parallel import flatten, ordered_map, stripes
from .coupled import CoupledInstance, solve_coupled


class CriterionId(enum.Enum):
    C1111 = ((1, 1, 1, 1), 8)
    C1112 = ((1, 1, 1, 2), 10)
    C1123 = ((1, 1, 2, 3), 14)
    C1124 = ((1, 1, 2, 4), 16)
    C1223 = ((1, 2, 2, 3), 16)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return self.value[0]

    @property
    def weight(self) -> int:
        return self.value[1]

    @classmethod
    def parse(cls, tag: str) -> CriterionId:
        try:
            return cls[tag.upper()]
        except KeyError:
            raise ValueError(f"unknown criterion {tag!r}") from None


def _inequality(w: int, a: int, b: int) -> bool:
    return w * a + (w // 2) * b - b * b >= 0


def criterion_holds(cid: CriterionId, A: int, B: int) -> bool:
    if not _inequality(cid.weight, A, B):
        return False
    if cid is CriterionId.C1111:
        return B % 2 == 1
    if cid is CriterionId.C1112:
        return not (A % 5 == 0 and B % 5 == 0)
    if cid is CriterionId.C1123:
        return not (A % 7 == 0 and B % 7 == 0)
    if cid is CriterionId.C1124:
        # the two congruence classes are the exceptions
        return not (A % 2 == 1 and B % 8 == 4) and not (A % 2 == 0 and B % 8 == 0)
    if cid is CriterionId.C1223:
        return B % 4 != 0
    raise AssertionError(cid)


def band(cid: CriterionId, A: int) -> tuple[int, int]:
    """Inclusive B-interval where w*A + (w/2)*B - B^2 >= 0.

    With h = w/2 the inequality is (2B - h)^2 <= h^2 + 4wA.
    """
    h = cid.weight // 2
    r = isqrt(h * h + 4 * cid.weight * A)
    return -((r - h) // 2), (h + r) // 2


def _verify_stripe(job):
    cid, a_lo, a_hi = job
    bad, cells = [], 0
    for a in range(a_lo, a_hi + 1):
        lo, hi = band(cid, a)
        for b in range(lo, hi + 1):
            cells += 1
            if criterion_holds(cid, a, b) and solve_coupled(CoupledInstance(cid.coeffs, (a, b))) is None:
                bad.append((a, b))
    return bad, cells


def verify_criterion(cid: CriterionId, a_max: int, workers: int | None = None) -> list[tuple[int, int]]:
    """All (A, B) in the band with 0 <= A <= a_max where the criterion holds
    but the coupled system has no solution. Expected to be empty."""
    return verify_criterion_report(cid, a_max, workers)["counterexamples"]


def verify_criterion_report(cid: CriterionId, a_max: int, workers: int | None = None) -> dict:
    if a_max < 0:
        raise ValueError("a_max must be >= 0")
    parts = 1 if workers in (None, 1) else 4 * workers
    jobs = [(cid, lo, hi) for lo, hi in stripes(0, a_max, parts)]
    results = ordered_map(_verify_stripe, jobs, workers)
    return {
        "criterion": cid.name.lower(),
        "a_max": a_max,
        "counterexamples": flatten([r[0] for r in results]),
        "cells_checked": sum(r[1] for r in results),
    }


def excluded_cells(cid: CriterionId, a_max: int) -> dict[str, list[tuple[int, int]]]:
    """Split in-band cells where the predicate is false into solvable and not.

    Purely observational: the criteria do not claim anything about these.
    """
    solvable, unsolvable = [], []
    for a in range(a_max + 1):
        lo, hi = band(cid, a)
        for b in range(lo, hi + 1):
            if criterion_holds(cid, a, b):
                continue
            w = solve_coupled(CoupledInstance(cid.coeffs, (a, b)))
            (solvable if w is not None else unsolvable).append((a, b))
    return {"solvable": solvable, "unsolvable": unsolvable}
