"""The coupled system  sum a_k x_k = B,  sum a_k x_k^2 = 2A + B.

A solution x makes A(m-2) + B = sum a_k P_m(x_k) for every m, which is how
every representability argument in this package reaches an m-gonal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from ._guard import check_target
from ._parallel import flatten, ordered_map, stripes
from .polygonal import eval_polygonal

Witness = tuple[int, ...]


@dataclass(frozen=True)
class ProgressionTarget:
    """The integer A(m-2) + B, kept as the pair (A, B)."""

    A: int
    B: int

    def __post_init__(self):
        if self.A < 0:
            raise ValueError(f"A must be nonnegative, got {self.A}")

    def value(self, m: int) -> int:
        return self.A * (m - 2) + self.B


@dataclass(frozen=True)
class CoupledInstance:
    coeffs: tuple[int, ...]
    target: ProgressionTarget

    def __init__(self, coeffs, target: ProgressionTarget | tuple[int, int]):
        coeffs = tuple(int(a) for a in coeffs)
        if not coeffs or min(coeffs) < 1:
            raise ValueError(f"coefficients must be a nonempty list of positive ints, got {coeffs}")
        if not isinstance(target, ProgressionTarget):
            target = ProgressionTarget(*target)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "target", target)

    @property
    def linear(self) -> int:
        return self.target.B

    @property
    def quadratic(self) -> int:
        return 2 * self.target.A + self.target.B

    def satisfied_by(self, x) -> bool:
        lin = sum(a * xi for a, xi in zip(self.coeffs, x))
        quad = sum(a * xi * xi for a, xi in zip(self.coeffs, x))
        return len(x) == len(self.coeffs) and lin == self.linear and quad == self.quadratic


class _Half:
    """Every index vector of one half inside a box, in lexicographic order."""

    def __init__(self, coeffs: tuple[int, ...], bounds: tuple[int, ...]):
        k = len(coeffs)
        if k == 0:
            self.vecs = np.zeros((1, 0), dtype=np.int64)
        else:
            axes = [np.arange(-b, b + 1, dtype=np.int64) for b in bounds]
            grid = np.meshgrid(*axes, indexing="ij")
            self.vecs = np.stack(grid, axis=-1).reshape(-1, k)
        a = np.asarray(coeffs, dtype=np.int64)
        self.lin = self.vecs @ a if k else np.zeros(1, dtype=np.int64)
        self.quad = (self.vecs * self.vecs) @ a if k else np.zeros(1, dtype=np.int64)


class _Tables:
    def __init__(self, coeffs: tuple[int, ...], bounds: tuple[int, ...]):
        h = len(coeffs) // 2
        left = _Half(coeffs[:h], bounds[:h])
        self.right = _Half(coeffs[h:], bounds[h:])
        self.lin_span = int(np.abs(left.lin).max())
        self.quad_span = int(left.quad.max())
        keys = self._encode(left.lin, left.quad)
        # np.unique reports the first (lexicographically smallest) occurrence
        self.keys, first = np.unique(keys, return_index=True)
        self.left_vecs = left.vecs[first]

    def _encode(self, lin, quad):
        return (lin + self.lin_span) * (self.quad_span + 1) + quad

    def solve(self, b: int, q: int) -> Witness | None:
        r = self.right
        need_lin = b - r.lin
        need_quad = q - r.quad
        ok = (need_quad >= 0) & (need_quad <= self.quad_span) & (np.abs(need_lin) <= self.lin_span)
        cand = np.flatnonzero(ok)
        if cand.size == 0:
            return None
        keys = self._encode(need_lin[cand], need_quad[cand])
        pos = np.searchsorted(self.keys, keys)
        pos[pos == self.keys.size] = 0
        hit = np.flatnonzero(self.keys[pos] == keys)
        if hit.size == 0:
            return None
        j = hit[0]
        return tuple(int(v) for v in self.left_vecs[pos[j]]) + tuple(
            int(v) for v in r.vecs[cand[j]]
        )


@lru_cache(maxsize=512)
def _tables(coeffs: tuple[int, ...], bounds: tuple[int, ...]) -> _Tables:
    return _Tables(coeffs, bounds)


def index_bounds(coeffs, q: int) -> tuple[int, ...]:
    """|x_k| <= floor(sqrt(q / a_k)) for every solution with quadratic side q."""
    return tuple(isqrt(q // a) for a in coeffs)


def solve_coupled(inst: CoupledInstance) -> Witness | None:
    """Solve the coupled system by meet-in-the-middle, or return None.

    The coefficient list is split into a left half ``coeffs[:n//2]`` and a
    right half. Right-half vectors are scanned in lexicographic order and the
    first one whose complement is reachable by the left half wins; the left
    part is the lexicographically smallest vector with that complement.
    """
    b, q = inst.linear, inst.quadratic
    check_target(b, "linear target")
    check_target(q, "quadratic target")
    if q < 0:
        return None
    # Cauchy-Schwarz with weights a_k
    if b * b > sum(inst.coeffs) * q:
        return None
    return _tables(inst.coeffs, index_bounds(inst.coeffs, q)).solve(b, q)


def connect_to_form(m: int, inst: CoupledInstance, w) -> int:
    """Return A(m-2) + B, checked against the m-gonal form evaluated at ``w``."""
    if not inst.satisfied_by(w):
        raise ValueError(f"{w} does not solve {inst}")
    n = inst.target.value(m)
    via_form = sum(a * eval_polygonal(m, xi) for a, xi in zip(inst.coeffs, w))
    assert n == via_form, f"bridge identity broken: {n} != {via_form}"
    return n


def _solve_stripe(job):
    coeffs, a_lo, a_hi, b_lo, b_hi = job
    out = []
    for a in range(a_lo, a_hi + 1):
        for b in range(b_lo, b_hi + 1):
            w = solve_coupled(CoupledInstance(coeffs, (a, b)))
            out.append((a, b, w))
    return out


def solve_grid(coeffs, a_max: int, b_min: int, b_max: int, workers: int | None = None):
    """Solve every (A, B) with 0 <= A <= a_max, b_min <= B <= b_max.

    Returns ``[(A, B, witness-or-None), ...]`` sorted by (A, B). The grid is
    cut into A-stripes for the worker pool and merged in order.
    """
    coeffs = tuple(coeffs)
    parts = 1 if workers in (None, 1) else 4 * workers
    jobs = [(coeffs, lo, hi, b_min, b_max) for lo, hi in stripes(0, a_max, parts)]
    return flatten(ordered_map(_solve_stripe, jobs, workers))


def solve_grids(coeff_lists, a_max: int, b_min: int, b_max: int, workers: int | None = None):
    """``solve_grid`` for many coefficient lists through one worker pool.

    Returns one grid per list, in input order.
    """
    jobs = [(tuple(c), 0, a_max, b_min, b_max) for c in coeff_lists]
    return ordered_map(_solve_stripe, jobs, workers)
