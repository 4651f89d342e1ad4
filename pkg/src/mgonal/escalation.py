"""Coefficient sequences of forms that represent every integer up to m-4.

Below m-3 the only generalized m-gonal numbers are 0 and 1, so covering
1..m-4 is a subset-sum question on the coefficients. Sorted coefficients
cover it exactly when

    a_1 = 1,
    a_{i+1} <= a_1 + ... + a_i + 1   while  a_1 + ... + a_i < m-4,
    a_1 + ... + a_n >= m-4.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from ._guard import check_order
from ._parallel import flatten, ordered_map
from .coupled import CoupledInstance, solve_coupled
from .forms import MGonalForm, check_coverage
from .polygonal import values_up_to

PREFIX_TRIPLES = frozenset({(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3), (1, 2, 4)})


def satisfies_escalation(m: int, coeffs) -> bool:
    coeffs = list(coeffs)
    if not coeffs or coeffs[0] != 1:
        return False
    target = m - 4
    s = 0
    for a, nxt in zip(coeffs, coeffs[1:]):
        s += a
        if s < target and nxt > s + 1:
            return False
    return sum(coeffs) >= target


@dataclass(frozen=True)
class EscalationSequence:
    """Sorted coefficients of an m-gonal form covering 1..m-4."""

    m: int
    coeffs: tuple[int, ...]

    def __init__(self, m: int, coeffs):
        check_order(m)
        coeffs = tuple(int(a) for a in coeffs)
        if list(coeffs) != sorted(coeffs):
            raise ValueError(f"coefficients must be ascending, got {coeffs}")
        if not satisfies_escalation(m, coeffs):
            raise ValueError(f"{coeffs} does not cover 1..{m - 4} for m={m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def form(self) -> MGonalForm:
        return MGonalForm(self.m, self.coeffs)

    @property
    def minimal(self) -> bool:
        """No proper prefix already reaches m-4."""
        return sum(self.coeffs[:-1]) < self.m - 4

    def to_dict(self) -> dict:
        return {"m": self.m, "coeffs": list(self.coeffs)}


def coverage_equivalence(m: int, coeffs) -> bool:
    """Whether the form covers 1..m-4, cross-checked against the sequence test."""
    if m < 8:
        raise ValueError("needs m >= 8")
    covered = check_coverage(MGonalForm(m, coeffs), m - 4).complete
    if covered != satisfies_escalation(m, sorted(coeffs)):
        raise AssertionError(f"coverage and escalation test disagree on {coeffs}, m={m}")
    return covered


def enumerate_escalations(m: int, max_rank: int, minimal: bool = False) -> Iterator[EscalationSequence]:
    """Every sorted sequence satisfying the escalation condition, n <= max_rank.

    Lexicographic order, each sequence once. Entries are capped at
    2^(max_rank-1), the largest value any escalation step can reach. With
    ``minimal`` a branch stops as soon as its sum reaches m-4.
    """
    check_order(m)
    target = m - 4
    cap = 1 << (max_rank - 1) if max_rank >= 1 else 0

    def walk(prefix: list[int], s: int) -> Iterator[EscalationSequence]:
        if s >= target:
            yield EscalationSequence(m, prefix)
            if minimal:
                return
        if len(prefix) == max_rank:
            return
        hi = cap if s >= target else min(cap, s + 1)
        for a in range(prefix[-1], hi + 1):
            prefix.append(a)
            yield from walk(prefix, s + a)
            prefix.pop()

    if max_rank >= 1:
        yield from walk([1], 1)


def classify_prefix(coeffs) -> tuple[int, int, int]:
    triple = tuple(coeffs[:3])
    if len(triple) < 3 or triple not in PREFIX_TRIPLES:
        raise ValueError(f"leading triple {triple} is not an admissible escalation prefix")
    return triple


def propagate_run(g_values: Iterable[int], tail_coeffs, m: int, n: int) -> bool:
    """Check that G + sum(tail a_k P_m(x_k)) hits every integer n..n+(m-4).

    ``g_values`` is the set of integers G represents; only those <= n+m-4
    matter. The proposition this exercises says the run is guaranteed when
    G hits n..n+(a_1+...+a_i) and the full form covers 1..m-4.
    """
    top = n + m - 4
    reach = 0
    for g in g_values:
        if 0 <= g <= top:
            reach |= 1 << g
    mask = (1 << (top + 1)) - 1
    for a in tail_coeffs:
        acc = 0
        for _, v in values_up_to(m, top, a):
            acc |= reach << v
        reach = acc & mask
    run = ((1 << (m - 3)) - 1) << n
    return reach & run == run


def window_coverage(prefix_coeffs, extra: int, m: int, b0: int, width: int, a_range) -> list[tuple[int, int]]:
    """Cells (A, offset) where prefix + <extra> fails to solve the coupled
    system for A(m-2) + b0 + offset, offset in 0..width-1.

    Only the pair (A, b0 + offset) is tried, mirroring how the completion
    proofs argue; other (A', B') with the same value are not consulted.
    """
    coeffs = tuple(prefix_coeffs) + (extra,)
    a_lo, a_hi = a_range
    missing = []
    for a in range(a_lo, a_hi + 1):
        for off in range(width):
            b = b0 + off
            if a * (m - 2) + b < 1:
                continue
            if solve_coupled(CoupledInstance(coeffs, (a, b))) is None:
                missing.append((a, off))
    return missing


def _equivalence_chunk(job):
    m, length, max_entry = job
    out = []
    for combo in combinations_with_replacement(range(1, max_entry + 1), length):
        seq_ok = satisfies_escalation(m, combo)
        cov_ok = check_coverage(MGonalForm(m, combo), m - 4).complete
        if seq_ok != cov_ok:
            out.append({"m": m, "coeffs": list(combo), "escalation": seq_ok, "covered": cov_ok})
    return out


def equivalence_sweep(m_range, max_len: int, max_entry: int, workers: int | None = None) -> dict:
    """Compare the escalation test against direct coverage of 1..m-4 for all
    sorted lists of length <= max_len with entries <= max_entry."""
    m_lo, m_hi = m_range
    jobs = [(m, n, max_entry) for m in range(m_lo, m_hi + 1) for n in range(1, max_len + 1)]
    checked = sum(comb(e + n - 1, n) for _, n, e in jobs)
    return {
        "m_range": [m_lo, m_hi],
        "max_len": max_len,
        "max_entry": max_entry,
        "lists_checked": checked,
        "exceptions": flatten(ordered_map(_equivalence_chunk, jobs, workers)),
    }

