"""One-term completion of forms covering 1..m-4 into (claimed) universal forms.

The appended weight depends only on the leading triple and, for three of
the triples, on whether a_4 takes one special value:

    (1,1,1) -> 2          m >= 8
    (1,1,2) -> 3          m >= 12 (no bound stated; used in the m >= 12 regime)
    (1,1,3) -> 2          m >= 10
    (1,2,2) -> 3, or 6 if a_4 = 4      m >= 10
    (1,2,3) -> 1, or 2 if a_4 = 7      m >= 11
    (1,2,4) -> 1, or 2 if a_4 = 8      m >= 12

Audits are finite: a clean report means "verified up to N", nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._parallel import ordered_map
from .bounds import min_rank_escalation
from .escalation import EscalationSequence, classify_prefix, enumerate_escalations
from .forms import CoverageReport, MGonalForm, check_coverage, first_gap

# triple -> (rule, generic coefficient, special a_4 or None, special coefficient, min m)
_TABLE = {
    (1, 1, 1): (1, 2, None, None, 8),
    (1, 1, 2): (2, 3, None, None, 12),
    (1, 1, 3): (3, 2, None, None, 10),
    (1, 2, 2): (4, 3, 4, 6, 10),
    (1, 2, 3): (5, 1, 7, 2, 11),
    (1, 2, 4): (6, 1, 8, 2, 12),
}

DEFAULT_AUDIT_DEPTH = 20


@dataclass(frozen=True)
class CompletionOutcome:
    appended: int
    rule: int
    special: bool
    min_m: int

    @property
    def label(self) -> str:
        return f"({self.rule})" + (" special" if self.special else "")

    def to_dict(self) -> dict:
        return {"appended": self.appended, "rule": self.rule, "special": self.special, "min_m": self.min_m}


def _as_sequence(seq) -> EscalationSequence:
    if isinstance(seq, EscalationSequence):
        return seq
    m, coeffs = seq
    return EscalationSequence(m, coeffs)


def completion_coefficient(seq: EscalationSequence) -> CompletionOutcome:
    seq = _as_sequence(seq)
    rule, generic, special_a4, special_coeff, min_m = _TABLE[classify_prefix(seq.coeffs)]
    if seq.m < min_m:
        raise ValueError(f"rule ({rule}) is only established for m >= {min_m}, got m = {seq.m}")
    # a missing a_4 never equals the special value
    a4 = seq.coeffs[3] if len(seq.coeffs) > 3 else None
    if special_a4 is not None and a4 == special_a4:
        return CompletionOutcome(special_coeff, rule, True, min_m)
    return CompletionOutcome(generic, rule, False, min_m)


def complete_form(seq: EscalationSequence) -> MGonalForm:
    seq = _as_sequence(seq)
    if seq.m < 12:
        raise ValueError("one-term completion is established for m >= 12 only")
    return seq.form.extended(completion_coefficient(seq).appended)


def audit_completion(seq: EscalationSequence, depth: int = DEFAULT_AUDIT_DEPTH) -> CoverageReport:
    """Coverage of the completed form over 1..depth*(m-2)."""
    seq = _as_sequence(seq)
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return check_coverage(complete_form(seq), depth * (seq.m - 2))


def explore_smaller(seq: EscalationSequence, depth: int = DEFAULT_AUDIT_DEPTH) -> dict[int, int | None]:
    """Empirical only: first gap up to depth*(m-2) for each weight below the tabled one."""
    seq = _as_sequence(seq)
    appended = completion_coefficient(seq).appended
    t = depth * (seq.m - 2)
    return {a: first_gap(seq.form.extended(a), t) for a in range(1, appended)}


def find_gamma_witness(m: int, rank_cap: int, n_max: int) -> tuple[MGonalForm, int] | None:
    """First escalation form (lexicographic) with a gap in (m-4, n_max].

    Such a form covers 1..m-4 yet is not universal.
    """
    if m < 12:
        raise ValueError("needs m >= 12")
    for seq in enumerate_escalations(m, rank_cap):
        gap = first_gap(seq.form, n_max)
        if gap is not None:
            assert gap > m - 4
            return seq.form, gap
    return None


def _audit_one(job) -> dict:
    m, coeffs, depth = job
    seq = EscalationSequence(m, coeffs)
    outcome = completion_coefficient(seq)
    report = audit_completion(seq, depth)
    return {
        "m": m,
        "coeffs": list(coeffs),
        "appended": outcome.appended,
        "rule": outcome.label,
        "verified_up_to": report.checked_up_to,
        "missing": list(report.missing),
    }


def audit_sweep(m_range, rank_cap: int | None = None, depth: int = DEFAULT_AUDIT_DEPTH,
                workers: int | None = None) -> dict:
    """Audit every minimal escalation sequence for each m in the range.

    ``rank_cap`` defaults to ceil(log2(m-3)) + 1 per m.
    """
    m_lo, m_hi = m_range
    jobs = []
    for m in range(m_lo, m_hi + 1):
        cap = rank_cap if rank_cap is not None else min_rank_escalation(m) + 1
        jobs.extend((m, s.coeffs, depth) for s in enumerate_escalations(m, cap, minimal=True))
    rows = ordered_map(_audit_one, jobs, workers)
    return {
        "m_range": [m_lo, m_hi],
        "rank_cap": rank_cap,
        "depth": depth,
        "sequences": len(rows),
        "failures": [r for r in rows if r["missing"]],
        "results": rows,
    }
