"""Representability, escalation and one-term completion of generalized m-gonal forms."""

from ._guard import OverflowGuardError
from .bounds import RankBound, check_rank_lower_bound, ell, min_rank_escalation, min_rank_universal
from .completion import (
    CompletionOutcome,
    audit_completion,
    audit_sweep,
    complete_form,
    completion_coefficient,
    explore_smaller,
    find_gamma_witness,
)
from .coupled import (
    CoupledInstance,
    ProgressionTarget,
    connect_to_form,
    solve_coupled,
    solve_grid,
    solve_grids,
)
from .criteria import CriterionId, band, criterion_holds, verify_criterion, verify_criterion_report
from .escalation import (
    EscalationSequence,
    classify_prefix,
    coverage_equivalence,
    enumerate_escalations,
    equivalence_sweep,
    propagate_run,
    satisfies_escalation,
    window_coverage,
)
from .forms import CoverageReport, MGonalForm, check_coverage, first_gap, represents
from .polygonal import eval_polygonal, is_generalized_polygonal

__version__ = "0.1.0"
