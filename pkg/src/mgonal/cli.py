"""Command-line front end; every subcommand wraps one library operation.

Exit codes: 0 success / nothing found, 1 counterexamples or gaps found,
2 bad configuration, 3 overflow guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Callable

from ._guard import OverflowGuardError
from ._parallel import default_workers
from .bounds import ell, min_rank_escalation, min_rank_universal
from .completion import (
    DEFAULT_AUDIT_DEPTH,
    audit_completion,
    audit_sweep,
    complete_form,
    completion_coefficient,
    explore_smaller,
    find_gamma_witness,
)
from .coupled import CoupledInstance, connect_to_form, solve_coupled
from .criteria import CriterionId, verify_criterion_report
from .escalation import EscalationSequence, enumerate_escalations
from .forms import MGonalForm, check_coverage, represents
from .polygonal import eval_polygonal

SCHEMA = "mgonal/1"


class ConfigError(ValueError):
    pass


def _coeffs(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty coefficient list")
    return out


def _m_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        rng = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None
    if rng[0] > rng[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return rng


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


class Emitter:
    """Collects records and renders them as text, JSON lines or CSV."""

    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self._rows: list[dict] = []

    def emit(self, record: dict, text: str | None = None) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps({"schema": SCHEMA, **record}) + "\n")
        elif self.fmt == "csv":
            self._rows.append(record)
        else:
            self.out.write((text if text is not None else _plain(record)) + "\n")

    def close(self) -> None:
        if self.fmt != "csv" or not self._rows:
            return
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(self._rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in self._rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        self.out.write(buf.getvalue())


def _cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) if isinstance(x, (list, tuple)) else str(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v)
    if v is None:
        return ""
    return v


def _plain(record: dict) -> str:
    return "  ".join(f"{k}={json.dumps(v) if isinstance(v, (list, dict)) else v}" for k, v in record.items())


def cmd_eval(args, out: Emitter) -> int:
    out.emit({"m": args.m, "x": args.x, "value": eval_polygonal(args.m, args.x)})
    return 0


def cmd_check(args, out: Emitter) -> int:
    form = MGonalForm(args.m, args.coeffs)
    w = represents(form, args.n)
    out.emit({"m": form.m, "coeffs": list(form.coeffs), "n": args.n,
              "represented": w is not None, "witness": list(w) if w else None})
    return 0


def cmd_cover(args, out: Emitter) -> int:
    report = check_coverage(MGonalForm(args.m, args.coeffs), args.n_max)
    out.emit(report.to_dict())
    return 1 if report.missing else 0


def cmd_solve_system(args, out: Emitter) -> int:
    inst = CoupledInstance(args.coeffs, (args.a, args.b))
    w = solve_coupled(inst)
    rec = {"coeffs": list(inst.coeffs), "A": args.a, "B": args.b,
           "solvable": w is not None, "witness": list(w) if w else None}
    if args.m is not None and w is not None:
        rec["m"] = args.m
        rec["value"] = connect_to_form(args.m, inst, w)
    out.emit(rec)
    return 0


def cmd_verify_lemma(args, out: Emitter) -> int:
    ids = list(CriterionId) if args.criterion == "all" else [CriterionId.parse(args.criterion)]
    found = False
    for cid in ids:
        rep = verify_criterion_report(cid, args.a_max, args.workers)
        rep["counterexamples"] = [list(c) for c in rep["counterexamples"]]
        found |= bool(rep["counterexamples"])
        out.emit(rep)
    return 1 if found else 0


def cmd_escalate(args, out: Emitter) -> int:
    for seq in enumerate_escalations(args.m, args.max_rank, minimal=args.minimal):
        out.emit(seq.to_dict(), text=",".join(map(str, seq.coeffs)))
    return 0


def cmd_complete(args, out: Emitter) -> int:
    seq = EscalationSequence(args.m, args.coeffs)
    outcome = completion_coefficient(seq)
    report = audit_completion(seq, args.audit_depth)
    rec = {
        "m": seq.m,
        "coeffs": list(seq.coeffs),
        "appended": outcome.appended,
        "rule": outcome.label,
        "completed": list(complete_form(seq).coeffs),
        "verified_up_to": report.checked_up_to,
        "missing": list(report.missing),
    }
    if args.explore:
        rec["explore_empirical"] = {str(a): gap for a, gap in explore_smaller(seq, args.audit_depth).items()}
    out.emit(rec)
    return 1 if report.missing else 0


def cmd_audit(args, out: Emitter) -> int:
    rep = audit_sweep(args.m_range, args.rank_cap, args.audit_depth, args.workers)
    if args.format == "json":
        out.emit(rep)
    else:
        for row in rep["results"]:
            out.emit(row)
    return 1 if rep["failures"] else 0


def cmd_rank(args, out: Emitter) -> int:
    rec = {"m": args.m, "escalation_rank": min_rank_escalation(args.m),
           "universal_rank": min_rank_universal(args.m).to_dict()}
    try:
        rec["ell"] = ell(args.m)
    except ValueError:
        rec["ell"] = None
    out.emit(rec)
    return 0


def cmd_gamma_witness(args, out: Emitter) -> int:
    hit = find_gamma_witness(args.m, args.max_rank, args.n_max)
    if hit is None:
        out.emit({"m": args.m, "found": False, "coeffs": None, "gap": None})
    else:
        form, gap = hit
        out.emit({"m": args.m, "found": True, "coeffs": list(form.coeffs), "gap": gap})
    return 0


COMMANDS: dict[str, tuple[Callable, str]] = {
    "eval": (cmd_eval, "evaluate P_m(x)"),
    "check": (cmd_check, "search for a representation of one integer"),
    "cover": (cmd_cover, "list integers in 1..n-max a form misses"),
    "solve-system": (cmd_solve_system, "solve the coupled linear/quadratic system"),
    "verify-lemma": (cmd_verify_lemma, "sweep a representability criterion against the solver"),
    "escalate": (cmd_escalate, "enumerate escalation coefficient sequences"),
    "complete": (cmd_complete, "append the completion coefficient and audit"),
    "audit": (cmd_audit, "audit completions of all minimal sequences over an m-range"),
    "rank": (cmd_rank, "closed-form rank bounds"),
    "gamma-witness": (cmd_gamma_witness, "find a form covering 1..m-4 that is not universal"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mgonal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.set_defaults(format="text")

    pool = argparse.ArgumentParser(add_help=False)
    pool.add_argument("--workers", type=_positive, default=None,
                      help="worker processes (default: MGONAL_WORKERS or 1)")

    def add(name, *parents):
        fn, helptext = COMMANDS[name]
        p = sub.add_parser(name, help=helptext, parents=[fmt, *parents])
        p.set_defaults(func=fn)
        return p

    p = add("eval")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=int, required=True)

    p = add("check")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = add("cover")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("--n-max", type=_positive, required=True)

    p = add("solve-system")
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="also report A(m-2)+B via the form")

    p = add("verify-lemma", pool)
    p.add_argument("--criterion", required=True,
                   choices=[c.name.lower() for c in CriterionId] + ["all"])
    p.add_argument("--a-max", type=int, required=True)

    p = add("escalate")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-rank", type=_positive, required=True)
    p.add_argument("--minimal", action="store_true")

    p = add("complete")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("--audit-depth", type=_positive, default=DEFAULT_AUDIT_DEPTH)
    p.add_argument("--explore", action="store_true",
                   help="also report which smaller appended weights pass the audit (empirical)")

    p = add("audit", pool)
    p.add_argument("--m-range", type=_m_range, required=True)
    p.add_argument("--rank-cap", type=_positive, default=None)
    p.add_argument("--audit-depth", type=_positive, default=DEFAULT_AUDIT_DEPTH)

    p = add("rank")
    p.add_argument("--m", type=int, required=True)

    p = add("gamma-witness")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-rank", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if hasattr(args, "workers") and args.workers is None:
            args.workers = default_workers()
        out = Emitter(args.format, stdout)
        code = args.func(args, out)
        out.close()
        return code
    except OverflowGuardError as exc:
        print(f"mgonal: overflow guard: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"mgonal: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())


def main_entry() -> None:
    sys.exit(main())
