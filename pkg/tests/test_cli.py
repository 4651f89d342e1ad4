import io
import json

import pytest

from mgonal.cli import COMMANDS, build_parser, main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_rank_json():
    code, out = run("rank", "--m", "17", "--json")
    assert code == 0
    rec = records(out)[0]
    assert rec["schema"] == "mgonal/1"
    assert rec["escalation_rank"] == 4
    assert rec["universal_rank"] == {"lower": 5, "upper": 5, "exact": True}


def test_verify_lemma_all():
    code, out = run("verify-lemma", "--criterion", "all", "--a-max", "40", "--json")
    assert code == 0
    recs = records(out)
    assert [r["criterion"] for r in recs] == ["c1111", "c1112", "c1123", "c1124", "c1223"]
    assert all(r["counterexamples"] == [] and r["cells_checked"] > 0 and r["a_max"] == 40 for r in recs)


def test_complete():
    code, out = run("complete", "--m", "12", "--coeffs", "1,2,2,4", "--audit-depth", "20", "--json")
    assert code == 0
    rec = records(out)[0]
    assert rec["appended"] == 6 and rec["missing"] == [] and rec["verified_up_to"] == 200


def test_complete_explore():
    code, out = run("complete", "--m", "12", "--coeffs", "1,1,2,4", "--audit-depth", "3", "--explore", "--json")
    assert code == 0
    assert set(records(out)[0]["explore_empirical"]) == {"1", "2"}


def test_cover_exit_codes():
    assert run("cover", "--m", "12", "--coeffs", "1,1,2", "--n-max", "8", "--json")[0] == 1
    code, out = run("cover", "--m", "12", "--coeffs", "1,1,2,4", "--n-max", "8", "--json")
    assert code == 0
    assert records(out)[0] == {"schema": "mgonal/1", "m": 12, "coeffs": [1, 1, 2, 4], "checked_up_to": 8, "missing": []}


def test_escalate_stream():
    code, out = run("escalate", "--m", "12", "--max-rank", "5", "--minimal", "--json")
    assert code == 0
    recs = records(out)
    assert recs[0]["coeffs"] == [1, 1, 1, 1, 4]
    assert all(r["m"] == 12 for r in recs)


def test_escalate_csv():
    code, out = run("escalate", "--m", "12", "--max-rank", "4", "--csv")
    lines = out.splitlines()
    assert lines[0] == "m,coeffs" and lines[1] == "12,1 1 2 4"


def test_query_commands():
    assert records(run("eval", "--m", "12", "--x", "-1", "--json")[1])[0]["value"] == 9
    rec = records(run("check", "--m", "12", "--coeffs", "1,1,1,1", "--n", "11", "--json")[1])[0]
    assert rec["witness"] == [-1, 1, 1, 0]
    rec = records(run("solve-system", "--coeffs", "1,1,2,4", "--a", "2", "--b", "0", "--m", "12", "--json")[1])[0]
    assert rec["witness"] == [1, 1, -1, 0] and rec["value"] == 20
    rec = records(run("gamma-witness", "--m", "12", "--max-rank", "4", "--n-max", "1000", "--json")[1])[0]
    assert rec["coeffs"] == [1, 1, 2, 5] and rec["gap"] == 22


def test_audit_command():
    code, out = run("audit", "--m-range", "12..14", "--rank-cap", "5", "--json")
    assert code == 0
    rec = records(out)[0]
    assert rec["failures"] == [] and rec["sequences"] == len(rec["results"]) > 0


def test_error_codes(capsys):
    assert run("rank", "--m", "7")[0] == 2
    assert run("eval", "--m", str(2**21), "--x", "1")[0] == 3
    assert run("audit", "--m-range", "14..12")[0] == 2
    assert run("complete", "--m", "12", "--coeffs", "1,1,2")[0] == 2
    assert run("nonsense")[0] == 2


def test_workers_env(monkeypatch):
    monkeypatch.setenv("MGONAL_WORKERS", "0")
    assert run("verify-lemma", "--criterion", "c1111", "--a-max", "2")[0] == 2


def test_every_subcommand_is_wired():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    assert set(sub.choices) == set(COMMANDS) == {
        "eval", "check", "cover", "solve-system", "verify-lemma",
        "escalate", "complete", "audit", "rank", "gamma-witness",
    }
