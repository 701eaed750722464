import json
from fractions import Fraction

import pytest

from calibench import cli
from calibench.catalog import catalog
from calibench.cli import (
    SCHEMA_VERSION,
    _default_seed,
    _fmt,
    export_form,
    import_form,
    main,
    run_suite,
)


@pytest.fixture(scope="module")
def exact_report():
    return run_suite("exact", seed=0)


FAKE_PASS = ("toy_pass", "a toy check that always passes", lambda seed: ("1", "1", 0.0, True))
FAKE_FAIL = ("toy_fail", "a toy check that always fails", lambda seed: ("2", "1", 0.0, False))


def _boom(seed):
    raise RuntimeError("deliberate breakage")


FAKE_BOOM = ("toy_boom", "a toy check that raises", _boom)


def test_exact_suite_passes(exact_report):
    assert exact_report.passed
    assert len(exact_report.checks) == 24
    ids = [c.check_id for c in exact_report.checks]
    assert len(set(ids)) == len(ids)
    for c in exact_report.checks:
        assert c.status == "pass"
        assert c.claim and c.measured and c.expected


def test_report_json_shape(exact_report):
    doc = json.loads(exact_report.to_json())
    assert doc["schema"] == SCHEMA_VERSION
    assert doc["suite"] == "exact"
    assert doc["seed"] == 0
    assert doc["overall"] == "pass"
    assert len(doc["checks"]) == 24
    assert set(doc["checks"][0]) == {"check_id", "claim", "status", "measured", "expected", "tolerance"}
    # serialization is a pure function of the report
    assert exact_report.to_json() == exact_report.to_json()


def test_selection_is_validated():
    with pytest.raises(ValueError):
        run_suite("fast")


def test_failing_check_flips_overall(monkeypatch):
    monkeypatch.setattr(cli, "_EXACT_CHECKS", (FAKE_PASS, FAKE_FAIL))
    rep = run_suite("exact", seed=0)
    assert not rep.passed
    assert [c.status for c in rep.checks] == ["pass", "fail"]


def test_exception_inside_check_is_reported_not_raised(monkeypatch):
    monkeypatch.setattr(cli, "_EXACT_CHECKS", (FAKE_BOOM,))
    rep = run_suite("exact", seed=0)
    assert not rep.passed
    row = rep.checks[0]
    assert row.status == "fail"
    assert row.measured.startswith("error:")
    assert "deliberate breakage" in row.measured


def test_verify_verb_prints_and_writes(monkeypatch, tmp_path, capsys):
    monkeypatch.setattr(cli, "_EXACT_CHECKS", (FAKE_PASS,))
    out = tmp_path / "report.json"
    code = main(["verify", "--suite", "exact", "--seed", "3", "--json", str(out)])
    assert code == 0
    text = capsys.readouterr().out
    assert "[PASS] toy_pass:" in text
    assert "OVERALL PASS (1 checks" in text
    assert "seed 3" in text
    doc = json.loads(out.read_text())
    assert doc["overall"] == "pass" and doc["seed"] == 3


def test_verify_verb_fail_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(cli, "_EXACT_CHECKS", (FAKE_FAIL,))
    assert main(["verify", "--suite", "exact"]) == 1
    assert "OVERALL FAIL" in capsys.readouterr().out


def test_default_seed_reads_environment(monkeypatch):
    monkeypatch.delenv("CALIBENCH_SEED", raising=False)
    assert _default_seed() == 0
    monkeypatch.setenv("CALIBENCH_SEED", "17")
    assert _default_seed() == 17
    monkeypatch.setenv("CALIBENCH_SEED", "seven")
    with pytest.raises(SystemExit):
        _default_seed()


def test_environment_seed_flows_into_report(monkeypatch, tmp_path):
    monkeypatch.setattr(cli, "_EXACT_CHECKS", (FAKE_PASS,))
    monkeypatch.setenv("CALIBENCH_SEED", "9")
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "exact", "--json", str(out)]) == 0
    assert json.loads(out.read_text())["seed"] == 9


def test_planes_verb_output(capsys):
    assert main(["planes", "--case", "2", "--count", "2", "--seed", "1"]) == 0
    first = capsys.readouterr().out
    doc = json.loads(first)
    assert doc["schema"] == SCHEMA_VERSION
    assert doc["case"] == 2 and doc["seed"] == 1
    assert len(doc["planes"]) == 2
    for p in doc["planes"]:
        assert abs(p["value"] - 1.0) <= doc["plane_tol"]
        assert len(p["frame"]) == 16
    assert main(["planes", "--case", "2", "--count", "2", "--seed", "1"]) == 0
    assert capsys.readouterr().out == first


def test_comass_verb(capsys):
    code = main(["comass", "--form", "omega1", "--restarts", "4", "--iters", "100", "--seed", "0"])
    assert code == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["form_name"] == "omega1"
    assert abs(doc["best_value"] - 1.0) < 1e-6
    assert "best" in captured.err


def test_comass_unknown_form(capsys):
    assert main(["comass", "--form", "nope"]) == 2
    assert "unknown form" in capsys.readouterr().err


def test_export_import_roundtrip(tmp_path):
    path = tmp_path / "cayley.json"
    export_form("cayley", str(path))
    entry = import_form(str(path))
    assert entry.name == "cayley"
    assert entry.claim == "imported"
    assert entry.comass_expected is None
    assert entry.form == catalog()["cayley"].form
    # exporting again writes identical bytes
    again = tmp_path / "again.json"
    export_form("cayley", str(again))
    assert again.read_bytes() == path.read_bytes()


def test_export_verb_error_paths(tmp_path, capsys):
    assert main(["export", "--form", "nope", "--out", str(tmp_path / "x.json")]) == 2
    assert "unknown form" in capsys.readouterr().err
    assert main(["export", "--form", "cayley", "--out", str(tmp_path / "no_dir" / "x.json")]) == 2
    assert "cannot write" in capsys.readouterr().err


def test_export_verb_happy_path(tmp_path, capsys):
    out = tmp_path / "omega1.json"
    assert main(["export", "--form", "omega1", "--out", str(out)]) == 0
    assert import_form(str(out)).form == catalog()["omega1"].form


def test_tables_verb(capsys):
    assert main(["tables"]) == 0
    text = capsys.readouterr().out
    assert "grade" in text and "psi_prime" in text
    assert " 294" in text
    assert "12870" in text
    assert "[classical]" in text
    assert "[computed_exact]" in text
    assert "[computed_search]" in text
    # one row per even grade
    assert len([l for l in text.splitlines() if l.strip() and l.split()[0].isdigit()]) == 9


def test_fmt_is_repr_faithful():
    assert float(_fmt(0.1)) == 0.1
    assert float(_fmt(1.0 - 1e-9)) == 1.0 - 1e-9
    assert _fmt(Fraction(147, 128)) == "147/128"
    assert _fmt("already text") == "already text"


def test_parser_usage_errors():
    with pytest.raises(SystemExit):
        main([])
    with pytest.raises(SystemExit):
        main(["no_such_verb"])
    with pytest.raises(SystemExit):
        main(["planes", "--case", "7"])
