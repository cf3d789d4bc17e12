import json

from app.cli import run
from app.services.engine_service import EngineService


def test_dim(capsys):
    assert run(["dim", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "30"


def test_dim_json(capsys):
    assert run(["dim", "--n", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dim"] == report["formula"] == 4


def test_eval_prints_normal_form(capsys):
    assert run(["eval", "--n", "2", "--expr", "T1*T1"]) == 0
    assert capsys.readouterr().out.strip() == "1 + (u-1)*E{1,2} + (u-1)*E{1,2}*T1"


def test_eval_syntax_error_points_at_position(capsys):
    assert run(["eval", "--n", "2", "--expr", "T1 + * T1"]) == 2
    err = capsys.readouterr().err
    assert "position 5" in err
    assert "     ^" in err


def test_form(capsys):
    assert run(["form", "--n", "2", "--left", "T1", "--right", "T1"]) == 0
    assert capsys.readouterr().out.strip() == "u-1"


def test_specht_table(capsys):
    assert run(["specht", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "sum of squares: 30 (dim 30)" in out
    assert len([line for line in out.splitlines() if line.strip()[:1].isdigit()]) == 8


def test_specht_single_label(capsys):
    assert run(["specht", "--n", "3", "--label", "1", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dim"] == 2
    assert run(["specht", "--n", "3", "--label", "8"]) == 2


def test_verification_verbs_pass():
    assert run(["verify", "--n", "2"]) == 0
    assert run(["verify", "--n", "2", "--tensor", "--seed", "5"]) == 0
    assert run(["moebius", "--n", "3"]) == 0
    assert run(["gram", "--n", "2", "--u1"]) == 0
    assert run(["faithful", "--n", "2"]) == 0
    assert run(["quotient", "--n", "2"]) == 0


def test_labels(capsys):
    assert run(["labels", "--n", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0].split() == ["0", "(((2),1,(1)))"]


def test_guard_and_usage_errors(capsys):
    assert run(["faithful", "--n", "5"]) == 2
    assert "force" in capsys.readouterr().err
    assert run(["frobnicate", "--n", "2"]) == 2
    assert run(["dim"]) == 2
    assert run(["dim", "--n", "0"]) == 2
    assert run(["gram", "--n", "2", "--at", "x"]) == 2


def test_failed_verification_exits_one(monkeypatch):
    def failing(self, n, force=False):
        return {"n": n, "M": {"rank": 1, "expected": 2, "pass": False}, "N": {"rank": 2, "expected": 2, "pass": True}, "pass": False}

    monkeypatch.setattr(EngineService, "quotient", failing)
    assert run(["quotient", "--n", "2"]) == 1
