"""
Command line contract: exit codes, formats, configuration precedence, determinism.
"""
import json

import pytest

from verspec.cli import main, parse_config
from verspec.util.exception import UsageError
from verspec.util.log import setLevel, ERROR


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_passes(capsys):
    code, out = run(capsys, "verify", "--base", "P1", "--L", "1", "--emit", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["lhs"]["chi"] == 12
    assert report["rhs"]["chi"] == 12
    assert list(report) == ["config", "variant", "lhs", "rhs", "strata", "orientifold", "double_cover", "verdict", "notes"]


def test_verify_fails_with_printed_delta(capsys):
    code, out = run(capsys, "verify", "--base", "P1", "--variant", "printed", "--emit", "csv")
    assert code == 1
    assert out.splitlines()[-1] == "chi,12,14,false"


def test_formal_csv(capsys):
    code, out = run(capsys, "verify", "--base", "formal:1", "--emit", "csv")
    assert code == 0
    assert "1,12L,12L,true" in out.splitlines()


def test_formal_json_has_no_orientifold(capsys):
    code, out = run(capsys, "verify", "--base", "formal:2", "--emit", "json")
    assert code == 0
    assert "orientifold" not in json.loads(out)


def test_table(capsys):
    code, out = run(capsys, "verify", "--base", "P3")
    assert code == 0
    assert "orientifold O: chi = 4" in out
    assert out.rstrip().endswith("verdict: pass")


@pytest.mark.parametrize("fmt", ["json", "csv", "table"])
def test_deterministic(capsys, fmt):
    _, first = run(capsys, "verify", "--base", "P2", "--L", "3", "--emit", fmt)
    _, second = run(capsys, "verify", "--base", "P2", "--L", "3", "--emit", fmt)
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify", "--base", "P9"],
        ["verify", "--base", "P2", "--L", "0"],
        ["verify", "--variant", "other"],
        ["verify", "--emit", "xml"],
        ["verify", "--unknown"],
        ["chi"],
        ["chi", "--space", "no-such-space"],
        ["verify", "--config", "/no/such/file.json"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_config_file(tmp_path):
    config_file = tmp_path / "run.json"
    config_file.write_text(json.dumps({"base": "P1", "L": {"degree": 2}, "emit": "csv", "variant": "printed"}))

    config = parse_config(["verify", "--config", str(config_file)])
    assert (config.base.text, config.Ldegree, config.emit, config.variant.delta_rule) == ("P1", 2, "csv", "paper-printed")

    config = parse_config(["verify", "--config", str(config_file), "--emit", "json", "--variant", "sd"])
    assert (config.emit, config.variant.delta_rule) == ("json", "definition-sd")

    config = parse_config(["verify"], file=config_file)
    assert config.Ldegree == 2


def test_defaults():
    config = parse_config(["verify"])
    assert (config.base.text, config.Ldegree, config.variant.delta_rule, config.emit, config.out) == (
        "P3", 1, "definition-sd", "table", None
    )


def test_malformed_config_file(tmp_path):
    config_file = tmp_path / "run.json"
    config_file.write_text("[1, 2")
    with pytest.raises(UsageError):
        parse_config(["verify", "--config", str(config_file)])


def test_fiber_table_override(capsys, tmp_path):
    tables = tmp_path / "tables.json"
    tables.write_text(json.dumps({"calD1": [["B", 2], ["D1", 4]]}))
    code, out = run(capsys, "verify", "--base", "P2", "--fiber-tables", str(tables), "--emit", "json")
    assert code == 1
    assert json.loads(out)["variant"]["fiber_tables"] == "override"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "reports" / "P1.json"
    code, out = run(capsys, "verify", "--base", "P1", "--emit", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["verdict"] == "pass"


def test_unwritable_out_file(capsys, tmp_path):
    blocker = tmp_path / "not_a_dir"
    blocker.write_text("")
    code, out = run(capsys, "verify", "--base", "P1", "--emit", "json", "--out", str(blocker / "P1.json"))
    assert code == 2
    assert out == ""


def test_chi(capsys):
    code, out = run(capsys, "chi", "--space", "quadric-P3")
    assert code == 0
    assert out == "chi(quadric-P3) = 4 (expected 4)\n"

    code, out = run(capsys, "chi", "--space", "nodal-quartic-P3", "--emit", "json")
    assert code == 0
    assert json.loads(out) == {"space": "nodal-quartic-P3", "chi": 16, "expected": 16, "matches": True}


def test_verify_all(capsys):
    code, out = run(capsys, "verify-all", "--emit", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 22
    assert all(row["ok"] for row in rows)
    assert {row["verdict"] for row in rows if row["variant"] == "paper-printed"} == {"fail"}


def test_verbosity(capsys):
    try:
        code, _ = run(capsys, "verify", "--base", "P1", "-vv")
        assert code == 0
    finally:
        setLevel(ERROR)
