"""Command-line contract: outputs, exit codes, environment knobs."""

import subprocess
import sys

import pytest

from bhfix.cli import main, parse_selector
from bhfix.errors import SelectorError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_successor_exact_output(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--dilator", "successor", "--stages", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == [
        "@0:th(top)",
        "@1:th(v0;th(top))",
        "@2:th(v0;th(v0;th(top)))",
    ]
    assert lines[3] == "exhaustive=true count=3"


def test_enumerate_zero_stages_trailer_only(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--dilator", "successor", "--stages", "0")
    assert code == 0
    assert out.splitlines() == ["exhaustive=true count=0"]


def test_enumerate_omega_budgeted(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--dilator", "omega", "--stages", "2", "--budget", "3"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "@0:th(w[])"
    assert len([l for l in lines if l.startswith("@1:")]) == 2
    assert lines[-1].startswith("exhaustive=false")


def test_enumerate_lines_format_has_no_trailer(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--dilator", "successor", "--stages", "2",
        "--format", "lines",
    )
    assert code == 0
    assert out.splitlines() == ["@0:th(top)", "@1:th(v0;th(top))"]


def test_compare_verdicts(capsys):
    code, out, _ = run_cli(
        capsys, "compare", "--dilator", "successor",
        "@0:th(top)", "@1:th(v0;th(top))",
    )
    assert (code, out.strip()) == (0, "LT")
    code, out, _ = run_cli(
        capsys, "compare", "--dilator", "successor", "@0:th(top)", "@0:th(top)"
    )
    assert (code, out.strip()) == (0, "EQ")
    code, out, _ = run_cli(
        capsys, "compare", "--dilator", "omega",
        "@1:th(w[0];th(w[]))", "@1:th(w[0,0];th(w[]))",
    )
    assert (code, out.strip()) == (0, "LT")


def test_compare_parse_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "compare", "--dilator", "successor", "@0:th(top)", "junk")
    assert code == 2
    assert "error" in err


def test_compare_type_error_exit_3(capsys):
    code, _, _ = run_cli(
        capsys, "compare", "--dilator", "successor",
        "@0:th(v0;th(top))", "@0:th(top)",
    )
    assert code == 3


def test_bad_selector_exit_2(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--dilator", "frob", "--stages", "1")
    assert code == 2 and "selector" in err


def test_selector_grammar():
    assert parse_selector("constant:4").name == "constant:4"
    nested = parse_selector("sum(product(successor,constant:2),omega)")
    assert nested.name == "sum(product(successor,constant:2),omega)"
    for bad in ["", "constant:x", "sum(successor)", "mix(a,b)", "constant"]:
        with pytest.raises(SelectorError):
            parse_selector(bad)


def test_verify_pass_and_fail_exit_codes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--dilator", "successor", "--suite", "laws"
    )
    assert code == 0
    assert "CHECK dilator-laws pass" in out
    code, out, _ = run_cli(
        capsys, "verify", "--dilator", "successor", "--suite", "laws",
        "--break-naturality",
    )
    assert code == 1
    assert "fail" in out


def test_verify_bad_suite_exit_2(capsys):
    code = main(["verify", "--dilator", "successor", "--suite", "nonsense"])
    capsys.readouterr()
    assert code == 2


def test_interpret_values(capsys):
    for term, expected in [
        ("@0:th(top)", "0"),
        ("@1:th(v0;th(top))", "1"),
        ("@2:th(v0;th(v0;th(top)))", "2"),
    ]:
        code, out, _ = run_cli(
            capsys, "interpret", "--dilator", "successor",
            "--witness", "omega-successor", term,
        )
        assert (code, out.strip()) == (0, expected)


def test_interpret_witness_mismatch_exit_3(capsys):
    code, _, err = run_cli(
        capsys, "interpret", "--dilator", "omega",
        "--witness", "omega-successor", "@0:th(w[])",
    )
    assert code == 3 and "witness" in err


def test_interpret_self_witness(capsys):
    code, out, _ = run_cli(
        capsys, "interpret", "--dilator", "omega", "--witness", "bh-self",
        "@1:th(w[0];th(w[]))",
    )
    assert (code, out.strip()) == (0, "@1:th(w[0];th(w[]))")


def test_budget_env_default(capsys, monkeypatch):
    monkeypatch.setenv("BH_BUDGET_DEFAULT", "3")
    code, out, _ = run_cli(capsys, "enumerate", "--dilator", "omega", "--stages", "2")
    assert code == 0
    assert out.splitlines()[-1] == "exhaustive=false count=3"
    monkeypatch.setenv("BH_BUDGET_DEFAULT", "nope")
    code, _, err = run_cli(capsys, "enumerate", "--dilator", "omega", "--stages", "2")
    assert code == 2 and "BH_BUDGET_DEFAULT" in err


def test_enumeration_is_consistent_with_compare(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--dilator", "omega", "--stages", "3",
        "--budget", "6", "--format", "lines",
    )
    assert code == 0
    lines = out.splitlines()
    for a, b in zip(lines, lines[1:]):
        code, verdict, _ = run_cli(capsys, "compare", "--dilator", "omega", a, b)
        assert (code, verdict.strip()) == (0, "LT")


def test_absurd_stage_rejected_quickly(capsys):
    code, _, err = run_cli(
        capsys, "compare", "--dilator", "successor",
        "@999999999:th(top)", "@0:th(top)",
    )
    assert code == 3 and "stage" in err


def test_deeply_nested_input_fails_cleanly(capsys):
    depth = 5000
    term = "th(v0;" * depth + "th(top)" + ")" * depth
    code, _, err = run_cli(
        capsys, "compare", "--dilator", "successor", f"@{depth}:{term}", "@0:th(top)"
    )
    assert code in (2, 3)
    assert err.startswith("error:")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bhfix", "enumerate", "--dilator", "successor",
         "--stages", "1", "--format", "lines"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "@0:th(top)"
