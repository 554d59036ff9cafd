import json
from pathlib import Path

import pytest

from cli_cases import CASES
from supercircle.cli import main, operator_from_json, operator_json
from supercircle.diffop import DiffOperator
from supercircle.expr import parse_operator

GOLDEN = Path(__file__).parent / "golden" / "cli"


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return f"exit: {code}\n--- stdout\n{captured.out}--- stderr\n{captured.err}"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    assert run(CASES[name], capsys) == (GOLDEN / f"{name}.txt").read_text()


def test_every_subcommand_is_covered():
    commands = {argv[0] for argv in CASES.values()}
    assert commands == {
        "symbolize", "quantize", "apply", "bracket", "action",
        "conjugate", "solve-betas", "cocycle", "bol", "check",
    }


def test_exit_codes(capsys):
    assert main(CASES["symbolize_resonant"]) == 2
    assert main(CASES["symbolize_parse_error"]) == 3
    assert main(CASES["bad_rational"]) == 3
    # A suite with known discrepancies reports failure with exit code 1.
    assert main(["check", "--suite", "gamma-basis-values"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("FAIL gamma-basis-values")


def test_symbolize_dbar_parts(capsys):
    main(["symbolize", "--lambda", "1/3", "--mu", "4/5", "--op", "Dbar", "--json"])
    data = json.loads(capsys.readouterr().out)
    parts = data["symbol"]["parts"]
    assert len(parts) == 2
    assert parts[-1]["text"] == "1"


def test_family_reported(capsys):
    main(["solve-betas", "--lambda", "0", "--mu", "1/2", "--kmax", "2", "--json"])
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "Family" and data["dimension"] >= 1


def test_json_out(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["conjugate", "--lambda", "0", "--mu", "1/2", "--op", "x*Dbar^3 + xi", "--json-out", str(target)]) == 0
    data = json.loads(target.read_text())
    A = operator_from_json(data["result"])
    assert A == parse_operator(data["result"]["text"], A.src, A.dst)


@pytest.mark.parametrize(
    "text",
    ["x*Dbar^3 + xi", "D^3 - 1/2*x", "(x + xi)*Dbar^2", "0", "-7/3*xi*x^4*Dbar^5 + x"],
)
def test_operator_json_roundtrip(text):
    A = parse_operator(text, "1/3", "-2")
    data = json.loads(json.dumps(operator_json(A)))
    assert operator_from_json(data) == A
    assert operator_from_json(data) == parse_operator(data["text"], A.src, A.dst)
