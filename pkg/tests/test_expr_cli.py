"""Expression grammar, canonical-string round trips, CLI contracts."""

import json

import pytest

from qfgl import (
    Scalar, ZERO, ONE, Q, S, canonical_str, cyclotomic,
    q_int, q_fact, q_binom, adams,
    parse_expr, eval_expr, evaluate, ParseError, EvalError,
)
from qfgl.cli import main, build_parser

from conftest import random_scalar


# -- parsing -------------------------------------------------------------------

def test_parse_call():
    assert evaluate("qint(3)") == q_int(3)
    assert evaluate("qfact(3)") == Scalar.from_q_coeffs([1, 2, 2, 1])
    assert evaluate("qbinom(4, 2)") == q_binom(4, 2)
    assert evaluate("cyclotomic(6)") == cyclotomic(6)
    assert evaluate("adams(1/(1-q), 3)") == ONE / (ONE - Q ** 3)


def test_parse_division():
    assert evaluate("1/(1-q)") == ONE / (ONE - Q)


def test_precedence_and_unary_minus():
    assert evaluate("1 - 2*q") == ONE - Scalar.from_int(2) * Q
    assert evaluate("-q + q") == ZERO
    assert evaluate("2^3") == Scalar.from_int(8)
    assert evaluate("q^-1") == Scalar.q_power(-1)
    assert evaluate("(1+q)^2") == (ONE + Q) ** 2
    # unary minus binds tighter than the exponent: (-q)^2 = q^2
    assert evaluate("-q^2") == Q ** 2
    assert evaluate("-1*q^2") == -(Q ** 2)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_expr("1 + $")
    assert err.value.pos == 4


def test_unknown_identifier():
    with pytest.raises(ParseError):
        parse_expr("mystery(3)")


def test_arity_mismatch():
    with pytest.raises(ParseError):
        parse_expr("qbinom(3)")


def test_trailing_garbage():
    with pytest.raises(ParseError):
        parse_expr("1 + q q")


def test_eval_division_by_zero():
    with pytest.raises(EvalError):
        evaluate("1/(q - q)")


def test_eval_adams_needs_q():
    with pytest.raises(EvalError):
        evaluate("adams(s, 2)")


def test_print_parse_round_trip(rng):
    for _ in range(50):
        a = random_scalar(rng)
        a = a * Scalar.q_power(rng.randint(-2, 2))
        if rng.random() < 0.3:
            a = a * S
        assert evaluate(canonical_str(a)) == a, canonical_str(a)


# -- CLI ------------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_eval(capsys):
    code, out, _ = run_cli(capsys, "eval", "qint(2)*qint(2)")
    assert code == 0
    assert out.strip() == "1 + 2*q + q^2"


def test_cli_eval_bad_expression(capsys):
    code, _, err = run_cli(capsys, "eval", "qint(")
    assert code == 2
    assert "error" in err


def test_cli_expand_json_schema(capsys):
    code, out, _ = run_cli(capsys, "expand", "log_chi", "--order", "5",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["target"] == "log_chi"
    assert payload["orders"] == {"order": 5}
    rows = payload["coefficients"]
    assert rows[2] == {"degree": 2, "value": "(1 + q)/2"}
    assert all(set(r) == {"degree", "value"} for r in rows)


def test_cli_expand_bivariate_json(capsys):
    code, out, _ = run_cli(capsys, "expand", "f_chi", "--order", "3",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = {tuple(r["degree"]): r["value"] for r in payload["coefficients"]}
    assert rows[(1, 1)] == "1 + q"
    assert rows[(1, 0)] == "1"
    # ordering: by total degree, then lexicographic
    degrees = [tuple(r["degree"]) for r in payload["coefficients"]]
    assert degrees == sorted(degrees, key=lambda d: (sum(d), d))


def test_cli_expand_lambda_element(capsys):
    code, out, _ = run_cli(capsys, "expand", "lambda_t", "--element", "q",
                           "--t-order", "3", "--q-order", "6")
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[0].split("\t") == ["0", "1"]
    assert lines[1].split("\t") == ["1", "q"]
    assert lines[2].split("\t") == ["2", "0"]


def test_cli_verify_suites_pass(capsys):
    for suite in ("lemma21", "mishchenko", "cartier", "lambda-k",
                  "exercise32", "proposition"):
        code, out, _ = run_cli(capsys, "verify", suite)
        assert code == 0, f"{suite}: {out}"


def test_cli_verify_fgl_axioms(capsys):
    code, out, _ = run_cli(capsys, "verify", "fgl-axioms", "--order", "8")
    assert code == 0
    assert "0 failing" in out


def test_cli_verify_failure_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "selftest-fail")
    assert code == 1
    assert "FAIL" in out


def test_cli_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma21", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert all(c["pass"] for c in payload["checks"])


def test_cli_usage_error_exit_code(capsys):
    assert main(["verify", "no-such-suite"]) == 2
    capsys.readouterr()
    assert main(["expand", "log_chi", "--order", "0"]) == 2
    capsys.readouterr()


def test_cli_diagram_single(capsys):
    code, out, _ = run_cli(capsys, "diagram", "1", "2")
    assert code == 0
    assert "CP1 x CP2" in out


def test_cli_diagram_catalog(tmp_path, capsys):
    path = tmp_path / "catalog.txt"
    path.write_text("plane 2\npair 1 1\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "diagram", "--catalog", str(path))
    assert code == 0
    assert "plane" in out and "pair" in out


def test_cli_diagram_needs_input(capsys):
    code, _, err = run_cli(capsys, "diagram")
    assert code == 2


def test_cli_table(capsys):
    code, out, _ = run_cli(capsys, "table", "qint", "--max", "4")
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[3].split("\t")[1] == "1 + q + q^2"
    code, out, _ = run_cli(capsys, "table", "tau", "--max", "6")
    assert code == 0
    assert out.splitlines()[-1].split("\t") == ["6", "-6048"]


def test_cli_expand_plain_table(capsys):
    code, out, _ = run_cli(capsys, "expand", "euler_phi", "--q-order", "7")
    assert code == 0
    rows = [l.split("\t") for l in out.splitlines() if not l.startswith("#")]
    assert rows[0] == ["0", "1"]
    assert rows[5] == ["5", "1"]
