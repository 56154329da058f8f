import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spclosure import schemas
from spclosure.cli import COMMANDS, Request, UsageError, execute, format_request, main, parse, render
from spclosure.monomial import minimalize
from spclosure.textio import (
    ParseError,
    format_monomial,
    format_monomial_ideal,
    format_poly,
    format_ring,
    parse_monomial,
    parse_monomial_ideal,
    parse_poly,
    parse_ring,
)

XY = ("x", "y")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


# --- grammar ---------------------------------------------------------------


def test_monomial_grammar():
    assert parse_monomial("x^2*y", XY) == (2, 1)
    assert parse_monomial("x^2y", XY) == (2, 1)
    assert parse_monomial("1", XY) == (0, 0)
    assert parse_monomial("y x", XY) == (1, 1)
    assert parse_monomial("x1^2", ("x1", "x")) == (2, 0)


def test_ideal_grammar():
    assert parse_monomial_ideal("(x^2, y^2)", XY) == minimalize([(2, 0), (0, 2)])
    assert parse_monomial_ideal("0", XY).is_zero
    assert format_monomial_ideal(minimalize([(2, 0), (1, 1), (0, 2)]), XY) == "x^2, x*y, y^2"
    assert format_monomial((0, 0), XY) == "1"


@pytest.mark.parametrize(
    "text,position",
    [("x^2,,y", 4), ("x^", 2), ("x^2*", 4), ("z", 0), ("x^2 y^2)", 7)],
)
def test_parse_error_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_monomial_ideal(text, XY)
    assert info.value.position == position
    assert "^" in str(info.value)


def test_ring_grammar():
    ring = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)")
    assert ring.p == 2 and ring.names == ("x", "y", "z")
    assert format_ring(ring) == "F2[x,y,z]/(x^3 + y^3 + z^3)"
    assert parse_ring(format_ring(ring)) == ring
    for bad in ("F4[x]", "F2[x", "F2[x]/(y)", "G2[x]"):
        with pytest.raises(ParseError):
            parse_ring(bad)


def test_poly_round_trip():
    names = ("x", "y", "z")
    for text in ("x^2*y + 2*z + 1", "-x + y^3", "0", "4*x*y*z"):
        f = parse_poly(text, names, 5)
        assert parse_poly(format_poly(f, names), names, 5) == f


# --- CLI examples ------------------------------------------------------------


def test_cli_examples(capsys):
    assert run(capsys, "integral", "--vars", "x,y", "--ideal", "x^2,y^2")[:2] == (0, "x^2, x*y, y^2")
    assert run(capsys, "special-integral", "--vars", "x,y", "--ideal", "x^2,y^2")[:2] == (0, "x^3, x^2*y, x*y^2, y^3")
    code, out, _ = run(
        capsys, "frobenius", "--ring", "F2[x,y,z]/(x^3+y^3+z^3)", "--ideal", "x,y", "--element", "z^2", "--max-e", "3"
    )
    assert (code, out) == (0, "In at e=1")


def test_exit_codes(capsys):
    assert run(capsys, "decomposition", "--vars", "x,y", "--ideal", "x^2,y^2")[0] == 1
    assert run(capsys, "decomposition", "--vars", "x,y", "--ideal", "x^2,y^3")[0] == 0
    code, _, err = run(capsys, "integral", "--vars", "x,y", "--ideal", "x^2,,y")
    assert code == 2 and "position 4" in err
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "integral", "--vars", "x,y")[0] == 2
    assert run(capsys, "integral", "--vars", "x,y", "--ideal", "1")[0] == 2


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "spclosure.cli", "integral", "--vars", "x,y", "--ideal", "x^2,y^3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "x^2, x*y^2, y^3"


# --- JSON schemas --------------------------------------------------------------

JSON_CASES = [
    ("integral --vars x,y --ideal x^2,y^2 --element x*y", schemas.MEMBERSHIP),
    ("special-integral --vars x,y --ideal x^2,y^3 --element x*y^2", schemas.MEMBERSHIP),
    ("special-integral --vars x,y --ideal x^2,y^2 --element x*y", schemas.MEMBERSHIP),
    ("integral --vars x,y --ideal x^2,y^2", schemas.IDEAL),
    ("frobenius --ring F2[x,y,z]/(x^3+y^3+z^3) --ideal x,y --element z --max-e 2", schemas.FROBENIUS_VERDICT),
    ("special-frobenius --ring F2[x,y,z]/(x^3+y^3+z^3) --ideal x,y --element z^2", schemas.FROBENIUS_VERDICT),
    ("f-spread --ring F2[x,y] --ideal x,y --max-e 3", schemas.SPREAD_TABLE),
    ("low-points --vars x,y --ideal x^2,y^3", None),
    ("decomposition --vars x,y --ideal x^2,y^2", None),
    ("decompose-f --ring F2[x,y,z]/(x^3+y^3+z^3) --ideal x,y --element x+z^2", None),
    ("independence --vars x,y --ideal x^2,x*y", None),
    ("reductions --vars x,y --ideal x^2,x*y,y^2", None),
    ("spread --vars x,y --ideal x^2,x*y,y^2", None),
    ("bs-check --vars x,y --ideal x^2,y^2 --w 1", None),
    ("evolution --vars x,y --ideal x^2,y^2 --max-n 8", None),
    ("oracle-check --count 3", None),
]


@pytest.mark.parametrize("argv,schema", JSON_CASES)
def test_json_output_validates(argv, schema):
    req = parse(argv + " --json")
    payload = json.loads(render(execute(req), as_json=True))
    jsonschema.validate(payload, schemas.ENVELOPE)
    if schema is not None:
        jsonschema.validate(payload["result"], schema)
    if payload["result"].get("certificate"):
        jsonschema.validate(payload["result"]["certificate"], schemas.CERTIFICATE)


def test_axiom_json_validates():
    payload = json.loads(render(execute(parse("axioms --count 5 --pairs 20")), as_json=True))
    jsonschema.validate(payload, schemas.ENVELOPE)
    for key in ("closure", "special"):
        jsonschema.validate(payload["result"][key], schemas.AXIOM_REPORT)


def test_all_commands_dispatch():
    assert len(COMMANDS) == 15
    for command in COMMANDS:
        assert parse([command]).command == command


# --- request round trip ------------------------------------------------------------

text = st.text(alphabet="xyz^*0123456789,+()[]/F", min_size=1, max_size=12)
requests = st.builds(
    Request,
    command=st.sampled_from(COMMANDS),
    vars=st.none() | st.sampled_from(["x,y", "x,y,z", "a"]),
    ring=st.none() | text,
    ideal=st.none() | text,
    element=st.none() | text,
    max_e=st.integers(0, 9),
    max_n=st.integers(1, 64),
    box=st.none() | st.integers(0, 9),
    w=st.integers(0, 5),
    seed=st.integers(0, 2**31),
    count=st.integers(1, 200),
    pairs=st.integers(0, 1000),
    denominator_bound=st.integers(1, 40),
    threads=st.none() | st.integers(1, 8),
    json=st.booleans(),
)


@settings(max_examples=200)
@given(requests)
def test_request_round_trip(req):
    assert parse(format_request(req)) == req


def test_usage_error_is_raised_not_exit():
    with pytest.raises(UsageError):
        parse(["integral", "--max-e", "five"])
