import io
import json
import random
import re
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metabelian_gs.cli import (
    ParseError,
    format_presentation,
    main,
    parse_expression,
    parse_presentation,
)
from metabelian_gs.poly import MPoly, bracket_left_normed
from metabelian_gs.presentations import circuit, cube, graph_presentation, random_presentation
from metabelian_gs.scalars import QQ, Field
from metabelian_gs.words import Alphabet

ZYX = Alphabet(("z", "y", "x"))
Z, Y, X = 0, 1, 2
W = MPoly.word
L = MPoly.letter


def run(argv):
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="p.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


CIRC4 = format_presentation(graph_presentation(circuit(4)))


# -- parsing -----------------------------------------------------------------


def test_parse_single_relation():
    P = parse_presentation("generators: z < y < x\nrelations:\n[x,y]\n")
    assert P.alphabet.names == ("z", "y", "x")
    assert P.relations == [W((X, Y))]
    assert P.field == QQ


def test_parse_expression_example():
    f = parse_expression("[x,y,z] - 2*[x,z] + y", ZYX, QQ)
    expected = W((X, Z, Y)) - W((Y, Z, X)) - W((X, Z)).scale(2) + L(Y)
    assert f == expected
    assert f == bracket_left_normed([X, Y, Z]) - bracket_left_normed([X, Z]).scale(2) + L(Y)


def test_parse_rationals_and_fields():
    f = parse_expression("1/2*[x,y] - 3*z", ZYX, QQ)
    assert f.terms[(X, Y)] * 2 == 1
    P = parse_presentation("field GF(5)\ngenerators: y < x\nrelations:\n7*[x,y]\n")
    assert P.field == Field(5)
    assert P.relations[0].lead_coeff == 2


@pytest.mark.parametrize("text, msg", [
    ("[x]", "at least two"),
    ("[x,w]", "unknown generator"),
    ("1/0*x", "malformed rational"),
    ("x +", "expected a generator"),
    ("x y", "expected '+' or '-'"),
    ("1/2 x", "must be followed"),
    ("2 x", "unknown generator '2'"),
    ("x $ y", "unexpected character"),
])
def test_parse_expression_errors(text, msg):
    with pytest.raises(ParseError, match=re.escape(msg)):
        parse_expression(text, ZYX, QQ)


@pytest.mark.parametrize("text, msg", [
    ("relations:\n", "before"),
    ("generators: \n", "empty generator"),
    ("generators: x < x\n", "duplicate"),
    ("field R\n", "field Q"),
    ("", "empty generator"),
])
def test_parse_presentation_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_presentation(text)


def test_parse_error_positions():
    with pytest.raises(ParseError) as ei:
        parse_presentation("generators: y < x\nrelations:\n  [x, w]\n")
    assert ei.value.line == 3 and ei.value.col == 7


def test_zero_relation_dropped(capsys):
    P = parse_presentation("generators: y < x\nrelations:\n[x,y] + [y,x]\n")
    assert P.relations == []
    assert "dropped" in capsys.readouterr().err


@settings(max_examples=50)
@given(st.integers(0, 10**6))
def test_round_trip(seed):
    P = random_presentation(random.Random(seed), coeffs=(-3, -1, 1, 2))
    text = format_presentation(P)
    Q = parse_presentation(text)
    assert Q.relations == P.relations and Q.alphabet.names == P.alphabet.names
    assert format_presentation(Q) == text


def test_round_trip_generated_families():
    for G in (circuit(5), cube(3)):
        text = format_presentation(graph_presentation(G))
        assert format_presentation(parse_presentation(text)) == text


# -- commands ----------------------------------------------------------------


def test_complete_circ4_json(write):
    code, out = run(["complete", write(CIRC4), "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"status", "degree_bound", "basis", "stats"}
    assert data["status"] == "complete"
    assert len(data["basis"]) == 5
    assert all(set(b) == {"leading", "polynomial", "origin"} for b in data["basis"])
    assert json.dumps(data, sort_keys=True, indent=2) + "\n" == out
    lead = [b["leading"] for b in data["basis"]]
    assert "[2,0,3]" in lead


def test_complete_text_and_log(write, tmp_path):
    log = tmp_path / "events.jsonl"
    code, out = run(["complete", write(CIRC4), "--log", str(log)])
    assert code == 0
    assert out.startswith("status: complete\n")
    events = [json.loads(x) for x in log.read_text().splitlines()]
    assert events and all("kind" in e for e in events)


def test_complete_tree_adjoins_nothing(write, tmp_path):
    code, text = run(["gen", "tree", "--random", "9", "--seed", "3"])
    assert code == 0
    code, out = run(["complete", write(text), "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["stats"]["adjoined"] == 0
    assert len(data["basis"]) == 8


def test_complete_free(write):
    code, out = run(["complete", write("generators: y < x\nrelations:\n"), "--format", "json"])
    assert code == 0 and json.loads(out)["basis"] == []


def test_degree_capped_exit_code(write):
    text = format_presentation(graph_presentation(circuit(7)))
    code, out = run(["complete", write(text), "--max-deg", "3"])
    assert code == 2
    assert "degree_capped" in out


def test_parse_error_exit_code(write, capsys):
    code, _ = run(["complete", write("generators: y < x\nrelations:\n[x]\n")])
    assert code == 1
    err = capsys.readouterr().err
    assert "line 3" in err and "column" in err


def test_missing_file_exit_code(capsys):
    code, _ = run(["complete", "/nonexistent/file"])
    assert code == 1


def test_nf_circ4(write):
    code, out = run(["nf", write(CIRC4), "-e", "[3,2,0]"])
    assert code == 0 and out == "0\n"
    code, out = run(["nf", write(CIRC4), "-e", "[3,1]", "--format", "json"])
    assert json.loads(out)["normal_form"] == "[3,1]"


def test_irr_free(write):
    code, out = run(["irr", write("generators: y < x\nrelations:\n"), "--max-len", "3"])
    assert code == 0
    assert out.splitlines() == ["1 (2): y, x", "2 (1): [x,y]", "3 (2): [x,y,y], [x,y,x]"]


def test_dims_oracle_circ4(write):
    code, out = run(["dims", write(CIRC4), "--max-len", "5", "--oracle"])
    assert code == 0
    assert out.splitlines()[-1] == "MATCH"


def test_gen_outputs_parse():
    for argv in (["gen", "circuit", "5"], ["gen", "cube", "3"], ["gen", "random", "--seed", "4"]):
        code, out = run(argv)
        assert code == 0
        parse_presentation(out)


def test_gen_graph_file(write):
    code, out = run(["gen", "graph", write("c:\nb: c\na: b c\n", "g.txt")])
    assert code == 0
    P = parse_presentation(out)
    assert P.alphabet.names == ("c", "b", "a") and len(P.relations) == 3


def test_verify_circuit_6():
    code, out = run(["verify", "circuit", "6"])
    assert code == 0
    assert "basis size 9" in out and out.endswith("PASS\n")


def test_verify_circuit_strict_fails():
    code, out = run(["verify", "circuit", "6", "--strict-def32"])
    assert code == 1 and out.endswith("FAIL\n")


def test_verify_tree_random():
    code, out = run(["verify", "tree", "--random", "10", "--seed", "7"])
    assert code == 0
    assert "adjoined 0" in out and out.endswith("PASS\n")


def test_verify_tree_file(write):
    code, out = run(["verify", "tree", write("r:\na: r\nb: r\nc: a\n", "t.txt")])
    assert code == 0 and out.endswith("PASS\n")


def test_verify_tree_rejects_cycle(write):
    code, _ = run(["verify", "tree", write("a:\nb: a\nc: a b\n", "t.txt")])
    assert code == 1


def test_output_deterministic(write):
    p = write(format_presentation(graph_presentation(cube(3))))
    a = run(["complete", p, "--format", "json"])
    b = run(["complete", p, "--format", "json", "--workers", "2"])
    assert a == b


def test_module_entry_point(write):
    r = subprocess.run([sys.executable, "-m", "metabelian_gs", "verify", "circuit", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.endswith("PASS\n")
