import io
import json

import pytest

from apa.cli import main, parse_sigma_spec
from apa.dynamics import SelectorFamily
from apa.errors import ApaError

ELMA = """
arguments: a2 a3 a4 a5
initial: a2 a3 a4
attack: a2 -> a3
convert: a3 : a4 => a5
"""

QUERY_TRUE = """
set A1 = { a2, a5 }
formula: (in(a5,A1) & EF{A1} sem(ad,A1)) -> !in(a2,A1)
"""

QUERY_FALSE = "formula: AG{*} visible(a4)\n"
QUERY_BAD = "formula: (in(a5,\n"


@pytest.fixture
def elma_file(tmp_path):
    path = tmp_path / "elma.apa"
    path.write_text(ELMA)
    return str(path)


def run(argv):
    out = io.StringIO()
    err = io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# -- --sigma parsing ---------------------------------------------------------


def test_sigma_spec_all():
    assert parse_sigma_spec("all").is_wildcard


def test_sigma_spec_literals():
    family = parse_sigma_spec("{a2},{},{a1,a3}")
    assert family == SelectorFamily.of({"a2"}, set(), {"a1", "a3"})


def test_sigma_spec_garbage():
    with pytest.raises(ApaError):
        parse_sigma_spec("a2,a3")


# -- subcommands -------------------------------------------------------------


def test_states_all(elma_file):
    code, out, _ = run(["states", elma_file, "--sigma", "all"])
    assert code == 0
    assert out == (
        "{a2,a3,a4}  (initial)\n"
        "{a2,a3,a5}  (deadlock)\n"
    )


def test_states_blocked_selector(elma_file):
    code, out, _ = run(["states", elma_file, "--sigma", "{a2}"])
    assert code == 0
    assert out == "{a2,a3,a4}  (initial, deadlock)\n"


def test_states_json(elma_file):
    code, out, _ = run(["states", elma_file, "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["states"][1] == {
        "visible": ["a2", "a3", "a5"],
        "initial": False,
        "deadlock": True,
    }


def test_transitions(elma_file):
    code, out, _ = run(["transitions", elma_file, "--sigma", "all"])
    assert code == 0
    assert out == "{a2,a3,a4} -[#0 *]-> {a2,a3,a5}\n"


def test_semantics_lists_extensions(elma_file):
    code, out, _ = run(
        ["semantics", elma_file, "--state", "a2,a3,a4", "--which", "ad"]
    )
    assert code == 0
    assert out == "{}\n{a2}\n{a2,a4}\n"


def test_semantics_unknown_argument(elma_file):
    code, _, err = run(
        ["semantics", elma_file, "--state", "zz", "--which", "ad"]
    )
    assert code == 1
    assert "zz" in err


def test_check_true(elma_file, tmp_path):
    q = tmp_path / "q.apa"
    q.write_text(QUERY_TRUE)
    code, out, _ = run(["check", elma_file, str(q)])
    assert code == 0
    assert out.splitlines()[0] == "true"


def test_check_false_exit_2(elma_file, tmp_path):
    q = tmp_path / "q.apa"
    q.write_text(QUERY_FALSE)
    code, out, _ = run(["check", elma_file, str(q)])
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "false"
    assert lines[1].startswith("counterexample prefix:")


def test_check_syntax_error_exit_1(elma_file, tmp_path):
    q = tmp_path / "bad.q"
    q.write_text(QUERY_BAD)
    code, _, err = run(["check", elma_file, str(q)])
    assert code == 1
    assert "error:" in err


def test_missing_file_exit_1(tmp_path):
    code, _, err = run(["states", str(tmp_path / "nope.apa")])
    assert code == 1
    assert "error:" in err


def test_dot_output(elma_file):
    code, out, _ = run(["dot", elma_file])
    assert code == 0
    assert out.startswith("digraph apa {")
    assert "peripheries=2" in out


def test_cli_deterministic(elma_file):
    runs = [run(["transitions", elma_file, "--sigma", "{},{a2}"]) for _ in range(2)]
    assert runs[0] == runs[1]


def test_bound_override(tmp_path):
    path = tmp_path / "wide.apa"
    args = " ".join(f"a{i}" for i in range(8))
    lines = [f"arguments: {args}", "initial: a0"]
    lines += [f"induce: a0 => a{j}" for j in range(8)]
    path.write_text("\n".join(lines) + "\n")
    code, _, err = run(["states", str(path), "--max-states", "4"])
    assert code == 1 and "error:" in err
    code, out, _ = run(["states", str(path)])
    assert code == 0 and len(out.splitlines()) == 128
