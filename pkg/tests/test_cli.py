import json

import pytest

from machines import M_0STAR1, M_CYCLE2, M_EPS, M_ONESTAR
from ordfa.cli import main, render_dot
from ordfa.dfa import Dfa, dump, from_json, load
from ordfa.ordtype import order_type
from ordfa.ordinal import parse_ordinal


@pytest.fixture
def automaton_file(tmp_path):
    def write(m, name="machine.json"):
        path = tmp_path / name
        dump(m, str(path))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


###############################################################################
# check / witness
###############################################################################


def test_check_well_ordered(automaton_file, capsys):
    code, out, _ = run(capsys, "check", automaton_file(M_ONESTAR))
    assert code == 0
    assert out == "well-ordered\n"


def test_check_not_well_ordered(automaton_file, capsys):
    code, out, _ = run(capsys, "check", automaton_file(M_0STAR1))
    assert code == 3
    assert "not well-ordered" in out
    assert "witness state: 0" in out
    assert "x (start to state)   = (eps)" in out
    assert "chain x(0u)^n 1v: 1, 01, 001, 0001, 00001, ..." in out


def test_witness_replays_chain(automaton_file, capsys):
    code, out, _ = run(capsys, "witness", automaton_file(M_0STAR1), "--verify", "12")
    assert code == 3
    assert "verified to depth 12: ok" in out


def test_witness_on_well_ordered(automaton_file, capsys):
    code, out, _ = run(capsys, "witness", automaton_file(M_CYCLE2))
    assert code == 0
    assert out == "well-ordered\n"


###############################################################################
# ordtype / rank
###############################################################################


def test_ordtype(automaton_file, capsys):
    code, out, _ = run(capsys, "ordtype", automaton_file(M_ONESTAR))
    assert code == 0
    assert out == "w\n"


def test_ordtype_table(automaton_file, capsys):
    code, out, _ = run(capsys, "ordtype", automaton_file(M_ONESTAR), "--table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "w"
    assert lines[1] == "state\theight\tordinal"
    assert lines[2] == "0\t1\tw"
    assert lines[3] == "1\t0\t0"


def test_ordtype_not_well_ordered(automaton_file, capsys):
    code, out, _ = run(capsys, "ordtype", automaton_file(M_0STAR1))
    assert code == 3
    assert "not well-ordered" in out


def test_ordtype_trims_first(automaton_file, capsys):
    # reachable dead states collapse; language is {eps}, type 1
    m = Dfa(delta=((1, 2), (1, 2), (2, 1)), start=0, finals=frozenset({0}))
    code, out, _ = run(capsys, "ordtype", automaton_file(m))
    assert code == 0
    assert out == "1\n"


def test_rank(automaton_file, capsys):
    path = automaton_file(M_CYCLE2)
    assert run(capsys, "rank", path, "-w", "0100") == (0, "1\n", "")
    assert run(capsys, "rank", path, "-w", "(eps)") == (0, "0\n", "")
    assert run(capsys, "rank", path, "-w", "1") == (0, "w\n", "")


def test_rank_bad_word(automaton_file, capsys):
    code, _, err = run(capsys, "rank", automaton_file(M_CYCLE2), "-w", "012")
    assert code == 2
    assert "error" in err


###############################################################################
# synth
###############################################################################


def test_synth_to_file(tmp_path, capsys):
    out_path = tmp_path / "synth.json"
    code, out, _ = run(capsys, "synth", "w^2", "-o", str(out_path))
    assert code == 0
    assert out == f"wrote {out_path} (4 states)\n"
    m = load(str(out_path))
    assert order_type(m).overall == parse_ordinal("w^2")


def test_synth_to_stdout(capsys):
    code, out, _ = run(capsys, "synth", "w + 2")
    assert code == 0
    m = from_json(out)
    assert order_type(m).overall == parse_ordinal("w + 2")


def test_synth_bad_ordinal(capsys):
    code, _, err = run(capsys, "synth", "w^x")
    assert code == 2
    assert "bad ordinal" in err


###############################################################################
# enum / min / succ
###############################################################################


def test_enum(automaton_file, capsys):
    code, out, _ = run(capsys, "enum", automaton_file(M_CYCLE2), "-n", "3")
    assert code == 0
    assert out == "00\n0100\n010100\n"


def test_enum_prints_eps(automaton_file, capsys):
    code, out, _ = run(capsys, "enum", automaton_file(M_EPS), "-n", "2")
    assert code == 0
    assert out == "(eps)\n"


def test_enum_no_minimum(automaton_file, capsys):
    code, out, _ = run(capsys, "enum", automaton_file(M_0STAR1), "-n", "3")
    assert code == 3
    assert out.startswith("not well-ordered:")


def test_min(automaton_file, capsys):
    assert run(capsys, "min", automaton_file(M_CYCLE2)) == (0, "00\n", "")


def test_min_empty_language(automaton_file, capsys):
    empty = Dfa(delta=((0, 0),), start=0, finals=frozenset())
    assert run(capsys, "min", automaton_file(empty)) == (0, "(empty language)\n", "")


def test_min_no_minimum(automaton_file, capsys):
    code, out, _ = run(capsys, "min", automaton_file(M_0STAR1))
    assert code == 3
    assert out.startswith("no minimum:")


def test_succ(automaton_file, capsys):
    path = automaton_file(M_CYCLE2)
    assert run(capsys, "succ", path, "-w", "00") == (0, "0100\n", "")
    code, out, _ = run(capsys, "succ", automaton_file(M_EPS), "-w", "(eps)")
    assert code == 0
    assert out == "(none)\n"


###############################################################################
# trim
###############################################################################


def test_trim(automaton_file, tmp_path, capsys):
    m = Dfa(delta=((1, 2), (1, 2), (2, 1)), start=0, finals=frozenset({0}))
    out_path = tmp_path / "trimmed.json"
    code, out, _ = run(capsys, "trim", automaton_file(m), "-o", str(out_path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "states: 3 -> 2"
    assert lines[1] == "removed unreachable: (none)"
    assert lines[2] == "merged into sink: 2"
    assert lines[3] == "sink: 1"
    trimmed = load(str(out_path))
    assert trimmed == Dfa(delta=((1, 1), (1, 1)), start=0, finals=frozenset({0}))


###############################################################################
# analyze-chain
###############################################################################


def test_analyze_chain(tmp_path, capsys):
    path = tmp_path / "chain.txt"
    path.write_text("11\n\n10\n01\n00\n", encoding="utf-8")
    code, out, _ = run(capsys, "analyze-chain", str(path))
    assert code == 0
    assert out.splitlines() == [
        "# times are 1-based; positions are 0-based",
        "active:",
        "  time 1: position 1",
        "  time 2: position 0",
        "  time 3: position 1",
        "sequence:",
        "  i_0 = 0 at t_0 = 2",
        "  i_1 = 1 at t_1 = 3",
    ]


def test_analyze_chain_rejects_non_strict(tmp_path, capsys):
    path = tmp_path / "chain.txt"
    path.write_text("0\n1\n", encoding="utf-8")
    code, _, err = run(capsys, "analyze-chain", str(path))
    assert code == 2
    assert "error" in err


def test_analyze_chain_bad_letter(tmp_path, capsys):
    path = tmp_path / "chain.txt"
    path.write_text("01\n02\n", encoding="utf-8")
    code, _, err = run(capsys, "analyze-chain", str(path))
    assert code == 2
    assert "chain.txt:2" in err


###############################################################################
# dot
###############################################################################


def test_dot(automaton_file, capsys):
    code, out, _ = run(capsys, "dot", automaton_file(M_ONESTAR))
    assert code == 0
    assert out == render_dot(M_ONESTAR)
    assert out.startswith("digraph automaton {")
    assert '    q0 [shape=doublecircle];' in out
    assert "style=filled" in out
    assert 'label="C0 (height 0)";' in out
    assert 'label="C1 (height 1)";' in out
    assert "  __start -> q0;" in out
    assert '  q1 -> q1 [label="0,1"];' in out
    assert '  q0 -> q1 [label="0"];' in out
    assert '  q0 -> q0 [label="1"];' in out


###############################################################################
# fuzz / embed
###############################################################################


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--seeds", "5", "--states", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seed\tstates\tverdict\tchecks\tfirst_failure"
    assert len(lines) == 7
    assert lines[-1].startswith("# total=5 ")


def test_embed(capsys):
    assert run(capsys, "embed", "021") == (0, "01110\n", "")
    code, _, err = run(capsys, "embed", "031")
    assert code == 2
    assert "'3'" in err


###############################################################################
# input handling
###############################################################################


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/machine.json")
    assert code == 2
    assert "no such file" in err


def test_malformed_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "broken.json" in err


def test_bad_json_shape(tmp_path, capsys):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps({"start": 0}), encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "missing keys" in err


def test_no_arguments(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_unknown_command(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
