import json

import pytest

from cayley import cli


def _run(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_degrees(capsys):
    code, out, _ = _run(capsys, ["degrees"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 27
    assert "s4pp: 45" in lines
    assert "s16: 1" in lines
    assert lines[0] == "s0: 78"


def test_multiply_both_engines(capsys):
    code, out, _ = _run(capsys, ["multiply", "s4p", "s4p",
                                 "--engine", "both"])
    assert code == 0
    assert out.strip() == "s8 + s8p + s8pp"


def test_multiply_accepts_h_alias(capsys):
    code, out, _ = _run(capsys, ["multiply", "h", "s15"])
    assert code == 0
    assert out.strip() == "s16"


def test_multiply_above_top_degree_is_zero(capsys):
    code, out, _ = _run(capsys, ["multiply", "s16", "s16"])
    assert code == 0
    assert out.strip() == "0"


def test_multiply_unknown_name_exits_2(capsys):
    code, _, err = _run(capsys, ["multiply", "s4p", "sigma4"])
    assert code == 2
    assert "unknown class name" in err
    assert "s4pp" in err  # the valid names are listed


def test_deg_y8(capsys):
    code, out, _ = _run(capsys, ["deg-y8"])
    assert code == 0
    assert out.strip() == "1047361761"


def test_hasse_json(capsys):
    code, out, _ = _run(capsys, ["hasse", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["space"] == "op2"
    assert doc["total_degree"] == 78
    assert len(doc["nodes"]) == 27
    ids = [n["id"] for n in doc["nodes"]]
    assert ids[0] == "w0_0" and len(set(ids)) == 27
    by_name = {n["name"]: n for n in doc["nodes"]}
    assert by_name["s4p"]["degree"] == 33
    assert by_name["s8"]["length"] == 8


def test_hasse_spinor_text(capsys):
    code, out, _ = _run(capsys, ["hasse", "--space", "s10"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    assert lines[0].split()[0] == "w0_0"


def test_hasse_dot(capsys):
    code, out, _ = _run(capsys, ["hasse", "--format", "dot"])
    assert code == 0
    assert out.startswith("digraph")
    assert out.rstrip().endswith("}")
    assert 'w0_0 [label="s0' in out


def test_invariants(capsys):
    code, out, _ = _run(capsys, ["invariants"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "e2 = -3/4*s2"
    assert lines[4] == "e8 = 21/128*s8 + 291/256*s8p - 519/256*s8pp"


def test_chern(capsys):
    code, out, _ = _run(capsys, ["chern"])
    assert code == 0
    assert "c1 = 15*s1" in out
    assert "c8 = 2751*s8 + 9786*s8p + 7032*s8pp" in out


def test_chern_projected(capsys):
    code, out, _ = _run(capsys, ["chern", "--projected"])
    assert code == 0
    assert "c1 = 14*s1" in out
    assert "c10 = 0" in out


def test_segre(capsys):
    code, out, _ = _run(capsys, ["segre"])
    assert code == 0
    assert "s15 = 12591161406*s15" in out


def test_table_round_trips_and_is_deterministic(capsys):
    code, out1, _ = _run(capsys, ["table"])
    assert code == 0
    code, out2, _ = _run(capsys, ["table"])
    assert code == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert len(doc) == 27
    assert doc["s4p"]["s4pp"] == {"s8p": "2", "s8pp": "1"}
    assert doc["s8"]["s8"] == {"s16": "1"}
    assert doc["s4p"]["s12pp"] == {}


def test_jordan_selftest(capsys):
    code, out, _ = _run(capsys, ["jordan-selftest", "--samples", "60",
                                 "--seed", "7"])
    assert code == 0
    assert out.count("PASS") == 5
    assert "FAIL" not in out
