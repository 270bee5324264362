import json

import pytest

from indeq.cli import SpecSyntaxError, main, parse_spec_text
from indeq.graphcore import FamilySpec

from conftest import fs


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_spec_text():
    assert parse_spec_text("P:10") == (fs("P", 10),)
    assert parse_spec_text("P:2 + K4e") == (fs("P", 2), fs("K4e"))
    assert parse_spec_text("Y:3,2,1") == (fs("Y", 3, 2, 1),)
    with pytest.raises(SpecSyntaxError, match="position 0"):
        parse_spec_text("Q:1")
    with pytest.raises(SpecSyntaxError, match="position 5"):
        parse_spec_text("P:2 +")
    with pytest.raises(SpecSyntaxError, match="position 6"):
        parse_spec_text("P:2 + C:two")
    with pytest.raises(SpecSyntaxError, match="must be >= 3"):
        parse_spec_text("C:1")


def test_poly_command(capsys):
    code, out, _ = run(capsys, "poly", "P:10")
    assert code == 0 and out.strip() == "1 10 36 56 35 6"
    code, out, _ = run(capsys, "poly", "C:6", "--json")
    assert json.loads(out) == {"input": "C:6", "coefficients": ["1", "6", "9", "2"]}
    # graph6 input: the canonical bytes of a path decode right back
    code, out, _ = run(capsys, "poly", "DqK")
    assert code == 0


def test_poly_rejects_garbage(capsys):
    code, _, err = run(capsys, "poly", "Zz:1")
    assert code == 2 and "neither a family spec" in err


def test_poly_reads_graph6_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("DqK\nBw\n"))
    code, out, _ = run(capsys, "poly", "-")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == ["1 5 5", "1 3"]


def test_factor_commands(capsys):
    code, out, _ = run(capsys, "factor", "cycle", "6")
    assert code == 0 and out.strip() == "f2 f6"
    code, out, _ = run(capsys, "factor", "path", "10")
    assert out.strip() == "f2 f3 f6 f~3"
    code, out, _ = run(capsys, "factor", "spec", "Y:4,2,2")
    assert out.strip() == "f12 f~3"
    code, out, _ = run(capsys, "factor", "path", "10", "--json")
    payload = json.loads(out)
    assert [item["kind"] for item in payload] == ["f", "f", "f", "ftilde"]
    # repeated factors divide out fine
    code, out, _ = run(capsys, "factor", "spec", "P:1+K4e+K4e")
    assert code == 0 and out.strip() == "f6 f6 f~3"
    # -1/4 is never a basis root, so this one cannot factor
    code, _, err = run(capsys, "factor", "spec", "F3:0")
    assert code == 1 and "remainder" in err


def test_class_commands(capsys):
    code, out, _ = run(capsys, "class", "path", "10")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 10 and lines[0] == "P:10"
    code, out, _ = run(capsys, "class", "path", "10", "--no-expand-d")
    assert len(out.strip().splitlines()) == 8
    code, out, _ = run(capsys, "class", "cycle", "9", "--json")
    payload = json.loads(out)
    assert payload["reference"] == "C:9" and len(payload["members"]) == 6
    code, out, _ = run(capsys, "class", "path", "4", "--graph6")
    assert all("\t" in line for line in out.strip().splitlines())


def test_roots_command(capsys):
    code, out, _ = run(capsys, "roots", "Y:2,1,1", "--json")
    payload = json.loads(out)
    assert payload["all_roots_real_below_-1/4"] is True
    assert payload["distinct_real_roots"] == 3
    code, out, _ = run(capsys, "roots", "K4e")
    assert "squarefree: True" in out


def test_screen_command(capsys):
    code, out, _ = run(capsys, "screen", "B", "--max", "6", "--json")
    payload = json.loads(out)
    admissible = {row["spec"] for row in payload if row["admissible"]}
    assert admissible == {"B:0,1,1", "B:5,1,1"}
    code, _, err = run(capsys, "screen", "Zf", "--max", "3")
    assert code == 2


def test_enumerate_command(capsys):
    code, out, _ = run(capsys, "enumerate", "--vertices", "4")
    assert code == 0 and len(out.strip().splitlines()) == 11
    code, out, _ = run(capsys, "enumerate", "--vertices", "6", "--edges", "6",
                       "--max-degree", "2", "--connected")
    assert out.strip().splitlines() == ["EBj?"]
    code, _, err = run(capsys, "enumerate", "--vertices", "40")
    assert code == 2 and "capped" in err


def test_enumerate_byte_determinism(capsys):
    _, out1, _ = run(capsys, "enumerate", "--vertices", "5", "--edges", "5")
    _, out2, _ = run(capsys, "enumerate", "--vertices", "5", "--edges", "5")
    assert out1 == out2


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--bound", "small")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS ") for line in lines)
    assert len(lines) == 3
