import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stackycovers import report
from stackycovers.cli import main
from stackycovers.report import OutputRecord, parse_sweep, render_table

from regen_golden import CASES, GOLDEN, run


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_bytes(name):
    assert run(CASES[name]) == (GOLDEN / name).read_text(encoding="utf-8")


def test_classify_simple_json(capsys):
    code, out, _ = cli(capsys, "classify", "simple", "-n", "1", "-r", "2", "-d", "4", "--format", "json")
    assert code == 0
    rec = OutputRecord.parse(out)
    assert rec.input == {"n": 1, "r": 2, "d": 4, "char": "unknown"}
    assert rec.outputs["family"] is True
    assert rec.outputs["rationality"]["outcome"] == "yes"
    assert rec.outputs["rationality"]["reasons"]


def test_classify_simple_non_rational(capsys):
    code, out, _ = cli(capsys, "classify", "simple", "-n", "2", "-r", "3", "-d", "2")
    outputs = json.loads(out)["outputs"]
    assert code == 0 and outputs["family"] is False and outputs["rationality"]["outcome"] == "no"


def test_classify_simple_r_one(capsys):
    _, out, _ = cli(capsys, "classify", "simple", "-n", "1", "-r", "1", "-d", "4")
    outputs = json.loads(out)["outputs"]
    assert outputs["family"] is True and outputs["brauer_severi_trivial"] is False


def test_classify_simple_domain_error(capsys):
    code, out, err = cli(capsys, "classify", "simple", "-n", "1", "-r", "3", "-d", "1")
    assert code == 2 and out == "" and "rd >= 4" in err
    assert len(err.strip().splitlines()) == 1


def test_classify_triple(capsys):
    code, out, _ = cli(capsys, "classify", "triple", "--d1", "4", "--d2", "4")
    inj = json.loads(out)["outputs"]["injectivity"]
    assert code == 0 and inj["index"] == 3 and inj["metadata"]["discrepancy"] is True
    assert inj["image_matrix"] == [[2, -1], [-1, 2]]


def test_classify_triple_relaxed(capsys):
    code, out, _ = cli(capsys, "classify", "triple", "--d1", "5", "--d2", "4", "--relaxed")
    outputs = json.loads(out)["outputs"]
    assert code == 0 and outputs["brauer_severi_trivial"] is True and outputs["flags"]["g13_exists"] is True
    code, _, err = cli(capsys, "classify", "triple", "--d1", "5", "--d2", "4")
    assert code == 2


def test_classify_triple_domain_error(capsys):
    code, _, err = cli(capsys, "classify", "triple", "--d1", "2", "--d2", "2")
    assert code == 2 and "requires 2d1−d2 ≥ 4 and 2d2−d1 ≥ 4" in err


def test_pic_command(capsys):
    code, out, _ = cli(capsys, "pic", "-n", "1", "-r", "2", "-d", "4", "-k", "2")
    outputs = json.loads(out)["outputs"]
    assert code == 0
    assert outputs["pic_stack"] == {"generator": "det^2", "order": 28}
    assert outputs["pic_index"] == 2
    code, _, _ = cli(capsys, "pic", "-n", "1", "-r", "4", "-d", "1", "-k", "3")
    assert code == 2


def test_pic_big_ints_are_decimal(capsys):
    _, out, _ = cli(capsys, "pic", "-n", "6", "-r", "12", "-d", "12", "--format", "csv")
    assert "e+" not in out and "E+" not in out
    assert f"outputs.pic_stack.order,{12 * 143 ** 6}" in out


def test_strata_commands(capsys):
    code, out, _ = cli(capsys, "strata", "p1", "--rd", "8")
    assert code == 0 and json.loads(out)["outputs"]["codim"] == 2
    code, out, _ = cli(capsys, "strata", "p2", "-d", "5", "--ambient-offset", "9", "--char", "zero")
    data = json.loads(out)["outputs"]
    assert code == 0 and data["codim_at_least_two"] is False
    assert data["metadata"]["char_assumption"] == "zero"
    assert any(isinstance(c["dim_or_bound"], str) and "/" in c["dim_or_bound"] for c in data["per_case"])
    code, _, _ = cli(capsys, "strata", "p2", "-d", "3")
    assert code == 2


def sweep_file(tmp_path, text):
    path = tmp_path / "sweep.txt"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_table_hyperelliptic(capsys, tmp_path):
    code, out, _ = cli(capsys, "table", "--sweep", sweep_file(tmp_path, "n = 1\nr = 2\nd = 2..11\n"))
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 11
    for line in lines[1:]:
        row = line.split(",")
        assert (row[5] == "true") == (int(row[2]) % 2 == 0)


def test_table_triple_diagonal(capsys, tmp_path):
    code, out, _ = cli(capsys, "table", "--sweep", sweep_file(tmp_path, "d1 = 4..10\nd2 = d1\n"), "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["d1"] for r in rows] == list(range(4, 11))
    assert all(r["bs_trivial"] == (r["d1"] % 2 == 1) for r in rows)


def test_table_empty_sweep_is_header_only(capsys, tmp_path):
    for text in ("n = 1\nr = 2\nd = 5..4\n", "# nothing here\n"):
        code, out, _ = cli(capsys, "table", "--sweep", sweep_file(tmp_path, text))
        assert code == 0 and out == ",".join(report.SIMPLE_COLUMNS) + "\n"
    code, out, _ = cli(capsys, "table", "--sweep", sweep_file(tmp_path, "n = 1\nr = 2\nd = 5..4\n"), "--format", "md")
    assert len(out.splitlines()) == 2


def test_table_cap_exit_code(capsys, tmp_path, monkeypatch):
    path = sweep_file(tmp_path, "n = 1..6\nr = 2..12\nd = 1..12\n")
    code, _, err = cli(capsys, "table", "--sweep", path, "--cap", "10")
    assert code == 3 and "cap" in err
    monkeypatch.setenv("STACKYCOVERS_CAP", "10")
    code, _, _ = cli(capsys, "table", "--sweep", path)
    assert code == 3


def test_table_bad_sweep(capsys, tmp_path):
    code, _, err = cli(capsys, "table", "--sweep", sweep_file(tmp_path, "n = one\n"))
    assert code == 2 and "line 1" in err


def test_table_is_deterministic(capsys, tmp_path):
    path = sweep_file(tmp_path, "d = 1..6\nn = 1..3\nr = 2..5  # keys in any order\n")
    first = cli(capsys, "table", "--sweep", path)[1]
    assert first == cli(capsys, "table", "--sweep", path)[1]
    rows = [tuple(map(int, line.split(",")[:3])) for line in first.splitlines()[1:]]
    assert rows == sorted(rows)


def test_parse_sweep():
    spec = parse_sweep("# comment\nn = 2\nr = 2..5 # trailing\n\nd = 1..3\nrd = 6..8\n")
    assert spec.ranges == {"n": (2, 2), "r": (2, 5), "d": (1, 3), "rd": (6, 8)}
    assert all(6 <= r * d <= 8 for _, r, d in spec.simple_tuples())
    tied = parse_sweep("d1 = 4..6\nd2 = d1\n")
    assert tied.kind == "triple" and tied.triple_tuples() == [(4, 4), (5, 5), (6, 6)]
    for bad in ("x = 1", "n = 1\nn = 2", "n 1..2"):
        with pytest.raises(ValueError):
            parse_sweep(bad)
    with pytest.raises(ValueError):
        parse_sweep("n = 1\nr = 2\n").simple_tuples()


def test_verify_default(capsys):
    code, out, _ = cli(capsys, "verify")
    assert code == 0
    checked = [line for line in out.splitlines() if "checked, ok" in line]
    assert len(checked) >= 6
    assert out.strip().endswith("verify: ok")


def test_verify_only(capsys):
    code, out, _ = cli(capsys, "verify", "--only", "zlt13", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [i["name"] for i in data["identities"]] == ["zlt13"]


def test_verify_sweep_file(capsys, tmp_path):
    path = sweep_file(tmp_path, "n = 1..2\nr = 2..3\nd = 1..4\nd1 = 4..8\nd2 = 4..8\n")
    code, out, _ = cli(capsys, "verify", "--sweep", path, "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "identity,checked,discrepancies"


def test_verify_mutation_exits_one(capsys, monkeypatch):
    monkeypatch.setenv("STACKYCOVERS_MUTATE", "zlt13")
    code, out, _ = cli(capsys, "verify", "--only", "zlt13")
    assert code == 1
    assert "shortcut=" in out and "oracle=" in out and "[" in out


json_values = st.recursive(
    st.none() | st.booleans() | st.integers() | st.text(max_size=8),
    lambda inner: st.lists(inner, max_size=4) | st.dictionaries(st.text(max_size=6), inner, max_size=4),
    max_leaves=20,
)


@given(st.text(max_size=10), st.dictionaries(st.text(max_size=6), json_values, max_size=5),
       st.dictionaries(st.text(max_size=6), json_values, max_size=5))
def test_record_round_trip(command, inputs, outputs):
    rec = OutputRecord(command, inputs, outputs)
    assert OutputRecord.parse(rec.emit()) == rec


def test_record_round_trip_real_outputs(capsys):
    for argv in (["classify", "simple", "-n", "2", "-r", "2", "-d", "5"], ["classify", "triple", "--d1", "6", "--d2", "5"],
                 ["strata", "p2", "-d", "8"]):
        _, out, _ = cli(capsys, *argv)
        rec = OutputRecord.parse(out)
        assert OutputRecord.parse(rec.emit()) == rec
        assert rec.emit() + "\n" == out


def test_record_version_checked():
    with pytest.raises(ValueError):
        OutputRecord.parse(json.dumps({"format_version": 99, "command": "x", "input": {}, "outputs": {}}))


def test_render_table_escapes_markdown():
    out = render_table(["a"], [{"a": "x|y"}], "md")
    assert "x\\|y" in out
    with pytest.raises(ValueError):
        render_table(["a"], [], "xml")


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "stackycovers.cli", "strata", "p1", "--rd", "9"],
                          capture_output=True, text=True, cwd=Path(__file__).parent)
    assert proc.returncode == 0 and json.loads(proc.stdout)["input"] == {"rd": 9}
