"""Rewrite the golden files from the current CLI output.

Run from the repository root after an intentional output change:
``python3 tests/regen_golden.py``. Review the diff before committing.
"""
import contextlib
import io
from pathlib import Path

from stackycovers.cli import main

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "classify_simple_1_2_4.csv": ["classify", "simple", "-n", "1", "-r", "2", "-d", "4", "--format", "csv"],
    "classify_simple_1_2_4.md": ["classify", "simple", "-n", "1", "-r", "2", "-d", "4", "--format", "md"],
    "classify_triple_4_4.csv": ["classify", "triple", "--d1", "4", "--d2", "4", "--format", "csv"],
    "classify_triple_4_4.md": ["classify", "triple", "--d1", "4", "--d2", "4", "--format", "md"],
    "hyperelliptic.csv": ["table", "--sweep", "hyperelliptic.sweep", "--format", "csv"],
    "hyperelliptic.md": ["table", "--sweep", "hyperelliptic.sweep", "--format", "md"],
    "triple_diagonal.csv": ["table", "--sweep", "triple_diagonal.sweep", "--format", "csv"],
    "rationality_n1.csv": ["table", "--sweep", "rationality_n1.sweep", "--format", "csv"],
    "rationality_n2.csv": ["table", "--sweep", "rationality_n2.sweep", "--format", "csv"],
    "rationality_n2_low.csv": ["table", "--sweep", "rationality_n2_low.sweep", "--format", "csv"],
}


def run(argv: list[str]) -> str:
    argv = [str(GOLDEN / a) if a.endswith(".sweep") else a for a in argv]
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    if code != 0:
        raise SystemExit(f"{argv} exited with {code}")
    return buf.getvalue()


if __name__ == "__main__":
    for name, argv in CASES.items():
        (GOLDEN / name).write_text(run(argv), encoding="utf-8")
        print("wrote", name)
