"""Output records, sweep specifications, and table rendering."""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator, Sequence

from .errors import CapExceeded, DomainError, HypothesisError
from .oracle import SweepBox, default_cap
from .simple_cyclic import (
    CharAssumption,
    SimpleCyclicParams,
    gnr_classification,
    least_linearized_degree,
    no_section_over_M0,
    pic_divisor_stack,
    pic_index,
    pic_stack,
    rationality_simple,
    tautological_family_exists,
    verify_coarse_pic_trivial,
)
from .strata import aut_locus_codim_p1, aut_locus_codim_p2
from .triple_cover import (
    TripleCoverParams,
    no_section_over_M0_triple,
    pic_injectivity_index,
    tautological_family_triple,
    triple_hom_witness,
    triple_structure_flags,
)
from .verdict import Verdict

FORMAT_VERSION = 1


def jsonable(value: Any) -> Any:
    """Plain JSON data: Fractions become ``"p/q"`` strings, tuples become lists."""
    if isinstance(value, Verdict):
        return value.to_dict()
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):  # enums
        return value.value
    return value


@dataclass(frozen=True)
class OutputRecord:
    command: str
    input: dict
    outputs: dict
    format_version: int = FORMAT_VERSION

    def __post_init__(self):
        # store plain JSON data so that parse(emit(x)) == x holds exactly
        object.__setattr__(self, "input", jsonable(self.input))
        object.__setattr__(self, "outputs", jsonable(self.outputs))

    def to_dict(self) -> dict:
        return {
            "format_version": self.format_version,
            "command": self.command,
            "input": self.input,
            "outputs": self.outputs,
        }

    def emit(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True)

    @classmethod
    def parse(cls, text: str) -> OutputRecord:
        data = json.loads(text)
        if data.get("format_version") != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {data.get('format_version')!r}")
        return cls(data["command"], data["input"], data["outputs"], data["format_version"])


# -- records -------------------------------------------------------------------

def _presentation(pres) -> dict:
    return {"generator": pres.generator_label, "order": pres.order}


def classify_simple_record(p: SimpleCyclicParams, char: CharAssumption = CharAssumption.UNKNOWN) -> OutputRecord:
    p.require_rd_at_least_four()
    char = CharAssumption(char)
    family, bs_trivial = tautological_family_exists(p)
    try:
        gnr = gnr_classification(p)
        gnr_out = {"simple_cyclic_Gnr_exists": gnr.simple_cyclic_Gnr_exists,
                   "guaranteed_multiple": gnr.guaranteed_multiple}
    except HypothesisError as exc:
        gnr_out = {"not_applicable": str(exc)}
    proof = verify_coarse_pic_trivial(p)
    outputs = {
        "rd": p.rd,
        "g": p.g,
        "least_linearized_degree": least_linearized_degree(p),
        "family": family,
        "brauer_severi_trivial": bs_trivial,
        "rationality": rationality_simple(p),
        "pic_stack": _presentation(pic_stack(p)),
        "pic_divisor_stack": _presentation(pic_divisor_stack(p)),
        "pic_index": pic_index(p, p.r),
        "coarse_pic": {"m": proof.m, "gcd_m_rd_power": proof.gcd_m_rd_power,
                       "conclusion": proof.conclusion},
        "no_section_over_M0": no_section_over_M0(p, char),
        "gnr": gnr_out,
    }
    return OutputRecord("classify simple", {"n": p.n, "r": p.r, "d": p.d, "char": char.value}, outputs)


def classify_triple_record(p: TripleCoverParams) -> OutputRecord:
    family, bs_trivial = tautological_family_triple(p)
    inj = pic_injectivity_index(p)
    flags = triple_structure_flags(p)
    outputs = {
        "l1": p.l1,
        "l2": p.l2,
        "family": family,
        "brauer_severi_trivial": bs_trivial,
        "witness": dict(triple_hom_witness(p).assignments),
        "injectivity": {
            "index": inj.index,
            "strictly_greater_than_one": inj.strictly_greater_than_one,
            "image_matrix": inj.image_matrix,
            "smith_diagonal": inj.smith_diagonal,
            "metadata": inj.metadata,
        },
        "flags": vars(flags),
        "no_section_over_M0": no_section_over_M0_triple(p),
    }
    return OutputRecord("classify triple", {"d1": p.d1, "d2": p.d2}, outputs)


def pic_record(p: SimpleCyclicParams, k: int | None = None) -> OutputRecord:
    p.require_rd_at_least_four()
    k = p.r if k is None else k
    proof = verify_coarse_pic_trivial(p)
    outputs = {
        "pic_stack": _presentation(pic_stack(p)),
        "pic_divisor_stack": _presentation(pic_divisor_stack(p)),
        "pic_index": pic_index(p, k),
        "coarse_pic": vars(proof) | {"conclusion": proof.conclusion},
    }
    return OutputRecord("pic", {"n": p.n, "r": p.r, "d": p.d, "k": k}, outputs)


def strata_p1_record(rd: int) -> OutputRecord:
    rec = aut_locus_codim_p1(rd)
    outputs = {
        "ambient_dim": rec.ambient_dim,
        "max_stratum_dim": rec.max_stratum_dim,
        "codim": rec.codim,
        "guaranteed": rec.guaranteed,
        "strata": [{"p": s.p, "i": s.i, "dim": s.dim, "empty": s.empty} for s in rec.strata],
    }
    return OutputRecord("strata p1", {"rd": rd}, outputs)


def strata_p2_record(d: int, ambient_offset: int, char: CharAssumption = CharAssumption.UNKNOWN) -> OutputRecord:
    rec = aut_locus_codim_p2(d, ambient_offset)
    outputs = {
        "ambient_dim": rec.ambient_dim,
        "codim_at_least_two": rec.codim_at_least_two,
        "per_case": [
            {"case": s.case_id, "m": s.m, "parameters": s.parameters, "dim_or_bound": s.dim_or_bound,
             "is_upper_bound": s.is_upper_bound, "within_threshold": s.within_threshold}
            for s in rec.per_case
        ],
        "metadata": rec.metadata | {"char_assumption": CharAssumption(char).value},
    }
    return OutputRecord("strata p2", {"d": d, "ambient_offset": ambient_offset}, outputs)


def flatten(data: Any, prefix: str = "") -> list[tuple[str, str]]:
    """Dotted ``(field, value)`` pairs; lists are kept whole as compact JSON."""
    if isinstance(data, dict):
        out = []
        for key in sorted(data):
            out.extend(flatten(data[key], f"{prefix}.{key}" if prefix else str(key)))
        return out
    return [(prefix, format_cell(data))]


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"), sort_keys=True)
    return str(value)


def render_record(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return record.emit() + "\n"
    rows = [dict(zip(("field", "value"), pair)) for pair in flatten(record.to_dict())]
    return render_table(["field", "value"], rows, fmt)


# -- sweeps --------------------------------------------------------------------

SIMPLE_KEYS = ("n", "r", "d")
TRIPLE_KEYS = ("d1", "d2")
_LINE = re.compile(r"^\s*([a-z0-9]+)\s*=\s*(-?\d+)(?:\s*\.\.\s*(-?\d+))?\s*$|^\s*(d2)\s*=\s*(d1)\s*$")


@dataclass(frozen=True)
class SweepSpec:
    """Flat ``key = lo..hi`` ranges; ``rd`` filters by branch degree; ``d2 = d1`` ties the pair."""

    ranges: dict = field(default_factory=dict)
    tie_d2_to_d1: bool = False

    @property
    def kind(self) -> str:
        return "triple" if any(k in self.ranges for k in TRIPLE_KEYS) else "simple"

    def box(self, cap: int | None = None) -> SweepBox:
        defaults = SweepBox()
        kwargs = {k: self.ranges.get(k, getattr(defaults, k)) for k in SIMPLE_KEYS + TRIPLE_KEYS}
        if self.tie_d2_to_d1:
            kwargs["d2"] = kwargs["d1"]
        return SweepBox(**kwargs, cap=cap)

    def simple_tuples(self, cap: int | None = None) -> list[tuple[int, int, int]]:
        if not self.ranges:
            return []
        missing = [k for k in SIMPLE_KEYS if k not in self.ranges]
        if missing:
            raise ValueError(f"sweep spec must set {', '.join(missing)}")
        rd_lo, rd_hi = self.ranges.get("rd", (None, None))
        tuples = self.box(cap).simple_tuples()
        return sorted(t for t in tuples
                      if (rd_lo is None or rd_lo <= t[1] * t[2] <= rd_hi))

    def triple_tuples(self, cap: int | None = None) -> list[tuple[int, int]]:
        if "d1" not in self.ranges or ("d2" not in self.ranges and not self.tie_d2_to_d1):
            raise ValueError("sweep spec must set d1 and d2")
        box = self.box(cap)
        if self.tie_d2_to_d1:
            box._check(len(box._span(box.d1)))
            return [(v, v) for v in box._span(box.d1)]
        return sorted(box.triple_tuples())


def parse_sweep(text: str) -> SweepSpec:
    ranges: dict[str, tuple[int, int]] = {}
    tie = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected 'key = lo..hi', got {raw!r}")
        if m.group(4):
            tie = True
            continue
        key, lo = m.group(1), int(m.group(2))
        hi = int(m.group(3)) if m.group(3) is not None else lo
        if key not in SIMPLE_KEYS + TRIPLE_KEYS + ("rd",):
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in ranges:
            raise ValueError(f"line {lineno}: {key!r} set twice")
        ranges[key] = (lo, hi)
    return SweepSpec(ranges, tie)


# -- tables --------------------------------------------------------------------

SIMPLE_COLUMNS = ["n", "r", "d", "rd", "g", "family", "bs_trivial", "rational", "condition"]
TRIPLE_COLUMNS = ["d1", "d2", "l1", "l2", "family", "bs_trivial", "g13", "index", "no_section"]


def simple_row(n: int, r: int, d: int) -> dict:
    p = SimpleCyclicParams(n, r, d, strict=False)
    family, bs = tautological_family_exists(p)
    if p.rd >= 4:
        verdict = rationality_simple(p)
        rational, condition = verdict.outcome.value, verdict.condition
    else:
        rational, condition = "n/a", "rd >= 4"
    return {"n": n, "r": r, "d": d, "rd": p.rd, "g": p.g, "family": family, "bs_trivial": bs,
            "rational": rational, "condition": condition}


def triple_row(d1: int, d2: int) -> dict | None:
    try:
        p = TripleCoverParams(d1, d2)
    except DomainError:
        return None
    family, bs = tautological_family_triple(p)
    return {"d1": d1, "d2": d2, "l1": p.l1, "l2": p.l2, "family": family, "bs_trivial": bs,
            "g13": triple_structure_flags(p).g13_exists, "index": pic_injectivity_index(p).index,
            "no_section": no_section_over_M0_triple(p).outcome.value}


def sweep_rows(spec: SweepSpec, cap: int | None = None) -> tuple[list[str], Iterator[dict]]:
    cap = default_cap() if cap is None else cap
    if spec.kind == "triple":
        tuples = spec.triple_tuples(cap)
        return TRIPLE_COLUMNS, (row for row in (triple_row(*t) for t in tuples) if row is not None)
    tuples = spec.simple_tuples(cap)
    if len(tuples) > cap:
        raise CapExceeded(f"sweep of {len(tuples)} tuples exceeds cap {cap}")
    return SIMPLE_COLUMNS, (simple_row(*t) for t in tuples)


def render_table(columns: Sequence[str], rows: Iterable[dict], fmt: str) -> str:
    """CSV, Markdown, or JSON lines (typed values, one object per row)."""
    if fmt == "json":
        return "".join(json.dumps({c: jsonable(row[c]) for c in columns}, ensure_ascii=False) + "\n"
                       for row in rows)
    rows = [[format_cell(row[c]) for c in columns] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "md":
        def line(cells):
            return "| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |\n"
        return line(columns) + line(["---"] * len(columns)) + "".join(line(r) for r in rows)
    raise ValueError(f"unknown format {fmt!r}")
