"""Row/report records and their CSV / JSONL serializations.

The CSV sticks to the nine reporting columns with floats at five decimals;
the JSONL mirror carries everything at full precision, with arbitrarily
large integers as decimal strings so nothing gets squeezed through a double.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

__all__ = [
    "CSV_HEADER",
    "ConjectureReport",
    "MonitorSeries",
    "TableRow",
    "render_csv",
    "render_monitors_jsonl",
    "render_reports_jsonl",
    "render_rows_jsonl",
    "write_outputs",
]

CSV_HEADER = "n,k,r_k,n_minus_m,R_k,A_over_nlogn,C_n,k_logm_over_2m,lemma29_ratio"

# Order and typing of the CSV columns after n and k.
_CSV_FIELDS = (
    ("r_k", "int"),
    ("n_minus_m", "int"),
    ("R_k", "float"),
    ("A_over_nlogn", "float"),
    ("C_n", "float"),
    ("k_logm_over_2m", "float"),
    ("lemma29_ratio", "float"),
)


@dataclass(frozen=True)
class TableRow:
    """One reporting checkpoint. Optional fields are None when the quantity
    is not defined yet at that index (k = 0, n too small for the logs, ...)."""

    n: int
    k: int
    m: int | None = None
    r_k: int | None = None
    n_minus_m: int | None = None
    A_n: int | None = None
    p_n: int | None = None
    p_2n: int | None = None
    R_k: float | None = None
    A_over_nlogn: float | None = None
    C_n: float | None = None
    k_logm_over_2m: float | None = None
    lemma29_ratio: float | None = None
    pillai: float | None = None
    refined_growth: float | None = None

    def csv_line(self) -> str:
        cells = [str(self.n), str(self.k)]
        for name, typ in _CSV_FIELDS:
            v = getattr(self, name)
            if v is None:
                cells.append("")
            elif typ == "int":
                cells.append(str(v))
            else:
                cells.append(f"{v:.5f}")
        return ",".join(cells)

    def json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {}
        for key, v in asdict(self).items():
            if key in ("A_n", "p_n", "p_2n", "r_k") and v is not None:
                obj[key] = str(v)  # decimal string: these outgrow doubles first
            else:
                obj[key] = v
        obj["rounded"] = {
            name: (None if getattr(self, name) is None else f"{getattr(self, name):.5f}")
            for name, typ in _CSV_FIELDS
            if typ == "float"
        }
        return obj


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of one catalog entry over an index range.

    status is "holds" / "counterexample" for asserted checks and "monitored"
    for trend-only statements; details carries counts, extrema, and the first
    counterexample when there is one.
    """

    conjecture_id: str
    statement: str
    index_range: tuple[int, int]
    status: str
    details: dict[str, Any]

    def json_obj(self) -> dict[str, Any]:
        return {
            "id": self.conjecture_id,
            "statement": self.statement,
            "range": list(self.index_range),
            "status": self.status,
            "details": self.details,
        }


@dataclass(frozen=True)
class MonitorSeries:
    name: str
    points: list[tuple[int, float]]

    def json_obj(self) -> dict[str, Any]:
        return {"name": self.name, "points": [[n, v] for n, v in self.points]}


def render_csv(rows: list[TableRow]) -> str:
    lines = [CSV_HEADER]
    lines.extend(row.csv_line() for row in rows)
    return "\n".join(lines) + "\n"


def _jsonl(objs) -> str:
    return "".join(json.dumps(o, sort_keys=True) + "\n" for o in objs)


def render_rows_jsonl(rows: list[TableRow]) -> str:
    return _jsonl(row.json_obj() for row in rows)


def render_reports_jsonl(reports: list[ConjectureReport]) -> str:
    return _jsonl(rep.json_obj() for rep in reports)


def render_monitors_jsonl(monitors: list[MonitorSeries]) -> str:
    return _jsonl(mon.json_obj() for mon in monitors)


def write_outputs(
    out_dir: Path,
    rows: list[TableRow],
    reports: list[ConjectureReport],
    monitors: list[MonitorSeries],
    meta: dict[str, Any],
) -> dict[str, Path]:
    """Write rows.csv, rows.jsonl, reports.jsonl, monitors.jsonl, meta.json."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "rows_csv": out_dir / "rows.csv",
        "rows_jsonl": out_dir / "rows.jsonl",
        "reports_jsonl": out_dir / "reports.jsonl",
        "monitors_jsonl": out_dir / "monitors.jsonl",
        "meta_json": out_dir / "meta.json",
    }
    paths["rows_csv"].write_text(render_csv(rows))
    paths["rows_jsonl"].write_text(render_rows_jsonl(rows))
    paths["reports_jsonl"].write_text(render_reports_jsonl(reports))
    paths["monitors_jsonl"].write_text(render_monitors_jsonl(monitors))
    paths["meta_json"].write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return paths
