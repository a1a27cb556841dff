"""CSV / JSON / plain renderers shared by the CLI."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

from .exact import QuadExpr
from .mesalg import MESRun

FORMATS = ("csv", "json", "plain")


def _cell(value: Any) -> str:
    return "" if value is None else str(value)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def to_plain(header: Sequence[str], rows: Iterable[Sequence[Any]], gap: int = 3) -> str:
    """Fixed-width, left-aligned columns; blank cells stay blank."""
    body = [[_cell(v) for v in row] for row in rows]
    head = list(header)
    widths = [max([len(head[i])] + [len(r[i]) for r in body]) for i in range(len(head))]
    pad = " " * gap

    def line(cells):
        return pad.join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    return "\n".join([line(head)] + [line(r) for r in body]) + "\n"


def to_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def sequence_dump(slope: QuadExpr, terms: Sequence[int], fmt: str) -> str:
    if fmt == "json":
        return to_json({"slope": slope.to_dict(), "terms": list(terms)})
    rows = [(n, t) for n, t in enumerate(terms, 1)]
    if fmt == "csv":
        return to_csv(("n", "term"), rows)
    return to_plain(("n", "term"), rows)


RUN_HEADER = ("n", "a", "b", "c", "r")


def run_dump(run: MESRun, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        payload = {"n": list(range(1, run.n + 1)), **run.columns()}
        if extra:
            payload.update(extra)
        return to_json(payload)
    if fmt == "csv":
        return to_csv(RUN_HEADER, run.rows())
    return to_plain(RUN_HEADER, run.rows())
