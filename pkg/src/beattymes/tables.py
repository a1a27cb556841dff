"""Reference tables of MEX/MES runs.

``FIXTURES`` holds the published rows, typed in by hand; ``regenerate``
recomputes the same tables from the algorithms.  Rows are tuples of ints,
with ``None`` for cells the published table leaves blank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownTable
from .exact import make
from .formats import to_csv, to_json, to_plain
from .mesalg import IN_A, ExclusionState, mes_from_defining, run_mes, run_mex, self_defining_rule, GapSequence
from .sequences import BeattySeq, beatty_prefix


@dataclass(frozen=True)
class Table:
    name: str
    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    caption: tuple[int, ...] = ()


_MES_COLS = ("n", "a", "b", "c")

FIXTURES: dict[str, Table] = {
    "t1-mex-golden": Table(
        "t1-mex-golden",
        "MEX algorithm with h_n = n",
        ("n", "a", "b"),
        ((1, 1, 2), (2, 3, 5), (3, 4, 7), (4, 6, 10), (5, 8, 13)),
    ),
    "t2-mes-golden": Table(
        "t2-mes-golden",
        "MES algorithm with the golden skipping sequence",
        ("n", "a", "b", "c"),
        (
            (1, 1, 2, 0),
            (2, 3, 5, 1),
            (3, 4, 7, 1),
            (4, 6, 10, 2),
            (5, 8, 13, 3),
            (6, 9, 15, 3),
            (7, 11, 18, 4),
            (8, 12, 20, 4),
        ),
        caption=(0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10),
    ),
    "t3-partial": Table(
        "t3-partial",
        "Golden skipping sequence known after 1 step",
        _MES_COLS,
        ((1, 1, 2, 0), (2, None, None, 1), (3, None, None, 1), (4, None, None, 2)),
    ),
    "t4-partial": Table(
        "t4-partial",
        "Golden skipping sequence known after 3 steps",
        _MES_COLS,
        (
            (1, 1, 2, 0),
            (2, 3, 5, 1),
            (3, 4, 7, 1),
            (4, None, None, 2),
            (5, None, None, 3),
            (6, None, None, 3),
            (7, None, None, 4),
            (8, None, None, 4),
            (9, None, None, 5),
        ),
    ),
    "t5-full-golden": Table(
        "t5-full-golden",
        "Golden MES run, 12 steps",
        _MES_COLS,
        (
            (1, 1, 2, 0),
            (2, 3, 5, 1),
            (3, 4, 7, 1),
            (4, 6, 10, 2),
            (5, 8, 13, 3),
            (6, 9, 15, 3),
            (7, 11, 18, 4),
            (8, 12, 20, 4),
            (9, 14, 23, 5),
            (10, 16, 26, 6),
            (11, 17, 28, 6),
            (12, 19, 31, 7),
        ),
    ),
    "t-sqrt13": Table(
        "t-sqrt13",
        "MES with k = 3 and defining slope sqrt(13)/2",
        ("n", "a", "b", "c", "r", "d"),
        (
            (1, 1, 2, 0, 0, 1),
            (2, 3, 4, 0, 0, 3),
            (3, 5, 7, 1, 0, 5),
            (4, 6, 9, 1, 1, 7),
            (5, 8, 11, 1, 1, 9),
            (6, 10, 14, 2, 1, 10),
            (7, 12, 16, 2, 1, 12),
            (8, 13, 19, 3, 2, 14),
            (9, 15, 21, 3, 2, 16),
            (10, 17, 23, 3, 2, 18),
            (11, 18, 26, 4, 3, 19),
            (12, 20, 28, 4, 3, 21),
        ),
    ),
}

TABLE_NAMES = tuple(FIXTURES)


def _golden_partial(steps: int, name: str, title: str) -> Table:
    """Rows of a golden run stopped after ``steps`` steps, followed by the
    skip values already determined by the assignments made so far."""
    captured: list[ExclusionState] = []
    rule = self_defining_rule(2)

    def spy(state):
        captured.append(state)
        return rule(state)

    run = run_mes(spy, steps)
    state = captured[0]
    known = [0]
    for m in range(1, state.frontier):
        known.extend([m] * (2 if state.owner(m) == IN_A else 1))
    rows = []
    for n, c in enumerate(known, 1):
        if n <= steps:
            rows.append((n, run.A[n - 1], run.B[n - 1], c))
        else:
            rows.append((n, None, None, c))
    return Table(name, title, _MES_COLS, tuple(rows))


def regenerate(name: str) -> Table:
    """Recompute table ``name`` from the algorithms."""
    fixture = get_fixture(name)
    if name == "t1-mex-golden":
        run = run_mex(GapSequence.linear(1), 5)
        rows = tuple((n, a, b) for n, a, b, _, _ in run.rows())
        return Table(name, fixture.title, fixture.columns, rows)
    if name == "t2-mes-golden":
        run = run_mes(self_defining_rule(2), 8)
        rows = tuple((n, a, b, c) for n, a, b, c, _ in run.rows())
        caption = tuple(run_mes(self_defining_rule(2), 17).C)
        return Table(name, fixture.title, fixture.columns, rows, caption)
    if name == "t3-partial":
        return _golden_partial(1, name, fixture.title)
    if name == "t4-partial":
        return _golden_partial(3, name, fixture.title)
    if name == "t5-full-golden":
        run = run_mes(self_defining_rule(2), 12)
        rows = tuple((n, a, b, c) for n, a, b, c, _ in run.rows())
        return Table(name, fixture.title, fixture.columns, rows)
    # t-sqrt13
    delta = make(0, 1, 13, 2)
    run = mes_from_defining(BeattySeq(delta), 3, 12)
    D = beatty_prefix(delta, 12)
    rows = tuple((n, a, b, c, r, D[n - 1]) for n, a, b, c, r in run.rows())
    return Table(name, fixture.title, fixture.columns, rows)


def get_fixture(name: str) -> Table:
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownTable(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}") from None


def _set(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _plain_lines(table: Table) -> str:
    if table.name == "t1-mex-golden":
        header = ("mex(A_{n-1} U B_{n-1})", "b_n=a_n+n", "A_n={a_k:k<=n}", "B_n={b_k:k<=n}")
        body, A, B = [], [], []
        for n, a, b in table.rows:
            A.append(a)
            B.append(b)
            body.append((f"a_{n}={a}", f"b_{n}={a}+{b - a}={b}", f"A_{n}={_set(A)}", f"B_{n}={_set(B)}"))
        return to_plain(header, body)
    if table.name == "t2-mes-golden":
        header = ("a_n", "b_n", "A_n={a_k:k<=n}", "B_n={b_k:k<=n}")
        body, A, B = [], [], []
        for n, a, b, c in table.rows:
            A.append(a)
            B.append(b)
            body.append((f"a_{n}={a}", f"b_{n}=mex_{c}={b}", f"A_{n}={_set(A)}", f"B_{n}={_set(B)}"))
        preamble = (
            f"C={_set(table.caption)[:-1]},...}}\n"
            "a_n=mex(A_{n-1} U B_{n-1})\n"
            "b_n=mex_{c_n}(A_n U B_{n-1})\n"
        )
        return preamble + to_plain(header, body)
    header = ("n",) + tuple(col.upper() for col in table.columns[1:])
    body = [(f"{row[0]})",) + tuple(row[1:]) for row in table.rows]
    return to_plain(header, body)


def render(table: Table, fmt: str = "plain") -> str:
    if fmt == "csv":
        return to_csv(table.columns, table.rows)
    if fmt == "json":
        payload = {
            "table": table.name,
            "title": table.title,
            "rows": [dict(zip(table.columns, row)) for row in table.rows],
        }
        if table.caption:
            payload["c_sequence"] = list(table.caption)
        return to_json(payload)
    return _plain_lines(table)


def check_table(name: str, fmt: str = "plain") -> tuple[bool, str]:
    """Render the regenerated table and compare it byte for byte with the
    rendering of the fixture.  Returns ``(match, regenerated_text)``."""
    expected = render(get_fixture(name), fmt)
    produced = render(regenerate(name), fmt)
    return produced == expected, produced
