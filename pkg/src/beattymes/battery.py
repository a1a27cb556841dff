"""Slope batteries: parsing the key=value config and running every
identity check over every slope."""

from __future__ import annotations

import configparser
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .decomposition import IDENTITIES, VerificationReport
from .errors import ConfigParse
from .exact import QuadExpr, parse_slope
from .sequences import ComplementaryPair

# identities that read both slopes of a pair (and so honour a beta override)
PAIR_IDENTITIES = frozenset(
    {"decomposition", "slope-match", "identity-12a", "identity-12b", "r-differences", "c-differences"}
)


@dataclass(frozen=True)
class BatteryEntry:
    name: str
    slope: QuadExpr
    n: int
    beta: QuadExpr | None = None


def parse_battery(text: str) -> list[BatteryEntry]:
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"))
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigParse(f"battery config: {exc}") from None
    entries = []
    for name in parser.sections():
        section = parser[name]
        unknown = set(section) - {"slope", "n", "beta"}
        if unknown:
            raise ConfigParse(f"[{name}]: unknown keys {sorted(unknown)}")
        if "slope" not in section:
            raise ConfigParse(f"[{name}]: missing 'slope'")
        try:
            n = int(section.get("n", "10000"))
        except ValueError:
            raise ConfigParse(f"[{name}]: n must be an integer") from None
        if n < 2:
            raise ConfigParse(f"[{name}]: n must be at least 2")
        slope = parse_slope(section["slope"], require_irrational=True)
        beta = parse_slope(section["beta"], require_irrational=True) if "beta" in section else None
        entries.append(BatteryEntry(name, slope, n, beta))
    if not entries:
        raise ConfigParse("battery config defines no slopes")
    return entries


def default_battery_text() -> str:
    return resources.files("beattymes").joinpath("data/default_battery.ini").read_text()


def load_battery(path: str | Path | None = None) -> list[BatteryEntry]:
    if path is None:
        return parse_battery(default_battery_text())
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigParse(f"cannot read battery {path}: {exc}") from None
    return parse_battery(text)


def _run_job(job: tuple[str, str, QuadExpr, QuadExpr | None, int]) -> VerificationReport:
    entry_name, identity, slope, beta, n = job
    arg = slope
    if beta is not None and identity in PAIR_IDENTITIES:
        arg = ComplementaryPair(slope, beta, strict=False)
    report = IDENTITIES[identity](arg, n)
    report.entry = entry_name
    return report


def run_battery(
    entries: list[BatteryEntry], n: int | None = None, workers: int = 1, identities=None
) -> list[VerificationReport]:
    """One report per (entry, identity), in entry order then identity order,
    whatever the worker count."""
    names = list(identities or IDENTITIES)
    jobs = [(e.name, ident, e.slope, e.beta, n or e.n) for e in entries for ident in names]
    if workers <= 1:
        return [_run_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_job, jobs))
