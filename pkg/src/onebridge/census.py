"""Exhaustive census of 1-bridge braids and their solid-torus fillings."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .braids import Braid, Slope, is_canonical, is_knot, mirror, mirror_slope, reflect
from .classify import filling_slopes

log = logging.getLogger(__name__)

MAX_CENSUS_W = 1000
CACHE_FORMAT_VERSION = 1
CONVENTION = "gamma_after_rho"


@dataclass(frozen=True)
class CensusRecord:
    braid: Braid
    knot: bool
    canonical: bool
    fillings: tuple[Slope, ...] | None  # None for links

    @property
    def admitting(self) -> bool:
        return self.knot and bool(self.fillings)

    def to_dict(self) -> dict:
        return {
            "w": self.braid.w,
            "b": self.braid.b,
            "t": self.braid.t,
            "knot": self.knot,
            "canonical": self.canonical,
            "fillings": None if self.fillings is None else [str(s) for s in self.fillings],
        }

    @classmethod
    def from_dict(cls, d: dict) -> CensusRecord:
        fillings = d["fillings"]
        return cls(
            Braid(d["w"], d["b"], d["t"]),
            d["knot"],
            d["canonical"],
            None if fillings is None else tuple(Slope.parse(s) for s in fillings),
        )


@dataclass
class CensusSummary:
    max_w: int
    triple_count: int = 0
    knot_count: int = 0
    admitting_count: int = 0
    filling_count: int = 0
    canonical_knot_count: int = 0
    canonical_admitting_count: int = 0
    canonical_filling_count: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def census_record(braid: Braid) -> CensusRecord:
    knot = is_knot(braid)
    fillings = tuple(filling_slopes(braid)) if knot else None
    return CensusRecord(braid, knot, is_canonical(braid), fillings)


def _records_for_w(w: int) -> list[CensusRecord]:
    return [census_record(Braid(w, b, t)) for b in range(1, w - 1) for t in range(1, w)]


def summarize(records: list[CensusRecord], max_w: int) -> CensusSummary:
    s = CensusSummary(max_w)
    for rec in records:
        s.triple_count += 1
        if not rec.knot:
            continue
        n = len(rec.fillings)
        s.knot_count += 1
        s.admitting_count += n > 0
        s.filling_count += n
        if rec.canonical:
            s.canonical_knot_count += 1
            s.canonical_admitting_count += n > 0
            s.canonical_filling_count += n
    return s


def _check_bound(max_w: int) -> None:
    if not 3 <= max_w <= MAX_CENSUS_W:
        raise ValueError(f"need 3 <= max_w <= {MAX_CENSUS_W}, got max_w={max_w}")


def run_census(
    max_w: int, jobs: int = 1, cache_path: str | os.PathLike | None = None
) -> tuple[list[CensusRecord], CensusSummary]:
    """Every triple with ``3 <= w <= max_w``, in lexicographic order.

    With ``jobs > 1`` the sweep is split by w across processes; the
    output order does not depend on scheduling.
    """
    _check_bound(max_w)
    if cache_path is not None:
        cached = load_cache(cache_path, max_w)
        if cached is not None:
            return cached, summarize(cached, max_w)
    ws = range(3, max_w + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_records_for_w, ws))
    else:
        chunks = [_records_for_w(w) for w in ws]
    records = [rec for chunk in chunks for rec in chunk]
    if cache_path is not None:
        write_cache(cache_path, records, max_w)
    return records, summarize(records, max_w)


def cache_header(max_w: int) -> dict:
    return {"format_version": CACHE_FORMAT_VERSION, "max_w": max_w, "convention": CONVENTION}


def write_cache(path: str | os.PathLike, records: list[CensusRecord], max_w: int) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(json.dumps(cache_header(max_w), sort_keys=True) + "\n")
            for rec in records:
                fh.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def load_cache(path: str | os.PathLike, max_w: int) -> list[CensusRecord] | None:
    """Records from a JSONL cache, or None when absent or written for other settings."""
    path = Path(path)
    if not path.exists():
        return None
    with path.open() as fh:
        try:
            header = json.loads(fh.readline())
        except json.JSONDecodeError:
            header = None
        if header != cache_header(max_w):
            log.warning("census cache %s has header %s; recomputing", path, header)
            return None
        return [CensusRecord.from_dict(json.loads(line)) for line in fh if line.strip()]


CSV_COLUMNS = ("w", "b", "t", "is_knot", "is_canonical", "fillings")


def records_to_csv(records: list[CensusRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        fillings = ";".join(str(s) for s in rec.fillings or ())
        writer.writerow(
            [rec.braid.w, rec.braid.b, rec.braid.t, int(rec.knot), int(rec.canonical), fillings]
        )
    return buf.getvalue()


@dataclass(frozen=True)
class Table1Row:
    braid: Braid
    slopes: tuple[Slope, ...]

    def __str__(self) -> str:
        w, b, t = self.braid.astuple()
        body = ", ".join(str(s) for s in self.slopes) if self.slopes else "-"
        return f"({w}, {b}, {t}; {body})"


def table1(max_w: int = 10) -> list[Table1Row]:
    """Canonical knots with ``w <= max_w`` and their filling slopes."""
    if max_w < 4:
        raise ValueError(f"need max_w >= 4, got {max_w}")
    rows = []
    for w in range(4, max_w + 1):
        for b in range(1, w - 1):
            for t in range(1, w):
                braid = Braid(w, b, t)
                if is_canonical(braid) and is_knot(braid):
                    rows.append(Table1Row(braid, tuple(filling_slopes(braid))))
    return rows


def golden_table1() -> list[str]:
    text = resources.files("onebridge").joinpath("data/table1.txt").read_text()
    return text.splitlines()


@dataclass
class MirrorReport:
    """Outcome of pairing knots with their orientation-reversed images.

    ``mismatches`` is judged with :func:`reflect`. The printed formula
    ``(w, w-b-1, t-b-1)`` is also run, and its disagreements are kept in
    ``literal_mismatches`` for reference only.
    """

    max_w: int
    pairs_checked: int = 0
    out_of_range: list[dict] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    literal_pairs_checked: int = 0
    literal_out_of_range: int = 0
    literal_mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return dict(self.__dict__, ok=self.ok)


def _compare_mirror(braid: Braid, image: Braid) -> dict | None:
    w, b, t = braid.astuple()
    if not is_knot(image):
        return {"w": w, "b": b, "t": t, "mirror": list(image.astuple()), "reason": "mirror closure is a link"}
    expected = sorted(mirror_slope(s) for s in filling_slopes(braid))
    got = filling_slopes(image)
    if expected == got:
        return None
    return {
        "w": w,
        "b": b,
        "t": t,
        "mirror": list(image.astuple()),
        "expected": [str(s) for s in expected],
        "got": [str(s) for s in got],
    }


def verify_mirror_pairs(max_w: int) -> MirrorReport:
    """Check that mirroring a knot mirrors its filling slopes, ``p/q -> p/(p-q)``."""
    if max_w < 4:
        raise ValueError(f"need max_w >= 4, got {max_w}")
    report = MirrorReport(max_w)
    for w in range(3, max_w + 1):
        for b in range(1, w - 1):
            for t in range(1, w):
                braid = Braid(w, b, t)
                if not is_knot(braid):
                    continue
                image = reflect(braid)
                if isinstance(image, Braid):
                    report.pairs_checked += 1
                    bad = _compare_mirror(braid, image)
                    if bad:
                        report.mismatches.append(bad)
                else:
                    report.out_of_range.append({"w": w, "b": b, "t": t, "reason": image.reason})
                literal = mirror(braid)
                if isinstance(literal, Braid):
                    report.literal_pairs_checked += 1
                    bad = _compare_mirror(braid, literal)
                    if bad:
                        report.literal_mismatches.append(bad)
                else:
                    report.literal_out_of_range += 1
    return report
