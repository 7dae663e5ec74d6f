"""CSV / JSON emitters and their parsers.

CSV output always carries a header and uses bare line feeds.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict
from typing import Iterable, Sequence

from . import __version__
from .census import CensusRow, CensusTable
from .paperlab import ComparisonReport, ComparisonRow, PrimeRow
from .series import TruncatedSeries, series_from_rows, series_to_rows

CENSUS_HEADER = ["h", "count", "max_abs_disc", "complete"]
COMPARISON_HEADER = ["h", "predicted", "empirical", "delta", "dold_pred", "dold_emp"]
PRIMES_HEADER = ["p", "count", "bound", "verdict"]
SERIES_HEADER = ["m", "numerator", "denominator"]
SEQUENCE_HEADER = ["m", "value"]


def _write(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(["" if v is None else v for v in r])
    return buf.getvalue()


def _read(text: str, header: Sequence[str]) -> list[list[str]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != list(header):
        raise ValueError(f"expected CSV header {','.join(header)}")
    return rows[1:]


def _opt_int(s: str) -> int | None:
    return None if s == "" else int(s)


def _bool(s: str) -> bool:
    if s not in ("true", "false"):
        raise ValueError(f"expected true/false, got {s!r}")
    return s == "true"


def _meta(**kw) -> dict:
    return {**kw, "version": __version__}


# census ---------------------------------------------------------------------

def census_records(t: CensusTable) -> list[dict]:
    return [
        {"h": r.h, "count": r.count, "max_abs_disc": r.max_abs_disc, "complete": t.is_complete(r.h)}
        for r in t.sorted_rows()
    ]


def census_to_csv(t: CensusTable) -> str:
    return _write(
        CENSUS_HEADER,
        ([d["h"], d["count"], d["max_abs_disc"], "true" if d["complete"] else "false"] for d in census_records(t)),
    )


def census_from_csv(text: str) -> list[dict]:
    return [
        {"h": int(h), "count": int(c), "max_abs_disc": int(m), "complete": _bool(done)}
        for h, c, m, done in _read(text, CENSUS_HEADER)
    ]


def census_to_json(t: CensusTable) -> str:
    doc = {"meta": _meta(bound=t.bound), "rows": census_records(t)}
    return json.dumps(doc, indent=2) + "\n"


def census_from_json(text: str) -> CensusTable:
    doc = json.loads(text)
    rows = {d["h"]: CensusRow(d["h"], d["count"], d["max_abs_disc"]) for d in doc["rows"]}
    complete = frozenset(d["h"] for d in doc["rows"] if d["complete"])
    return CensusTable(doc["meta"]["bound"], rows, complete)


# comparison -----------------------------------------------------------------

def comparison_to_csv(rep: ComparisonReport) -> str:
    return _write(
        COMPARISON_HEADER,
        ([r.h, r.predicted, r.empirical, r.delta, r.dold_pred, r.dold_emp] for r in rep.rows),
    )


def comparison_from_csv(text: str) -> list[tuple]:
    return [
        (int(h), int(p), _opt_int(e), _opt_int(d), int(dp), _opt_int(de))
        for h, p, e, d, dp, de in _read(text, COMPARISON_HEADER)
    ]


def primes_to_csv(primes: Sequence[PrimeRow]) -> str:
    return _write(PRIMES_HEADER, ([r.p, r.count, r.bound, r.verdict] for r in primes))


def primes_from_csv(text: str) -> list[PrimeRow]:
    return [PrimeRow(int(p), int(c), int(b), v) for p, c, b, v in _read(text, PRIMES_HEADER)]


def report_to_csv(rep: ComparisonReport) -> str:
    """Comparison table, a blank line, then the prime table."""
    return comparison_to_csv(rep) + "\n" + primes_to_csv(rep.primes)


def report_from_csv(text: str) -> tuple[list[tuple], list[PrimeRow]]:
    head, _, tail = text.partition("\n\n")
    return comparison_from_csv(head + "\n"), primes_from_csv(tail)


def report_to_json(rep: ComparisonReport) -> str:
    doc = {
        "meta": _meta(**rep.meta),
        "rows": [asdict(r) for r in rep.rows],
        "primes": [asdict(r) for r in rep.primes],
        "summary": rep.summary,
    }
    return json.dumps(doc, indent=2) + "\n"


def report_from_json(text: str) -> ComparisonReport:
    doc = json.loads(text)
    meta = dict(doc["meta"])
    meta.pop("version", None)
    return ComparisonReport(
        rows=[ComparisonRow(**r) for r in doc["rows"]],
        primes=[PrimeRow(**r) for r in doc["primes"]],
        summary=doc["summary"],
        meta=meta,
    )


# series ---------------------------------------------------------------------

def series_to_csv(f: TruncatedSeries) -> str:
    return _write(SERIES_HEADER, series_to_rows(f))


def series_from_csv(text: str) -> TruncatedSeries:
    return series_from_rows(tuple(map(int, r)) for r in _read(text, SERIES_HEADER))


def sequence_to_csv(values: Sequence[int], start: int = 1) -> str:
    return _write(SEQUENCE_HEADER, ((m, v) for m, v in enumerate(values, start)))


def sequence_from_csv(text: str) -> list[int]:
    rows = [(int(m), int(v)) for m, v in _read(text, SEQUENCE_HEADER)]
    return [v for _, v in sorted(rows)]
