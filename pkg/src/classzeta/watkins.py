"""Watkins' table of imaginary quadratic class numbers h <= 100.

For each h: the number of negative fundamental discriminants of class
number h and the largest such |D|. Shipped as a plain-text table whose
SHA-256 is pinned below; any drift is a fatal load error.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

TABLE_FILE = "watkins_table4.txt"
TABLE_SHA256 = "45e46e89d409eadc420afc2bd5354c6440e036d749f46bc7834223bbccff1805"


class WatkinsDataError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class WatkinsRow:
    h: int
    count: int
    largest: int


def parse_table(text: str) -> list[WatkinsRow]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise WatkinsDataError(f"line {lineno}: expected 3 columns, got {line!r}")
        try:
            h, count, largest = map(int, parts)
        except ValueError:
            raise WatkinsDataError(f"line {lineno}: non-integer field in {line!r}") from None
        rows.append(WatkinsRow(h, count, largest))
    validate(rows)
    return sorted(rows)


def validate(rows: list[WatkinsRow]) -> None:
    seen: set[int] = set()
    for r in rows:
        if not 1 <= r.h <= 100:
            raise WatkinsDataError(f"row {r}: class number out of range 1..100")
        if r.h in seen:
            raise WatkinsDataError(f"row {r}: duplicate class number {r.h}")
        if r.count < 1 or r.largest < 3:
            raise WatkinsDataError(f"row {r}: count must be >= 1 and largest >= 3")
        seen.add(r.h)
    if len(seen) != 100:
        missing = sorted(set(range(1, 101)) - seen)
        raise WatkinsDataError(f"table must have rows h = 1..100; missing {missing}")
    if WatkinsRow(1, 9, 163) not in rows:
        raise WatkinsDataError("row (1, 9, 163) missing or altered")


@lru_cache(maxsize=1)
def _load() -> tuple[WatkinsRow, ...]:
    raw = resources.files("classzeta").joinpath("data").joinpath(TABLE_FILE).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != TABLE_SHA256:
        raise WatkinsDataError(f"{TABLE_FILE}: content hash {digest} does not match the pinned hash")
    return tuple(parse_table(raw.decode("utf-8")))


def load_watkins() -> list[WatkinsRow]:
    return list(_load())


def witnesses() -> dict[int, int]:
    """h -> largest |D| with class number h."""
    return {r.h: r.largest for r in _load()}
