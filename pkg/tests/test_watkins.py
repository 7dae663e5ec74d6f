import pytest

from classzeta import watkins
from classzeta.watkins import WatkinsDataError, WatkinsRow, load_watkins, parse_table


def test_rows():
    rows = load_watkins()
    assert len(rows) == 100
    assert [r.h for r in rows] == list(range(1, 101))
    assert rows[0] == WatkinsRow(1, 9, 163)
    assert rows[99] == WatkinsRow(100, 1736, 1856563)
    assert rows[95] == WatkinsRow(96, 3283, 1684027)
    assert max(r.largest for r in rows) == 2383747


def _text(rows):
    return "\n".join(f"{r.h} {r.count} {r.largest}" for r in rows)


def test_corrupt_rows_are_named():
    rows = load_watkins()
    bad = rows[:]
    bad[40] = WatkinsRow(41, 0, 296587)
    with pytest.raises(WatkinsDataError, match="41"):
        parse_table(_text(bad))
    with pytest.raises(WatkinsDataError, match="missing"):
        parse_table(_text(rows[:-1]))
    with pytest.raises(WatkinsDataError, match="line 3"):
        parse_table(_text(rows[:2]) + "\n3 x 907\n")
    bad = rows[:]
    bad[0] = WatkinsRow(1, 8, 163)
    with pytest.raises(WatkinsDataError, match=r"\(1, 9, 163\)"):
        parse_table(_text(bad))


def test_hash_is_checked(monkeypatch):
    watkins._load.cache_clear()
    monkeypatch.setattr(watkins, "TABLE_SHA256", "0" * 64)
    with pytest.raises(WatkinsDataError, match="hash"):
        load_watkins()
    monkeypatch.undo()
    watkins._load.cache_clear()
    assert len(load_watkins()) == 100
