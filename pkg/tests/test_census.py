import numpy as np
import pytest

from classzeta.census import (
    CensusRangeError,
    ReducedForm,
    census,
    class_number_dirichlet,
    class_number_forms,
    form_histogram,
    reduced_forms,
    verify_watkins,
)
from classzeta.numtheory import Discriminant, is_fundamental
from classzeta.watkins import load_watkins
from oracles import reduced_forms_brute


@pytest.mark.parametrize("D, h", [(-3, 1), (-4, 1), (-163, 1), (-427, 2), (-23, 3), (-47, 5), (-907, 3), (-2683, 5)])
def test_class_number_forms_examples(D, h):
    assert class_number_forms(D) == h
    assert class_number_forms(Discriminant(D)) == h


def test_forms_for_minus_23():
    got = {(f.a, f.b, f.c) for f in reduced_forms(-23)}
    assert got == {(1, 1, 6), (2, 1, 3), (2, -1, 3)}


def test_forms_match_exhaustive_search():
    for D in range(-800, 0):
        if is_fundamental(D):
            assert {(f.a, f.b, f.c) for f in reduced_forms(D)} == reduced_forms_brute(D), D


@pytest.mark.parametrize("D, h", [(-3, 1), (-4, 1), (-47, 5), (-427, 2), (-8, 1)])
def test_class_number_dirichlet_examples(D, h):
    assert class_number_dirichlet(D) == h


@pytest.mark.parametrize("bad", [-12, -1, 0, 7])
def test_rejects_non_fundamental(bad):
    with pytest.raises(ValueError):
        class_number_forms(bad)
    with pytest.raises(ValueError):
        class_number_dirichlet(bad)


def test_reduced_form_invariants():
    ReducedForm(2, 1, 3)
    for bad in [(2, -2, 3), (2, -1, 2), (1, 2, 3), (3, 1, 2), (2, 2, 2), (1, 3, 1)]:
        with pytest.raises(ValueError):
            ReducedForm(*bad)


def test_census_small():
    t = census(3)
    assert {h: (r.count, r.max_abs_disc) for h, r in t.rows.items()} == {1: (1, 3)}


@pytest.mark.parametrize("X, h, count", [(200, 1, 9), (1000, 2, 18)])
def test_census_reproduces_table(X, h, count):
    t = census(X)
    assert t.count(h) == count
    assert t.is_complete(h)


def test_census_rejects_small_and_huge():
    with pytest.raises(CensusRangeError):
        census(2)
    with pytest.raises(CensusRangeError, match="supported range"):
        census(10**8)


def test_batch_matches_single():
    t = census(10**4)
    for D in range(-(10**4), -2):
        if is_fundamental(D):
            assert t.h_of(D) == class_number_forms(D), D


def test_oracle_equivalence_small():
    for D in range(-1500, 0):
        if is_fundamental(D):
            assert class_number_forms(D) == class_number_dirichlet(D), D


def test_census_deterministic_across_workers():
    X = 30000
    base = census(X, workers=1)
    for w in (2, 3, 8):
        t = census(X, workers=w)
        assert t.rows == base.rows
        assert np.array_equal(t.class_numbers, base.class_numbers)
    assert np.array_equal(form_histogram(X, 1), form_histogram(X, 5))


def test_census_monotone():
    small, big = census(5000), census(20000)
    for h, r in small.rows.items():
        assert r.count <= big.count(h)


def test_census_total_count():
    X = 20000
    t = census(X)
    assert t.total() == sum(1 for d in range(-X, -2) if is_fundamental(d))
    assert all(r.max_abs_disc <= X for r in t.rows.values())


def test_verify_watkins_verdicts():
    ref = load_watkins()
    res = {h: (e, a, v) for h, e, a, v in verify_watkins(census(200), ref)}
    assert res[1] == (9, 9, "match")
    assert res[2][2] == "inconclusive"
    res = {h: v for h, _, _, v in verify_watkins(census(3), ref)}
    assert res[1] == "inconclusive"
    assert set(res.values()) == {"inconclusive"}


def test_verify_watkins_h23_at_100000():
    res = {h: (e, a, v) for h, e, a, v in verify_watkins(census(100000), load_watkins())}
    assert res[23] == (68, 68, "match")
    assert "mismatch" not in {v for _, _, v in res.values()}


def test_verify_watkins_reports_mismatch():
    from dataclasses import replace

    ref = [replace(r, count=r.count + 1) if r.h == 1 else r for r in load_watkins()]
    res = {h: v for h, _, _, v in verify_watkins(census(200), ref)}
    assert res[1] == "mismatch"


def test_workers_env(monkeypatch):
    from classzeta.census import default_workers

    monkeypatch.setenv("CLASSZETA_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("CLASSZETA_WORKERS", "zero")
    with pytest.raises(ValueError):
        default_workers()
    monkeypatch.delenv("CLASSZETA_WORKERS")
    assert default_workers() == 1
