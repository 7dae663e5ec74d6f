import cmath

import pytest

from classzeta.census import census
from classzeta.paperlab import (
    LOCAL_FACTORS,
    LocalFactor,
    char_poly_product,
    char_poly_product_details,
    compare,
    cyclotomic_factorization,
    pole_order_at_one,
    predicted_counts,
    predicted_expansion,
    predicted_zeta,
    prime_bound_report,
    reciprocal_support,
    roots_in_unit_set,
    selftest,
    summary_flags,
    trace_N,
)
from classzeta.poly import poly_prod
from classzeta.series import (
    artin_mazur_from_N,
    dold_residues,
    euler_from_K,
    extract_N,
    lambert_from_K,
)
from classzeta.watkins import load_watkins
from oracles import sympy_coeffs

UNIT_SET = [1, -1, 1j, -1j] + [complex(x, y * 3**0.5) / 2 for x in (1, -1) for y in (1, -1)]


def test_predicted_zeta_shape():
    z = predicted_zeta()
    assert len(z.numerator) - 1 == 8 and len(z.denominator) - 1 == 8
    assert z.numerator[2] == 1
    assert z.denominator[1] == -8
    assert z.numerator == (1, 0, 1, 0, 0, 0, -1, 0, -1)


def test_local_factors_roots_lie_in_unit_set():
    # float cross-check of the exact cyclotomic test
    for f in LOCAL_FACTORS:
        c0, c1, c2 = f.char_poly
        disc = cmath.sqrt(c1 * c1 - 4 * c0 * c2)
        for r in ((-c1 + disc) / (2 * c2), (-c1 - disc) / (2 * c2)):
            assert min(abs(r - u) for u in UNIT_SET) < 1e-12
        assert roots_in_unit_set(f.char_poly)


def test_local_factor_rejects_foreign_polynomials():
    with pytest.raises(ValueError):
        LocalFactor("X", (1, -3, 1))
    assert not roots_in_unit_set((1, -3, 1))
    assert not roots_in_unit_set((2, 0, 1))


def test_char_poly_product():
    rep, ok = char_poly_product()
    assert ok
    d = char_poly_product_details()
    assert d.numerator_degree == 8
    assert d.common_factor == (1, -1)
    assert list(d.product.numerator) == poly_prod((1, 0, 1), (1, 0, 0, 0, 0, 0, -1))
    assert rep.same_function(predicted_zeta())


def test_trace_N_examples():
    assert trace_N(2) == [8, 10]
    assert trace_N(6)[-1] == 4
    N = trace_N(48)
    assert all(N[m - 1] == 8 for m in range(1, 49, 12))


def test_trace_N_matches_complex_roots():
    import numpy as np

    for m in range(1, 30):
        total = 0.0
        for f in LOCAL_FACTORS:
            roots = np.roots(list(reversed(f.char_poly)))
            total += 2 - sum(r**m for r in roots).real
        assert round(total) == trace_N(m)[-1]


def test_trace_N_periodic():
    N = trace_N(96)
    assert all(N[m] == N[m + 12] for m in range(84))


def test_predicted_counts():
    assert predicted_counts(1) == [8]
    assert predicted_counts(6) == [8, 2, 0, -4, 0, -6]
    assert predicted_counts(12)[6:] == [0] * 6
    assert all(r == 0 for _, r in dold_residues(predicted_counts(48)))


def test_identity_a_chain():
    T = 50
    closed = predicted_expansion(T)
    K = predicted_counts(T)
    assert closed == lambert_from_K(K, T) == euler_from_K(K, T) == artin_mazur_from_N(trace_N(T), T)
    assert list(closed.coeffs[:15]) == sympy_coeffs("(1+s**2)*(1-s**6)/(1-s)**8", 14)


def test_identity_c():
    assert trace_N(48) == extract_N(predicted_expansion(48))


def test_reciprocal_support():
    support, ok = reciprocal_support(6)
    oracle = {m for m, c in enumerate(sympy_coeffs("1/((1+s**2)*(1-s**6))", 6)) if c}
    assert support == oracle == {0, 2, 4}
    assert ok
    assert reciprocal_support(1) == ({0}, True)
    support, ok = reciprocal_support(100)
    assert ok and all(e % 2 == 0 for e in support)


def test_pole_and_zeros():
    assert pole_order_at_one(predicted_zeta()) == 7
    flags = summary_flags()
    assert flags["pole_order"]["claimed"] == 8
    assert flags["pole_order"]["denominator_exponent"] == 8
    assert flags["pole_order"]["verdict"] == "violated"
    assert flags["zero_set"]["verdict"] == "holds"
    assert len(flags["zero_set"]["zeros"]) == 7
    assert flags["negative_predicted"] == [4, 6]
    assert flags["literal_lambert_matches_euler"] is False
    mult, unit = cyclotomic_factorization(predicted_zeta().numerator)
    assert unit and mult == {1: 1, 2: 1, 3: 1, 4: 1, 6: 1}


def test_compare_with_watkins():
    rep = compare(load_watkins(), 100)
    rows = {r.h: r for r in rep.rows}
    assert (rows[1].predicted, rows[1].empirical, rows[1].delta) == (8, 9, 1)
    assert rows[1].status == "consistent-with-Remark-1.2"
    assert (rows[2].predicted, rows[2].empirical) == (2, 18)
    assert rows[3].dold_emp == 1
    assert all(r.delta == r.empirical - r.predicted for r in rep.rows)
    assert all(r.at_least_h for r in rep.rows)
    assert rep.summary["prime_bound_violations"] == [67, 73, 83, 97]
    assert rep.summary["h1"]["status"] == "consistent-with-Remark-1.2"


def test_compare_with_census_marks_incomplete_rows():
    t = census(1000)
    rep = compare(t, 5)
    by_h = {r.h: r for r in rep.rows}
    assert by_h[1].empirical == 9 and by_h[2].empirical == 18 and by_h[3].empirical == 16
    assert by_h[4].empirical is None and by_h[4].status == "inconclusive"
    assert rep.summary["inconclusive"] == [4, 5]


@pytest.mark.parametrize("p, count, verdict", [(41, 109, "holds"), (67, 120, "violated"), (2, 18, "holds")])
def test_prime_bound_report_examples(p, count, verdict):
    rows = {r.p: r for r in prime_bound_report(load_watkins())}
    assert (rows[p].count, rows[p].bound, rows[p].verdict) == (count, 2 * p, verdict)


def test_selftest_passes():
    assert all(r.ok for r in selftest())
