from math import comb

import pytest
import sympy

from ferrers_tilings.anchorwords import (
    cylindric_poly_bruteforce,
    faultline_poly_bruteforce,
    tiling_poly_bruteforce,
)
from ferrers_tilings.corpus import load_corpus
from ferrers_tilings.errors import NotRigid
from ferrers_tilings.exactpoly import BiPoly, IntPoly
from ferrers_tilings.series import (
    RationalSeries,
    VARIANTS,
    cylindric_series,
    dense_faultline_series,
    dense_series,
    faultline_series,
    rigid_coefficient_formula,
    row_refined_series,
    series_coeffs,
    tiling_series,
    variant_offset,
    variant_series,
)
from ferrers_tilings.shapes import make_params

T = IntPoly((0, 1))


def at_one(rs, n):
    return [c(1) for c in series_coeffs(rs, n)]


def test_tail_must_vanish_at_zero():
    with pytest.raises(ValueError):
        RationalSeries(BiPoly([1]), BiPoly([1, 1]))


def test_n_zero_is_numerator_constant():
    rs = cylindric_series(make_params((2, 1), 2))
    assert series_coeffs(rs, 0) == [IntPoly((1,))]


def test_l_triomino_counts_and_recursion():
    a = at_one(tiling_series(make_params((2, 1), 2)), 30)
    assert a[:8] == [1, 1, 3, 6, 13, 28, 60, 129]
    for n in range(3, 31):
        assert a[n] == a[n - 1] + 2 * a[n - 2] + a[n - 3]


def test_three_one_one_counts():
    a = at_one(tiling_series(make_params((3, 1, 1), 3)), 12)
    assert a == [1, 1, 1, 4, 10, 20, 41, 90, 199, 431, 928, 2009, 4361]


def test_two_column_recursion():
    for k in range(1, 5):
        for d in range(1, k + 1):
            p = series_coeffs(tiling_series(make_params((k, k), d)), 20)
            for n in range(2, 21):
                assert p[n] == p[n - 1] + T * d * p[n - 2]


def test_umbral_recursion_for_tall_l():
    for d in range(1, 6):
        h = max(d, 1)
        mu = (h, 1) if h > 1 else (1, 1)
        p = series_coeffs(tiling_series(make_params(mu, d)), 21)
        for n in range(0, 21):
            rhs = IntPoly()
            for k in range(0, d + 1):
                if n - k >= 0:
                    rhs = rhs + p[n - k] * T ** k * comb(d, k)
            assert p[n + 1] == rhs


def test_tall_l_generating_function():
    x = sympy.Symbol("x")
    for d in range(1, 6):
        mu = (d, 1) if d > 1 else (1, 1)
        expected = sympy.series(1 / (1 - x * (x + 1) ** d), x, 0, 21).removeO()
        got = at_one(tiling_series(make_params(mu, d)), 20)
        assert got == [expected.coeff(x, n) for n in range(21)]


def test_faultline_examples():
    r = series_coeffs(faultline_series(make_params((3, 1, 1), 2)), 3)
    assert r[3] == IntPoly((2, 0, 1))
    for k in range(1, 4):
        for d in range(1, k + 1):
            r = series_coeffs(faultline_series(make_params((k, k), d)), 20)
            for n in range(3, 21):
                assert r[n] == r[n - 1] * T + r[n - 2] * T * d


def test_faultline_matches_bruteforce():
    for params in load_corpus()[:20]:
        r = series_coeffs(faultline_series(params), 7)
        for n in range(1, 8):
            assert r[n] == faultline_poly_bruteforce(params, n)


def test_dense_l_triomino():
    q = series_coeffs(dense_faultline_series(make_params((2, 1), 2)), 30)
    assert q[6] == IntPoly((0, 0, 1, 8))
    for n in range(3, 31):
        assert q[n] == q[n - 2] * T * 2 + q[n - 3] * T
    a = [c(1) for c in q]
    for n in range(3, 31):
        assert a[n] == 2 * a[n - 2] + a[n - 3]


def test_dense_series_has_no_empty_columns():
    # D = 1 / (1 + x - B): words with no column free of tiles
    params = make_params((2, 1), 2)
    d = series_coeffs(dense_series(params), 8)
    h = series_coeffs(dense_faultline_series(params), 8)
    assert [c(1) for c in d] == [c(1) for c in h]


def test_cylindric_tables():
    assert at_one(cylindric_series(make_params((1, 1), 1)), 8)[1:] == [1, 3, 4, 7, 11, 18, 29, 47]
    assert at_one(cylindric_series(make_params((2, 1), 2)), 8)[1:] == [1, 5, 10, 21, 46, 98, 211, 453]


def test_cylindric_matches_bruteforce():
    for params in load_corpus()[:25]:
        c = series_coeffs(cylindric_series(params), 8)
        for n in range(1, 9):
            assert c[n] == cylindric_poly_bruteforce(params, n)


def test_cylindric_tall_l_closed_form():
    x, t = sympy.symbols("x t")
    for d in range(1, 5):
        mu = (d, 1) if d > 1 else (1, 1)
        f = 1 + x * (d * t * x * (1 + t * x) ** (d - 1) + (1 + t * x) ** d) / (1 - x * (1 + x * t) ** d)
        expansion = sympy.series(f, x, 0, 13).removeO()
        got = series_coeffs(cylindric_series(make_params(mu, d)), 12)
        for n in range(13):
            coeff = sympy.Poly(sympy.expand(expansion.coeff(x, n)), t)
            assert list(reversed(coeff.all_coeffs())) == list(got[n].coeffs) or (
                not got[n] and coeff.is_zero)


def test_series_matches_bruteforce_on_corpus():
    for params in load_corpus():
        p = series_coeffs(tiling_series(params), 7)
        for n in range(8):
            assert p[n] == tiling_poly_bruteforce(params, n)


def test_row_refined():
    for k in range(1, 5):
        for d in range(1, k + 1):
            s = series_coeffs(row_refined_series(make_params((k, k), d), 1), 20)
            for n in range(21):
                expected = IntPoly()
                for j in range(n // 2 + 1):
                    expected = expected + IntPoly((d - 1, 1)) ** j * comb(n - j, j)
                assert s[n] == expected
    a = at_one(row_refined_series(make_params((3, 1), 2), 1), 5)
    assert a == [1, 1, 3, 6, 13, 28]
    for params in load_corpus()[:15]:
        for row in (1, params.d):
            assert at_one(row_refined_series(params, row), 12) == at_one(tiling_series(params), 12)


def test_rigid_coefficients():
    params = make_params((5, 5, 1), 5)
    assert rigid_coefficient_formula(params, 3) == IntPoly((1, 5))
    assert rigid_coefficient_formula(params, 0) == IntPoly((1,))
    assert rigid_coefficient_formula(params, 8) == series_coeffs(tiling_series(params), 8)[8]
    with pytest.raises(NotRigid):
        rigid_coefficient_formula(make_params((3, 1, 1), 3), 4)


def test_variant_registry():
    params = make_params((3, 1, 1), 3)
    for name in VARIANTS:
        assert isinstance(variant_series(params, name), RationalSeries)
    assert variant_offset("cylindric") == 1 and variant_offset("tilings") == 0
    with pytest.raises(ValueError):
        variant_series(params, "bogus")
