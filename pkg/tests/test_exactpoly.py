from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ferrers_tilings.errors import BothZero, DegreeTooHigh, InexactDivision, ZeroPolynomial
from ferrers_tilings.exactpoly import (
    BiPoly,
    IntPoly,
    count_distinct_real_roots,
    count_real_roots_in,
    exact_div,
    isolate_real_roots,
    poly_gcd,
    reverse_coeffs,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)

T = sympy.Symbol("t")

small_coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=7)
roots = st.lists(st.integers(-6, 6), min_size=1, max_size=6)


def linear_product(rs):
    p = IntPoly((1,))
    for r in rs:
        p = p * IntPoly((-r, 1))
    return p


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], T)


def test_arithmetic_and_format():
    p = IntPoly((1, 4, 1))
    assert str(p) == "1 + 4t + t^2"
    assert p.degree == 2 and p.lead == 1
    assert (p * p).coeffs == (1, 8, 18, 8, 1)
    assert (p - p).is_zero()
    assert p(1) == 6
    assert p(Fraction(-1, 2)) == Fraction(-3, 4)
    assert IntPoly().format() == "0"
    assert IntPoly((0, -1, 0, 3)).format("s") == "-s + 3s^3"


def test_json_round_trip():
    p = IntPoly((12, 0, 10**30))
    assert IntPoly.from_json(p.to_json()) == p
    b = BiPoly.from_terms({(1, 0): 1, (3, 1): 3, (5, 2): 3, (5, 3): 1})
    assert BiPoly.from_json(b.to_json()) == b
    assert b.format() == "x + 3tx^3 + (3t^2 + t^3)x^5"


def test_reverse_coeffs():
    assert reverse_coeffs(IntPoly((1, 6, 4)), 4) == IntPoly((0, 0, 4, 6, 1))
    with pytest.raises(DegreeTooHigh):
        reverse_coeffs(IntPoly((1, 2, 3)), 1)


def test_exact_division():
    a = IntPoly((1, 2, 1))
    assert exact_div(a, IntPoly((1, 1))) == IntPoly((1, 1))
    with pytest.raises(InexactDivision):
        exact_div(a, IntPoly((2, 1)))


def test_gcd_basics():
    assert poly_gcd(IntPoly((-1, 0, 1)), IntPoly((1, 2, 1))) == IntPoly((1, 1))
    assert poly_gcd(IntPoly(), IntPoly((0, 2))) == IntPoly((0, 1))
    with pytest.raises(BothZero):
        poly_gcd(IntPoly(), IntPoly())


@settings(max_examples=150, deadline=None)
@given(small_coeffs, small_coeffs)
def test_gcd_matches_sympy(a, b):
    pa, pb = IntPoly(a), IntPoly(b)
    if not pa and not pb:
        return
    ours = poly_gcd(pa, pb)
    theirs = sympy.gcd(to_sympy(pa), to_sympy(pb))
    theirs = sympy.Poly(theirs, T).primitive()[1]
    if theirs.LC() < 0:
        theirs = -theirs
    assert to_sympy(ours) == theirs


@settings(max_examples=100, deadline=None)
@given(roots)
def test_squarefree_decomposition(rs):
    p = linear_product(rs)
    factors = squarefree_decomposition(p)
    rebuilt = IntPoly((1,))
    for i, a in enumerate(factors, start=1):
        rebuilt = rebuilt * a ** i
    assert rebuilt == p
    assert squarefree_part(p).degree == len(set(rs))


@settings(max_examples=150, deadline=None)
@given(small_coeffs)
def test_distinct_real_roots_match_sympy(c):
    p = IntPoly(c)
    if p.degree < 1:
        return
    real, _ = count_distinct_real_roots(p)
    assert real == len(set(sympy.real_roots(to_sympy(p))))


def test_sturm_chain_of_zero_raises():
    with pytest.raises(ZeroPolynomial):
        sturm_chain(IntPoly())


def test_count_real_roots_in_intervals():
    p = linear_product([-3, -1, 0, 2, 2])
    assert count_real_roots_in(p) == 4
    assert count_real_roots_in(p, None, -2) == 1
    assert count_real_roots_in(p, -1, 0) == 1  # (-1, 0] contains only 0
    assert count_real_roots_in(p, 0, None) == 1


def test_isolation_of_known_polynomials():
    iso = isolate_real_roots(IntPoly((0, 0, 1)))
    assert iso.exact_points == [(0, 2)]
    iso = isolate_real_roots(IntPoly((-2, 0, 1))).refine_to(Fraction(1, 10**6))
    assert [round(x, 5) for x in iso.approximations()] == [-1.41421, 1.41421]
    q = IntPoly((1, 12, 36, 20))
    approx = isolate_real_roots(q).refine_to(Fraction(1, 10**4)).approximations()
    assert [round(x, 2) for x in approx] == [-1.4, -0.27, -0.13]


@settings(max_examples=100, deadline=None)
@given(roots)
def test_isolation_recovers_integer_roots(rs):
    p = linear_product(rs)
    iso = isolate_real_roots(p).refine_to(Fraction(1, 1000))
    assert iso.real_root_count == len(rs)
    got = iso.approximations()
    assert all(abs(a - b) < 1e-3 for a, b in zip(got, sorted(rs)))


def test_bipoly_operations():
    x = BiPoly.x_power(1)
    b = x + BiPoly.x_power(2, IntPoly((0, 3)))
    assert b.dx() == BiPoly([1, IntPoly((0, 6))])
    assert b.subs(1) == BiPoly([0, 1, 3])
    assert b.at_x(2) == IntPoly((2, 12))
    prod = b * (BiPoly([1]) + x)
    assert prod.exact_div(BiPoly([1]) + x) == b
    with pytest.raises(InexactDivision):
        prod.exact_div(BiPoly([1, 0, 1]))
