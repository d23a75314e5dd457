"""
Tests for exact_algebra.py: rational scalars, polynomials, resultants and
exact linear algebra.
"""
from __future__ import print_function
from fractions import Fraction
import numpy as np
import pytest
import sympy

from galoislines.exact_algebra import (
    InvalidInputError, as_scalar, scalar_to_str, ExactPoly, ExactRatFunc,
    poly_gcd, poly_resultant, binary_form_resultant, bareiss_determinant,
    rational_roots, rref, matrix_rank, nullspace, solve_in_span, mat_mul,
    mat_inverse, random_poly, ratfunc_equals)

# Pylint settings
# pylint: disable=redefined-outer-name

X = ExactPoly.x()

# SCALARS ######################################################################
@pytest.mark.parametrize("value, expected", [
    (3, Fraction(3)),
    ("-1/2", Fraction(-1, 2)),
    (" 4/6 ", Fraction(2, 3)),
    (Fraction(5, 7), Fraction(5, 7)),
    (sympy.Rational(-3, 8), Fraction(-3, 8)),
])
def test_as_scalar(value, expected):
    assert as_scalar(value) == expected

@pytest.mark.parametrize("value", [0.5, True, "one half", [1]])
def test_as_scalar_rejects(value):
    with pytest.raises(InvalidInputError):
        as_scalar(value)

def test_scalar_to_str():
    assert scalar_to_str(Fraction(4, 2)) == "2"
    assert scalar_to_str(Fraction(-1, 4)) == "-1/4"

# POLYNOMIALS ##################################################################
def test_poly_normalization():
    poly = ExactPoly([1, 2, 0, 0])
    assert poly.degree == 1
    assert poly.leading == 2
    assert ExactPoly().is_zero()
    assert ExactPoly().degree == float('-inf')
    assert ExactPoly([0, 0]) == 0

def test_poly_arithmetic():
    f = X ** 2 - 1
    g = X - 1
    assert f == ExactPoly.from_roots([1, -1])
    assert f.exact_div(g) == X + 1
    quotient, remainder = divmod(X ** 3 + 2, X ** 2)
    assert quotient == X
    assert remainder == 2
    assert (3 - X)(Fraction(1, 2)) == Fraction(5, 2)
    assert (X ** 3).derivative() == 3 * X ** 2
    assert (2 * X + 4).monic() == X + 2
    with pytest.raises(InvalidInputError):
        (X ** 2 + 1).exact_div(X - 1)
    with pytest.raises(ZeroDivisionError):
        divmod(X, ExactPoly())

def test_poly_to_string():
    assert (X ** 2 - Fraction(1, 4)).to_string() == "1*x^2 - 1/4"
    assert ExactPoly().to_string() == "0"

def test_poly_content_scaled():
    poly = ExactPoly([Fraction(1, 2), Fraction(3, 4)])
    assert poly.content_scaled() == ExactPoly([2, 3])

@pytest.fixture(params=[0, 1, 2])
def random_pair(request):
    rng = np.random.default_rng(request.param)
    common = random_poly(rng, 2)
    return common, random_poly(rng, 2) * common, random_poly(rng, 3) * common

def test_poly_gcd(random_pair):
    common, f, g = random_pair
    gcd = poly_gcd(f, g)
    # The random cofactors may share a further factor
    assert (gcd % common.monic()).is_zero()
    assert (f % gcd).is_zero() and (g % gcd).is_zero()
    assert poly_gcd(f, ExactPoly()) == f.monic()

def test_poly_resultant():
    assert poly_resultant(X ** 2, X - 3) == 9
    assert poly_resultant(X ** 2 - 1, X - 1) == 0
    assert poly_resultant(ExactPoly([5]), X - 1) == 5
    with pytest.raises(InvalidInputError):
        poly_resultant(ExactPoly(), ExactPoly())

def test_resultant_vanishes_iff_common_factor():
    rng = np.random.default_rng(3)
    n_coprime = 0
    for k in range(100):
        f = random_poly(rng, 1 + k % 3)
        g = random_poly(rng, 1 + k % 2)
        if k % 2 == 0:
            common = random_poly(rng, 1)
            f, g = f * common, g * common
            assert poly_resultant(f, g) == 0
        has_factor = poly_gcd(f, g).degree > 0
        assert (poly_resultant(f, g) == 0) == has_factor
        n_coprime += not has_factor
    assert n_coprime > 0

def test_poly_resultant_matches_sympy(random_pair):
    _, f, _ = random_pair
    rng = np.random.default_rng(7)
    g = random_poly(rng, 3)
    x = sympy.Symbol('x')
    expected = sympy.resultant(
        sum(sympy.Rational(c.numerator, c.denominator) * x ** k
            for k, c in enumerate(f.coeffs)),
        sum(sympy.Rational(c.numerator, c.denominator) * x ** k
            for k, c in enumerate(g.coeffs)), x)
    assert poly_resultant(f, g) == as_scalar(sympy.Rational(expected))

def test_binary_form_resultant_at_infinity():
    # Both forms vanish at infinity when their formal leading terms are zero
    assert binary_form_resultant([1, 1], [2, 1], 2, 2) == 0
    assert binary_form_resultant([1, 0, 1], [2, 0, 1], 2, 2) != 0

def test_bareiss_determinant():
    matrix = [[0, 2, 1], [1, 1, 0], [3, 0, 1]]
    assert bareiss_determinant(matrix) == round(np.linalg.det(matrix))
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0

def test_rational_roots():
    poly = ExactPoly.from_roots([Fraction(1, 2), -2, -2, 0], leading=4)
    assert rational_roots(poly) == [-2, -2, 0, Fraction(1, 2)]
    assert rational_roots(X ** 2 - 2) == []
    with pytest.raises(InvalidInputError):
        rational_roots(ExactPoly())

# RATIONAL FUNCTIONS ###########################################################
def test_ratfunc_normal_form():
    f = ExactRatFunc(2 * X ** 2 - 2, 2 * X - 2)
    assert f.num == X + 1
    assert f.den == 1
    assert ExactRatFunc(X, 3 * X ** 2) == ExactRatFunc(Fraction(1, 3)) / X

def test_ratfunc_arithmetic():
    x = ExactRatFunc.x()
    f = (x ** 2 - Fraction(1, 4)) / x
    assert f(Fraction(1, 2)) == 0
    assert (f - x) == -Fraction(1, 4) / x
    assert (x ** -2) * x ** 2 == 1
    assert hash(f) == hash((x ** 2 - Fraction(1, 4)) / x)
    with pytest.raises(ZeroDivisionError):
        x / ExactRatFunc(0)

def random_ratfunc(rng):
    return ExactRatFunc(random_poly(rng, int(rng.integers(0, 3))),
                        random_poly(rng, int(rng.integers(0, 3))))

def test_ratfunc_field_axioms():
    rng = np.random.default_rng(11)
    for _ in range(100):
        f, g, h = (random_ratfunc(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f + g == g + f
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f - f == 0
        if not f.is_zero():
            assert f / f == 1

def test_ratfunc_normalization_idempotent():
    rng = np.random.default_rng(12)
    for _ in range(100):
        f = random_ratfunc(rng) * random_ratfunc(rng)
        once = f.normalize()
        twice = once.normalize()
        assert (once.num.coeffs, once.den.coeffs) == \
            (f.num.coeffs, f.den.coeffs)
        assert (twice.num.coeffs, twice.den.coeffs) == \
            (once.num.coeffs, once.den.coeffs)
        assert once.den.leading == 1
        assert poly_gcd(once.num, once.den).degree <= 0

def test_ratfunc_equals_after_scaling():
    f = ExactRatFunc(4 * X ** 2 - 1, 4 * X)
    g = ExactRatFunc(X ** 2 - Fraction(1, 4), X)
    assert ratfunc_equals(f, g)
    assert (f.num, f.den) == (g.num, g.den)
    assert not ratfunc_equals(f, ExactRatFunc(X ** 2 - 1, X))

# LINEAR ALGEBRA ###############################################################
def test_rref_and_rank():
    rows, pivots = rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert pivots == [0, 1]
    assert rows == [[1, 0, 1], [0, 1, 1]]
    assert matrix_rank([[1, 2], [2, 4]]) == 1

def test_nullspace():
    matrix = [[1, 1, 0, 0], [0, 0, 1, 1]]
    kernel = nullspace(matrix, 4)
    assert len(kernel) == 2
    for vec in kernel:
        assert all(sum(a * b for a, b in zip(row, vec)) == 0
                   for row in matrix)

def test_solve_in_span():
    spanning = [[1, 0, 1], [0, 1, 1]]
    assert solve_in_span([2, 3, 5], spanning) == [2, 3]
    assert solve_in_span([0, 0, 1], spanning) is None

def test_mat_inverse():
    matrix = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inverse = mat_inverse(matrix)
    assert mat_mul(matrix, inverse) == [[1, 0], [0, 1]]
    with pytest.raises(InvalidInputError):
        mat_inverse([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
