"""
Tests for function_field.py: arithmetic in k(C), the involution pullbacks
and the certified generators of the fixed fields.
"""
from __future__ import print_function
from fractions import Fraction
import numpy as np
import pytest

from galoislines.exact_algebra import (ExactRatFunc, InvalidInputError,
                                      random_poly)
from galoislines.curve_model import EllipticCurveModel, edge_planes
from galoislines.function_field import (
    GROUP_PAIRS, CurveFunction, DegenerateFunctionError, UnsupportedGroupError,
    generic_point, involution_pullback, involution_pullbacks, pullback,
    plane_ratio, is_invariant, fixed_generator, c_denominator_generator,
    covering_degree, fiber_cardinality)

from test_curve_model import (curve, generic_curve, lemniscatic_curve,
                              GENERIC_ROOTS)

# Pylint settings
# pylint: disable=redefined-outer-name,unused-import

# FUNCTION FIELD ARITHMETIC ####################################################
def test_relation_of_the_curve(curve):
    x = CurveFunction.x(curve)
    y = CurveFunction.y(curve)
    assert y * y == 4 * x ** 3 + curve.p * x + curve.q
    assert (y * y).is_constant() is False
    assert CurveFunction.constant(Fraction(2, 3), curve).is_constant()

def test_inverse(curve):
    x = CurveFunction.x(curve)
    y = CurveFunction.y(curve)
    f = x * y + 1
    assert f * f.inverse() == 1
    assert (y / f) * f == y
    assert f ** -2 * f ** 2 == 1
    with pytest.raises(ZeroDivisionError):
        CurveFunction.constant(0, curve).inverse()

def test_generic_point_on_quadrics(curve):
    point = generic_point(curve)
    assert curve.F1(point).is_zero()
    assert curve.F2(point).is_zero()

def test_substitution_degenerate(curve):
    f = CurveFunction(ExactRatFunc(1), ExactRatFunc(0), curve) / \
        (CurveFunction.x(curve) - curve.root(1))
    constant = CurveFunction.constant(curve.root(1), curve)
    with pytest.raises(DegenerateFunctionError):
        f.substitute(constant, CurveFunction.y(curve))

# INVOLUTIONS ##################################################################
def random_function(rng, curve):
    """f = a + b*y with random rational functions a, b of small degree."""
    a = ExactRatFunc(random_poly(rng, int(rng.integers(0, 3))),
                     random_poly(rng, int(rng.integers(0, 2))))
    b = ExactRatFunc(random_poly(rng, int(rng.integers(0, 2))),
                     random_poly(rng, int(rng.integers(0, 2))))
    return CurveFunction(a, b, curve)

def test_involutions_are_involutive(curve):
    x = CurveFunction.x(curve)
    y = CurveFunction.y(curve)
    for sigma in involution_pullbacks(curve):
        assert sigma(sigma(x)) == x
        assert sigma(sigma(y)) == y
        # Automorphisms of k(C) preserve the relation
        assert sigma(y) * sigma(y) == 4 * sigma(x) ** 3 + \
            curve.p * sigma(x) + curve.q

@pytest.mark.parametrize("index", range(4))
def test_involution_on_random_functions(curve, index):
    rng = np.random.default_rng(100 + index)
    sigma = involution_pullback(curve, index)
    for _ in range(50):
        f = random_function(rng, curve)
        assert sigma(sigma(f)) == f

def test_involutions_commute(curve):
    x = CurveFunction.x(curve)
    y = CurveFunction.y(curve)
    sigmas = involution_pullbacks(curve)
    for i, j in GROUP_PAIRS:
        for f in (x, y):
            assert sigmas[i](sigmas[j](f)) == sigmas[j](sigmas[i](f))

def test_sigma3_lemniscatic(lemniscatic_curve):
    x = CurveFunction.x(lemniscatic_curve)
    sigma = involution_pullback(lemniscatic_curve, 3)
    assert sigma(x) == -1 / (4 * x)

def test_unsupported_involution(curve):
    with pytest.raises(UnsupportedGroupError):
        involution_pullback(curve, 4)

def test_pullback_other_curve(generic_curve, lemniscatic_curve):
    sigma = involution_pullback(generic_curve, 1)
    with pytest.raises(ValueError):
        pullback(sigma, CurveFunction.x(lemniscatic_curve))

# FIXED FIELDS #################################################################
@pytest.mark.parametrize("pair", GROUP_PAIRS)
def test_fixed_generator(curve, pair):
    generator = fixed_generator(curve, pair)
    assert not generator.is_constant()
    for index in pair:
        assert is_invariant(involution_pullback(curve, index), generator)
    assert plane_ratio(curve, edge_planes(curve, *pair)) == generator
    assert covering_degree(curve, generator) == 4

def test_fixed_generator_g03_lemniscatic(lemniscatic_curve):
    x = CurveFunction.x(lemniscatic_curve)
    generator = fixed_generator(lemniscatic_curve, "G03")
    assert generator == (x * x - Fraction(1, 4)) / x

@pytest.mark.parametrize("group", ["G44", (0, 0), "H01", None])
def test_fixed_generator_rejects(curve, group):
    with pytest.raises(UnsupportedGroupError):
        fixed_generator(curve, group)

@pytest.mark.parametrize("index", [1, 2, 3])
def test_c_denominator_generator_not_invariant(generic_curve, index):
    candidate = c_denominator_generator(generic_curve, index)
    assert is_invariant(involution_pullback(generic_curve, 0), candidate)
    assert not is_invariant(involution_pullback(generic_curve, index), candidate)

# COVERING DEGREES #############################################################
def test_covering_degree_coordinates(curve):
    x = CurveFunction.x(curve)
    y = CurveFunction.y(curve)
    assert covering_degree(curve, x) == 2
    assert covering_degree(curve, y) == 3
    assert covering_degree(curve, x * x + y) == 4
    with pytest.raises(InvalidInputError):
        covering_degree(curve, CurveFunction.constant(3, curve))

@pytest.mark.parametrize("pair", GROUP_PAIRS)
def test_fiber_cardinality(pair):
    curve = EllipticCurveModel(*GENERIC_ROOTS)
    generator = fixed_generator(curve, pair)
    assert fiber_cardinality(curve, generator, Fraction(7, 3)) == 4

def test_fiber_cardinality_branch_point(generic_curve):
    # x = e_1 is a branch point of x, its fibre is a single point
    x = CurveFunction.x(generic_curve)
    assert fiber_cardinality(generic_curve, x, generic_curve.root(1)) == 1
    assert fiber_cardinality(generic_curve, x, 5) == 2

def test_fiber_cardinality_matches_degree(generic_curve):
    x = CurveFunction.x(generic_curve)
    y = CurveFunction.y(generic_curve)
    # 4x^3 - 28x - 24 = 1 has three distinct real roots
    assert fiber_cardinality(generic_curve, y, 1) == covering_degree(
        generic_curve, y) == 3
    f = x * x + y
    assert fiber_cardinality(generic_curve, f, Fraction(7, 3)) == \
        covering_degree(generic_curve, f) == 4
