"""The function field k(C) = k(x)[y]/(y^2 - 4(x-e1)(x-e2)(x-e3)), pullbacks
by the four involutions sigma_0..sigma_3, fixed fields of the six Klein
four-groups and degrees of the induced coverings."""

# License: GNU General Public License v3.0

from __future__ import print_function

import numpy as np

from .exact_algebra import (ExactRatFunc, InvalidInputError, poly_gcd,
                            as_scalar)
from .curve_model import edge_planes
from .torus_model import CurveUniformization


class DegenerateFunctionError(ValueError):
    """Raised when a substitution divides by an identically zero function."""


class UnsupportedGroupError(ValueError):
    """Raised for a group that is not one of the six G_ij."""


class FixedFieldError(ValueError):
    """Raised when a fixed-field generator fails its invariance or
    plane-ratio certificate."""


# The six Klein four-groups G_ij = <sigma_i, sigma_j>, 0 <= i < j <= 3
GROUP_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


class CurveFunction():
    """Element a(x) + b(x)*y of the function field of C.

    The relation y^2 = 4x^3 + px + q is applied eagerly, so (a, b) is
    canonical and equality reduces to two rational function comparisons.

    Parameters
    ----------
    a, b : ExactRatFunc (or anything ExactRatFunc accepts)
    curve : EllipticCurveModel
    """
    __slots__ = ('a', 'b', 'curve')

    def __init__(self, a, b, curve):
        self.a = a if isinstance(a, ExactRatFunc) else ExactRatFunc(a)
        self.b = b if isinstance(b, ExactRatFunc) else ExactRatFunc(b)
        self.curve = curve

    @classmethod
    def constant(cls, value, curve):
        return cls(ExactRatFunc(value), ExactRatFunc(0), curve)

    @classmethod
    def x(cls, curve):
        return cls(ExactRatFunc.x(), ExactRatFunc(0), curve)

    @classmethod
    def y(cls, curve):
        return cls(ExactRatFunc(0), ExactRatFunc(1), curve)

    def _cubic(self):
        return ExactRatFunc(self.curve.cubic())

    def _coerce(self, other):
        if isinstance(other, CurveFunction):
            if other.curve is not self.curve and \
                    other.curve.e != self.curve.e:
                raise ValueError("functions live on different curves")
            return other
        return CurveFunction(ExactRatFunc(other) if not
                             isinstance(other, ExactRatFunc) else other,
                             ExactRatFunc(0), self.curve)

    def __add__(self, other):
        other = self._coerce(other)
        return CurveFunction(self.a + other.a, self.b + other.b, self.curve)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(-self.a, -self.b, self.curve)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return CurveFunction(self.a * other.a + self.b * other.b * self._cubic(),
                             self.a * other.b + self.b * other.a, self.curve)

    __rmul__ = __mul__

    def norm(self):
        """a^2 - b^2 (4x^3 + px + q), the product with the y -> -y conjugate."""
        return self.a * self.a - self.b * self.b * self._cubic()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        n = self.norm()
        return CurveFunction(self.a / n, -self.b / n, self.curve)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CurveFunction.constant(1, self.curve)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def is_constant(self):
        return self.b.is_zero() and self.a.is_constant()

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (ValueError, TypeError):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.a, self.b))

    def substitute(self, x_image, y_image):
        """a(X) + b(X)*Y for CurveFunctions X, Y."""
        return (_ratfunc_at(self.a, x_image) +
                _ratfunc_at(self.b, x_image) * y_image)

    def to_json(self):
        return {"a": self.a.to_string(), "b": self.b.to_string()}

    def __repr__(self):
        if self.b.is_zero():
            return "CurveFunction(%s)" % self.a
        return "CurveFunction(%s + (%s)*y)" % (self.a, self.b)


def _poly_at(poly, value):
    result = CurveFunction.constant(0, value.curve)
    for c in reversed(poly.coeffs):
        result = result * value + c
    return result


def _ratfunc_at(ratfunc, value):
    den = _poly_at(ratfunc.den, value)
    if den.is_zero():
        raise DegenerateFunctionError("denominator %s vanishes identically "
                                      "after substitution" % ratfunc.den)
    return _poly_at(ratfunc.num, value) / den


def generic_point(curve):
    """Coordinates (1, x^2, x, y) of the generic point of C."""
    x = CurveFunction.x(curve)
    return (CurveFunction.constant(1, curve), x * x, x, CurveFunction.y(curve))


class InvolutionPullback():
    """Field automorphism sigma_i^* of k(C) given by the images of x and y.

    sigma_0^*: (x, y) -> (x, -y); for i >= 1 with a_i = (e_i-e_j)(e_i-e_k),
    sigma_i^*(x) = a_i/(x - e_i) + e_i and sigma_i^*(y) = a_i y/(x - e_i)^2.
    """

    def __init__(self, index, x_image, y_image):
        self.index = index
        self.x_image = x_image
        self.y_image = y_image

    @property
    def curve(self):
        return self.x_image.curve

    def __call__(self, f):
        return pullback(self, f)

    def __repr__(self):
        return "InvolutionPullback(sigma_%d)" % self.index


def involution_pullback(curve, index):
    """sigma_index^* for index in {0, 1, 2, 3}."""
    x = CurveFunction.x(curve)
    y = CurveFunction.y(curve)
    if index == 0:
        return InvolutionPullback(0, x, -y)
    if index not in (1, 2, 3):
        raise UnsupportedGroupError("sigma_%r does not exist, index must be "
                                    "in {0, 1, 2, 3}" % (index,))
    e = curve.root(index)
    a = curve.a[index - 1]
    shifted = x - e
    return InvolutionPullback(index, shifted.inverse() * a + e,
                              y * a / (shifted * shifted))


def involution_pullbacks(curve):
    return [involution_pullback(curve, i) for i in range(4)]


def pullback(sigma, f):
    """Applies sigma^* to a function of C.

    Parameters
    ----------
    sigma : InvolutionPullback
    f : CurveFunction

    Returns
    -------
    g : CurveFunction
        f(sigma^*(x), sigma^*(y)).
    """
    if sigma.curve.e != f.curve.e:
        raise ValueError("pullback and function live on different curves")
    return f.substitute(sigma.x_image, sigma.y_image)


def _parse_group(group):
    if isinstance(group, str):
        label = group.strip().upper()
        if len(label) == 3 and label[0] == 'G' and label[1:].isdigit():
            group = (int(label[1]), int(label[2]))
    try:
        pair = tuple(sorted(int(v) for v in group))
    except (TypeError, ValueError):
        raise UnsupportedGroupError("cannot read %r as a group G_ij"
                                    % (group,))
    if pair not in GROUP_PAIRS:
        raise UnsupportedGroupError("G_%s is not one of the six groups "
                                    "<sigma_i, sigma_j>" % (group,))
    return pair


def plane_ratio(curve, planes):
    """numerator/denominator of two plane equations on the generic point."""
    point = generic_point(curve)
    numerator, denominator = planes
    return numerator.evaluate(point) / denominator.evaluate(point)


def is_invariant(sigma, f):
    return pullback(sigma, f) == f


def fixed_generator(curve, group):
    """Certified generator of the fixed field K_ij = k(C)^{G_ij}.

    For G_0i the generator is (x^2 + c_i)/(x - e_i), for G_ij (i, j >= 1,
    k the third index) it is y/(c_k + 2 e_k x - x^2). The result is checked
    to be invariant under sigma_i and sigma_j and to coincide with the ratio
    of the plane equations of the edge Q_i Q_j on the generic point.

    Parameters
    ----------
    curve : EllipticCurveModel
    group : tuple (i, j) or label 'Gij'

    Returns
    -------
    generator : CurveFunction
    """
    i, j = _parse_group(group)
    x = CurveFunction.x(curve)
    y = CurveFunction.y(curve)
    if i == 0:
        generator = (x * x + curve.c[j - 1]) / (x - curve.root(j))
    else:
        k = next(m for m in (1, 2, 3) if m not in (i, j))
        generator = y / (x * curve.root(k) * 2 + curve.c[k - 1] - x * x)
    for index in (i, j):
        if not is_invariant(involution_pullback(curve, index), generator):
            raise FixedFieldError("generator of G_%d%d is not invariant under "
                                  "sigma_%d" % (i, j, index))
    if plane_ratio(curve, edge_planes(curve, i, j)) != generator:
        raise FixedFieldError("generator of G_%d%d differs from the ratio of "
                              "the plane equations of its line" % (i, j))
    return generator


def c_denominator_generator(curve, i):
    """(x^2 + c_i)/(x - c_i), the variant with c_i in the denominator."""
    x = CurveFunction.x(curve)
    return (x * x + curve.c[i - 1]) / (x - curve.c[i - 1])


def _common_denominator_form(f):
    """(A, B, D) polynomials with f = (A + B y)/D."""
    da, db = f.a.den, f.b.den
    g = poly_gcd(da, db)
    den = (da * db).exact_div(g)
    return (f.a.num * den.exact_div(da), f.b.num * den.exact_div(db), den)


def covering_degree(curve, f):
    """Degree [k(C) : k(f)] of a nonconstant function, i.e. the degree of
    its divisor of poles.

    For f in k(x) this is 2*max(deg num, deg den). Otherwise write
    f = (A + B y)/D; the fibre over a generic t is cut out by
    P_t = (tD - A)^2 - B^2 (4x^3 + px + q), one point per root, once the
    t-independent factor gcd(D^2, AD, A^2 - B^2(4x^3+px+q)) is removed.
    """
    if f.is_constant():
        raise InvalidInputError("covering degree of a constant function")
    if f.b.is_zero():
        return 2 * max(f.a.num.degree, f.a.den.degree)
    A, B, D = _common_denominator_form(f)
    c2 = D * D
    c1 = A * D * (-2)
    c0 = A * A - B * B * curve.cubic()
    generic = max(c.degree for c in (c2, c1, c0))
    fixed = poly_gcd(poly_gcd(c2, c1), c0)
    return int(generic - fixed.degree)


def _numeric_poly(poly):
    return np.array([float(c) for c in reversed(poly.coeffs)])


def _numeric_value(f, x0, y0):
    def at(ratfunc):
        return (np.polyval(_numeric_poly(ratfunc.num), x0) /
                np.polyval(_numeric_poly(ratfunc.den), x0))
    if f.b.is_zero():
        return at(f.a)
    return at(f.a) + at(f.b) * y0


def fiber_cardinality(curve, f, t, tol=1e-7, n_grid=10, max_iter=80):
    """Numeric count of the points of C where f takes the value t.

    Independent of the gcd bookkeeping in :func:`covering_degree`: on the
    torus C/L of the curve, F(z) = f(x(z), y(z)) - t is an elliptic function.
    Its zeros are found by Newton iteration from an n_grid x n_grid grid of
    starting points in the fundamental domain and counted modulo L.

    Parameters
    ----------
    curve : EllipticCurveModel
    f : CurveFunction
        Nonconstant function.
    t : rational
        Target value; a fibre through P_0' = (0 : 1 : 0 : 0) is not counted.
    tol : float, optional (default: 1e-7)
        Bound on |F| at an accepted zero, relative to max(1, |t|).
    n_grid : int, optional (default: 10)
    max_iter : int, optional (default: 80)

    Returns
    -------
    count : int
        Number of distinct points in the fibre.
    """
    t = float(as_scalar(t))
    uniformization = CurveUniformization(curve)
    lattice = uniformization.lattice
    h = 1e-6 * lattice.shortest

    def value(z):
        x0, y0 = uniformization.xy(z)
        return _numeric_value(f, x0, y0) - t

    zeros = []
    for i in range(n_grid):
        for j in range(n_grid):
            z = lattice.from_coords((i + .5) / n_grid, (j + .5) / n_grid)
            try:
                with np.errstate(all='ignore'):
                    for _ in range(max_iter):
                        fz = value(z)
                        slope = (value(z + h) - value(z - h)) / (2 * h)
                        if fz == 0 or slope == 0:
                            break
                        step = fz / slope
                        if not np.isfinite(step):
                            break
                        z = z - step
                        if abs(step) < 1e-13 * lattice.shortest:
                            break
                    residual = abs(value(z))
            # PoleError, or a non-finite z reaching the lattice reduction
            except (ValueError, ZeroDivisionError, OverflowError):
                continue
            if not residual < tol * max(1., abs(t)):
                continue
            if not any(lattice.contains(z - w, 1e-5) for w in zeros):
                zeros.append(lattice.reduce(z))
    return len(zeros)
