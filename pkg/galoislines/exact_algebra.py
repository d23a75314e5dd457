"""Exact rational arithmetic: scalars, univariate polynomials, rational
functions, resultants and linear algebra over the rationals."""

# License: GNU General Public License v3.0

from __future__ import print_function
from fractions import Fraction
import math

# Scalars are python fractions: always in lowest terms with positive
# denominator.
ExactScalar = Fraction

# Degree of the zero polynomial.
MINUS_INFINITY = float('-inf')


class InvalidInputError(ValueError):
    """Raised for arguments outside the domain of an exact operation."""


def as_scalar(value):
    """Converts ints, fractions and strings like '-1/2' to an ExactScalar.

    Floats are rejected since they would silently introduce rounding.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInputError("value = %r, exact input must be an integer,"
                                " a fraction or a string" % (value,))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise InvalidInputError("cannot parse %r as a rational number"
                                    % value)
    # numbers.Rational such as sympy.Rational
    try:
        return Fraction(int(value.p), int(value.q))
    except AttributeError:
        raise InvalidInputError("unsupported scalar type %s" % type(value))


def scalar_to_str(value):
    """Serializes a scalar as 'num/den', omitting the denominator 1."""
    value = as_scalar(value)
    if value.denominator == 1:
        return "%d" % value.numerator
    return "%d/%d" % (value.numerator, value.denominator)


def _format_coeff(coeff, power, var):
    if power == 0:
        return scalar_to_str(coeff)
    if power == 1:
        monomial = var
    else:
        monomial = "%s^%d" % (var, power)
    return "%s*%s" % (scalar_to_str(coeff), monomial)


class ExactPoly():
    """Dense univariate polynomial with rational coefficients.

    Parameters
    ----------
    coeffs : iterable
        Coefficients, lowest degree first. Trailing zeros are stripped so
        that the leading coefficient is nonzero unless the polynomial is zero.
    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        coeffs = [as_scalar(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots, leading=1):
        result = cls([leading])
        for root in roots:
            result = result * cls([-as_scalar(root), 1])
        return result

    @property
    def degree(self):
        if not self.coeffs:
            return MINUS_INFINITY
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _coerce(self, other):
        if isinstance(other, ExactPoly):
            return other
        return ExactPoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return ExactPoly()
        prod = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        return ExactPoly(prod)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise InvalidInputError("negative power of a polynomial")
        result = ExactPoly([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - len(other.coeffs) + 1, 0)
        lead = other.leading
        dg = len(other.coeffs) - 1
        for k in range(len(remainder) - 1, dg - 1, -1):
            factor = remainder[k] / lead
            if factor == 0:
                continue
            quotient[k - dg] = factor
            for j, c in enumerate(other.coeffs):
                remainder[k - dg + j] -= factor * c
        return ExactPoly(quotient), ExactPoly(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Division that must leave no remainder."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise InvalidInputError("%s is not divisible by %s" % (self, other))
        return quotient

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == ExactPoly.constant(other).coeffs
        except InvalidInputError:
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(('ExactPoly', self.coeffs))

    def __call__(self, value):
        """Horner evaluation; value may be any ring element supporting
        addition with and multiplication by fractions."""
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def derivative(self):
        return ExactPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        return ExactPoly([c / self.leading for c in self.coeffs])

    def content_scaled(self):
        """Primitive integer polynomial with the same roots."""
        if self.is_zero():
            return self
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, abs(c))
        return ExactPoly([Fraction(c, g) for c in ints])

    def to_string(self, var='x'):
        """Sparse text form 'coef*x^k + ...', highest degree first."""
        if self.is_zero():
            return "0"
        terms = [_format_coeff(c, k, var)
                 for k, c in reversed(list(enumerate(self.coeffs))) if c != 0]
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return "ExactPoly(%s)" % self.to_string()

    __str__ = to_string


def poly_gcd(f, g):
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def bareiss_determinant(matrix):
    """Determinant by fraction-free Bareiss elimination.

    Parameters
    ----------
    matrix : list of lists
        Square matrix of exact scalars.

    Returns
    -------
    det : ExactScalar
    """
    a = [[as_scalar(v) for v in row] for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            # Row swap with a nonzero pivot
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester_matrix(f_coeffs, g_coeffs, deg_f, deg_g):
    """Sylvester matrix of two coefficient lists with formal degrees.

    Coefficients are given lowest degree first; the formal degree may exceed
    the actual one, which is how binary forms are handled.
    """
    size = deg_f + deg_g
    f_high = [as_scalar(f_coeffs[k]) if k < len(f_coeffs) else Fraction(0)
              for k in range(deg_f, -1, -1)]
    g_high = [as_scalar(g_coeffs[k]) if k < len(g_coeffs) else Fraction(0)
              for k in range(deg_g, -1, -1)]
    rows = []
    for shift in range(deg_g):
        rows.append([Fraction(0)] * shift + f_high +
                    [Fraction(0)] * (size - shift - deg_f - 1))
    for shift in range(deg_f):
        rows.append([Fraction(0)] * shift + g_high +
                    [Fraction(0)] * (size - shift - deg_g - 1))
    return rows


def poly_resultant(f, g):
    """Resultant of two univariate polynomials.

    Parameters
    ----------
    f, g : ExactPoly
        Not both zero.

    Returns
    -------
    res : ExactScalar
        Zero iff f and g share a root over the algebraic closure.
    """
    if f.is_zero() and g.is_zero():
        raise InvalidInputError("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        # A zero polynomial shares every root of the other one
        other = g if f.is_zero() else f
        return Fraction(1) if other.degree == 0 else Fraction(0)
    if f.degree == 0 and g.degree == 0:
        return Fraction(1)
    return bareiss_determinant(
        sylvester_matrix(f.coeffs, g.coeffs, f.degree, g.degree))


def binary_form_resultant(f_coeffs, g_coeffs, deg_f, deg_g):
    """Resultant of two binary forms given by dehomogenized coefficients.

    Vanishes iff the forms have a common zero in P^1, including the point at
    infinity where both formal leading coefficients vanish.
    """
    return bareiss_determinant(
        sylvester_matrix(f_coeffs, g_coeffs, deg_f, deg_g))


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, int(math.isqrt(n)) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(f):
    """All rational roots of f, with multiplicity, in increasing order."""
    if f.is_zero():
        raise InvalidInputError("the zero polynomial has every root")
    roots = []
    f = f.content_scaled()
    while f.degree > 0 and f.coeff(0) == 0:
        roots.append(Fraction(0))
        f = ExactPoly(f.coeffs[1:])
    if f.degree <= 0:
        return sorted(roots)
    lead = int(f.leading)
    const = int(f.coeff(0))
    candidates = set()
    for num in _divisors(const):
        for den in _divisors(lead):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for cand in sorted(candidates):
        while f.degree > 0 and f(cand) == 0:
            roots.append(cand)
            f = f.exact_div(ExactPoly([-cand, 1]))
    return sorted(roots)


class ExactRatFunc():
    """Univariate rational function num/den over the rationals.

    Stored with gcd(num, den) = 1 and monic denominator, so that equal
    functions have identical representations.
    """
    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        if not isinstance(num, ExactPoly):
            num = ExactPoly.constant(num)
        if den is None:
            den = ExactPoly([1])
        elif not isinstance(den, ExactPoly):
            den = ExactPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = ExactPoly([1])
            return
        g = poly_gcd(num, den)
        num = num.exact_div(g)
        den = den.exact_div(g)
        lead = den.leading
        self.num = ExactPoly([c / lead for c in num.coeffs])
        self.den = ExactPoly([c / lead for c in den.coeffs])

    @classmethod
    def x(cls):
        return cls(ExactPoly.x())

    def normalize(self):
        return ExactRatFunc(self.num, self.den)

    def _coerce(self, other):
        if isinstance(other, ExactRatFunc):
            return other
        return ExactRatFunc(other)

    def __add__(self, other):
        other = self._coerce(other)
        return ExactRatFunc(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ExactRatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return ExactRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return ExactRatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, exponent):
        if exponent < 0:
            return ExactRatFunc(1) / (self ** (-exponent))
        return ExactRatFunc(self.num ** exponent, self.den ** exponent)

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def __eq__(self, other):
        if not isinstance(other, ExactRatFunc):
            try:
                other = ExactRatFunc(other)
            except InvalidInputError:
                return NotImplemented
        return ratfunc_equals(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num, self.den))

    def to_string(self, var='x'):
        if self.den == ExactPoly([1]):
            return self.num.to_string(var)
        return "(%s)/(%s)" % (self.num.to_string(var), self.den.to_string(var))

    def __repr__(self):
        return "ExactRatFunc(%s)" % self.to_string()

    __str__ = to_string


def ratfunc_equals(f, g):
    """Equality in the rational function field by cross multiplication."""
    return (f.num * g.den) == (g.num * f.den)


# EXACT LINEAR ALGEBRA #########################################################
def rref(matrix):
    """Reduced row echelon form.

    Returns
    -------
    rows, pivots : list of lists, list of int
    """
    a = [[as_scalar(v) for v in row] for row in matrix]
    if not a:
        return a, []
    n_rows, n_cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        lead = a[r][c]
        a[r] = [v / lead for v in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [vi - factor * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return a[:r], pivots


def matrix_rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix, n_cols=None):
    """Basis of the right kernel of an exact matrix, one vector per free
    column, normalized to have 1 in that column."""
    if n_cols is None:
        n_cols = len(matrix[0])
    rows, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def solve_in_span(target, spanning):
    """Coefficients expressing target as a combination of spanning vectors,
    or None if target is not in their span."""
    n = len(target)
    # Columns are the spanning vectors, augmented by the target
    aug = [[vec[i] for vec in spanning] + [target[i]] for i in range(n)]
    rows, pivots = rref(aug)
    k = len(spanning)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(rows, pivots):
        coeffs[p] = row[k]
    return coeffs


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise InvalidInputError("matrix is singular")
    return [row[n:] for row in rows]


def random_scalar(rng, max_num=9, max_den=5, nonzero=False):
    """Random small rational drawn from a numpy Generator."""
    while True:
        value = Fraction(int(rng.integers(-max_num, max_num + 1)),
                         int(rng.integers(1, max_den + 1)))
        if value != 0 or not nonzero:
            return value


def random_poly(rng, degree, **kwargs):
    coeffs = [random_scalar(rng, **kwargs) for _ in range(degree)]
    coeffs.append(random_scalar(rng, nonzero=True, **kwargs))
    return ExactPoly(coeffs)