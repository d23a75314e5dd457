"""The complex torus C/L: lattice arithmetic, affine automorphisms z -> eps*z
+ alpha with exact alpha in lattice coordinates, enumeration of the order 4
groups whose quotient gives a Galois line, Abel's condition and numeric
evaluation of the Weierstrass function realizing torus points on C."""

# License: GNU General Public License v3.0

from __future__ import print_function
from fractions import Fraction
import itertools
import math
import warnings

import numpy as np

from .exact_algebra import as_scalar


class PoleError(ValueError):
    """Raised when the Weierstrass function is evaluated at a lattice point."""


# Z4 generators z -> i*z + (m + n*i)/4, in the order the arrangement lists
# the lines l(m, n)
Z4_LABEL_ORDER = [(0, 0), (2, 2), (2, 0), (0, 2), (3, 1), (1, 3), (1, 1),
                  (3, 3)]

# Half periods 0, 1/2, omega/2, (1 + omega)/2 of sigma_0..sigma_3
HALF_PERIODS = [(Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(0)),
                (Fraction(0), Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2))]


def _gauss_reduce(w1, w2):
    """Lagrange-Gauss reduction of a basis of a planar lattice."""
    if abs(w1) > abs(w2):
        w1, w2 = w2, w1
    while True:
        mu = round((w2 * np.conj(w1)).real / abs(w1) ** 2)
        w2 = w2 - mu * w1
        if abs(w2) >= abs(w1):
            break
        w1, w2 = w2, w1
    if (w2 / w1).imag < 0:
        w2 = -w2
    return w1, w2


def _divisor_power_sum(n, k):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein_invariants(tau, n_terms=40):
    """g2 and g3 of the lattice Z + tau*Z via the q-expansions of E4 and E6.

    tau should be reduced (Im tau >= sqrt(3)/2) so that |q| < 0.005.
    """
    q = np.exp(2j * np.pi * tau)
    e4 = 1 + 240 * sum(_divisor_power_sum(n, 3) * q ** n
                       for n in range(1, n_terms))
    e6 = 1 - 504 * sum(_divisor_power_sum(n, 5) * q ** n
                       for n in range(1, n_terms))
    return (4 * np.pi ** 4 / 3) * e4, (8 * np.pi ** 6 / 27) * e6


class ComplexLattice():
    """Lattice L = Z + omega*Z with Im(omega) > 0.

    Parameters
    ----------
    omega : complex
        Second generator.
    tol : float, optional (default: 1e-9)
        Tolerance used to recognize the extra symmetries of the square and
        hexagonal lattices.

    Attributes
    ----------
    symmetry_order : int
        Order of the group of roots of unity eps with eps*L = L: 4 if
        omega ~ i, 6 if omega ~ exp(i pi/3), 2 otherwise.
    g2, g3 : complex
        Weierstrass invariants of L.
    """

    def __init__(self, omega, tol=1e-9):
        omega = complex(omega)
        if omega.imag <= 0:
            raise ValueError("omega = %s, but must have positive imaginary "
                             "part" % omega)
        self.omega = omega
        self.tol = tol
        self.symmetry_order = 2
        for order in (6, 4):
            unit = np.exp(2j * np.pi / order)
            if self.contains(unit) and self.contains(unit * omega):
                self.symmetry_order = order
                break
        self._unit_matrices = [self._multiplication_matrix(k)
                               for k in range(self.symmetry_order)]
        w1, w2 = _gauss_reduce(1. + 0j, omega)
        self.shortest = abs(w1)
        g2, g3 = eisenstein_invariants(w2 / w1)
        self.g2 = complex(g2 / w1 ** 4)
        self.g3 = complex(g3 / w1 ** 6)
        self._laurent = laurent_coefficients(self.g2, self.g3)

    @classmethod
    def square(cls):
        return cls(1j)

    @classmethod
    def hexagonal(cls):
        return cls(np.exp(1j * np.pi / 3))

    def coords(self, z):
        """Real lattice coordinates (r, s) with z = r + s*omega."""
        z = complex(z)
        s = z.imag / self.omega.imag
        return z.real - s * self.omega.real, s

    def from_coords(self, r, s):
        return complex(float(r) + float(s) * self.omega)

    def contains(self, z, tol=None):
        tol = self.tol if tol is None else tol
        r, s = self.coords(z)
        return abs(r - round(r)) < tol and abs(s - round(s)) < tol

    def reduce(self, z):
        """Representative of z mod L with coordinates in [-1/2, 1/2)."""
        r, s = self.coords(z)
        return self.from_coords(r - math.floor(r + 0.5),
                                s - math.floor(s + 0.5))

    def unit(self, k):
        """The multiplier eps = exp(2 pi i k / symmetry_order)."""
        return np.exp(2j * np.pi * k / self.symmetry_order)

    def _multiplication_matrix(self, k):
        eps = self.unit(k)
        columns = [self.coords(eps), self.coords(eps * self.omega)]
        matrix = np.rint(np.array(columns).T).astype(int)
        if not np.allclose(matrix, np.array(columns).T,
                           atol=max(1e-6, self.tol)):
            raise ValueError("multiplication by %s does not preserve the "
                             "lattice" % eps)
        return matrix

    def unit_matrix(self, k):
        """Integer 2x2 matrix of multiplication by eps_k on (r, s)."""
        return self._unit_matrices[k % self.symmetry_order]

    def to_json(self):
        return {"omega": [self.omega.real, self.omega.imag],
                "symmetryOrder": self.symmetry_order}

    def __repr__(self):
        return "ComplexLattice(omega=%s)" % self.omega


class LatticeFraction():
    """Exact point r + s*omega of (Q L)/L with 0 <= r, s < 1."""
    __slots__ = ('r', 's')

    def __init__(self, r, s=0):
        r, s = as_scalar(r), as_scalar(s)
        self.r = r - math.floor(r)
        self.s = s - math.floor(s)

    @classmethod
    def zero(cls):
        return cls(0, 0)

    def __add__(self, other):
        return LatticeFraction(self.r + other.r, self.s + other.s)

    def __neg__(self):
        return LatticeFraction(-self.r, -self.s)

    def __sub__(self, other):
        return self + (-other)

    def times_unit(self, matrix):
        """eps*alpha for the integer matrix of eps."""
        return LatticeFraction(int(matrix[0][0]) * self.r +
                               int(matrix[0][1]) * self.s,
                               int(matrix[1][0]) * self.r +
                               int(matrix[1][1]) * self.s)

    def is_zero(self):
        return self.r == 0 and self.s == 0

    def order(self):
        """Order of alpha in the group C/L."""
        return (self.r.denominator * self.s.denominator //
                math.gcd(self.r.denominator, self.s.denominator))

    def to_complex(self, lattice):
        return lattice.from_coords(self.r, self.s)

    def __eq__(self, other):
        return (isinstance(other, LatticeFraction) and self.r == other.r and
                self.s == other.s)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('LatticeFraction', self.r, self.s))

    def __lt__(self, other):
        return (self.r, self.s) < (other.r, other.s)

    def to_json(self):
        return ["%s" % self.r, "%s" % self.s]

    def __repr__(self):
        return "(%s + %s*w)" % (self.r, self.s)


def quarter_fractions():
    """The sixteen points of (1/4)L/L."""
    return [LatticeFraction(Fraction(m, 4), Fraction(n, 4))
            for m in range(4) for n in range(4)]


class TorusAutomorphism():
    """Affine automorphism z -> eps_k * z + alpha of C/L.

    Parameters
    ----------
    lattice : ComplexLattice
    k : int
        eps = exp(2 pi i k / lattice.symmetry_order).
    alpha : LatticeFraction
    """
    __slots__ = ('lattice', 'k', 'alpha')

    def __init__(self, lattice, k, alpha):
        self.lattice = lattice
        self.k = k % lattice.symmetry_order
        self.alpha = alpha

    @classmethod
    def identity(cls, lattice):
        return cls(lattice, 0, LatticeFraction.zero())

    @property
    def eps(self):
        return self.lattice.unit(self.k)

    @property
    def eps_matrix(self):
        return self.lattice.unit_matrix(self.k)

    def compose(self, other):
        """self o other: eps1*eps2*z + eps1*alpha2 + alpha1."""
        return TorusAutomorphism(self.lattice, self.k + other.k,
                                 other.alpha.times_unit(self.eps_matrix) +
                                 self.alpha)

    __mul__ = compose

    def inverse(self):
        inv_k = -self.k
        return TorusAutomorphism(self.lattice, inv_k,
                                 -self.alpha.times_unit(
                                     self.lattice.unit_matrix(inv_k)))

    def order(self):
        identity = TorusAutomorphism.identity(self.lattice)
        power, n = self, 1
        while power != identity:
            power = power * self
            n += 1
        return n

    def is_identity(self):
        return self.k == 0 and self.alpha.is_zero()

    def is_translation(self):
        return self.k == 0

    def is_reflection(self):
        """eps = -1, i.e. z -> -z + alpha (an involution with 4 fixed points)."""
        return 2 * self.k == self.lattice.symmetry_order

    def sigma_index(self):
        """t if this is sigma_t: z -> -z + (half period t), else None."""
        if not self.is_reflection():
            return None
        key = (self.alpha.r, self.alpha.s)
        return HALF_PERIODS.index(key) if key in HALF_PERIODS else None

    def __call__(self, z):
        return self.eps * complex(z) + self.alpha.to_complex(self.lattice)

    def __eq__(self, other):
        return (isinstance(other, TorusAutomorphism) and self.k == other.k and
                self.alpha == other.alpha)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('TorusAutomorphism', self.k, self.alpha))

    def __lt__(self, other):
        return (self.k, self.alpha) < (other.k, other.alpha)

    def label(self):
        t = self.sigma_index()
        if t is not None:
            return "sigma%d" % t
        if self.is_identity():
            return "id"
        eps = "" if self.k == 0 else "e^(2pi*i*%d/%d)*" % (
            self.k, self.lattice.symmetry_order)
        return "%sz + %r" % (eps, self.alpha)

    def to_json(self):
        return {"k": self.k, "order": self.lattice.symmetry_order,
                "alpha": self.alpha.to_json(), "label": self.label()}

    def __repr__(self):
        return "TorusAutomorphism(%s)" % self.label()


def torus_sigma(lattice, t):
    """sigma_t: z -> -z + (0, 1/2, omega/2, (1 + omega)/2)[t]."""
    r, s = HALF_PERIODS[t]
    return TorusAutomorphism(lattice, lattice.symmetry_order // 2,
                             LatticeFraction(r, s))


class AutomorphismGroup():
    """Finite subgroup of Aut(C/L) given by its elements.

    Parameters
    ----------
    elements : iterable of TorusAutomorphism
        Must be closed under composition and contain the identity.

    Attributes
    ----------
    kind : str
        'trivial', 'Z2', 'V4', 'Z4' or 'order-n'.
    label : str
        'Gij' for <sigma_i, sigma_j>, 'Zmn' for the cyclic group generated by
        z -> i*z + (m + n*i)/4, '<sigma_t>' / '<...>' for order 2.
    """

    def __init__(self, elements):
        self.elements = frozenset(elements)
        if not self.elements:
            raise ValueError("a group needs at least the identity")
        self.lattice = next(iter(self.elements)).lattice
        for g in self.elements:
            for h in self.elements:
                if g * h not in self.elements:
                    raise ValueError("elements are not closed under "
                                     "composition: %r o %r" % (g, h))
        if TorusAutomorphism.identity(self.lattice) not in self.elements:
            raise ValueError("group does not contain the identity")
        self.kind = self._kind()
        self.label = self._label()

    @property
    def order(self):
        return len(self.elements)

    def sorted_elements(self):
        return sorted(self.elements)

    def reflections(self):
        return [g for g in self.sorted_elements() if g.is_reflection()]

    def translations(self):
        return [g for g in self.sorted_elements()
                if g.is_translation() and not g.is_identity()]

    def _kind(self):
        n = self.order
        if n == 1:
            return 'trivial'
        if n == 2:
            return 'Z2'
        if n == 4:
            orders = [g.order() for g in self.elements]
            return 'Z4' if 4 in orders else 'V4'
        return 'order-%d' % n

    def _label(self):
        if self.kind == 'trivial':
            return 'trivial'
        if self.kind == 'Z2':
            g = next(h for h in self.elements if not h.is_identity())
            return '<%s>' % g.label()
        if self.kind == 'V4':
            sigmas = sorted(t for t in (g.sigma_index() for g in self.elements)
                            if t is not None)
            if len(sigmas) == 2:
                return 'G%d%d' % tuple(sigmas)
        if self.kind == 'Z4' and self.lattice.symmetry_order == 4:
            gen = next(g for g in self.elements if g.k == 1)
            r, s = gen.alpha.r, gen.alpha.s
            if (4 * r).denominator == 1 and (4 * s).denominator == 1:
                return 'Z%d%d' % (int(4 * r), int(4 * s))
        return '{%s}' % ', '.join(g.label() for g in self.sorted_elements())

    def generator(self):
        """Element of maximal order (eps = i for Z4)."""
        if self.kind == 'Z4' and self.lattice.symmetry_order == 4:
            return next(g for g in self.elements if g.k == 1)
        return max(self.sorted_elements(), key=lambda g: g.order())

    def __contains__(self, g):
        return g in self.elements

    def __eq__(self, other):
        return (isinstance(other, AutomorphismGroup) and
                self.elements == other.elements)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.elements)

    def to_json(self):
        return {"label": self.label, "kind": self.kind,
                "elements": [g.to_json() for g in self.sorted_elements()]}

    def __repr__(self):
        return "AutomorphismGroup(%s)" % self.label


def generated_group(generators):
    """Closure of a set of automorphisms under composition."""
    generators = list(generators)
    lattice = generators[0].lattice
    elements = {TorusAutomorphism.identity(lattice)}
    frontier = list(elements)
    while frontier:
        g = frontier.pop()
        for h in generators:
            gh = g * h
            if gh not in elements:
                elements.add(gh)
                frontier.append(gh)
    return AutomorphismGroup(elements)


def diamond_check(group):
    """Whether the quotient of C by the group is a Galois line.

    True iff the multipliers sum to zero, the translation parts sum to zero
    mod L and some multiplier differs from 1 (otherwise the quotient is an
    elliptic curve). The first two conditions make every orbit a hyperplane
    section: by Abel the orbit divisor of z sums to
    (sum eps)*z + sum alpha in C/L.

    Parameters
    ----------
    group : AutomorphismGroup

    Returns
    -------
    bool
    """
    eps_sum = sum((np.asarray(g.eps_matrix)[:, 0] for g in group.elements),
                  np.zeros(2, dtype=int))
    alpha_sum = LatticeFraction.zero()
    for g in group.elements:
        alpha_sum = alpha_sum + g.alpha
    nontrivial = any(g.k != 0 for g in group.elements)
    return bool(np.all(eps_sum == 0) and alpha_sum.is_zero() and nontrivial)


def _sort_key(group):
    if group.kind == 'V4':
        return (0, group.label)
    if group.label.startswith('Z') and len(group.label) == 3:
        pair = (int(group.label[1]), int(group.label[2]))
        if pair in Z4_LABEL_ORDER:
            return (1, Z4_LABEL_ORDER.index(pair))
    return (2, group.label)


def candidate_groups(lattice):
    """All order 4 subgroups of {z -> eps*z + alpha : alpha in (1/4)L/L}."""
    elements = [TorusAutomorphism(lattice, k, alpha)
                for k in range(lattice.symmetry_order)
                for alpha in quarter_fractions()]
    groups = set()
    for g in elements:
        if g.order() == 4:
            groups.add(generated_group([g]))
    involutions = [g for g in elements if g.order() == 2]
    for g, h in itertools.combinations(involutions, 2):
        if g * h == h * g:
            groups.add(generated_group([g, h]))
    return [group for group in groups if group.order == 4]


def enumerate_galois_groups(lattice):
    """Order 4 groups of automorphisms passing :func:`diamond_check`.

    Returns 6 Klein groups G_ij for a generic lattice, 6 + 8 (the cyclic
    groups Z_mn) for the square lattice and 6 for the hexagonal one.

    Parameters
    ----------
    lattice : ComplexLattice

    Returns
    -------
    groups : list of AutomorphismGroup
        Klein groups first (by label), then the cyclic ones.
    """
    if lattice.symmetry_order == 6:
        warnings.warn("hexagonal lattice (j = 0): the Galois line count is "
                      "computed but not covered by the classification of "
                      "the generic and square cases")
    groups = [g for g in candidate_groups(lattice) if diamond_check(g)]
    return sorted(groups, key=_sort_key)


def group_intersection(group_a, group_b):
    """Exact intersection of two groups on the same lattice."""
    if group_a.lattice is not group_b.lattice and \
            abs(group_a.lattice.omega - group_b.lattice.omega) > 1e-12:
        raise ValueError("groups live on different lattices")
    return AutomorphismGroup(group_a.elements & group_b.elements)


# WEIERSTRASS FUNCTION #########################################################
def laurent_coefficients(g2, g3, n_terms=30):
    """Coefficients c_k of wp(z) = 1/z^2 + sum_{k >= 1} c_k z^(2k).

    c_1 = g2/20, c_2 = g3/28 and the recursion from the differential
    equation wp'' = 6 wp^2 - g2/2.
    """
    c = [0j] * (n_terms + 1)
    c[1] = g2 / 20.
    c[2] = g3 / 28.
    for k in range(3, n_terms + 1):
        c[k] = 3. / ((2 * k + 3) * (k - 2)) * sum(c[m] * c[k - 1 - m]
                                                  for m in range(1, k - 1))
    return c


def _wp_series(coeffs, z):
    wp = 1. / z ** 2
    wpp = -2. / z ** 3
    for k in range(1, len(coeffs)):
        wp += coeffs[k] * z ** (2 * k)
        wpp += 2 * k * coeffs[k] * z ** (2 * k - 1)
    return wp, wpp


def wp_eval(lattice, z):
    """wp(z) and wp'(z) of the lattice.

    The argument is reduced mod L, halved until it is well inside the disc
    of convergence of the Laurent series, and the values are doubled back
    with the duplication formula.

    Parameters
    ----------
    lattice : ComplexLattice
    z : complex

    Returns
    -------
    wp, wp_prime : complex
    """
    z = lattice.reduce(z)
    if abs(z) < 1e-12 * max(1., lattice.shortest):
        raise PoleError("z = %s lies on the lattice, wp has a pole" % z)
    n_halvings = 0
    while abs(z) > 0.25 * lattice.shortest:
        z /= 2
        n_halvings += 1
    x, y = _wp_series(lattice._laurent, z)
    for _ in range(n_halvings):
        lam = (6 * x ** 2 - lattice.g2 / 2) / y
        x_new = lam ** 2 / 4 - 2 * x
        y = lam * (x - x_new) - y
        x = x_new
    return complex(x), complex(y)


def wp_lattice_sum(lattice, z, n_max=60):
    """Direct truncated lattice sum for wp and wp'.

    The lattice points outside the square |m|, |n| <= n_max contribute
    sum_k (k+1) z^k w^-(k+2); the odd k cancel and the k = 2, 4 terms are
    restored from G4 = g2/60 and G6 = g3/140 minus their truncated sums, so
    the remainder is of order |z|^6 / n_max^6.
    """
    z = complex(z)
    m, n = np.meshgrid(np.arange(-n_max, n_max + 1),
                       np.arange(-n_max, n_max + 1))
    w = (m + n * lattice.omega).ravel()
    w = w[w != 0]
    if lattice.contains(z, 1e-12):
        raise PoleError("z = %s lies on the lattice, wp has a pole" % z)
    tail_4 = lattice.g2 / 60. - np.sum(w ** -4.)
    tail_6 = lattice.g3 / 140. - np.sum(w ** -6.)
    wp = 1. / z ** 2 + np.sum(1. / (z - w) ** 2 - 1. / w ** 2)
    wp += 3 * z ** 2 * tail_4 + 5 * z ** 4 * tail_6
    wpp = -2. / z ** 3 - 2. * np.sum(1. / (z - w) ** 3)
    wpp += 6 * z * tail_4 + 20 * z ** 3 * tail_6
    return complex(wp), complex(wpp)


def wp_addition(lattice, z1, z2):
    """wp and wp' at z1 + z2 from their values at z1 and z2.

    wp(z1+z2) = lambda^2/4 - wp(z1) - wp(z2) with lambda the slope of the
    chord, and wp'(z1+z2) = -(wp'(z1)(x3-x2) + wp'(z2)(x1-x3))/(x1-x2).
    """
    x1, y1 = wp_eval(lattice, z1)
    x2, y2 = wp_eval(lattice, z2)
    if abs(x1 - x2) < 1e-12 * max(1., abs(x1)):
        raise PoleError("wp(z1) = wp(z2), the chord is undefined")
    lam = (y1 - y2) / (x1 - x2)
    x3 = lam ** 2 / 4 - x1 - x2
    y3 = -(y1 * (x3 - x2) + y2 * (x1 - x3)) / (x1 - x2)
    return x3, y3


def _as_complex(lattice, alpha):
    if isinstance(alpha, LatticeFraction):
        return alpha.to_complex(lattice)
    return complex(alpha)


def torus_point(lattice, alpha, scale=1.):
    """Numeric point (1 : x^2 : x : y) of C for the torus point alpha.

    x = wp(alpha)/scale^2 and y = wp'(alpha)/scale^3, so that scale = Omega_1
    realizes a curve whose lattice is Omega_1 * L. alpha = 0 gives the point
    P_0' = (0 : 1 : 0 : 0) exactly.

    Returns
    -------
    point : numpy array of shape (4,)
        Unit norm.
    """
    z = _as_complex(lattice, alpha)
    if lattice.contains(z, 1e-12):
        return np.array([0, 1, 0, 0], dtype=complex)
    wp, wpp = wp_eval(lattice, z)
    x, y = wp / scale ** 2, wpp / scale ** 3
    if abs(x) > 1:
        # Divide by x^2 so that points near P_0' stay bounded
        point = np.array([1. / x ** 2, 1., 1. / x, y / x ** 2])
    else:
        point = np.array([1., x ** 2, x, y])
    return point / np.linalg.norm(point)


def embedding_residual(point, p, q):
    """max(|F1|, |F2|) at a unit-norm numeric point for 4x^3 + px + q."""
    X, Y, Z, W = np.asarray(point, dtype=complex) / np.linalg.norm(point)
    f1 = X * Y - Z ** 2
    f2 = 4 * Y * Z + p * X * Z + q * X ** 2 - W ** 2
    return float(max(abs(f1), abs(f2)))


def abel_equivalent(lattice, alphas, tol=1e-8):
    """Whether the divisor sum P_alpha_t is linearly equivalent to 4P_0',
    i.e. whether the alphas sum to zero mod L."""
    if all(isinstance(a, LatticeFraction) for a in alphas):
        total = LatticeFraction.zero()
        for a in alphas:
            total = total + a
        return total.is_zero()
    total = sum(_as_complex(lattice, a) for a in alphas)
    return lattice.contains(total, tol)


def normalize_divisor(alphas):
    """beta = -sum(alphas)/4, the translation after which the four points
    sum to zero mod L. Exact for rational input."""
    try:
        return -sum(as_scalar(a) for a in alphas) / 4
    except (ValueError, TypeError):
        return -sum(complex(a) for a in alphas) / 4


# CURVE -> TORUS ###############################################################
def agm(a, b, tol=1e-15, max_iter=100):
    """Arithmetic-geometric mean of two positive numbers."""
    for _ in range(max_iter):
        if abs(a - b) <= tol * abs(a):
            break
        a, b = (a + b) / 2., np.sqrt(a * b)
    return (a + b) / 2.


class CurveUniformization():
    """Periods and torus parametrization of a curve with real roots.

    With e_max > e_mid > e_min the period lattice is Omega_1*Z + Omega_2*Z,
    Omega_1 = pi/AGM(sqrt(e_max-e_min), sqrt(e_max-e_mid)) and
    Omega_2 = i*pi/AGM(sqrt(e_max-e_min), sqrt(e_mid-e_min)); the point
    z of C/L, L = Z + omega*Z, omega = Omega_2/Omega_1, maps to
    x = wp_L(z)/Omega_1^2, y = wp_L'(z)/Omega_1^3.

    Parameters
    ----------
    curve : EllipticCurveModel

    Attributes
    ----------
    lattice : ComplexLattice
    periods : tuple of complex
    torus_to_curve_index : dict
        {t: i} such that the torus involution sigma_t (half period t) is the
        curve involution sigma_i, i.e. wp at half period t equals e_i.
    """

    def __init__(self, curve):
        self.curve = curve
        roots = [float(v) for v in curve.e]
        order = np.argsort(roots)
        e_min, e_mid, e_max = (roots[k] for k in order)
        omega_1 = np.pi / agm(np.sqrt(e_max - e_min), np.sqrt(e_max - e_mid))
        omega_2 = 1j * np.pi / agm(np.sqrt(e_max - e_min),
                                   np.sqrt(e_mid - e_min))
        self.periods = (complex(omega_1), complex(omega_2))
        self.scale = omega_1
        self.lattice = ComplexLattice(omega_2 / omega_1)
        # half period 1/2 -> e_max, omega/2 -> e_min, (1 + omega)/2 -> e_mid
        self.torus_to_curve_index = {0: 0, 1: int(order[2]) + 1,
                                     2: int(order[0]) + 1,
                                     3: int(order[1]) + 1}
        self.curve_to_torus_index = dict(
            (i, t) for t, i in self.torus_to_curve_index.items())

    def xy(self, alpha):
        wp, wpp = wp_eval(self.lattice, _as_complex(self.lattice, alpha))
        return wp / self.scale ** 2, wpp / self.scale ** 3

    def point(self, alpha):
        return torus_point(self.lattice, alpha, scale=self.scale)

    def residual(self, point):
        return embedding_residual(point, float(self.curve.p),
                                  float(self.curve.q))

    def __repr__(self):
        return "CurveUniformization(%r, omega=%s)" % (self.curve,
                                                       self.lattice.omega)


def curve_sample_points(uniformization, n_samples, rng):
    """Random torus arguments and their numeric points on C.

    Parameters
    ----------
    uniformization : CurveUniformization
    n_samples : int
    rng : numpy.random.Generator

    Returns
    -------
    alphas : numpy array of complex, shape (n_samples,)
    points : numpy array, shape (n_samples, 4)
    """
    lattice = uniformization.lattice
    coords = rng.uniform(0.05, 0.95, size=(n_samples, 2))
    alphas = np.array([lattice.from_coords(r, s) for r, s in coords])
    points = np.array([uniformization.point(a) for a in alphas])
    return alphas, points
