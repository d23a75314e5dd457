"""Projections of C from a point of P^3 to the plane: the image quartic (or
the doubled conic for the cone vertices), classification of centers and
exact verification of Galois points of the image."""

# License: GNU General Public License v3.0

from __future__ import print_function
from collections import namedtuple
from fractions import Fraction
import itertools

import sympy

from .exact_algebra import as_scalar, scalar_to_str, mat_inverse, solve_in_span
from .curve_model import tetrahedron
from .function_field import generic_point, CurveFunction
from .galois_analysis import build_v4_records, build_z4_records


class InvalidCenterError(ValueError):
    """Raised for a projection center lying on C."""


class DegeneratePencilError(ValueError):
    """Raised when the elimination resultant vanishes identically."""


class InvalidConjugationError(ValueError):
    """Raised when a space transform does not preserve C and therefore
    induces no map of the projected curve."""


U0, U1, U2, U3 = sympy.symbols('u0 u1 u2 u3')
PLANE_VARS = (U0, U1, U2)


def _rational(value):
    value = as_scalar(value)
    return sympy.Rational(value.numerator, value.denominator)


def _fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _center_basis(P):
    """Columns e_m (m != k) and P, where P_k is the first nonzero coordinate;
    in these coordinates the center is (0 : 0 : 0 : 1)."""
    k = next(n for n, v in enumerate(P.coords) if v != 0)
    columns = [[Fraction(int(r == m)) for r in range(4)]
               for m in range(4) if m != k] + [list(P.coords)]
    return [[columns[c][r] for c in range(4)] for r in range(4)]


class PlaneCurveRecord():
    """Image of C under the projection from a center.

    Attributes
    ----------
    terms : dict
        {(a, b, c): ExactScalar} coefficients of u0^a u1^b u2^c.
    degree : int
        4; the form of a 2:1 projection is the square of a conic.
    center : ProjPoint
    basis : 4x4 list
        Columns are the new coordinate vectors; the last one is the center.
    is_square : bool
    conic : dict or None
        Terms of the conic when the form is a square.
    irreducible : bool
        Irreducibility over Q.
    """

    def __init__(self, terms, center, basis, curve, factors):
        self.terms = terms
        self.degree = max(sum(m) for m in terms)
        self.center = center
        self.basis = basis
        self.curve = curve
        self.factors = factors
        self.is_square = all(mult % 2 == 0 for _, mult in factors)
        self.conic = None
        if self.is_square:
            conic = sympy.Mul(*[f ** (mult // 2) for f, mult in factors])
            self.conic = _poly_terms(conic)
        self.irreducible = (len(factors) == 1 and factors[0][1] == 1)
        self._inverse = mat_inverse(basis)

    def as_sympy(self):
        return sum((_rational(c) * U0 ** a * U1 ** b * U2 ** d
                    for (a, b, d), c in self.terms.items()), sympy.Integer(0))

    def __call__(self, point):
        """Value of the form at plane coordinates (any ring)."""
        total = Fraction(0)
        for (a, b, d), c in self.terms.items():
            total = total + point[0] ** a * point[1] ** b * point[2] ** d * c
        return total

    def project(self, coords):
        """Plane coordinates (u0, u1, u2) of the image of a space point."""
        u = [sum((self._inverse[r][c] * coords[c] for c in range(4)
                  if self._inverse[r][c] != 0), Fraction(0)) for r in range(3)]
        return u

    def project_point(self, point):
        """Exact image of a ProjPoint different from the center."""
        u = self.project(list(point.coords))
        if all(v == 0 for v in u):
            raise InvalidCenterError("%s is the projection center" % (point,))
        return u

    def vanishes_on_curve(self):
        """Exact check that the form vanishes on the image of the generic
        point of C."""
        value = self(self.project(generic_point(self.curve)))
        return value == 0 if isinstance(value, Fraction) else value.is_zero()

    def to_json(self):
        return {"center": self.center.to_json(),
                "degree": self.degree,
                "isSquare": self.is_square,
                "irreducible": self.irreducible,
                "form": {"u0^%d*u1^%d*u2^%d" % m: scalar_to_str(c)
                         for m, c in sorted(self.terms.items())},
                "conic": None if self.conic is None else
                {"u0^%d*u1^%d*u2^%d" % m: scalar_to_str(c)
                 for m, c in sorted(self.conic.items())},
                "basis": [[scalar_to_str(v) for v in row]
                          for row in self.basis]}

    def __repr__(self):
        return "PlaneCurveRecord(center=%s, %s)" % (
            self.center, "conic^2" if self.is_square else
            ("irreducible quartic" if self.irreducible else "quartic"))


def _poly_terms(expr):
    poly = sympy.Poly(sympy.expand(expr), *PLANE_VARS)
    return {monom: _fraction(coeff) for monom, coeff in poly.terms()}


def _split_u3(expr):
    poly = sympy.Poly(sympy.expand(expr), U3)
    return [poly.coeff_monomial(U3 ** k) for k in (2, 1, 0)]


def project_curve(curve, P):
    """Implicit equation of the projection of C from P.

    In coordinates where P = (0 : 0 : 0 : 1) each quadric reads
    A u3^2 + B u3 + C; the image is cut out by the resultant in u3,
    (A1 C2 - A2 C1)^2 - (A1 B2 - A2 B1)(B1 C2 - B2 C1).

    Parameters
    ----------
    curve : EllipticCurveModel
    P : ProjPoint
        Center, not on C.

    Returns
    -------
    record : PlaneCurveRecord
    """
    if curve.contains(P):
        raise InvalidCenterError("center %s lies on the curve" % (P,))
    basis = _center_basis(P)
    u = sympy.Matrix([U0, U1, U2, U3])
    B = sympy.Matrix(4, 4, [_rational(v) for row in basis for v in row])
    parts = []
    for quadric in (curve.F1, curve.F2):
        S = sympy.Matrix(4, 4, [_rational(v) for row in quadric.sym
                                for v in row])
        parts.append(_split_u3(((B * u).T * S * (B * u))[0, 0]))
    (a1, b1, c1), (a2, b2, c2) = parts
    resultant = sympy.expand((a1 * c2 - a2 * c1) ** 2 -
                             (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1))
    if resultant == 0:
        raise DegeneratePencilError("resultant of the quadrics vanishes "
                                    "identically for center %s" % (P,))
    _, factors = sympy.factor_list(resultant, *PLANE_VARS)
    factors = [(f, mult) for f, mult in factors
               if sympy.Poly(f, *PLANE_VARS).total_degree() > 0]
    record = PlaneCurveRecord(_poly_terms(resultant), P, basis, curve, factors)
    if not record.vanishes_on_curve():
        raise DegeneratePencilError("projected form does not vanish on the "
                                    "image of C")
    return record


CenterClass = namedtuple('CenterClass', ['kind', 'vertex', 'record'])
CenterClass.__doc__ = """kind is 'vertex', 'on-galois-line' or 'generic';
vertex is the index k of Q_k, record the GaloisLineRecord containing the
center."""


def classify_center(curve, P, records=None, tol=1e-8):
    """Position of a center relative to the tetrahedron and the Galois lines.

    Parameters
    ----------
    curve : EllipticCurveModel
    P : ProjPoint
    records : list of GaloisLineRecord, optional
        Catalog to test against; the six V4-lines (plus the Z4-lines for
        j = 1728) if None.
    tol : float, optional (default: 1e-8)
        Tolerance for numeric lines.

    Returns
    -------
    center_class : CenterClass
    """
    if curve.contains(P):
        raise InvalidCenterError("center %s lies on the curve" % (P,))
    vertex = tetrahedron(curve).vertex_index(P)
    if vertex is not None:
        return CenterClass('vertex', vertex, None)
    if records is None:
        records = build_v4_records(curve)
        if curve.is_lemniscatic:
            records = records + build_z4_records(curve, tol=tol,
                                                 recover_exact=False)
    for record in records:
        if record.contains_point(P, tol):
            return CenterClass('on-galois-line', None, record)
    return CenterClass('generic', None, None)


def _det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _is_zero(value):
    return value == 0 if isinstance(value, Fraction) else value.is_zero()


def verify_plane_galois_point(record, R, induced_group, kind=None):
    """Whether R is a Galois point of the projected curve for a group.

    The group is given by space transforms of C; they act on the image
    curve birationally through the projection. Checked exactly on the
    generic point c of C: the images pi(M c) lie on the curve, every
    line through R is preserved (R, pi(c) and pi(M c) are collinear), the
    maps are pairwise distinct and form a group of order 4 of the expected
    kind.

    Parameters
    ----------
    record : PlaneCurveRecord
    R : sequence of 3 rationals
        Candidate point, not on the curve.
    induced_group : list of ProjTransform
        Exact space transforms, the identity included.
    kind : str, optional (default: None)
        'V4' or 'Z4' to also require the isomorphism type.

    Returns
    -------
    bool

    Raises
    ------
    InvalidConjugationError
        If a transform does not preserve span{F1, F2}.
    """
    curve = record.curve
    R = [as_scalar(v) for v in R]
    if all(v == 0 for v in R):
        raise ValueError("R = (0 : 0 : 0) is not a point of P^2")
    if record(R) == 0:
        raise InvalidCenterError("R = (%s) lies on the projected curve"
                                 % " : ".join(scalar_to_str(v) for v in R))
    span = [curve.F1.as_vector(), curve.F2.as_vector()]
    for transform in induced_group:
        if not transform.exact:
            raise InvalidConjugationError("plane Galois points are verified "
                                          "with exact transforms only")
        for quadric in (curve.F1, curve.F2):
            if solve_in_span(quadric.transform(transform.matrix).as_vector(),
                             span) is None:
                raise InvalidConjugationError(
                    "transform %s does not preserve the curve" % (transform,))
    if len(induced_group) != 4:
        return False
    for a, b in itertools.combinations(induced_group, 2):
        if a.equals_up_to_scalar(b):
            return False
    for a, b in itertools.product(induced_group, repeat=2):
        if not any((a * b).equals_up_to_scalar(c) for c in induced_group):
            return False
    if kind is not None:
        involutive = all((t * t).is_scalar() for t in induced_group)
        if involutive != (kind == 'V4'):
            return False
    c = generic_point(curve)
    base = record.project(c)
    R_fn = [CurveFunction.constant(v, curve) for v in R]
    for transform in induced_group:
        image = record.project(transform.apply(c))
        if not _is_zero(record(image)):
            return False
        if not _is_zero(_det3([R_fn, base, image])):
            return False
    return True
