"""Exact projective geometry of P^3: points, planes, lines and quadrics."""

# License: GNU General Public License v3.0

from __future__ import print_function
from collections import namedtuple
from fractions import Fraction
import math

import numpy as np
import scipy.linalg

from .exact_algebra import (as_scalar, scalar_to_str, rref, nullspace,
                            matrix_rank, mat_mul, transpose, bareiss_determinant)


class DegenerateSpanError(ValueError):
    """Raised when points or lines do not span the requested subspace."""


def _canonical(coords):
    coords = tuple(as_scalar(c) for c in coords)
    lead = next((c for c in coords if c != 0), None)
    if lead is None:
        raise DegenerateSpanError("all homogeneous coordinates are zero")
    return tuple(c / lead for c in coords)


def _parse_coords(text, sep=':'):
    return [as_scalar(part) for part in text.split(sep)]


class ProjPoint():
    """Point of P^3 with exact homogeneous coordinates (X:Y:Z:W).

    The canonical representative divides by the first nonzero coordinate,
    so equality and serialization are deterministic.
    """
    __slots__ = ('coords',)

    def __init__(self, coords):
        if len(coords) != 4:
            raise DegenerateSpanError("a point of P^3 needs 4 coordinates, "
                                      "got %d" % len(coords))
        self.coords = _canonical(coords)

    @classmethod
    def from_string(cls, text):
        """Parses 'X:Y:Z:W' with rational entries."""
        return cls(_parse_coords(text))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('ProjPoint', self.coords))

    def integral(self):
        """Representative with coprime integer coordinates, first nonzero
        coordinate positive."""
        lcm = 1
        for c in self.coords:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coords]
        g = 0
        for c in ints:
            g = math.gcd(g, abs(c))
        return tuple(c // g for c in ints)

    def to_numpy(self):
        return np.array([float(c) for c in self.coords], dtype=complex)

    def to_json(self):
        return [scalar_to_str(c) for c in self.coords]

    def __repr__(self):
        return "(%s)" % ":".join(scalar_to_str(c) for c in self.coords)


class ProjPlane():
    """Plane of P^3 given by dual coordinates (h0, h1, h2, h3), i.e. the
    zero set of h0*X + h1*Y + h2*Z + h3*W."""
    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        if len(coeffs) != 4:
            raise DegenerateSpanError("a plane of P^3 needs 4 coefficients")
        self.coeffs = _canonical(coeffs)

    def evaluate(self, coords):
        """Dual pairing with a vector of coordinates (any ring)."""
        return sum((h * c for h, c in zip(self.coeffs, coords) if h != 0),
                   Fraction(0))

    def contains(self, point):
        return self.evaluate(point.coords) == 0

    def __eq__(self, other):
        return isinstance(other, ProjPlane) and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('ProjPlane', self.coeffs))

    def to_json(self):
        return [scalar_to_str(c) for c in self.coeffs]

    def to_equation(self, names='XYZW'):
        terms = []
        for h, name in zip(self.coeffs, names):
            if h != 0:
                terms.append("%s*%s" % (scalar_to_str(h), name))
        return " + ".join(terms).replace("+ -", "- ") + " = 0"

    def __repr__(self):
        return "ProjPlane(%s)" % self.to_equation()


class ProjLine():
    """Line of P^3 carried both as a pair of spanning points and as a pair
    of independent cutting planes.

    Use :func:`span_line` or :meth:`ProjLine.from_planes` to construct one;
    both representations are produced at construction and kept consistent.
    """
    __slots__ = ('points', 'planes')

    def __init__(self, points, planes):
        self.points = tuple(points)
        self.planes = tuple(planes)
        for pt in self.points:
            for pl in self.planes:
                if not pl.contains(pt):
                    raise DegenerateSpanError(
                        "inconsistent line: %s does not lie on %s" % (pt, pl))

    @classmethod
    def from_planes(cls, plane_a, plane_b):
        """Line cut out by two distinct planes."""
        rows = [list(plane_a.coeffs), list(plane_b.coeffs)]
        if matrix_rank(rows) < 2:
            raise DegenerateSpanError("planes %s and %s coincide"
                                      % (plane_a, plane_b))
        kernel, _ = rref(nullspace(rows, 4))
        points = [ProjPoint(v) for v in kernel]
        return cls(points, [ProjPlane(r) for r in rref(rows)[0]])

    def contains(self, point):
        return all(pl.contains(point) for pl in self.planes)

    def plucker(self):
        """Plucker coordinates (p01, p02, p03, p12, p13, p23)."""
        a, b = self.points
        return tuple(a[i] * b[j] - a[j] * b[i]
                     for i, j in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                                  (2, 3)])

    def plucker_relation(self):
        p01, p02, p03, p12, p13, p23 = self.plucker()
        return p01 * p23 - p02 * p13 + p03 * p12

    def point_at(self, s, t):
        """The point s*A + t*B of the line."""
        a, b = self.points
        return ProjPoint([as_scalar(s) * x + as_scalar(t) * y
                          for x, y in zip(a, b)])

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return False
        return all(self.contains(p) for p in other.points)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        rows, _ = rref([list(p.coords) for p in self.points])
        return hash(('ProjLine', tuple(tuple(r) for r in rows)))

    def to_json(self):
        return {"points": [p.to_json() for p in self.points],
                "planes": [h.to_json() for h in self.planes]}

    def __repr__(self):
        return "ProjLine(%s, %s)" % self.points


class QuadricForm():
    """Quadric surface given by a symmetric 4x4 matrix S; the quadratic form
    is v^T S v."""
    __slots__ = ('sym',)

    def __init__(self, sym):
        sym = tuple(tuple(as_scalar(v) for v in row) for row in sym)
        for i in range(4):
            for j in range(4):
                if sym[i][j] != sym[j][i]:
                    raise ValueError("quadric matrix is not symmetric at "
                                     "(%d, %d)" % (i, j))
        self.sym = sym

    @classmethod
    def from_monomials(cls, terms):
        """Builds the matrix from a dict {(i, j): coeff} of monomials
        x_i*x_j (i <= j)."""
        sym = [[Fraction(0)] * 4 for _ in range(4)]
        for (i, j), coeff in terms.items():
            coeff = as_scalar(coeff)
            if i == j:
                sym[i][i] += coeff
            else:
                sym[i][j] += coeff / 2
                sym[j][i] += coeff / 2
        return cls(sym)

    def __call__(self, coords):
        """Value of the form at a coordinate vector (any ring)."""
        if isinstance(coords, ProjPoint):
            coords = coords.coords
        total = Fraction(0)
        for i in range(4):
            for j in range(4):
                if self.sym[i][j] != 0:
                    total = total + coords[i] * coords[j] * self.sym[i][j]
        return total

    def __add__(self, other):
        return QuadricForm([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.sym, other.sym)])

    def scale(self, factor):
        factor = as_scalar(factor)
        return QuadricForm([[factor * a for a in row] for row in self.sym])

    def is_zero(self):
        return all(v == 0 for row in self.sym for v in row)

    def transform(self, matrix):
        """Pullback F(M v): matrix M^T S M."""
        return QuadricForm(mat_mul(transpose(matrix),
                                   mat_mul([list(r) for r in self.sym], matrix)))

    def restrict_to_line(self, line):
        """Binary quadratic F(s*A + t*B) as coefficients (t^2, st, s^2)
        lowest power of s first."""
        a, b = line.points
        aa = self(a.coords)
        bb = self(b.coords)
        ab = sum((self.sym[i][j] * a[i] * b[j] for i in range(4)
                  for j in range(4)), Fraction(0))
        return [bb, 2 * ab, aa]

    def as_vector(self):
        return [self.sym[i][j] for i in range(4) for j in range(i, 4)]

    def __eq__(self, other):
        return isinstance(other, QuadricForm) and self.sym == other.sym

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('QuadricForm', self.sym))

    def to_json(self):
        return [[scalar_to_str(v) for v in row] for row in self.sym]


LineIncidence = namedtuple('LineIncidence', ['kind', 'point'])
LineIncidence.__doc__ = """Outcome of intersecting two lines: kind is one of
'disjoint', 'point' or 'equal'; point is set in the 'point' case."""


def span_line(P, Q):
    """The line through two distinct points.

    Parameters
    ----------
    P, Q : ProjPoint

    Returns
    -------
    line : ProjLine
    """
    rows = [list(P.coords), list(Q.coords)]
    if matrix_rank(rows) < 2:
        raise DegenerateSpanError("cannot span a line from %s and %s" % (P, Q))
    planes, _ = rref(nullspace(rows, 4))
    return ProjLine([P, Q], [ProjPlane(h) for h in planes])


def meet_lines(l1, l2):
    """Exact incidence of two lines.

    Returns
    -------
    incidence : LineIncidence
        ('disjoint', None), ('point', P) or ('equal', None).
    """
    rank = matrix_rank([list(p.coords) for p in l1.points + l2.points])
    if rank == 4:
        return LineIncidence('disjoint', None)
    if rank == 2:
        return LineIncidence('equal', None)
    kernel = nullspace([list(h.coeffs) for h in l1.planes + l2.planes], 4)
    return LineIncidence('point', ProjPoint(kernel[0]))


def plane_through(l, P):
    """The unique plane containing a line and a point off it."""
    if l.contains(P):
        raise DegenerateSpanError("%s lies on the line, the plane through "
                                  "them is not unique" % (P,))
    rows = [list(p.coords) for p in l.points] + [list(P.coords)]
    return ProjPlane(nullspace(rows, 4)[0])


def quadric_singular_locus(S):
    """Rank of a quadric and its singular points.

    Parameters
    ----------
    S : QuadricForm
        Nonzero quadric.

    Returns
    -------
    rank, kernel : int, list of ProjPoint
        For rank 3 the kernel holds the single cone vertex.
    """
    if S.is_zero():
        raise ValueError("the zero quadric has no singular locus")
    rows = [list(r) for r in S.sym]
    kernel = nullspace(rows, 4)
    return 4 - len(kernel), [ProjPoint(v) for v in kernel]


def determinant(rows):
    return bareiss_determinant(rows)


# NUMERIC COUNTERPARTS #########################################################
def normalize_vector(v):
    """Unit-norm representative with the largest entry real positive."""
    v = np.asarray(v, dtype=complex)
    k = np.argmax(np.abs(v))
    v = v / v[k]
    return v / np.linalg.norm(v)


class NumericLine():
    """Line of P^3 with complex floating point coordinates.

    Parameters
    ----------
    points : array-like of shape (2, 4)
        Two spanning points; the cutting planes are derived by an SVD null
        space.
    """

    def __init__(self, points):
        pts = np.asarray(points, dtype=complex)
        # Orthonormal basis of the row space
        _, _, vh = np.linalg.svd(pts)
        self.points = vh[:2]
        self.planes = scipy.linalg.null_space(self.points).T
        self.planes = np.array([normalize_vector(h) for h in self.planes])

    @classmethod
    def from_planes(cls, planes):
        kernel = scipy.linalg.null_space(np.asarray(planes, dtype=complex))
        if kernel.shape[1] != 2:
            raise DegenerateSpanError("planes do not cut out a line (kernel "
                                      "dimension %d)" % kernel.shape[1])
        return cls(kernel.T)

    @classmethod
    def from_exact(cls, line):
        return cls([p.to_numpy() for p in line.points])

    def distance_to(self, point):
        """Sine of the angle between a point and the line in C^4."""
        v = normalize_vector(point)
        proj = self.points.T @ (self.points.conj() @ v)
        return float(np.linalg.norm(v - proj))

    def contains(self, point, tol):
        return self.distance_to(point) < tol

    def to_json(self):
        return {"points": [_complex_list(p) for p in self.points],
                "planes": [_complex_list(h) for h in self.planes]}


def _complex_list(vec):
    return [[float(np.real(c)), float(np.imag(c))] for c in vec]


def numeric_meet(l1, l2, tol):
    """Incidence of two numeric lines within a tolerance.

    Returns
    -------
    incidence, residual : LineIncidence, float
        residual is the smallest singular value of the 4x4 matrix of
        spanning points.
    """
    stacked = np.vstack([l1.points, l2.points])
    sing = np.linalg.svd(stacked, compute_uv=False)
    if sing[2] < tol:
        return LineIncidence('equal', None), float(sing[-1])
    if sing[-1] >= tol:
        return LineIncidence('disjoint', None), float(sing[-1])
    _, _, vh = np.linalg.svd(np.vstack([l1.planes, l2.planes]))
    point = normalize_vector(vh[-1].conj())
    return LineIncidence('point', point), float(sing[-1])


def numeric_point_equal(p, q, tol):
    """Projective equality of two coordinate vectors within tol."""
    a = normalize_vector(p)
    b = normalize_vector(q)
    return float(np.linalg.norm(a - b)) < tol
