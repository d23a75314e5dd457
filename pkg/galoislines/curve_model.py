"""The elliptic quartic C in P^3 embedded by |4P_0|, its pencil of quadrics,
the four cones of the pencil and the tetrahedron of their vertices."""

# License: GNU General Public License v3.0

from __future__ import print_function
from fractions import Fraction
import itertools

from .exact_algebra import (as_scalar, scalar_to_str, ExactPoly,
                            rational_roots, binary_form_resultant,
                            bareiss_determinant)
from .projective import (ProjPoint, ProjPlane, ProjLine, QuadricForm,
                         span_line, quadric_singular_locus)


class SingularCurveError(ValueError):
    """Raised when the cubic 4(x-e1)(x-e2)(x-e3) has a repeated root."""


class NotWeierstrassNormalError(ValueError):
    """Raised when the roots do not sum to zero."""


class NotOnCurveError(ValueError):
    """Raised for coordinates violating y^2 = 4x^3 + px + q."""


class _PencilInfinity():
    """Marker for the pencil member F_1, i.e. b = infinity in b*F_1 + F_2."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_PencilInfinity, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def to_json(self):
        return "inf"


PENCIL_INFINITY = _PencilInfinity()


def _others(i):
    """The two root indices in {1, 2, 3} different from i."""
    return tuple(k for k in (1, 2, 3) if k != i)


class EllipticCurveModel():
    """Linearly normal elliptic quartic y^2 = 4(x-e1)(x-e2)(x-e3) in P^3.

    The curve is the image of (x, y) -> (1 : x^2 : x : y); its ideal is
    generated by F1 = XY - Z^2 and F2 = 4YZ + pXZ + qX^2 - W^2.

    Parameters
    ----------
    e1, e2, e3 : rational (int, Fraction or string)
        Distinct roots with e1 + e2 + e3 = 0.

    Attributes
    ----------
    e : tuple of ExactScalar
        The roots; ``root(i)`` gives e_i for i in {1, 2, 3}.
    p, q : ExactScalar
        Coefficients of 4x^3 + px + q.
    c : tuple
        c_i = e_i^2 + e_j e_k.
    a : tuple
        a_i = (e_i - e_j)(e_i - e_k).
    b : tuple
        b_i = -4 e_i, the pencil parameters of the cones.
    g2, g3 : ExactScalar
        Weierstrass invariants -p and -q.
    j_classical : ExactScalar
        1728 g2^3 / (g2^3 - 27 g3^2); 1728 for the lemniscatic curve.
    F1, F2 : QuadricForm
    """

    def __init__(self, e1, e2, e3):
        e = tuple(as_scalar(v) for v in (e1, e2, e3))
        if len(set(e)) < 3:
            raise SingularCurveError("roots %s contain a repeated root, the "
                                     "cubic is singular"
                                     % ", ".join(scalar_to_str(v) for v in e))
        if sum(e) != 0:
            raise NotWeierstrassNormalError(
                "roots sum to %s, must be 0 (translate x first)"
                % scalar_to_str(sum(e)))
        self.e = e
        e1, e2, e3 = e
        self.p = 4 * (e1 * e2 + e2 * e3 + e3 * e1)
        self.q = -4 * e1 * e2 * e3
        self.c = tuple(self.root(i) ** 2 + self.root(j) * self.root(k)
                       for i, (j, k) in ((i, _others(i)) for i in (1, 2, 3)))
        self.a = tuple((self.root(i) - self.root(j)) *
                       (self.root(i) - self.root(k))
                       for i, (j, k) in ((i, _others(i)) for i in (1, 2, 3)))
        self.b = tuple(-4 * v for v in e)
        self.g2 = -self.p
        self.g3 = -self.q
        self.j_classical = (1728 * self.g2 ** 3 /
                            (self.g2 ** 3 - 27 * self.g3 ** 2))
        self.F1 = QuadricForm.from_monomials({(0, 1): 1, (2, 2): -1})
        self.F2 = QuadricForm.from_monomials({(1, 2): 4, (0, 2): self.p,
                                              (0, 0): self.q, (3, 3): -1})
        expanded = ExactPoly.from_roots(e, leading=4)
        if expanded != self.cubic():
            raise SingularCurveError("4(x-e1)(x-e2)(x-e3) does not expand to "
                                     "4x^3 + px + q")

    @classmethod
    def from_pq(cls, p, q):
        """Curve y^2 = 4x^3 + px + q with rational roots.

        The roots are ordered (largest, smallest, middle), matching the half
        periods 1/2, omega/2, (1 + omega)/2 of the real period lattice.
        """
        p, q = as_scalar(p), as_scalar(q)
        cubic = ExactPoly([q, p, 0, 4])
        roots = rational_roots(cubic)
        if len(roots) < 3:
            raise NotWeierstrassNormalError(
                "4x^3 + (%s)x + (%s) does not split over the rationals; exact "
                "mode needs rational roots" % (scalar_to_str(p),
                                               scalar_to_str(q)))
        if len(set(roots)) < 3:
            raise SingularCurveError("4x^3 + (%s)x + (%s) has a repeated root"
                                     % (scalar_to_str(p), scalar_to_str(q)))
        low, mid, high = roots
        return cls(high, low, mid)

    def root(self, i):
        """e_i for i in {1, 2, 3}."""
        return self.e[i - 1]

    @property
    def is_lemniscatic(self):
        """True iff j = 1728 (written j(C) = 1 in the normalization that
        divides by 1728)."""
        return self.j_classical == 1728

    def cubic(self):
        """4x^3 + px + q as an ExactPoly."""
        return ExactPoly([self.q, self.p, 0, 4])

    def pencil_cubic(self):
        """b^3 + 4pb - 16q, whose roots are the b_i = -4 e_i."""
        return ExactPoly([-16 * self.q, 4 * self.p, 0, 1])

    def pencil_member(self, b):
        """b*F1 + F2, or F1 itself for b = PENCIL_INFINITY."""
        if b is PENCIL_INFINITY:
            return self.F1
        return self.F1.scale(b) + self.F2

    def contains(self, point):
        return self.F1(point) == 0 and self.F2(point) == 0

    def vertex(self, i):
        """Closed form of the cone vertex Q_i."""
        if i == 0:
            return ProjPoint([0, 0, 0, 1])
        return ProjPoint([1, -self.c[i - 1], self.root(i), 0])

    def embed_point(self, x, y):
        return embed_point(self, x, y)

    def to_json(self):
        return {"roots": [scalar_to_str(v) for v in self.e],
                "p": scalar_to_str(self.p),
                "q": scalar_to_str(self.q),
                "c": [scalar_to_str(v) for v in self.c],
                "a": [scalar_to_str(v) for v in self.a],
                "jClassical": scalar_to_str(self.j_classical),
                "isLemniscatic": self.is_lemniscatic,
                "F1": self.F1.to_json(),
                "F2": self.F2.to_json()}

    def __repr__(self):
        return "EllipticCurveModel(e=(%s))" % ", ".join(
            scalar_to_str(v) for v in self.e)


def curve_from_roots(e1, e2, e3):
    """Builds the curve model from the three roots of the Weierstrass cubic.

    Parameters
    ----------
    e1, e2, e3 : rational
        Distinct, summing to zero.

    Returns
    -------
    curve : EllipticCurveModel
    """
    return EllipticCurveModel(e1, e2, e3)


def embed_point(curve, x, y):
    """The point (1 : x^2 : x : y) of C for an affine point of E."""
    x, y = as_scalar(x), as_scalar(y)
    if y * y != curve.cubic()(x):
        raise NotOnCurveError("(%s, %s) is not on y^2 = 4x^3 + px + q: "
                              "%s != %s" % (scalar_to_str(x), scalar_to_str(y),
                                            scalar_to_str(y * y),
                                            scalar_to_str(curve.cubic()(x))))
    return ProjPoint([1, x * x, x, y])


class ConeRecord():
    """Singular member of the pencil of quadrics through C.

    Attributes
    ----------
    b_value : ExactScalar or PENCIL_INFINITY
    quadric : QuadricForm
    vertex : ProjPoint
    index : int
        0 for F1, i for b_i = -4 e_i.
    """

    def __init__(self, b_value, quadric, vertex, index):
        self.b_value = b_value
        self.quadric = quadric
        self.vertex = vertex
        self.index = index

    def to_json(self):
        b = self.b_value
        return {"index": self.index,
                "b": b.to_json() if b is PENCIL_INFINITY else scalar_to_str(b),
                "vertex": self.vertex.to_json()}


def singular_pencil_members(curve):
    """The four cones b*F1 + F2 (b in {inf, b_1, b_2, b_3}) containing C.

    Each member is checked to have rank 3 with the closed form vertex
    Q_0 = (0:0:0:1), Q_i = (1:-c_i:e_i:0).

    Returns
    -------
    cones : list of 4 ConeRecord
    """
    cones = []
    for index, b in enumerate((PENCIL_INFINITY,) + curve.b):
        if b is not PENCIL_INFINITY and curve.pencil_cubic()(b) != 0:
            raise SingularCurveError("b = %s is not a root of the pencil cubic"
                                     % scalar_to_str(b))
        quadric = curve.pencil_member(b)
        rank, kernel = quadric_singular_locus(quadric)
        if rank != 3 or kernel[0] != curve.vertex(index):
            raise SingularCurveError("pencil member %d has rank %d, expected "
                                     "a cone with vertex %s"
                                     % (index, rank, curve.vertex(index)))
        cones.append(ConeRecord(b, quadric, kernel[0], index))
    return cones


class Tetrahedron():
    """The four cone vertices Q_0..Q_3 and the six lines joining them.

    Attributes
    ----------
    vertices : list of 4 ProjPoint
    edges : dict
        {(i, j): ProjLine} for 0 <= i < j <= 3.
    """

    def __init__(self, vertices):
        self.vertices = list(vertices)
        self.edges = {(i, j): span_line(self.vertices[i], self.vertices[j])
                      for i, j in itertools.combinations(range(4), 2)}

    def determinant(self):
        """4x4 determinant of the vertex coordinates (canonical rows)."""
        return bareiss_determinant([list(v.coords) for v in self.vertices])

    def face_determinant(self, curve):
        """det of the rows (1, -c_i, e_i), i = 1..3."""
        return bareiss_determinant([[1, -curve.c[i - 1], curve.root(i)]
                                    for i in (1, 2, 3)])

    def vertex_index(self, point):
        """Index of a vertex equal to point, or None."""
        for k, v in enumerate(self.vertices):
            if v == point:
                return k
        return None

    def to_json(self):
        return {"vertices": [v.to_json() for v in self.vertices],
                "edges": {"%d%d" % key: line.to_json()
                          for key, line in sorted(self.edges.items())}}


def tetrahedron(curve):
    """Tetrahedron of cone vertices; raises if the vertices are coplanar."""
    cones = singular_pencil_members(curve)
    tetra = Tetrahedron([cone.vertex for cone in cones])
    if tetra.determinant() == 0:
        raise SingularCurveError("cone vertices are coplanar")
    return tetra


def noncoplanarity_value(curve):
    """2(e1 - e2)(e2 - e3)(e3 - e1)."""
    e1, e2, e3 = curve.e
    return 2 * (e1 - e2) * (e2 - e3) * (e3 - e1)


def edge_planes(curve, i, j):
    """Plane equations of the edge through Q_i and Q_j.

    For the edge Q_0 Q_i these are Y + c_i X = 0 and Z - e_i X = 0; for
    Q_i Q_j (i, j >= 1, k the third index) they are W = 0 and
    c_k X - Y + 2 e_k Z = 0.

    Returns
    -------
    numerator, denominator : ProjPlane
        Ordered so that numerator/denominator restricted to C generates the
        fixed field of the group of the edge.
    """
    i, j = sorted((i, j))
    if i == 0:
        return (ProjPlane([curve.c[j - 1], 1, 0, 0]),
                ProjPlane([-curve.root(j), 0, 1, 0]))
    k = next(m for m in (1, 2, 3) if m not in (i, j))
    return (ProjPlane([0, 0, 0, 1]),
            ProjPlane([curve.c[k - 1], -1, 2 * curve.root(k), 0]))


def line_meets_curve(curve, line):
    """Exact test whether a line meets C.

    F1 and F2 are restricted to the line s*A + t*B; the line meets C iff the
    two binary quadratics share a zero, i.e. iff their resultant vanishes.
    A restriction that vanishes identically means the line lies on that
    quadric and then the other quadric always has a zero on it.
    """
    f1 = curve.F1.restrict_to_line(line)
    f2 = curve.F2.restrict_to_line(line)
    if all(v == 0 for v in f1) or all(v == 0 for v in f2):
        return True
    return binary_form_resultant(f1, f2, 2, 2) == 0
