"""Galois lines of the elliptic quartic: exact V4 certificates on the edges of
the tetrahedron, numeric construction of the Z4-lines of the lemniscatic
curve and the arrangement report."""

# License: GNU General Public License v3.0

from __future__ import print_function
from fractions import Fraction
import abc
import itertools
import json
import warnings

import numpy as np
import six
import sympy

from .exact_algebra import (as_scalar, scalar_to_str, solve_in_span,
                            mat_mul)
from .projective import (ProjPoint, NumericLine, meet_lines, numeric_meet,
                         numeric_point_equal)
from .curve_model import (tetrahedron, edge_planes, line_meets_curve,
                          noncoplanarity_value)
from .function_field import (GROUP_PAIRS, involution_pullback, generic_point,
                             fixed_generator, c_denominator_generator,
                             is_invariant, InvolutionPullback)
from .torus_model import (CurveUniformization, generated_group, torus_sigma,
                          enumerate_galois_groups, group_intersection,
                          TorusAutomorphism)


SCHEMA_VERSION = 1


class CertificateError(ValueError):
    """Raised when a Galois-line certificate check fails.

    Attributes
    ----------
    check : str
        Name of the failed check.
    """

    def __init__(self, check, message):
        super(CertificateError, self).__init__("%s: %s" % (check, message))
        self.check = check


class ConstructionError(ValueError):
    """Raised when the numeric construction of a Z4-line keeps failing."""


def _identity(n=4):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


class ProjTransform():
    """Projective transformation of P^3, equal up to a nonzero scalar.

    Parameters
    ----------
    matrix : 4x4 list of ExactScalar or numpy array
    exact : bool, optional (default: True)
        False for matrices with complex floating point entries.
    """

    def __init__(self, matrix, exact=True):
        self.exact = exact
        if exact:
            self.matrix = [[as_scalar(v) for v in row] for row in matrix]
        else:
            matrix = np.asarray(matrix, dtype=complex)
            self.matrix = matrix / matrix.flat[np.argmax(np.abs(matrix))]

    @classmethod
    def identity(cls, exact=True):
        if exact:
            return cls(_identity())
        return cls(np.eye(4), exact=False)

    def to_numpy(self):
        return np.array([[complex(v) for v in row] for row in self.matrix])

    def __mul__(self, other):
        if self.exact and other.exact:
            return ProjTransform(mat_mul(self.matrix, other.matrix))
        return ProjTransform(self.to_numpy() @ other.to_numpy(), exact=False)

    def __pow__(self, n):
        result = ProjTransform.identity(self.exact)
        for _ in range(n):
            result = result * self
        return result

    def apply(self, coords):
        """Image of a coordinate vector; the entries may be CurveFunctions."""
        if not self.exact:
            return self.matrix @ np.asarray(coords, dtype=complex)
        return [sum((m * c for m, c in zip(row, coords) if m != 0),
                    Fraction(0)) for row in self.matrix]

    def equals_up_to_scalar(self, other, tol=1e-8):
        if self.exact and other.exact:
            a = [v for row in self.matrix for v in row]
            b = [v for row in other.matrix for v in row]
            k = next(n for n, v in enumerate(a) if v != 0)
            if b[k] == 0:
                return False
            ratio = a[k] / b[k]
            return all(x == ratio * y for x, y in zip(a, b))
        a = self.to_numpy().ravel()
        b = other.to_numpy().ravel()
        k = np.argmax(np.abs(a))
        if abs(b[k]) < tol:
            return False
        return bool(np.linalg.norm(a / a[k] - b / b[k]) < tol * 10)

    def is_scalar(self, tol=1e-8):
        return self.equals_up_to_scalar(ProjTransform.identity(self.exact),
                                        tol)

    def to_json(self):
        if self.exact:
            return [[scalar_to_str(v) for v in row] for row in self.matrix]
        return [[[float(v.real), float(v.imag)] for v in row]
                for row in self.to_numpy()]

    def __repr__(self):
        return "ProjTransform(%s)" % self.to_json()


def automorphism_matrix(curve, sigma):
    """Matrix realizing an involution of C on P^3.

    Clearing the denominator (x - e_i)^2 of (1 : sigma^*(x)^2 : sigma^*(x) :
    sigma^*(y)) gives the rows (x-e_i)^2, (e_i x + a_i - e_i^2)^2,
    (e_i x + a_i - e_i^2)(x - e_i) and a_i y in the basis (1, x^2, x, y).

    Parameters
    ----------
    curve : EllipticCurveModel
    sigma : InvolutionPullback or int

    Returns
    -------
    transform : ProjTransform
        M with M (1 : x^2 : x : y) = (1 : x'^2 : x' : y') on the generic
        point, certified through the function field.
    """
    index = sigma.index if isinstance(sigma, InvolutionPullback) else sigma
    if index == 0:
        matrix = _identity()
        matrix[3][3] = Fraction(-1)
    else:
        e = curve.root(index)
        a = curve.a[index - 1]
        shift = a - e * e
        matrix = [[e * e, 1, -2 * e, 0],
                  [shift * shift, e * e, 2 * e * shift, 0],
                  [-e * shift, e, a - 2 * e * e, 0],
                  [0, 0, 0, a]]
    transform = ProjTransform(matrix)
    pullback = (sigma if isinstance(sigma, InvolutionPullback)
                else involution_pullback(curve, index))
    if not realizes_pullback(curve, transform, pullback):
        raise CertificateError("realization", "matrix of sigma_%d does not "
                               "act as its pullback on (1 : x^2 : x : y)"
                               % index)
    return transform


def realizes_pullback(curve, transform, sigma):
    """Whether M (1, x^2, x, y) is proportional to the pulled back point."""
    image = transform.apply(generic_point(curve))
    x_img, y_img = sigma.x_image, sigma.y_image
    target = [1, x_img * x_img, x_img, y_img]
    return all(image[k] * target[0] == image[0] * target[k]
               for k in range(1, 4))


def _cofactor_det(rows):
    """Determinant by cofactor expansion; entries from any commutative ring."""
    if len(rows) == 1:
        return rows[0][0]
    total = None
    for col, entry in enumerate(rows[0]):
        if isinstance(entry, Fraction) and entry == 0:
            continue
        minor = [row[:col] + row[col + 1:] for row in rows[1:]]
        term = _cofactor_det(minor) * entry
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return Fraction(0) if total is None else total


def _vanishes(value):
    if isinstance(value, Fraction):
        return value == 0
    return value.is_zero()


def _numeric_quadric_matrix(quadric):
    return np.array([[float(v) for v in row] for row in quadric.sym])


def _upper(matrix):
    return np.array([matrix[i, j] for i in range(4) for j in range(i, 4)])


# RECORDS ######################################################################
@six.add_metaclass(abc.ABCMeta)
class GaloisLineRecord():
    """A Galois line with its torus group and matrix realization.

    Parameters
    ----------
    line : ProjLine or NumericLine
    group : AutomorphismGroup
        Group of the covering, as automorphisms of C/L.
    realization : dict
        {TorusAutomorphism: ProjTransform}, one matrix per group element.
    label : str
        'Gij' for the edge Q_i Q_j, 'Zmn' for l(m, n).
    incident_vertices : list of int
        Indices k of the vertices Q_k lying on the line.

    Attributes
    ----------
    kind : str
        'V4' or 'Z4'.
    certificate : str
        'exact' or 'numeric'.
    """

    def __init__(self, line, group, realization, label, incident_vertices):
        self.line = line
        self.group = group
        self.realization = realization
        self.label = label
        self.incident_vertices = list(incident_vertices)
        self.kind = group.kind
        self.checks = []

    @abc.abstractproperty
    def certificate(self):
        """'exact' or 'numeric'."""
        pass

    @abc.abstractmethod
    def numeric_line(self):
        """The line as a NumericLine."""
        pass

    @abc.abstractmethod
    def contains_point(self, point, tol=1e-8):
        pass

    def transforms(self):
        return [self.realization[g] for g in self.group.sorted_elements()]

    def pointwise_fixed_elements(self):
        """Labels of the group elements acting as the identity on the line."""
        fixed = []
        for g in self.group.sorted_elements():
            if self._fixes_pointwise(self.realization[g]):
                fixed.append(g.label())
        return fixed

    @abc.abstractmethod
    def _fixes_pointwise(self, transform):
        pass

    def to_json(self):
        return {"label": self.label,
                "kind": self.kind,
                "certificate": self.certificate,
                "line": self.line.to_json(),
                "incidentVertices": ["Q%d" % k for k in self.incident_vertices],
                "group": self.group.to_json(),
                "matrices": [m.to_json() for m in self.transforms()],
                "pointwiseFixed": self.pointwise_fixed_elements(),
                "checks": [{"name": name, "passed": passed,
                            "residual": residual}
                           for name, passed, residual in self.checks]}

    def __repr__(self):
        return "%s(%s, %s)" % (self.__class__.__name__, self.label,
                               self.certificate)


class V4LineRecord(GaloisLineRecord):
    """Edge Q_i Q_j of the tetrahedron with the group <sigma_i, sigma_j>;
    everything exact."""

    certificate = 'exact'

    def __init__(self, line, group, realization, label, incident_vertices,
                 pair, generator=None):
        GaloisLineRecord.__init__(self, line, group, realization, label,
                                  incident_vertices)
        self.pair = pair
        self.generator = generator

    def numeric_line(self):
        return NumericLine.from_exact(self.line)

    def contains_point(self, point, tol=1e-8):
        if isinstance(point, ProjPoint):
            return self.line.contains(point)
        return self.numeric_line().contains(point, tol)

    def _fixes_pointwise(self, transform):
        images = [transform.apply(p.coords) for p in self.line.points]
        scalars = set()
        for point, image in zip(self.line.points, images):
            try:
                scaled = ProjPoint(image)
            except ValueError:
                return False
            if scaled != point:
                return False
            k = next(n for n, v in enumerate(point.coords) if v != 0)
            scalars.add(image[k] / point.coords[k])
        return len(scalars) == 1

    def to_json(self):
        out = GaloisLineRecord.to_json(self)
        if self.generator is not None:
            out["fixedFieldGenerator"] = self.generator.to_json()
        return out


class Z4LineRecord(GaloisLineRecord):
    """Line l(m, n) of the lemniscatic curve, constructed numerically.

    Attributes
    ----------
    tolerance : float
    recovered : sympy.Matrix or None
        Generator matrix with entries in Q(i) when the exact recovery
        succeeded.
    """

    certificate = 'numeric'

    def __init__(self, line, group, realization, label, incident_vertices,
                 tolerance, recovered=None):
        GaloisLineRecord.__init__(self, line, group, realization, label,
                                  incident_vertices)
        self.tolerance = tolerance
        self.recovered = recovered

    @property
    def mn(self):
        return int(self.label[1]), int(self.label[2])

    def numeric_line(self):
        return self.line

    def contains_point(self, point, tol=None):
        tol = self.tolerance if tol is None else tol
        coords = point.to_numpy() if isinstance(point, ProjPoint) else point
        return self.line.contains(coords, tol)

    def _fixes_pointwise(self, transform):
        m = transform.to_numpy()
        images = [m @ p for p in self.line.points]
        ratios = [np.vdot(p, v) / np.vdot(p, p)
                  for p, v in zip(self.line.points, images)]
        residual = max(np.linalg.norm(v - r * p) / max(np.linalg.norm(v), 1e-300)
                       for p, v, r in zip(self.line.points, images, ratios))
        return bool(residual < self.tolerance and
                    abs(ratios[0] - ratios[1]) < self.tolerance *
                    max(abs(ratios[0]), 1.))

    def to_json(self):
        out = GaloisLineRecord.to_json(self)
        out["tolerance"] = self.tolerance
        if self.recovered is not None:
            out["recoveredGenerator"] = [[str(v) for v in row] for row in
                                         self.recovered.tolist()]
        return out


# V4 LINES #####################################################################
def build_v4_records(curve, uniformization=None):
    """The six edges of the tetrahedron as V4-lines.

    The edge Q_0 Q_i carries <sigma_0, sigma_i> and Y + c_i X = Z - e_i X = 0,
    the edge Q_i Q_j carries <sigma_i, sigma_j> and c_k X - Y + 2 e_k Z = W = 0.

    Parameters
    ----------
    curve : EllipticCurveModel
    uniformization : CurveUniformization, optional
        Supplies the lattice of the torus groups; computed if not given.

    Returns
    -------
    records : list of 6 V4LineRecord
    """
    if uniformization is None:
        uniformization = CurveUniformization(curve)
    lattice = uniformization.lattice
    tetra = tetrahedron(curve)
    matrices = [automorphism_matrix(curve, i) for i in range(4)]
    records = []
    for i, j in GROUP_PAIRS:
        line = tetra.edges[(i, j)]
        for plane in edge_planes(curve, i, j):
            if not all(plane.contains(p) for p in line.points):
                raise CertificateError("line-equations", "plane %s misses the "
                                       "edge Q%dQ%d" % (plane, i, j))
        t_i = uniformization.curve_to_torus_index[i]
        t_j = uniformization.curve_to_torus_index[j]
        s_i, s_j = torus_sigma(lattice, t_i), torus_sigma(lattice, t_j)
        group = generated_group([s_i, s_j])
        realization = {TorusAutomorphism.identity(lattice):
                       ProjTransform.identity(),
                       s_i: matrices[i], s_j: matrices[j],
                       s_i * s_j: matrices[i] * matrices[j]}
        records.append(V4LineRecord(line, group, realization,
                                    "G%d%d" % (i, j), [i, j], (i, j),
                                    generator=fixed_generator(curve, (i, j))))
    return records


# CERTIFICATES #################################################################
class CertificateReport():
    """Outcome of :func:`verify_galois_certificate`.

    Attributes
    ----------
    label : str
    mode : str
        'exact' or 'numeric'.
    checks : list of (name, passed, residual)
    strict : bool
        Whether a failed check raises at once.
    """

    def __init__(self, label, mode, strict=True):
        self.label = label
        self.mode = mode
        self.strict = strict
        self.checks = []

    def add(self, name, passed, residual=0.):
        self.checks.append((name, bool(passed), float(residual)))
        if self.strict and not passed:
            raise CertificateError(name, "line %s failed with residual %.3g"
                                   % (self.label, residual))

    @property
    def passed(self):
        return all(passed for _, passed, _ in self.checks)

    def to_json(self):
        return {"label": self.label, "mode": self.mode, "passed": self.passed,
                "checks": [{"name": n, "passed": p, "residual": r}
                           for n, p, r in self.checks]}


def _exact_plane_scalar(plane, transform):
    """lambda with plane o M = lambda * plane, or None."""
    image = [sum((plane.coeffs[r] * transform.matrix[r][c] for r in range(4)),
                 Fraction(0)) for c in range(4)]
    k = next(n for n, v in enumerate(plane.coeffs) if v != 0)
    ratio = image[k] / plane.coeffs[k]
    if all(v == ratio * h for v, h in zip(image, plane.coeffs)):
        return ratio
    return None


def _numeric_plane_scalar(plane, matrix):
    image = plane @ matrix
    ratio = np.vdot(plane, image) / np.vdot(plane, plane)
    residual = np.linalg.norm(image - ratio * plane) / max(
        np.linalg.norm(image), 1e-300)
    return ratio, residual


def _numeric_span_residual(curve, matrix):
    """Relative distance of F_k o M from span{F1, F2}."""
    basis = np.array([_upper(_numeric_quadric_matrix(curve.F1)),
                      _upper(_numeric_quadric_matrix(curve.F2))]).T
    residual = 0.
    for quadric in (curve.F1, curve.F2):
        s = _numeric_quadric_matrix(quadric)
        pulled = _upper(matrix.T @ s @ matrix)
        coeffs = np.linalg.lstsq(basis.astype(complex), pulled, rcond=None)[0]
        residual = max(residual, np.linalg.norm(basis @ coeffs - pulled) /
                       max(np.linalg.norm(pulled), 1e-300))
    return residual


def _numeric_disjointness(curve, line):
    """|Res| of the restrictions of F1, F2 to a numeric line, normalized."""
    a, b = line.points
    restricted = []
    for quadric in (curve.F1, curve.F2):
        s = _numeric_quadric_matrix(quadric)
        coeffs = np.array([b @ s @ b, 2 * a @ s @ b, a @ s @ a])
        restricted.append(coeffs / np.linalg.norm(coeffs))
    (f0, f1, f2), (g0, g1, g2) = restricted
    sylvester = np.array([[f2, f1, f0, 0], [0, f2, f1, f0],
                          [g2, g1, g0, 0], [0, g2, g1, g0]])
    return abs(np.linalg.det(sylvester))


def verify_galois_certificate(record, curve, n_samples=10, seed=42,
                              uniformization=None, strict=True):
    """Checks that a record describes a Galois line.

    (a) the line misses C; (b) every group matrix fixes every plane through
    the line with one common scalar, so the projection from the line is
    invariant; (c) every matrix maps span{F1, F2} into itself; (d) the
    matrices multiply like the torus group and are pairwise distinct;
    (e) the group orbit of a point of C spans a plane through the line.
    V4 records are checked exactly, (e) on the generic point of the
    function field; Z4 records within their tolerance on torus samples.

    Parameters
    ----------
    record : GaloisLineRecord
    curve : EllipticCurveModel
    n_samples : int, optional (default: 10)
        Number of sampled orbits in numeric mode.
    seed : int, optional (default: 42)
    uniformization : CurveUniformization, optional
        Reused for the numeric samples.
    strict : bool, optional (default: True)
        If False, every check is run and the failures are only recorded in
        the report.

    Returns
    -------
    report : CertificateReport

    Raises
    ------
    CertificateError
        Naming the first failed check. Only raised if strict.
    """
    report = CertificateReport(record.label, record.certificate, strict)
    record.checks = report.checks
    if record.certificate == 'exact':
        _verify_exact(record, curve, report)
    else:
        if uniformization is None:
            uniformization = CurveUniformization(curve)
        _verify_numeric(record, curve, report, n_samples,
                        np.random.default_rng(seed), uniformization)
    return report


def _group_table(record, equal):
    elements = record.group.sorted_elements()
    for g, h in itertools.product(elements, repeat=2):
        if not equal(record.realization[g] * record.realization[h],
                     record.realization[g * h]):
            return False
    for g, h in itertools.combinations(elements, 2):
        if equal(record.realization[g], record.realization[h]):
            return False
    return True


def _verify_exact(record, curve, report):
    line = record.line
    report.add("line-disjoint", not line_meets_curve(curve, line))
    transforms = record.transforms()
    scalars_ok = True
    for transform in transforms:
        scalars = [_exact_plane_scalar(plane, transform)
                   for plane in line.planes]
        if None in scalars or scalars[0] != scalars[1]:
            scalars_ok = False
    report.add("planes-fixed", scalars_ok)
    span = [curve.F1.as_vector(), curve.F2.as_vector()]
    report.add("curve-preserved", all(
        solve_in_span(quadric.transform(t.matrix).as_vector(), span)
        is not None for t in transforms for quadric in (curve.F1, curve.F2)))
    report.add("group-table", _group_table(
        record, lambda a, b: a.equals_up_to_scalar(b)))
    point = generic_point(curve)
    orbit = [t.apply(point) for t in transforms]
    a, b = [list(p.coords) for p in line.points]
    coplanar = all(_vanishes(_cofactor_det([orbit[0], other, a, b]))
                   for other in orbit[1:])
    report.add("orbit-coplanar", coplanar)


def _verify_numeric(record, curve, report, n_samples, rng, uniformization):
    tol = record.tolerance
    line = record.numeric_line()
    report.add("line-disjoint", _numeric_disjointness(curve, line) > tol,
               _numeric_disjointness(curve, line))
    worst = 0.
    for transform in record.transforms():
        matrix = transform.to_numpy()
        ratios = []
        for plane in line.planes:
            ratio, residual = _numeric_plane_scalar(plane, matrix)
            ratios.append(ratio)
            worst = max(worst, residual)
        worst = max(worst, abs(ratios[0] - ratios[1]) / max(abs(ratios[0]),
                                                            1e-300))
    report.add("planes-fixed", worst < tol, worst)
    span_residual = max(_numeric_span_residual(curve, t.to_numpy())
                        for t in record.transforms())
    report.add("curve-preserved", span_residual < tol, span_residual)
    report.add("group-table", _group_table(
        record, lambda a, b: a.equals_up_to_scalar(b, tol)))
    worst = 0.
    for _ in range(n_samples):
        z = uniformization.lattice.from_coords(*rng.uniform(0.05, 0.95, 2))
        orbit = np.array([uniformization.point(g(z))
                          for g in record.group.sorted_elements()])
        stacked = np.vstack([orbit, line.points])
        sing = np.linalg.svd(stacked, compute_uv=False)
        worst = max(worst, sing[-1] / sing[0])
    report.add("orbit-coplanar", worst < tol, worst)


# Z4 LINES #####################################################################
def _fit_generator_matrix(uniformization, generator, rng, n_samples):
    """Numeric matrix M with M P(z) ~ P(g z) on sampled torus points.

    Every pair contributes the 2x2 minors of [M P | Q], linear in the 16
    entries of M; the solution is the right singular vector of the smallest
    singular value.

    Returns
    -------
    matrix, residual, gap : numpy array, float, float
        residual and gap are the smallest and second smallest singular values
        relative to the largest.
    """
    lattice = uniformization.lattice
    rows = []
    for _ in range(n_samples):
        z = lattice.from_coords(*rng.uniform(0.05, 0.95, 2))
        P = uniformization.point(z)
        Q = uniformization.point(generator(z))
        for a, b in itertools.combinations(range(4), 2):
            row = np.zeros(16, dtype=complex)
            row[4 * a:4 * a + 4] = Q[b] * P
            row[4 * b:4 * b + 4] = -Q[a] * P
            rows.append(row)
    _, sing, vh = np.linalg.svd(np.array(rows))
    matrix = vh[-1].conj().reshape(4, 4)
    return matrix, sing[-1] / sing[0], sing[-2] / sing[0]


def _orbit_plane(uniformization, group, z):
    """Plane through the group orbit of z with its conditioning.

    Returns
    -------
    plane, residual, conditioning : numpy array, float, float
        residual is the relative distance of the orbit from being coplanar,
        conditioning the relative third singular value (small when the orbit
        points are nearly collinear).
    """
    orbit = np.array([uniformization.point(g(z))
                      for g in group.sorted_elements()])
    _, sing, vh = np.linalg.svd(orbit)
    plane = vh[-1].conj()
    return plane / np.linalg.norm(plane), sing[-1] / sing[0], sing[2] / sing[0]


def _good_orbit_planes(uniformization, group, rng, tol, count, min_cond=1e-6,
                       max_draws=50):
    planes = []
    for _ in range(max_draws):
        z = uniformization.lattice.from_coords(*rng.uniform(0.05, 0.95, 2))
        plane, residual, conditioning = _orbit_plane(uniformization, group, z)
        if residual > tol:
            raise ConstructionError("orbit of %s under %s is not coplanar "
                                    "(residual %.3g)" % (z, group.label,
                                                         residual))
        if conditioning < min_cond:
            warnings.warn("orbit plane of %s badly conditioned (%.3g), "
                          "resampling" % (group.label, conditioning))
            continue
        if planes:
            stacked = np.vstack(planes + [plane])
            sing = np.linalg.svd(stacked, compute_uv=False)
            if sing[-1] / sing[0] < min_cond:
                continue
        planes.append(plane)
        if len(planes) == count:
            return planes
    raise ConstructionError("no %d independent orbit planes for %s after %d "
                            "draws" % (count, group.label, max_draws))


def recover_gaussian_rational(curve, matrix, max_den=1000, tol=1e-9):
    """Tries to read a numeric matrix as one with entries in Q(i).

    The matrix is scaled to make its largest entry 1, the real and imaginary
    parts are rounded with Fraction.limit_denominator and the candidate is
    accepted only if it preserves span{F1, F2} exactly and its fourth power
    is scalar.

    Returns
    -------
    recovered : sympy.Matrix or None
    """
    scaled = matrix / matrix.flat[np.argmax(np.abs(matrix))]
    entries = []
    for v in scaled.ravel():
        re = Fraction(float(v.real)).limit_denominator(max_den)
        im = Fraction(float(v.imag)).limit_denominator(max_den)
        if abs(complex(float(re), float(im)) - v) > tol:
            return None
        entries.append(sympy.Rational(re.numerator, re.denominator) +
                       sympy.I * sympy.Rational(im.numerator, im.denominator))
    candidate = sympy.Matrix(4, 4, entries)
    quadrics = [sympy.Matrix(4, 4, [sympy.Rational(v.numerator, v.denominator)
                                    for row in q.sym for v in row])
                for q in (curve.F1, curve.F2)]
    basis = sympy.Matrix.hstack(*[_sympy_upper(q) for q in quadrics])
    for quadric in quadrics:
        pulled = _sympy_upper((candidate.T * quadric * candidate).expand())
        try:
            basis.gauss_jordan_solve(pulled)
        except ValueError:
            return None
    fourth = (candidate ** 4).expand()
    if not (fourth - fourth[0, 0] * sympy.eye(4)).expand().is_zero_matrix:
        return None
    return candidate


def _sympy_upper(matrix):
    return sympy.Matrix([matrix[i, j] for i in range(4) for j in range(i, 4)])


def build_z4_records(curve, tol=1e-8, seed=42, n_samples=8, max_attempts=5,
                     recover_exact=True, uniformization=None, verbosity=0):
    """The eight Z4-lines l(m, n) of a curve with j = 1728.

    For each cyclic group generated by z -> i*z + (m + n*i)/4 the generator
    matrix is fitted to sampled orbit pairs, the line is cut out by two
    orbit planes and a third orbit plane must contain it.

    Parameters
    ----------
    curve : EllipticCurveModel
        Must be lemniscatic.
    tol : float, optional (default: 1e-8)
    seed : int, optional (default: 42)
    n_samples : int, optional (default: 8)
        Sampled pairs for the matrix fit (at least 5).
    max_attempts : int, optional (default: 5)
        Redraws before a ConstructionError.
    recover_exact : bool, optional (default: True)
        Try to recover the generator matrix over Q(i).

    Returns
    -------
    records : list of 8 Z4LineRecord
    """
    if not curve.is_lemniscatic:
        raise ConstructionError("curve %r has j = %s, Z4-lines exist only "
                                "for j = 1728" % (curve,
                                                  scalar_to_str(curve.j_classical)))
    if n_samples < 5:
        raise ValueError("n_samples = %d, but must be at least 5" % n_samples)
    if uniformization is None:
        uniformization = CurveUniformization(curve)
    if uniformization.lattice.symmetry_order != 4:
        raise ConstructionError("period lattice of %r not recognized as "
                                "square (omega = %s)"
                                % (curve, uniformization.lattice.omega))
    rng = np.random.default_rng(seed)
    vertices = [v.to_numpy() for v in tetrahedron(curve).vertices]
    groups = [g for g in enumerate_galois_groups(uniformization.lattice)
              if g.kind == 'Z4']
    records = []
    for group in groups:
        if verbosity > 1:
            print("\n    Constructing %s" % group.label)
        record = None
        for attempt in range(max_attempts):
            try:
                record = _construct_z4_line(curve, uniformization, group, rng,
                                            tol, n_samples, vertices)
                break
            except ConstructionError as error:
                if attempt == max_attempts - 1:
                    raise
                warnings.warn("%s, retrying" % error)
        if recover_exact:
            generator = record.realization[group.generator()].to_numpy()
            record.recovered = recover_gaussian_rational(curve, generator)
            if record.recovered is None:
                warnings.warn("no Q(i) form found for the generator of %s, "
                              "keeping the numeric certificate" % group.label)
        records.append(record)
    return records


def _construct_z4_line(curve, uniformization, group, rng, tol, n_samples,
                       vertices):
    generator = group.generator()
    matrix, residual, gap = _fit_generator_matrix(uniformization, generator,
                                                  rng, n_samples)
    if residual > tol or gap < 1e-6:
        raise ConstructionError("matrix fit for %s failed (residual %.3g, "
                                "gap %.3g)" % (group.label, residual, gap))
    h1, h2, h3 = _good_orbit_planes(uniformization, group, rng, tol, 3)
    line = NumericLine.from_planes([h1, h2])
    miss = max(abs(h3 @ p) for p in line.points)
    if miss > tol:
        raise ConstructionError("third orbit plane of %s misses the line by "
                                "%.3g" % (group.label, miss))
    lattice = uniformization.lattice
    realization = {}
    power = TorusAutomorphism.identity(lattice)
    for k in range(4):
        realization[power] = ProjTransform(np.linalg.matrix_power(matrix, k),
                                           exact=False)
        power = generator * power
    incident = [k for k, v in enumerate(vertices)
                if line.contains(v, np.sqrt(tol))]
    return Z4LineRecord(line, group, realization, group.label, incident, tol)


# ARRANGEMENT ##################################################################
# Pairs of Z4-lines meeting at a vertex, by the torus index t of the shared
# involution sigma_t
Z4_PAIRINGS = [(("Z00", "Z22"), 0), (("Z20", "Z02"), 3), (("Z11", "Z33"), 2),
               (("Z31", "Z13"), 1)]


class ArrangementReport():
    """Catalog of Galois lines with incidences, counts, verified claims and
    observed discrepancies.

    Attributes
    ----------
    curve : EllipticCurveModel
    lines : list of GaloisLineRecord
    incidence : list of dict
        One entry per pair of lines.
    counts : dict
    claims : list of dict
        {"name", "status", "residual", "detail"}.
    discrepancies : list of dict
    """

    def __init__(self, curve, lines, incidence, counts, claims,
                 discrepancies):
        self.curve = curve
        self.lines = lines
        self.incidence = incidence
        self.counts = counts
        self.claims = claims
        self.discrepancies = discrepancies

    @property
    def passed(self):
        return all(claim["status"] == "pass" for claim in self.claims)

    def claim(self, name):
        return next(c for c in self.claims if c["name"] == name)

    def to_json(self):
        return {"schemaVersion": SCHEMA_VERSION,
                "curve": self.curve.to_json(),
                "lines": [record.to_json() for record in self.lines],
                "incidence": self.incidence,
                "counts": self.counts,
                "claims": self.claims,
                "discrepancies": self.discrepancies}

    def dumps(self, indent=2):
        return json.dumps(self.to_json(), indent=indent)

    def to_text(self):
        out = ["Curve %r, j = %s" % (self.curve,
                                     scalar_to_str(self.curve.j_classical)),
               "Galois lines: %d (%d V4, %d Z4)" % (
                   self.counts["lines"], self.counts["V4"], self.counts["Z4"])]
        for record in self.lines:
            out.append("    %s  %s  %s  through %s" % (
                record.label, record.kind, record.certificate,
                ", ".join("Q%d" % k for k in record.incident_vertices) or "-"))
        out.append("Claims:")
        for claim in self.claims:
            out.append("    [%s] %s %s" % (claim["status"], claim["name"],
                                          claim["detail"]))
        if self.discrepancies:
            out.append("Discrepancies:")
            for item in self.discrepancies:
                out.append("    %s: %s" % (item["name"], item["detail"]))
        return "\n".join(out)


def _claim(name, ok, residual=0., detail=""):
    return {"name": name, "status": "pass" if ok else "fail",
            "residual": float(residual), "detail": detail}


class GaloisLineAnalysis():
    r"""Catalog and arrangement of the Galois lines of an elliptic quartic.

    Builds the six exact V4-lines and, for j = 1728, the eight numeric
    Z4-lines, certifies each of them and checks the arrangement: lines
    meet exactly when their groups share an involution z -> -z + alpha, the
    meeting point is the vertex of the cone of that involution, and no two
    lines carry the same group.

    Parameters
    ----------
    curve : EllipticCurveModel
    tol : float, optional (default: 1e-8)
        Tolerance of the numeric certificates.
    seed : int, optional (default: 42)
        Seed for default_rng.
    n_samples : int, optional (default: 10)
        Sampled orbits per numeric certificate.
    recover_exact : bool, optional (default: True)
        Attempt Q(i) recovery of the Z4 generators.
    incidence_tol : float, optional (default: None)
        Tolerance for numeric line meets; sqrt(tol) if None.
    verbosity : int, optional (default: 0)
        Level of verbosity.

    Attributes
    ----------
    records : list of GaloisLineRecord
        Set by :meth:`build_catalog`.
    certificates : list of CertificateReport
    """

    def __init__(self, curve, tol=1e-8, seed=42, n_samples=10,
                 recover_exact=True, incidence_tol=None, verbosity=0):
        if not 0 < tol <= 1e-4:
            raise ValueError("tol = %s, but must be in (0, 1e-4]" % tol)
        self.curve = curve
        self.tol = tol
        self.seed = seed
        self.n_samples = n_samples
        self.recover_exact = recover_exact
        self.incidence_tol = (np.sqrt(tol) if incidence_tol is None
                              else incidence_tol)
        self.verbosity = verbosity
        self.uniformization = CurveUniformization(curve)
        self.tetrahedron = tetrahedron(curve)
        self.records = None
        self.certificates = None
        if self.verbosity > 0:
            self.print_info()

    def print_info(self):
        """Print information about the analysis parameters."""
        print("\n# Galois line analysis\n\nParameters:")
        print("\ncurve = %r" % self.curve
              + "\nj = %s" % scalar_to_str(self.curve.j_classical)
              + "\nomega = %s" % self.uniformization.lattice.omega
              + "\ntol = %s" % self.tol
              + "\nseed = %s" % self.seed
              + "\nn_samples = %s" % self.n_samples)

    def build_catalog(self):
        """Builds and certifies all Galois lines.

        Returns
        -------
        records : list of GaloisLineRecord
        """
        if self.verbosity > 0:
            print("\n##\n## Step 1: V4-lines on the tetrahedron\n##")
        records = build_v4_records(self.curve, self.uniformization)
        if self.curve.is_lemniscatic:
            if self.verbosity > 0:
                print("\n##\n## Step 2: Z4-lines of the lemniscatic curve\n##")
            records += build_z4_records(
                self.curve, tol=self.tol, seed=self.seed,
                recover_exact=self.recover_exact,
                uniformization=self.uniformization, verbosity=self.verbosity)
        if self.verbosity > 0:
            print("\n##\n## Step 3: certificates\n##")
        self.certificates = []
        for record in records:
            report = verify_galois_certificate(
                record, self.curve, n_samples=self.n_samples, seed=self.seed,
                uniformization=self.uniformization)
            self.certificates.append(report)
            if self.verbosity > 0:
                print("\n    %s (%s): all %d checks passed"
                      % (record.label, report.mode, len(report.checks)))
        self.records = records
        return records

    def _meet(self, rec_a, rec_b):
        if rec_a.certificate == 'exact' and rec_b.certificate == 'exact':
            incidence = meet_lines(rec_a.line, rec_b.line)
            point = incidence.point
            return incidence.kind, (point.to_numpy() if point is not None
                                    else None), 0.
        incidence, residual = numeric_meet(rec_a.numeric_line(),
                                           rec_b.numeric_line(),
                                           self.incidence_tol)
        return incidence.kind, incidence.point, residual

    def _vertex_at(self, point):
        if point is None:
            return None
        for k, vertex in enumerate(self.tetrahedron.vertices):
            if numeric_point_equal(vertex.to_numpy(), point,
                                   self.incidence_tol):
                return k
        return None

    def incidence(self):
        """Pairwise incidence of the catalog lines.

        Returns
        -------
        incidence : list of dict
            {"a", "b", "kind", "vertex", "residual", "sharedReflection",
            "sharedTranslation"} for every pair.
        """
        if self.records is None:
            self.build_catalog()
        pairs = []
        for rec_a, rec_b in itertools.combinations(self.records, 2):
            kind, point, residual = self._meet(rec_a, rec_b)
            shared = group_intersection(rec_a.group, rec_b.group)
            reflections = [g for g in shared.elements if g.is_reflection()]
            translations = [g for g in shared.elements
                            if g.is_translation() and not g.is_identity()]
            vertex = self._vertex_at(point) if kind == 'point' else None
            pairs.append({"a": rec_a.label, "b": rec_b.label, "kind": kind,
                          "vertex": None if vertex is None else "Q%d" % vertex,
                          "residual": float(residual),
                          "sharedReflection": [g.label() for g in reflections],
                          "sharedTranslation": [g.label()
                                                for g in translations]})
        return pairs

    def vertex_counts(self):
        counts = {}
        for k in range(4):
            on_vertex = [r for r in self.records if k in r.incident_vertices]
            counts["Q%d" % k] = {"V4": sum(r.kind == 'V4' for r in on_vertex),
                                 "Z4": sum(r.kind == 'Z4' for r in on_vertex)}
        return counts

    def check_rho_injective(self):
        """No two lines carry the same matrix group (up to scalars)."""
        for rec_a, rec_b in itertools.combinations(self.records, 2):
            mats_a, mats_b = rec_a.transforms(), rec_b.transforms()
            if all(any(m.equals_up_to_scalar(n, self.incidence_tol)
                       for n in mats_b) for m in mats_a):
                return False
        return True

    def _claims(self, pairs, counts):
        lemniscatic = self.curve.is_lemniscatic
        claims = []
        value = noncoplanarity_value(self.curve)
        claims.append(_claim("tetrahedron", value != 0, float(value),
                             "2(e1-e2)(e2-e3)(e3-e1) = %s"
                             % scalar_to_str(value)))
        expected = 14 if lemniscatic else 6
        claims.append(_claim("line-count", len(self.records) == expected,
                             detail="%d lines, expected %d"
                             % (len(self.records), expected)))
        degree = 5 if lemniscatic else 3
        claims.append(_claim("vertex-degree", all(
            c["V4"] == 3 and c["Z4"] == (2 if lemniscatic else 0)
            for c in counts.values()),
            detail="expected %d lines through every vertex" % degree))
        rule = [p for p in pairs
                if (p["kind"] == 'point') != bool(p["sharedReflection"])]
        claims.append(_claim("meeting-rule", not rule,
                             detail="lines meet iff their groups share an "
                             "involution z -> -z + alpha; %d violations"
                             % len(rule)))
        to_curve = self.uniformization.torus_to_curve_index
        wrong_vertex = []
        for p in pairs:
            if p["kind"] != 'point' or len(p["sharedReflection"]) != 1:
                continue
            t = int(p["sharedReflection"][0].replace("sigma", ""))
            if p["vertex"] != "Q%d" % to_curve[t]:
                wrong_vertex.append((p["a"], p["b"]))
        claims.append(_claim("shared-involution-vertex", not wrong_vertex,
                             detail="meeting point is the cone vertex of the "
                             "shared involution; %d violations"
                             % len(wrong_vertex)))
        claims.append(_claim("rho-injective", self.check_rho_injective(),
                             detail="distinct lines carry distinct groups"))
        if lemniscatic:
            by_pair = dict(((p["a"], p["b"]), p) for p in pairs)
            bad = []
            for (a, b), t in Z4_PAIRINGS:
                p = by_pair.get((a, b)) or by_pair.get((b, a))
                if p is None or p["vertex"] != "Q%d" % to_curve[t]:
                    bad.append("%s, %s" % (a, b))
            claims.append(_claim("z4-pairing", not bad,
                                 detail="Z4-lines meet in pairs at the "
                                 "vertices; failing: %s" % (bad or "none")))
            z4 = [r for r in self.records if r.kind == 'Z4']
            single = all(len(r.incident_vertices) == 1 for r in z4)
            skew = all(p["kind"] == 'disjoint' for p in pairs
                       if p["a"].startswith("Z") and p["b"].startswith("Z")
                       and p["vertex"] is None)
            claims.append(_claim("z4-single-vertex", single and skew,
                                 detail="every Z4-line passes through one "
                                 "vertex, other Z4 pairs are skew"))
        return claims

    def _discrepancies(self, pairs):
        items = []
        for i in (1, 2, 3):
            if self.curve.c[i - 1] == self.curve.root(i):
                continue
            candidate = c_denominator_generator(self.curve, i)
            sigma = involution_pullback(self.curve, i)
            if not is_invariant(sigma, candidate):
                items.append({
                    "name": "k0%d-denominator" % i,
                    "detail": "(x^2 + c_%d)/(x - c_%d) is not invariant under "
                              "sigma_%d; the certified generator of K_0%d is "
                              "(x^2 + c_%d)/(x - e_%d)" % ((i,) * 6)})
        for record in self.records:
            fixed = record.pointwise_fixed_elements()
            moving = [g.label() for g in record.group.sorted_elements()
                      if g.label() not in fixed]
            if moving:
                items.append({
                    "name": "%s-pointwise" % record.label,
                    "detail": "%s preserve every plane through the line but "
                              "act on its points nontrivially"
                              % ", ".join(moving)})
        for p in pairs:
            if p["kind"] == 'disjoint' and p["sharedTranslation"]:
                items.append({
                    "name": "%s-%s-translation" % (p["a"], p["b"]),
                    "detail": "skew lines whose groups share the translation "
                              "%s" % ", ".join(p["sharedTranslation"])})
        if self.curve.is_lemniscatic and self.curve.e != (
                Fraction(1, 2), Fraction(-1, 2), Fraction(0)):
            items.append({
                "name": "lemniscatic-model",
                "detail": "roots %s give j = 1728, so the catalog holds 14 "
                          "lines rather than 6"
                          % ", ".join(scalar_to_str(v) for v in self.curve.e)})
        return items

    def run_arrangement(self):
        """Builds the catalog and the full arrangement report.

        Returns
        -------
        report : ArrangementReport
        """
        if self.records is None:
            self.build_catalog()
        if self.verbosity > 0:
            print("\n##\n## Step 4: arrangement\n##")
        pairs = self.incidence()
        vertex_counts = self.vertex_counts()
        counts = {"lines": len(self.records),
                  "V4": sum(r.kind == 'V4' for r in self.records),
                  "Z4": sum(r.kind == 'Z4' for r in self.records),
                  "meetingPairs": sum(p["kind"] == 'point' for p in pairs),
                  "vertices": vertex_counts}
        report = ArrangementReport(self.curve, self.records, pairs, counts,
                                   self._claims(pairs, vertex_counts),
                                   self._discrepancies(pairs))
        if self.verbosity > 0:
            print(report.to_text())
        return report


def arrangement_report(curve, **kwargs):
    """Shortcut for ``GaloisLineAnalysis(curve, **kwargs).run_arrangement()``."""
    return GaloisLineAnalysis(curve, **kwargs).run_arrangement()
