"""Command line interface: analyze a curve, verify a single Galois line,
project from a center or enumerate the torus groups of a lattice."""

# License: GNU General Public License v3.0

from __future__ import print_function
import argparse
import decimal
import json
import sys
import warnings

from .exact_algebra import InvalidInputError, as_scalar
from .projective import ProjPoint, DegenerateSpanError
from .curve_model import (EllipticCurveModel, SingularCurveError,
                          NotWeierstrassNormalError)
from .torus_model import (ComplexLattice, enumerate_galois_groups,
                          candidate_groups, diamond_check)
from .galois_analysis import (SCHEMA_VERSION, GaloisLineAnalysis,
                              build_v4_records, build_z4_records,
                              verify_galois_certificate, CertificateError,
                              ConstructionError)
from .projection_study import (project_curve, classify_center,
                               verify_plane_galois_point, InvalidCenterError,
                               DegeneratePencilError)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

MODES = ('analyze', 'verify-line', 'project', 'enumerate-groups')


class UsageError(ValueError):
    """Raised for an invalid combination of command line options."""


class RunConfig():
    """Validated options of one command line run.

    Parameters
    ----------
    mode : str
        One of 'analyze', 'verify-line', 'project', 'enumerate-groups'.
    roots : tuple of 3 rationals, optional
    pq : tuple of 2 rationals, optional
    omega : complex, optional
    tol : float, optional (default: 1e-8)
        Must lie in (0, 1e-4].
    lattice_tol : float, optional
        Tolerance of the lattice symmetry test; tol if None. Truncated
        decimal input for omega needs a tolerance of its last digit.
    seed : int, optional (default: 42)
    output : str, optional (default: 'text')
        'text' or 'json'.
    out : str, optional
        Output path; stdout if None.
    line : str, optional
        'Gij' or 'Zmn' for verify-line.
    center : ProjPoint, optional
    verify_galois_point : bool, optional (default: False)
    verbosity : int, optional (default: 0)
    """

    def __init__(self, mode, roots=None, pq=None, omega=None, tol=1e-8,
                 lattice_tol=None, seed=42, output='text', out=None,
                 line=None, center=None, verify_galois_point=False,
                 verbosity=0):
        self.mode = mode
        self.roots = roots
        self.pq = pq
        self.omega = omega
        self.tol = tol
        self.lattice_tol = tol if lattice_tol is None else lattice_tol
        self.seed = seed
        self.output = output
        self.out = out
        self.line = line
        self.center = center
        self.verify_galois_point = verify_galois_point
        self.verbosity = verbosity
        self.validate()

    def validate(self):
        if self.mode not in MODES:
            raise UsageError("mode = %r, but must be one of %s"
                             % (self.mode, ", ".join(MODES)))
        if not 0 < self.tol <= 1e-4:
            raise UsageError("tol = %s, but must be in (0, 1e-4]" % self.tol)
        if self.lattice_tol < self.tol:
            raise UsageError("lattice_tol = %s, but must be at least tol = %s"
                             % (self.lattice_tol, self.tol))
        if int(self.seed) != self.seed:
            raise UsageError("seed = %r, but must be an integer" % self.seed)
        if self.output not in ('text', 'json'):
            raise UsageError("output = %r, but must be 'text' or 'json'"
                             % self.output)
        if self.mode == 'enumerate-groups':
            if self.omega is None:
                raise UsageError("enumerate-groups needs --omega or "
                                 "--square-lattice")
        elif (self.roots is None) == (self.pq is None):
            raise UsageError("%s needs exactly one of --roots and --pq"
                             % self.mode)
        if self.mode == 'verify-line' and self.line is None:
            raise UsageError("verify-line needs --line")
        if self.mode == 'project' and self.center is None:
            raise UsageError("project needs --center")

    def curve(self):
        if self.roots is not None:
            return EllipticCurveModel(*self.roots)
        return EllipticCurveModel.from_pq(*self.pq)


def _rational_list(text, count, name):
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError("%s = %r, but must be %d comma separated rationals"
                         % (name, text, count))
    return tuple(as_scalar(part) for part in parts)


def _omega(text):
    parts = text.split(',')
    if len(parts) != 2:
        raise UsageError("omega = %r, but must be 're,im'" % text)
    try:
        omega = complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise UsageError("omega = %r, but must be two numbers" % text)
    if omega.imag <= 0:
        raise UsageError("omega = %r, but must have positive imaginary part"
                         % text)
    return omega


def _input_precision(text, default):
    """Unit of the last decimal digit given in a comma separated list of
    numbers, or default if every number is an integer."""
    exponents = [decimal.Decimal(part.strip()).as_tuple().exponent
                 for part in text.split(',')]
    # inf and nan carry a letter code instead of an exponent
    exponent = min([e for e in exponents if isinstance(e, int)] + [0])
    return default if exponent >= 0 else 10. ** exponent


def build_parser():
    parser = argparse.ArgumentParser(
        prog='galoislines',
        description="Galois lines of elliptic quartics in P^3.")
    subparsers = parser.add_subparsers(dest='mode')

    def add_common(sub):
        sub.add_argument("--tol", type=float, default=1e-8,
                         help="tolerance of numeric certificates (default "
                              "1e-8, at most 1e-4)")
        sub.add_argument("--seed", type=int, default=42,
                         help="seed of the random generator (default 42)")
        sub.add_argument("--json", action="store_true",
                         help="emit JSON instead of text")
        sub.add_argument("--out", default=None,
                         help="write the report to this path")
        sub.add_argument("-v", "--verbosity", type=int, default=0)

    def add_curve(sub):
        group = sub.add_mutually_exclusive_group()
        group.add_argument("--roots", help="e1,e2,e3 rationals summing to 0, "
                                           "e.g. 1/2,-1/2,0")
        group.add_argument("--pq", help="p,q of y^2 = 4x^3 + px + q with "
                                        "rational roots")

    analyze = subparsers.add_parser(
        'analyze', help="full catalog with certificates and arrangement")
    add_curve(analyze)
    add_common(analyze)

    verify = subparsers.add_parser(
        'verify-line', help="certificate of a single Galois line")
    add_curve(verify)
    verify.add_argument("--line", help="Gij (edge Q_i Q_j) or Zmn (j = 1728)")
    add_common(verify)

    project = subparsers.add_parser(
        'project', help="projection of the curve from a center")
    add_curve(project)
    project.add_argument("--center", help="X:Y:Z:W")
    project.add_argument("--verify-galois-point", action="store_true",
                         help="test the image of the Galois line through "
                              "the center as a Galois point")
    add_common(project)

    enumerate_ = subparsers.add_parser(
        'enumerate-groups', help="order 4 automorphism groups of C/L")
    lattice = enumerate_.add_mutually_exclusive_group()
    lattice.add_argument("--omega", help="re,im of the second generator")
    lattice.add_argument("--square-lattice", action="store_true",
                         help="omega = i")
    add_common(enumerate_)
    return parser


def config_from_args(args):
    omega = None
    lattice_tol = None
    if getattr(args, 'square_lattice', False):
        omega = 1j
    elif getattr(args, 'omega', None):
        omega = _omega(args.omega)
        lattice_tol = max(args.tol, _input_precision(args.omega, args.tol))
    roots = getattr(args, 'roots', None)
    pq = getattr(args, 'pq', None)
    center = getattr(args, 'center', None)
    return RunConfig(
        args.mode,
        roots=None if roots is None else _rational_list(roots, 3, "roots"),
        pq=None if pq is None else _rational_list(pq, 2, "pq"),
        omega=omega, tol=args.tol, lattice_tol=lattice_tol,
        seed=args.seed,
        output='json' if args.json else 'text', out=args.out,
        line=getattr(args, 'line', None),
        center=None if center is None else ProjPoint.from_string(center),
        verify_galois_point=getattr(args, 'verify_galois_point', False),
        verbosity=args.verbosity)


def _emit(config, payload, text):
    if config.output == 'json':
        payload = dict(payload)
        payload["schemaVersion"] = SCHEMA_VERSION
        body = json.dumps(payload, indent=2, sort_keys=True)
    else:
        body = text
    if config.out is None:
        print(body)
    else:
        with open(config.out, 'w') as handle:
            handle.write(body + "\n")


def run_analyze(config):
    """Catalog, certificates and arrangement report of the curve.

    Returns
    -------
    exit_code, report : int, ArrangementReport or None
    """
    curve = config.curve()
    analysis = GaloisLineAnalysis(curve, tol=config.tol, seed=config.seed,
                                  verbosity=config.verbosity)
    try:
        report = analysis.run_arrangement()
    except (CertificateError, ConstructionError) as error:
        _emit(config, {"curve": curve.to_json(), "error": str(error),
                       "claims": [{"name": getattr(error, 'check',
                                                   'construction'),
                                   "status": "fail", "residual": None}]},
              "certificate failure: %s" % error)
        return EXIT_FAILURE, None
    _emit(config, report.to_json(), report.to_text())
    return (EXIT_OK if report.passed else EXIT_FAILURE), report


def _find_record(curve, label, config):
    label = label.strip().upper()
    if label.startswith('G'):
        records = build_v4_records(curve)
    elif label.startswith('Z'):
        if not curve.is_lemniscatic:
            raise UsageError("Z4-lines exist only for j = 1728")
        records = build_z4_records(curve, tol=config.tol, seed=config.seed)
    else:
        raise UsageError("line = %r, but must be Gij or Zmn" % label)
    for record in records:
        if record.label == label:
            return record
    raise UsageError("no Galois line labelled %r" % label)


def run_verify_line(config):
    """Certificate of the line named by config.line."""
    curve = config.curve()
    record = _find_record(curve, config.line, config)
    try:
        report = verify_galois_certificate(record, curve, seed=config.seed)
    except CertificateError as error:
        _emit(config, {"label": record.label, "passed": False,
                       "failedCheck": error.check, "error": str(error)},
              "%s: FAILED %s" % (record.label, error))
        return EXIT_FAILURE, None
    text = "\n".join(["%s (%s)" % (record.label, report.mode)] +
                     ["    [%s] %s  residual %.3g"
                      % ("pass" if passed else "fail", name, residual)
                      for name, passed, residual in report.checks])
    payload = report.to_json()
    payload["record"] = record.to_json()
    _emit(config, payload, text)
    return EXIT_OK, report


def run_project(config):
    """Projection from config.center, optionally with the Galois point test
    at the image of the Galois line through the center."""
    curve = config.curve()
    try:
        center_class = classify_center(curve, config.center, tol=config.tol)
    except ConstructionError as error:
        _emit(config, {"curve": curve.to_json(), "error": str(error)},
              "construction failure: %s" % error)
        return EXIT_FAILURE, None
    record = project_curve(curve, config.center)
    payload = {"classification": center_class.kind,
               "vertex": center_class.vertex,
               "line": (center_class.record.label
                        if center_class.record is not None else None),
               "projection": record.to_json()}
    lines = ["center %s: %s" % (config.center, center_class.kind),
             "image: %r" % record]
    exit_code = EXIT_OK
    if config.verify_galois_point:
        line_record = center_class.record
        if line_record is None or line_record.certificate != 'exact':
            payload["galoisPoint"] = None
            lines.append("Galois point test skipped: the center is not on an "
                         "exactly certified Galois line")
        else:
            other = next(p for p in line_record.line.points
                         if p != config.center)
            R = record.project_point(other)
            ok = verify_plane_galois_point(record, R, line_record.transforms(),
                                           kind=line_record.kind)
            payload["galoisPoint"] = {"R": [str(v) for v in R], "passed": ok,
                                      "group": line_record.kind}
            lines.append("Galois point %s: %s" % (
                ":".join(str(v) for v in R), "yes" if ok else "no"))
            exit_code = EXIT_OK if ok else EXIT_FAILURE
    _emit(config, payload, "\n".join(lines))
    return exit_code, record


def run_enumerate_groups(config):
    """Order 4 groups of the lattice with their diamond_check status."""
    lattice = ComplexLattice(config.omega, tol=config.lattice_tol)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        passing = enumerate_galois_groups(lattice)
    candidates = candidate_groups(lattice)
    beyond = lattice.symmetry_order == 6
    payload = {"lattice": lattice.to_json(),
               "groups": [g.to_json() for g in passing],
               "candidates": len(candidates),
               "rejected": sum(not diamond_check(g) for g in candidates),
               "beyondClassification": beyond}
    text = ["omega = %s, symmetry order %d" % (lattice.omega,
                                               lattice.symmetry_order),
            "%d groups pass (%d candidates)" % (len(passing),
                                                len(candidates))]
    text += ["    %s  %s" % (g.label, g.kind) for g in passing]
    if beyond:
        text.append("hexagonal lattice: outside the generic and square "
                    "classification")
    _emit(config, payload, "\n".join(text))
    return EXIT_OK, passing


RUNNERS = {'analyze': run_analyze, 'verify-line': run_verify_line,
           'project': run_project, 'enumerate-groups': run_enumerate_groups}


def main(argv=None):
    """Entry point; returns the exit code (0 pass, 1 certificate failure,
    2 usage error)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.mode is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        config = config_from_args(args)
        exit_code, _ = RUNNERS[config.mode](config)
    except (UsageError, InvalidInputError, SingularCurveError,
            NotWeierstrassNormalError, DegenerateSpanError,
            InvalidCenterError, DegeneratePencilError) as error:
        print("error: %s" % error, file=sys.stderr)
        return EXIT_USAGE
    return exit_code


if __name__ == '__main__':
    sys.exit(main())
