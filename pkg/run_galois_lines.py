#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Galois lines of elliptic quartics: parallel scan over a family of curves
based on mpi4py.

Parallelization is done across curves; every rank builds and certifies the
catalog of its share of curves and the master node collects the
arrangement reports.
"""

# License: GNU General Public License v3.0


from mpi4py import MPI
import numpy
import os, pickle
from fractions import Fraction

from galoislines.curve_model import EllipticCurveModel
from galoislines.galois_analysis import (GaloisLineAnalysis, CertificateError,
                                         ConstructionError)


# Default communicator
COMM = MPI.COMM_WORLD


def split(container, count):
    """
    Simple function splitting the list of curves into equal length chunks.
    Order is not preserved.
    """
    return [container[_i::count] for _i in range(count)]


def random_roots(rng, max_num=9, max_den=4):
    """Three distinct rationals summing to zero."""
    while True:
        e1, e2 = [Fraction(int(rng.integers(-max_num, max_num + 1)),
                           int(rng.integers(1, max_den + 1)))
                  for _ in range(2)]
        e3 = -e1 - e2
        if len(set((e1, e2, e3))) == 3:
            return (e1, e2, e3)


def run_arrangement_single(roots):
    """Wrapper around GaloisLineAnalysis.run_arrangement for a single curve.

    Parameters
    ----------
    roots : tuple of 3 Fractions
        Roots e1, e2, e3 of the Weierstrass cubic.

    Returns
    -------
    roots, summary : tuple
        The roots and a dictionary with the line counts, the failed claims
        and the JSON report (None if a certificate failed).
    """
    curve = EllipticCurveModel(*roots)
    analysis = GaloisLineAnalysis(curve, tol=tol, seed=seed,
                                  n_samples=n_samples, verbosity=verbosity)
    try:
        report = analysis.run_arrangement()
    except (CertificateError, ConstructionError) as error:
        return roots, {"error": str(error), "report": None}
    failed = [c["name"] for c in report.claims if c["status"] != "pass"]
    return roots, {"lines": report.counts["lines"],
                   "failed": failed,
                   "report": report.to_json()}


# Family of curves: random rational roots plus the lemniscatic curve j = 1728
rng = numpy.random.default_rng(42)
n_curves = 12
curves = [random_roots(rng) for _ in range(n_curves)]
curves.append((Fraction(1, 2), Fraction(-1, 2), Fraction(0)))

# Tolerance of the numeric Z4 certificates
tol = 1e-8

# Seed of the random sampling inside each analysis
seed = 42

# Number of torus samples in the numeric checks
n_samples = 10

# Verbosity level. Note that slaves will ouput on top of each other.
verbosity = 0

# Store results in file
file_name = os.path.expanduser('~') + '/galois_lines_results.dat'


#
#  Start of the script
#
if COMM.rank == 0:
    # Only the master node (rank=0) runs this
    if verbosity > -1:
        print("\n##\n## Running parallel Galois line scan\n##"
              "\n\nParameters:")
        print("\nnumber of curves = %d" % len(curves)
              + "\ntol = %s" % tol
              + "\nn_samples = %d" % n_samples)
        print("\n")

    splitted_jobs = split(curves, COMM.size)
else:
    splitted_jobs = None


# Scatter jobs across cores.
scattered_jobs = COMM.scatter(splitted_jobs, root=0)

results = []
for roots in scattered_jobs:
    results.append(run_arrangement_single(roots))

# Gather results on rank 0.
results = COMM.gather(results, root=0)


if COMM.rank == 0:
    all_results = {}
    for res in results:
        for roots, summary in res:
            all_results[tuple(str(e) for e in roots)] = summary

    if verbosity > -1:
        print("\n## Galois lines per curve:")
        for key in sorted(all_results):
            summary = all_results[key]
            if summary["report"] is None:
                print("    e = (%s): certificate failure: %s"
                      % (", ".join(key), summary["error"]))
            else:
                print("    e = (%s): %d lines%s" % (
                    ", ".join(key), summary["lines"],
                    "" if not summary["failed"] else
                    ", failed claims: " + ", ".join(summary["failed"])))

    if verbosity > -1:
        print("Pickling to ", file_name)
    with open(file_name, 'wb') as file:
        pickle.dump(all_results, file, protocol=-1)
