"""
Tests for galois_analysis.py: matrix realizations, V4 and Z4 records, their
certificates and the arrangement report.
"""
from __future__ import print_function
import json
from fractions import Fraction
import numpy as np
import pytest

from galoislines.curve_model import EllipticCurveModel
from galoislines.function_field import GROUP_PAIRS, involution_pullback
from galoislines.exact_algebra import random_scalar
from galoislines.projective import ProjPoint, span_line
from galoislines.galois_analysis import (
    SCHEMA_VERSION, CertificateError, ConstructionError, ProjTransform,
    automorphism_matrix, realizes_pullback, build_v4_records, build_z4_records,
    verify_galois_certificate, recover_gaussian_rational, GaloisLineAnalysis,
    arrangement_report)

from test_curve_model import (curve, generic_curve, lemniscatic_curve,
                              GENERIC_ROOTS, LEMNISCATIC_ROOTS,
                              LEMNISCATIC_ROOTS_2)

# Pylint settings
# pylint: disable=redefined-outer-name,unused-import

V4_LABELS = ["G01", "G02", "G03", "G12", "G13", "G23"]
CERTIFICATE_CHECKS = ["line-disjoint", "planes-fixed", "curve-preserved",
                      "group-table", "orbit-coplanar"]

@pytest.fixture(scope='module')
def generic_report():
    return arrangement_report(EllipticCurveModel(*GENERIC_ROOTS))

@pytest.fixture(scope='module')
def lemniscatic_analysis():
    analysis = GaloisLineAnalysis(EllipticCurveModel(*LEMNISCATIC_ROOTS))
    return analysis, analysis.run_arrangement()

# PROJECTIVE TRANSFORMS ########################################################
def test_proj_transform_exact():
    a = ProjTransform([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0],
                       [0, 0, 0, 2]])
    assert a.is_scalar()
    swap = ProjTransform([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0],
                          [0, 0, 0, 1]])
    assert (swap * swap).is_scalar()
    assert not swap.is_scalar()
    assert (swap ** 3).equals_up_to_scalar(swap)
    assert swap.apply([1, 2, 3, 4]) == [2, 1, 3, 4]

def test_proj_transform_numeric():
    rotation = ProjTransform(np.diag([1j, -1, -1j, 1]) * 3, exact=False)
    assert not rotation.is_scalar()
    assert (rotation ** 4).is_scalar()
    assert np.max(np.abs(rotation.matrix)) == pytest.approx(1.)
    exact = ProjTransform([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0],
                           [0, 0, 0, -1]])
    assert (rotation * rotation).equals_up_to_scalar(exact)

# REALIZATIONS #################################################################
def test_automorphism_matrices(curve):
    for i in range(4):
        transform = automorphism_matrix(curve, i)
        assert realizes_pullback(curve, transform,
                                 involution_pullback(curve, i))
        assert (transform * transform).is_scalar()
        # The cone vertices are fixed
        for k in range(4):
            image = transform.apply(curve.vertex(k).coords)
            assert curve.vertex(k) == ProjPoint(image)

def test_wrong_matrix_rejected(curve):
    transform = automorphism_matrix(curve, 1)
    assert not realizes_pullback(curve, transform,
                                 involution_pullback(curve, 2))

# V4 RECORDS ###################################################################
def test_build_v4_records(curve):
    records = build_v4_records(curve)
    assert [r.label for r in records] == V4_LABELS
    for record, pair in zip(records, GROUP_PAIRS):
        assert record.kind == 'V4'
        assert record.certificate == 'exact'
        assert record.incident_vertices == list(pair)
        assert record.group.order == 4
        assert len(record.transforms()) == 4
        for k in pair:
            assert record.contains_point(curve.vertex(k))

def test_v4_group_labels_lemniscatic(lemniscatic_curve):
    # The torus half periods follow the order of the roots here
    records = build_v4_records(lemniscatic_curve)
    assert [r.group.label for r in records] == V4_LABELS

@pytest.mark.parametrize("index", range(6))
def test_v4_certificate(curve, index):
    record = build_v4_records(curve)[index]
    report = verify_galois_certificate(record, curve)
    assert report.passed
    assert report.mode == 'exact'
    assert [name for name, _, _ in report.checks] == CERTIFICATE_CHECKS
    assert record.checks == report.checks

def random_root_triples(count, seed=2):
    rng = np.random.default_rng(seed)
    triples = []
    while len(triples) < count:
        e1 = random_scalar(rng, max_num=6, max_den=4)
        e2 = random_scalar(rng, max_num=6, max_den=4)
        roots = (e1, e2, -e1 - e2)
        if len(set(roots)) == 3:
            triples.append(roots)
    return triples

@pytest.mark.parametrize("roots", random_root_triples(5))
def test_v4_certificates_random_curves(roots):
    curve = EllipticCurveModel(*roots)
    for record in build_v4_records(curve):
        report = verify_galois_certificate(record, curve)
        assert report.passed
        assert [name for name, _, _ in report.checks] == CERTIFICATE_CHECKS

def test_v4_certificate_rejects_perturbed_line(generic_curve):
    record = build_v4_records(generic_curve)[0]
    moved = list(generic_curve.vertex(1).coords)
    moved[2] += Fraction(1, 1000)
    record.line = span_line(generic_curve.vertex(0), ProjPoint(moved))
    with pytest.raises(CertificateError):
        verify_galois_certificate(record, generic_curve)
    report = verify_galois_certificate(record, generic_curve, strict=False)
    assert not report.passed
    status = dict((name, passed) for name, passed, _ in report.checks)
    assert list(status) == CERTIFICATE_CHECKS
    assert not (status["line-disjoint"] and status["orbit-coplanar"])
    # The group itself is untouched
    assert status["curve-preserved"] and status["group-table"]

def test_v4_certificate_rejects_foreign_matrix(generic_curve):
    record = build_v4_records(generic_curve)[0]
    foreign = automorphism_matrix(generic_curve, 2)
    element = next(g for g in record.realization
                   if not g.is_identity() and not g.is_translation())
    record.realization[element] = foreign
    with pytest.raises(CertificateError) as excinfo:
        verify_galois_certificate(record, generic_curve)
    assert excinfo.value.check == 'planes-fixed'

def test_v4_not_pointwise(curve):
    for record in build_v4_records(curve):
        fixed = record.pointwise_fixed_elements()
        assert "id" in fixed
        assert len(fixed) < 4

def test_v4_record_json(lemniscatic_curve):
    data = build_v4_records(lemniscatic_curve)[2].to_json()
    assert data["label"] == "G03"
    assert data["incidentVertices"] == ["Q0", "Q3"]
    assert data["fixedFieldGenerator"]["b"] == "0"
    json.dumps(data)

# Z4 RECORDS ###################################################################
def test_z4_requires_lemniscatic(generic_curve):
    with pytest.raises(ConstructionError):
        build_z4_records(generic_curve)

def test_z4_rejects_few_samples(lemniscatic_curve):
    with pytest.raises(ValueError):
        build_z4_records(lemniscatic_curve, n_samples=3)

def test_z4_records(lemniscatic_analysis):
    analysis, _ = lemniscatic_analysis
    z4 = [r for r in analysis.records if r.kind == 'Z4']
    assert [r.label for r in z4] == ["Z00", "Z22", "Z20", "Z02", "Z31",
                                     "Z13", "Z11", "Z33"]
    for record in z4:
        assert record.certificate == 'numeric'
        assert len(record.incident_vertices) == 1
        generator = record.realization[record.group.generator()]
        assert not (generator ** 2).is_scalar(record.tolerance)
        assert (generator ** 4).is_scalar(record.tolerance)

def test_z4_certificates(lemniscatic_analysis):
    analysis, _ = lemniscatic_analysis
    for report in analysis.certificates:
        assert report.passed
        assert [name for name, _, _ in report.checks] == CERTIFICATE_CHECKS

def test_recover_gaussian_rational(lemniscatic_curve):
    sigma = automorphism_matrix(lemniscatic_curve, 3)
    numeric = sigma.to_numpy() * (0.3 - 0.7j)
    recovered = recover_gaussian_rational(lemniscatic_curve, numeric)
    assert recovered is not None
    assert recovered.shape == (4, 4)
    noisy = numeric + 1e-4
    assert recover_gaussian_rational(lemniscatic_curve, noisy) is None

# ARRANGEMENT ##################################################################
def test_invalid_tolerance(generic_curve):
    with pytest.raises(ValueError):
        GaloisLineAnalysis(generic_curve, tol=1e-3)
    with pytest.raises(ValueError):
        GaloisLineAnalysis(generic_curve, tol=0)

def test_generic_arrangement(generic_report):
    assert generic_report.passed
    assert generic_report.counts["lines"] == 6
    assert generic_report.counts["Z4"] == 0
    # Opposite edges of the tetrahedron are skew
    assert generic_report.counts["meetingPairs"] == 12
    for counts in generic_report.counts["vertices"].values():
        assert counts == {"V4": 3, "Z4": 0}

def test_generic_meeting_rule(generic_report):
    for pair in generic_report.incidence:
        assert (pair["kind"] == 'point') == bool(pair["sharedReflection"])
        if pair["kind"] == 'disjoint':
            assert len(pair["sharedTranslation"]) == 1

def test_generic_discrepancies(generic_report):
    names = [item["name"] for item in generic_report.discrepancies]
    for i in (1, 2, 3):
        assert "k0%d-denominator" % i in names
    assert "G01-G23-translation" in names
    assert "lemniscatic-model" not in names

def test_lemniscatic_arrangement(lemniscatic_analysis):
    _, report = lemniscatic_analysis
    assert report.passed
    assert report.counts["lines"] == 14
    assert report.counts["V4"] == 6
    assert report.counts["Z4"] == 8
    for counts in report.counts["vertices"].values():
        assert counts == {"V4": 3, "Z4": 2}
    assert report.claim("z4-pairing")["status"] == "pass"
    assert report.claim("rho-injective")["status"] == "pass"

def test_lemniscatic_z4_pairs(lemniscatic_analysis):
    _, report = lemniscatic_analysis
    by_pair = dict(((p["a"], p["b"]), p) for p in report.incidence)
    assert by_pair[("Z00", "Z22")]["vertex"] == "Q0"
    assert by_pair[("Z20", "Z02")]["vertex"] == "Q3"
    assert by_pair[("Z11", "Z33")]["vertex"] == "Q2"
    assert by_pair[("Z31", "Z13")]["vertex"] == "Q1"
    assert by_pair[("Z00", "Z20")]["kind"] == 'disjoint'

def test_report_serialization(lemniscatic_analysis):
    _, report = lemniscatic_analysis
    data = json.loads(report.dumps())
    assert data["schemaVersion"] == SCHEMA_VERSION
    assert len(data["lines"]) == 14
    assert len(data["incidence"]) == 14 * 13 // 2
    text = report.to_text()
    assert "Galois lines: 14 (6 V4, 8 Z4)" in text

def test_second_lemniscatic_model():
    report = arrangement_report(EllipticCurveModel(*LEMNISCATIC_ROOTS_2))
    assert report.counts["lines"] == 14
    names = [item["name"] for item in report.discrepancies]
    assert "lemniscatic-model" in names
