"""
Tests for projection_study.py: projecting C to the plane and the Galois
points of the image.
"""
from __future__ import print_function
from fractions import Fraction
import pytest

from galoislines.projective import ProjPoint
from galoislines.curve_model import embed_point
from galoislines.galois_analysis import ProjTransform, build_v4_records
from galoislines.projection_study import (
    InvalidCenterError, InvalidConjugationError, project_curve,
    classify_center, verify_plane_galois_point)

from test_curve_model import curve, generic_curve, lemniscatic_curve

# Pylint settings
# pylint: disable=redefined-outer-name,unused-import

# Q3 + Q0 for the curve with roots 1/2, -1/2, 0
EDGE_CENTER = "4:1:0:1"

@pytest.fixture()
def edge_projection(lemniscatic_curve):
    """Projection from a point of the edge Q0 Q3 with the group of G03."""
    record = project_curve(lemniscatic_curve,
                           ProjPoint.from_string(EDGE_CENTER))
    g03 = build_v4_records(lemniscatic_curve)[2]
    R = record.project_point(lemniscatic_curve.vertex(0))
    return record, g03, R

# PROJECTION ###################################################################
def test_project_from_edge_point(edge_projection):
    record, _, _ = edge_projection
    assert record.degree == 4
    assert record.irreducible
    assert not record.is_square
    assert record.conic is None
    assert record.vanishes_on_curve()

def test_project_from_vertex(curve):
    for k in range(4):
        record = project_curve(curve, curve.vertex(k))
        assert record.is_square
        assert record.degree == 4
        assert max(sum(m) for m in record.conic) == 2

def test_project_point(edge_projection, lemniscatic_curve):
    record, _, _ = edge_projection
    with pytest.raises(InvalidCenterError):
        record.project_point(ProjPoint.from_string(EDGE_CENTER))
    point = embed_point(lemniscatic_curve, Fraction(1, 2), 0)
    assert record(record.project_point(point)) == 0

def test_project_rejects_center_on_curve(curve):
    with pytest.raises(InvalidCenterError):
        project_curve(curve, embed_point(curve, curve.root(2), 0))

def test_projection_json(edge_projection):
    record, _, _ = edge_projection
    data = record.to_json()
    assert data["degree"] == 4
    assert data["irreducible"]
    assert data["conic"] is None
    assert "irreducible quartic" in repr(record)

# CENTER CLASSIFICATION ########################################################
def test_classify_center(generic_curve):
    kind, vertex, record = classify_center(generic_curve,
                                           generic_curve.vertex(2))
    assert (kind, vertex, record) == ('vertex', 2, None)
    # Q0 + Q1 = (1 : -c1 : e1 : 1)
    center = classify_center(generic_curve,
                             ProjPoint.from_string("1:-11:3:1"))
    assert center.kind == 'on-galois-line'
    assert center.record.label == "G01"
    center = classify_center(generic_curve, ProjPoint.from_string("1:2:3:5"))
    assert center.kind == 'generic'
    assert center.record is None

def test_classify_center_on_curve(generic_curve):
    with pytest.raises(InvalidCenterError):
        classify_center(generic_curve,
                        embed_point(generic_curve, generic_curve.root(1), 0))

# PLANE GALOIS POINTS ##########################################################
def test_galois_point_from_edge(edge_projection):
    record, g03, R = edge_projection
    assert verify_plane_galois_point(record, R, g03.transforms())
    assert verify_plane_galois_point(record, R, g03.transforms(), kind='V4')
    assert not verify_plane_galois_point(record, R, g03.transforms(),
                                         kind='Z4')

def test_galois_point_wrong_group(edge_projection, lemniscatic_curve):
    record, _, R = edge_projection
    # G12 does not preserve the planes through Q0 Q3
    g12 = build_v4_records(lemniscatic_curve)[3]
    assert not verify_plane_galois_point(record, R, g12.transforms())
    assert not verify_plane_galois_point(record, R, g12.transforms()[:3])

def test_galois_point_rejects_point_on_curve(edge_projection,
                                             lemniscatic_curve):
    record, g03, _ = edge_projection
    point = embed_point(lemniscatic_curve, 0, 0)
    with pytest.raises(InvalidCenterError):
        verify_plane_galois_point(record, record.project_point(point),
                                  g03.transforms())
    with pytest.raises(ValueError):
        verify_plane_galois_point(record, [0, 0, 0], g03.transforms())

def test_galois_point_rejects_foreign_transforms(edge_projection):
    record, g03, R = edge_projection
    numeric = [ProjTransform(t.to_numpy(), exact=False)
               for t in g03.transforms()]
    with pytest.raises(InvalidConjugationError):
        verify_plane_galois_point(record, R, numeric)
    swap = ProjTransform([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0],
                          [0, 0, 0, 1]])
    with pytest.raises(InvalidConjugationError):
        verify_plane_galois_point(record, R, [ProjTransform.identity(), swap])

# UNIQUENESS OF GALOIS POINTS ##################################################
LINE_PARAMETERS = [1, -1, 2, Fraction(1, 2), 3]

def points_on_line(curve, record, parameters):
    i, j = record.incident_vertices
    first, second = curve.vertex(i).coords, curve.vertex(j).coords
    return [ProjPoint([a + t * b for a, b in zip(first, second)])
            for t in parameters]

def catalog_candidates(curve, projection, records, parameters):
    """(R, record) for projected sample points of the catalog lines that
    are off the projected curve."""
    candidates = []
    for record in records:
        for point in points_on_line(curve, record, parameters):
            R = projection.project_point(point)
            if projection(R) != 0:
                candidates.append((R, record))
    return candidates

def test_no_galois_point_from_generic_center(generic_curve):
    center = ProjPoint.from_string("1:2:3:5")
    assert classify_center(generic_curve, center).kind == 'generic'
    record = project_curve(generic_curve, center)
    assert record.irreducible
    candidates = catalog_candidates(generic_curve, record,
                                    build_v4_records(generic_curve),
                                    LINE_PARAMETERS)
    assert len(candidates) >= 25
    for R, line in candidates[:25]:
        assert not verify_plane_galois_point(record, R, line.transforms())

def test_galois_point_unique_on_projection(edge_projection,
                                           lemniscatic_curve):
    record, g03, R = edge_projection
    assert verify_plane_galois_point(record, R, g03.transforms())
    others = [r for r in build_v4_records(lemniscatic_curve)
              if r.label != g03.label]
    candidates = catalog_candidates(lemniscatic_curve, record, others,
                                    LINE_PARAMETERS[:3])
    assert len(candidates) >= 10
    for other_R, line in candidates:
        assert not verify_plane_galois_point(record, other_R,
                                             line.transforms())
        assert not verify_plane_galois_point(record, other_R,
                                             g03.transforms())

# DEGREE DICHOTOMY #############################################################
NON_VERTEX_CENTERS = ["1:2:3:5", "1:0:1:0", "2:1:1:1", "1:1:0:1", "0:1:1:0",
                      "1:-1:1:2", "3:1:2:0", "1:5:-1:3", "4:1:0:1",
                      "1:-11:3:1"]

def test_square_iff_vertex(generic_curve):
    for k in range(4):
        center = generic_curve.vertex(k)
        assert classify_center(generic_curve, center).kind == 'vertex'
        assert project_curve(generic_curve, center).is_square
    for text in NON_VERTEX_CENTERS:
        center = ProjPoint.from_string(text)
        assert classify_center(generic_curve, center).kind != 'vertex'
        record = project_curve(generic_curve, center)
        assert not record.is_square
        assert record.irreducible
