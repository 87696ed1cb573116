import json
import random
from fractions import Fraction

import pytest

from skcurve.certify import (
    CandidateTable,
    Isometry,
    IsometryError,
    Surd,
    TableError,
    certify,
    decimal_tolerance,
    detect_isometry,
    export_table,
    load_table,
    parse_table,
    transform_table,
)
from skcurve.curve import Point, samples
from skcurve.exact import DomainError, Dyadic, parse_dyadic

ISOMETRIES = [
    Isometry(0, False, Point.of(5, 7)),
    Isometry(4, True, Point.of(-2, 0)),  # mirror in the line x = 1
    Isometry(2, False, Point.of(3, -1)),
    Isometry(0, True, Point.of(0, 0)),
    Isometry(6, True, Point.of(Dyadic(1, 3), Dyadic(-5, 2))),
]


def moved(table, i, dx, dy):
    pts = list(table.points)
    p = pts[i]
    pts[i] = Point(p.x + dx, p.y + dy)
    return CandidateTable(table.depth, pts, table.encoding, table.precision)


def test_surd_arithmetic_and_sign():
    r = Surd(Dyadic(0), Dyadic(1))  # sqrt 2
    assert r * r == Surd.of(2)
    assert (r - Surd.of(Fraction(3, 2))).sign() == -1
    assert (r - Surd.of(Dyadic(45, 5))).sign() == 1
    assert Surd(Dyadic(3), Dyadic(-2)).sign() == 1  # 3 - 2 sqrt 2 > 0
    assert Surd(Dyadic(-3), Dyadic(2)).sign() == -1


@pytest.mark.parametrize("iso", ISOMETRIES + [Isometry(r, f, Point.of(1, 2)) for r in range(0, 8, 2) for f in (0, 1)])
def test_isometry_inverse_roundtrip(iso):
    inv = iso.inverse()
    for p in samples(3):
        assert inv.apply_exact(iso.apply_exact(p)) == p
    assert abs(iso.determinant) == 1


def test_isometry_preserves_distance_exactly():
    iso = Isometry(1, True, Point.of(3, 4))
    p, q = Point.of(0, 0), Point.of(1, Dyadic(1, 1))
    a, b = iso.apply(p), iso.apply(q)
    d = (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1])
    assert d == Surd.of(p.dist2(q))
    with pytest.raises(DomainError):
        iso.inverse()


def test_export_passes_identity():
    for depth in (1, 2, 5, 8):
        v = certify(export_table(depth))
        assert v.passed and v.isometry.is_identity()
        assert v.to_json()["pass"] is True
        assert "continuity" in v.to_json()["note"]


@pytest.mark.parametrize("iso", ISOMETRIES)
def test_passes_under_isometry_and_reports_inverse(iso):
    table = transform_table(export_table(8), iso)
    v = certify(table, 0)
    assert v.passed, v.first_violation
    assert v.isometry == iso.inverse()
    assert detect_isometry(table) == iso.inverse()


def test_detect_isometry_failure():
    pts = [Point.of(0, 0)] * 3
    with pytest.raises(IsometryError):
        detect_isometry(CandidateTable(1, pts))


def test_perturbations_all_fail():
    base = export_table(8)
    rng = random.Random(2024)
    for _ in range(100):
        i = rng.randrange(len(base.points))
        while True:
            a, b = rng.randint(-12, 12), rng.randint(-12, 12)
            if Fraction(a * a + b * b, 64 * 64) >= Fraction(1, 400):
                break
        v = certify(moved(base, i, Dyadic(a, 6), Dyadic(b, 6)), 0)
        assert not v.passed and v.first_violation


def test_anchor_perturbation_fails_early():
    # moving p(1/2) breaks the anchor triangle before any later check
    base = export_table(6, "decimal")
    v = certify(moved(base, 32, Dyadic.from_fraction(Fraction(1, 8)), Dyadic(0)), decimal_tolerance())
    assert not v.passed and v.failed_check == "C1"


def test_c2_detects_reordering_inside_triangle():
    base = export_table(6)
    pts = list(base.points)
    pts[5], pts[27] = pts[27], pts[5]
    v = certify(CandidateTable(6, pts))
    assert v.failed_check == "C2"
    viol = v.first_violation
    assert parse_dyadic(viol["dist_sq"]) > parse_dyadic(viol["limit"])
    assert viol["i"] < viol["j"]


def test_c3_catches_nudge_that_keeps_locality():
    # a 2^-8 nudge inside the triangle leaves every pair within 4 dt
    v = certify(moved(export_table(6), 2, Dyadic(0), Dyadic(-1, 8)))
    assert v.failed_check == "C3"
    assert v.first_violation["index"] == 2 and v.first_violation["dist_sq"] == "1/2^16"


def test_outside_sample_fails_c1():
    base = export_table(2)
    pts = list(base.points)
    pts[1] = Point.of(0, 1)
    assert certify(CandidateTable(2, pts)).failed_check == "C1"


def test_double_point_swap_still_passes():
    # s(1/16) = s(3/16), so this "edit" changes nothing
    base = export_table(4)
    assert base.points[1] == base.points[3]


def test_tolerance_lets_small_noise_through():
    base = export_table(6)
    t = moved(base, 10, Dyadic(1, 20), Dyadic(0))
    assert not certify(t, 0).passed
    assert certify(t, Dyadic(1, 16)).passed
    with pytest.raises(DomainError):
        certify(base, Dyadic(-1, 3))


def test_decimal_roundtrip(tmp_path):
    for depth in (4, 9):
        table = export_table(depth, "decimal")
        path = tmp_path / f"t{depth}.json"
        path.write_text(json.dumps(table.to_json()))
        loaded = load_table(path)
        assert loaded.points == table.points
        assert certify(loaded, decimal_tolerance()).passed


def test_decimal_precision_rounding():
    obj = {"depth": 1, "encoding": "decimal", "precision": 4,
           "points": [["0", "0"], ["1.03", "0.97"], ["2", "0"]]}
    t = parse_table(obj)
    assert t.points[1] == Point(Dyadic(1), Dyadic(1))
    assert parse_table({**obj, "precision": 64}).points[1] != Point.of(1, 1)


def test_decimal_tolerance_rounds_up():
    tol = decimal_tolerance("1e-12")
    assert tol.to_fraction() >= Fraction(1, 10**12)
    assert tol.to_fraction() - Fraction(1, 10**12) < Fraction(1, 2**80)
    assert decimal_tolerance("0.25", 4) == Dyadic(1, 2)


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({"depth": 2, "points": [[0, 0]] * 4}, "length"),
        ({"depth": 0, "points": [[0, 0]]}, "depth"),
        ({"points": []}, "depth"),
        ({"depth": 1, "points": [[0, 0], [1], [2, 0]]}, "points[1]"),
        ({"depth": 1, "points": [[0, 0], ["1/3", 1], [2, 0]]}, "points[1]"),
        ({"depth": 1, "encoding": "hex", "points": []}, "encoding"),
    ],
)
def test_table_errors(obj, fragment):
    with pytest.raises(TableError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        parse_table(obj)


def test_load_table_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(TableError):
        load_table(p)


def test_candidate_table_length_check():
    with pytest.raises(TableError, match="^length"):
        CandidateTable(3, samples(2))


def test_verdict_json_shape():
    v = certify(moved(export_table(4), 3, Dyadic(1, 2), Dyadic(0)))
    j = json.loads(json.dumps(v.to_json()))
    assert j["pass"] is False and j["failed_check"] in {"C1", "C2", "C3", "C4"}
    assert j["first_violation"]["reason"]
