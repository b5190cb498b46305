"""Smoke tests for the python bindings against known exact values."""

from fractions import Fraction

import charvar


def test_cubic_census():
    row = charvar.cubic_census(7)
    assert (
        row["triple_root"],
        row["double_root"],
        row["three_distinct"],
        row["one_root_quadratic"],
        row["irreducible"],
    ) == (3, 3, 4, 21, 18)
    assert charvar.cubic_census(2) == charvar.cubic_census_enumerated(2)


def test_quadratics_and_unity():
    assert charvar.irreducible_quadratic_count(5) == 10
    assert charvar.roots_of_unity_count(7, 3) == 3
    assert charvar.roots_of_unity_count(5, 3) == 1


def test_stratum_counts():
    counts = charvar.stratum_counts(3, 2, 2)
    assert counts == {
        "central": 1,
        "repeating": 0,
        "reducible": 0,
        "partially_reducible": 4,
        "irreducible": 16,
    }
    assert charvar.stratum_counts_enumerated(3, 2, 2) == counts
    assert charvar.epoly_eval(3, 2, 2) == 21
    assert charvar.epoly_eval(2, 2, 3) == 10


def test_epoly_is_exact_bigint():
    # values above 2^64 must come through exactly
    v = charvar.epoly_eval(3, 4, 9973)
    expected = (
        Fraction((9973 - 1) ** 8, 6)
        + Fraction((9973**2 - 1) ** 4, 2)
        + Fraction((9973**2 + 9973 + 1) ** 4, 3)
    )
    assert v > 2**64
    assert v == expected


def test_euler_char():
    assert [charvar.euler_char(2, r) for r in (1, 2, 3)] == [1, 2, 4]
    assert [charvar.euler_char(3, r) for r in (1, 2, 3)] == [1, 3, 9]


def test_points_total():
    pts = charvar.points(3, 1, 2)
    assert len(pts) == 4
    assert sorted(p["stratum"] for p in pts) == [
        "central",
        "irreducible",
        "irreducible",
        "partially_reducible",
    ]


def test_git_census():
    census = charvar.git_census(2, 2, 3)
    assert census["class_counts"] == {"central": 4, "irreducible": 6}


def test_orbit_census():
    rep = charvar.orbit_census(2, 2, 3)
    assert rep["total"] == 10
    assert rep["max_orbit"] == 6
    assert rep["max_ratio"] == (3, 5)


def test_roundtrip():
    assert charvar.realize_roundtrip_ok(2, 2, 5)
    assert charvar.realize_roundtrip_ok(3, 1, 2)
