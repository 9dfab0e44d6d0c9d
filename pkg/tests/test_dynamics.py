from __future__ import annotations

import pytest

from pvi_algebra.dynamics import (
    Word,
    apply_word,
    canonical_order,
    classify_finiteness,
    generators,
    orbit,
    orbit_degree,
)
from pvi_algebra.errors import PVIError, UnreducedWordError
from pvi_algebra.exact_scalar import is_two_cos_rational_angle
from pvi_algebra.surface import Theta

from .utils import cayley_theta, degree6_orbit, degree6_theta, point


def test_words():
    assert len(Word()) == 0
    assert str(Word()) == "e"
    assert Word.parse("3,1,2") == Word((3, 1, 2))
    assert Word.parse("312") == Word((3, 1, 2))
    assert Word.parse("1 2").is_even()
    with pytest.raises(UnreducedWordError):
        Word((3, 3))
    with pytest.raises(UnreducedWordError):
        Word((4,))
    with pytest.raises(UnreducedWordError):
        Word.parse("1,x")


def test_generators():
    assert len(generators("G")) == 3
    pairs = generators("G2")
    assert len(pairs) == 6
    assert all(w.is_even() for w in pairs)
    with pytest.raises(PVIError):
        generators("G3")


def test_apply_word():
    theta = degree6_theta()
    start = point(("sqrt(2)", "sqrt(2)", "1"), theta)
    assert apply_word(Word(), start) == start
    assert apply_word(Word((3,)), start) == point(("sqrt(2)", "sqrt(2)", "0"), theta)
    assert apply_word(Word((3, 1)), start) == point(("sqrt(2)", "sqrt(2)", "0"), theta)
    assert apply_word(Word((1, 3)), start) == point(("0", "sqrt(2)", "2"), theta)


def test_degree6_orbit_under_both_groups():
    theta = degree6_theta()
    start = point(("sqrt(2)", "sqrt(2)", "0"), theta)
    expected = {point(values, theta) for values in degree6_orbit()}
    for group in ("G", "G2"):
        result = orbit(start, group)
        assert result.status == "finite"
        assert set(result.points) == expected
        assert orbit_degree(result) == 6
        assert result.degree == 6


def test_orbit_is_closed_under_generators():
    result = orbit(point(("sqrt(2)", "sqrt(2)", "0"), degree6_theta()), "G")
    members = set(result.points)
    for member in members:
        for word in generators("G") + generators("G2"):
            assert apply_word(word, member) in members


def test_cayley_orbits():
    cayley = cayley_theta()
    fixed = orbit(point(("-2", "-2", "-2"), cayley), "G2")
    assert fixed.status == "finite"
    assert fixed.degree == 1
    pair = orbit(point(("0", "0", "2"), cayley), "G")
    assert pair.points == (point(("0", "0", "-2"), cayley), point(("0", "0", "2"), cayley))
    assert pair.degree == 2


def test_orbit_cap_gives_unknown():
    result = orbit(point(("3", "3", "-7"), cayley_theta()), "G2", cap=10)
    assert result.status == "unknown"
    assert result.cap == 10
    assert result.explored == 10
    assert orbit_degree(result) is None
    assert result.to_dict()["degree"] is None
    with pytest.raises(PVIError):
        orbit(point(("3", "3", "-7"), cayley_theta()), cap=0)


def test_parallel_expansion_matches_serial():
    start = point(("3", "3", "-7"), cayley_theta())
    assert orbit(start, "G2", cap=200, workers=4).explored == orbit(start, "G2", cap=200).explored
    theta = degree6_theta()
    serial = orbit(point(("sqrt(2)", "sqrt(2)", "0"), theta), "G2")
    parallel = orbit(point(("sqrt(2)", "sqrt(2)", "0"), theta), "G2", workers=3)
    assert serial.points == parallel.points


def test_classify_finiteness():
    theta = degree6_theta()
    finite = classify_finiteness(point(("sqrt(2)", "sqrt(2)", "0"), theta))
    assert finite.status == "finite"
    assert finite.degree == 6

    cayley = cayley_theta()
    start = point(("3", "3", "-7"), cayley)
    infinite = classify_finiteness(start)
    assert infinite.status == "infinite"
    assert infinite.reason == "coordinate"
    assert infinite.explored >= 7
    assert infinite.witness == start
    assert infinite.witness_index == 1
    assert not is_two_cos_rational_angle(infinite.witness.coords[infinite.witness_index - 1])
    payload = infinite.to_dict()
    assert payload["witness"]["index"] == 1
    assert payload["witness"]["x"] == ["3", "3", "-7"]

    fixed = classify_finiteness(point(("-2", "-2", "-2"), cayley))
    assert fixed.status == "finite"
    assert fixed.degree == 1


def test_classify_small_orbit_on_bound_corner():
    # (2, 2, 2) is the fixed point of S(8, 8, 8, 28); degree 1 is below the criterion.
    start = point(("2", "2", "2"), Theta.of(("8", "8", "8", "28")))
    result = classify_finiteness(start, cap=50)
    assert result.status == "finite"
    assert result.degree == 1


def test_canonical_order_is_lexicographic():
    theta = degree6_theta()
    points = [point(values, theta) for values in degree6_orbit()]
    ordered = canonical_order(reversed(points))
    assert ordered == canonical_order(points)
    assert ordered[0].x1 == 0


@pytest.mark.parametrize(
    "values, theta",
    [
        (("sqrt(2)", "sqrt(2)", "0"), degree6_theta()),
        (("0", "0", "2"), cayley_theta()),
        (("0", "0", "0"), Theta.of(("1", "1", "1", "0"))),
    ],
)
def test_even_subgroup_orbit_is_inside_full_orbit(values, theta):
    start = point(values, theta)
    full = orbit(start, "G")
    even = orbit(start, "G2")
    assert full.status == even.status == "finite"
    assert set(even.points) <= set(full.points)
    assert full.degree <= 2 * even.degree


def test_klein_orbit_has_two_cos_coordinates():
    # S(1, 1, 1, 0) carries the seven 0/1 points other than (1, 1, 1).
    start = point(("0", "0", "0"), Theta.of(("1", "1", "1", "0")))
    result = orbit(start, "G")
    assert result.degree == 7
    assert (1, 1, 1) not in {tuple(int(c.as_fraction()) for c in p.coords) for p in result.points}
    for member in result.points:
        assert all(is_two_cos_rational_angle(c) for c in member.coords)
    classified = classify_finiteness(start)
    assert classified.status == "finite"
    assert classified.degree == 7
