from __future__ import annotations

import random
from fractions import Fraction

import pytest

from pvi_algebra.errors import KappaConstraintError, PVIError
from pvi_algebra.weyl import (
    BCoords,
    Kappa,
    apply_reflections,
    dynkin_type,
    f4_adjacency,
    from_b_coords,
    in_wall_d4,
    in_wall_f4,
    reduce_to_alcove,
    reflect,
    s2_stratum_counts,
    stratum,
    to_b_coords,
)

from .utils import known_kappa, random_kappa


def _b(*values):
    return BCoords(*(Fraction(v) for v in values))


def test_kappa_constraint_and_parsing():
    kappa = Kappa.parse("1/4,0,0,1/12,5/12")
    assert kappa == known_kappa("a1x2_degree6")
    assert Kappa.parse(["1/2", 0, 0, 0, 0]).k0 == Fraction(1, 2)
    assert kappa.as_strings() == ["1/4", "0", "0", "1/12", "5/12"]
    assert kappa[4] == Fraction(5, 12)
    with pytest.raises(KappaConstraintError):
        Kappa.parse("1/4,0,0,0,0")
    with pytest.raises(KappaConstraintError):
        Kappa.parse("1,0,0")
    with pytest.raises(KappaConstraintError):
        Kappa.parse("a,b,c,d,e")


def test_reflections():
    kappa = Kappa.parse("-1/12,1/3,1/3,1/4,1/4")
    assert reflect(0, kappa) == Kappa.parse("1/12,1/4,1/4,1/6,1/6")
    on_wall = Kappa.parse("1/4,0,0,1/12,5/12")
    assert reflect(1, on_wall) == on_wall
    with pytest.raises(PVIError):
        reflect(5, kappa)


def test_reflections_are_involutions_and_preserve_walls():
    rng = random.Random(5)
    for _ in range(200):
        kappa = random_kappa(rng, (3, 5, 7, 10))
        for i in range(5):
            image = reflect(i, kappa)
            assert reflect(i, image) == kappa
            assert in_wall_d4(image) == in_wall_d4(kappa)
            assert stratum(image) == stratum(kappa)
        if in_wall_d4(kappa):
            assert in_wall_f4(kappa)


def test_b_coordinates():
    assert to_b_coords(known_kappa("klein")) == _b("3/7", "2/7", "1/7", "0")
    assert to_b_coords(known_kappa("icosahedral")) == _b("7/12", "2/5", "1/5", "-1/12")
    assert to_b_coords(known_kappa("cayley")) == _b("1/2", "1/2", "0", "0")
    rng = random.Random(17)
    for _ in range(500):
        kappa = random_kappa(rng, (2, 3, 7, 9, 11))
        assert from_b_coords(to_b_coords(kappa)) == kappa


def test_walls():
    assert in_wall_d4(known_kappa("a1x2_degree6"))
    klein = known_kappa("klein")
    assert not in_wall_d4(klein)
    assert in_wall_f4(klein)
    icosahedral = known_kappa("icosahedral")
    assert not in_wall_d4(icosahedral)
    assert not in_wall_f4(icosahedral)
    assert in_wall_f4(Kappa.parse("1/10,3/10,1/5,1/5,1/10"))


def test_reduce_to_alcove():
    kappa = known_kappa("a1x2_degree6")
    assert reduce_to_alcove(kappa) == (kappa, ())
    reduced, word = reduce_to_alcove(Kappa.parse("-1/12,1/3,1/3,1/4,1/4"))
    assert reduced == Kappa.parse("1/12,1/4,1/4,1/6,1/6")
    assert word == (0,)
    assert reduce_to_alcove(known_kappa("cayley"))[0] == known_kappa("cayley")


def test_reduce_to_alcove_reproduces_with_word():
    rng = random.Random(23)
    for _ in range(100):
        kappa = random_kappa(rng)
        reduced, word = reduce_to_alcove(kappa)
        assert all(v >= 0 for v in reduced.as_tuple())
        assert apply_reflections(word, kappa) == reduced


def test_strata():
    label = stratum(known_kappa("a1x2_degree6"))
    assert label.index_set == frozenset({1, 2})
    assert label.type == "2A1"
    assert label.sequence_class == "S1"
    assert label.to_dict() == {"I": [1, 2], "type": "2A1", "class": "S1"}
    assert dynkin_type({0, 1, 2}) == "A3"
    assert dynkin_type({1, 2, 3, 4}) == "4A1"
    assert dynkin_type(set()) == "empty"
    assert dynkin_type({0}) == "A1"
    assert stratum(known_kappa("cayley")).type == "4A1"
    klein = stratum(known_kappa("klein"))
    assert klein.type == "empty"
    assert klein.sequence_class == "big-open"
    with pytest.raises(PVIError):
        dynkin_type(range(5))


def test_open_alcove_points_are_off_the_walls():
    rng = random.Random(29)
    for _ in range(200):
        kappa = random_kappa(rng, (5, 7, 11))
        assert (stratum(kappa).index_set == frozenset()) == (not in_wall_d4(kappa))


def test_s2_counts_and_adjacency():
    assert s2_stratum_counts() == {"A1": 1, "A2": 4, "A3": 6, "D4": 4}
    graph = f4_adjacency()
    assert set(graph["A1"]) == {"2A1", "A2"}
    assert graph["D4"] == ()
    assert all("empty" not in targets for targets in graph.values())
    assert set(graph["empty"]) == {"A1"}
