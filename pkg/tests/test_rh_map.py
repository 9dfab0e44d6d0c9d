from __future__ import annotations

import itertools
import random
from fractions import Fraction

import mpmath
import pytest

from pvi_algebra.errors import ConductorBoundError, KappaConstraintError
from pvi_algebra.exact_scalar import conductor_bound, from_rational, is_two_cos_rational_angle, minimal_polynomial, sqrt_rational, to_float
from pvi_algebra.rh_map import TraceTuple, fricke_theta, rh, rh_numeric, trace_tuple, wall_maps_to_singular
from pvi_algebra.surface import Theta
from pvi_algebra.weyl import Kappa, apply_reflections, reflect

from .utils import cayley_theta, degree6_theta, known_kappa, random_kappa


def _traces(*values):
    return TraceTuple(*(v if not isinstance(v, (int, str)) else from_rational(v) for v in values))


def test_fricke_relations():
    assert fricke_theta(_traces(0, 0, 0, 0)) == cayley_theta()
    root2 = sqrt_rational(2)
    assert fricke_theta(_traces(root2, root2, 1, 1)) == degree6_theta()
    assert fricke_theta(_traces(2, 2, 2, 2)) == Theta.of(("8", "8", "8", "28"))


def test_fricke_under_even_sign_changes():
    t = (sqrt_rational(2), sqrt_rational(3), from_rational(1), sqrt_rational(5) - 1)
    base = fricke_theta(TraceTuple(*t)).as_tuple()
    for signs in itertools.product((1, -1), repeat=4):
        if signs.count(-1) % 2:
            continue
        image = fricke_theta(TraceTuple(*(s * v for s, v in zip(signs, t)))).as_tuple()
        # theta_i picks up s_i * s_4; theta4 is unchanged.
        for i in range(3):
            assert image[i] == signs[i] * signs[3] * base[i]
        assert image[3] == base[3]
    flipped = fricke_theta(TraceTuple(*(-v for v in t)))
    assert flipped.as_tuple() == base


def test_rh_at_known_parameters():
    assert rh(known_kappa("a1x2_degree6")) == degree6_theta()
    assert rh(known_kappa("cayley")) == cayley_theta()
    assert rh(known_kappa("klein")) == Theta.of(("1", "1", "1", "0"))
    kappa = Kappa.parse("-1/12,1/3,1/3,1/4,1/4")
    assert rh(kappa) == Theta.of(("0", "0", "-1", "0"))
    assert rh(kappa) == rh(reflect(0, kappa))


def test_trace_tuple():
    traces = trace_tuple(known_kappa("a1x2_degree6"))
    assert traces.as_tuple() == (sqrt_rational(2), sqrt_rational(2), from_rational(1), from_rational(1))


@pytest.mark.parametrize(
    "seed, denominators",
    [(31, (2, 3, 4, 6, 12)), (41, (2, 4, 5, 10)), (43, (3, 5, 15)), (47, (2, 3, 4, 5))],
)
def test_rh_is_weyl_invariant(seed, denominators):
    rng = random.Random(seed)
    for _ in range(250):
        kappa = random_kappa(rng, denominators)
        theta = rh(kappa)
        word = [rng.randrange(5) for _ in range(rng.randint(1, 6))]
        assert rh(apply_reflections(word, kappa)) == theta, (kappa.as_strings(), word)
        assert rh(reflect(word[0], kappa)) == theta


def test_rh_respects_the_conductor_bound():
    kappa = Kappa(
        Fraction(1, 7), Fraction(1, 11), Fraction(1, 13), Fraction(1, 5),
        1 - Fraction(2, 7) - Fraction(1, 11) - Fraction(1, 13) - Fraction(1, 5),
    )
    # k0 + k1 + k2 + k3 has denominator 5005, so t4 needs conductor 10010.
    with conductor_bound(1000):
        with pytest.raises(ConductorBoundError):
            rh(kappa)


def test_rh_values_are_cyclotomic_integers():
    rng = random.Random(37)
    for _ in range(10):
        for value in rh(random_kappa(rng)).as_tuple():
            assert all(c.denominator == 1 for c in minimal_polynomial(value).coeffs)


def test_rh_numeric_matches_exact_path():
    kappa = known_kappa("icosahedral")
    exact = rh(kappa)
    numeric = rh_numeric(kappa.as_strings(), bits=128)
    for value, approx in zip(exact.as_tuple(), numeric):
        assert abs(to_float(value, 128).midpoint - approx) < mpmath.mpf(10) ** -30
    # Irrational parameters take the floating point route only.
    values = ["0.1", str(mpmath.sqrt(2) / 10), "0.2", "0.3", str(1 - 0.2 - mpmath.sqrt(2) / 10 - 0.5)]
    assert len(rh_numeric(values, bits=64)) == 4
    with pytest.raises(KappaConstraintError):
        rh_numeric(["0.1", "0.1", "0.1", "0.1", "0.1"])


def test_wall_numeric_cross_check():
    on_wall = wall_maps_to_singular(known_kappa("a1x2_degree6"))
    assert on_wall.in_wall
    assert on_wall.singular is True
    assert on_wall.agreement is True
    klein = wall_maps_to_singular(known_kappa("klein"))
    assert not klein.in_wall
    assert klein.singular is False
    assert klein.agreement is True
    cayley = wall_maps_to_singular(known_kappa("cayley"))
    assert cayley.agreement is True
    assert len(cayley.report.accepted) == 4
    assert cayley.to_dict()["inconclusive"] is False


def test_is_two_cos_on_traces():
    for value in trace_tuple(known_kappa("icosahedral")).as_tuple():
        assert is_two_cos_rational_angle(value)
