from __future__ import annotations

import random

import pytest

from pvi_algebra.errors import NotOnSurfaceError, SquareRootError
from pvi_algebra.exact_scalar import from_rational, parse_scalar, sqrt_rational
from pvi_algebra.surface import (
    Theta,
    complete_point,
    critical_polynomial,
    evaluate_f,
    gradient,
    involution,
    is_fixed_by_all,
    singular_points_numeric,
    theta_bounds_check,
)

from .utils import cayley_theta, degree6_theta, point

CAYLEY_SINGULAR = {
    ("-2", "2", "2"),
    ("2", "-2", "2"),
    ("2", "2", "-2"),
    ("-2", "-2", "-2"),
}


def _coords(values):
    return tuple(parse_scalar(v) for v in values)


def test_evaluate_f():
    assert evaluate_f(_coords(("sqrt(2)", "sqrt(2)", "0")), degree6_theta()).is_zero()
    assert evaluate_f(_coords(("0", "0", "0")), Theta.of(("0", "0", "0", "0"))).is_zero()
    assert evaluate_f(_coords(("-2", "2", "2")), cayley_theta()).is_zero()
    assert evaluate_f(_coords(("1", "1", "1")), cayley_theta()) == 0


def test_surface_point_rejects_off_surface_coordinates():
    with pytest.raises(NotOnSurfaceError) as excinfo:
        point(("1", "0", "0"), cayley_theta())
    assert excinfo.value.residual == -3


def test_involutions_on_known_points():
    theta = degree6_theta()
    assert involution(3, point(("sqrt(2)", "sqrt(2)", "1"), theta)) == point(("sqrt(2)", "sqrt(2)", "0"), theta)
    cayley = cayley_theta()
    assert involution(1, point(("-2", "2", "2"), cayley)) == point(("-2", "2", "2"), cayley)
    assert involution(1, point(("3", "3", "-7"), cayley)) == point(("18", "3", "-7"), cayley)


def test_involutions_square_to_identity_and_stay_on_surface():
    rng = random.Random(3)
    theta = Theta.of(("1", "2", "-1/2", "-3"))
    checked = 0
    for _ in range(100):
        x1 = from_rational(rng.randint(-3, 3))
        x2 = from_rational(rng.randint(-3, 3))
        try:
            candidates = complete_point(x1, x2, theta)
        except SquareRootError:
            continue
        for start in candidates:
            for i in (1, 2, 3):
                image = involution(i, start)
                assert evaluate_f(image.coords, theta).is_zero()
                assert involution(i, image) == start
                fixed = image == start
                assert fixed == gradient(start.coords, theta)[i - 1].is_zero()
            checked += 1
    assert checked >= 20


def test_complete_point():
    theta = degree6_theta()
    points = complete_point("sqrt(2)", "sqrt(2)", theta)
    assert {p.x3 for p in points} == {from_rational(0), from_rational(1)}
    cayley = cayley_theta()
    (double,) = complete_point("-2", "2", cayley)
    assert double.x3 == 2
    with pytest.raises(SquareRootError):
        complete_point("1", "0", Theta.of(("0", "0", "0", "sqrt(2)")))


def test_fixed_points():
    cayley = cayley_theta()
    assert is_fixed_by_all(point(("-2", "-2", "-2"), cayley))
    assert not is_fixed_by_all(point(("0", "0", "2"), cayley))
    assert not is_fixed_by_all(point(("sqrt(2)", "sqrt(2)", "0"), degree6_theta()))


def test_critical_polynomial_has_constant_leading_coefficient():
    coeffs = critical_polynomial(degree6_theta())
    assert len(coeffs) == 6
    assert abs(coeffs[-1].as_fraction()) == 4
    assert critical_polynomial(cayley_theta())[0].is_zero()


def test_cayley_singular_points():
    report = singular_points_numeric(cayley_theta())
    assert not report.degenerate
    assert not report.inconclusive
    exact = {c.exact for c in report.accepted}
    assert None not in exact
    assert exact == {_coords(values) for values in CAYLEY_SINGULAR}
    rejected = [c for c in report.candidates if c.status == "rejected"]
    assert len(rejected) == 1
    assert report.to_dict()["singular"] is True


def test_origin_is_singular_when_theta_vanishes():
    report = singular_points_numeric(Theta.of(("0", "0", "0", "0")))
    assert _coords(("0", "0", "0")) in {c.exact for c in report.accepted}


def test_degree6_surface_is_singular():
    report = singular_points_numeric(degree6_theta())
    assert report.is_singular
    assert len(report.accepted) == 2
    root2, root6 = sqrt_rational(2), sqrt_rational(6)
    expected = {
        ((root2 - root6).scale("1/2"), (root2 + root6).scale("1/2"), from_rational(2)),
        ((root2 + root6).scale("1/2"), (root2 - root6).scale("1/2"), from_rational(2)),
    }
    assert {c.exact for c in report.accepted} == expected
    assert all(c.residual < 1e-30 for c in report.accepted)


def test_smooth_surface_has_no_singular_points():
    report = singular_points_numeric(Theta.of(("1", "1", "1", "0")))
    assert not report.is_singular
    assert not report.inconclusive


def test_theta_bounds():
    assert theta_bounds_check(cayley_theta())
    assert theta_bounds_check(degree6_theta())
    assert not theta_bounds_check(Theta.of(("8", "8", "8", "28")))
    assert not theta_bounds_check(Theta.of(("0", "0", "0", "-29")))
    assert theta_bounds_check(Theta.of(("4*sqrt(3)", "0", "0", "0")))
    assert not theta_bounds_check(Theta.of(("5*sqrt(3)", "0", "0", "0")))
