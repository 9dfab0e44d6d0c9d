from __future__ import annotations

import dataclasses
from fractions import Fraction

import mpmath
import pytest
from mpmath import mp

from pvi_algebra.catalog import load_catalog
from pvi_algebra.errors import CatalogError, PVIError
from pvi_algebra.exact_scalar import RationalPoly
from pvi_algebra.pvi_field import (
    RationalCurveSolution,
    hamiltonian,
    map_degree,
    ramification_profile,
    rationality_audit,
    select_samples,
    vector_field,
    verify_solution,
)

from .utils import known_kappa


def _poly(*coeffs):
    return RationalPoly(tuple(Fraction(c) for c in coeffs))


def _ratio_derivative(num, den, s):
    return (num.derivative()(s) * den(s) - num(s) * den.derivative()(s)) / den(s) ** 2


def test_hamiltonian_values():
    assert hamiltonian(Fraction(0), Fraction(0), Fraction(2), known_kappa("cayley")) == Fraction(-1, 4)
    with pytest.raises(PVIError):
        hamiltonian(Fraction(1), Fraction(1), Fraction(1), known_kappa("cayley"))


def test_vector_field_matches_finite_differences():
    kappa = known_kappa("klein")
    with mp.workdps(40):
        q, p, z = mpmath.mpf(2), mpmath.mpf(1) / 3, mpmath.mpf(3)
        dq, dp = vector_field(q, p, z, kappa)
        assert abs(dq - mpmath.diff(lambda t: hamiltonian(q, t, z, kappa), p)) < mpmath.mpf(10) ** -25
        assert abs(dp + mpmath.diff(lambda t: hamiltonian(t, p, z, kappa), q)) < mpmath.mpf(10) ** -25


def test_klein_curve_satisfies_the_equations_exactly_at_a_point():
    klein = load_catalog().get("klein")
    s = Fraction(2)
    z = klein.z_num(s) / klein.z_den(s)
    q = klein.q_num(s) / klein.q_den(s)
    p = klein.p_num(s) / klein.p_den(s)
    assert (z, q, p) == (Fraction(1, 2), Fraction(1, 2), 0)
    field_q, field_p = vector_field(q, p, z, klein.kappa)
    assert (field_q, field_p) == (Fraction(6, 7), Fraction(12, 49))
    dz = _ratio_derivative(klein.z_num, klein.z_den, s)
    assert _ratio_derivative(klein.q_num, klein.q_den, s) == field_q * dz
    assert _ratio_derivative(klein.p_num, klein.p_den, s) == field_p * dz


@pytest.mark.parametrize("name", ["klein", "icosahedral"])
def test_catalog_solutions_verify(name):
    solution = load_catalog().get(name)
    report = verify_solution(solution, count=100)
    assert report.passed
    assert len(report.samples) == 100
    assert report.max_residual < mpmath.mpf("1e-30")
    assert report.to_dict()["pass"] is True


def test_perturbed_solution_fails():
    klein = load_catalog().get("klein")
    broken = dataclasses.replace(klein, name="broken", p_num=klein.p_num + klein.p_den)
    report = verify_solution(broken, count=10)
    assert not report.passed


def test_verification_is_independent_of_workers():
    klein = load_catalog().get("klein")
    serial = verify_solution(klein, count=8)
    threaded = verify_solution(klein, count=8, workers=3)
    assert serial.samples == threaded.samples
    assert serial.residuals == threaded.residuals


def test_singular_samples_are_skipped():
    klein = load_catalog().get("klein")
    assert klein.singular_at(Fraction(0)) is not None
    assert Fraction(0) not in select_samples(klein, 10)
    report = verify_solution(klein, samples=[Fraction(0), Fraction(2)])
    assert "0" in report.skipped
    assert report.samples == [Fraction(2)]


def test_degrees_and_ramification():
    catalog = load_catalog()
    klein, icosahedral = catalog.get("klein"), catalog.get("icosahedral")
    assert map_degree(klein) == 7
    assert map_degree(icosahedral) == 12
    for target in ("0", "1", "infinity"):
        assert ramification_profile(klein, target) == (3, 2, 2)
    assert ramification_profile(icosahedral, "0") == (5, 3, 2, 2)
    assert ramification_profile(icosahedral, "infinity") == (5, 3, 2, 2)
    assert ramification_profile(icosahedral, "1") == (3, 3, 2, 2, 1, 1)
    with pytest.raises(PVIError):
        ramification_profile(klein, "2")


def test_rationality_audit():
    catalog = load_catalog()
    klein = rationality_audit(catalog.get("klein"))
    assert klein.status == "pass"
    assert klein.integral
    assert klein.to_dict()["d_kappa"] == ["1", "1", "1", "1", "2"]
    icosahedral = rationality_audit(catalog.get("icosahedral"))
    assert icosahedral.status == "exempt"
    assert icosahedral.univalent["1"] == 2


def test_small_degree_curves_are_skipped():
    cubic = RationalCurveSolution(
        name="cubic",
        kappa=known_kappa("cayley"),
        z_num=_poly(0, 0, 0, 1),
        z_den=_poly(1),
        q_num=_poly(0, 1),
        q_den=_poly(1),
        p_num=_poly(1),
        p_den=_poly(1),
        degree=3,
    )
    assert rationality_audit(cubic).status == "skipped"
    assert ramification_profile(cubic, "0") == (3,)
    assert ramification_profile(cubic, "infinity") == (3,)


def test_constant_z_is_rejected():
    with pytest.raises(CatalogError):
        RationalCurveSolution(
            name="constant",
            kappa=known_kappa("cayley"),
            z_num=_poly(2),
            z_den=_poly(1),
            q_num=_poly(0, 1),
            q_den=_poly(1),
            p_num=_poly(1),
            p_den=_poly(1),
            degree=0,
        )
