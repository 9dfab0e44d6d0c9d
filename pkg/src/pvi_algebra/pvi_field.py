"""Painleve VI Hamiltonian system and checks of explicit algebraic solutions."""

from __future__ import annotations

import contextvars
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mp

from .constants import CRITERION_MIN_DEGREE, DEFAULT_BITS
from .errors import CatalogError, PVIError
from .exact_scalar import RationalPoly
from .weyl import Kappa

logger = logging.getLogger(__name__)

TARGETS = ("0", "1", "infinity")


def _check_z(z: Any) -> None:
    if z == 0 or z == 1:
        raise PVIError(f"The Hamiltonian is singular at z = {z}")


def _brace(q: Any, z: Any, kappa: Kappa) -> Any:
    q1, qz = q - 1, q - z
    return kappa.k1 * q1 * qz + (kappa.k2 - 1) * q * q1 + kappa.k3 * q * qz


def _coeff(value: Fraction, like: Any) -> Any:
    # Rational parameters enter mpmath arithmetic as mpf.
    if isinstance(like, (int, Fraction)):
        return value
    return mpmath.mpf(value.numerator) / value.denominator


def hamiltonian(q: Any, p: Any, z: Any, kappa: Kappa) -> Any:
    """``H`` with ``z(z-1)H = q(q-z)(q-1)p^2 - {...}p + k0(k0+k4)(q-z)``.

    Works on :class:`~fractions.Fraction` for exact values and on mpmath
    numbers at the caller's precision.
    """

    _check_z(z)
    k = _kappa_like(kappa, z)
    q1, qz = q - 1, q - z
    numerator = q * qz * q1 * p * p - _brace(q, z, k) * p + k.k0 * (k.k0 + k.k4) * qz
    return numerator / (z * (z - 1))


def vector_field(q: Any, p: Any, z: Any, kappa: Kappa) -> Tuple[Any, Any]:
    """``(dq/dz, dp/dz) = (dH/dp, -dH/dq)`` in closed form."""

    _check_z(z)
    k = _kappa_like(kappa, z)
    q1, qz = q - 1, q - z
    denominator = z * (z - 1)
    dh_dp = (2 * q * qz * q1 * p - _brace(q, z, k)) / denominator
    cubic_q = qz * q1 + q * q1 + q * qz
    brace_q = k.k1 * (qz + q1) + (k.k2 - 1) * (q1 + q) + k.k3 * (qz + q)
    dh_dq = (cubic_q * p * p - brace_q * p + k.k0 * (k.k0 + k.k4)) / denominator
    return dh_dp, -dh_dq


@dataclass(frozen=True)
class _NumericKappa:
    k0: Any
    k1: Any
    k2: Any
    k3: Any
    k4: Any


def _kappa_like(kappa: Kappa, like: Any) -> Any:
    if isinstance(like, (int, Fraction)):
        return kappa
    return _NumericKappa(*(_coeff(v, like) for v in kappa.as_tuple()))


@dataclass(frozen=True)
class RationalCurveSolution:
    """Algebraic solution ``(z(s), q(s), p(s))`` given by rational functions."""

    name: str
    kappa: Kappa
    z_num: RationalPoly
    z_den: RationalPoly
    q_num: RationalPoly
    q_den: RationalPoly
    p_num: RationalPoly
    p_den: RationalPoly
    degree: int

    def __post_init__(self) -> None:
        for label, num, den in self.pairs():
            if den.is_zero():
                raise CatalogError(f"{self.name}: {label} has a zero denominator")
            if num.to_sympy().gcd(den.to_sympy()).degree() > 0:
                raise CatalogError(f"{self.name}: numerator and denominator of {label} share a factor")
        actual = max(self.z_num.degree, self.z_den.degree)
        if actual < 1:
            raise CatalogError(f"{self.name}: z(s) is constant and defines no solution")
        if actual != self.degree:
            raise CatalogError(f"{self.name}: declared degree {self.degree} but z(s) has degree {actual}")

    def pairs(self) -> Tuple[Tuple[str, RationalPoly, RationalPoly], ...]:
        return (
            ("z", self.z_num, self.z_den),
            ("q", self.q_num, self.q_den),
            ("p", self.p_num, self.p_den),
        )

    def singular_at(self, s: Fraction) -> Optional[str]:
        """Reason ``s`` is unusable as a sample, or ``None``."""

        for label, num, den in self.pairs():
            if den(s) == 0:
                return f"pole of {label}"
        zn, zd = self.z_num(s), self.z_den(s)
        if zn == 0 or zn == zd:
            return "z(s) is a fixed singular point"
        dz = self.z_num.derivative() * self.z_den - self.z_num * self.z_den.derivative()
        if dz(s) == 0:
            return "critical point of z(s)"
        return None


def map_degree(sol: RationalCurveSolution) -> int:
    return max(sol.z_num.degree, sol.z_den.degree)


def _quotient(num: RationalPoly, den: RationalPoly, s: Any) -> Tuple[Any, Any]:
    n, dn = num.evaluate_mp(s, derivative=True)
    d, dd = den.evaluate_mp(s, derivative=True)
    return n / d, (dn * d - n * dd) / (d * d)


def hamilton_residuals(sol: RationalCurveSolution, s: Fraction, bits: int = DEFAULT_BITS) -> Tuple[Any, Any]:
    """Relative residuals of ``dq/ds = H_p z'`` and ``dp/ds = -H_q z'`` at ``s``."""

    with mp.workprec(bits):
        x = mpmath.mpf(s.numerator) / s.denominator
        z, dz = _quotient(sol.z_num, sol.z_den, x)
        q, dq = _quotient(sol.q_num, sol.q_den, x)
        p, dp = _quotient(sol.p_num, sol.p_den, x)
        field_q, field_p = vector_field(q, p, z, sol.kappa)
        expected_q, expected_p = field_q * dz, field_p * dz
        first = abs(dq - expected_q) / (1 + abs(dq) + abs(expected_q))
        second = abs(dp - expected_p) / (1 + abs(dp) + abs(expected_p))
        return first, second


@dataclass
class ResidualReport:
    name: str
    bits: int
    samples: List[Fraction] = field(default_factory=list)
    residuals: List[Tuple[Any, Any]] = field(default_factory=list)
    skipped: Dict[str, str] = field(default_factory=dict)

    @property
    def max_residual(self) -> Any:
        values = [max(pair) for pair in self.residuals]
        return max(values) if values else mpmath.mpf(0)

    @property
    def threshold(self) -> Any:
        return mpmath.ldexp(1, -(self.bits // 2))

    @property
    def passed(self) -> bool:
        return bool(self.residuals) and self.max_residual < self.threshold

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "bits": self.bits,
            "samples": len(self.samples),
            "max_residual": mpmath.nstr(self.max_residual, 5),
            "threshold": mpmath.nstr(self.threshold, 5),
            "pass": self.passed,
            "skipped": dict(self.skipped),
        }


def _small_rationals() -> Iterator[Fraction]:
    height = 1
    while True:
        for den in range(1, height + 1):
            for num in (height, -height) if den < height else range(-height, height + 1):
                if math.gcd(num, den) == 1:
                    yield Fraction(num, den)
        height += 1


def select_samples(sol: RationalCurveSolution, count: int) -> List[Fraction]:
    """First ``count`` non-singular rationals in order of height."""

    chosen: List[Fraction] = []
    seen = set()
    for s in _small_rationals():
        if s in seen:
            continue
        seen.add(s)
        if sol.singular_at(s) is None:
            chosen.append(s)
            if len(chosen) == count:
                return chosen
    return chosen  # pragma: no cover


def verify_solution(
    sol: RationalCurveSolution,
    samples: Optional[Sequence[Fraction]] = None,
    bits: int = DEFAULT_BITS,
    *,
    count: int = 100,
    workers: int = 1,
) -> ResidualReport:
    """Check both Hamilton equations along the curve.

    Parameters
    ----------
    sol:
        Curve to check.
    samples:
        Parameter values; defaults to :func:`select_samples` with ``count``.
    bits:
        Working precision. The curve passes when every relative residual is
        below ``2^(-bits/2)``.
    workers:
        Threads evaluating samples; the report is the same for any value.
    """

    if samples is None:
        samples = select_samples(sol, count)
    report = ResidualReport(name=sol.name, bits=bits)
    usable = []
    for s in samples:
        s = Fraction(s)
        reason = sol.singular_at(s)
        if reason is not None:
            logger.warning("Skipping sample s = %s of %s: %s", s, sol.name, reason)
            report.skipped[str(s)] = reason
            continue
        usable.append(s)
    if workers <= 1:
        residuals = [hamilton_residuals(sol, s, bits) for s in usable]
    else:
        # mpmath precision is process-wide; hold it while the workers run.
        with mp.workprec(bits), ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(contextvars.copy_context().run, hamilton_residuals, sol, s, bits)
                for s in usable
            ]
            residuals = [future.result() for future in futures]
    report.samples = usable
    report.residuals = residuals
    logger.info("%s: max residual %s over %d samples", sol.name, mpmath.nstr(report.max_residual, 5), len(usable))
    return report


def ramification_profile(sol: RationalCurveSolution, at: str) -> Tuple[int, ...]:
    """Fibre multiplicities of ``s -> z(s)`` over ``0``, ``1`` or ``infinity``.

    The finite part comes from the square-free decomposition of the
    numerator of ``z - target``; the point ``s = infinity`` adds
    ``d - deg`` of that numerator.
    """

    if at == "0":
        poly = sol.z_num
    elif at == "1":
        poly = sol.z_num - sol.z_den
    elif at == "infinity":
        poly = sol.z_den
    else:
        raise PVIError(f"Ramification target must be one of {', '.join(TARGETS)}, got {at!r}")
    parts: List[int] = []
    _, factors = poly.to_sympy().sqf_list()
    for factor, multiplicity in factors:
        parts.extend([multiplicity] * factor.degree())
    at_infinity = map_degree(sol) - poly.degree
    if at_infinity > 0:
        parts.append(at_infinity)
    return tuple(sorted(parts, reverse=True))


@dataclass
class AuditReport:
    name: str
    degree: int
    status: str
    univalent: Dict[str, int]
    scaled_kappa: Tuple[Fraction, ...]

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in self.scaled_kappa)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "degree": self.degree,
            "status": self.status,
            "univalent_branches": dict(self.univalent),
            "d_kappa": [str(v) for v in self.scaled_kappa],
            "integral": self.integral,
        }


def rationality_audit(sol: RationalCurveSolution) -> AuditReport:
    """Integrality of ``d*kappa`` for solutions without univalent branches.

    ``status`` is ``"skipped"`` below degree 7, ``"exempt"`` when some fibre
    over ``0``, ``1`` or ``infinity`` has a part equal to one, and otherwise
    ``"pass"`` or ``"fail"`` by integrality.
    """

    d = map_degree(sol)
    univalent = {target: ramification_profile(sol, target).count(1) for target in TARGETS}
    scaled = tuple(d * v for v in sol.kappa.as_tuple())
    report = AuditReport(name=sol.name, degree=d, status="skipped", univalent=univalent, scaled_kappa=scaled)
    if d < CRITERION_MIN_DEGREE:
        return report
    if any(univalent.values()):
        report.status = "exempt"
    else:
        report.status = "pass" if report.integral else "fail"
    return report


__all__ = [
    "AuditReport",
    "RationalCurveSolution",
    "ResidualReport",
    "TARGETS",
    "hamilton_residuals",
    "hamiltonian",
    "map_degree",
    "ramification_profile",
    "rationality_audit",
    "select_samples",
    "vector_field",
    "verify_solution",
]
