"""Parameter-level Riemann-Hilbert map from kappa to theta."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

import mpmath
from mpmath import mp

from .constants import DEFAULT_BITS
from .errors import KappaConstraintError
from .exact_scalar import CycReal, two_cos
from .surface import SingularLocusReport, Theta, singular_points_numeric
from .weyl import Kappa, in_wall_d4

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceTuple:
    """Local monodromy traces ``(t1, t2, t3, t4)``."""

    t1: CycReal
    t2: CycReal
    t3: CycReal
    t4: CycReal

    def as_tuple(self) -> Tuple[CycReal, CycReal, CycReal, CycReal]:
        return (self.t1, self.t2, self.t3, self.t4)


def _two_cos_of(angle: Fraction) -> CycReal:
    return two_cos(angle.numerator, angle.denominator)


def trace_tuple(kappa: Kappa) -> TraceTuple:
    """``t_i = 2cos(pi*(k0 + k_i))`` for ``i <= 3`` and ``t4 = 2cos(pi*(k0 + k1 + k2 + k3))``."""

    k0, k1, k2, k3, _ = kappa.as_tuple()
    return TraceTuple(
        _two_cos_of(k0 + k1),
        _two_cos_of(k0 + k2),
        _two_cos_of(k0 + k3),
        _two_cos_of(k0 + k1 + k2 + k3),
    )


def _fricke(t: Sequence[Any]) -> Tuple[Any, Any, Any, Any]:
    t1, t2, t3, t4 = t
    return (
        t1 * t4 + t2 * t3,
        t2 * t4 + t1 * t3,
        t3 * t4 + t1 * t2,
        t1 * t2 * t3 * t4 + t1 * t1 + t2 * t2 + t3 * t3 + t4 * t4 - 4,
    )


def fricke_theta(t: TraceTuple) -> Theta:
    """Surface parameters from traces via the Fricke relations."""

    return Theta(*_fricke(t.as_tuple()))


def rh(kappa: Kappa) -> Theta:
    return fricke_theta(trace_tuple(kappa))


def _mpf(value: Any) -> Any:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, str) and "/" in value:
        return _mpf(Fraction(value))
    return mpmath.mpf(value)


def rh_numeric(values: Sequence[Any], bits: int = DEFAULT_BITS) -> Tuple[Any, Any, Any, Any]:
    """Floating-point ``rh`` for real, possibly irrational, parameters.

    ``values`` are five reals accepted by :func:`mpmath.mpf`; the affine
    constraint is checked to half the working precision.
    """

    if len(values) != 5:
        raise KappaConstraintError(f"kappa needs five entries, got {len(values)}")
    with mp.workprec(bits):
        k0, k1, k2, k3, k4 = (_mpf(v) for v in values)
        if abs(2 * k0 + k1 + k2 + k3 + k4 - 1) > mpmath.ldexp(1, -(bits // 2)):
            raise KappaConstraintError("2*k0 + k1 + k2 + k3 + k4 must equal 1")
        t = [2 * mpmath.cospi(k0 + k) for k in (k1, k2, k3)]
        t.append(2 * mpmath.cospi(k0 + k1 + k2 + k3))
        return _fricke(t)


def singular_locus_report(kappa: Kappa, bits: int = DEFAULT_BITS) -> SingularLocusReport:
    return singular_points_numeric(rh(kappa), bits)


@dataclass
class WallProbe:
    """Comparison of wall membership with singularity of the image surface."""

    kappa: Kappa
    in_wall: bool
    singular: Optional[bool]
    report: SingularLocusReport

    @property
    def agreement(self) -> Optional[bool]:
        if self.singular is None:
            return None
        return self.in_wall == self.singular

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kappa": self.kappa.as_strings(),
            "theta": self.report.theta.to_json(),
            "wall_d4": self.in_wall,
            "singular": self.singular,
            "agreement": self.agreement,
            "inconclusive": self.singular is None,
        }


def wall_maps_to_singular(kappa: Kappa, bits: int = DEFAULT_BITS) -> WallProbe:
    """Check that ``kappa`` lies on a D4(1) wall exactly when ``S(rh(kappa))`` is singular.

    When the numerical search leaves a candidate unclassified and no point is
    accepted, ``singular`` and ``agreement`` are ``None``.
    """

    report = singular_locus_report(kappa, bits)
    singular: Optional[bool] = report.is_singular
    if not singular and report.inconclusive:
        singular = None
    probe = WallProbe(kappa=kappa, in_wall=in_wall_d4(kappa), singular=singular, report=report)
    if probe.agreement is False:
        logger.warning("Wall membership and singularity disagree for kappa %s", kappa.as_strings())
    return probe


__all__ = [
    "TraceTuple",
    "WallProbe",
    "fricke_theta",
    "rh",
    "rh_numeric",
    "singular_locus_report",
    "trace_tuple",
    "wall_maps_to_singular",
]
