"""The cubic surfaces ``S(theta)``, their involutions and singular points."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import mpmath
from mpmath import mp
from sympy import Poly, resultant, symbols

from .constants import DEFAULT_BITS, RECOGNITION_MAX_DENOMINATOR, THETA_BOUNDS
from .errors import ConductorBoundError, NotOnSurfaceError, PVIError, SquareRootError
from .exact_scalar import (
    CycReal,
    from_rational,
    parse_scalar,
    scalar_to_json,
    sqrt_rational,
    to_float,
    two_cos,
)

logger = logging.getLogger(__name__)

ScalarInput = Union[str, int, Fraction, Dict[str, Any], CycReal]


def as_scalar(value: ScalarInput) -> CycReal:
    if isinstance(value, CycReal):
        return value
    if isinstance(value, (int, Fraction)):
        return from_rational(value)
    return parse_scalar(value)


@dataclass(frozen=True)
class Theta:
    """Parameters ``(theta1, theta2, theta3, theta4)`` of the surface family."""

    theta1: CycReal
    theta2: CycReal
    theta3: CycReal
    theta4: CycReal

    @classmethod
    def of(cls, values: Sequence[ScalarInput]) -> "Theta":
        if len(values) != 4:
            raise PVIError(f"theta needs four entries, got {len(values)}")
        return cls(*(as_scalar(v) for v in values))

    def as_tuple(self) -> Tuple[CycReal, CycReal, CycReal, CycReal]:
        return (self.theta1, self.theta2, self.theta3, self.theta4)

    def to_json(self) -> List[Any]:
        return [scalar_to_json(t) for t in self.as_tuple()]


def _f(x: Sequence[Any], t: Sequence[Any]) -> Any:
    x1, x2, x3 = x
    return (
        x1 * x2 * x3
        + x1 * x1
        + x2 * x2
        + x3 * x3
        - t[0] * x1
        - t[1] * x2
        - t[2] * x3
        + t[3]
    )


def _grad(x: Sequence[Any], t: Sequence[Any]) -> Tuple[Any, Any, Any]:
    x1, x2, x3 = x
    return (
        x2 * x3 + 2 * x1 - t[0],
        x1 * x3 + 2 * x2 - t[1],
        x1 * x2 + 2 * x3 - t[2],
    )


def evaluate_f(x: Sequence[CycReal], theta: Theta) -> CycReal:
    """Value of ``x1*x2*x3 + x1^2 + x2^2 + x3^2 - theta.x + theta4``."""

    return _f(x, theta.as_tuple())


def gradient(x: Sequence[CycReal], theta: Theta) -> Tuple[CycReal, CycReal, CycReal]:
    return _grad(x, theta.as_tuple())


@dataclass(frozen=True)
class SurfacePoint:
    """Point ``(x1, x2, x3)`` on ``S(theta)``; membership is checked exactly."""

    x1: CycReal
    x2: CycReal
    x3: CycReal
    theta: Theta = field(compare=False, hash=False)

    def __post_init__(self) -> None:
        residual = evaluate_f(self.coords, self.theta)
        if not residual.is_zero():
            raise NotOnSurfaceError(
                f"Point ({self.x1}, {self.x2}, {self.x3}) is not on the surface: f = {residual}",
                residual=residual,
            )

    @classmethod
    def of(cls, values: Sequence[ScalarInput], theta: Theta) -> "SurfacePoint":
        if len(values) != 3:
            raise PVIError(f"A point needs three coordinates, got {len(values)}")
        return cls(*(as_scalar(v) for v in values), theta=theta)

    @classmethod
    def _trusted(cls, coords: Sequence[CycReal], theta: Theta) -> "SurfacePoint":
        # Skips the surface check; only for images of points already on S(theta).
        obj = object.__new__(cls)
        object.__setattr__(obj, "x1", coords[0])
        object.__setattr__(obj, "x2", coords[1])
        object.__setattr__(obj, "x3", coords[2])
        object.__setattr__(obj, "theta", theta)
        return obj

    @property
    def coords(self) -> Tuple[CycReal, CycReal, CycReal]:
        return (self.x1, self.x2, self.x3)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x": [scalar_to_json(c) for c in self.coords],
            "theta": self.theta.to_json(),
        }


def involution(i: int, point: SurfacePoint) -> SurfacePoint:
    """Second intersection of ``S(theta)`` with the ``x_i``-line through ``point``.

    By Vieta ``x_i' = theta_i - x_i - x_j*x_k``; the other coordinates are kept.
    """

    if i not in (1, 2, 3):
        raise PVIError(f"Involution index must be 1, 2 or 3, got {i}")
    coords = list(point.coords)
    j, k = [m for m in range(3) if m != i - 1]
    theta_i = point.theta.as_tuple()[i - 1]
    coords[i - 1] = theta_i - coords[i - 1] - coords[j] * coords[k]
    return SurfacePoint._trusted(coords, point.theta)


def is_fixed_by_all(point: SurfacePoint) -> bool:
    return all(g.is_zero() for g in gradient(point.coords, point.theta))


def complete_point(x1: ScalarInput, x2: ScalarInput, theta: Theta) -> List[SurfacePoint]:
    """Points of ``S(theta)`` above ``(x1, x2)``.

    Only discriminants that are non-negative rationals are handled; anything
    else raises :class:`SquareRootError`.
    """

    x1, x2 = as_scalar(x1), as_scalar(x2)
    b = x1 * x2 - theta.theta3
    c = x1 * x1 + x2 * x2 - theta.theta1 * x1 - theta.theta2 * x2 + theta.theta4
    disc = b * b - 4 * c
    if not disc.is_rational():
        raise SquareRootError(f"Discriminant {disc!r} over ({x1}, {x2}) is not rational")
    root = sqrt_rational(disc.as_fraction())
    values = [(root - b).scale(Fraction(1, 2)), (-root - b).scale(Fraction(1, 2))]
    if root.is_zero():
        values = values[:1]
    return [SurfacePoint(x1, x2, x3, theta=theta) for x3 in values]


def theta_bounds_check(theta: Theta) -> bool:
    """Strict bounds ``|theta_i| < 8`` for ``i <= 3`` and ``|theta4| < 28``.

    Comparisons are exact: the sign of each difference is decided by
    refining an interval enclosure after an exact zero test.
    """

    for value, bound in zip(theta.as_tuple(), THETA_BOUNDS.values()):
        if not (-bound < value < bound):
            return False
    return True


@dataclass
class SingularCandidate:
    """One numeric solution of ``grad f = 0`` with its classification."""

    coords: Tuple[Any, Any, Any]
    residual: Any
    status: str
    exact: Optional[Tuple[CycReal, CycReal, CycReal]] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "x": [mpmath.nstr(c, 20) for c in self.coords],
            "residual": mpmath.nstr(self.residual, 5),
            "status": self.status,
        }
        if self.exact is not None:
            payload["exact"] = [scalar_to_json(c) for c in self.exact]
        return payload


@dataclass
class SingularLocusReport:
    theta: Theta
    bits: int
    candidates: List[SingularCandidate] = field(default_factory=list)
    degenerate: bool = False

    @property
    def accepted(self) -> List[SingularCandidate]:
        return [c for c in self.candidates if c.status == "accepted"]

    @property
    def inconclusive(self) -> bool:
        return any(c.status == "inconclusive" for c in self.candidates)

    @property
    def is_singular(self) -> bool:
        return self.degenerate or bool(self.accepted)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theta": self.theta.to_json(),
            "bits": self.bits,
            "degenerate": self.degenerate,
            "singular": self.is_singular,
            "points": [c.to_dict() for c in self.candidates],
        }


@lru_cache(maxsize=1)
def _critical_resultant() -> Tuple[Tuple[Tuple[Tuple[int, ...], int], ...], ...]:
    """Resultant in ``x2`` of the reduced critical equations, by powers of ``x3``.

    With ``x1 = (theta1 - x2*x3)/2`` the remaining partials become
    ``g2 = (4 - x3^2)*x2 + theta1*x3 - 2*theta2`` and
    ``g3 = -x3*x2^2 + theta1*x2 + 4*x3 - 2*theta3``.
    """

    t1, t2, t3, x2, x3 = symbols("t1 t2 t3 x2 x3")
    g2 = (4 - x3 ** 2) * x2 + (t1 * x3 - 2 * t2)
    g3 = -x3 * x2 ** 2 + t1 * x2 + (4 * x3 - 2 * t3)
    eliminated = Poly(resultant(g2, g3, x2), x3)
    table = []
    for coeff in reversed(eliminated.all_coeffs()):
        terms = Poly(coeff, t1, t2, t3).terms()
        table.append(tuple((tuple(monom), int(c)) for monom, c in terms))
    return tuple(table)


def critical_polynomial(theta: Theta) -> List[CycReal]:
    """Exact coefficients (lowest first) of the univariate eliminant in ``x3``."""

    t = theta.as_tuple()
    coeffs = []
    for terms in _critical_resultant():
        total = from_rational(0)
        for (a, b, c), k in terms:
            if k:
                total = total + (t[0] ** a) * (t[1] ** b) * (t[2] ** c) * k
        coeffs.append(total)
    return coeffs


def _companion_roots(coeffs: Sequence[Any]) -> List[Any]:
    # coeffs lowest first, leading coefficient nonzero.
    degree = len(coeffs) - 1
    lead = coeffs[-1]
    companion = mp.matrix(degree, degree)
    for row in range(1, degree):
        companion[row, row - 1] = 1
    for row in range(degree):
        companion[row, degree - 1] = -coeffs[row] / lead
    return list(mp.eig(companion, left=False, right=False))


@lru_cache(maxsize=8)
def _recognition_table(bits: int) -> Tuple[Tuple[Any, int, int], ...]:
    with mp.workprec(bits):
        seen = {}
        for q in range(1, RECOGNITION_MAX_DENOMINATOR + 1):
            for p in range(q + 1):
                r = Fraction(p, q)
                if r not in seen:
                    seen[r] = 2 * mp.cos(mp.pi * p / q)
        return tuple((value, r.numerator, r.denominator) for r, value in sorted(seen.items()))


def _recognise(coords: Sequence[Any], theta: Theta, bits: int) -> Optional[Tuple[CycReal, ...]]:
    tolerance = mpmath.ldexp(1, -(bits // 3))
    exact = []
    for value in coords:
        if abs(mpmath.im(value)) > tolerance:
            return None
        match = None
        for approx, p, q in _recognition_table(bits):
            if abs(mpmath.re(value) - approx) < tolerance:
                match = (p, q)
                break
        if match is None:
            return None
        try:
            exact.append(two_cos(*match))
        except ConductorBoundError:
            return None
    try:
        if not evaluate_f(exact, theta).is_zero():
            return None
        if not all(g.is_zero() for g in gradient(exact, theta)):
            return None
    except ConductorBoundError:
        return None
    return tuple(exact)


def singular_points_numeric(theta: Theta, bits: int = DEFAULT_BITS) -> SingularLocusReport:
    """Solve ``f = grad f = 0`` numerically and confirm exact solutions.

    Parameters
    ----------
    theta:
        Surface parameters.
    bits:
        Working precision of the numerical stage.

    ``x1`` is eliminated linearly, ``x2`` through a resultant, and the quintic
    in ``x3`` is solved via the eigenvalues of its companion matrix. Each
    candidate is polished by Newton's method on ``grad f = 0`` and classified by
    its residual as accepted, rejected or inconclusive. Accepted points whose
    coordinates all match some ``2cos(pi*p/q)`` with ``q <= 60`` and pass exact
    substitution carry the exact coordinates.
    """

    report = SingularLocusReport(theta=theta, bits=bits)
    exact_coeffs = critical_polynomial(theta)
    accept = mpmath.ldexp(1, -(bits // 2))
    reject = mpmath.ldexp(1, -(bits // 8))
    near = mpmath.ldexp(1, -(bits // 3))
    with mp.workprec(bits):
        t = [to_float(v, bits).midpoint for v in theta.as_tuple()]
        coeffs = [to_float(c, bits).midpoint for c in exact_coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        x3_roots = _companion_roots(coeffs) if len(coeffs) > 1 else []
        starts = []
        for x3 in x3_roots:
            a = 4 - x3 * x3
            b = t[0] * x3 - 2 * t[1]
            if abs(a) < near:
                qa, qb, qc = -x3, t[0], 4 * x3 - 2 * t[2]
                if abs(qa) < near:
                    report.degenerate = True
                    continue
                disc = mpmath.sqrt(qb * qb - 4 * qa * qc)
                options = [(-qb + disc) / (2 * qa), (-qb - disc) / (2 * qa)]
                if abs(b) >= near:
                    options = []
            else:
                options = [-b / a]
            for x2 in options:
                x1 = (t[0] - x2 * x3) / 2
                starts.append((x1, x2, x3))

        def system(x1: Any, x2: Any, x3: Any) -> List[Any]:
            return list(_grad((x1, x2, x3), t))

        def hessian(x1: Any, x2: Any, x3: Any) -> List[List[Any]]:
            return [[2, x3, x2], [x3, 2, x1], [x2, x1, 2]]

        polished: List[Tuple[Any, Any, Any]] = []
        for start in starts:
            try:
                root = mp.findroot(system, start, J=hessian, verify=False)
                point = (root[0], root[1], root[2])
            except (ZeroDivisionError, ValueError):
                logger.debug("Newton polish failed at %s; keeping the unpolished point", start)
                point = start
            if any(max(abs(p - q) for p, q in zip(point, other)) < near for other in polished):
                continue
            polished.append(point)

        for point in polished:
            residual = max([abs(_f(point, t))] + [abs(g) for g in _grad(point, t)])
            if residual < accept:
                status = "accepted"
            elif residual > reject:
                status = "rejected"
            else:
                status = "inconclusive"
                logger.warning("Inconclusive singular-point candidate with residual %s", mpmath.nstr(residual, 5))
            candidate = SingularCandidate(coords=point, residual=residual, status=status)
            if status == "accepted":
                candidate.exact = _recognise(point, theta, bits)
            report.candidates.append(candidate)
    logger.debug(
        "Singular search: %d candidates, %d accepted",
        len(report.candidates),
        len(report.accepted),
    )
    return report


__all__ = [
    "SingularCandidate",
    "SingularLocusReport",
    "SurfacePoint",
    "Theta",
    "as_scalar",
    "complete_point",
    "critical_polynomial",
    "evaluate_f",
    "gradient",
    "involution",
    "is_fixed_by_all",
    "singular_points_numeric",
    "theta_bounds_check",
]
