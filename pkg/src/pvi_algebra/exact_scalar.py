"""Exact arithmetic in real cyclotomic fields."""

from __future__ import annotations

import contextlib
import contextvars
import itertools
import json
import logging
import math
import re
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import mpmath
from mpmath import iv, mp
from sympy import Poly, Rational, Symbol, cyclotomic_poly, factorint, legendre_symbol, mobius, totient
from sympy.polys.densearith import dup_add, dup_mul, dup_mul_ground, dup_neg, dup_rem, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .constants import DEFAULT_BITS, DEFAULT_CONDUCTOR_BOUND, MIN_BITS
from .errors import ConductorBoundError, ConfigError, NotRealError, PVIError, SquareRootError

logger = logging.getLogger(__name__)

RationalLike = Union[int, Fraction, str]

_BOUND: contextvars.ContextVar[int] = contextvars.ContextVar(
    "pvi_conductor_bound", default=DEFAULT_CONDUCTOR_BOUND
)
# mpmath's interval and float contexts keep their precision globally.
_IV_LOCK = threading.Lock()
_X = Symbol("x")


def current_conductor_bound() -> int:
    return _BOUND.get()


@contextlib.contextmanager
def conductor_bound(limit: int) -> Iterator[int]:
    """Run the enclosed block with ``limit`` as the largest allowed conductor."""

    if limit < 2 or limit % 2:
        raise ConfigError(f"Conductor bound must be an even integer >= 2, got {limit}")
    token = _BOUND.set(limit)
    try:
        yield limit
    finally:
        _BOUND.reset(token)


def _check_conductor(conductor: int) -> None:
    bound = _BOUND.get()
    if conductor > bound:
        raise ConductorBoundError(conductor, bound)


def _to_qq(value: Any):
    if isinstance(value, Fraction):
        frac = value
    else:
        frac = Fraction(value)
    return QQ(frac.numerator, frac.denominator)


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@lru_cache(maxsize=None)
def _cyclotomic(conductor: int) -> Tuple[Any, ...]:
    poly = cyclotomic_poly(conductor, polys=True)
    return tuple(QQ(int(c)) for c in poly.all_coeffs())


@lru_cache(maxsize=None)
def _field_degree(conductor: int) -> int:
    return int(totient(conductor))


@lru_cache(maxsize=None)
def _trace_weights(conductor: int) -> Tuple[Fraction, ...]:
    # Normalised trace of zeta_N^k is mu(n)/phi(n) with n the order of zeta_N^k.
    weights = []
    for k in range(_field_degree(conductor)):
        order = conductor // math.gcd(conductor, k)
        weights.append(Fraction(int(mobius(order)), int(totient(order))))
    return tuple(weights)


def _reduce(conductor: int, dense_low: Sequence[Any]) -> List[Any]:
    rep = dup_strip(list(reversed(list(dense_low))))
    return dup_rem(rep, list(_cyclotomic(conductor)), QQ)


def _low(rep: Sequence[Any]) -> List[Any]:
    return list(reversed(rep))


def _rebase(rep: Sequence[Any], conductor: int, target: int) -> List[Any]:
    if conductor == target:
        return list(rep)
    step = target // conductor
    low = _low(rep)
    if not low:
        return []
    dense = [QQ.zero] * ((len(low) - 1) * step + 1)
    for k, c in enumerate(low):
        dense[k * step] = c
    return _reduce(target, dense)


def _conjugate(rep: Sequence[Any], conductor: int) -> List[Any]:
    dense = [QQ.zero] * conductor
    for k, c in enumerate(_low(rep)):
        dense[(-k) % conductor] += c
    return _reduce(conductor, dense)


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


class CycReal:
    """Real element of the cyclotomic field ``Q(zeta_N)``.

    The value is stored as a polynomial in ``zeta_N = exp(2*pi*i/N)`` reduced
    modulo the ``N``-th cyclotomic polynomial. ``N`` is always even so that
    ``-1`` and every ``2cos(pi*p/q)`` with ``2q | N`` live in the field.
    Binary operations work at the least common conductor of their operands.
    """

    __slots__ = ("_conductor", "_rep", "_hash", "_minpoly")

    def __init__(self, conductor: int, coeffs: Sequence[RationalLike]):
        if conductor < 2 or conductor % 2:
            raise PVIError(f"Conductor must be a positive even integer, got {conductor}")
        _check_conductor(conductor)
        rep = _reduce(conductor, [_to_qq(c) for c in coeffs])
        if _conjugate(rep, conductor) != rep:
            raise NotRealError(f"Coefficients {list(coeffs)!r} at conductor {conductor} are not real")
        self._init(conductor, rep)

    def _init(self, conductor: int, rep: List[Any]) -> None:
        self._conductor = conductor
        self._rep = rep
        self._hash: Optional[int] = None
        self._minpoly: Optional[RationalPoly] = None

    @classmethod
    def _make(cls, conductor: int, rep: List[Any]) -> "CycReal":
        obj = cls.__new__(cls)
        obj._init(conductor, rep)
        return obj

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Power-basis coefficients, lowest degree first, padded to ``phi(N)``."""

        low = [_to_fraction(c) for c in _low(self._rep)]
        return tuple(low + [Fraction(0)] * (_field_degree(self._conductor) - len(low)))

    def coefficients_at(self, conductor: int) -> Tuple[Fraction, ...]:
        if conductor % self._conductor:
            raise PVIError(f"Conductor {conductor} is not a multiple of {self._conductor}")
        low = [_to_fraction(c) for c in _low(_rebase(self._rep, self._conductor, conductor))]
        return tuple(low + [Fraction(0)] * (_field_degree(conductor) - len(low)))

    def is_zero(self) -> bool:
        return not self._rep

    def is_rational(self) -> bool:
        return len(self._rep) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise PVIError(f"{self!r} is not rational")
        return _to_fraction(self._rep[0]) if self._rep else Fraction(0)

    def scale(self, factor: RationalLike) -> "CycReal":
        return CycReal._make(self._conductor, dup_mul_ground(self._rep, _to_qq(factor), QQ))

    def _common(self, other: "CycReal", *, checked: bool = True) -> Tuple[int, List[Any], List[Any]]:
        if self._conductor == other._conductor:
            return self._conductor, self._rep, other._rep
        conductor = _lcm(self._conductor, other._conductor)
        if checked:
            _check_conductor(conductor)
        return (
            conductor,
            _rebase(self._rep, self._conductor, conductor),
            _rebase(other._rep, other._conductor, conductor),
        )

    def __add__(self, other: Any) -> "CycReal":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        conductor, a, b = self._common(other)
        return CycReal._make(conductor, dup_add(a, b, QQ))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "CycReal":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        conductor, a, b = self._common(other)
        return CycReal._make(conductor, dup_sub(a, b, QQ))

    def __rsub__(self, other: Any) -> "CycReal":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "CycReal":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            return self.scale(other.as_fraction())
        if self.is_rational():
            return other.scale(self.as_fraction())
        conductor, a, b = self._common(other)
        product = dup_rem(dup_mul(a, b, QQ), list(_cyclotomic(conductor)), QQ)
        return CycReal._make(conductor, product)

    __rmul__ = __mul__

    def __neg__(self) -> "CycReal":
        return CycReal._make(self._conductor, dup_neg(self._rep, QQ))

    def __pow__(self, exponent: int) -> "CycReal":
        if not isinstance(exponent, int) or exponent < 0:
            raise PVIError(f"Only non-negative integer powers are supported, got {exponent!r}")
        result = from_rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: Any) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if hash(self) != hash(other):
            return False
        _, a, b = self._common(other, checked=False)
        return a == b

    def __hash__(self) -> int:
        if self._hash is None:
            weights = _trace_weights(self._conductor)
            trace = sum(
                (w * _to_fraction(c) for w, c in zip(weights, _low(self._rep))),
                Fraction(0),
            )
            self._hash = hash(trace)
        return self._hash

    def __lt__(self, other: Any) -> bool:
        return sign(self - other) < 0

    def __le__(self, other: Any) -> bool:
        return sign(self - other) <= 0

    def __gt__(self, other: Any) -> bool:
        return sign(self - other) > 0

    def __ge__(self, other: Any) -> bool:
        return sign(self - other) >= 0

    def __bool__(self) -> bool:
        return bool(self._rep)

    def __float__(self) -> float:
        return float(to_float(self, MIN_BITS).midpoint)

    def __repr__(self) -> str:
        if self.is_rational():
            return f"CycReal({str(self.as_fraction())!r})"
        return f"CycReal({self._conductor}, {[str(c) for c in self.coeffs]!r})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.as_fraction())
        return mpmath.nstr(to_float(self, MIN_BITS).midpoint, 12)


def _coerce(value: Any) -> Optional[CycReal]:
    if isinstance(value, CycReal):
        return value
    if isinstance(value, (int, Fraction)):
        return from_rational(value)
    return None


@dataclass(frozen=True)
class RationalPoly:
    """Dense univariate polynomial over Q, lowest degree first."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "RationalPoly":
        return cls(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())))

    @classmethod
    def _from_dup(cls, rep: Sequence[Any]) -> "RationalPoly":
        return cls(tuple(_to_fraction(c) for c in reversed(rep)))

    def _dup(self) -> List[Any]:
        return [_to_qq(c) for c in reversed(self.coeffs)]

    def to_sympy(self, symbol: Symbol = _X) -> Poly:
        high = [Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)] or [0]
        return Poly(high, symbol, domain=QQ)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Any) -> Any:
        total: Any = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def evaluate_mp(self, x: Any, derivative: bool = False) -> Any:
        """Evaluate at an mpmath number using the caller's working precision."""

        high = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(self.coeffs)]
        if not high:
            return (mpmath.mpf(0), mpmath.mpf(0)) if derivative else mpmath.mpf(0)
        return mpmath.polyval(high, x, derivative=derivative)

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        return RationalPoly._from_dup(dup_add(self._dup(), other._dup(), QQ))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return RationalPoly._from_dup(dup_sub(self._dup(), other._dup(), QQ))

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        return RationalPoly._from_dup(dup_mul(self._dup(), other._dup(), QQ))

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __pow__(self, exponent: int) -> "RationalPoly":
        result = RationalPoly((Fraction(1),))
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: RationalLike) -> "RationalPoly":
        factor = Fraction(factor)
        return RationalPoly(tuple(factor * c for c in self.coeffs))

    def count_roots(self, lower: RationalLike, upper: RationalLike) -> int:
        """Number of real roots in the closed interval, by Sturm sequences."""

        return int(self.to_sympy().count_roots(Rational(str(lower)), Rational(str(upper))))

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr())


def from_rational(value: RationalLike) -> CycReal:
    rep = [_to_qq(value)]
    return CycReal._make(2, dup_strip(rep))


def two_cos(p: int, q: int) -> CycReal:
    """Return ``2cos(pi*p/q) = zeta_2q^p + zeta_2q^-p`` exactly."""

    if q <= 0:
        raise PVIError(f"Denominator must be positive, got {q}")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    conductor = 2 * q
    _check_conductor(conductor)
    dense = [QQ.zero] * conductor
    dense[p % conductor] += QQ.one
    dense[(-p) % conductor] += QQ.one
    return CycReal._make(conductor, _reduce(conductor, dense))


def add(a: CycReal, b: CycReal) -> CycReal:
    return a + b


def mul(a: CycReal, b: CycReal) -> CycReal:
    return a * b


def neg(a: CycReal) -> CycReal:
    return -a


def equals(a: CycReal, b: CycReal) -> bool:
    return a == b


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CycReal:
    if p == 2:
        return two_cos(1, 4)
    conductor = 4 * p
    _check_conductor(conductor)
    # Quadratic Gauss sum: equals sqrt(p) or i*sqrt(p).
    dense = [QQ.zero] * conductor
    for a in range(1, p):
        dense[(4 * a) % conductor] += QQ(int(legendre_symbol(a, p)))
    if p % 4 == 3:
        rotated = [QQ.zero] * conductor
        for k, c in enumerate(dense):
            rotated[(k + p) % conductor] -= c
        dense = rotated
    return CycReal(conductor, [_to_fraction(c) for c in dense])


def sqrt_rational(value: RationalLike) -> CycReal:
    """Return the non-negative square root of a rational as a ``CycReal``."""

    r = Fraction(value)
    if r < 0:
        raise SquareRootError(f"Square root of negative rational {r} is not real")
    if r == 0:
        return from_rational(0)
    square, free = 1, 1
    for prime, exponent in factorint(r.numerator * r.denominator).items():
        square *= prime ** (exponent // 2)
        if exponent % 2:
            free *= prime
    result = from_rational(Fraction(square, r.denominator))
    for prime in sorted(factorint(free)):
        result = result * _sqrt_prime(prime)
    # _sqrt_prime is cached, so the bound in force now is checked here.
    _check_conductor(result.conductor)
    return result


def minimal_polynomial(v: CycReal) -> RationalPoly:
    """Monic minimal polynomial of ``v`` over Q.

    The powers ``1, v, v^2, ...`` are laid out as columns in the power basis of
    ``Q(zeta_N)``; the first column dependent on its predecessors gives the
    relation.
    """

    if v._minpoly is not None:
        return v._minpoly
    if v.is_rational():
        result = RationalPoly((-v.as_fraction(), Fraction(1)))
    else:
        conductor = v.conductor
        dim = _field_degree(conductor)
        top = max(1, dim // 2)
        modulus = list(_cyclotomic(conductor))
        columns: List[List[Any]] = []
        rep: List[Any] = [QQ.one]
        for _ in range(top + 1):
            low = _low(rep)
            columns.append(low + [QQ.zero] * (dim - len(low)))
            rep = dup_rem(dup_mul(rep, v._rep, QQ), modulus, QQ)
        rows = [[columns[j][i] for j in range(top + 1)] for i in range(dim)]
        reduced, pivots = DomainMatrix(rows, (dim, top + 1), QQ).rref()
        k = next(j for j in range(top + 1) if j not in pivots)
        entries = reduced.to_Matrix()
        coeffs = [-Fraction(int(entries[i, k].p), int(entries[i, k].q)) for i in range(k)]
        result = RationalPoly(tuple(coeffs) + (Fraction(1),))
    v._minpoly = result
    return result


def is_two_cos_rational_angle(v: CycReal) -> bool:
    """Decide whether ``v = 2cos(pi*r)`` for some rational ``r``.

    By Kronecker's theorem this holds exactly when ``v`` is an algebraic
    integer all of whose conjugates lie in ``[-2, 2]``.
    """

    poly = minimal_polynomial(v)
    if any(c.denominator != 1 for c in poly.coeffs):
        return False
    return poly.count_roots(-2, 2) == poly.degree


@dataclass(frozen=True)
class FloatInterval:
    """Closed interval ``[lower, upper]`` of mpmath floats carried at ``prec`` bits."""

    lower: Any
    upper: Any
    prec: int = DEFAULT_BITS

    def contains(self, value: Any) -> bool:
        return self.lower <= value <= self.upper

    def overlaps(self, other: "FloatInterval") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    @property
    def midpoint(self) -> Any:
        with mp.workprec(self.prec):
            return (self.lower + self.upper) / 2

    @property
    def width(self) -> Any:
        with mp.workprec(self.prec):
            return self.upper - self.lower


def to_float(v: CycReal, bits: int = DEFAULT_BITS) -> FloatInterval:
    """Enclose ``v`` in an interval of relative width below ``2^(1 - bits)``."""

    if bits < MIN_BITS:
        raise PVIError(f"Precision must be at least {MIN_BITS} bits, got {bits}")
    low = _low(v._rep)
    conductor = v.conductor
    prec = bits + 16 + len(low).bit_length()
    while True:
        with _IV_LOCK:
            saved = iv.prec
            iv.prec = prec
            try:
                total = iv.mpf(0)
                for k, c in enumerate(low):
                    if not c:
                        continue
                    coeff = iv.mpf(int(c.numerator)) / int(c.denominator)
                    if k == 0:
                        total += coeff
                    else:
                        total += coeff * iv.cos(2 * iv.pi * k / conductor)
            finally:
                iv.prec = saved
            with mp.workprec(prec):
                lower = mp.make_mpf(total._mpi_[0])
                upper = mp.make_mpf(total._mpi_[1])
                scale = max(mpmath.mpf(1), abs(lower), abs(upper))
                tight = upper - lower < mpmath.ldexp(scale, 1 - bits)
        if tight:
            return FloatInterval(lower, upper, prec)
        logger.debug("Widening precision for conductor %d to %d bits", conductor, 2 * prec)
        prec *= 2


def sign(v: CycReal) -> int:
    """Exact sign of ``v``; refines the enclosure until it excludes zero."""

    if v.is_zero():
        return 0
    bits = 64
    while True:
        box = to_float(v, bits)
        if box.lower > 0:
            return 1
        if box.upper < 0:
            return -1
        bits *= 2


def _trig_angles(max_denominator: int) -> List[Fraction]:
    return sorted({Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(q + 1)})


def _trig_branch(
    first: int,
    terms: int,
    cosines: Sequence[float],
    exact: Sequence[CycReal],
) -> List[Tuple[int, ...]]:
    found = []
    for rest in itertools.combinations_with_replacement(range(first, len(cosines)), terms - 1):
        combo = (first,) + rest
        if abs(sum(cosines[i] for i in combo)) > 1e-9:
            continue
        if sum((exact[i] for i in combo), from_rational(0)).is_zero():
            found.append(combo)
    return found


def solve_trig_diophantine(
    terms: int,
    max_denominator: int,
    *,
    workers: int = 1,
) -> List[Tuple[Fraction, ...]]:
    """Find all ``0 <= r_1 <= ... <= r_n <= 1`` with ``sum cos(pi*r_k) = 0``.

    Parameters
    ----------
    terms:
        Number ``n`` of cosines in the sum.
    max_denominator:
        Largest denominator of each ``r_k`` in lowest terms.
    workers:
        Threads sharing the search; the result does not depend on it.
    """

    if terms < 1:
        raise PVIError(f"terms must be >= 1, got {terms}")
    if max_denominator < 1:
        raise PVIError(f"max_denominator must be >= 1, got {max_denominator}")
    angles = _trig_angles(max_denominator)
    cosines = [math.cos(math.pi * a) for a in angles]
    exact = [two_cos(a.numerator, a.denominator) for a in angles]
    combos: List[Tuple[int, ...]] = []
    if workers <= 1:
        for first in range(len(angles)):
            combos.extend(_trig_branch(first, terms, cosines, exact))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(contextvars.copy_context().run, _trig_branch, first, terms, cosines, exact)
                for first in range(len(angles))
            ]
            for future in futures:
                combos.extend(future.result())
    solutions = sorted(tuple(angles[i] for i in combo) for combo in combos)
    logger.info(
        "Trigonometric search with %d terms, denominators <= %d: %d solutions",
        terms,
        max_denominator,
        len(solutions),
    )
    return solutions


def scalar_to_json(v: CycReal) -> Union[str, Dict[str, Any]]:
    """Rationals become ``"p/q"`` strings, everything else a conductor object."""

    if v.is_rational():
        return str(v.as_fraction())
    return {"conductor": v.conductor, "coeffs": [str(c) for c in v.coeffs]}


def scalar_from_json(payload: Any) -> CycReal:
    if isinstance(payload, dict):
        try:
            conductor = int(payload["conductor"])
            coeffs = [Fraction(str(c)) for c in payload["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise PVIError(f"Malformed cyclotomic scalar {payload!r}") from exc
        return CycReal(conductor, coeffs)
    if isinstance(payload, (int, str)):
        return parse_scalar(str(payload))
    raise PVIError(f"Cannot read a scalar from {payload!r}")


_TWO_COS_RE = re.compile(
    r"^2\s*\*?\s*cos\(\s*(?:(-?\d+)(?:\s*/\s*(\d+))?\s*\*?\s*)?pi\s*\)$"
)
_SQRT_RE = re.compile(r"^(?:(-?\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*([^)]+?)\s*\)$")


def parse_scalar(text: Union[str, Dict[str, Any]]) -> CycReal:
    """Parse ``"p/q"``, ``"2cos(p/q*pi)"``, ``"[c*]sqrt(p/q)"`` or a JSON object."""

    if isinstance(text, dict):
        return scalar_from_json(text)
    raw = text.strip().replace(" ", "")
    if raw.startswith("-") and not re.match(r"^-\d+(/\d+)?$", raw):
        return -parse_scalar(raw[1:])
    match = _TWO_COS_RE.match(raw)
    if match:
        p = int(match.group(1)) if match.group(1) else 1
        q = int(match.group(2)) if match.group(2) else 1
        return two_cos(p, q)
    match = _SQRT_RE.match(raw)
    if match:
        factor = Fraction(match.group(1)) if match.group(1) else Fraction(1)
        try:
            radicand = Fraction(match.group(2))
        except ValueError as exc:
            raise PVIError(f"Cannot parse radicand in {text!r}") from exc
        return sqrt_rational(radicand).scale(factor)
    if raw.startswith("{"):
        return scalar_from_json(json.loads(raw))
    try:
        return from_rational(Fraction(raw))
    except (ValueError, ZeroDivisionError) as exc:
        raise PVIError(f"Cannot parse scalar {text!r}") from exc


__all__ = [
    "CycReal",
    "FloatInterval",
    "RationalPoly",
    "add",
    "conductor_bound",
    "current_conductor_bound",
    "equals",
    "from_rational",
    "is_two_cos_rational_angle",
    "minimal_polynomial",
    "mul",
    "neg",
    "parse_scalar",
    "scalar_from_json",
    "scalar_to_json",
    "sign",
    "solve_trig_diophantine",
    "sqrt_rational",
    "to_float",
    "two_cos",
]
