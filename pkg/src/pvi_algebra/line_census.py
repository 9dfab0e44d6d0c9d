"""ON/OFF branching data, the matrix ``M(a, b, c)`` and its eigenvalue census."""

from __future__ import annotations

import contextvars
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from .constants import CENSUS_BOUND
from .errors import InvertibilityError, PVIError

logger = logging.getLogger(__name__)

Quad = Tuple[int, int, int, int]


@dataclass(frozen=True)
class OnOffData:
    """Twelve ON/OFF bits ``a``, ``b``, ``c``."""

    a: Quad
    b: Quad
    c: Quad

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            values = tuple(int(v) for v in getattr(self, name))
            if len(values) != 4 or any(v not in (0, 1) for v in values):
                raise PVIError(f"{name} must be four bits, got {values}")
            object.__setattr__(self, name, values)

    @classmethod
    def from_bits(cls, value: int) -> "OnOffData":
        """Bit ``11 - k`` of ``value`` is entry ``k`` of ``a + b + c``."""

        if not 0 <= value < 4096:
            raise PVIError(f"ON/OFF code must be in [0, 4096), got {value}")
        flat = [(value >> (11 - k)) & 1 for k in range(12)]
        return cls(tuple(flat[0:4]), tuple(flat[4:8]), tuple(flat[8:12]))

    @property
    def bits(self) -> str:
        return "".join(str(v) for v in self.a + self.b + self.c)


@dataclass(frozen=True)
class BranchMatrix:
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(4))

    def to_domain(self, domain=ZZ) -> DomainMatrix:
        return DomainMatrix([[domain(v) for v in row] for row in self.entries], (4, 4), domain)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)


def build_matrix(data: OnOffData) -> BranchMatrix:
    a1, a2, a3, a4 = data.a
    b1, b2, b3, b4 = data.b
    c1, c2, c3, c4 = data.c
    d1 = a3 + a4 + b1 + b2 + c1 + c2
    d2 = a3 + a4 + b3 + b4 + c3 + c4
    d3 = a1 + a2 + b3 + b4 + c1 + c2
    d4 = a1 + a2 + b1 + b2 + c3 + c4
    return BranchMatrix(
        (
            (d1, a3 - a4, c1 - c2, b1 - b2),
            (a3 - a4, d2, b3 - b4, c3 - c4),
            (c1 - c2, b3 - b4, d3, a1 - a2),
            (b1 - b2, c3 - c4, a1 - a2, d4),
        )
    )


def _shifted(m: BranchMatrix, bound: int) -> List[List[int]]:
    return [[(bound if i == j else 0) - m.entries[i][j] for j in range(4)] for i in range(4)]


def leading_minors(rows: Sequence[Sequence[int]]) -> List[int]:
    minors = []
    for k in range(1, len(rows) + 1):
        block = DomainMatrix([[ZZ(v) for v in row[:k]] for row in rows[:k]], (k, k), ZZ)
        minors.append(int(block.det()))
    return minors


def spectrum_below(m: BranchMatrix, bound: int) -> bool:
    """Exact test of ``lambda_max(M) < bound``.

    ``bound*I - M`` is positive definite exactly when all of its leading
    principal minors are positive (Sylvester).
    """

    return all(minor > 0 for minor in leading_minors(_shifted(m, bound)))


def characteristic_polynomial(m: BranchMatrix) -> Tuple[int, ...]:
    """Coefficients of ``det(x*I - M)``, highest degree first."""

    return tuple(int(c) for c in m.to_domain().charpoly())


def integer_eigenvalues(m: BranchMatrix, candidates: Sequence[int] = range(CENSUS_BOUND)) -> List[int]:
    charpoly = characteristic_polynomial(m)
    found = []
    for x in candidates:
        value = 0
        for c in charpoly:
            value = value * x + c
        if value == 0:
            found.append(x)
    return found


def all_data() -> Iterator[OnOffData]:
    for value in range(4096):
        yield OnOffData.from_bits(value)


@dataclass
class CensusReport:
    """Running totals for the exhaustive census; ``merge`` is commutative."""

    total: int = 0
    passed: int = 0
    float_agreements: int = 0
    invertible_at_bound: int = 0
    eigenvalue_counts: Counter = field(default_factory=Counter)
    max_float_eigenvalue: float = float("-inf")
    bound: int = CENSUS_BOUND

    def add(self, data: OnOffData) -> None:
        m = build_matrix(data)
        minors = leading_minors(_shifted(m, self.bound))
        below = all(minor > 0 for minor in minors)
        top = float(np.linalg.eigvalsh(m.to_numpy()).max())
        self.total += 1
        self.passed += int(below)
        self.float_agreements += int(below == (top < self.bound - 1e-9))
        self.invertible_at_bound += int(minors[-1] != 0)
        self.max_float_eigenvalue = max(self.max_float_eigenvalue, top)
        for value in integer_eigenvalues(m):
            self.eigenvalue_counts[value] += 1

    def merge(self, other: "CensusReport") -> "CensusReport":
        return CensusReport(
            total=self.total + other.total,
            passed=self.passed + other.passed,
            float_agreements=self.float_agreements + other.float_agreements,
            invertible_at_bound=self.invertible_at_bound + other.invertible_at_bound,
            eigenvalue_counts=self.eigenvalue_counts + other.eigenvalue_counts,
            max_float_eigenvalue=max(self.max_float_eigenvalue, other.max_float_eigenvalue),
            bound=self.bound,
        )

    @property
    def all_pass(self) -> bool:
        return self.total > 0 and self.passed == self.total

    @property
    def float_agreement(self) -> bool:
        return self.float_agreements == self.total

    @property
    def occurring_eigenvalues(self) -> List[int]:
        return sorted(self.eigenvalue_counts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total": self.total,
            "bound": self.bound,
            "all_pass": self.all_pass,
            "float_agreement": self.float_agreement,
            "invertible_at_bound": self.invertible_at_bound == self.total,
            "max_eigenvalue": round(self.max_float_eigenvalue, 12),
            "integer_eigenvalues": {str(k): self.eigenvalue_counts[k] for k in self.occurring_eigenvalues},
        }


def _census_chunk(values: Sequence[int]) -> CensusReport:
    report = CensusReport()
    for value in values:
        report.add(OnOffData.from_bits(value))
    return report


def run_census(*, workers: int = 1) -> CensusReport:
    """Check all 4096 ON/OFF data against the eigenvalue bound."""

    codes = list(range(4096))
    if workers <= 1:
        report = _census_chunk(codes)
    else:
        size = -(-len(codes) // workers)
        chunks = [codes[i : i + size] for i in range(0, len(codes), size)]
        report = CensusReport()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(contextvars.copy_context().run, _census_chunk, chunk) for chunk in chunks]
            for future in futures:
                report = report.merge(future.result())
    logger.info("Census: %d of %d matrices below %d", report.passed, report.total, report.bound)
    return report


def census_rows() -> Iterator[Dict[str, Any]]:
    """One row per ON/OFF datum for CSV export."""

    for data in all_data():
        m = build_matrix(data)
        yield {
            "bits": data.bits,
            "charpoly": " ".join(str(c) for c in characteristic_polynomial(m)),
            "pass": spectrum_below(m, CENSUS_BOUND),
        }


def solve_kappa_system(d: int, data: OnOffData, rhs: Sequence[int]) -> Tuple[Fraction, ...]:
    """Solve ``(d*I - M(a, b, c)) k = rhs`` exactly over Q.

    Parameters
    ----------
    d:
        Orbit degree; must be at least 7 so that the system is invertible.
    data:
        ON/OFF data defining ``M``.
    rhs:
        Integer right-hand side.
    """

    if d < CENSUS_BOUND:
        raise InvertibilityError(f"d must be >= {CENSUS_BOUND} for a guaranteed solution, got {d}")
    if len(rhs) != 4:
        raise PVIError(f"Right-hand side needs four entries, got {len(rhs)}")
    m = build_matrix(data)
    system = DomainMatrix([[QQ(v) for v in row] for row in _shifted(m, d)], (4, 4), QQ)
    column = DomainMatrix([[QQ(int(v))] for v in rhs], (4, 1), QQ)
    solution = system.lu_solve(column).to_Matrix()
    return tuple(Fraction(int(solution[i, 0].p), int(solution[i, 0].q)) for i in range(4))


__all__ = [
    "BranchMatrix",
    "CensusReport",
    "OnOffData",
    "all_data",
    "build_matrix",
    "census_rows",
    "characteristic_polynomial",
    "integer_eigenvalues",
    "leading_minors",
    "run_census",
    "solve_kappa_system",
    "spectrum_below",
]
