"""Tetrahedral geometry: radii, foot point, cone height and ball obstruction."""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .constants import TETRA_VERTICES
from .errors import IdentityViolationError, PVIError
from .weyl import Kappa, StratumLabel, dynkin_type, reduce_to_alcove, stratum

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, Fraction, Fraction]


class Verdict(str, enum.Enum):
    OBSTRUCTED = "obstructed"
    COMMON_POINT = "common-point"
    INDETERMINATE = "indeterminate"


def _dist2(p: Tuple[Any, ...], q: Tuple[Any, ...]) -> Fraction:
    return sum((Fraction(a) - Fraction(b)) ** 2 for a, b in zip(p, q))


def frame_distances_squared() -> Dict[Tuple[int, int], Fraction]:
    return {
        (i + 1, j + 1): _dist2(TETRA_VERTICES[i], TETRA_VERTICES[j])
        for i, j in itertools.combinations(range(4), 2)
    }


def radii_squared(kappa: Kappa) -> Tuple[Fraction, ...]:
    """``r_i^2 = (k_i - 1)^2 + sum of k_j^2 over the other three legs``."""

    legs = kappa.as_tuple()[1:]
    return tuple(
        sum((v - 1 if j == i else v) ** 2 for j, v in enumerate(legs))
        for i in range(4)
    )


def barycentric(kappa: Kappa) -> Tuple[Fraction, ...]:
    return tuple(v + kappa.k0 / 2 for v in kappa.as_tuple()[1:])


def foot_point(kappa: Kappa) -> Vector:
    alphas = barycentric(kappa)
    return tuple(sum(a * vertex[axis] for a, vertex in zip(alphas, TETRA_VERTICES)) for axis in range(3))


@dataclass(frozen=True)
class ConeData:
    radii_squared: Tuple[Fraction, ...]
    alphas: Tuple[Fraction, ...]
    foot: Vector
    height_squared: Fraction

    def foot_distances_squared(self) -> Tuple[Fraction, ...]:
        return tuple(_dist2(self.foot, vertex) for vertex in TETRA_VERTICES)


def cone_data(kappa: Kappa) -> ConeData:
    """Cone over the tetrahedron with apex above the foot point.

    Raises :class:`IdentityViolationError` if ``r_i^2 - |R - P_i|^2`` differs
    between vertices.
    """

    radii = radii_squared(kappa)
    foot = foot_point(kappa)
    heights = {r - _dist2(foot, vertex) for r, vertex in zip(radii, TETRA_VERTICES)}
    if len(heights) != 1:
        raise IdentityViolationError(
            f"Apex heights disagree for kappa {kappa.as_strings()}: {sorted(heights)}"
        )
    return ConeData(radii, barycentric(kappa), foot, heights.pop())


def cone_identity_check(kappa: Kappa) -> Fraction:
    """Return the common apex height squared, which must equal ``k0^2``."""

    height = cone_data(kappa).height_squared
    if height != kappa.k0 ** 2:
        raise IdentityViolationError(
            f"Apex height squared {height} differs from k0^2 = {kappa.k0 ** 2}"
        )
    return height


def obstruction_check(kappa: Kappa) -> Verdict:
    """Decide whether the open balls ``B(P_i, r_i)`` share the foot point.

    With the foot point interior, any common point of the four balls would
    have to be the foot point itself. Boundary contact counts as obstructed.
    """

    data = cone_data(kappa)
    if any(a <= 0 for a in data.alphas):
        return Verdict.INDETERMINATE
    inside = all(d < r for d, r in zip(data.foot_distances_squared(), data.radii_squared))
    return Verdict.COMMON_POINT if inside else Verdict.OBSTRUCTED


def skeleton_cell(index_set: Iterable[int]) -> Tuple[int, ...]:
    """Vertices of the tetrahedron cell matching the S2 stratum on ``index_set``.

    The stratum on ``{0} | L`` sits over the cell spanned by the vertices
    ``P_j`` with ``j`` outside ``L``: at ``k0 = 0`` the foot point has
    barycentric weights ``k_j``, which vanish exactly on ``L``.
    """

    nodes = frozenset(index_set)
    if 0 not in nodes:
        raise PVIError(f"Only S2 index sets contain the central node, got {sorted(nodes)}")
    dynkin_type(nodes)
    return tuple(j for j in range(1, 5) if j not in nodes)


def skeleton_correspondence() -> Dict[str, Tuple[Tuple[int, ...], ...]]:
    """S2 strata by type against cells: the solid, faces, edges and vertices."""

    cells: Dict[str, List[Tuple[int, ...]]] = {}
    for size in range(4):
        for leaves in itertools.combinations(range(1, 5), size):
            index_set = (0,) + leaves
            cells.setdefault(dynkin_type(index_set), []).append(skeleton_cell(index_set))
    return {kind: tuple(found) for kind, found in cells.items()}


@dataclass
class TetraReport:
    kappa: Kappa
    reduced: Kappa
    stratum: StratumLabel
    cone: ConeData
    verdict: Verdict

    @property
    def applicable(self) -> bool:
        return self.stratum.sequence_class == "S2"

    @property
    def central_node_zero(self) -> bool:
        return 0 in self.stratum.index_set

    @property
    def expectation_met(self) -> Optional[bool]:
        """Whether an S2 point with ``k0 = 0`` and interior foot point is obstructed."""

        if not (self.applicable and self.central_node_zero):
            return None
        if self.verdict is Verdict.INDETERMINATE:
            return None
        return self.verdict is Verdict.OBSTRUCTED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kappa": self.kappa.as_strings(),
            "alcove_kappa": self.reduced.as_strings(),
            "stratum": self.stratum.to_dict(),
            "alpha": [str(a) for a in self.cone.alphas],
            "r2": [str(r) for r in self.cone.radii_squared],
            "height2": str(self.cone.height_squared),
            "verdict": self.verdict.value,
            "applicable": self.applicable,
            "central_node_zero": self.central_node_zero,
            "expectation_met": self.expectation_met,
            "cell": list(skeleton_cell(self.stratum.index_set)) if self.central_node_zero else None,
        }


def tetrahedral_theorem_probe(kappa: Kappa) -> TetraReport:
    """Reduce to the alcove, classify, and apply the ball obstruction."""

    reduced, _ = reduce_to_alcove(kappa)
    report = TetraReport(
        kappa=kappa,
        reduced=reduced,
        stratum=stratum(reduced),
        cone=cone_data(reduced),
        verdict=obstruction_check(reduced),
    )
    if report.expectation_met is False:
        logger.warning("S2 point %s with k0 = 0 is not obstructed", reduced.as_strings())
    return report


__all__ = [
    "ConeData",
    "TetraReport",
    "Verdict",
    "barycentric",
    "cone_data",
    "cone_identity_check",
    "foot_point",
    "frame_distances_squared",
    "obstruction_check",
    "radii_squared",
    "skeleton_cell",
    "skeleton_correspondence",
    "tetrahedral_theorem_probe",
]
