"""Parameter space, affine Weyl reflections, walls and strata."""

from __future__ import annotations

import itertools
import logging
from collections import Counter, OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

from .constants import ALCOVE_STEP_LIMIT, D4_AFFINE_CARTAN, F4_ADJACENCY, STRATUM_CLASSES, STRATUM_TYPES
from .errors import IterationGuardError, KappaConstraintError, PVIError

logger = logging.getLogger(__name__)

RationalLike = Union[int, Fraction, str]


@dataclass(frozen=True)
class Kappa:
    """Painleve VI parameters with ``2*k0 + k1 + k2 + k3 + k4 = 1``."""

    k0: Fraction
    k1: Fraction
    k2: Fraction
    k3: Fraction
    k4: Fraction

    def __post_init__(self) -> None:
        for name in ("k0", "k1", "k2", "k3", "k4"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        level = 2 * self.k0 + self.k1 + self.k2 + self.k3 + self.k4
        if level != 1:
            raise KappaConstraintError(
                f"2*k0 + k1 + k2 + k3 + k4 must equal 1, got {level} for {self.as_strings()}"
            )

    @classmethod
    def parse(cls, values: Union[str, Sequence[RationalLike]]) -> "Kappa":
        """Accept ``"1/4,0,0,1/12,5/12"`` or a sequence of five rationals."""

        if isinstance(values, str):
            values = [v for v in values.replace(",", " ").split() if v]
        if len(values) != 5:
            raise KappaConstraintError(f"kappa needs five entries, got {len(values)}")
        try:
            return cls(*(Fraction(str(v)) for v in values))
        except (ValueError, ZeroDivisionError) as exc:
            raise KappaConstraintError(f"Cannot parse kappa {values!r}") from exc

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return (self.k0, self.k1, self.k2, self.k3, self.k4)

    def as_floats(self) -> Tuple[float, ...]:
        return tuple(float(v) for v in self.as_tuple())

    def as_strings(self) -> List[str]:
        return [str(v) for v in self.as_tuple()]

    def __getitem__(self, index: int) -> Fraction:
        return self.as_tuple()[index]


@dataclass(frozen=True)
class BCoords:
    """Orthogonal coordinates in which the walls are integrality conditions."""

    b1: Fraction
    b2: Fraction
    b3: Fraction
    b4: Fraction

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return (self.b1, self.b2, self.b3, self.b4)


@dataclass(frozen=True)
class StratumLabel:
    """Zero set of the alcove representative and its Dynkin type.

    The abstract type also labels the F4(1) stratum containing the point.
    """

    index_set: FrozenSet[int]
    type: str
    sequence_class: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "I": sorted(self.index_set),
            "type": self.type,
            "class": self.sequence_class,
        }


def reflect(i: int, kappa: Kappa) -> Kappa:
    """Simple reflection ``s_i``: ``(s_i k)_j = k_j - A_ji * k_i``."""

    if i not in range(5):
        raise PVIError(f"Reflection index must be in 0..4, got {i}")
    values = kappa.as_tuple()
    return Kappa(*(values[j] - D4_AFFINE_CARTAN[j][i] * values[i] for j in range(5)))


def apply_reflections(word: Iterable[int], kappa: Kappa) -> Kappa:
    """Apply ``s_i`` for each index of ``word`` from left to right."""

    for i in word:
        kappa = reflect(i, kappa)
    return kappa


def to_b_coords(kappa: Kappa) -> BCoords:
    b3 = (kappa.k2 + kappa.k3) / 2
    b4 = (kappa.k3 - kappa.k2) / 2
    b2 = kappa.k0 + b3
    b1 = kappa.k1 + b2
    return BCoords(b1, b2, b3, b4)


def from_b_coords(b: BCoords) -> Kappa:
    return Kappa(
        b.b2 - b.b3,
        b.b1 - b.b2,
        b.b3 - b.b4,
        b.b3 + b.b4,
        1 - b.b1 - b.b2,
    )


def _integral(value: Fraction) -> bool:
    return value.denominator == 1


def in_wall_d4(kappa: Kappa) -> bool:
    """Whether ``b_i + b_j`` or ``b_i - b_j`` is an integer for some ``i < j``."""

    b = to_b_coords(kappa).as_tuple()
    return any(
        _integral(b[i] + b[j]) or _integral(b[i] - b[j])
        for i, j in itertools.combinations(range(4), 2)
    )


def in_wall_f4(kappa: Kappa) -> bool:
    """D4(1) walls plus the short-root walls ``2*b_i`` and ``+-b1+-b2+-b3+-b4``."""

    if in_wall_d4(kappa):
        return True
    b = to_b_coords(kappa).as_tuple()
    if any(_integral(2 * v) for v in b):
        return True
    return any(
        _integral(sum(s * v for s, v in zip(signs, b)))
        for signs in itertools.product((1, -1), repeat=4)
    )


def reduce_to_alcove(kappa: Kappa) -> Tuple[Kappa, Tuple[int, ...]]:
    """Move ``kappa`` into the closed alcove ``{k_i >= 0}``.

    Returns the representative and the reflection word that produced it;
    ``apply_reflections(word, kappa)`` reproduces the representative.
    """

    word: List[int] = []
    current = kappa
    for _ in range(ALCOVE_STEP_LIMIT):
        negative = [i for i, v in enumerate(current.as_tuple()) if v < 0]
        if not negative:
            return current, tuple(word)
        current = reflect(negative[0], current)
        word.append(negative[0])
    raise IterationGuardError(f"Alcove reduction of {kappa.as_strings()} exceeded {ALCOVE_STEP_LIMIT} steps")


def dynkin_type(index_set: Iterable[int]) -> str:
    """Abstract type of the subdiagram of the star graph (centre 0) on ``index_set``."""

    nodes = frozenset(index_set)
    if not nodes <= frozenset(range(5)) or len(nodes) == 5:
        raise PVIError(f"Index set must be a proper subset of 0..4, got {sorted(nodes)}")
    leaves = len(nodes - {0})
    if 0 not in nodes:
        return ("empty", "A1", "2A1", "3A1", "4A1")[leaves]
    return ("A1", "A2", "A3", "D4")[leaves]


def stratum(kappa: Kappa) -> StratumLabel:
    reduced, _ = reduce_to_alcove(kappa)
    zeros = frozenset(i for i, v in enumerate(reduced.as_tuple()) if v == 0)
    kind = dynkin_type(zeros)
    return StratumLabel(index_set=zeros, type=kind, sequence_class=STRATUM_CLASSES[kind])


def s2_stratum_counts() -> Dict[str, int]:
    """Number of D4(1)-strata of each abstract type along ``A1 -> A2 -> A3 -> D4``.

    Single walls are all Weyl-conjugate and give one stratum; larger types
    are counted by the leaves joined to the central node.
    """

    counts: Counter = Counter()
    for size in range(1, 4):
        for leaves in itertools.combinations(range(1, 5), size):
            counts[dynkin_type((0,) + leaves)] += 1
    ordered = OrderedDict([("A1", 1)])
    for kind in ("A2", "A3", "D4"):
        ordered[kind] = counts[kind]
    return dict(ordered)


def f4_adjacency() -> Dict[str, Tuple[str, ...]]:
    """Closure graph of the F4(1)-strata keyed by abstract type."""

    graph: Dict[str, List[str]] = OrderedDict((kind, []) for kind in STRATUM_TYPES)
    for source, target in F4_ADJACENCY:
        graph[source].append(target)
    return {kind: tuple(targets) for kind, targets in graph.items()}


__all__ = [
    "BCoords",
    "Kappa",
    "StratumLabel",
    "apply_reflections",
    "dynkin_type",
    "f4_adjacency",
    "from_b_coords",
    "in_wall_d4",
    "in_wall_f4",
    "reduce_to_alcove",
    "reflect",
    "s2_stratum_counts",
    "stratum",
    "to_b_coords",
]
