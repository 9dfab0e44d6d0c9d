"""Words in the involutions, orbit enumeration and the finiteness criterion."""

from __future__ import annotations

import contextvars
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .constants import CRITERION_MIN_DEGREE, DEFAULT_CAP
from .errors import PVIError, UnreducedWordError
from .exact_scalar import CycReal, is_two_cos_rational_angle, scalar_to_json
from .surface import SurfacePoint, involution, theta_bounds_check

logger = logging.getLogger(__name__)

GROUPS = ("G", "G2")


@dataclass(frozen=True)
class Word:
    """Reduced word in ``sigma_1, sigma_2, sigma_3``."""

    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(letter) for letter in self.letters)
        for letter in letters:
            if letter not in (1, 2, 3):
                raise UnreducedWordError(f"Letters must be 1, 2 or 3, got {letter}")
        for left, right in zip(letters, letters[1:]):
            if left == right:
                raise UnreducedWordError(f"Word {letters} repeats letter {left} consecutively")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Read ``"3,1,2"``, ``"3 1 2"`` or ``"312"``."""

        cleaned = text.replace(",", " ").split()
        if len(cleaned) == 1 and len(cleaned[0]) > 1:
            cleaned = list(cleaned[0])
        try:
            return cls(tuple(int(c) for c in cleaned))
        except ValueError as exc:
            raise UnreducedWordError(f"Cannot parse word {text!r}") from exc

    def is_even(self) -> bool:
        return len(self.letters) % 2 == 0

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self.letters) or "e"


def apply_word(word: Word, point: SurfacePoint) -> SurfacePoint:
    """Apply the letters of ``word`` to ``point`` from left to right."""

    return reduce(lambda current, letter: involution(letter, current), word.letters, point)


def generators(group: str) -> Tuple[Word, ...]:
    if group == "G":
        return tuple(Word((i,)) for i in (1, 2, 3))
    if group == "G2":
        return tuple(Word((i, j)) for i in (1, 2, 3) for j in (1, 2, 3) if i != j)
    raise PVIError(f"Unknown group {group!r}; choose from {', '.join(GROUPS)}")


@dataclass
class OrbitResult:
    """Outcome of an orbit exploration.

    ``status`` is ``"finite"`` (``points`` holds the whole orbit),
    ``"infinite"`` (``witness`` and ``witness_index`` name a coordinate outside
    ``2cos(pi*Q)``, or ``reason`` is ``"theta-bounds"``) or ``"unknown"`` when the
    cap was reached first.
    """

    status: str
    group: str
    explored: int
    points: Tuple[SurfacePoint, ...] = ()
    witness: Optional[SurfacePoint] = None
    witness_index: Optional[int] = None
    reason: Optional[str] = None
    cap: Optional[int] = None

    @property
    def degree(self) -> Optional[int]:
        return orbit_degree(self)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "status": self.status,
            "group": self.group,
            "explored": self.explored,
            "degree": self.degree,
        }
        if self.status == "finite":
            payload["points"] = [[scalar_to_json(c) for c in p.coords] for p in self.points]
        if self.witness is not None:
            payload["witness"] = {
                "x": [scalar_to_json(c) for c in self.witness.coords],
                "index": self.witness_index,
            }
        if self.reason is not None:
            payload["reason"] = self.reason
        if self.cap is not None:
            payload["cap"] = self.cap
        return payload


def orbit_degree(result: OrbitResult) -> Optional[int]:
    if result.status != "finite":
        return None
    return len(result.points)


def canonical_order(points: Iterable[SurfacePoint]) -> List[SurfacePoint]:
    """Sort lexicographically by coefficients at the common conductor."""

    points = list(points)
    if not points:
        return points
    conductor = reduce(math.lcm, (c.conductor for p in points for c in p.coords))
    return sorted(points, key=lambda p: tuple(c.coefficients_at(conductor) for c in p.coords))


def _images(points: Sequence[SurfacePoint], gens: Sequence[Word]) -> List[List[SurfacePoint]]:
    return [[apply_word(g, p) for g in gens] for p in points]


def _expand(frontier: List[SurfacePoint], gens: Sequence[Word], workers: int) -> List[SurfacePoint]:
    if workers <= 1 or len(frontier) < 2 * workers:
        batches = _images(frontier, gens)
    else:
        size = -(-len(frontier) // workers)
        chunks = [frontier[i : i + size] for i in range(0, len(frontier), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(contextvars.copy_context().run, _images, chunk, gens) for chunk in chunks]
            batches = [images for future in futures for images in future.result()]
    return [image for images in batches for image in images]


class _OrbitSearch:
    """Breadth-first closure with an optional per-point hook."""

    def __init__(self, start: SurfacePoint, group: str, cap: int, workers: int):
        if cap < 1:
            raise PVIError(f"cap must be >= 1, got {cap}")
        self.group = group
        self.gens = generators(group)
        self.cap = cap
        self.workers = workers
        self.seen = {start}
        self.order = [start]

    def run(self, visit) -> Optional[OrbitResult]:
        # ``visit`` may stop the search early by returning a result.
        early = visit(self.order[0], self)
        if early is not None:
            return early
        frontier = [self.order[0]]
        while frontier:
            next_frontier = []
            for image in _expand(frontier, self.gens, self.workers):
                if image in self.seen:
                    continue
                if len(self.seen) >= self.cap:
                    logger.info("Orbit exploration hit the cap of %d points", self.cap)
                    return OrbitResult("unknown", self.group, len(self.seen), cap=self.cap)
                self.seen.add(image)
                self.order.append(image)
                next_frontier.append(image)
                early = visit(image, self)
                if early is not None:
                    return early
            logger.debug("Orbit frontier of %d points, %d known", len(next_frontier), len(self.seen))
            frontier = next_frontier
        return None

    def finite(self) -> OrbitResult:
        return OrbitResult(
            "finite",
            self.group,
            len(self.seen),
            points=tuple(canonical_order(self.seen)),
        )


def orbit(
    point: SurfacePoint,
    group: str = "G",
    cap: int = DEFAULT_CAP,
    *,
    workers: int = 1,
) -> OrbitResult:
    """Close ``point`` under the generators of ``group`` (``"G"`` or ``"G2"``)."""

    search = _OrbitSearch(point, group, cap, workers)
    result = search.run(lambda p, s: None)
    return result if result is not None else search.finite()


def classify_finiteness(
    point: SurfacePoint,
    cap: int = DEFAULT_CAP,
    *,
    group: str = "G2",
    workers: int = 1,
) -> OrbitResult:
    """Orbit search that also applies the cyclotomic finiteness criterion.

    A finite orbit with at least seven points has every coordinate in
    ``2cos(pi*Q)`` and satisfies the theta bounds. So once seven points are
    known, a coordinate failing the membership test, or theta outside the
    bounds, proves the orbit infinite.
    """

    membership: Dict[CycReal, bool] = {}
    failure: List[Tuple[SurfacePoint, int]] = []
    bounds: List[bool] = []

    def visit(current: SurfacePoint, search: _OrbitSearch) -> Optional[OrbitResult]:
        if not failure:
            for index, value in enumerate(current.coords, start=1):
                if value not in membership:
                    membership[value] = is_two_cos_rational_angle(value)
                if not membership[value]:
                    failure.append((current, index))
                    break
        if len(search.seen) < CRITERION_MIN_DEGREE:
            return None
        if failure:
            witness, index = failure[0]
            return OrbitResult(
                "infinite",
                search.group,
                len(search.seen),
                witness=witness,
                witness_index=index,
                reason="coordinate",
            )
        if not bounds:
            bounds.append(theta_bounds_check(current.theta))
        if not bounds[0]:
            return OrbitResult("infinite", search.group, len(search.seen), reason="theta-bounds")
        return None

    search = _OrbitSearch(point, group, cap, workers)
    result = search.run(visit)
    return result if result is not None else search.finite()


__all__ = [
    "GROUPS",
    "OrbitResult",
    "Word",
    "apply_word",
    "canonical_order",
    "classify_finiteness",
    "generators",
    "orbit",
    "orbit_degree",
]
