from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence, Tuple

from pvi_algebra.constants import KNOWN_KAPPAS, KNOWN_THETAS
from pvi_algebra.surface import SurfacePoint, Theta
from pvi_algebra.weyl import Kappa


def cayley_theta() -> Theta:
    return Theta.of(KNOWN_THETAS["cayley"])


def degree6_theta() -> Theta:
    """Surface parameters ``(2*sqrt2, 2*sqrt2, 3, 4)`` of the degree-6 orbit."""

    return Theta.of(KNOWN_THETAS["a1x2_degree6"])


def point(values: Sequence[str], theta: Theta) -> SurfacePoint:
    return SurfacePoint.of(list(values), theta)


def known_kappa(name: str) -> Kappa:
    return Kappa(*KNOWN_KAPPAS[name])


def degree6_orbit() -> Tuple[Tuple[str, str, str], ...]:
    return (
        ("sqrt(2)", "sqrt(2)", "0"),
        ("sqrt(2)", "sqrt(2)", "1"),
        ("0", "sqrt(2)", "1"),
        ("0", "sqrt(2)", "2"),
        ("sqrt(2)", "0", "1"),
        ("sqrt(2)", "0", "2"),
    )


def random_kappa(rng: random.Random, denominators: Sequence[int] = (2, 3, 4, 6, 12)) -> Kappa:
    """Random level-one kappa whose entries have small denominators."""

    values = [Fraction(rng.randint(-12, 12), rng.choice(denominators)) for _ in range(4)]
    k0, k1, k2, k3 = values
    return Kappa(k0, k1, k2, k3, 1 - 2 * k0 - k1 - k2 - k3)


def random_positive_kappa(rng: random.Random, k0: Fraction = Fraction(0)) -> Kappa:
    """Alcove point with the given ``k0`` and positive leg entries."""

    weights = [rng.randint(1, 20) for _ in range(4)]
    total = sum(weights)
    legs = [Fraction(w, total) * (1 - 2 * k0) for w in weights]
    return Kappa(k0, *legs)
