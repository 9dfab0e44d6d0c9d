"""Reference data and defaults shared across :mod:`pvi_algebra`."""

from __future__ import annotations

from collections import OrderedDict
from fractions import Fraction

DEFAULT_BITS = 128
DEFAULT_CAP = 100_000
DEFAULT_CONDUCTOR_BOUND = 2 ** 16
DEFAULT_THREADS = 1
MIN_BITS = 53
CENSUS_BOUND = 7
ALCOVE_STEP_LIMIT = 1_000_000
# Largest denominator tried when recognising singular-point coordinates.
RECOGNITION_MAX_DENOMINATOR = 60
# Orbits smaller than this are never classified by the cyclotomic criterion.
CRITERION_MIN_DEGREE = 7

CONDUCTOR_BOUND_ENV = "PVI_CONDUCTOR_BOUND"

OUTPUT_FORMATS = ("json", "csv", "text")

# Strict bounds on a theta admitting an orbit of degree >= 7.
THETA_BOUNDS = OrderedDict(
    [
        ("theta1", 8),
        ("theta2", 8),
        ("theta3", 8),
        ("theta4", 28),
    ]
)

# Parameter vectors (k0, k1, k2, k3, k4) of named points.
KNOWN_KAPPAS = OrderedDict(
    [
        ("klein", tuple(Fraction(v) for v in ("1/7", "1/7", "1/7", "1/7", "2/7"))),
        ("icosahedral", tuple(Fraction(v) for v in ("1/5", "11/60", "17/60", "7/60", "1/60"))),
        ("a1x2_degree6", tuple(Fraction(v) for v in ("1/4", "0", "0", "1/12", "5/12"))),
        ("cayley", tuple(Fraction(v) for v in ("1/2", "0", "0", "0", "0"))),
    ]
)

# Surface parameters as parseable scalar strings.
KNOWN_THETAS = OrderedDict(
    [
        ("cayley", ("0", "0", "0", "-4")),
        ("a1x2_degree6", ("2*sqrt(2)", "2*sqrt(2)", "3", "4")),
    ]
)

# Vertices P1..P4 of the reference tetrahedron; every edge has length sqrt(2).
TETRA_VERTICES = (
    (0, 0, 0),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
)

# Cartan matrix of the affine D4 diagram, node 0 at the centre.
D4_AFFINE_CARTAN = (
    (2, -1, -1, -1, -1),
    (-1, 2, 0, 0, 0),
    (-1, 0, 2, 0, 0),
    (-1, 0, 0, 2, 0),
    (-1, 0, 0, 0, 2),
)

# Abstract stratum types in display order.
STRATUM_TYPES = ("empty", "A1", "2A1", "3A1", "4A1", "A2", "A3", "D4")

# Which degeneration sequence each abstract type belongs to.
STRATUM_CLASSES = OrderedDict(
    [
        ("empty", "big-open"),
        ("A1", "S2"),
        ("2A1", "S1"),
        ("3A1", "S1"),
        ("4A1", "S1"),
        ("A2", "S2"),
        ("A3", "S2"),
        ("D4", "S2"),
    ]
)

# Closure relations among the F4(1) strata, by abstract type.
F4_ADJACENCY = (
    ("empty", "A1"),
    ("A1", "2A1"),
    ("2A1", "3A1"),
    ("3A1", "4A1"),
    ("A1", "A2"),
    ("A2", "A3"),
    ("A3", "D4"),
    ("2A1", "A3"),
    ("3A1", "D4"),
)
