"""Top level package for the :mod:`pvi_algebra` toolkit."""

from .catalog import SolutionCatalog, load_catalog
from .dynamics import Word, apply_word, classify_finiteness, orbit
from .exact_scalar import CycReal, is_two_cos_rational_angle, parse_scalar, two_cos
from .line_census import run_census
from .pvi_field import RationalCurveSolution, verify_solution
from .rh_map import rh
from .surface import SurfacePoint, Theta, singular_points_numeric
from .tetra import tetrahedral_theorem_probe
from .weyl import Kappa, reduce_to_alcove, stratum

__all__ = [
    "__version__",
    "apply_word",
    "classify_finiteness",
    "CycReal",
    "is_two_cos_rational_angle",
    "Kappa",
    "load_catalog",
    "orbit",
    "parse_scalar",
    "RationalCurveSolution",
    "reduce_to_alcove",
    "rh",
    "run_census",
    "singular_points_numeric",
    "SolutionCatalog",
    "stratum",
    "SurfacePoint",
    "tetrahedral_theorem_probe",
    "Theta",
    "two_cos",
    "verify_solution",
    "Word",
]

__version__ = "0.1.0"
