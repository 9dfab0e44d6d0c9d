"""Loading and writing catalogs of explicit algebraic solutions.

A catalog is a JSON object ``{"solutions": [...]}`` (or the bare list). Each
entry names the solution, gives ``kappa`` as five rationals and the map
degree, and holds the curve as numerator and denominator polynomials in
``s`` under ``"z"``, ``"q"`` and ``"p"``. Every polynomial takes one of two
forms, with coefficients as rational strings, lowest degree first:

* dense: ``["c0", "c1", ...]``;
* factored: ``{"scale": "c", "factors": [{"coeffs": [...], "power": k}, ...]}``,
  the product ``c * prod(f_i ** k_i)``. The shipped catalog is stored this
  way.

:meth:`SolutionCatalog.dump` always writes the dense form, and both forms
reload to the same solutions.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Union

from .errors import CatalogError, KappaConstraintError
from .exact_scalar import RationalPoly
from .io import open_maybe_gzip
from .pvi_field import RationalCurveSolution
from .weyl import Kappa


def _fraction(value: Any, where: str) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise CatalogError(f"Bad rational {value!r} in {where}") from exc


def parse_polynomial(payload: Any, where: str) -> RationalPoly:
    """Read a dense coefficient list or a ``{"scale", "factors"}`` object."""

    if isinstance(payload, list):
        return RationalPoly(tuple(_fraction(c, where) for c in payload))
    if isinstance(payload, Mapping):
        result = RationalPoly((_fraction(payload.get("scale", 1), where),))
        for factor in payload.get("factors", []):
            if "coeffs" not in factor:
                raise CatalogError(f"Factor without coefficients in {where}")
            base = RationalPoly(tuple(_fraction(c, where) for c in factor["coeffs"]))
            result = result * base ** int(factor.get("power", 1))
        return result
    raise CatalogError(f"Cannot read a polynomial from {payload!r} in {where}")


def parse_solution(entry: Mapping[str, Any]) -> RationalCurveSolution:
    name = entry.get("name")
    if not name:
        raise CatalogError("Catalog entry without a name")
    try:
        kappa = Kappa.parse([str(v) for v in entry["kappa"]])
        polys = {
            f"{key}_{part}": parse_polynomial(entry[key][part], f"{name}.{key}.{part}")
            for key in ("z", "q", "p")
            for part in ("num", "den")
        }
        degree = int(entry["degree"])
    except KeyError as exc:
        raise CatalogError(f"Catalog entry {name!r} is missing {exc.args[0]!r}") from exc
    except KappaConstraintError as exc:
        raise CatalogError(f"Catalog entry {name!r}: {exc}") from exc
    return RationalCurveSolution(name=name, kappa=kappa, degree=degree, **polys)


def solution_to_dict(sol: RationalCurveSolution) -> Dict[str, Any]:
    return {
        "name": sol.name,
        "kappa": sol.kappa.as_strings(),
        "z": {"num": sol.z_num.to_json(), "den": sol.z_den.to_json()},
        "q": {"num": sol.q_num.to_json(), "den": sol.q_den.to_json()},
        "p": {"num": sol.p_num.to_json(), "den": sol.p_den.to_json()},
        "degree": sol.degree,
    }


class SolutionCatalog:
    """Named collection of :class:`RationalCurveSolution` objects."""

    def __init__(self, solutions: Iterable[RationalCurveSolution]):
        self.solutions: List[RationalCurveSolution] = list(solutions)
        names = [s.name for s in self.solutions]
        if len(set(names)) != len(names):
            raise CatalogError(f"Duplicate solution names in catalog: {sorted(names)}")

    @classmethod
    def from_json(cls, payload: Any) -> "SolutionCatalog":
        entries = payload.get("solutions") if isinstance(payload, Mapping) else payload
        if not isinstance(entries, list) or not entries:
            raise CatalogError("Catalog does not contain any solutions")
        return cls(parse_solution(entry) for entry in entries)

    @classmethod
    def from_file(cls, path: Path) -> "SolutionCatalog":
        """Load a catalog from ``path``; gzip-compressed files are accepted."""

        if not path.exists():
            raise FileNotFoundError(f"Catalog not found: {path}")
        with open_maybe_gzip(path) as handle:
            try:
                payload = json.load(handle)
            except json.JSONDecodeError as exc:
                raise CatalogError(f"Catalog {path} is not valid JSON: {exc}") from exc
        return cls.from_json(payload)

    @classmethod
    def default(cls) -> "SolutionCatalog":
        """The shipped catalog with the Klein and icosahedral solutions."""

        text = resources.files("pvi_algebra").joinpath("data/catalog.json").read_text(encoding="utf-8")
        return cls.from_json(json.loads(text))

    def get(self, name: str) -> RationalCurveSolution:
        for solution in self.solutions:
            if solution.name == name:
                return solution
        raise CatalogError(f"No solution named {name!r}; available: {', '.join(self.names())}")

    def names(self) -> List[str]:
        return [s.name for s in self.solutions]

    def to_dict(self) -> Dict[str, Any]:
        return {"solutions": [solution_to_dict(s) for s in self.solutions]}

    def dump(self, path: Path) -> Path:
        path.write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")
        return path

    def __iter__(self) -> Iterator[RationalCurveSolution]:
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)


def load_catalog(path: Union[str, Path, None] = None) -> SolutionCatalog:
    if path is None:
        return SolutionCatalog.default()
    return SolutionCatalog.from_file(Path(path))


__all__ = [
    "SolutionCatalog",
    "load_catalog",
    "parse_polynomial",
    "parse_solution",
    "solution_to_dict",
]
