"""Run configuration shared by the command line front end."""

from __future__ import annotations

import argparse
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from .constants import (
    CONDUCTOR_BOUND_ENV,
    DEFAULT_BITS,
    DEFAULT_CAP,
    DEFAULT_CONDUCTOR_BOUND,
    DEFAULT_THREADS,
    MIN_BITS,
    OUTPUT_FORMATS,
)
from .errors import ConfigError


def _pick(args: argparse.Namespace, name: str, default):
    value = getattr(args, name, None)
    return default if value is None else value


@dataclass(frozen=True)
class RunConfig:
    """Settings for a single command invocation."""

    bits: int = DEFAULT_BITS
    cap: int = DEFAULT_CAP
    conductor_bound: int = DEFAULT_CONDUCTOR_BOUND
    output_format: str = "json"
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    threads: int = DEFAULT_THREADS

    def __post_init__(self) -> None:
        if self.bits < MIN_BITS:
            raise ConfigError(f"--bits must be at least {MIN_BITS}, got {self.bits}")
        if self.cap < 1:
            raise ConfigError(f"--cap must be at least 1, got {self.cap}")
        if self.threads < 1:
            raise ConfigError(f"--threads must be at least 1, got {self.threads}")
        if self.conductor_bound < 2 or self.conductor_bound % 2:
            raise ConfigError(
                f"Conductor bound must be an even integer >= 2, got {self.conductor_bound}"
            )
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"Unknown output format {self.output_format!r}; choose from {', '.join(OUTPUT_FORMATS)}"
            )

    @classmethod
    def from_args(
        cls,
        args: argparse.Namespace,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "RunConfig":
        """Build a configuration from parsed flags.

        Parameters
        ----------
        args:
            Namespace produced by :func:`pvi_algebra.cli.build_parser`. Missing
            attributes fall back to the defaults.
        environ:
            Environment mapping consulted for ``PVI_CONDUCTOR_BOUND`` when the
            flag is absent. Defaults to :data:`os.environ`.
        """

        environ = os.environ if environ is None else environ
        bound = getattr(args, "conductor_bound", None)
        if bound is None:
            raw = environ.get(CONDUCTOR_BOUND_ENV)
            if raw:
                try:
                    bound = int(raw)
                except ValueError as exc:
                    raise ConfigError(f"{CONDUCTOR_BOUND_ENV} must be an integer, got {raw!r}") from exc
            else:
                bound = DEFAULT_CONDUCTOR_BOUND
        return cls(
            bits=_pick(args, "bits", DEFAULT_BITS),
            cap=_pick(args, "cap", DEFAULT_CAP),
            conductor_bound=bound,
            output_format=_pick(args, "format", "json"),
            input_path=getattr(args, "input", None),
            output_path=getattr(args, "out", None),
            threads=_pick(args, "threads", DEFAULT_THREADS),
        )


__all__ = ["RunConfig"]
