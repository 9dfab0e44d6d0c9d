"""I/O helpers for catalogs and command reports."""

from __future__ import annotations

import csv
import gzip
import io as _stdio
import json
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, TextIO, Tuple


def _is_gzip_magic(magic: bytes) -> bool:
    return len(magic) >= 2 and magic[0] == 0x1F and magic[1] == 0x8B


def open_maybe_gzip(path: Path):
    """Open ``path`` for text reading, transparently handling gzip."""

    with path.open("rb") as raw:
        magic = raw.read(2)
    if _is_gzip_magic(magic):
        return gzip.open(path, mode="rt", encoding="utf-8")
    return path.open("rt", encoding="utf-8")


def _flatten(payload: Any, prefix: str = "") -> Iterator[Tuple[str, Any]]:
    if isinstance(payload, Mapping):
        for key, value in payload.items():
            yield from _flatten(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(payload, list) and any(isinstance(v, (Mapping, list)) for v in payload):
        for index, value in enumerate(payload):
            yield from _flatten(value, f"{prefix}[{index}]")
    elif isinstance(payload, list):
        yield prefix, " ".join(str(v) for v in payload)
    else:
        yield prefix, payload


def render_report(
    report: Dict[str, Any],
    fmt: str = "json",
    rows: Optional[Iterable[Dict[str, Any]]] = None,
) -> str:
    """Render ``report`` as JSON, CSV or plain text.

    Parameters
    ----------
    report:
        JSON-compatible report.
    fmt:
        ``"json"``, ``"csv"`` or ``"text"``.
    rows:
        Optional table used for CSV output instead of the flattened report.
    """

    if fmt == "json":
        return json.dumps(report, indent=2)
    if fmt == "csv":
        table: List[Dict[str, Any]] = (
            list(rows) if rows is not None else [{"key": k, "value": v} for k, v in _flatten(report)]
        )
        buffer = _stdio.StringIO()
        if table:
            writer = csv.DictWriter(buffer, fieldnames=list(table[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(table)
        return buffer.getvalue().rstrip("\n")
    if fmt == "text":
        return "\n".join(f"{key}: {value}" for key, value in _flatten(report))
    raise ValueError(f"Unknown output format {fmt!r}")


def write_output(text: str, path: Optional[Path] = None, stream: Optional[TextIO] = None) -> None:
    stream = stream or sys.stdout
    if path is not None:
        path.write_text(text + "\n", encoding="utf-8")
        return
    stream.write(text)
    if not text.endswith("\n"):
        stream.write("\n")


__all__ = ["open_maybe_gzip", "render_report", "write_output"]
