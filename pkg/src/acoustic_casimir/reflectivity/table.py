"""Load tabulated reflectivities from delimited text files.

The file has a header line naming the three columns
``omega_rad_per_s, re_r, im_r`` followed by one sample per line. Columns are
separated by commas, or by whitespace when a line has no comma. Lines
starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path

from ..errors import TableFormatError
from ..utils.numbers import parse_float
from .models import TableReflectivity

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("omega_rad_per_s", "re_r", "im_r")


def _split(line: str) -> list[str]:
    if "," in line:
        return [cell.strip() for cell in line.split(",")]
    return line.split()


def parse_reflectivity_table(text: str, *, source: str | None = None) -> TableReflectivity:
    header_seen = False
    omega: list[float] = []
    r: list[complex] = []
    rows: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        cells = _split(line)
        if not header_seen:
            names = tuple(cell.lower() for cell in cells)
            if names != TABLE_COLUMNS:
                raise TableFormatError(
                    f"expected header {', '.join(TABLE_COLUMNS)}, got {line!r}",
                    source=source,
                    line=lineno,
                )
            header_seen = True
            continue

        if len(cells) != 3:
            raise TableFormatError(
                f"row {lineno}: expected 3 columns, got {len(cells)}", source=source, line=lineno
            )
        try:
            w, re_r, im_r = (parse_float(cell) for cell in cells)
        except ValueError as exc:
            raise TableFormatError(f"row {lineno}: {exc}", source=source, line=lineno) from exc

        omega.append(w)
        r.append(complex(re_r, im_r))
        rows.append(lineno)

    if not header_seen:
        raise TableFormatError("missing header line", source=source)

    table = TableReflectivity(omega=tuple(omega), r=tuple(r), source=source, rows=tuple(rows))
    logger.debug("loaded %d reflectivity samples from %s", len(omega), source or "<text>")
    return table


def load_reflectivity_table(path: str | os.PathLike[str]) -> TableReflectivity:
    """Read a reflectivity table file; ``source`` is set to the absolute path."""
    resolved = Path(path).resolve()
    try:
        data = resolved.read_bytes()
    except OSError as exc:
        raise TableFormatError(f"cannot read table: {exc.strerror}", source=str(resolved)) from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        lineno = data.count(b"\n", 0, exc.start) + 1
        raise TableFormatError(
            f"row {lineno}: not valid UTF-8: {exc.reason}", source=str(resolved), line=lineno
        ) from exc
    return parse_reflectivity_table(text, source=str(resolved))
