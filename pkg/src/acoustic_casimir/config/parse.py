"""Line-tracking parser for the run-configuration text format.

    # comment            ; comment
    [band]
    omega_lo = 31415.93

Each section appears at most once and each key at most once per section.
Every value keeps the line it came from so validation errors can point at it.
"""

from __future__ import annotations

import os
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigError

SECTIONS = ("band", "cavity", "sphere", "sweep", "dos", "quadrature", "run")


@dataclass(frozen=True, slots=True)
class Entry:
    value: str
    line: int | None = None


@dataclass(slots=True)
class ParsedConfig:
    sections: dict[str, dict[str, Entry]] = field(default_factory=dict)
    section_lines: dict[str, int | None] = field(default_factory=dict)
    source: str | None = None
    base_dir: Path = field(default_factory=Path.cwd)

    def line_of(self, section: str, key: str | None = None) -> int | None:
        if key is not None:
            entry = self.sections.get(section, {}).get(key)
            if entry is not None:
                return entry.line
        return self.section_lines.get(section)

    def as_mapping(self) -> dict[str, dict[str, str]]:
        return {
            name: {key: entry.value for key, entry in entries.items()}
            for name, entries in self.sections.items()
        }


def parse_config_text(
    text: str, *, source: str | None = None, base_dir: Path | None = None
) -> ParsedConfig:
    parsed = ParsedConfig(source=source, base_dir=base_dir or Path.cwd())
    current: dict[str, Entry] | None = None
    current_name = ""

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#;":
            continue

        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"malformed section header {line!r}", source=source, line=lineno)
            name = line[1:-1].strip().lower()
            if name not in SECTIONS:
                raise ConfigError(
                    f"unknown section [{name}]; expected one of {', '.join(SECTIONS)}",
                    source=source,
                    line=lineno,
                )
            if name in parsed.sections:
                raise ConfigError(f"duplicate section [{name}]", source=source, line=lineno)
            current = parsed.sections[name] = {}
            parsed.section_lines[name] = lineno
            current_name = name
            continue

        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"expected 'key = value', got {line!r}", source=source, line=lineno)
        if current is None:
            raise ConfigError(
                f"entry {key!r} appears before any section header", source=source, line=lineno
            )
        if key in current:
            raise ConfigError(
                "duplicate key", source=source, line=lineno, field=f"{current_name}.{key}"
            )
        current[key] = Entry(value.strip(), lineno)

    return parsed


def load_config_file(path: str | os.PathLike[str]) -> ParsedConfig:
    resolved = Path(path).resolve()
    try:
        data = resolved.read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}", source=str(path)) from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise ConfigError(
            f"config is not valid UTF-8: {exc.reason}", source=str(path), line=line
        ) from exc
    return parse_config_text(text, source=str(path), base_dir=resolved.parent)


def apply_overrides(parsed: ParsedConfig, overrides: Sequence[str]) -> ParsedConfig:
    """Apply ``section.key=value`` overrides in order, creating sections as needed."""
    for item in overrides:
        target, sep, value = item.partition("=")
        section, dot, key = target.strip().partition(".")
        section = section.strip().lower()
        key = key.strip()
        if not sep or not dot or not section or not key:
            raise ConfigError(f"override {item!r} is not of the form section.key=value")
        if section not in SECTIONS:
            raise ConfigError(f"unknown section in override {item!r}", field=target.strip())

        entries = parsed.sections.setdefault(section, {})
        parsed.section_lines.setdefault(section, None)
        entries[key] = Entry(value.strip())
    return parsed
