"""Line declarations.

The configuration document is INI-style, one block per line::

    [line rho]
    size = 1
    s = 1
    dual = rho

``size`` defaults to 1, ``s`` to 1 (written ``p/q`` when not an integer)
and ``dual`` to the line itself.
"""
from __future__ import annotations

import configparser
import os
from collections.abc import Mapping
from fractions import Fraction
from typing import Dict, Iterator, Optional

from .core import ConfigError, CuspidalLine

ENV_VAR = "JACQUET_CONFIG"
DEFAULT_TEXT = "[line rho]\nsize = 1\ns = 1\ndual = rho\n"


class LineConfig(Mapping):
    """Validated mapping from line id to :class:`CuspidalLine`."""

    def __init__(self, lines: Dict[str, CuspidalLine]):
        self._lines = dict(lines)
        self._validate()

    def _validate(self):
        if not self._lines:
            raise ConfigError("no lines declared")
        for ln in self._lines.values():
            if ln.dual_id not in self._lines:
                raise ConfigError(f"line {ln.id!r}: dual {ln.dual_id!r} is not declared")
            d = self._lines[ln.dual_id]
            if d.dual_id != ln.id:
                raise ConfigError(f"dual is not an involution on {ln.id!r} <-> {d.id!r}")
            if (d.size, d.s) != (ln.size, ln.s):
                raise ConfigError(f"lines {ln.id!r} and {d.id!r} are dual but differ in size or s")

    def __getitem__(self, key: str) -> CuspidalLine:
        try:
            return self._lines[key]
        except KeyError:
            raise ConfigError(f"unknown line id {key!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._lines)

    def __len__(self) -> int:
        return len(self._lines)

    def __contains__(self, key) -> bool:
        return key in self._lines

    def __repr__(self):
        return f"LineConfig({list(self._lines.values())!r})"


def _int(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{what}: expected an integer, got {value!r}") from None


def _rational(value: str, what: str) -> Fraction:
    num, _, den = value.strip().partition("/")
    q = Fraction(_int(num, what), _int(den, what) if den else 1)
    return q


def parse_config(text: str) -> LineConfig:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(str(exc).splitlines()[0]) from None
    lines = {}
    for section in parser.sections():
        kind, _, line_id = section.partition(" ")
        line_id = line_id.strip()
        if kind != "line" or not line_id:
            raise ConfigError(f"bad section header [{section}]; expected [line <id>]")
        if line_id in lines:
            raise ConfigError(f"duplicate line id {line_id!r}")
        block = parser[section]
        extra = set(block) - {"size", "s", "dual"}
        if extra:
            raise ConfigError(f"line {line_id!r}: unknown keys {sorted(extra)}")
        lines[line_id] = CuspidalLine(
            line_id,
            size=_int(block.get("size", "1"), f"line {line_id!r} size"),
            s=_rational(block.get("s", "1"), f"line {line_id!r} s"),
            dual_id=block.get("dual", line_id).strip(),
        )
    return LineConfig(lines)


def load_config(path: Optional[str] = None) -> LineConfig:
    """Read ``path``, else the file named by $JACQUET_CONFIG, else the default single line."""
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return parse_config(DEFAULT_TEXT)
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc.strerror}") from None
