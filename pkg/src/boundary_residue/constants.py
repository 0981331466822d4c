"""Imported constants: line-oriented records of externally supplied values.

Each non-blank, non-comment line reads

    case=<n> monomial=<tag> re=<p/q> im=<p/q> pi=<k> source="<citation>"

with an optional ``part=<pair>`` naming the component pair the value
belongs to (default ``DD``, the pure-Dirac part).  Values are coefficients
of pi^k; the engine works with k = 3.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .coefficients import GaussianRational
from .sphere import BOUNDARY_TAGS

REQUIRED = ("case", "monomial", "re", "im", "pi", "source")
OPTIONAL = ("part",)
_FIELD = re.compile(r'(\w+)=("(?:[^"\\]|\\.)*"|[^\s"]+)')
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ConstantsError(ValueError):
    def __init__(self, path: str, line: int, col: int, message: str):
        super().__init__(f"{path}:{line}:{col}: {message}")
        self.path, self.line, self.col = path, line, col


@dataclass(frozen=True)
class ImportedConstant:
    case: int
    monomial: str
    value: GaussianRational
    pi: int
    source: str
    part: str = "DD"

    def to_line(self) -> str:
        return (f"case={self.case} part={self.part} monomial={self.monomial} "
                f"re={self.value.re} im={self.value.im} pi={self.pi} "
                f'source="{self.source}"')


def _parse_line(text: str, path: str, lineno: int) -> ImportedConstant | None:
    stripped = text.strip()
    if not stripped or stripped.startswith("#"):
        return None
    fields: dict[str, tuple[str, int]] = {}
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == "#":
            break
        m = _FIELD.match(text, pos)
        if not m:
            raise ConstantsError(path, lineno, pos + 1, "expected key=value")
        key, raw = m.group(1), m.group(2)
        if key not in REQUIRED + OPTIONAL:
            raise ConstantsError(path, lineno, pos + 1, f"unknown field {key!r}")
        if key in fields:
            raise ConstantsError(path, lineno, pos + 1, f"duplicate field {key!r}")
        fields[key] = (raw, m.start(2) + 1)
        pos = m.end()
    for key in REQUIRED:
        if key not in fields:
            raise ConstantsError(path, lineno, len(text.rstrip()) + 1, f"missing field {key!r}")

    def rational(key: str) -> Fraction:
        raw, col = fields[key]
        if not _RATIONAL.match(raw):
            raise ConstantsError(path, lineno, col, f"{key} is not an exact rational: {raw!r}")
        return Fraction(raw)

    def integer(key: str) -> int:
        raw, col = fields[key]
        if not re.match(r"^[+-]?\d+$", raw):
            raise ConstantsError(path, lineno, col, f"{key} is not an integer: {raw!r}")
        return int(raw)

    tag, col = fields["monomial"]
    if tag not in BOUNDARY_TAGS:
        raise ConstantsError(path, lineno, col, f"unknown monomial tag {tag!r}")
    source, col = fields["source"]
    if not (source.startswith('"') and source.endswith('"')):
        raise ConstantsError(path, lineno, col, "source must be a quoted string")
    part = fields.get("part", ("DD", 0))[0]
    if not re.match(r"^[DX]{2}$", part):
        raise ConstantsError(path, lineno, fields["part"][1], f"bad component pair {part!r}")
    return ImportedConstant(
        case=integer("case"),
        monomial=tag,
        value=GaussianRational(rational("re"), rational("im")),
        pi=integer("pi"),
        source=source[1:-1].replace('\\"', '"'),
        part=part,
    )


def parse_constants(text: str, path: str = "<constants>") -> list[ImportedConstant]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        rec = _parse_line(line, path, lineno)
        if rec is None:
            continue
        if rec.pi != 3:
            raise ConstantsError(path, lineno, 1, f"expected pi=3, got pi={rec.pi}")
        out.append(rec)
    return out


def load_constants(path: str | Path) -> list[ImportedConstant]:
    p = Path(path)
    return parse_constants(p.read_text(encoding="utf-8"), str(p))


def default_constants() -> list[ImportedConstant]:
    text = resources.files("boundary_residue.data").joinpath("imported_constants.txt").read_text(encoding="utf-8")
    return parse_constants(text, "imported_constants.txt")


def dump_constants(records: list[ImportedConstant]) -> str:
    return "\n".join(r.to_line() for r in records) + "\n"
