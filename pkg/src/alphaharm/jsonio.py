"""Canonical serialisation: byte-stable JSON and CSV for reports and tables.

Stability contract: the same logical object always serialises to the same
bytes (sorted keys, fixed separators, floats at 17 significant digits,
trailing newline), so seeded runs can be diffed directly.
"""

from __future__ import annotations

import csv
import io
import math

from .errors import DomainError


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise DomainError("non-finite float has no canonical form")
    if x == 0.0:
        return "0"   # normalise -0.0 as well
    return format(x, ".17g")


def _encode(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_format_float(obj))
    elif isinstance(obj, str):
        out.append('"')
        for ch in obj:
            if ch == '"':
                out.append('\\"')
            elif ch == "\\":
                out.append("\\\\")
            elif ord(ch) < 0x20:
                out.append(f"\\u{ord(ch):04x}")
            else:
                out.append(ch)
        out.append('"')
    elif isinstance(obj, complex):
        _encode({"re": obj.real, "im": obj.imag}, out)
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if not isinstance(key, str):
                raise DomainError("canonical JSON keys must be strings")
            if i:
                out.append(",")
            _encode(key, out)
            out.append(":")
            _encode(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _encode(item, out)
        out.append("]")
    elif hasattr(obj, "to_json_obj"):
        _encode(obj.to_json_obj(), out)
    else:
        raise DomainError(f"no canonical JSON form for {type(obj).__name__}")


def canonical_json(obj) -> str:
    """Canonical one-line JSON text, newline-terminated."""
    out: list[str] = []
    _encode(obj, out)
    out.append("\n")
    return "".join(out)


def rows_to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    """CSV text for a list of homogeneous row dicts; floats use the same
    17-digit canonical form as the JSON side."""
    if columns is None:
        columns = sorted({k for row in rows for k in row}) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        rendered = []
        for col in columns:
            v = row.get(col)
            if isinstance(v, float):
                rendered.append(_format_float(v))
            elif isinstance(v, complex):
                rendered.append(format_complex(v))
            elif v is None:
                rendered.append("")
            else:
                rendered.append(str(v))
        writer.writerow(rendered)
    return buf.getvalue()


def parse_complex(text: str) -> complex:
    """Parse "re,im" (or a bare real part) into a complex number."""
    text = text.strip()
    try:
        if "," in text:
            re_s, im_s = text.split(",")
            return complex(float(re_s), float(im_s))
        return complex(float(text), 0.0)
    except ValueError as exc:
        raise DomainError(f"unparseable complex number {text!r}") from exc


def format_complex(z: complex) -> str:
    return f"{_format_float(z.real)},{_format_float(z.imag)}"


def parse_complex_list(text: str) -> list[complex]:
    """Parse "re,im;re,im;..." into a coefficient list."""
    text = text.strip()
    if not text:
        return []
    return [parse_complex(part) for part in text.split(";")]
