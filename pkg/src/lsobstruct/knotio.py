"""Reading knots from JSON objects, files, family references and census CSV rows."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from importlib import resources

from .alexpoly import (
    AlexanderPolynomial,
    JumpVector,
    jump_vector_from_exponents,
    polynomial_from_jump_vector,
    validate_lspace_form,
)
from .errors import KnotParseError, LSObstructError

__all__ = [
    "KnotSpec",
    "knot_from_dict",
    "knot_to_dict",
    "resolve_knot",
    "read_census",
    "parse_alexander_field",
    "parse_r_field",
    "FIXTURES",
]

# name -> bundled JSON resource
FIXTURES = {"pretzel": "p_2_3_11.json", "P(-2,3,11)": "p_2_3_11.json"}


@dataclass(frozen=True)
class KnotSpec:
    source: str  # "inline", "file" or "family"
    knot: AlexanderPolynomial
    provenance: str


def _int(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise KnotParseError(f"expected an integer, got {value!r}", field=field)
    return value


def _poly_from_pairs(pairs, name, field="alexander"):
    if not isinstance(pairs, list) or not pairs:
        raise KnotParseError("expected a nonempty list of [exponent, coefficient] pairs", field=field)
    table = {}
    for idx, pair in enumerate(pairs):
        where = f"{field}[{idx}]"
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise KnotParseError(f"expected [exponent, coefficient], got {pair!r}", field=where)
        e, c = _int(pair[0], where), _int(pair[1], where)
        if e in table:
            raise KnotParseError(f"exponent {e} listed twice", field=where)
        table[e] = c
    if min(table) >= 0:
        # nonnegative half only: mirror it
        table.update({-e: c for e, c in list(table.items()) if e > 0})
    poly = AlexanderPolynomial(table, name=name)
    if not poly.is_symmetric():
        raise KnotParseError("full-support polynomial is not symmetric", field=field)
    return poly


def knot_from_dict(obj: dict) -> AlexanderPolynomial:
    """Build a knot from ``{"name", "alexander": [[e, c], ...]}`` and/or ``{"name", "r": [...]}``.

    When both keys are present they must describe the same polynomial.
    """
    if not isinstance(obj, dict):
        raise KnotParseError("knot JSON must be an object")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise KnotParseError("name must be a string", field="name")
    poly = None
    if "alexander" in obj:
        poly = _poly_from_pairs(obj["alexander"], name)
    if "r" in obj:
        r = obj["r"]
        if not isinstance(r, list):
            raise KnotParseError("expected a list of integers", field="r")
        r = [_int(x, f"r[{i}]") for i, x in enumerate(r)]
        try:
            from_r = polynomial_from_jump_vector(JumpVector(tuple(r)), name=name)
        except LSObstructError as exc:
            raise KnotParseError(str(exc), field="r") from exc
        if poly is not None and poly != from_r:
            raise KnotParseError("'alexander' and 'r' describe different polynomials", field="r")
        poly = from_r
    if poly is None:
        raise KnotParseError("knot JSON needs an 'alexander' or 'r' key")
    return poly


def knot_to_dict(poly: AlexanderPolynomial) -> dict:
    out = {"name": poly.name, "alexander": [[e, c] for e, c in poly.coeffs if e >= 0]}
    try:
        seq = validate_lspace_form(poly)
        if seq.k > 0:
            out["r"] = list(jump_vector_from_exponents(seq).r)
    except LSObstructError:
        pass
    return out


def load_fixture(name: str) -> AlexanderPolynomial:
    text = resources.files("lsobstruct.data").joinpath(FIXTURES[name]).read_text(encoding="utf-8")
    return knot_from_dict(json.loads(text))


def resolve_knot(ref: str) -> KnotSpec:
    """Interpret a command-line knot reference.

    Accepted forms: inline JSON (``{...}``), a bundled fixture name
    (``pretzel``), a family reference ``kn:N``, or a path to a JSON file.
    """
    from .families import kn_knot

    text = ref.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise KnotParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
        return KnotSpec("inline", knot_from_dict(obj), "inline JSON")
    if text in FIXTURES:
        return KnotSpec("family", load_fixture(text), f"bundled fixture {FIXTURES[text]}")
    if text.startswith("kn:"):
        try:
            n = int(text[3:])
        except ValueError:
            raise KnotParseError(f"bad family index in {text!r}") from None
        if n < 1:
            raise KnotParseError(f"family index must be >= 1 in {text!r}")
        return KnotSpec("family", kn_knot(n).knot, f"family kn index {n}")
    if not os.path.exists(text):
        raise FileNotFoundError(text)
    with open(text, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise KnotParseError(f"invalid JSON in {text}: {exc.msg}", line=exc.lineno) from exc
    return KnotSpec("file", knot_from_dict(obj), f"file {text}")


def parse_alexander_field(value: str, name=None) -> AlexanderPolynomial:
    pairs = []
    for part in value.split(";"):
        part = part.strip()
        if not part:
            continue
        e, sep, c = part.partition(":")
        if not sep:
            raise KnotParseError(f"expected exp:coeff, got {part!r}", field="alexander")
        try:
            pairs.append([int(e), int(c)])
        except ValueError:
            raise KnotParseError(f"non-integer term {part!r}", field="alexander") from None
    return _poly_from_pairs(pairs, name)


def parse_r_field(value: str, name=None) -> AlexanderPolynomial:
    try:
        r = [int(x) for x in value.split(";") if x.strip()]
    except ValueError:
        raise KnotParseError(f"non-integer entry in {value!r}", field="r") from None
    try:
        return polynomial_from_jump_vector(JumpVector(tuple(r)), name=name)
    except LSObstructError as exc:
        raise KnotParseError(str(exc), field="r") from exc


def read_census(text: str):
    """Yield ``(line_number, name, poly_or_error)`` for each data row.

    The header must be ``name,alexander`` or ``name,r``.  Row problems are
    yielded as :class:`KnotParseError` instances rather than raised.
    """
    reader = csv.reader(io.StringIO(text))
    header = None
    for row in reader:
        if row and any(cell.strip() for cell in row):
            header = [cell.strip() for cell in row]
            break
    if header is None:
        return
    if header not in (["name", "alexander"], ["name", "r"]):
        raise KnotParseError(f"unsupported census header {header!r}", line=reader.line_num)
    kind = header[1]
    parse = parse_alexander_field if kind == "alexander" else parse_r_field
    for row in reader:
        line = reader.line_num
        if not row or not any(cell.strip() for cell in row):
            continue
        name = row[0].strip() if row else ""
        if len(row) != 2:
            yield line, name, KnotParseError(f"expected 2 columns, got {len(row)}", line=line)
            continue
        try:
            yield line, name, parse(row[1], name=name)
        except KnotParseError as exc:
            yield line, name, KnotParseError(str(exc), line=line)
