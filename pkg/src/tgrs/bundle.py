"""Code bundle files.

Text form, one record per line::

    GF(5^1; modulus=0,1)
    D=1,2,3,4
    k=2
    l=1
    eta=1
    v=1,1,1,1

Elements use the coordinate-tuple syntax ``(c0,...,c{m-1})``, bare residues,
or ``g^e`` for powers of the field's canonical primitive element.  ``D=all``
stands for every nonzero element.  Omitting ``eta`` (and ``l``) describes a
plain GRS code; omitting ``v`` means the all-ones vector.  The JSON form is
an object with keys ``field``, ``D``, ``k``, ``l``, ``eta``, ``v``; JSON
reports embed it under ``"bundle"``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Optional, Union

from .codes import EvaluationSet, LinearCode, TgrsParams, grs_generator, tgrs_generator
from .errors import InvalidParams, ParseError
from .gf import FieldSpec, parse_field

_TOKEN = re.compile(r"\s*(\([^()]*\)|g\^-?\d+|\d+)\s*(,|$)")
KEYS = ("D", "k", "l", "eta", "v")


@dataclass(frozen=True)
class Bundle:
    field: FieldSpec
    D: tuple[int, ...]
    k: Optional[int] = None
    l: Optional[int] = None
    eta: Optional[int] = None
    v: Optional[tuple[int, ...]] = None

    @property
    def is_twisted(self) -> bool:
        return self.eta is not None

    @property
    def scaling(self) -> tuple[int, ...]:
        return self.v if self.v is not None else (1,) * len(self.D)

    def evaluation_set(self) -> EvaluationSet:
        return EvaluationSet(self.field, self.D)

    def params(self) -> TgrsParams:
        if self.k is None or self.l is None or self.eta is None:
            raise InvalidParams("a twisted code needs k, l and eta")
        return TgrsParams(self.evaluation_set(), self.k, self.l, self.eta, self.scaling)

    def code(self) -> LinearCode:
        if self.is_twisted:
            return tgrs_generator(self.params())
        if self.k is None:
            raise InvalidParams("bundle has no dimension k")
        if self.l is not None:
            raise InvalidParams("l given without eta")
        return grs_generator(self.evaluation_set(), self.k, self.scaling)

    def to_text(self) -> str:
        F = self.field
        lines = [str(F), "D=" + ",".join(F.format_element(a) for a in self.D)]
        for key in ("k", "l"):
            val = getattr(self, key)
            if val is not None:
                lines.append(f"{key}={val}")
        if self.eta is not None:
            lines.append(f"eta={F.format_element(self.eta)}")
        lines.append("v=" + ",".join(F.format_element(a) for a in self.scaling))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        F = self.field
        return {
            "field": str(F),
            "D": [F.element_json(a) for a in self.D],
            "k": self.k,
            "l": self.l,
            "eta": None if self.eta is None else F.element_json(self.eta),
            "v": [F.element_json(a) for a in self.scaling],
        }


def bundle_from_params(params: TgrsParams) -> Bundle:
    return Bundle(params.field, params.D.points, params.k, params.l, params.eta, params.v)


def parse_element_list(field: FieldSpec, text: str) -> tuple[int, ...]:
    s = text.strip()
    if s == "all":
        return tuple(field.nonzero())
    out = []
    pos = 0
    while pos < len(s):
        mo = _TOKEN.match(s, pos)
        if not mo:
            raise ParseError(f"cannot parse element list {text!r}")
        out.append(field.parse_element(mo.group(1)))
        pos = mo.end()
    if not out:
        raise ParseError("empty element list")
    return tuple(out)


def _parse_int(key: str, val: str) -> int:
    try:
        return int(val)
    except ValueError:
        raise ParseError(f"{key} must be an integer, got {val!r}") from None


def parse_bundle_text(text: str) -> Bundle:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty bundle")
    field = parse_field(lines[0])
    values: dict[str, str] = {}
    for ln in lines[1:]:
        if "=" not in ln:
            raise ParseError(f"expected key=value, got {ln!r}")
        key, val = (x.strip() for x in ln.split("=", 1))
        if key not in KEYS:
            raise ParseError(f"unknown bundle key {key!r}")
        if key in values:
            raise ParseError(f"duplicate bundle key {key!r}")
        values[key] = val
    if "D" not in values:
        raise ParseError("bundle has no D line")
    return Bundle(
        field,
        parse_element_list(field, values["D"]),
        _parse_int("k", values["k"]) if "k" in values else None,
        _parse_int("l", values["l"]) if "l" in values else None,
        field.parse_element(values["eta"]) if "eta" in values else None,
        parse_element_list(field, values["v"]) if "v" in values else None,
    )


def bundle_from_json(obj: dict) -> Bundle:
    if "bundle" in obj and isinstance(obj["bundle"], dict):
        obj = obj["bundle"]
    if "field" not in obj or "D" not in obj:
        raise ParseError("JSON bundle needs 'field' and 'D'")
    field = parse_field(obj["field"])

    def elems(xs):
        if isinstance(xs, str):
            return parse_element_list(field, xs)
        if not isinstance(xs, list):
            raise ParseError(f"expected a list of elements, got {xs!r}")
        return tuple(field.element_from_json(x) for x in xs)

    def integer(key):
        val = obj.get(key)
        if val is None:
            return None
        if not isinstance(val, int) or isinstance(val, bool):
            raise ParseError(f"{key} must be an integer")
        return val

    eta = obj.get("eta")
    v = obj.get("v")
    return Bundle(
        field,
        elems(obj["D"]),
        integer("k"),
        integer("l"),
        None if eta is None else field.element_from_json(eta),
        None if v is None else elems(v),
    )


def parse_bundle(text: str) -> Bundle:
    """Parse either bundle form; JSON is recognised by a leading brace."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON bundle: {exc}") from None
        if not isinstance(obj, dict):
            raise ParseError("JSON bundle must be an object")
        return bundle_from_json(obj)
    return parse_bundle_text(text)


def override(bundle: Optional[Bundle], field: Optional[str] = None, D: Optional[str] = None,
             k: Optional[int] = None, l: Optional[int] = None, eta: Optional[str] = None,
             v: Optional[str] = None) -> Bundle:
    """Apply inline command-line values on top of an (optional) bundle."""
    if field is not None:
        F = parse_field(field)
        if bundle is not None and bundle.field != F:
            raise ParseError(f"--field {F} conflicts with the bundle's {bundle.field}")
    elif bundle is not None:
        F = bundle.field
    else:
        raise ParseError("no field given (bundle file or --field)")
    if bundle is None:
        if D is None:
            raise ParseError("no evaluation set given (bundle file or --D)")
        bundle = Bundle(F, parse_element_list(F, D))
    changes: dict[str, Union[int, tuple, None]] = {}
    if D is not None:
        changes["D"] = parse_element_list(F, D)
    if k is not None:
        changes["k"] = k
    if l is not None:
        changes["l"] = l
    if eta is not None:
        changes["eta"] = F.parse_element(eta)
    if v is not None:
        changes["v"] = parse_element_list(F, v)
    return replace(bundle, **changes) if changes else bundle

