"""JSON file formats: problem files and resolvent files.

Rationals travel as strings "num/den" so nothing is ever rounded;
polynomials are ascending coefficient arrays, making degree 0 unambiguous.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .fields import GF, QQ
from .polys import XPoly, XRat
from .powersum import IdenticallyZero, Resolvent, ResolventTemplate
from .tower import MonicPoly, ProblemSpec, PseudoTerm

__all__ = [
    "parse_problem",
    "serialize_problem",
    "ResolventFile",
    "parse_resolvent",
    "serialize_resolvent",
    "resolvent_file_from_result",
]


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None


def _field_from_json(node):
    if node == "Q":
        return QQ
    if isinstance(node, dict) and set(node) == {"p"}:
        return GF(node["p"])
    raise ParseError(f"field must be \"Q\" or {{\"p\": prime}}, got {node!r}")


def _field_to_json(field):
    return "Q" if field == QQ else {"p": field.p}


def _poly_from_json(field, node, where):
    if not isinstance(node, list) or not all(isinstance(c, str) for c in node):
        raise ParseError(f"{where}: polynomial must be a list of rational strings")
    return XPoly(field, tuple(field.parse(c) for c in node))


def _poly_to_json(poly):
    return [poly.field.fmt(c) for c in poly.coeffs]


def _rat_from_json(field, node, where):
    if isinstance(node, list):
        return XRat(_poly_from_json(field, node, where))
    if isinstance(node, dict) and set(node) <= {"num", "den"}:
        num = _poly_from_json(field, node.get("num", []), where)
        den = _poly_from_json(field, node.get("den", ["1"]), where)
        if den.is_zero():
            raise ParseError(f"{where}: zero denominator")
        return XRat(num, den)
    raise ParseError(f"{where}: expected a polynomial or a num/den object")


def parse_problem(text: str) -> ProblemSpec:
    """Parse and validate a problem file (monicity, invertible roots and
    symbol uniqueness are enforced by the ProblemSpec constructor)."""
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("field", "polynomials", "pseudopolynomial"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    field = _field_from_json(doc["field"])
    polys = []
    for i, node in enumerate(doc["polynomials"]):
        where = f"polynomials[{i}]"
        if "id" not in node or "coeffs" not in node:
            raise ParseError(f"{where}: needs id and coeffs")
        coeffs = tuple(
            _rat_from_json(field, c, f"{where}.coeffs[{k}]")
            for k, c in enumerate(node["coeffs"])
        )
        try:
            polys.append(MonicPoly(node["id"], coeffs))
        except ValidationError as e:
            raise ValidationError(f"{where}: {e}") from None
    pseudo = doc["pseudopolynomial"]
    alphas = tuple(pseudo.get("alphas", []))
    terms = []
    for i, node in enumerate(pseudo.get("terms", [])):
        where = f"pseudopolynomial.terms[{i}]"
        a = _rat_from_json(field, node.get("a", ["1"]), f"{where}.a")
        factors = node.get("factors", {})
        if not isinstance(factors, dict):
            raise ParseError(f"{where}.factors: must be an object")
        terms.append(PseudoTerm(a, tuple(sorted(factors.items()))))
    return ProblemSpec(field, tuple(polys), tuple(terms), alphas)


def serialize_problem(p: ProblemSpec) -> str:
    doc = {
        "field": _field_to_json(p.field),
        "polynomials": [
            {
                "id": P.id,
                "coeffs": [
                    _poly_to_json(c.num)
                    if c.is_poly()
                    else {"num": _poly_to_json(c.num), "den": _poly_to_json(c.den)}
                    for c in P.coeffs_t
                ],
            }
            for P in p.polynomials
        ],
        "pseudopolynomial": {
            "alphas": list(p.alphas),
            "terms": [
                {
                    "a": _poly_to_json(t.a.num)
                    if t.a.is_poly()
                    else {"num": _poly_to_json(t.a.num), "den": _poly_to_json(t.a.den)},
                    "factors": dict(t.exponents),
                }
                for t in p.terms
            ],
        },
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


@dataclass
class ResolventFile:
    field: object
    status: str  # "ok" | "identically_zero"
    template: ResolventTemplate
    raw_t: tuple  # XPoly per entry
    content: XPoly
    primitive_r: tuple  # XPoly per entry
    provenance: dict


def resolvent_file_from_result(field, tpl, result, method, specs=None):
    provenance = {"method": method}
    if specs is not None:
        provenance["specializations"] = [dict(s) for s in specs]
    if isinstance(result, IdenticallyZero):
        zero = XPoly.zero(field)
        n = tpl.psi
        return ResolventFile(
            field, "identically_zero", tpl, (zero,) * n, zero, (zero,) * n, provenance
        )
    assert isinstance(result, Resolvent)
    return ResolventFile(
        field, "ok", tpl, result.raw_t, result.content, result.primitive_r, provenance
    )


def serialize_resolvent(rf: ResolventFile) -> str:
    doc = {
        "field": _field_to_json(rf.field),
        "status": rf.status,
        "template": [
            {"order": m, "monomial": dict(mono)} for m, mono in rf.template.entries
        ],
        "raw_t": [_poly_to_json(t) for t in rf.raw_t],
        "content": _poly_to_json(rf.content),
        "primitive_r": [_poly_to_json(r) for r in rf.primitive_r],
        "provenance": rf.provenance,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_resolvent(text: str) -> ResolventFile:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("field", "status", "template", "raw_t", "content", "primitive_r"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    field = _field_from_json(doc["field"])
    status = doc["status"]
    if status not in ("ok", "identically_zero"):
        raise ParseError(f"bad status {status!r}")
    tpl = ResolventTemplate.from_pairs(
        [(e["order"], e["monomial"]) for e in doc["template"]]
    )
    raw = tuple(
        _poly_from_json(field, t, f"raw_t[{i}]") for i, t in enumerate(doc["raw_t"])
    )
    content = _poly_from_json(field, doc["content"], "content")
    prims = tuple(
        _poly_from_json(field, r, f"primitive_r[{i}]")
        for i, r in enumerate(doc["primitive_r"])
    )
    if len(raw) != tpl.psi or len(prims) != tpl.psi:
        raise ValidationError("raw_t/primitive_r length must match template")
    if status == "ok":
        for t, r in zip(raw, prims):
            if not (content * r) == t:
                raise ValidationError("content * primitive_r != raw_t")
    return ResolventFile(
        field, status, tpl, raw, content, prims, doc.get("provenance", {})
    )
