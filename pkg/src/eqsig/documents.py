"""JSON documents and the move-script language.

Three document kinds share one envelope (``kind``, ``label``, ``notes``):

``equivariant-goeritz``
    ``n``, ``A``, ``B`` (``n x n`` integer arrays) and ``e``.
``symmetric-diagram``
    ``n`` and ``crossings``; each crossing has ``id``, ``regions`` (two of
    ``"a<i>"``, ``"a<i>'"``, ``"fixed"``), ``eta``, ``color``, ``epsilon``
    (``null`` unless bicolored), ``locus`` and ``partner``.
``bound-report``
    the output of :func:`eqsig.bounds.verify_sequence`.

Parsing is strict: unknown fields are rejected and integers must be JSON
integers (arbitrary precision).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from decimal import Decimal
from typing import Optional, Union

import jsonschema

from .bounds import BoundReport, BoundStep, LowerBounds
from .diagram import Color, Crossing, DiagramError, Locus, Region, SymmetricDiagram
from .goeritz import EquivariantGoeritz
from .matrix import SymIntMatrix
from .moves import MoveSpec, TypeA1, TypeA2, TypeB, TypeC, move_kind

GOERITZ = "equivariant-goeritz"
DIAGRAM = "symmetric-diagram"
REPORT = "bound-report"


class DocumentError(ValueError):
    """Malformed document: ``path`` locates the field, or ``line``/``column`` the syntax error."""

    def __init__(self, message: str, path: str = "", line: Optional[int] = None,
                 column: Optional[int] = None):
        self.path, self.line, self.column = path, line, column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif path:
            where = f" at {path}"
        super().__init__(message + where)


_INT = {"type": "integer"}
_SIGN = {"enum": [1, -1]}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _INT}}
_ENVELOPE = {
    "label": {"type": ["string", "null"]},
    "notes": {"type": ["string", "null"]},
}

SCHEMAS = {
    GOERITZ: {
        "type": "object",
        "additionalProperties": False,
        "required": ["kind", "n", "A", "B", "e"],
        "properties": {
            "kind": {"const": GOERITZ}, **_ENVELOPE,
            "n": {"type": "integer", "minimum": 0},
            "A": _MATRIX, "B": _MATRIX, "e": _INT,
        },
    },
    DIAGRAM: {
        "type": "object",
        "additionalProperties": False,
        "required": ["kind", "n", "crossings"],
        "properties": {
            "kind": {"const": DIAGRAM}, **_ENVELOPE,
            "n": {"type": "integer", "minimum": 0},
            "crossings": {
                "type": "array",
                "items": {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["id", "regions", "eta", "color", "locus", "partner"],
                    "properties": {
                        "id": {"type": "string", "minLength": 1},
                        "regions": {
                            "type": "array", "minItems": 2, "maxItems": 2,
                            "items": {"type": "string", "pattern": r"^(fixed|a[1-9][0-9]*'?)$"},
                        },
                        "eta": _SIGN,
                        "color": {"enum": [c.value for c in Color]},
                        "epsilon": {"enum": [1, -1, None]},
                        "locus": {"enum": [x.value for x in Locus]},
                        "partner": {"type": "string", "minLength": 1},
                    },
                },
            },
        },
    },
    REPORT: {
        "type": "object",
        "additionalProperties": False,
        "required": ["kind", "initial_sigma", "steps", "final_sigma", "compliant",
                     "lower_bounds"],
        "properties": {
            "kind": {"const": REPORT}, **_ENVELOPE,
            "initial_sigma": _INT,
            "steps": {
                "type": "array",
                "items": {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["move", "sigma_before", "sigma_after", "delta", "bound",
                                 "compliant"],
                    "properties": {
                        "move": {"type": "string"},
                        "sigma_before": _INT, "sigma_after": _INT, "delta": _INT,
                        "bound": {"type": "integer", "minimum": 0},
                        "compliant": {"type": "boolean"},
                    },
                },
            },
            "final_sigma": _INT,
            "compliant": {"type": "boolean"},
            "lower_bounds": {
                "type": "object",
                "additionalProperties": False,
                "required": ["uA_min", "uB_min", "uC_min", "homotopy_selfintersections_min"],
                "properties": {
                    "uA_min": _INT, "uB_min": _INT, "uC_min": _INT,
                    "homotopy_selfintersections_min": _INT,
                    "caveats": {"type": "object", "additionalProperties": {"type": "string"}},
                },
            },
        },
    },
}

Payload = Union[EquivariantGoeritz, SymmetricDiagram, BoundReport]


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Payload
    label: Optional[str] = None
    notes: Optional[str] = None


def goeritz_document(G: EquivariantGoeritz, notes: Optional[str] = None) -> Document:
    return Document(GOERITZ, G, G.label, notes)


def _path(err: jsonschema.ValidationError) -> str:
    return "/".join(str(p) for p in err.absolute_path) or "<root>"


def _reject_float(text: str):
    raise DocumentError(f"non-integer number {text!r}")


def load_json(text: str):
    try:
        return json.loads(text, parse_float=Decimal, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg}", line=exc.lineno,
                            column=exc.colno) from None


def parse_document(text: str) -> Document:
    """Parse and schema-check a document."""
    return document_from_obj(load_json(text))


def document_from_obj(obj) -> Document:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object", "<root>")
    kind = obj.get("kind")
    if kind not in SCHEMAS:
        raise DocumentError(f"unknown kind {kind!r}; expected one of {sorted(SCHEMAS)}", "kind")
    validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
    err = jsonschema.exceptions.best_match(validator.iter_errors(obj))
    if err is not None:
        raise DocumentError(f"schema violation: {err.message}", _path(err))
    label, notes = obj.get("label"), obj.get("notes")
    if kind == GOERITZ:
        payload = _goeritz_from(obj, label)
    elif kind == DIAGRAM:
        payload = _diagram_from(obj, label)
    else:
        payload = _report_from(obj, label)
    return Document(kind, payload, label, notes)


def _goeritz_from(obj, label) -> EquivariantGoeritz:
    n = obj["n"]
    blocks = {}
    for name in ("A", "B"):
        rows = obj[name]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DocumentError(f"{name} must be {n}x{n}", name)
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise DocumentError(f"{name} not symmetric", f"{name}/{i}/{j}")
        blocks[name] = SymIntMatrix(rows)
    return EquivariantGoeritz(blocks["A"], blocks["B"], obj["e"], label)


def _diagram_from(obj, label) -> SymmetricDiagram:
    crossings = []
    for k, c in enumerate(obj["crossings"]):
        try:
            r1, r2 = (Region.parse(t) for t in c["regions"])
        except DiagramError as exc:
            raise DocumentError(str(exc), f"crossings/{k}/regions") from None
        crossings.append(Crossing(c["id"], (r1, r2), c["eta"], Color(c["color"]),
                                  c.get("epsilon"), Locus(c["locus"]), c["partner"]))
    return SymmetricDiagram(obj["n"], tuple(crossings), label)


def _report_from(obj, label) -> BoundReport:
    steps = []
    for k, s in enumerate(obj["steps"]):
        moves = parse_moves(s["move"])
        if len(moves) != 1:
            raise DocumentError("each step holds exactly one move", f"steps/{k}/move")
        step = BoundStep(moves[0], s["sigma_before"], s["sigma_after"], s["bound"])
        if step.delta != s["delta"] or step.compliant != s["compliant"]:
            raise DocumentError("delta/compliant inconsistent with sigma values", f"steps/{k}")
        steps.append(step)
    lb = obj["lower_bounds"]
    bounds = LowerBounds(obj["initial_sigma"], lb["uA_min"], lb["uB_min"], lb["uC_min"],
                         lb["homotopy_selfintersections_min"])
    if "caveats" in lb:
        bounds = LowerBounds(**{**bounds.__dict__, "caveats": dict(lb["caveats"])})
    report = BoundReport(obj["initial_sigma"], tuple(steps), bounds, label)
    if report.final_sigma != obj["final_sigma"] or report.compliant != obj["compliant"]:
        raise DocumentError("final_sigma/compliant inconsistent with steps")
    return report


def to_obj(doc: Document) -> dict:
    out = {"kind": doc.kind}
    if doc.label is not None:
        out["label"] = doc.label
    if doc.notes is not None:
        out["notes"] = doc.notes
    p = doc.payload
    if doc.kind == GOERITZ:
        out.update(n=p.n, A=p.A.tolist(), B=p.B.tolist(), e=p.e)
    elif doc.kind == DIAGRAM:
        out["n"] = p.n
        out["crossings"] = [
            {"id": c.id, "regions": [str(r) for r in c.regions], "eta": c.eta,
             "color": c.color.value, "epsilon": c.epsilon, "locus": c.locus.value,
             "partner": c.partner}
            for c in p.crossings
        ]
    elif doc.kind == REPORT:
        out["initial_sigma"] = p.initial_sigma
        out["steps"] = [
            {"move": format_move(s.move), "sigma_before": s.sigma_before,
             "sigma_after": s.sigma_after, "delta": s.delta, "bound": s.bound,
             "compliant": s.compliant}
            for s in p.steps
        ]
        out["final_sigma"] = p.final_sigma
        out["compliant"] = p.compliant
        lb = p.lower_bounds
        out["lower_bounds"] = {
            "uA_min": lb.uA_min, "uB_min": lb.uB_min, "uC_min": lb.uC_min,
            "homotopy_selfintersections_min": lb.homotopy_selfintersections_min,
            "caveats": dict(lb.caveats),
        }
    else:
        raise DocumentError(f"unknown kind {doc.kind!r}")
    return out


def _dump(x, indent: int) -> str:
    pad = " " * indent
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_dump(v, indent + 2)}' for k, v in x.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(x, list):
        if all(not isinstance(v, (dict, list)) for v in x):
            return json.dumps(x, ensure_ascii=False)
        items = [f"{pad}  {_dump(v, indent + 2)}" for v in x]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(x, ensure_ascii=False)


def serialize(doc: Document) -> str:
    """Stable, diff-friendly JSON text (matrix rows on one line each)."""
    return _dump(to_obj(doc), 0) + "\n"


# move scripts

class MoveScriptError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at column {position + 1})")


_KEYS = {
    "B": ({"k", "sign"}, set()),
    "A1": ({"k", "sign", "color"}, {"eps"}),
    "A2": ({"i", "j", "sign", "color"}, {"eps", "mixed"}),
    "C": ({"sign", "color"}, set()),
}
_INT_RE = re.compile(r"^[+-]?[0-9]+$")


def _value(key: str, raw: str, pos: int):
    if key in ("k", "i", "j"):
        if not _INT_RE.match(raw) or int(raw) < 1:
            raise MoveScriptError(f"{key} must be a positive integer, got {raw!r}", pos)
        return int(raw)
    if key in ("sign", "eps"):
        if raw not in ("+1", "-1", "1"):
            raise MoveScriptError(f"{key} must be +1 or -1, got {raw!r}", pos)
        return int(raw)
    if key == "color":
        if raw not in ("unicolored", "bicolored"):
            raise MoveScriptError(f"color must be unicolored or bicolored, got {raw!r}", pos)
        return Color(raw)
    if key == "mixed":
        if raw not in ("true", "false"):
            raise MoveScriptError(f"mixed must be true or false, got {raw!r}", pos)
        return raw == "true"
    raise AssertionError(key)


def parse_moves(text: str) -> list[MoveSpec]:
    """Parse ``"B k=1 sign=+1; C sign=+1 color=bicolored"`` into move specs.

    Statements are separated by ``;``; blank statements are ignored.
    """
    moves = []
    start = 0
    for stmt in text.split(";"):
        tokens = [(m.group(), start + m.start()) for m in re.finditer(r"\S+", stmt)]
        stmt_pos = start
        start += len(stmt) + 1
        if not tokens:
            continue
        (kind, kpos), args = tokens[0], tokens[1:]
        if kind not in _KEYS:
            raise MoveScriptError(f"unknown move type {kind!r} (expected B, A1, A2 or C)", kpos)
        required, optional = _KEYS[kind]
        vals = {}
        for tok, pos in args:
            key, eq, raw = tok.partition("=")
            if not eq:
                raise MoveScriptError(f"expected key=value, got {tok!r}", pos)
            if key not in required | optional:
                raise MoveScriptError(f"unknown key {key!r} for {kind}", pos)
            if key in vals:
                raise MoveScriptError(f"duplicate key {key!r}", pos)
            vals[key] = _value(key, raw, pos + len(key) + 1)
        missing = required - vals.keys()
        if missing:
            raise MoveScriptError(f"{kind} is missing {', '.join(sorted(missing))}", kpos)
        try:
            if kind == "B":
                moves.append(TypeB(vals["k"], vals["sign"]))
            elif kind == "A1":
                moves.append(TypeA1(vals["k"], vals["sign"], vals["color"], vals.get("eps")))
            elif kind == "A2":
                moves.append(TypeA2(vals["i"], vals["j"], vals["sign"], vals["color"],
                                    vals.get("eps"), vals.get("mixed", False)))
            else:
                moves.append(TypeC(vals["sign"], vals["color"]))
        except ValueError as exc:
            raise MoveScriptError(str(exc), stmt_pos + (len(stmt) - len(stmt.lstrip()))) from None
    return moves


def _s(x: int) -> str:
    return "+1" if x > 0 else "-1"


def format_move(m: MoveSpec) -> str:
    kind = move_kind(m)
    if isinstance(m, TypeB):
        return f"B k={m.k} sign={_s(m.sign)}"
    if isinstance(m, TypeC):
        return f"C sign={_s(m.sign)} color={m.color.value}"
    if isinstance(m, TypeA1):
        head = f"A1 k={m.k}"
    else:
        head = f"A2 i={m.i} j={m.j}"
    out = f"{head} sign={_s(m.sign)} color={m.color.value}"
    if m.eps is not None:
        out += f" eps={_s(m.eps)}"
    if kind == "A2" and m.mixed:
        out += " mixed=true"
    return out


def format_moves(moves) -> str:
    return "; ".join(format_move(m) for m in moves)
