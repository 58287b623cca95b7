"""Presentations and the JSON presentation file format.

A presentation file is a UTF-8 JSON object::

    {
      "field": "rational",                     # or {"prime": p}
      "generators": [{"name": "x1", "weight": 1}, ...],
      "relations": ["x1*x2 + y1^2 - y1", ...],
      "orders": {
        "classical": {"kind": "deg-lex", "precedence": ["x1", "x2", ...]},
        "series": {"kind": "theta-lex", "precedence": [...], "weights": {"x1": 1, ...}}
      },
      "meta": {...}
    }
"""

from __future__ import annotations

import json
import dataclasses
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .fields import QQ, field_from_json
from .parse import ParseError, parse_poly
from .poly import Poly
from .words import Alphabet, OrderSpec, order_from_dict


class PresentationError(ValueError):
    pass


@dataclass
class Presentation:
    """Generators, relations in the augmentation ideal, and two orders."""

    alphabet: Alphabet
    relations: list[Poly]
    order_max: OrderSpec | None = None
    order_min: OrderSpec | None = None
    field: object = QQ
    meta: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        for i, r in enumerate(self.relations):
            if r.alphabet != self.alphabet:
                raise PresentationError(f"relation {i} is over a different alphabet")
            if r.constant():
                raise PresentationError(
                    f"relation {i} ({r}) has nonzero constant term; relations must lie "
                    "in the augmentation ideal"
                )
        if self.order_max is None:
            self.order_max = OrderSpec.deglex(self.alphabet)
        if self.order_min is None:
            self.order_min = OrderSpec.deglex(self.alphabet)

    @property
    def name(self) -> str:
        return self.meta.get("name", "")

    def letter(self, name: str) -> Poly:
        return Poly.letter(self.alphabet, name, self.field)

    def poly(self, text: str) -> Poly:
        return parse_poly(text, self.alphabet, self.field)

    def is_weight_homogeneous(self) -> bool:
        ws = self.alphabet.weights
        for r in self.relations:
            if len({sum(ws[a] for a in w) for w in r.terms}) > 1:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_json(),
            "generators": [
                {"name": n, "weight": w} for n, w in zip(self.alphabet.names, self.alphabet.weights)
            ],
            "relations": [str(r) for r in self.relations],
            "orders": {"classical": self.order_max.to_dict(), "series": self.order_min.to_dict()},
            "meta": self.meta,
        }

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def presentation_from_dict(data: dict) -> Presentation:
    if not isinstance(data, dict):
        raise PresentationError("presentation must be a JSON object")
    unknown = set(data) - {"field", "generators", "relations", "orders", "meta"}
    if unknown:
        raise PresentationError(f"unknown keys {sorted(unknown)}")
    fld = field_from_json(data.get("field", "rational"))
    gens = data.get("generators")
    if not gens:
        raise PresentationError("at least one generator is required")
    names, weights = [], []
    for g in gens:
        if isinstance(g, str):
            names.append(g)
            weights.append(1)
        else:
            names.append(g["name"])
            weights.append(g.get("weight", 1))
    alphabet = Alphabet(tuple(names), tuple(weights))
    relations = []
    for i, text in enumerate(data.get("relations", [])):
        try:
            relations.append(parse_poly(text, alphabet, fld, line=i + 1))
        except ParseError as e:
            raise ParseError(f"relation {i + 1}: {e.message}", e.line, e.column) from None
    orders = data.get("orders", {})
    order_max = order_from_dict(alphabet, orders["classical"]) if "classical" in orders else None
    order_min = order_from_dict(alphabet, orders["series"]) if "series" in orders else None
    return Presentation(alphabet, relations, order_max, order_min, fld, dict(data.get("meta", {})))


def parse_presentation(text: str) -> Presentation:
    """Parse presentation-file text.

    Raises :class:`~ncgs.parse.ParseError` (with relation number as line
    and a column) for bad expressions, :class:`PresentationError` for
    structural problems such as a nonzero constant term, and
    :class:`~ncgs.words.OrderError` for unusable orders.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return presentation_from_dict(data)


def dump_presentation(p: Presentation) -> str:
    return json.dumps(p.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- bundled examples -----------------------------------------------------------

BUNDLED = {
    "kxy": "commutative polynomial algebra k<x,y | xy - yx>",
    "exrn": "k<x1,x2,x3 | x3 = x1x2 + x3^2>",
    "family": "instance of the u = phi family with an overlap-free u",
    "para-example": "Para(x1x2 + y^2) = k<x1,x2,y | y = x1x2 + y^2>",
    "main": "Para(x1x2 + y1^2, x2x1 + y2^2) with relations r1..r4",
    "counterexample-two": "s = x1x2 + x3 + x4: a topological basis that is not an I-basis",
    "counterexample-one": "s_n = x2^n x3^n x4^n - x1 under an N^4-lex order (unsupported)",
}


def _data_dir():
    return resources.files("ncgs") / "data"


def bundled_examples() -> list[dict]:
    """Metadata for the presentation files shipped with the package."""
    out = []
    for name, description in BUNDLED.items():
        path = _data_dir() / f"{name}.json"
        meta = json.loads(path.read_text(encoding="utf-8")).get("meta", {})
        out.append(
            {
                "name": name,
                "description": description,
                "expected": meta.get("expected", {}),
                "path": str(path),
            }
        )
    return out


def bundled_text(name: str) -> str:
    if name not in BUNDLED:
        raise KeyError(f"no bundled example {name!r}; choose from {sorted(BUNDLED)}")
    return (_data_dir() / f"{name}.json").read_text(encoding="utf-8")


def load_presentation(source: str | Path) -> Presentation:
    """Load from a file path, or from a bundled example name."""
    path = Path(source)
    if path.exists():
        return parse_presentation(path.read_text(encoding="utf-8"))
    if str(source) in BUNDLED:
        return parse_presentation(bundled_text(str(source)))
    raise FileNotFoundError(f"{source}: no such file or bundled example")
