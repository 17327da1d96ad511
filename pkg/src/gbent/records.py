"""Text and JSON forms of value tables and classification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .classify import CONVENTIONS, bit_reversal
from .errors import InvalidInputError
from .gbf import GeneralizedBooleanFunction

from . import __version__ as VERSION


def _reorder(values: list, n: int, convention: str) -> list:
    if convention not in CONVENTIONS:
        raise InvalidInputError(f"unknown convention {convention!r}; use one of {CONVENTIONS}")
    if convention == "lsb":
        return list(values)
    # bit reversal is an involution, so the same map converts both ways
    return np.asarray(values)[bit_reversal(n)].tolist()


def format_record(f: GeneralizedBooleanFunction, convention: str = "lsb") -> str:
    values = _reorder(list(f.values), f.n, convention)
    if f.q <= 10:
        return "".join(map(str, values))
    return ",".join(map(str, values))


def parse_record(text: str, q: int, n: int | None = None, convention: str = "lsb") -> GeneralizedBooleanFunction:
    """Parse a compact string or a JSON record ``{"q":..,"n":..,"values":[..]}``."""
    text = text.strip()
    if text.startswith("{"):
        return record_from_json(text)
    f = GeneralizedBooleanFunction.from_string(text, q)
    if n is not None and f.n != n:
        raise InvalidInputError(f"table has {1 << f.n} entries, expected {1 << n} for n={n}")
    return GeneralizedBooleanFunction(f.n, f.m, _reorder(list(f.values), f.n, convention))


def record_to_dict(f: GeneralizedBooleanFunction) -> dict:
    return {"q": f.q, "n": f.n, "values": list(f.values)}


def record_to_json(f: GeneralizedBooleanFunction) -> str:
    return json.dumps(record_to_dict(f), separators=(",", ":"))


def record_from_json(text: str) -> GeneralizedBooleanFunction:
    try:
        data = json.loads(text)
        q, n, values = int(data["q"]), int(data["n"]), [int(v) for v in data["values"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise InvalidInputError(f"malformed record: {exc}") from None
    f = GeneralizedBooleanFunction.from_values(values, q)
    if f.n != n:
        raise InvalidInputError(f"record declares n={n} but holds {len(values)} values")
    return f


@dataclass
class ClassificationReport:
    q: int
    n: int
    classes: list
    group_order: int
    convention: str = "lsb"
    version: str = VERSION
    total: int = field(init=False)

    def __post_init__(self):
        self.total = sum(c["size"] for c in self.classes)

    @classmethod
    def from_orbits(cls, orbits: list, q: int, n: int, group_order: int, convention: str = "lsb"):
        # representatives are already expressed in the requested point order
        classes = [
            {"representative": "".join(map(str, r.representative.values)), "size": r.size} for r in orbits
        ]
        return cls(q, n, classes, group_order, convention)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "total": self.total,
            "group_order": self.group_order,
            "classes": self.classes,
            "convention": self.convention,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        width = max(len("Representative"), *(len(c["representative"]) for c in self.classes))
        lines = [f"{'Representative':<{width}}  Size"]
        lines += [f"{c['representative']:<{width}}  {c['size']}" for c in self.classes]
        lines.append(f"{'Total':<{width}}  {self.total}")
        return "\n".join(lines)

