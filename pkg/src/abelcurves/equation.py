"""The Abel equation ``x' = A(t) x^3 + B(t) x^2 + C(t) x`` and its file format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import OutOfScopeError, PreconditionError
from .frontend import POLY_GAUSSIAN, RINGS, TRIG, parse_expression, render, ring_const, ring_field, ring_of
from .scalars import format_scalar, parse_scalar


@dataclass(frozen=True)
class AbelEquation:
    A: object
    B: object
    C: object
    ring: str

    def __post_init__(self):
        if self.ring not in RINGS:
            raise ValueError(f"unknown ring {self.ring!r}")
        for name in "ABC":
            x = getattr(self, name)
            if ring_of(x) != self.ring:
                raise PreconditionError(f"{name} is not an element of the {self.ring} ring")

    @property
    def is_trig(self):
        return self.ring == TRIG

    @property
    def field(self):
        return ring_field(self.ring)

    @property
    def C_is_constant(self):
        return self.C.is_constant()

    def degrees(self):
        return self.A.degree, self.B.degree, self.C.degree

    def const(self, c):
        return ring_const(c, self.ring)

    def validate(self):
        """Enforce the standing assumptions; raise :class:`OutOfScopeError` otherwise."""
        if self.A.is_zero():
            raise OutOfScopeError("out-of-scope: delegated case A = 0 (Riccati equation)")
        if self.B.is_zero():
            raise OutOfScopeError("out-of-scope: delegated case B = 0 (Bernoulli equation)")
        if self.C.is_zero():
            raise OutOfScopeError(
                "out-of-scope: delegated case C = 0 (equation x' = A x^3 + B x^2, treated in prior work)")
        if self.A.is_constant():
            raise OutOfScopeError(
                "out-of-scope: delegated case deg(A) = 0 (constant A, treated in prior work)")
        return self

    def to_dict(self):
        return {"ring": self.ring, "A": render(self.A), "B": render(self.B), "C": render(self.C)}

    def rhs(self, x):
        return self.A * x ** 3 + self.B * x ** 2 + self.C * x


def load_equation(document) -> AbelEquation:
    """Build a validated equation from a mapping, a JSON string or a path to a JSON file."""
    if isinstance(document, Path):
        document = json.loads(document.read_text(encoding="utf-8"))
    elif isinstance(document, str):
        document = json.loads(document)
    missing = [k for k in ("ring", "A", "B", "C") if k not in document]
    if missing:
        raise PreconditionError(f"equation document lacks {', '.join(missing)}")
    ring = document["ring"]
    if ring not in RINGS:
        raise PreconditionError(f"unknown ring {ring!r}; expected one of {', '.join(RINGS)}")
    A, B, C = (parse_expression(str(document[k]), ring) for k in "ABC")
    return AbelEquation(A, B, C, ring).validate()


def save_equation(eq: AbelEquation, path):
    Path(path).write_text(json.dumps(eq.to_dict(), indent=2) + "\n", encoding="utf-8")


# exact JSON encoding of ring elements ---------------------------------------

def element_to_json(x):
    if ring_of(x) == TRIG:
        return {
            "a0": format_scalar(x.a0),
            "a": [format_scalar(c) for c in x.a],
            "b": [format_scalar(c) for c in x.b],
            "expr": render(x),
        }
    return {"coeffs": [format_scalar(c) for c in x.coeffs], "expr": render(x)}


def element_from_json(obj, ring):
    from .poly import Poly
    from .trig import TrigPoly

    field = ring_field(ring)
    if ring == TRIG:
        return TrigPoly(parse_scalar(obj["a0"]), [parse_scalar(c) for c in obj["a"]],
                        [parse_scalar(c) for c in obj["b"]])
    return Poly([parse_scalar(c, field) for c in obj["coeffs"]], field)


__all__ = ["AbelEquation", "load_equation", "save_equation", "element_to_json",
           "element_from_json", "POLY_GAUSSIAN"]
