"""Verdict records shared by every checker."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .algebra import Element, format_element, format_scalar


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDETERMINED = "undetermined"

    @property
    def mark(self) -> str:
        return {"holds": "✓", "fails": "×", "undetermined": "?"}[self.value]


class ScopeKind(enum.Enum):
    BASIS = "basis-exhaustive"
    SUMS = "basis-pair-sums"
    RANDOM = "randomized"


@dataclass(frozen=True)
class Scope:
    kind: ScopeKind
    samples: int | None = None
    seed: int | None = None

    def __str__(self) -> str:
        if self.kind is ScopeKind.RANDOM:
            return f"{self.kind.value}(n={self.samples}, seed={self.seed})"
        return self.kind.value

    def to_json(self) -> dict:
        data: dict[str, Any] = {"kind": self.kind.value}
        if self.kind is ScopeKind.RANDOM:
            data.update(samples=self.samples, seed=self.seed)
        return data


BASIS = Scope(ScopeKind.BASIS)
SUMS = Scope(ScopeKind.SUMS)

Value = Union[Element, Fraction]


def _value_json(v: Value) -> Any:
    if isinstance(v, Element):
        return [format_scalar(q) for q in v.coeffs]
    return format_scalar(v)


def _value_text(v: Value) -> str:
    return format_element(v) if isinstance(v, Element) else format_scalar(v)


@dataclass(frozen=True)
class Witness:
    """Arguments that violate ``law``, with both sides as evaluated.

    ``params`` carries law parameters (a sign, a norm kind, bracketings).
    For existence laws (idempotents, zero divisors) the violation is the two
    sides being *equal*.
    """

    law: str
    args: tuple[Element, ...]
    lhs: Value
    rhs: Value
    params: tuple = ()

    def describe(self) -> str:
        extra = f" {list(self.params)}" if self.params else ""
        args = f"({', '.join(format_element(a) for a in self.args)})" if self.args else ""
        return f"{self.law}{extra}{args}: {_value_text(self.lhs)} vs {_value_text(self.rhs)}"

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "params": [str(p) for p in self.params],
            "args": [_value_json(a) for a in self.args],
            "lhs": _value_json(self.lhs),
            "rhs": _value_json(self.rhs),
        }


@dataclass(frozen=True)
class PropertyReport:
    algebra: str
    property: str
    verdict: Verdict
    scope: Scope | None = None
    witnesses: tuple[Witness, ...] = ()
    parts: tuple[PropertyReport, ...] = ()
    details: dict = field(default_factory=dict, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def part(self, name: str) -> PropertyReport:
        for p in self.parts:
            if p.property == name:
                return p
        raise KeyError(f"{self.property} has no part {name!r}")

    def walk(self):
        yield self
        for p in self.parts:
            yield from p.walk()

    def to_json(self) -> dict:
        w = self.witness
        data: dict[str, Any] = {
            "algebra": self.algebra,
            "property": self.property,
            "scope": self.scope.to_json() if self.scope else None,
            "verdict": self.verdict.value,
            "witness": [_value_json(a) for a in w.args] if w else [],
            "seed": self.scope.seed if self.scope else None,
        }
        if self.witnesses:
            data["witnesses"] = [x.to_json() for x in self.witnesses]
        if self.details:
            data["details"] = _jsonable(self.details)
        if self.parts:
            data["parts"] = [p.to_json() for p in self.parts]
        return data


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    if isinstance(obj, (Element, Fraction)):
        return _value_json(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    return obj


def combine(algebra: str, name: str, parts: list[PropertyReport], **details: Any) -> PropertyReport:
    """Parent report that holds iff every decided part holds."""
    verdicts = {p.verdict for p in parts}
    if Verdict.FAILS in verdicts:
        verdict = Verdict.FAILS
    elif verdicts <= {Verdict.HOLDS}:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.UNDETERMINED
    failing = next((p for p in parts if p.verdict is Verdict.FAILS), None)
    return PropertyReport(
        algebra,
        name,
        verdict,
        scope=failing.scope if failing else None,
        witnesses=failing.witnesses if failing else (),
        parts=tuple(parts),
        details=details,
    )
