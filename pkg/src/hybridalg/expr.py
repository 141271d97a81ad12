"""Expression trees shared by the bracket evaluator and the text language."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Word:
    """Juxtaposed letters, contracted with the ordered word rules."""

    letters: str


@dataclass(frozen=True)
class Scaled:
    coeff: Fraction
    child: "Node"


@dataclass(frozen=True)
class Neg:
    child: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple["Node", ...]


@dataclass(frozen=True)
class Product:
    """Explicit binary product ``(x*y)``."""

    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Commutator:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Anticommutator:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class GradedBracket:
    """``<x,y>``: commutator for two even operands, anticommutator otherwise."""

    left: "Node"
    right: "Node"


Node = Union[Gen, Word, Scaled, Neg, Sum, Product, Commutator, Anticommutator, GradedBracket]
BINARY = (Product, Commutator, Anticommutator, GradedBracket)
