"""Exact monomial algebras: tables, elements and the bilinear product.

A :class:`MonomialTable` stores, for every ordered pair of basis elements,
the signed basis element their product equals.  Elements carry exact
:class:`fractions.Fraction` coefficients, so every identity below is an
equality check with no tolerance.
"""
from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction]


class IncompatibleAlgebrasError(ValueError):
    """Raised when two elements from different tables are combined."""


class TableValidationError(ValueError):
    """Raised when a table violates closure or grading."""


_ZERO = Fraction(0)


def as_scalar(value: ScalarLike | str) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to an exact scalar."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use Fraction")
    return Fraction(value)


def format_scalar(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"
    ZERO = "zero"


@dataclass(frozen=True)
class MonomialTable:
    """Multiplication table whose basis products are signed basis elements.

    ``entries[i][j] == (sign, k)`` means ``e_i * e_j = sign * e_k``.  A sign of
    0 marks a vanishing product (needed only for nilpotent toy algebras; the
    algebras shipped with the package never use it).  Rows are left factors.
    """

    name: str
    basis: tuple[str, ...]
    entries: tuple[tuple[tuple[int, int], ...], ...]
    parity: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        dim = len(self.basis)
        if dim == 0:
            raise TableValidationError("a table needs at least one basis element")
        if any(not name for name in self.basis) or len(set(self.basis)) != dim:
            raise TableValidationError("basis names must be distinct and non-empty")
        if len(self.entries) != dim or any(len(row) != dim for row in self.entries):
            raise TableValidationError(f"table must be {dim}x{dim}")
        for i, row in enumerate(self.entries):
            for j, (sign, k) in enumerate(row):
                if sign not in (-1, 0, 1):
                    raise TableValidationError(f"bad sign {sign!r} at ({i},{j})")
                if sign and not 0 <= k < dim:
                    raise TableValidationError(f"index {k} out of range at ({i},{j})")
        if self.parity is not None:
            if len(self.parity) != dim or any(p not in (0, 1) for p in self.parity):
                raise TableValidationError("parity must list 0/1 for every basis element")
            bad = self.grading_violation()
            if bad is not None:
                i, j = bad
                raise TableValidationError(
                    f"grading violated: {self.basis[i]}*{self.basis[j]} has the wrong parity"
                )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a basis element of {self.name}") from None

    def mul_index(self, i: int, j: int) -> tuple[int, int]:
        return self.entries[i][j]

    def grading_violation(self) -> tuple[int, int] | None:
        """First basis pair whose product breaks parity additivity, if any."""
        if self.parity is None:
            return None
        for i, row in enumerate(self.entries):
            for j, (sign, k) in enumerate(row):
                if sign and self.parity[k] != (self.parity[i] + self.parity[j]) % 2:
                    return (i, j)
        return None

    def with_parity(self, parity: Sequence[int]) -> MonomialTable:
        return MonomialTable(self.name, self.basis, self.entries, tuple(parity))

    def renamed(self, basis: Sequence[str], name: str | None = None) -> MonomialTable:
        return MonomialTable(name or self.name, tuple(basis), self.entries, self.parity)

    def basis_element(self, i: int | str) -> Element:
        if isinstance(i, str):
            i = self.index(i)
        coeffs = [Fraction(0)] * self.dim
        coeffs[i] = Fraction(1)
        return Element(self, tuple(coeffs))

    def basis_elements(self) -> list[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> Element:
        return Element(self, (Fraction(0),) * self.dim)

    def element(self, coeffs: Iterable[ScalarLike]) -> Element:
        return Element(self, tuple(as_scalar(c) for c in coeffs))

    def to_json(self) -> dict:
        data: dict = {"name": self.name, "dim": self.dim, "basis": list(self.basis)}
        if self.parity is not None:
            data["parity"] = list(self.parity)
        data["table"] = [
            [{"sign": sign, "index": k} for sign, k in row] for row in self.entries
        ]
        return data

    @classmethod
    def from_json(cls, data: dict) -> MonomialTable:
        try:
            basis = tuple(data["basis"])
            rows = data["table"]
            entries = tuple(
                tuple((int(cell["sign"]), int(cell["index"])) for cell in row) for row in rows
            )
        except (KeyError, TypeError) as exc:
            raise TableValidationError(f"malformed table JSON: {exc}") from exc
        if int(data.get("dim", len(basis))) != len(basis):
            raise TableValidationError("dim does not match the number of basis names")
        parity = data.get("parity")
        return cls(
            name=str(data.get("name", "table")),
            basis=basis,
            entries=entries,
            parity=tuple(parity) if parity is not None else None,
        )


def load_table(path: str | Path) -> MonomialTable:
    with open(path, encoding="utf-8") as fh:
        return MonomialTable.from_json(json.load(fh))


def save_table(table: MonomialTable, path: str | Path) -> None:
    Path(path).write_text(json.dumps(table.to_json(), indent=2) + "\n", encoding="utf-8")


def table_from_rows(
    name: str,
    basis: Sequence[str],
    rows: Sequence[Sequence[str]],
    parity: Sequence[int] | None = None,
) -> MonomialTable:
    """Build a table from rows of signed names such as ``"-d"`` (or ``"0"``)."""
    entries = []
    for row in rows:
        cells = []
        for cell in row:
            cell = cell.strip()
            if cell == "0":
                cells.append((0, 0))
                continue
            sign = -1 if cell.startswith("-") else 1
            cells.append((sign, list(basis).index(cell.lstrip("+-"))))
        entries.append(tuple(cells))
    return MonomialTable(name, tuple(basis), tuple(entries), tuple(parity) if parity else None)


@functools.lru_cache(maxsize=None)
def table_A() -> MonomialTable:
    """The four-letter alphabet algebra, graded even {a, b} / odd {c, d}."""
    return table_from_rows(
        "A",
        ("a", "b", "c", "d"),
        [
            ("a", "b", "-d", "-c"),
            ("b", "-a", "-d", "c"),
            ("c", "d", "a", "-b"),
            ("d", "-c", "b", "-a"),
        ],
        parity=(0, 0, 1, 1),
    )


@functools.lru_cache(maxsize=None)
def table_quaternions() -> MonomialTable:
    return table_from_rows(
        "H",
        ("1", "i", "j", "k"),
        [
            ("1", "i", "j", "k"),
            ("i", "-1", "k", "-j"),
            ("j", "-k", "-1", "i"),
            ("k", "j", "-i", "-1"),
        ],
    )


@dataclass(frozen=True)
class Element:
    """A vector of exact coefficients over a table's basis."""

    table: MonomialTable
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.table.dim:
            raise ValueError(
                f"expected {self.table.dim} coefficients, got {len(self.coeffs)}"
            )

    def _check(self, other: Element) -> None:
        if not (self.table is other.table or self.table == other.table):
            raise IncompatibleAlgebrasError(
                f"cannot combine elements of {self.table.name} and {other.table.name}"
            )

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.table, tuple(x + y if y else x for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.table, tuple(x - y if y else x for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Element:
        return Element(self.table, tuple(-x if x else x for x in self.coeffs))

    def __mul__(self, other: Element | ScalarLike) -> Element:
        if isinstance(other, Element):
            return product(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> Element:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def scale(self, q: ScalarLike) -> Element:
        q = as_scalar(q)
        if q == 1:
            return self
        return Element(self.table, tuple(q * x if x else _ZERO for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.coeffs) if x]

    def coeff(self, name: str) -> Fraction:
        return self.coeffs[self.table.index(name)]

    def as_signed_generator(self) -> tuple[int, str] | None:
        """``(sign, name)`` when the element is plus or minus one basis element."""
        sup = self.support()
        if len(sup) == 1 and abs(self.coeffs[sup[0]]) == 1:
            return int(self.coeffs[sup[0]]), self.table.basis[sup[0]]
        return None

    def as_sparse(self) -> dict[int, Fraction]:
        return {i: x for i, x in enumerate(self.coeffs) if x}

    def __str__(self) -> str:
        return format_element(self)


def format_element(x: Element) -> str:
    """Human-readable form such as ``2c - 2d`` or ``-3/2 b``."""
    parts: list[str] = []
    for i, q in enumerate(x.coeffs):
        if not q:
            continue
        name = x.table.basis[i]
        mag = abs(q)
        if mag == 1:
            body = name
        else:
            sep = " " if mag.denominator != 1 or not name[0].isalpha() else ""
            body = f"{format_scalar(mag)}{sep}{name}"
        if not parts:
            parts.append(f"-{body}" if q < 0 else body)
        else:
            parts.append(f"- {body}" if q < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def sparse_product(
    table: MonomialTable, x: dict[int, Fraction], y: dict[int, Fraction]
) -> dict[int, Fraction]:
    """Product of sparse coefficient maps; the kernel behind :func:`product`."""
    out: dict[int, Fraction] = {}
    entries = table.entries
    for i, xi in x.items():
        row = entries[i]
        for j, yj in y.items():
            sign, k = row[j]
            if sign:
                out[k] = out.get(k, 0) + sign * xi * yj
    return {k: v for k, v in out.items() if v}


def product(x: Element, y: Element) -> Element:
    """Bilinear extension of the table; no graded signs are involved."""
    x._check(y)
    out = sparse_product(x.table, x.as_sparse(), y.as_sparse())
    coeffs = [_ZERO] * x.table.dim
    for k, v in out.items():
        coeffs[k] = v if isinstance(v, Fraction) else Fraction(v)
    return Element(x.table, tuple(coeffs))


def parity_of(x: Element) -> Parity:
    parity = x.table.parity
    if parity is None:
        raise ValueError(f"table {x.table.name} has no grading")
    kinds = {parity[i] for i in x.support()}
    if not kinds:
        return Parity.ZERO
    if kinds == {0}:
        return Parity.EVEN
    if kinds == {1}:
        return Parity.ODD
    return Parity.MIXED


def pseudo_norm(x: Element) -> Fraction:
    """Coefficient of basis element 0 in ``x * x``.

    Defined on every element, including inhomogeneous ones.
    """
    return product(x, x).coeffs[0]


def polar_form(x: Element, y: Element) -> Fraction:
    """Symmetric bilinear form whose diagonal is :func:`pseudo_norm`."""
    return (product(x, y).coeffs[0] + product(y, x).coeffs[0]) / 2
