"""Cayley-Dickson doubling from the reals up to the 32-dimensional level.

The doubled product on pairs is ``(p, q)(r, s) = (pr - s*q, sp + qr*)``
where ``*`` is conjugation.  On basis elements every product stays a signed
basis element, so each level is again a :class:`MonomialTable`.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, MonomialTable, product

MAX_LEVEL = 5
NAMES = {0: "R", 1: "C", 2: "H", 3: "O", 4: "S", 5: "T"}
QUATERNION_NAMES = ("1", "i", "j", "k")


@dataclass(frozen=True)
class CDAlgebra:
    level: int
    table: MonomialTable
    conj_signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.table.dim
        if n != 2**self.level or len(self.conj_signs) != n:
            raise ValueError("dimension does not match level")
        if self.conj_signs[0] != 1 or any(s != -1 for s in self.conj_signs[1:]):
            raise ValueError("conjugation must fix e0 and negate every other unit")

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def name(self) -> str:
        return self.table.name


def _basis_names(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(dim))


def reals() -> CDAlgebra:
    table = MonomialTable(NAMES[0], _basis_names(1), (((1, 0),),))
    return CDAlgebra(0, table, (1,))


def cd_double(alg: CDAlgebra) -> CDAlgebra:
    """One doubling step; basis ``e_i`` of the result is ``(e_i, 0)`` for
    ``i < n`` and ``(0, e_{i-n})`` otherwise."""
    level = alg.level + 1
    if level > MAX_LEVEL:
        raise ValueError(f"levels above {MAX_LEVEL} (dimension {2**MAX_LEVEL}) are not supported")
    n = alg.dim
    old = alg.table.entries
    conj = alg.conj_signs
    rows = []
    for i in range(2 * n):
        row = []
        for j in range(2 * n):
            if i < n and j < n:
                # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
                s, k = old[i][j]
            elif i < n:
                # (e_i, 0)(0, e_j) = (0, e_j e_i)
                s, k = old[j - n][i]
                k += n
            elif j < n:
                # (0, e_i)(e_j, 0) = (0, e_i e_j*)
                s, k = old[i - n][j]
                s, k = s * conj[j], k + n
            else:
                # (0, e_i)(0, e_j) = (-e_j* e_i, 0)
                s, k = old[j - n][i - n]
                s = -s * conj[j - n]
            row.append((s, k))
        rows.append(tuple(row))
    table = MonomialTable(NAMES[level], _basis_names(2 * n), tuple(rows))
    return CDAlgebra(level, table, (1,) + (-1,) * (2 * n - 1))


@functools.lru_cache(maxsize=None)
def cd_algebra(level: int) -> CDAlgebra:
    if not 0 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be between 0 and {MAX_LEVEL}")
    return reals() if level == 0 else cd_double(cd_algebra(level - 1))


def quaternion_aliases(alg: CDAlgebra) -> MonomialTable:
    """The level-2 table with its basis renamed to ``1, i, j, k``."""
    if alg.level != 2:
        raise ValueError("quaternion names apply only at level 2")
    return alg.table.renamed(QUATERNION_NAMES)


def conjugate(alg: CDAlgebra, x: Element) -> Element:
    return alg.table.element(s * q for s, q in zip(alg.conj_signs, x.coeffs))


def euclid_norm_sq(alg: CDAlgebra, x: Element) -> Fraction:
    """The e0 coefficient of ``x x*``; equal to the sum of squared coefficients."""
    return product(x, conjugate(alg, x)).coeffs[0]
