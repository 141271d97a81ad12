"""Signed words over the alphabet {a, b, c, d} and their ordered contraction.

A word is first brought to normal order ``d..d c..c b..b a`` (interior ``a``
letters are absorbed into their right neighbour, the anticommuting letters
are sorted with one sign flip per inversion), then contracted pairwise from
the right.  Inside words of length three or more each contraction of an odd
letter with an even one contributes a factor of -1; the final two-letter
contraction is the plain table product.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .algebra import Element, ScalarLike, as_scalar, format_scalar, table_A

ALPHABET = "abcd"
# Letter rank in the right-to-left normal order d > c > b > a.
RANK = {"a": 0, "b": 1, "c": 2, "d": 3}
PARITY = {"a": 0, "b": 0, "c": 1, "d": 1}

_TABLE = table_A()


@dataclass(frozen=True)
class EngineOptions:
    """Rule variants for word contraction.

    ``signed_a_elimination`` applies the graded sign while absorbing interior
    ``a`` letters (off by default).  ``graded_sign`` selects which contractions
    carry the graded sign: ``"mixed"`` is every odd/even pair; ``"identity"``
    restricts it to an odd letter contracting with ``a``.
    """

    signed_a_elimination: bool = False
    graded_sign: Literal["mixed", "identity"] = "mixed"

    def __post_init__(self) -> None:
        if self.graded_sign not in ("mixed", "identity"):
            raise ValueError(f"unknown graded_sign {self.graded_sign!r}")


DEFAULT_OPTIONS = EngineOptions()


@dataclass(frozen=True)
class SignedWord:
    coeff: Fraction
    letters: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", as_scalar(self.coeff))
        if not self.letters:
            raise ValueError("the empty word is not an element of the algebra")
        bad = set(self.letters) - set(ALPHABET)
        if bad:
            raise ValueError(f"letters outside the alphabet: {''.join(sorted(bad))}")

    def __len__(self) -> int:
        return len(self.letters)

    def scaled(self, q: ScalarLike) -> SignedWord:
        return SignedWord(self.coeff * as_scalar(q), self.letters)

    def __str__(self) -> str:
        if self.coeff == 1:
            return self.letters
        if self.coeff == -1:
            return f"-{self.letters}"
        return f"{format_scalar(self.coeff)} {self.letters}"


WordSum = list[SignedWord]

_WORD_RE = re.compile(r"^\s*(?:([+-]?)\s*(\d+(?:/\d+)?)?\s*)([abcd]+)\s*$")


def parse_word(text: str) -> SignedWord:
    """Parse ``"-3/2 dcba"``, ``"cbcb"`` or ``"+2 ab"``."""
    m = _WORD_RE.match(text)
    if not m:
        raise ValueError(f"not a word: {text!r}")
    sign, mag, letters = m.groups()
    coeff = Fraction(mag) if mag else Fraction(1)
    if coeff.denominator == 0:  # pragma: no cover - Fraction raises first
        raise ValueError("zero denominator")
    return SignedWord(-coeff if sign == "-" else coeff, letters)


def _contract(x: str, y: str) -> tuple[int, str]:
    sign, k = _TABLE.entries[RANK[x]][RANK[y]]
    return sign, ALPHABET[k]


def _graded_sign(x: str, y: str, options: EngineOptions) -> int:
    if PARITY[x] == PARITY[y]:
        return 1
    if options.graded_sign == "identity" and "a" not in (x, y):
        return 1
    return -1


def is_normal(letters: str) -> bool:
    """True for words of the shape d*c*b* optionally followed by one a."""
    if "a" in letters[:-1]:
        return False
    body = letters[:-1] if letters.endswith("a") else letters
    return all(RANK[u] >= RANK[v] for u, v in zip(body, body[1:]))


def _eliminate_a(coeff: int | Fraction, letters: list[str], options: EngineOptions) -> int | Fraction:
    # Rightmost interior a first, so runs like "aac" absorb inwards: a(ac).
    while True:
        pos = next((i for i in range(len(letters) - 2, -1, -1) if letters[i] == "a"), None)
        if pos is None:
            return coeff
        right = letters[pos + 1]
        sign, out = _contract("a", right)
        if options.signed_a_elimination and len(letters) >= 3:
            sign *= _graded_sign("a", right, options)
        coeff *= sign
        letters[pos : pos + 2] = [out]


def normalize(w: SignedWord, options: EngineOptions = DEFAULT_OPTIONS) -> SignedWord:
    """Bring a word to its unique normal order; idempotent."""
    letters = list(w.letters)
    coeff = _eliminate_a(w.coeff, letters, options)
    tail = letters[-1] if letters[-1] == "a" else ""
    body = letters[:-1] if tail else letters
    odd = _odd_inversions([RANK[ch] for ch in body])
    body.sort(key=RANK.__getitem__, reverse=True)
    if odd:
        coeff = -coeff
    return SignedWord(coeff, "".join(body) + tail)


def contract_step(w: SignedWord, options: EngineOptions = DEFAULT_OPTIONS) -> SignedWord:
    """Contract the rightmost letter pair of a normal word of length >= 3."""
    if len(w) < 3:
        raise ValueError("contract_step needs a word of length >= 3")
    if not is_normal(w.letters):
        raise ValueError(f"{w.letters!r} is not in normal order")
    x, y = w.letters[-2], w.letters[-1]
    sign, out = _contract(x, y)
    sign *= _graded_sign(x, y, options)
    return SignedWord(w.coeff * sign, w.letters[:-2] + out)


def contraction_trace(w: SignedWord, options: EngineOptions = DEFAULT_OPTIONS) -> list[SignedWord]:
    """Intermediate normal words visited while totally contracting ``w``."""
    steps = [w]
    current = normalize(w, options)
    if current != w:
        steps.append(current)
    while len(current) >= 3:
        current = normalize(contract_step(current, options), options)
        steps.append(current)
    if len(current) == 2:
        sign, out = _contract(current.letters[0], current.letters[1])
        steps.append(SignedWord(current.coeff * sign, out))
    return steps


@functools.lru_cache(maxsize=65536)
def _reduce(letters: str, options: EngineOptions) -> tuple[int, str]:
    """Sign and final letter of a unit word; the steps of :func:`contraction_trace`."""
    work = list(letters)
    sign = _eliminate_a(1, work, options)
    while True:
        tail = work.pop() if work[-1] == "a" else None
        if _odd_inversions([RANK[ch] for ch in work]):
            sign = -sign
        work.sort(key=RANK.__getitem__, reverse=True)
        if tail:
            work.append(tail)
        if len(work) < 3:
            break
        x, y = work[-2], work[-1]
        s, out = _contract(x, y)
        sign *= s * _graded_sign(x, y, options)
        work[-2:] = [out]
        sign = _eliminate_a(sign, work, options)
    if len(work) == 2:
        s, out = _contract(work[0], work[1])
        return sign * s, out
    return sign, work[0]


def _odd_inversions(ranks: list[int]) -> bool:
    return sum(1 for i in range(len(ranks)) for j in range(i + 1, len(ranks)) if ranks[i] < ranks[j]) % 2 == 1


def evaluate_word(w: SignedWord, options: EngineOptions = DEFAULT_OPTIONS) -> Element:
    """Total contraction of ``w`` to a multiple of a single generator."""
    sign, letter = _reduce(w.letters, options)
    return _TABLE.basis_element(RANK[letter]).scale(w.coeff * sign)


def evaluate_sum(ws: Iterable[SignedWord], options: EngineOptions = DEFAULT_OPTIONS) -> Element:
    coeffs = [Fraction(0)] * len(ALPHABET)
    for w in ws:
        sign, letter = _reduce(w.letters, options)
        coeffs[RANK[letter]] += w.coeff * sign
    return _TABLE.element(coeffs)


def word_parity(letters: str) -> int:
    return sum(PARITY[ch] for ch in letters) % 2
