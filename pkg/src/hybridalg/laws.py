"""Element-level statements of every law the checkers search.

The checkers evaluate laws on sparse coefficient maps for speed; this module
restates each law on :class:`~hybridalg.algebra.Element` values so a witness
can be re-evaluated independently of the search that produced it.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .algebra import Element, product, pseudo_norm
from .reports import Witness


def _norm(kind: str, x: Element) -> Fraction:
    if kind == "pseudo":
        return pseudo_norm(x)
    if kind == "euclid":
        return sum((q * q for q in x.coeffs), Fraction(0))
    raise ValueError(f"unknown norm {kind!r}")


def eval_bracketing(tree: str, x: Element) -> Element:
    """Evaluate a bracketing such as ``"((xx)x)"`` or ``"x(xx)"`` at ``x``."""
    stack: list[list[Element]] = [[]]
    for ch in tree:
        if ch == "(":
            stack.append([])
        elif ch == ")":
            inner = stack.pop()
            stack[-1].append(_fold(inner))
        elif ch == "x":
            stack[-1].append(x)
        else:
            raise ValueError(f"bad bracketing {tree!r}")
    return _fold(stack[0])


def _fold(items: list[Element]) -> Element:
    if len(items) == 1:
        return items[0]
    if len(items) == 2:
        return product(items[0], items[1])
    raise ValueError("bracketings must be binary")


def _delta(params: tuple) -> int:
    return int(params[0]) if params else 1


def _sign(p: int) -> int:
    return -1 if p else 1


def _grade(x: Element) -> int:
    parity = x.table.parity
    kinds = {parity[i] for i in x.support()} if parity else set()
    if len(kinds) != 1:
        raise ValueError("graded laws need homogeneous nonzero arguments")
    return kinds.pop()


def delta_bracket(x: Element, y: Element, delta: int) -> Element:
    """``xy - delta (-1)^(|x||y|) yx`` for homogeneous ``x``, ``y``."""
    eps = _sign(_grade(x) * _grade(y))
    return product(x, y) - product(y, x).scale(delta * eps)


def _delta_grading(params, x, y):
    br = delta_bracket(x, y, _delta(params))
    if br.is_zero():
        return br, br
    expected = (_grade(x) + _grade(y)) % 2
    bad = [i for i in br.support() if br.table.parity[i] != expected]
    # Violation: the bracket has support outside the expected grade.
    off = br.table.element(br.coeffs[i] if i in bad else 0 for i in range(br.table.dim))
    return off, br.table.zero()


def _bracket_or_zero(u: Element, v: Element, delta: int) -> Element:
    if u.is_zero() or v.is_zero():
        return u.table.zero()
    return delta_bracket(u, v, delta)


def _delta_jacobi(params, x, y, z, inner: bool):
    d = _delta(params)
    total = x.table.zero()
    for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
        if inner:
            t = _bracket_or_zero(u, _bracket_or_zero(v, w, d), d)
        else:
            t = _bracket_or_zero(_bracket_or_zero(u, v, d), w, d)
        total = total + t.scale(_sign(_grade(u) * _grade(w)))
    return total, x.table.zero()


Law = Callable[..., tuple]

LAWS: dict[str, tuple[Law, bool]] = {
    "commutativity": (lambda p, x, y: (product(x, y), product(y, x)), False),
    "associativity": (
        lambda p, x, y, z: (product(product(x, y), z), product(x, product(y, z))),
        False,
    ),
    "delta-associativity": (
        lambda p, x, y, z: (
            product(product(x, y), z),
            product(x, product(y, z)).scale(_delta(p)),
        ),
        False,
    ),
    "left-alternativity": (
        lambda p, x, y: (product(product(x, x), y), product(x, product(x, y))),
        False,
    ),
    "right-alternativity": (
        lambda p, x, y: (product(y, product(x, x)), product(product(y, x), x)),
        False,
    ),
    "flexibility": (
        lambda p, x, y: (product(product(x, y), x), product(x, product(y, x))),
        False,
    ),
    "linearized-flexibility": (
        lambda p, x, y, z: (
            product(product(x, y), z) + product(product(z, y), x),
            product(x, product(y, z)) + product(z, product(y, x)),
        ),
        False,
    ),
    "power-associativity": (
        lambda p, x: (eval_bracketing(p[0], x), eval_bracketing(p[1], x)),
        False,
    ),
    "composition": (
        lambda p, x, y: (_norm(p[0], product(x, y)), _norm(p[0], x) * _norm(p[0], y)),
        False,
    ),
    # [L(x), R(y)] applied to z, and the anticommutator version.
    "left-right-commute": (
        lambda p, x, y, z: (product(x, product(z, y)), product(product(x, z), y)),
        False,
    ),
    "left-right-anticommute": (
        lambda p, x, y, z: (product(x, product(z, y)), -product(product(x, z), y)),
        False,
    ),
    "delta-antisymmetry": (
        lambda p, x, y: (
            delta_bracket(x, y, _delta(p)),
            delta_bracket(y, x, _delta(p)).scale(-_delta(p) * _sign(_grade(x) * _grade(y))),
        ),
        False,
    ),
    "delta-grading": (_delta_grading, False),
    "delta-jacobi-outer": (lambda p, x, y, z: _delta_jacobi(p, x, y, z, inner=False), False),
    "delta-jacobi-inner": (lambda p, x, y, z: _delta_jacobi(p, x, y, z, inner=True), False),
    "four-product": (
        lambda p, *args: (_product_of_tuple(p[0], args), args[0].table.zero()),
        False,
    ),
    # Basis candidate x is not a one-sided identity because it moves y.
    "left-identity": (lambda p, x, y: (product(x, y), y), False),
    "right-identity": (lambda p, x, y: (product(y, x), y), False),
    # Existence laws: the witness is an element with the named property.
    "idempotent": (lambda p, x: (product(x, x), x), True),
    "nilpotent": (lambda p, x: (product(x, x), x.table.zero()), True),
    "zero-divisor": (lambda p, x, y: (product(x, y), x.table.zero()), True),
}


def evaluate_law(law: str, args: tuple[Element, ...], params: tuple = ()) -> tuple:
    fn, _ = LAWS[law]
    return fn(params, *args)


def verify_witness(w: Witness) -> bool:
    """Re-evaluate ``w`` and confirm it really violates its law."""
    if w.law.startswith("jacobi"):
        from .jacobi import residual_of

        residual = residual_of(w.params[0], w.params[1])
        return residual == w.lhs and not residual.is_zero()
    fn, existence = LAWS[w.law]
    lhs, rhs = fn(w.params, *w.args)
    if (lhs, rhs) != (w.lhs, w.rhs):
        return False
    return lhs == rhs if existence else lhs != rhs


def _product_of_tuple(tree: str, args: tuple[Element, ...]) -> Element:
    """Evaluate a bracketing over distinct letters ``w x y z`` bound to ``args``."""
    names = "wxyz"
    stack: list[list[Element]] = [[]]
    for ch in tree:
        if ch == "(":
            stack.append([])
        elif ch == ")":
            inner = stack.pop()
            stack[-1].append(_fold(inner))
        else:
            stack[-1].append(args[names.index(ch)])
    return _fold(stack[0])
