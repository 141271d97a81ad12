"""Graded brackets on the alphabet algebra and the two contraction orders.

Under *fito* brackets are evaluated innermost first with plain table
products.  Under *foti* every bracket and product is first expanded into a
superposition of words, which are then contracted with the ordered word
rules.
"""
from __future__ import annotations

import enum
import functools
from fractions import Fraction
from typing import Callable

from . import expr as E
from .algebra import (
    Element,
    MonomialTable,
    Parity,
    parity_of,
    product,
    sparse_product,
    table_A,
)
from .properties import (
    add_sparse,
    find_identities,
    find_nilpotents_and_idempotents,
    search,
)
from .reports import BASIS, PropertyReport, ScopeKind, Verdict, combine
from .words import DEFAULT_OPTIONS, EngineOptions, SignedWord, evaluate_sum, word_parity


class ContractionOrder(enum.Enum):
    FITO = "fito"
    FOTI = "foti"


class SuperselectionError(ValueError):
    """A graded bracket was applied to an inhomogeneous operand under fito."""


class WordAlgebraError(ValueError):
    """Word semantics requested on a table other than the alphabet algebra."""


def _even(table: MonomialTable, i: int) -> bool:
    return table.parity[i] == 0


def graded_bracket(x: Element, y: Element) -> Element:
    """Bracket resolved per basis pair and extended bilinearly.

    Two even basis elements give ``uv - vu``; an odd/odd or even/odd pair gives
    ``uv + vu``.  Homogeneous inputs therefore get the usual single rule, and
    mixed inputs are well defined.
    """
    t = x.table
    if t.parity is None:
        raise ValueError(f"table {t.name} has no grading")
    total = t.zero()
    for i in x.support():
        for j in y.support():
            u, v = t.basis_element(i), t.basis_element(j)
            sign = -1 if _even(t, i) and _even(t, j) else 1
            term = product(u, v) + product(v, u).scale(sign)
            total = total + term.scale(x.coeffs[i] * y.coeffs[j])
    return total


def _grade(x: Element) -> int:
    p = parity_of(x)
    if p is Parity.EVEN:
        return 0
    if p is Parity.ODD:
        return 1
    raise ValueError(f"{x} is {p.value}, not homogeneous")


def grading_of_bracket(x: Element, y: Element) -> int:
    """Parity of ``<x,y>`` (0 even, 1 odd), checked against the actual bracket."""
    expected = (_grade(x) + _grade(y)) % 2
    br = graded_bracket(x, y)
    if not br.is_zero() and _grade(br) != expected:
        raise AssertionError(f"<{x},{y}> = {br} does not have parity {expected}")
    return expected


def _require_alphabet(table: MonomialTable) -> None:
    if table != table_A():
        raise WordAlgebraError("ordered contraction rules defined only for A")


def evaluate(
    node: E.Node,
    table: MonomialTable | None = None,
    order: ContractionOrder = ContractionOrder.FITO,
    options: EngineOptions = DEFAULT_OPTIONS,
) -> Element:
    table = table or table_A()
    if order is ContractionOrder.FOTI:
        _require_alphabet(table)
        return evaluate_sum(expand_words(node), options)
    return _fito(node, table, options)


def _fito(node: E.Node, t: MonomialTable, options: EngineOptions) -> Element:
    if isinstance(node, E.Gen):
        return t.basis_element(node.name)
    if isinstance(node, E.Word):
        _require_alphabet(t)
        from .words import evaluate_word

        return evaluate_word(SignedWord(1, node.letters), options)
    if isinstance(node, E.Scaled):
        return _fito(node.child, t, options).scale(node.coeff)
    if isinstance(node, E.Neg):
        return -_fito(node.child, t, options)
    if isinstance(node, E.Sum):
        total = t.zero()
        for term in node.terms:
            total = total + _fito(term, t, options)
        return total
    left = _fito(node.left, t, options)
    right = _fito(node.right, t, options)
    if isinstance(node, E.Product):
        return product(left, right)
    if isinstance(node, E.Commutator):
        return product(left, right) - product(right, left)
    if isinstance(node, E.Anticommutator):
        return product(left, right) + product(right, left)
    if isinstance(node, E.GradedBracket):
        for side in (left, right):
            if parity_of(side) is Parity.MIXED:
                raise SuperselectionError(
                    f"<.,.> applied to the inhomogeneous element {side}; "
                    "only homogeneous elements may be bracketed"
                )
        return graded_bracket(left, right)
    raise TypeError(f"not an expression node: {node!r}")


def _concat(us: list[SignedWord], vs: list[SignedWord], sign: int = 1) -> list[SignedWord]:
    return [SignedWord(sign * u.coeff * v.coeff, u.letters + v.letters) for u in us for v in vs]


def expand_words(node: E.Node) -> list[SignedWord]:
    """Open every bracket and product into a list of uncontracted words."""
    if isinstance(node, E.Gen):
        return [SignedWord(1, node.name)]
    if isinstance(node, E.Word):
        return [SignedWord(1, node.letters)]
    if isinstance(node, E.Scaled):
        return [w.scaled(node.coeff) for w in expand_words(node.child)]
    if isinstance(node, E.Neg):
        return [w.scaled(-1) for w in expand_words(node.child)]
    if isinstance(node, E.Sum):
        return [w for term in node.terms for w in expand_words(term)]
    us, vs = expand_words(node.left), expand_words(node.right)
    if isinstance(node, E.Product):
        return _concat(us, vs)
    if isinstance(node, E.Commutator):
        return _concat(us, vs) + _concat(vs, us, -1)
    if isinstance(node, E.Anticommutator):
        return _concat(us, vs) + _concat(vs, us)
    if isinstance(node, E.GradedBracket):
        out: list[SignedWord] = []
        for u in us:
            for v in vs:
                sign = -1 if word_parity(u.letters) == 0 == word_parity(v.letters) else 1
                out += _concat([u], [v]) + _concat([v], [u], sign)
        return out
    raise TypeError(f"not an expression node: {node!r}")


def _sparse_delta_laws(t: MonomialTable, delta: int) -> dict[str, Callable]:
    """Sparse twins of the delta laws in :mod:`hybridalg.laws`, for basis search."""
    m = functools.partial(sparse_product, t)
    par = t.parity

    def grade(x):
        return par[next(iter(x))]

    def eps(x, y):
        return -1 if grade(x) and grade(y) else 1

    def br(x, y):
        if not x or not y:
            return {}
        return add_sparse(m(x, y), m(y, x), -delta * eps(x, y))

    def jacobi(x, y, z, inner):
        total: dict = {}
        for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
            term = br(u, br(v, w)) if inner else br(br(u, v), w)
            total = add_sparse(total, term, eps(u, w))
        return total, {}

    def grading(x, y):
        b = br(x, y)
        expected = (grade(x) + grade(y)) % 2
        return {k: v for k, v in b.items() if par[k] != expected}, {}

    return {
        "delta-associativity": lambda x, y, z: (m(m(x, y), z), {k: delta * v for k, v in m(x, m(y, z)).items()}),
        "delta-antisymmetry": lambda x, y: (br(x, y), {k: -delta * eps(x, y) * v for k, v in br(y, x).items()}),
        "delta-grading": grading,
        "delta-jacobi-outer": lambda x, y, z: jacobi(x, y, z, False),
        "delta-jacobi-inner": lambda x, y, z: jacobi(x, y, z, True),
    }


def _basis_law_report(
    t: MonomialTable, law: str, fn: Callable, arity: int, params: tuple, label: str
) -> PropertyReport:
    def test(args):
        lhs, rhs = fn(*args)
        return [] if lhs == rhs else [(law, params, args)]

    return search(t, label, test, arity, [ScopeKind.BASIS])


def _four_product(t: MonomialTable, tree: str) -> Callable:
    m = functools.partial(sparse_product, t)

    def fn(*args):
        stack: list[list] = [[]]
        for ch in tree:
            if ch == "(":
                stack.append([])
            elif ch == ")":
                a, b = stack.pop()
                stack[-1].append(m(a, b))
            else:
                stack[-1].append(args["wxyz".index(ch)])
        a, b = stack[0]
        return m(a, b), {}

    return fn


FOUR_BRACKETINGS = ("((wx)y)z", "(w(xy))z", "(wx)(yz)", "w((xy)z)", "w(x(yz))")


def check_delta_jl_axioms(t: MonomialTable, delta: int) -> PropertyReport:
    """Exhaustive check of the delta-Jordan-Lie axioms on basis elements.

    ``delta = +1`` tests the associative case, ``delta = -1`` the
    antiassociative one.  When delta-associativity holds with ``delta = -1``
    the report also checks that every product of four basis elements vanishes
    and that there are no idempotents and no units.
    """
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    if t.parity is None:
        raise ValueError(f"table {t.name} has no grading")
    params = (delta,)
    laws = _sparse_delta_laws(t, delta)
    parts = [
        _basis_law_report(t, law, laws[law], arity, params, label)
        for law, arity, label in (
            ("delta-associativity", 3, "delta-associativity"),
            ("delta-antisymmetry", 2, "bracket-antisymmetry"),
            ("delta-grading", 2, "bracket-grading"),
            ("delta-jacobi-outer", 3, "graded-jacobi-outer"),
            ("delta-jacobi-inner", 3, "graded-jacobi-inner"),
        )
    ]
    if delta == -1 and parts[0].holds:
        four = [
            _basis_law_report(
                t, "four-product", _four_product(t, tree), 4, (tree,), f"four-product {tree}"
            )
            for tree in FOUR_BRACKETINGS
        ]
        parts.append(combine(t.name, "four-products-vanish", four))
        searched = find_nilpotents_and_idempotents(t).part("no-idempotents")
        ids = find_identities(t)
        no_units = PropertyReport(
            t.name,
            "no-units",
            Verdict.FAILS if ids.any else Verdict.HOLDS,
            BASIS,
            details={"identities": ids.to_json()},
        )
        # x = xx = (xx)x = ((xx)x)x is a four-fold product, so idempotents vanish.
        deduced = parts[-1].holds
        parts.append(
            combine(
                t.name,
                "no-idempotents-no-units",
                [searched, no_units],
                deduced_from_four_products=deduced,
            )
        )
    return combine(t.name, f"delta-jordan-lie(delta={delta:+d})", parts, delta=delta)


def mixed_pair_sign(delta: int, parity_x: int, parity_y: int) -> Fraction:
    """Coefficient of ``yx`` in ``<x,y> = xy - delta (-1)^(|x||y|) yx``."""
    return Fraction(-delta * (-1 if parity_x and parity_y else 1))
