"""Property checkers for monomial tables.

Every checker walks a fixed search ladder: basis elements, then signed sums
of two basis elements, then seeded random elements.  The search runs on
sparse coefficient maps; each violation it finds is rebuilt as a
:class:`Witness` from :class:`Element` values and re-evaluated through
:mod:`hybridalg.laws` before it is reported, so a report can only claim a
failure that both routes agree on.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

import numpy as np

from .algebra import Element, MonomialTable, format_element, sparse_product
from .laws import evaluate_law, verify_witness
from .reports import (
    BASIS,
    SUMS,
    PropertyReport,
    Scope,
    ScopeKind,
    Verdict,
    Witness,
    combine,
)

MAX_WITNESSES = 32
DEFAULT_SAMPLES = 100
DENSE_RANDOM_LIMIT = 8
SPARSE_RANDOM_SUPPORT = 6

Sparse = dict[int, Fraction]


def ordered_tuples(dim: int, k: int) -> Iterator[tuple[int, ...]]:
    """All index k-tuples, those with pairwise distinct entries first."""
    yield from itertools.permutations(range(dim), k)
    for idx in itertools.product(range(dim), repeat=k):
        if len(set(idx)) < k:
            yield idx


# Basis vectors and pair sums use int coefficients: same values, much faster
# arithmetic than Fraction in the inner loops.
def basis_vectors(t: MonomialTable) -> list[Sparse]:
    return [{i: 1} for i in range(t.dim)]


def pair_sums(t: MonomialTable) -> list[Sparse]:
    """``e_i + e_j`` and ``e_i - e_j`` for every ``i < j``."""
    out = []
    for i, j in itertools.combinations(range(t.dim), 2):
        out.append({i: 1, j: 1})
        out.append({i: 1, j: -1})
    return out


def random_vector(t: MonomialTable, rng: random.Random) -> Sparse:
    """A nonzero random rational element.

    Dense for small tables; for larger ones a random support of a few basis
    elements keeps exact products cheap.
    """
    if t.dim <= DENSE_RANDOM_LIMIT:
        support = range(t.dim)
    else:
        support = rng.sample(range(t.dim), SPARSE_RANDOM_SUPPORT)
    while True:
        x = {i: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for i in support}
        x = {i: q for i, q in x.items() if q}
        if x:
            return x


def to_element(t: MonomialTable, x: Sparse) -> Element:
    return t.element(x.get(i, 0) for i in range(t.dim))


def add_sparse(x: Sparse, y: Sparse, sign: int = 1) -> Sparse:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def _euclid(x: Sparse) -> Fraction:
    return sum(q * q for q in x.values())


def sparse_law(t: MonomialTable, law: str, params: tuple = ()) -> Callable:
    """Fast sparse twin of the element-level law of the same name."""
    m = functools.partial(sparse_product, t)
    if law == "commutativity":
        return lambda x, y: (m(x, y), m(y, x))
    if law == "associativity":
        return lambda x, y, z: (m(m(x, y), z), m(x, m(y, z)))
    if law == "left-alternativity":
        return lambda x, y: (m(m(x, x), y), m(x, m(x, y)))
    if law == "right-alternativity":
        return lambda x, y: (m(y, m(x, x)), m(m(y, x), x))
    if law == "flexibility":
        return lambda x, y: (m(m(x, y), x), m(x, m(y, x)))
    if law == "linearized-flexibility":
        return lambda x, y, z: (
            add_sparse(m(m(x, y), z), m(m(z, y), x)),
            add_sparse(m(x, m(y, z)), m(z, m(y, x))),
        )
    if law == "composition":
        if params[0] == "pseudo":
            norm = lambda v: m(v, v).get(0, Fraction(0))  # noqa: E731
        else:
            norm = _euclid
        return lambda x, y: (norm(m(x, y)), norm(x) * norm(y))
    if law == "left-right-commute":
        return lambda x, y, z: (m(x, m(z, y)), m(m(x, z), y))
    if law == "left-right-anticommute":
        return lambda x, y, z: (m(x, m(z, y)), add_sparse({}, m(m(x, z), y), -1))
    if law == "idempotent":
        return lambda x: (m(x, x), x)
    if law == "nilpotent":
        return lambda x: (m(x, x), {})
    if law == "zero-divisor":
        return lambda x, y: (m(x, y), {})
    raise KeyError(f"no sparse form for law {law!r}")


EXISTENCE_LAWS = {"idempotent", "nilpotent", "zero-divisor"}


def make_witness(t: MonomialTable, law: str, args: Iterable[Sparse], params: tuple = ()) -> Witness:
    """Rebuild a sparse-search hit as a witness and re-verify it on Elements."""
    elems = tuple(to_element(t, a) for a in args)
    lhs, rhs = evaluate_law(law, elems, params)
    w = Witness(law, elems, lhs, rhs, params)
    if not verify_witness(w):
        raise AssertionError(f"sparse search and element re-evaluation disagree: {w.describe()}")
    return w


@dataclass(frozen=True)
class SearchSettings:
    samples: int = DEFAULT_SAMPLES
    seed: int = 0


DEFAULT_SETTINGS = SearchSettings()


def _candidates(
    t: MonomialTable,
    kind: ScopeKind,
    arity: int,
    sum_slots: tuple[int, ...],
    settings: SearchSettings,
) -> Iterator[tuple[Sparse, ...]]:
    if kind is ScopeKind.BASIS:
        basis = basis_vectors(t)
        for idx in ordered_tuples(t.dim, arity):
            yield tuple(basis[i] for i in idx)
    elif kind is ScopeKind.SUMS:
        basis, sums = basis_vectors(t), pair_sums(t)
        pools = [sums if k in sum_slots else basis for k in range(arity)]
        yield from itertools.product(*pools)
    else:
        rng = random.Random(settings.seed)
        for _ in range(settings.samples):
            yield tuple(random_vector(t, rng) for _ in range(arity))


def _scope(kind: ScopeKind, settings: SearchSettings) -> Scope:
    if kind is ScopeKind.RANDOM:
        return Scope(kind, settings.samples, settings.seed)
    return BASIS if kind is ScopeKind.BASIS else SUMS


Violations = Callable[[tuple[Sparse, ...]], list[tuple[str, tuple, tuple[Sparse, ...]]]]


def _law_test(t: MonomialTable, law: str, params: tuple = ()) -> Violations:
    fn = sparse_law(t, law, params)
    existence = law in EXISTENCE_LAWS

    def test(args):
        lhs, rhs = fn(*args)
        return [(law, params, args)] if (lhs == rhs) == existence else []

    return test


def search(
    t: MonomialTable,
    name: str,
    test: Violations,
    arity: int,
    scopes: Iterable[ScopeKind] = tuple(ScopeKind),
    sum_slots: tuple[int, ...] = (0,),
    settings: SearchSettings = DEFAULT_SETTINGS,
    stop_at_first_scope: bool = True,
) -> PropertyReport:
    """Walk the ladder until a scope yields violations.

    A report that holds carries the widest scope that was searched.
    """
    witnesses: list[Witness] = []
    searched: list[str] = []
    kind = None
    for kind in scopes:
        searched.append(str(_scope(kind, settings)))
        for args in _candidates(t, kind, arity, sum_slots, settings):
            for law, params, bad in test(args):
                witnesses.append(make_witness(t, law, bad, params))
            if len(witnesses) >= MAX_WITNESSES:
                break
        if witnesses and stop_at_first_scope:
            break
    witnesses = witnesses[:MAX_WITNESSES]
    verdict = Verdict.FAILS if witnesses else Verdict.HOLDS
    return PropertyReport(
        t.name,
        name,
        verdict,
        _scope(kind, settings) if kind else None,
        tuple(witnesses),
        details={"scopes_searched": searched},
    )


def check_commutativity(t: MonomialTable) -> PropertyReport:
    return search(t, "commutativity", _law_test(t, "commutativity"), 2, [ScopeKind.BASIS])


def check_associativity(t: MonomialTable) -> PropertyReport:
    return search(t, "associativity", _law_test(t, "associativity"), 3, [ScopeKind.BASIS])


def check_alternativity(t: MonomialTable, settings: SearchSettings = DEFAULT_SETTINGS) -> PropertyReport:
    parts = [
        search(t, law, _law_test(t, law), 2, settings=settings)
        for law in ("left-alternativity", "right-alternativity")
    ]
    return combine(t.name, "alternativity", parts)


@functools.lru_cache(maxsize=None)
def bracketings(n: int) -> tuple[str, ...]:
    """Every full binary bracketing of ``n`` copies of ``x``, e.g. ``x(xx)``."""
    if n == 1:
        return ("x",)

    def wrap(s: str) -> str:
        return s if s == "x" else f"({s})"

    out = []
    for k in range(n - 1, 0, -1):
        for left in bracketings(k):
            for right in bracketings(n - k):
                out.append(wrap(left) + wrap(right))
    # Put the right-nested form first so x(xx) leads at power three.
    return tuple(sorted(out, key=lambda s: (not s.startswith("x("), s)))


def _parse_tree(tree: str):
    stack: list[list] = [[]]
    for ch in tree:
        if ch == "(":
            stack.append([])
        elif ch == ")":
            inner = stack.pop()
            stack[-1].append(inner[0] if len(inner) == 1 else tuple(inner))
        else:
            stack[-1].append("x")
    top = stack[0]
    return top[0] if len(top) == 1 else tuple(top)


def _power_test(t: MonomialTable, max_power: int) -> Violations:
    m = functools.partial(sparse_product, t)
    trees = {n: [(s, _parse_tree(s)) for s in bracketings(n)] for n in range(3, max_power + 1)}

    def test(args):
        (x,) = args
        memo: dict = {}

        def ev(node):
            if node == "x":
                return x
            if node not in memo:
                memo[node] = m(ev(node[0]), ev(node[1]))
            return memo[node]

        hits = []
        for n in range(3, max_power + 1):
            (s0, n0), *rest = trees[n]
            ref = ev(n0)
            for s, node in rest:
                if ev(node) != ref:
                    hits.append(("power-associativity", (s0, s), args))
        return hits

    return test


def check_power_associativity(
    t: MonomialTable, max_power: int = 4, settings: SearchSettings = DEFAULT_SETTINGS
) -> PropertyReport:
    if max_power < 3:
        raise ValueError("max_power must be at least 3")
    report = search(t, "power-associativity", _power_test(t, max_power), 1, settings=settings)
    report.details["max_power"] = max_power
    return report


def check_flexibility(t: MonomialTable, settings: SearchSettings = DEFAULT_SETTINGS) -> PropertyReport:
    """Flexibility at two scopes plus its linearized trilinear form.

    ``basis-pair`` is the literal law on ordered pairs of distinct basis
    elements (twelve equations for a four-dimensional table).
    ``full`` is the same law on signed pair sums and random elements.  The
    ``linearized`` part is reported separately because a table can pass on
    basis pairs while failing the trilinear form, which is then what breaks
    ``full``.
    """
    test = _law_test(t, "flexibility")

    def off_diagonal(args):
        # x = y is the cube law, which belongs to power associativity.
        return [] if args[0] == args[1] else test(args)

    basis_pair = search(t, "basis-pair", off_diagonal, 2, [ScopeKind.BASIS])
    full = search(t, "full", test, 2, [ScopeKind.SUMS, ScopeKind.RANDOM], settings=settings)
    lin = search(
        t, "linearized", _law_test(t, "linearized-flexibility"), 3, [ScopeKind.BASIS]
    )
    return combine(t.name, "flexibility", [basis_pair, full, lin])


def check_composition(
    t: MonomialTable, norm: str = "pseudo", settings: SearchSettings = DEFAULT_SETTINGS
) -> PropertyReport:
    """``N(xy) = N(x) N(y)`` with ``norm`` either ``"pseudo"`` or ``"euclid"``.

    ``pseudo`` reads the coefficient of basis element 0 in ``x x``; ``euclid``
    is the sum of squared coefficients, which equals ``x x*`` on a
    Cayley-Dickson table.
    """
    if norm not in ("pseudo", "euclid"):
        raise ValueError(f"unknown norm {norm!r}")
    report = search(
        t,
        f"composition({norm})",
        _law_test(t, "composition", (norm,)),
        2,
        sum_slots=(0, 1),
        settings=settings,
    )
    report.details["norm"] = norm
    return report


def find_zero_divisors(t: MonomialTable, scopes=(ScopeKind.BASIS, ScopeKind.SUMS)) -> PropertyReport:
    """Search for nonzero ``x, y`` with ``x y = 0``; witnesses are such pairs."""
    return search(
        t, "no-zero-divisors", _law_test(t, "zero-divisor"), 2, scopes, sum_slots=(0, 1)
    )


def find_nilpotents_and_idempotents(t: MonomialTable) -> PropertyReport:
    """Exhaustive search over basis elements and signed basis-pair sums."""
    candidates = basis_vectors(t) + pair_sums(t)
    m = functools.partial(sparse_product, t)
    nil = [x for x in candidates if not m(x, x)]
    idem = [x for x in candidates if m(x, x) == x]
    parts = []
    for name, law, found in (("no-nilpotents", "nilpotent", nil), ("no-idempotents", "idempotent", idem)):
        witnesses = tuple(make_witness(t, law, (x,)) for x in found[:MAX_WITNESSES])
        parts.append(
            PropertyReport(
                t.name,
                name,
                Verdict.FAILS if found else Verdict.HOLDS,
                SUMS,
                witnesses,
                details={"found": [format_element(to_element(t, x)) for x in found]},
            )
        )
    return combine(t.name, "nilpotents-and-idempotents", parts)


@dataclass(frozen=True)
class Identities:
    """Basis elements acting as identities, and general-element solutions.

    ``general_left`` / ``general_right`` are one solution of the linear
    systems ``x e_j = e_j`` / ``e_j x = e_j`` for all ``j``, or ``None``.
    """

    left: frozenset[str]
    right: frozenset[str]
    general_left: Element | None
    general_right: Element | None

    @property
    def two_sided(self) -> frozenset[str]:
        return self.left & self.right

    @property
    def any(self) -> bool:
        return bool(self.left or self.right or self.general_left or self.general_right)

    def to_json(self) -> dict:
        def el(x):
            return format_element(x) if x is not None else None

        return {
            "left": sorted(self.left),
            "right": sorted(self.right),
            "two_sided": sorted(self.two_sided),
            "general_left": el(self.general_left),
            "general_right": el(self.general_right),
        }


def _solve_identity(t: MonomialTable, side: str) -> Element | None:
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    n = t.dim
    rows = []
    for j in range(n):
        for k in range(n):
            row = [QQ(0)] * (n + 1)
            for i in range(n):
                sign, idx = t.entries[i][j] if side == "left" else t.entries[j][i]
                if sign and idx == k:
                    row[i] += sign
            row[n] = QQ(1 if j == k else 0)
            rows.append(row)
    rref, pivots = DomainMatrix(rows, (n * n, n + 1), QQ).rref()
    if n in pivots:
        return None
    dense = rref.to_Matrix()
    coeffs = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        v = dense[r, n]
        coeffs[col] = Fraction(int(v.p), int(v.q))
    return t.element(coeffs)


def find_identities(t: MonomialTable) -> Identities:
    n = t.dim
    left = frozenset(
        t.basis[i]
        for i in range(n)
        if all(t.entries[i][j] == (1, j) for j in range(n))
    )
    right = frozenset(
        t.basis[i]
        for i in range(n)
        if all(t.entries[j][i] == (1, j) for j in range(n))
    )
    return Identities(left, right, _solve_identity(t, "left"), _solve_identity(t, "right"))


def signature_of(t: MonomialTable) -> tuple[Fraction, ...]:
    """Coefficient of basis element 0 in each basis square."""
    return tuple(
        Fraction(sign) if k == 0 else Fraction(0)
        for sign, k in (t.entries[i][i] for i in range(t.dim))
    )


@dataclass(frozen=True)
class RegularReps:
    """Left and right regular matrices; column ``j`` of ``left[i]`` is ``e_i e_j``."""

    table: MonomialTable
    left: tuple[np.ndarray, ...]
    right: tuple[np.ndarray, ...]

    def commutator(self, i: int, j: int) -> np.ndarray:
        return self.left[i] @ self.right[j] - self.right[j] @ self.left[i]

    def anticommutator(self, i: int, j: int) -> np.ndarray:
        return self.left[i] @ self.right[j] + self.right[j] @ self.left[i]

    def apply_left(self, x: Element, y: Element) -> Element:
        """``x y`` computed as ``L(x)`` acting on the coefficient column of ``y``."""
        mat = sum((self.left[i] * q for i, q in enumerate(x.coeffs)), _zeros(self.table.dim))
        return self.table.element(mat @ np.array(y.coeffs, dtype=object))

    def _failures(self, law: str, op) -> list[Witness]:
        t = self.table
        basis = t.basis_elements()
        out = []
        for i, j in ordered_tuples(t.dim, 2):
            mat = op(i, j)
            for col in range(t.dim):
                if any(mat[:, col]):
                    args = (basis[i], basis[j], basis[col])
                    lhs, rhs = evaluate_law(law, args)
                    out.append(Witness(law, args, lhs, rhs))
                    break
            if len(out) >= MAX_WITNESSES:
                break
        return out

    def report(self) -> PropertyReport:
        """Whether every ``L(x)`` commutes, or anticommutes, with every ``R(y)``."""
        parts = []
        for name, op in (
            ("left-right-commute", self.commutator),
            ("left-right-anticommute", self.anticommutator),
        ):
            ws = tuple(self._failures(name, op))
            parts.append(
                PropertyReport(self.table.name, name, Verdict.FAILS if ws else Verdict.HOLDS, BASIS, ws)
            )
        return combine(self.table.name, "regular-representations", parts)


def _zeros(n: int) -> np.ndarray:
    return np.full((n, n), Fraction(0), dtype=object)


def regular_representations(t: MonomialTable) -> RegularReps:
    n = t.dim
    lefts, rights = [], []
    for i in range(n):
        lm, rm = _zeros(n), _zeros(n)
        for j in range(n):
            s, k = t.entries[i][j]
            if s:
                lm[k, j] = Fraction(s)
            s, k = t.entries[j][i]
            if s:
                rm[k, j] = Fraction(s)
        lefts.append(lm)
        rights.append(rm)
    return RegularReps(t, tuple(lefts), tuple(rights))


def check_left_right(t: MonomialTable) -> PropertyReport:
    """Search-route version of :meth:`RegularReps.report`, on basis triples."""
    parts = [
        search(t, law, _law_test(t, law), 3, [ScopeKind.BASIS])
        for law in ("left-right-commute", "left-right-anticommute")
    ]
    return combine(t.name, "regular-representations", parts)
