"""Named algebras and named property checks, as used by the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .algebra import MonomialTable, load_table, table_A, table_quaternions
from .brackets import ContractionOrder, check_delta_jl_axioms
from .cayley_dickson import NAMES, cd_algebra
from .jacobi import check_all_jacobis
from .properties import (
    BASIS,
    SearchSettings,
    check_alternativity,
    check_associativity,
    check_commutativity,
    check_composition,
    check_flexibility,
    check_left_right,
    check_power_associativity,
    find_identities,
    find_nilpotents_and_idempotents,
    find_zero_divisors,
    regular_representations,
    signature_of,
)
from .laws import evaluate_law
from .reports import PropertyReport, Verdict, Witness, combine

CD_LEVELS = {name: level for level, name in NAMES.items()}


class UnknownAlgebraError(ValueError):
    pass


class UnknownPropertyError(ValueError):
    pass


def resolve_algebra(selector: str) -> MonomialTable:
    """``A``, one of ``R C H O S T``, or ``file:PATH`` to a table JSON file.

    ``H`` is the quaternion table with basis ``1, i, j, k``; the other
    Cayley-Dickson levels use ``e0, e1, ...``.
    """
    if selector == "A":
        return table_A()
    if selector == "H":
        return table_quaternions()
    if selector in CD_LEVELS:
        return cd_algebra(CD_LEVELS[selector]).table
    if selector.startswith("file:"):
        path = Path(selector[5:])
        if not path.is_file():
            raise UnknownAlgebraError(f"no such table file: {path}")
        return load_table(path)
    raise UnknownAlgebraError(
        f"unknown algebra {selector!r}; use A, R, C, H, O, S, T or file:PATH"
    )


def is_cayley_dickson(t: MonomialTable) -> bool:
    level = CD_LEVELS.get(t.name)
    return level is not None and t.entries == cd_algebra(level).table.entries


@dataclass(frozen=True)
class RunSettings:
    order: ContractionOrder = ContractionOrder.FITO
    search: SearchSettings = field(default_factory=SearchSettings)


def _identities(t: MonomialTable, s: RunSettings) -> PropertyReport:
    ids = find_identities(t)
    basis = t.basis_elements()

    def refutations(law: str) -> list[Witness]:
        # One moved basis element per candidate; absence of a general
        # identity is decided by the linear solve in find_identities.
        out = []
        for u in basis:
            for v in basis:
                lhs, rhs = evaluate_law(law, (u, v))
                if lhs != rhs:
                    out.append(Witness(law, (u, v), lhs, rhs))
                    break
        return out

    def part(name, found, witnesses):
        if found:
            return PropertyReport(t.name, name, Verdict.HOLDS, BASIS)
        return PropertyReport(t.name, name, Verdict.FAILS, BASIS, tuple(witnesses))

    left_w, right_w = refutations("left-identity"), refutations("right-identity")
    parts = [
        part("left-identity", ids.left or ids.general_left, left_w),
        part("right-identity", ids.right or ids.general_right, right_w),
        part("two-sided-identity", ids.two_sided, _two_sided_refutations(t, left_w, right_w)),
    ]
    # The parent verdict is the two-sided one.
    return PropertyReport(
        t.name,
        "identities",
        parts[2].verdict,
        BASIS,
        parts[2].witnesses,
        parts=tuple(parts),
        details=ids.to_json(),
    )


def _two_sided_refutations(t: MonomialTable, left_w: list, right_w: list) -> list:
    by_candidate = {w.args[0]: w for w in right_w}
    by_candidate.update((w.args[0], w) for w in left_w)
    return [by_candidate[u] for u in t.basis_elements() if u in by_candidate]


def _signature(t: MonomialTable, s: RunSettings) -> PropertyReport:
    sig = signature_of(t)
    trace = sum(sig)
    part = PropertyReport(t.name, "traceless", Verdict.HOLDS if trace == 0 else Verdict.FAILS, BASIS)
    return PropertyReport(
        t.name,
        "signature",
        part.verdict,
        BASIS,
        parts=(part,),
        details={"signature": [str(q) for q in sig], "trace": str(trace)},
    )


def _composition(t: MonomialTable, s: RunSettings) -> PropertyReport:
    norm = "euclid" if is_cayley_dickson(t) or t == table_quaternions() else "pseudo"
    return check_composition(t, norm, s.search)


def _graded(t: MonomialTable) -> MonomialTable:
    return t if t.parity is not None else t.with_parity([0] * t.dim)


def _delta_jl(t: MonomialTable, s: RunSettings) -> PropertyReport:
    g = _graded(t)
    parts = [check_delta_jl_axioms(g, d) for d in (1, -1)]
    return combine(t.name, "delta-jl", parts, graded_all_even=t.parity is None)


def _jacobi(t: MonomialTable, s: RunSettings) -> PropertyReport:
    if t != table_A():
        raise UnknownPropertyError("the super-Jacobi suite is defined only for A")
    return check_all_jacobis(s.order)


def _regular_reps(t: MonomialTable, s: RunSettings) -> PropertyReport:
    # Exact object-dtype matrix products get slow past dimension 8; the
    # basis-triple search states the same law without matrices.
    if t.dim <= 8:
        return regular_representations(t).report()
    return check_left_right(t)


CHECKS: dict[str, Callable[[MonomialTable, RunSettings], PropertyReport]] = {
    "commutativity": lambda t, s: check_commutativity(t),
    "associativity": lambda t, s: check_associativity(t),
    "alternativity": lambda t, s: check_alternativity(t, s.search),
    "power-associativity": lambda t, s: check_power_associativity(t, 4, s.search),
    "flexibility": lambda t, s: check_flexibility(t, s.search),
    "composition": _composition,
    "identities": _identities,
    "signature": _signature,
    "nilpotents": lambda t, s: find_nilpotents_and_idempotents(t),
    "zero-divisors": lambda t, s: find_zero_divisors(t),
    "regular-reps": _regular_reps,
    "delta-jl": _delta_jl,
    "jacobi": _jacobi,
}


def run_check(name: str, t: MonomialTable, settings: RunSettings = RunSettings()) -> PropertyReport:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise UnknownPropertyError(
            f"unknown property {name!r}; choose from {', '.join(CHECKS)}"
        ) from None
    return fn(t, settings)


def default_checks(t: MonomialTable) -> list[str]:
    names = [n for n in CHECKS if n != "jacobi"]
    if t == table_A():
        names.append("jacobi")
    return names


def flatten(report: PropertyReport, prefix: str = "") -> dict[str, PropertyReport]:
    """``{"flexibility": r, "flexibility/full": r_full, ...}``."""
    path = f"{prefix}/{report.property}" if prefix else report.property
    out = {path: report}
    for p in report.parts:
        out.update(flatten(p, path))
    return out
