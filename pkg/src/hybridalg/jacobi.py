"""The eight ungraded super-Jacobi sums of the alphabet algebra.

Each identity is stored as expression source text so it can be printed,
parsed and evaluated under either contraction order.  The "outer" sums nest
the first bracket on the left, the "inner" sums on the right.
"""
from __future__ import annotations

import functools

from .algebra import Element, table_A
from .brackets import ContractionOrder, evaluate
from .exprlang import parse
from .reports import PropertyReport, Verdict, Witness, combine
from .words import DEFAULT_OPTIONS, EngineOptions

IDENTITIES: dict[str, str] = {
    "outer-1": "[{d,c},a] + {{c,a},d} + {{a,d},c}",
    "outer-2": "[{d,c},b] + {{c,b},d} + {{b,d},c}",
    "outer-3": "{[a,b],d} + {{b,d},a} + {{d,a},b}",
    "outer-4": "{[a,b],c} + {{b,c},a} + {{c,a},b}",
    "inner-1": "{d,{c,a}} + {c,{a,d}} + [a,{d,c}]",
    "inner-2": "{d,{c,b}} + {c,{b,d}} + [b,{d,c}]",
    "inner-3": "{a,{b,d}} + {b,{d,a}} + {d,[a,b]}",
    "inner-4": "{a,{b,c}} + {b,{c,a}} + {c,[a,b]}",
}

# Same shape as outer-1, but the mixed-parity inner pairs use commutators.
MIXED_COMMUTATOR_VARIANT = "[{d,c},a] + {[c,a],d} + {[a,d],c}"


@functools.lru_cache(maxsize=None)
def _tree(src: str):
    return parse(src, table_A())


def _order(order: ContractionOrder | str) -> ContractionOrder:
    return order if isinstance(order, ContractionOrder) else ContractionOrder(order)


def residual_of(
    name: str, order: ContractionOrder | str, options: EngineOptions = DEFAULT_OPTIONS
) -> Element:
    """Value of the named identity's left-hand side (zero when it holds)."""
    src = MIXED_COMMUTATOR_VARIANT if name == "mixed-commutator" else IDENTITIES[name]
    return evaluate(_tree(src), table_A(), _order(order), options)


def check_jacobi(
    name: str, order: ContractionOrder | str, options: EngineOptions = DEFAULT_OPTIONS
) -> PropertyReport:
    order = _order(order)
    residual = residual_of(name, order, options)
    zero = residual.table.zero()
    holds = residual.is_zero()
    witnesses = () if holds else (Witness("jacobi", (), residual, zero, (name, order.value)),)
    src = MIXED_COMMUTATOR_VARIANT if name == "mixed-commutator" else IDENTITIES[name]
    return PropertyReport(
        "A",
        name,
        Verdict.HOLDS if holds else Verdict.FAILS,
        None,
        witnesses,
        details={"identity": src, "order": order.value, "residual": residual, "holds": holds},
    )


def check_all_jacobis(
    order: ContractionOrder | str, options: EngineOptions = DEFAULT_OPTIONS
) -> PropertyReport:
    order = _order(order)
    parts = [check_jacobi(name, order, options) for name in IDENTITIES]
    return combine("A", f"jacobi({order.value})", parts, order=order.value)


def mixed_commutator_counterexample() -> Element:
    return residual_of("mixed-commutator", ContractionOrder.FITO)


def jacobi_json(report: PropertyReport) -> dict:
    d = report.details
    return {
        "identity": d["identity"],
        "order": d["order"],
        "residual": [str(q) for q in d["residual"].coeffs],
        "holds": d["holds"],
    }
