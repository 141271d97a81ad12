"""The two comparison matrices, table rendering and expectation files."""
from __future__ import annotations

import csv
import functools
import io
import json
from dataclasses import dataclass
from importlib import resources

from .algebra import MonomialTable
from .properties import (
    DEFAULT_SETTINGS,
    SearchSettings,
    check_alternativity,
    check_associativity,
    check_commutativity,
    check_flexibility,
    check_power_associativity,
    find_identities,
)
from .reports import PropertyReport, Verdict
from .suite import resolve_algebra


@dataclass(frozen=True)
class Cell:
    """One matrix entry: the engine's verdict next to the published one.

    ``declared`` marks metadata that is asserted rather than computed.
    ``note`` explains a cell where engine and publication disagree.
    """

    verdict: Verdict
    claimed: Verdict
    report: PropertyReport | None = None
    declared: bool = False
    note: str | None = None

    @property
    def disputed(self) -> bool:
        return self.verdict is not self.claimed

    def text(self) -> str:
        s = self.verdict.mark
        if self.declared:
            s += " (declared)"
        if self.disputed:
            s += f" [published {self.claimed.mark}: {self.note}]"
        return s

    def to_json(self) -> dict:
        data = {
            "verdict": self.verdict.value,
            "published": self.claimed.value,
            "declared": self.declared,
        }
        if self.note:
            data["note"] = self.note
        if self.report is not None:
            data["report"] = self.report.to_json()
        return data


@dataclass(frozen=True)
class Matrix:
    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, tuple[Cell, ...]], ...]

    def row(self, algebra: str) -> tuple[Cell, ...]:
        return dict(self.rows)[algebra]

    def cell(self, algebra: str, column: str) -> Cell:
        return self.row(algebra)[self.columns.index(column)]


H_, X_ = Verdict.HOLDS, Verdict.FAILS

# Published verdicts, reproduced as data.
DIVISION_CLAIMS = {
    "R": (H_, H_, H_, H_),
    "C": (X_, H_, H_, H_),
    "H": (X_, H_, X_, H_),
    "O": (X_, H_, X_, X_),
    "A": (H_, X_, X_, X_),
}
ASSOCIATIVITY_CLAIMS = {
    "H": (H_, H_, H_, H_),
    "O": (X_, H_, H_, H_),
    "S": (X_, X_, H_, H_),
    "T": (X_, X_, X_, H_),
    "A": (X_, X_, X_, H_),
}
# Ordered field (R) and the lexicographic order on words (A) are metadata.
DECLARED_ORDER = {"R": H_, "C": X_, "H": X_, "O": X_, "A": H_}


def _explain(report: PropertyReport, claimed: Verdict) -> str | None:
    if report.verdict is claimed:
        return None
    if claimed is Verdict.FAILS:
        return "published claim unconfirmed at tested scopes"
    w = report.witness
    return f"contradicted by {w.describe()}" if w else "contradicted"


def _computed(report: PropertyReport, claimed: Verdict) -> Cell:
    return Cell(report.verdict, claimed, report, note=_explain(report, claimed))


def division_ring_matrix() -> Matrix:
    rows = []
    for alg, claims in DIVISION_CLAIMS.items():
        t = resolve_algebra(alg)
        ids = find_identities(t)
        identity = PropertyReport(
            t.name,
            "two-sided-identity",
            Verdict.HOLDS if ids.two_sided else Verdict.FAILS,
            details=ids.to_json(),
        )
        cells = (
            Cell(DECLARED_ORDER[alg], claims[0], declared=True),
            _computed(identity, claims[1]),
            _computed(check_commutativity(t), claims[2]),
            _computed(check_associativity(t), claims[3]),
        )
        rows.append((alg, cells))
    return Matrix(
        "division rings",
        ("Order", "L/R-Identity", "Commutativity", "Associativity"),
        tuple(rows),
    )


def associativity_matrix(settings: SearchSettings = DEFAULT_SETTINGS) -> Matrix:
    """Flexibility is read at basis-pair scope; the full-scope verdict is in
    the cell's report."""
    rows = []
    for alg, claims in ASSOCIATIVITY_CLAIMS.items():
        t = resolve_algebra(alg)
        flex = check_flexibility(t, settings).part("basis-pair")
        cells = (
            _computed(check_associativity(t), claims[0]),
            _computed(check_alternativity(t, settings), claims[1]),
            _computed(check_power_associativity(t, 4, settings), claims[2]),
            _computed(flex, claims[3]),
        )
        rows.append((alg, cells))
    return Matrix(
        "associativity ladder",
        ("Associativity", "Alternativity", "Power Associativity", "Flexibility"),
        tuple(rows),
    )


@functools.lru_cache(maxsize=8)
def comparison_tables(settings: SearchSettings = DEFAULT_SETTINGS) -> tuple[Matrix, Matrix]:
    return division_ring_matrix(), associativity_matrix(settings)


def matrix_markdown(m: Matrix) -> str:
    lines = [
        "| Algebra | " + " | ".join(m.columns) + " |",
        "|---" * (len(m.columns) + 1) + "|",
    ]
    for alg, cells in m.rows:
        lines.append(f"| {alg} | " + " | ".join(c.text() for c in cells) + " |")
    return "\n".join(lines) + "\n"


def matrix_csv(m: Matrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["algebra", "column", "verdict", "published", "declared", "note"])
    for alg, cells in m.rows:
        for col, c in zip(m.columns, cells):
            w.writerow([alg, col, c.verdict.value, c.claimed.value, c.declared, c.note or ""])
    return buf.getvalue()


def matrix_json(m: Matrix) -> dict:
    return {
        "title": m.title,
        "columns": list(m.columns),
        "rows": {alg: dict(zip(m.columns, (c.to_json() for c in cells))) for alg, cells in m.rows},
    }


def _cell(sign: int, k: int, t: MonomialTable) -> str:
    if sign == 0:
        return "0"
    return ("-" if sign < 0 else "") + t.basis[k]


def table_grid(t: MonomialTable) -> list[list[str]]:
    """Header row ``∘ | basis...`` then one row per left factor."""
    grid = [["∘", *t.basis]]
    for i, row in enumerate(t.entries):
        grid.append([t.basis[i], *(_cell(s, k, t) for s, k in row)])
    return grid


def table_markdown(t: MonomialTable) -> str:
    grid = table_grid(t)
    lines = ["| " + " | ".join(grid[0]) + " |", "|---" * len(grid[0]) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in grid[1:]]
    return "\n".join(lines) + "\n"


def table_text(t: MonomialTable) -> str:
    grid = table_grid(t)
    width = max(len(c) for r in grid for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in grid) + "\n"


def table_csv(t: MonomialTable) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(table_grid(t))
    return buf.getvalue()


def load_expectations(path: str | None = None) -> dict:
    """Expected verdicts keyed by algebra, then by ``property[/part]`` path.

    Entries flagged ``disputed`` record the published verdict alongside the
    engine's, so a mismatch there is a known discrepancy rather than a
    regression.
    """
    if path is None:
        text = resources.files("hybridalg").joinpath("data/expectations.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


@dataclass(frozen=True)
class Comparison:
    path: str
    expected: str
    actual: str
    disputed: bool
    published: str | None

    @property
    def matches(self) -> bool:
        return self.expected == self.actual


def compare_with_expectations(
    algebra: str, flat: dict[str, PropertyReport], expectations: dict
) -> list[Comparison]:
    out = []
    for path, entry in expectations.get(algebra, {}).items():
        if path not in flat:
            continue
        out.append(
            Comparison(
                path,
                entry["verdict"],
                flat[path].verdict.value,
                bool(entry.get("disputed")),
                entry.get("published"),
            )
        )
    return out
