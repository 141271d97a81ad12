"""Command-line front end: ``hybridalg {eval,table,check,compare,cd}``.

Exit status is 0 on success, 1 when a check disagrees with the expectation
file, and 2 for usage, parse or evaluation errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import IncompatibleAlgebrasError, TableValidationError, format_element, format_scalar, save_table
from .brackets import ContractionOrder, SuperselectionError, WordAlgebraError
from .cayley_dickson import MAX_LEVEL, cd_algebra, quaternion_aliases
from .compare import (
    compare_with_expectations,
    comparison_tables,
    load_expectations,
    matrix_csv,
    matrix_json,
    matrix_markdown,
    table_csv,
    table_markdown,
    table_text,
)
from .exprlang import ExprSyntaxError, evaluate_text
from .properties import SearchSettings
from .reports import Verdict
from .suite import (
    CHECKS,
    RunSettings,
    UnknownAlgebraError,
    UnknownPropertyError,
    default_checks,
    flatten,
    resolve_algebra,
    run_check,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

_COLORS = {Verdict.HOLDS: "32", Verdict.FAILS: "31", Verdict.UNDETERMINED: "33"}


def _use_color(stream) -> bool:
    return stream.isatty() and not os.environ.get("ALG_NO_COLOR")


def _mark(v: Verdict, color: bool) -> str:
    return f"\033[{_COLORS[v]}m{v.mark}\033[0m" if color else v.mark


def _settings(args) -> RunSettings:
    return RunSettings(
        order=ContractionOrder(args.order),
        search=SearchSettings(samples=args.samples, seed=args.seed),
    )


def cmd_eval(args, out) -> int:
    table = resolve_algebra(args.algebra)
    value = evaluate_text(args.expr, table, ContractionOrder(args.order))
    gen = value.as_signed_generator()
    coeffs = [format_scalar(q) for q in value.coeffs]
    if args.format == "json":
        out.write(
            json.dumps(
                {
                    "expr": args.expr,
                    "algebra": table.name,
                    "order": args.order,
                    "value": format_element(value),
                    "coeffs": coeffs,
                    "generator": format_element(value) if gen else None,
                }
            )
            + "\n"
        )
    elif args.format == "csv":
        out.write(",".join(table.basis) + "\n" + ",".join(coeffs) + "\n")
    else:
        out.write(format_element(value) + "\n")
        out.write("coeffs: (" + ", ".join(coeffs) + ")\n")
    return EXIT_OK


def _render_table(table, fmt: str) -> str:
    if fmt == "markdown":
        return table_markdown(table)
    if fmt == "csv":
        return table_csv(table)
    if fmt == "json":
        return json.dumps(table.to_json(), indent=2) + "\n"
    return table_text(table)


def cmd_table(args, out) -> int:
    table = resolve_algebra(args.algebra)
    if args.emit_table:
        save_table(table, args.emit_table)
    out.write(_render_table(table, args.format))
    return EXIT_OK


def cmd_cd(args, out) -> int:
    alg = cd_algebra(args.level)
    table = quaternion_aliases(alg) if args.level == 2 and args.quaternion_names else alg.table
    if args.emit_table:
        save_table(table, args.emit_table)
    out.write(_render_table(table, args.format))
    return EXIT_OK


def cmd_check(args, out) -> int:
    table = resolve_algebra(args.algebra)
    names = list(args.properties)
    if args.all:
        names = default_checks(table) + [n for n in names if n not in default_checks(table)]
    if not names:
        raise UnknownPropertyError(f"name at least one property or pass --all; known: {', '.join(CHECKS)}")
    settings = _settings(args)
    expectations = load_expectations(args.expect)
    color = args.format == "text" and _use_color(out)
    status = EXIT_OK
    reports = []
    for name in names:
        report = run_check(name, table, settings)
        flat = flatten(report)
        results = {c.path: c for c in compare_with_expectations(args.algebra, flat, expectations)}
        if any(not c.matches for c in results.values()):
            status = EXIT_MISMATCH
        reports.append((report, flat, results))
    if args.format == "json":
        payload = []
        for report, _, results in reports:
            data = report.to_json()
            data["expectations"] = [
                {
                    "path": c.path,
                    "expected": c.expected,
                    "actual": c.actual,
                    "matches": c.matches,
                    "disputed": c.disputed,
                    "published": c.published,
                }
                for c in results.values()
            ]
            payload.append(data)
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return status
    for report, flat, results in reports:
        for path, r in flat.items():
            depth = path.count("/")
            line = f"{'  ' * depth}{_mark(r.verdict, color)} {r.property}: {r.verdict.value}"
            if r.scope is not None:
                line += f" [{r.scope}]"
            c = results.get(path)
            if c is not None:
                if not c.matches:
                    line += f"  MISMATCH (expected {c.expected})"
                elif c.disputed:
                    line += f"  (published: {c.published}; documented discrepancy)"
            out.write(line + "\n")
            for w in r.witnesses[: args.witnesses]:
                out.write(f"{'  ' * (depth + 1)}witness {w.describe()}\n")
            if "residual" in r.details:
                out.write(f"{'  ' * (depth + 1)}residual {format_element(r.details['residual'])}\n")
    return status


def cmd_compare(args, out) -> int:
    first, second = comparison_tables(_settings(args).search)
    if args.format == "json":
        out.write(json.dumps([matrix_json(first), matrix_json(second)], indent=2, ensure_ascii=False) + "\n")
    elif args.format == "csv":
        out.write(matrix_csv(first) + matrix_csv(second))
    else:
        out.write(matrix_markdown(first) + "\n" + matrix_markdown(second))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-a", "--algebra", default="A", help="A, R, C, H, O, S, T or file:PATH (default A)")
    common.add_argument("--order", choices=[o.value for o in ContractionOrder], default="fito")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=SearchSettings().samples, help="random samples per law")

    parser = argparse.ArgumentParser(prog="hybridalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=[common], help="print a multiplication table")
    p.add_argument("--format", choices=["text", "markdown", "csv", "json"], default="text")
    p.add_argument("--emit-table", metavar="FILE", help="also write the table as JSON")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="run property checks")
    p.add_argument("properties", nargs="*", metavar="PROPERTY", help=", ".join(CHECKS))
    p.add_argument("--all", action="store_true", help="run every applicable check")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--expect", metavar="FILE", help="expectation file (default: bundled)")
    p.add_argument("--witnesses", type=int, default=3, help="witnesses shown per verdict")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", parents=[common], help="emit both comparison matrices")
    p.add_argument("--format", choices=["markdown", "text", "csv", "json"], default="markdown")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("cd", parents=[common], help="build a Cayley-Dickson level")
    p.add_argument("--level", type=int, required=True, choices=range(MAX_LEVEL + 1))
    p.add_argument("--format", choices=["text", "markdown", "csv", "json"], default="text")
    p.add_argument("--emit-table", metavar="FILE")
    p.add_argument("--quaternion-names", action="store_true", help="name level 2 as 1, i, j, k")
    p.set_defaults(func=cmd_cd)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ExprSyntaxError as exc:
        print(f"error: {exc}\n{exc.caret()}", file=sys.stderr)
    except (
        UnknownAlgebraError,
        UnknownPropertyError,
        SuperselectionError,
        WordAlgebraError,
        IncompatibleAlgebrasError,
        TableValidationError,
        KeyError,
        OSError,
    ) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
