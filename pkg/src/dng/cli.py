"""Command-line surface: analyze, diagram, verify."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import oracle as oracle_mod
from . import solver as solver_mod
from .catalog import builtin_catalog
from .classify import Classification, barnes_first_player_wins, classify
from .errors import (
    BudgetError,
    GeneratorCapError,
    LatticeGuardError,
    OracleBudgetError,
    SpecSyntaxError,
)
from .groups import ORDER_BUDGET, Group, min_generators, quotient
from .groupspec import build, parse_spec
from .lattice import largest_odd_normal_in_frattini, lattice_dot

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4


@dataclass
class AnalysisReport:
    name: str
    order: int
    classification: Classification
    solver_nim: int | None
    solver_nodes: int | None
    solver_edges: int | None
    solver_types: dict[str, int] | None
    oracle_nim: int | None
    oracle_positions: int | None
    oracle_effort: int | None
    oracle_skipped: bool
    agreement: bool

    def to_json_dict(self) -> dict:
        solver = None
        if self.solver_nim is not None:
            solver = {
                "nim": self.solver_nim,
                "nodes": self.solver_nodes,
                "edges": self.solver_edges,
                "types": self.solver_types,
            }
        if self.oracle_skipped:
            oracle = {"skipped": "budget"}
        elif self.oracle_nim is not None:
            oracle = {
                "nim": self.oracle_nim,
                "positions": self.oracle_positions,
                "effort": self.oracle_effort,
            }
        else:
            oracle = None
        return {
            "format": "dng-analysis-v1",
            "group": {"name": self.name, "order": self.order},
            "classifier": self.classification.to_json_dict(),
            "solver": solver,
            "oracle": oracle,
            "agreement": self.agreement,
        }

    def to_text(self) -> str:
        lines = [f"group: {self.name} (order {self.order})"]
        c = self.classification
        lines.append(f"classifier: *{c.nim} rule={c.rule.value} outcome={c.outcome}")
        if self.solver_nim is not None:
            types = " ".join(f"{v}x{k}" for k, v in self.solver_types.items())
            lines.append(
                f"solver: *{self.solver_nim} nodes={self.solver_nodes} "
                f"edges={self.solver_edges} types={types}"
            )
        if self.oracle_skipped:
            lines.append("oracle: skipped(budget)")
        elif self.oracle_nim is not None:
            lines.append(
                f"oracle: *{self.oracle_nim} positions={self.oracle_positions} "
                f"effort={self.oracle_effort}"
            )
        lines.append(f"agreement: {'yes' if self.agreement else 'NO'}")
        return "\n".join(lines) + "\n"


def analyze_group(
    g: Group,
    *,
    fast: bool = False,
    no_oracle: bool = False,
    oracle_budget: int = oracle_mod.DEFAULT_BUDGET,
) -> AnalysisReport:
    cls = classify(g)
    solver_nim = nodes = edges = None
    types = None
    if not fast:
        d = solver_mod.solve_types(solver_mod.structure_digraph(g))
        solver_nim = d.types[d.source].nim_even
        nodes, edges = len(d.nodes), len(d.edges)
        types = solver_mod.type_multiset(d)
    oracle_nim = positions = effort = None
    skipped = False
    if not no_oracle:
        try:
            res = oracle_mod.brute_nim(g, oracle_budget)
            oracle_nim, positions, effort = res.nim, res.memo_size, res.effort
        except OracleBudgetError:
            skipped = True
    nims = {cls.nim}
    if solver_nim is not None:
        nims.add(solver_nim)
    if oracle_nim is not None:
        nims.add(oracle_nim)
    return AnalysisReport(
        name=g.name,
        order=g.order,
        classification=cls,
        solver_nim=solver_nim,
        solver_nodes=nodes,
        solver_edges=edges,
        solver_types=types,
        oracle_nim=oracle_nim,
        oracle_positions=positions,
        oracle_effort=effort,
        oracle_skipped=skipped,
        agreement=len(nims) == 1,
    )


def _build_group(spec_text: str, max_order: int, mod_frattini: bool) -> Group:
    g = build(parse_spec(spec_text), budget=max_order)
    if mod_frattini:
        n = largest_odd_normal_in_frattini(g)
        if n.order > 1:
            g = quotient(g, n)
    return g


def _cmd_analyze(args) -> int:
    g = _build_group(args.spec, args.max_order, args.mod_frattini)
    report = analyze_group(
        g,
        fast=args.fast,
        no_oracle=args.no_oracle,
        oracle_budget=args.budget,
    )
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text(), end="")
    return EXIT_OK if report.agreement else EXIT_DISAGREE


def _cmd_diagram(args) -> int:
    g = _build_group(args.spec, args.max_order, args.mod_frattini)
    if args.lattice:
        print(lattice_dot(g), end="")
        return EXIT_OK
    d = solver_mod.solve_types(solver_mod.structure_digraph(g))
    if args.simplified:
        print(solver_mod.emit_dot(solver_mod.simplify(d)), end="")
    else:
        print(solver_mod.emit_dot(d), end="")
    return EXIT_OK


CSV_COLUMNS = (
    "name",
    "order",
    "classifier_nim",
    "rule",
    "solver_nim",
    "oracle_nim",
    "barnes_winner",
    "d",
)


def _cmd_verify(args) -> int:
    if args.catalog:
        with open(args.catalog, encoding="utf-8") as fh:
            specs = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        groups = [(s, build(parse_spec(s), budget=args.max_order)) for s in specs]
    else:
        groups = builtin_catalog(args.max_order)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    disagreements = 0
    for name, g in groups:
        report = analyze_group(g, no_oracle=args.no_oracle, oracle_budget=args.budget)
        if not report.agreement:
            disagreements += 1
        try:
            d = str(min_generators(g))
        except GeneratorCapError as exc:
            d = f">{exc.cap}"
        winner = "first" if barnes_first_player_wins(g) else "second"
        writer.writerow(
            [
                name,
                g.order,
                report.classification.nim,
                report.classification.rule.value,
                report.solver_nim,
                "skipped" if report.oracle_skipped else report.oracle_nim,
                winner,
                d,
            ]
        )
    sys.stdout.write(out.getvalue())
    print(f"{len(groups)} groups, {disagreements} disagreements", file=sys.stderr)
    return EXIT_DISAGREE if disagreements else EXIT_OK


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dng",
        description=(
            "Nim-numbers of the avoidance game on finite groups. "
            "Group specs use a small expression language: Z6, D5 (dihedral "
            "of order 10), Dic2, S4, A5, Dih(Z3 x Z3), Z2 x Z3."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_oracle: bool):
        p.add_argument("--max-order", type=int, default=ORDER_BUDGET,
                       help="group order budget (default %(default)s)")
        p.add_argument("--mod-frattini", action="store_true",
                       help="first factor out the largest odd normal subgroup "
                            "inside the Frattini subgroup")
        if with_oracle:
            p.add_argument("--budget", type=int, default=oracle_mod.DEFAULT_BUDGET,
                           help="oracle position budget (default %(default)s)")
            p.add_argument("--no-oracle", action="store_true",
                           help="skip the brute-force oracle")

    a = sub.add_parser("analyze", help="classify, solve, and verify one group")
    a.add_argument("spec")
    a.add_argument("--json", action="store_true", help="emit a JSON report")
    a.add_argument("--fast", action="store_true", help="classifier only, skip the solver")
    common(a, with_oracle=True)
    a.set_defaults(func=_cmd_analyze)

    d = sub.add_parser("diagram", help="emit DOT diagrams on stdout")
    d.add_argument("spec")
    mode = d.add_mutually_exclusive_group()
    mode.add_argument("--simplified", action="store_true",
                      help="simplified structure diagram")
    mode.add_argument("--lattice", action="store_true", help="subgroup lattice")
    common(d, with_oracle=False)
    d.set_defaults(func=_cmd_diagram)

    v = sub.add_parser("verify", help="survey the built-in catalog, emit CSV")
    v.add_argument("--max-order", type=int, default=24,
                   help="largest catalog group order (default %(default)s)")
    v.add_argument("--catalog", help="file with one group spec per line")
    v.add_argument("--budget", type=int, default=oracle_mod.DEFAULT_BUDGET,
                   help="oracle position budget (default %(default)s)")
    v.add_argument("--no-oracle", action="store_true", help="skip the oracle column")
    v.set_defaults(func=_cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetError, LatticeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def run() -> None:  # console-script entry point
    sys.exit(main())
