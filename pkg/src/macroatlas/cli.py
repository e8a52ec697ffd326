"""Batch driver: solve, shock, export-graph, and plot without the UI.

Exit codes: 0 success, 2 validation problem, 3 solver did not converge,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import EconState, MacroAtlasError, ParamValidationError, Params
from .equilibrium import long_run_ge, short_run_ge
from .graph import canonical_graph
from .panels import build_panel
from .roots import SolverError
from .svgplot import render_panel

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4


def load_params(path: str | None) -> Params:
    """Read a flat key=value or JSON parameter file; None means defaults."""
    if path is None:
        return Params()
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return Params.from_json(text)
    return Params.from_config_text(text)


def _state_rows(*states: EconState) -> list[tuple[str, ...]]:
    names = states[0].to_dict().keys()
    return [(name,) + tuple(f"{getattr(s, name):.6f}" for s in states)
            for name in names]


def _print_table(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> None:
    widths = [max(len(str(r[i])) for r in [header] + rows)
              for i in range(len(header))]
    def line(cells):
        return "  ".join(str(c).rjust(w) for c, w in zip(cells, widths))
    print(line(header))
    print(line(tuple("-" * w for w in widths)))
    for row in rows:
        print(line(row))


def cmd_solve(args) -> int:
    params = load_params(args.config)
    short = short_run_ge(params)
    long = long_run_ge(params)
    if args.json:
        print(json.dumps({"shortRun": short.to_dict(), "longRun": long.to_dict()},
                         indent=2, sort_keys=True))
        return EXIT_OK
    print("General equilibrium under the supplied parameters")
    _print_table(("field", "short-run", "long-run"), _state_rows(short, long))
    gap = short.Y - short.Ybar
    print(f"\noutput gap (short-run Y - Ybar): {gap:.6f}")
    print(f"long-run Y equals Ybar: {abs(long.Y - long.Ybar):.2e}")
    return EXIT_OK


def cmd_shock(args) -> int:
    params = load_params(args.config)
    try:
        value = float(args.value)
    except ValueError:
        print(f"error: shock value {args.value!r} is not a number",
              file=sys.stderr)
        return EXIT_VALIDATION
    graph = canonical_graph()
    plan = graph.propagate({args.field})
    before = short_run_ge(params)
    after = short_run_ge(params.with_field(args.field, value))
    if args.json:
        print(json.dumps({
            "field": args.field, "value": value,
            "before": before.to_dict(), "after": after.to_dict(),
            "plan": plan.to_dict(),
        }, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"shock: {args.field} {getattr(params, args.field):g} -> {value:g}")
    rows = [(name, f"{getattr(before, name):.6f}", f"{getattr(after, name):.6f}",
             f"{getattr(after, name) - getattr(before, name):+.6f}")
            for name in before.to_dict()]
    _print_table(("field", "before", "after", "delta"), rows)
    print("\ndirty diagrams, in recomputation order:")
    for node_id in plan.dirty:
        print(f"  {node_id:>2}  {graph.node(node_id).name}")
    return EXIT_OK


def cmd_export_graph(args) -> int:
    graph = canonical_graph()
    text = graph.to_dot() if args.format == "dot" else graph.to_json()
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {args.format} graph to {args.out}")
    return EXIT_OK


def cmd_plot(args) -> int:
    params = load_params(args.config)
    graph = canonical_graph()
    node = graph.node(args.node)
    baseline_state = short_run_ge(params)
    overlay = args.overlay
    if args.field is not None:
        if args.value is None:
            print("error: --field needs --value", file=sys.stderr)
            return EXIT_VALIDATION
        shocked = params.with_field(args.field, float(args.value))
        current = (shocked, short_run_ge(shocked))
        overlay = overlay or "both"
    else:
        current = (params, baseline_state)
        overlay = overlay or "current"
    payload = build_panel(graph, args.node, current=current,
                          baseline=(params, baseline_state), overlay=overlay)
    svg = render_panel(payload, title=f"{node.id}. {node.name}",
                       xLabel=node.xLabel, yLabel=node.yLabel)
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote panel {args.node} to {args.out}")
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macroatlas",
        description="Solve, shock, and plot the linked macro diagrams")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="print short- and long-run equilibria")
    solve.add_argument("--config", default=None, help="parameter file")
    solve.add_argument("--json", action="store_true", help="machine-readable output")
    solve.set_defaults(func=cmd_solve)

    shock = sub.add_parser("shock", help="before/after table for one shock")
    shock.add_argument("--config", default=None)
    shock.add_argument("--field", required=True, help="parameter to shock")
    shock.add_argument("--value", required=True, help="new value")
    shock.add_argument("--json", action="store_true")
    shock.set_defaults(func=cmd_shock)

    export = sub.add_parser("export-graph", help="write the diagram graph")
    export.add_argument("--format", choices=("dot", "json"), default="dot")
    export.add_argument("--out", required=True)
    export.set_defaults(func=cmd_export_graph)

    plot = sub.add_parser("plot", help="render one diagram panel as SVG")
    plot.add_argument("--node", type=int, required=True, help="diagram id 1..27")
    plot.add_argument("--out", required=True)
    plot.add_argument("--config", default=None)
    plot.add_argument("--field", default=None, help="optional shock field")
    plot.add_argument("--value", default=None, help="optional shock value")
    plot.add_argument("--overlay", choices=("current", "baseline", "both"),
                      default=None)
    plot.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse usage errors carry code 2
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParamValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SolverError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MacroAtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())
