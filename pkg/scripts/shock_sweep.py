#!/usr/bin/env python3
"""Sweep one parameter and tabulate the short-run equilibrium responses.

Example:
    python scripts/shock_sweep.py --field Ms --from 800 --to 1400 --steps 7
"""

import argparse

import numpy as np

from macroatlas.core import Params
from macroatlas.equilibrium import short_run_ge
from macroatlas.graph import canonical_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--field", default="Ms")
    parser.add_argument("--from", dest="lo", type=float, default=800.0)
    parser.add_argument("--to", dest="hi", type=float, default=1400.0)
    parser.add_argument("--steps", type=int, default=7)
    args = parser.parse_args()

    graph = canonical_graph()
    plan = graph.propagate({args.field})
    names = ", ".join(str(i) for i in plan.dirty)
    print(f"shocking {args.field}: panels recomputed in order [{names}]\n")

    print(f"{args.field:>10}  {'Y':>10}  {'P':>8}  {'i':>8}  {'r':>8}  "
          f"{'Uu':>8}  {'pi':>8}")
    for value in np.linspace(args.lo, args.hi, args.steps):
        state = short_run_ge(Params().with_field(args.field, float(value)))
        print(f"{value:>10.2f}  {state.Y:>10.2f}  {state.P:>8.4f}  "
              f"{state.i:>8.4f}  {state.r:>8.4f}  {state.Uu:>8.4f}  "
              f"{state.pi:>8.4f}")


if __name__ == "__main__":
    main()
