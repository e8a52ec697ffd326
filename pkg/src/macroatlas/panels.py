"""Per-diagram curve builders: one panel for each of the 27 graph nodes.

Every builder samples the node's bound operations at the scenario's
parameters and solved state, returning curves plus an equilibrium marker
where the diagram has one.  Sampling grids default to 101 points and are
auto-scaled to three times the relevant equilibrium coordinate; callers can
override the sampled range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    Curve,
    EconState,
    Params,
    consumption,
    curve_from_samples,
    investment_demand,
    money_demand,
    mpk,
    mpl,
    production,
    user_cost,
)
from .demand import ad_curve, is_curve, is_output, lm_curve, national_saving
from .equilibrium import lrpc_curve, srpc_curve
from .graph import BigPicture, UnknownNodeError
from .supply import labor_demand, leisure_choice, solow_solve, sras_output

LM_DEFINITION = ("The combinations of interest rates and levels of real income "
                 "for which the money market is in equilibrium")
IS_DEFINITION = "The equilibria where total private investment equals total saving"

DEFINITIONS = {17: LM_DEFINITION, 23: IS_DEFINITION}

DEFAULT_POINTS = 101


@dataclass(frozen=True)
class PanelPayload:
    nodeId: int
    curves: tuple[Curve, ...]
    equilibriumMarker: tuple[float, float] | None
    definition: str | None
    dirty: bool

    def to_dict(self) -> dict:
        return {
            "nodeId": self.nodeId,
            "curves": [c.to_dict() for c in self.curves],
            "equilibriumMarker": list(self.equilibriumMarker)
            if self.equilibriumMarker else None,
            "definition": self.definition,
            "dirty": self.dirty,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "PanelPayload":
        marker = raw.get("equilibriumMarker")
        return cls(
            nodeId=raw["nodeId"],
            curves=tuple(Curve.from_dict(c) for c in raw["curves"]),
            equilibriumMarker=tuple(marker) if marker else None,
            definition=raw.get("definition"),
            dirty=bool(raw.get("dirty", False)),
        )


@dataclass(frozen=True)
class PanelContext:
    params: Params
    state: EconState
    n: int = DEFAULT_POINTS
    lo: float | None = None
    hi: float | None = None

    def pos_grid(self, center: float):
        """Positive sampler spanning [center/3, 3*center]."""
        lo = self.lo if self.lo is not None else max(center / 3.0, 1e-9)
        hi = self.hi if self.hi is not None else 3.0 * center
        return np.linspace(lo, hi, self.n)

    def zero_grid(self, top: float, floor: float = 0.0):
        lo = self.lo if self.lo is not None else floor
        hi = self.hi if self.hi is not None else 3.0 * top
        return np.linspace(lo, hi, self.n)

    def signed_grid(self, center: float):
        """Sampler for quantities that may cross zero (interest rates)."""
        span = 2.0 * max(abs(center), 1.0)
        lo = self.lo if self.lo is not None else center - span
        hi = self.hi if self.hi is not None else center + span
        return np.linspace(lo, hi, self.n)


def _vertical(x: float, y_lo: float, y_hi: float, xLabel: str, yLabel: str,
              name: str) -> Curve:
    return Curve(xLabel=xLabel, yLabel=yLabel,
                 points=((x, y_lo), (x, y_hi)), name=name)


def _maybe_vertical(xs, ys, xLabel, yLabel, name, markers=None) -> Curve:
    """Collapse float jitter when a schedule is analytically vertical."""
    xs = [float(x) for x in xs]
    spread = max(xs) - min(xs)
    if spread < 1e-9 * max(1.0, abs(xs[0])):
        x = xs[len(xs) // 2]
        return Curve(xLabel=xLabel, yLabel=yLabel,
                     points=tuple((x, float(y)) for y in ys),
                     name=name, markers=markers or {})
    return curve_from_samples(xs, ys, xLabel, yLabel, name=name,
                              markers=markers or {})


# -- individual builders ------------------------------------------------------

def _panel_leisure_tradeoff(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    choice = leisure_choice(s.w, p.theta, p.H, p.m)
    grid = ctx.zero_grid(p.H / 3.0, floor=p.H / 50.0)
    grid = grid[grid <= p.H]
    budget = curve_from_samples(grid, [p.m + s.w * (p.H - l) for l in grid],
                                "L", "I", name="budget")
    u0 = choice.utility
    indiff = curve_from_samples(
        grid, [math.exp(u0) * l ** (-p.theta) for l in grid],
        "L", "I", name="indifference")
    marker = (choice.leisure, choice.cons)
    return [budget, indiff], marker


def _labor_supply_points(ctx: PanelContext, scale: float):
    p, s = ctx.params, ctx.state
    w_grid = ctx.pos_grid(s.w)
    if p.m > 0:
        reservation = p.theta * p.m / p.H
        w_grid = w_grid[w_grid > reservation * 1.0001]
        if len(w_grid) < 2:
            w_grid = np.linspace(reservation * 1.01, 3.0 * s.w, ctx.n)
    hours = [scale * leisure_choice(w, p.theta, p.H, p.m).labor for w in w_grid]
    return hours, list(w_grid)


def _panel_individual_supply(ctx: PanelContext):
    s = ctx.state
    xs, ys = _labor_supply_points(ctx, scale=1.0)
    curve = _maybe_vertical(xs, ys, "W", "w", "labor supply")
    marker = (ctx.state.L / ctx.params.Nh, s.w)
    return [curve], marker


def _panel_labor_supply(ctx: PanelContext):
    s = ctx.state
    xs, ys = _labor_supply_points(ctx, scale=ctx.params.Nh)
    curve = _maybe_vertical(xs, ys, "L", "w", "labor supply")
    return [curve], (s.L, s.w)


def _panel_production_yl(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.zero_grid(s.L)
    curve = curve_from_samples(
        grid, [production(p.A, p.K, L, p.alpha) for L in grid], "L", "Y",
        name="production")
    return [curve], (s.L, s.Ybar)


def _panel_mpl(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.pos_grid(s.L)
    curve = curve_from_samples(
        grid, [mpl(p.A, p.K, L, p.alpha) for L in grid], "L", "MPL", name="MPL")
    return [curve], (s.L, mpl(p.A, p.K, s.L, p.alpha))


def _labor_demand_curve(ctx: PanelContext) -> Curve:
    p, s = ctx.params, ctx.state
    w_grid = ctx.pos_grid(s.w)
    return curve_from_samples(
        [labor_demand(w, p.A, p.K, p.alpha) for w in w_grid], list(w_grid),
        "L", "w", name="labor demand")


def _panel_labor_demand(ctx: PanelContext):
    return [_labor_demand_curve(ctx)], (ctx.state.L, ctx.state.w)


def _panel_labor_market(ctx: PanelContext):
    s = ctx.state
    xs, ys = _labor_supply_points(ctx, scale=ctx.params.Nh)
    supply = _maybe_vertical(xs, ys, "L", "w", "labor supply",
                             markers={"equilibrium": (s.L, s.w)})
    demand = replace(_labor_demand_curve(ctx),
                     markers={"equilibrium": (s.L, s.w)})
    return [supply, demand], (s.L, s.w)


def _panel_production_family(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.zero_grid(s.L)
    curves = []
    for factor in (0.5, 1.0, 2.0):
        K = factor * p.K
        curves.append(curve_from_samples(
            grid, [production(p.A, K, L, p.alpha) for L in grid], "L", "Y",
            name=f"K = {K:g}"))
    return curves, None


def _panel_production_yk(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.zero_grid(p.K)
    curve = curve_from_samples(
        grid, [production(p.A, K, s.L, p.alpha) for K in grid], "K", "Y",
        name="production")
    return [curve], (p.K, s.Ybar)


def _panel_mpk(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.pos_grid(p.K)
    curve = curve_from_samples(
        grid, [mpk(p.A, K, s.L, p.alpha) for K in grid], "K", "MPK", name="MPK")
    return [curve], (p.K, mpk(p.A, p.K, s.L, p.alpha))


def _panel_capital_demand(ctx: PanelContext):
    # rates live in percent points; the rental condition wants fractions
    p, s = ctx.params, ctx.state
    uc_star = user_cost(s.r / 100.0, p.delta, p.pK)
    k_star = s.L * (p.alpha * p.A * p.pK / uc_star) ** (1.0 / (1.0 - p.alpha))
    grid = ctx.pos_grid(k_star)
    curve = curve_from_samples(
        grid, [p.pK * mpk(p.A, K, s.L, p.alpha) for K in grid], "K", "UC",
        name="capital demand")
    return [curve], (k_star, uc_star)


def _panel_solow(ctx: PanelContext):
    p = ctx.params
    sol = solow_solve(p.s, p.n, p.delta, p.A, p.alpha)
    grid = ctx.zero_grid(sol.kStar, floor=0.0)
    saving = curve_from_samples(
        grid, [p.s * p.A * k ** p.alpha for k in grid], "k", "f(.)",
        name="s·f(k)")
    dilution = curve_from_samples(
        grid, [(p.n + p.delta) * k for k in grid], "k", "f(.)",
        name="(n+δ)k")
    return [saving, dilution], (sol.kStar, (p.n + p.delta) * sol.kStar)


def _sras_curve(ctx: PanelContext, anchor_P: float, ybar: float) -> Curve:
    p = ctx.params
    grid = ctx.pos_grid(anchor_P)
    return curve_from_samples(
        [sras_output(P, p.PE, p.gamma, ybar) for P in grid], list(grid),
        "Y", "P", name="SRAS")


def _panel_as(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    sras = _sras_curve(ctx, p.PE, s.Ybar)
    y_vals = [pt[1] for pt in sras.points]
    lras = _vertical(s.Ybar, min(y_vals), max(y_vals), "Y", "P", "LRAS")
    return [sras, lras], (s.Ybar, p.PE)


def _panel_general_equilibrium(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.pos_grid(s.P)
    ad = replace(ad_curve(grid, p), markers={"equilibrium": (s.Y, s.P)})
    sras = replace(_sras_curve(ctx, s.P, s.Ybar),
                   markers={"equilibrium": (s.Y, s.P)})
    lras = _vertical(s.Ybar, float(grid[0]), float(grid[-1]), "Y", "P", "LRAS")
    return [ad, sras, lras], (s.Y, s.P)


def _money_demand_curve(ctx: PanelContext) -> Curve:
    p, s = ctx.params, ctx.state
    i_grid = ctx.signed_grid(s.i)
    return curve_from_samples(
        [money_demand(s.P, s.Y, i, p.kY, p.b) for i in i_grid], list(i_grid),
        "MD", "i", name="MD")


def _panel_money_demand(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    curve = _money_demand_curve(ctx)
    return [curve], (money_demand(s.P, s.Y, s.i, p.kY, p.b), s.i)


def _panel_money_market(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    md = replace(_money_demand_curve(ctx), markers={"equilibrium": (p.Ms, s.i)})
    i_vals = [pt[1] for pt in md.points]
    ms = _vertical(p.Ms, min(i_vals), max(i_vals), "MD", "i", "MS⁻")
    return [md, ms], (p.Ms, s.i)


def _panel_lm(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.pos_grid(s.Y)
    curve = replace(lm_curve(s.P, grid, p),
                    markers={"equilibrium": (s.Y, s.i)})
    return [curve], (s.Y, s.i)


def _panel_ad(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.pos_grid(s.P)
    curve = replace(ad_curve(grid, p), markers={"equilibrium": (s.Y, s.P)})
    return [curve], (s.Y, s.P)


def _panel_phillips(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    center = max(s.Uu, p.Ubar, 0.02)
    grid = ctx.pos_grid(center)
    srpc = replace(srpc_curve(grid, p.piE, p.beta, p.Ubar),
                   markers={"equilibrium": (s.Uu, s.pi)})
    pis = [pt[1] for pt in srpc.points]
    lo, hi = min(pis), max(pis)
    if lo == hi:  # beta = 0 flattens the short-run curve
        lo, hi = lo - 1.0, hi + 1.0
    return [srpc, lrpc_curve(p.Ubar, lo, hi)], (s.Uu, s.pi)


def _saving_curve(ctx: PanelContext) -> Curve:
    p, s = ctx.params, ctx.state
    r_grid = ctx.signed_grid(s.r)
    return _maybe_vertical(
        [national_saving(s.Y, r, p) for r in r_grid], list(r_grid),
        "S", "r", "saving")


def _panel_saving(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    return [_saving_curve(ctx)], (national_saving(s.Y, s.r, p), s.r)


def _panel_classical_cross(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    eq = (investment_demand(s.r, p.I0, p.d), s.r)
    saving = replace(_saving_curve(ctx), markers={"equilibrium": eq})
    r_grid = ctx.signed_grid(s.r)
    invest = curve_from_samples(
        [investment_demand(r, p.I0, p.d) for r in r_grid], list(r_grid),
        "S", "r", name="investment", markers={"equilibrium": eq})
    return [saving, invest], eq


def _panel_is(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    curve = replace(is_curve(ctx.signed_grid(s.r), p),
                    markers={"equilibrium": (s.Y, s.r)})
    return [curve], (s.Y, s.r)


def _panel_islm(ctx: PanelContext):
    # IS re-expressed in i-space through the Fisher link so both schedules
    # share the node's (Y, i) axes
    p, s = ctx.params, ctx.state
    eq = (s.Y, s.i)
    i_grid = ctx.signed_grid(s.i)
    is_in_i = curve_from_samples(
        [is_output(i - p.piE, p) for i in i_grid], list(i_grid), "Y", "i",
        name="IS", markers={"equilibrium": eq})
    lm = replace(lm_curve(s.P, ctx.pos_grid(s.Y), p),
                 markers={"equilibrium": eq})
    return [is_in_i, lm], eq


def _panel_user_cost(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    r_grid = ctx.signed_grid(s.r)
    r_grid = r_grid[r_grid / 100.0 + p.delta >= 0.0]
    curve = curve_from_samples(
        r_grid, [user_cost(r / 100.0, p.delta, p.pK) for r in r_grid],
        "r", "UC", name="UC")
    return [curve], (s.r, user_cost(s.r / 100.0, p.delta, p.pK))


def _panel_investment(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    r_grid = ctx.signed_grid(s.r)
    curve = curve_from_samples(
        [investment_demand(r, p.I0, p.d) for r in r_grid], list(r_grid),
        "I", "r", name="investment",
        markers={"equilibrium": (investment_demand(s.r, p.I0, p.d), s.r)})
    return [curve], (investment_demand(s.r, p.I0, p.d), s.r)


def _panel_keynesian_cross(ctx: PanelContext):
    p, s = ctx.params, ctx.state
    grid = ctx.pos_grid(s.Y)
    ae = curve_from_samples(
        grid,
        [consumption(Y, s.r, p.c0, p.c1, p.T, p.e)
         + investment_demand(s.r, p.I0, p.d) + p.G for Y in grid],
        "Y", "E", name="AE", markers={"equilibrium": (s.Y, s.Y)})
    diagonal = curve_from_samples(grid, grid, "Y", "E", name="E=Y")
    return [ae, diagonal], (s.Y, s.Y)


PANEL_BUILDERS = {
    1: _panel_leisure_tradeoff,
    2: _panel_individual_supply,
    3: _panel_labor_supply,
    4: _panel_production_yl,
    5: _panel_mpl,
    6: _panel_labor_demand,
    7: _panel_labor_market,
    8: _panel_production_family,
    9: _panel_production_yk,
    10: _panel_mpk,
    11: _panel_capital_demand,
    12: _panel_solow,
    13: _panel_as,
    14: _panel_general_equilibrium,
    15: _panel_money_demand,
    16: _panel_money_market,
    17: _panel_lm,
    18: _panel_labor_market,
    19: _panel_ad,
    20: _panel_phillips,
    21: _panel_saving,
    22: _panel_classical_cross,
    23: _panel_is,
    24: _panel_islm,
    25: _panel_user_cost,
    26: _panel_investment,
    27: _panel_keynesian_cross,
}


def build_curves(node_id: int, params: Params, state: EconState, *,
                 n: int = DEFAULT_POINTS, lo: float | None = None,
                 hi: float | None = None, variant: str = "current"):
    """Curves and equilibrium marker for one node under one parameterization."""
    try:
        builder = PANEL_BUILDERS[node_id]
    except KeyError:
        raise UnknownNodeError(node_id) from None
    curves, marker = builder(PanelContext(params=params, state=state, n=n,
                                          lo=lo, hi=hi))
    if variant != "current":
        curves = [replace(c, variant=variant) for c in curves]
    return curves, marker


def build_panel(graph: BigPicture, node_id: int, *, current: tuple[Params, EconState],
                baseline: tuple[Params, EconState] | None = None,
                overlay: str = "current", dirty: bool = False,
                n: int = DEFAULT_POINTS, lo: float | None = None,
                hi: float | None = None) -> PanelPayload:
    """Assemble a PanelPayload, overlaying baseline curves when asked.

    Axis labels are taken from the node's registry-backed declaration; the
    panel-level marker always refers to the *current* parameterization.
    """
    node = graph.node(node_id)
    if overlay not in ("current", "baseline", "both"):
        raise ValueError(f"unknown overlay {overlay!r}")
    curves: list[Curve] = []
    marker = None
    if overlay in ("current", "both"):
        cur, marker = build_curves(node_id, *current, n=n, lo=lo, hi=hi)
        curves.extend(cur)
    if overlay in ("baseline", "both"):
        if baseline is None:
            baseline = current
        base, base_marker = build_curves(node_id, *baseline, n=n, lo=lo, hi=hi,
                                         variant="baseline")
        curves.extend(base)
        if marker is None:
            marker = base_marker
    for c in curves:
        assert (c.xLabel, c.yLabel) == (node.xLabel, node.yLabel), \
            f"node {node_id}: curve labels disagree with the node declaration"
    return PanelPayload(nodeId=node_id, curves=tuple(curves),
                        equilibriumMarker=marker,
                        definition=DEFINITIONS.get(node_id), dirty=dirty)
