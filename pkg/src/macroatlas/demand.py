"""Demand side: money market and LM, goods market crosses, IS, and AD.

The goods market has two equivalent views: the expenditure fixed point
Y = C(Y,r) + I(r) + G and the saving-investment crossing S(Y,r) = I(r).
Their shared locus is the IS schedule Y(r).  The money market pins the LM
schedule i(Y, P); the Fisher link r = i - piE bridges the two blocks.
"""

from __future__ import annotations

import math

from .core import Curve, Params, consumption, curve_from_samples, investment_demand, money_demand
from .roots import Bracket, SolveReport, find_root_1d, solve_2d


def money_market_eq(Ms: float, P: float, Y: float, kY: float, b: float) -> float:
    """Rate clearing the money market: iStar = ln(P*kY*Y/Ms) / b."""
    if Ms <= 0 or P <= 0 or Y <= 0:
        raise ValueError("money_market_eq requires Ms, P, Y > 0")
    return math.log(P * kY * Y / Ms) / b


def lm_rate(Y: float, P: float, params: Params) -> float:
    """The LM schedule: money-market clearing rate at each (Y, P)."""
    return money_market_eq(params.Ms, P, Y, params.kY, params.b)


def national_saving(Y: float, r: float, params: Params) -> float:
    """Snat = Y - C(Y, r) - G."""
    c = consumption(Y, r, params.c0, params.c1, params.T, params.e)
    return Y - c - params.G


def keynesian_cross_solve(r: float, params: Params) -> float:
    """Output where planned expenditure equals output at interest rate r.

    Closed form of the fixed point Y = C(Y,r) + I(r) + G:
    Y = (c0 - c1*T + I0 + G - (e+d)*r) / (1 - c1).
    """
    if params.c1 >= 1:
        raise ValueError("keynesian cross requires c1 < 1")
    p = params
    return (p.c0 - p.c1 * p.T + p.I0 + p.G - (p.e + p.d) * r) / (1.0 - p.c1)


def classical_cross_solve(Y: float, params: Params) -> float:
    """Rate where national saving equals investment at income Y.

    Solved numerically: the excess S(Y,r) - I(r) is strictly increasing in r
    with slope e + d, so a widening bracket around the algebraic guess always
    straddles the root.
    """
    p = params
    if p.e + p.d <= 0:
        raise ValueError("classical cross requires e + d > 0")

    def excess(r: float) -> float:
        return national_saving(Y, r, p) - investment_demand(r, p.I0, p.d)

    guess = (p.c0 - p.c1 * p.T + p.I0 + p.G - (1.0 - p.c1) * Y) / (p.e + p.d)
    span = 10.0
    while excess(guess - span) > 0 or excess(guess + span) < 0:
        span *= 4.0
        if span > 1e12:
            raise ValueError("saving and investment do not cross")
    report = find_root_1d(excess, Bracket(guess - span, guess + span, tolF=1e-12))
    return report.root


def is_output(r: float, params: Params) -> float:
    """The IS schedule Y(r): goods-market equilibrium output at rate r."""
    return keynesian_cross_solve(r, params)


def islm_solve(P: float, params: Params) -> tuple[float, float, float]:
    """Joint goods/money equilibrium (Y, i, r) at price level P.

    Solves the 2D system {Y - IS(i - piE), i - LM(Y, P)} by damped Newton,
    with a nested-bisection fallback.  r = i - piE.
    """
    if P <= 0:
        raise ValueError("islm_solve requires P > 0")
    p = params

    def F(Y: float, i: float) -> tuple[float, float]:
        return (Y - is_output(i - p.piE, p), i - lm_rate(Y, P, p))

    y0 = is_output(0.0, p)
    if y0 <= 0:
        y0 = 1.0
    start = (y0, lm_rate(y0, P, p))
    y_hi = max(3.0 * y0, 10.0)
    i_lo = lm_rate(1e-6, P, p)
    i_hi = lm_rate(y_hi, P, p) + 1.0
    fallback = (Bracket(1e-6, y_hi, tolX=1e-13, tolF=1e-12),
                Bracket(i_lo, i_hi, tolX=1e-14, tolF=1e-13))
    report: SolveReport = solve_2d(F, start, tolF=1e-11, fallback=fallback)
    Y, i = report.root  # type: ignore[misc]
    return Y, i, i - p.piE


def ad_output(P: float, params: Params) -> float:
    """Aggregate demand: the output component of the IS-LM solution at P."""
    return islm_solve(P, params)[0]


# -- sampled schedules ---------------------------------------------------------

def lm_curve(P: float, y_grid, params: Params) -> Curve:
    """LM sampled over an income grid at price level P."""
    return curve_from_samples(y_grid, [lm_rate(Y, P, params) for Y in y_grid],
                              "Y", "i", name="LM")


def is_curve(r_grid, params: Params) -> Curve:
    """IS sampled over a rate grid; output on the x axis."""
    return curve_from_samples([is_output(r, params) for r in r_grid],
                              list(r_grid), "Y", "r", name="IS")


def ad_curve(p_grid, params: Params) -> Curve:
    """AD sampled over a price grid; output on the x axis."""
    return curve_from_samples([ad_output(P, params) for P in p_grid],
                              list(p_grid), "Y", "P", name="AD")
