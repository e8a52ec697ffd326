"""General equilibrium: short-run AD-AS crossing, long-run construction, and
the unemployment/inflation bridge.

The short run finds the price level where aggregate demand meets short-run
aggregate supply; the labor block still pins (w, L) and hence Ybar.  The long
run is built directly: Y = Ybar, r inverts IS at Ybar, P inverts LM, and the
reported price level is its own fulfilled expectation.
"""

from __future__ import annotations

from .core import Curve, EconState, Params, consumption, curve_from_samples, investment_demand
from .demand import ad_output, islm_solve, is_output
from .roots import Bracket, NoConvergenceError, find_root_1d
from .supply import NoCrossingError, labor_market_eq, sras_output
import math


def okun_u(Y: float, Ybar: float, Ubar: float, omega: float) -> float:
    """Gap rule Uu = Ubar - omega*(Y - Ybar)/Ybar linking output to unemployment."""
    if Ybar <= 0:
        raise ValueError("okun_u requires Ybar > 0")
    return Ubar - omega * (Y - Ybar) / Ybar


def phillips(Uu: float, piE: float, beta: float, Ubar: float) -> float:
    """Expectations-augmented inflation pi = piE - beta*(Uu - Ubar)."""
    return piE - beta * (Uu - Ubar)


def srpc_curve(u_grid, piE: float, beta: float, Ubar: float) -> Curve:
    """Short-run Phillips schedule over an unemployment grid."""
    return curve_from_samples(u_grid, [phillips(u, piE, beta, Ubar) for u in u_grid],
                              "U", "π", name="SRPC")


def lrpc_curve(Ubar: float, pi_lo: float, pi_hi: float) -> Curve:
    """Vertical long-run Phillips schedule at the natural rate."""
    if not pi_lo < pi_hi:
        raise ValueError("lrpc_curve requires pi_lo < pi_hi")
    return Curve(xLabel="U", yLabel="π", points=((Ubar, pi_lo), (Ubar, pi_hi)),
                 name="LRPC")


def _assemble_state(params: Params, Y: float, i: float, r: float, P: float,
                    w: float, L: float, Ybar: float) -> EconState:
    p = params
    C = consumption(Y, r, p.c0, p.c1, p.T, p.e)
    I = investment_demand(r, p.I0, p.d)
    Uu = okun_u(Y, Ybar, p.Ubar, p.omega)
    state = EconState(
        Y=Y, C=C, Ipriv=I, Snat=Y - C - p.G, P=P, i=i, r=r, w=w, L=L,
        Uu=Uu, pi=phillips(Uu, p.piE, p.beta, p.Ubar), Ybar=Ybar,
        leisure=p.Nh * p.H - L,
    )
    state.validate(p)
    return state


def short_run_ge(params: Params) -> EconState:
    """Solve ad_output(P) = sras_output(P) for the short-run equilibrium.

    The difference is strictly decreasing in P (AD falls, SRAS rises), so a
    geometric expansion around PE always brackets the unique crossing.
    """
    p = params
    w_star, L_star = labor_market_eq(p)
    Ybar = p.A * p.K**p.alpha * L_star**(1.0 - p.alpha)

    def gap(P: float) -> float:
        return ad_output(P, p) - sras_output(P, p.PE, p.gamma, Ybar)

    lo, hi = p.PE / 4.0, p.PE * 4.0
    g_lo, g_hi = gap(lo), gap(hi)
    for _ in range(60):
        if g_lo > 0 and g_hi < 0:
            break
        if g_lo <= 0:
            lo /= 4.0
            g_lo = gap(lo)
        if g_hi >= 0:
            hi *= 4.0
            g_hi = gap(hi)
    else:
        raise NoCrossingError("AD and SRAS do not cross for P > 0")

    report = find_root_1d(gap, Bracket(lo, hi, tolX=1e-14, tolF=1e-10))
    P_star = report.root
    Y, i, r = islm_solve(P_star, p)
    return _assemble_state(p, Y, i, r, P_star, w_star, L_star, Ybar)


def long_run_ge(params: Params) -> EconState:
    """Long-run equilibrium by construction: no fixed-point iteration.

    Y = Ybar exactly; r inverts IS at Ybar; i = r + piE; P inverts LM at
    (Ybar, i).  The resulting P is the price expectation that would make the
    short run reproduce this state.
    """
    p = params
    w_star, L_star = labor_market_eq(p)
    Ybar = p.A * p.K**p.alpha * L_star**(1.0 - p.alpha)
    r = (p.c0 - p.c1 * p.T + p.I0 + p.G - (1.0 - p.c1) * Ybar) / (p.e + p.d)
    i = r + p.piE
    P = p.Ms * math.exp(p.b * i) / (p.kY * Ybar)
    return _assemble_state(p, Ybar, i, r, P, w_star, L_star, Ybar)


def expectations_sweep(params: Params, tol: float = 1e-6,
                       max_rounds: int = 200) -> tuple[EconState, int]:
    """Adaptive-expectations iteration PE <- P until the short run settles.

    Returns the fixed-point state and the number of rounds used; raises
    NoConvergenceError if max_rounds is exhausted.  Exists as a consistency
    check on long_run_ge, which computes the same point directly.
    """
    p = params
    for round_no in range(1, max_rounds + 1):
        state = short_run_ge(p)
        if abs(state.P - p.PE) < tol:
            return state, round_no
        p = p.with_field("PE", state.P)
    raise NoConvergenceError(
        f"expectations sweep did not settle within {max_rounds} rounds")
