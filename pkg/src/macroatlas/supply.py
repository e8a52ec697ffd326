"""Supply side: household labor choice, labor market, aggregate supply, Solow.

Households maximize log utility U = ln(cons) + theta*ln(leisure) subject to
cons = m + w*labor, leisure + labor = H.  Nonlabor income m > 0 tilts the
aggregate labor supply upward; with m = 0 income and substitution effects
offset exactly and supply is vertical at H/(1+theta) per household.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Params, mpl, production
from .roots import Bracket, SolverError, find_root_1d


class NoCrossingError(SolverError):
    """Supply and demand schedules never cross on the searched range."""


@dataclass(frozen=True)
class HouseholdChoice:
    leisure: float
    labor: float
    cons: float
    utility: float


@dataclass(frozen=True)
class SlutskyDecomposition:
    total: float         # change in labor hours
    substitution: float  # compensated change (utility held at old level)
    income: float        # residual: total - substitution


@dataclass(frozen=True)
class SolowSolution:
    kStar: float
    kGold: float
    cStar: float


def leisure_choice(w: float, theta: float, H: float, m: float) -> HouseholdChoice:
    """Optimal leisure/labor split at real wage w.

    Interior first-order condition theta*cons = w*leisure gives
    leisure = theta*(m + w*H) / ((1+theta)*w), clamped to [0, H].
    """
    if w <= 0:
        raise ValueError("leisure_choice requires w > 0")
    leisure = theta * (m + w * H) / ((1.0 + theta) * w)
    leisure = min(max(leisure, 0.0), H)
    labor = H - leisure
    cons = m + w * labor
    if cons > 0 and leisure > 0:
        utility = math.log(cons) + theta * math.log(leisure)
    else:
        utility = -math.inf
    return HouseholdChoice(leisure=leisure, labor=labor, cons=cons, utility=utility)


def _hicksian_leisure(w: float, theta: float, H: float, u0: float) -> float:
    """Leisure on the indifference curve u0 where the slope equals w.

    Tangency cons = w*leisure/theta substituted into the utility level gives
    ln(leisure) = (u0 - ln(w/theta)) / (1+theta).  Clamped to (0, H].
    """
    leisure = math.exp((u0 - math.log(w / theta)) / (1.0 + theta))
    return min(leisure, H)


def slutsky(w0: float, w1: float, theta: float, H: float, m: float) -> SlutskyDecomposition:
    """Split the labor response to a wage move into substitution and income parts."""
    if w0 <= 0 or w1 <= 0:
        raise ValueError("slutsky requires positive wages")
    if w0 == w1:
        return SlutskyDecomposition(total=0.0, substitution=0.0, income=0.0)
    base = leisure_choice(w0, theta, H, m)
    new = leisure_choice(w1, theta, H, m)
    total = new.labor - base.labor
    compensated_labor = H - _hicksian_leisure(w1, theta, H, base.utility)
    substitution = compensated_labor - base.labor
    return SlutskyDecomposition(total=total, substitution=substitution,
                                income=total - substitution)


def labor_supply(w: float, params: Params) -> float:
    """Aggregate hours supplied: Nh identical households."""
    return params.Nh * leisure_choice(w, params.theta, params.H, params.m).labor


def labor_demand(w: float, A: float, K: float, alpha: float) -> float:
    """Hours demanded where mpl = w: Ld = ((1-alpha)*A*K**alpha / w)**(1/alpha)."""
    if w <= 0:
        raise ValueError("labor_demand requires w > 0")
    return ((1.0 - alpha) * A * K**alpha / w) ** (1.0 / alpha)


def labor_market_eq(params: Params, w_max: float = 1e3,
                    tolF: float = 1e-12) -> tuple[float, float]:
    """Clearing wage and employment, (wStar, LStar).

    Bisects excess demand on (0, w_max]; demand explodes as w -> 0 while
    clamped supply stays finite, so the excess is positive at the low end
    whenever a crossing exists at all.
    """
    def excess(w: float) -> float:
        return labor_demand(w, params.A, params.K, params.alpha) - labor_supply(w, params)

    w_lo = 1e-9
    if excess(w_max) > 0:
        raise NoCrossingError(
            f"labor supply and demand do not cross on (0, {w_max:g}]")
    report = find_root_1d(excess, Bracket(w_lo, w_max, tolX=1e-13, tolF=tolF))
    w_star = report.root
    L_star = labor_demand(w_star, params.A, params.K, params.alpha)
    return w_star, L_star


def full_employment_output(params: Params) -> float:
    """Output at the labor-market clearing employment level."""
    _, L_star = labor_market_eq(params)
    return production(params.A, params.K, L_star, params.alpha)


def sras_output(P: float, PE: float, gamma: float, Ybar: float) -> float:
    """Short-run supply Y = Ybar * (P/PE)**(1/gamma); Y = Ybar exactly at P = PE."""
    if P <= 0 or PE <= 0:
        raise ValueError("sras_output requires P > 0 and PE > 0")
    if P == PE:
        return Ybar
    return Ybar * (P / PE) ** (1.0 / gamma)


def lras_output(Ybar: float) -> float:
    """Long-run supply is vertical at full-employment output."""
    return Ybar


def solow_solve(s: float, n: float, delta: float, A: float, alpha: float) -> SolowSolution:
    """Steady-state and golden-rule capital per worker for f(k) = A*k**alpha.

    kStar solves s*f(k) = (n+delta)*k, kGold solves f'(k) = n+delta, and
    cStar = f(kStar) - (n+delta)*kStar.
    """
    if n + delta <= 0:
        raise ValueError("solow_solve requires n + delta > 0")
    if not 0 < s < 1:
        raise ValueError("solow_solve requires 0 < s < 1")
    k_star = (s * A / (n + delta)) ** (1.0 / (1.0 - alpha))
    k_gold = (alpha * A / (n + delta)) ** (1.0 / (1.0 - alpha))
    c_star = A * k_star**alpha - (n + delta) * k_star
    return SolowSolution(kStar=k_star, kGold=k_gold, cStar=c_star)
