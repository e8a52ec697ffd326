import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from macroatlas.core import Params, mpl, production
from macroatlas.supply import (
    NoCrossingError,
    full_employment_output,
    labor_demand,
    labor_market_eq,
    labor_supply,
    leisure_choice,
    lras_output,
    slutsky,
    solow_solve,
    sras_output,
)

W_STAR = (4 + math.sqrt(816)) / 16  # quadratic oracle for the default market


# -- household choice ---------------------------------------------------------

def test_leisure_choice_closed_form():
    c = leisure_choice(1.0, theta=1.0, H=16.0, m=8.0)
    assert (c.leisure, c.labor, c.cons) == (12.0, 4.0, 12.0)
    c = leisure_choice(2.0, theta=1.0, H=16.0, m=8.0)
    assert (c.leisure, c.labor, c.cons) == (10.0, 6.0, 20.0)


def test_leisure_choice_first_order_condition():
    c = leisure_choice(1.7, theta=0.8, H=16.0, m=5.0)
    assert c.utility > -math.inf
    assert 0.8 * c.cons == pytest.approx(1.7 * c.leisure, abs=1e-12)
    assert c.leisure + c.labor == pytest.approx(16.0)


def test_leisure_choice_without_nonlabor_income_is_wage_free():
    for w in (0.5, 1.0, 3.0, 50.0):
        assert leisure_choice(w, theta=1.0, H=16.0, m=0.0).labor == pytest.approx(8.0)


def test_leisure_choice_clamps_below_reservation_wage():
    c = leisure_choice(0.1, theta=1.0, H=16.0, m=8.0)  # reservation is 0.5
    assert c.labor == 0.0 and c.leisure == 16.0 and c.cons == 8.0


def test_leisure_choice_rejects_nonpositive_wage():
    with pytest.raises(ValueError):
        leisure_choice(0.0, theta=1.0, H=16.0, m=8.0)


# -- Slutsky decomposition ----------------------------------------------------

def test_slutsky_no_change_is_zero():
    d = slutsky(1.3, 1.3, theta=1.0, H=16.0, m=8.0)
    assert d.total == d.substitution == d.income == 0.0


def test_slutsky_worked_decomposition():
    # Hicksian oracle: compensated leisure at w1=2 is sqrt(144/2)
    d = slutsky(1.0, 2.0, theta=1.0, H=16.0, m=8.0)
    assert d.total == pytest.approx(2.0, abs=1e-12)
    assert d.substitution == pytest.approx(16.0 - math.sqrt(144.0 / 2.0) - 4.0, abs=1e-12)
    assert d.substitution == pytest.approx(3.5147, abs=5e-5)
    assert d.income == pytest.approx(-1.5147, abs=5e-5)


@given(w0=st.floats(min_value=0.6, max_value=4.0),
       w1=st.floats(min_value=0.6, max_value=4.0),
       m=st.floats(min_value=0.5, max_value=20.0))
def test_slutsky_identity_and_compensated_law(w0, w1, m):
    d = slutsky(w0, w1, theta=1.0, H=16.0, m=m)
    assert d.total == pytest.approx(d.substitution + d.income, abs=1e-9)
    if w1 > w0:
        assert d.substitution >= -1e-12


# -- labor market -------------------------------------------------------------

def test_labor_supply_examples(params):
    assert labor_supply(1.0, params) == pytest.approx(400.0)
    assert labor_supply(2.0, params) == pytest.approx(600.0)
    assert labor_supply(1e7, params) == pytest.approx(800.0, abs=1e-2)


def test_labor_supply_monotone_when_m_positive(params):
    ws = np.linspace(0.6, 8.0, 80)
    hours = [labor_supply(w, params) for w in ws]
    assert all(a < b for a, b in zip(hours, hours[1:]))


def test_labor_demand_examples():
    assert labor_demand(1.0, A=1, K=10_000, alpha=0.5) == pytest.approx(2500.0)
    assert labor_demand(5.0, A=1, K=10_000, alpha=0.5) == pytest.approx(100.0)
    for w in (0.7, 1.9, 4.2):
        L = labor_demand(w, A=1, K=10_000, alpha=0.5)
        assert mpl(1, 10_000, L, 0.5) == pytest.approx(w, abs=1e-10)


def test_labor_market_equilibrium_default(params):
    w_star, L_star = labor_market_eq(params)
    assert w_star == pytest.approx(W_STAR, abs=1e-10)
    assert L_star == pytest.approx(2500.0 / W_STAR**2, rel=1e-10)
    assert abs(labor_supply(w_star, params) - labor_demand(
        w_star, params.A, params.K, params.alpha)) < 1e-10
    assert mpl(params.A, params.K, L_star, params.alpha) == pytest.approx(
        w_star, abs=1e-10)


def test_labor_market_scale_invariance(params):
    doubled = params.with_field("Nh", 200.0).with_field("K", 20_000.0)
    w0, L0 = labor_market_eq(params)
    w1, L1 = labor_market_eq(doubled)
    assert w1 == pytest.approx(w0, rel=1e-10)
    assert L1 == pytest.approx(2 * L0, rel=1e-10)


def test_labor_market_no_crossing(params):
    with pytest.raises(NoCrossingError):
        labor_market_eq(params.with_field("m", 1e9))


def test_full_employment_output(params):
    ybar = full_employment_output(params)
    _, L_star = labor_market_eq(params)
    assert ybar == pytest.approx(100.0 * math.sqrt(L_star), rel=1e-12)
    assert ybar == pytest.approx(2456.6, abs=0.05)
    assert full_employment_output(params.with_field("A", 2.0)) > ybar
    scaled = params.with_field("Nh", 200.0).with_field("K", 20_000.0)
    assert full_employment_output(scaled) == pytest.approx(2 * ybar, rel=1e-8)


# -- aggregate supply ----------------------------------------------------------

def test_sras_anchors_at_expected_price():
    assert sras_output(1.0, PE=1.0, gamma=1.0, Ybar=100.0) == 100.0
    assert sras_output(1.1, PE=1.0, gamma=1.0, Ybar=100.0) == pytest.approx(110.0)
    assert lras_output(2456.0) == 2456.0


def test_sras_flattens_toward_lras_for_large_gamma():
    for P in (0.5, 0.9, 1.4):
        assert sras_output(P, PE=1.0, gamma=1e6, Ybar=100.0) == pytest.approx(
            100.0, rel=1e-5)


def test_sras_scaling_identity():
    # with PE a power of two the ratio P/PE is exact in floats
    for x in (0.75, 1.21, 2.5):
        lhs = sras_output(2.0 * x, PE=2.0, gamma=2.0, Ybar=100.0) / 100.0
        assert lhs == x ** 0.5


def test_sras_rejects_nonpositive_prices():
    with pytest.raises(ValueError):
        sras_output(0.0, PE=1.0, gamma=1.0, Ybar=1.0)
    with pytest.raises(ValueError):
        sras_output(1.0, PE=-1.0, gamma=1.0, Ybar=1.0)


# -- Solow ----------------------------------------------------------------------

def test_solow_reference_solution():
    sol = solow_solve(s=0.2, n=0.02, delta=0.08, A=1.0, alpha=0.5)
    assert sol.kStar == pytest.approx(4.0, abs=1e-12)
    assert sol.kGold == pytest.approx(25.0, abs=1e-12)
    assert sol.cStar == pytest.approx(1.6, abs=1e-12)
    # the golden-rule condition: f'(kGold) equals depreciation plus growth
    assert 0.5 * sol.kGold ** -0.5 == pytest.approx(0.1, abs=1e-14)


def test_solow_golden_rule_saving_equals_capital_share():
    sol = solow_solve(s=0.5, n=0.02, delta=0.08, A=1.0, alpha=0.5)
    assert sol.kStar == pytest.approx(sol.kGold, abs=1e-12)


def test_solow_consumption_peaks_at_golden_rule():
    grid = np.arange(0.05, 0.951, 0.05)
    cs = [solow_solve(s, 0.02, 0.08, 1.0, 0.5).cStar for s in grid]
    assert grid[int(np.argmax(cs))] == pytest.approx(0.5)


def test_solow_rejects_degenerate_inputs():
    with pytest.raises(ValueError):
        solow_solve(s=0.2, n=0.0, delta=0.0, A=1.0, alpha=0.5)
    with pytest.raises(ValueError):
        solow_solve(s=0.0, n=0.02, delta=0.08, A=1.0, alpha=0.5)


def test_steady_state_balances_saving_and_dilution():
    sol = solow_solve(s=0.31, n=0.013, delta=0.06, A=1.4, alpha=0.33)
    f_k = 1.4 * sol.kStar ** 0.33
    assert 0.31 * f_k == pytest.approx((0.013 + 0.06) * sol.kStar, rel=1e-12)
    assert sol.cStar == pytest.approx(f_k - (0.013 + 0.06) * sol.kStar, rel=1e-12)
