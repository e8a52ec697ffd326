import math

import pytest

from macroatlas.core import Params, money_demand, mpk, mpl, user_cost
from macroatlas.demand import is_output, lm_rate, national_saving
from macroatlas.equilibrium import phillips, short_run_ge
from macroatlas.graph import UnknownNodeError
from macroatlas.panels import (
    DEFAULT_POINTS,
    IS_DEFINITION,
    LM_DEFINITION,
    PANEL_BUILDERS,
    PanelPayload,
    build_curves,
    build_panel,
)
from macroatlas.supply import labor_demand, labor_supply, solow_solve


@pytest.fixture(scope="module")
def solved(request):
    p = Params()
    return p, short_run_ge(p)


def interp(curve, x):
    pts = curve.points
    assert pts[0][0] <= x <= pts[-1][0]
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            t = 0.0 if x1 == x0 else (x - x0) / (x1 - x0)
            return y0 + t * (y1 - y0)
    raise AssertionError("x not bracketed")


def test_every_node_has_a_builder(graph):
    assert set(PANEL_BUILDERS) == {n.id for n in graph.nodes}


def test_all_panels_build_and_match_node_labels(graph, solved):
    p, state = solved
    for node in graph.nodes:
        payload = build_panel(graph, node.id, current=(p, state))
        assert payload.nodeId == node.id
        assert payload.curves, f"node {node.id} produced no curves"
        for curve in payload.curves:
            assert curve.xLabel == node.xLabel
            assert curve.yLabel == node.yLabel
            assert len(curve.points) >= 2


def test_markers_lie_on_a_curve(graph, solved):
    p, state = solved
    for node in graph.nodes:
        payload = build_panel(graph, node.id, current=(p, state))
        if payload.equilibriumMarker is None:
            continue
        mx, my = payload.equilibriumMarker
        hits = []
        for curve in payload.curves:
            if curve.is_vertical:
                hits.append(abs(curve.points[0][0] - mx) < 1e-6)
                continue
            if curve.points[0][0] <= mx <= curve.points[-1][0]:
                hits.append(abs(interp(curve, mx) - my)
                            < 1e-6 + 5e-3 * max(1.0, abs(my)))
        assert any(hits), f"node {node.id} marker off every curve"


def test_marker_equations_hold(graph, solved):
    # the defining equation of each equilibrium panel, residual < 1e-6
    p, state = solved
    def marker(node_id, **kw):
        return build_panel(graph, node_id, current=(p, state), **kw).equilibriumMarker

    L, w = marker(7)
    assert abs(labor_supply(w, p) - labor_demand(w, p.A, p.K, p.alpha)) < 1e-6
    assert abs(mpl(p.A, p.K, L, p.alpha) - w) < 1e-6

    k, inv = marker(12)
    assert abs(p.s * p.A * k**p.alpha - (p.n + p.delta) * k) < 1e-12
    assert inv == pytest.approx((p.n + p.delta) * k)

    Y, P = marker(14)
    assert abs(Y - state.Ybar * (P / p.PE) ** (1 / p.gamma)) < 1e-6

    Ms, i = marker(16)
    assert abs(money_demand(state.P, state.Y, i, p.kY, p.b) - Ms) < 1e-6

    S, r = marker(22)
    assert abs(national_saving(state.Y, r, p) - S) < 1e-6

    Yk, _ = marker(27)
    assert abs(is_output(state.r, p) - Yk) < 1e-6

    Kd, uc = marker(11)
    assert abs(mpk(p.A, Kd, state.L, p.alpha) - uc / p.pK) < 1e-9
    assert uc == pytest.approx(user_cost(state.r / 100.0, p.delta, p.pK))


def test_islm_panel_overlay_both_counts(graph, solved):
    p, state = solved
    shocked = p.with_field("Ms", 1100.0)
    payload = build_panel(graph, 24, current=(shocked, short_run_ge(shocked)),
                          baseline=(p, state), overlay="both")
    names = [(c.name, c.variant) for c in payload.curves]
    assert names.count(("IS", "current")) == 1
    assert names.count(("IS", "baseline")) == 1
    assert names.count(("LM", "current")) == 1
    assert names.count(("LM", "baseline")) == 1
    eq_points = {c.markers["equilibrium"] for c in payload.curves
                 if "equilibrium" in c.markers}
    assert len(eq_points) == 2  # one crossing per parameterization


def test_as_panel_has_vertical_lras(graph, solved):
    p, state = solved
    payload = build_panel(graph, 13, current=(p, state))
    by_name = {c.name: c for c in payload.curves}
    assert set(by_name) == {"SRAS", "LRAS"}
    assert by_name["LRAS"].is_vertical
    assert by_name["LRAS"].points[0][0] == pytest.approx(state.Ybar)
    assert not by_name["SRAS"].is_vertical
    assert payload.equilibriumMarker == (pytest.approx(state.Ybar), p.PE)


def test_phillips_panel_anchors(graph, solved):
    p, state = solved
    payload = build_panel(graph, 20, current=(p, state))
    by_name = {c.name: c for c in payload.curves}
    assert by_name["LRPC"].is_vertical
    assert by_name["LRPC"].points[0][0] == p.Ubar
    srpc = by_name["SRPC"]
    assert interp(srpc, p.Ubar) == pytest.approx(p.piE, abs=1e-9)
    assert interp(srpc, state.Uu) == pytest.approx(
        phillips(state.Uu, p.piE, p.beta, p.Ubar), abs=1e-9)


def test_lm_and_is_definitions_attached(graph, solved):
    p, state = solved
    assert build_panel(graph, 17, current=(p, state)).definition == LM_DEFINITION
    assert build_panel(graph, 23, current=(p, state)).definition == IS_DEFINITION
    assert build_panel(graph, 14, current=(p, state)).definition is None


def test_default_density_and_overrides(graph, solved):
    p, state = solved
    payload = build_panel(graph, 23, current=(p, state))
    assert len(payload.curves[0].points) == DEFAULT_POINTS
    custom = build_panel(graph, 23, current=(p, state), n=11, lo=0.0, hi=2.0)
    pts = custom.curves[0].points
    assert len(pts) == 11
    ys = sorted(pt[1] for pt in pts)
    assert ys[0] == pytest.approx(0.0) and ys[-1] == pytest.approx(2.0)


def test_solow_panel_crossing(graph, solved):
    p, state = solved
    payload = build_panel(graph, 12, current=(p, state))
    assert {c.name for c in payload.curves} == {"s·f(k)", "(n+δ)k"}
    assert payload.equilibriumMarker[0] == pytest.approx(4.0)
    sol = solow_solve(p.s, p.n, p.delta, p.A, p.alpha)
    assert sol.kStar == pytest.approx(4.0)


def test_unknown_node_and_overlay_rejected(graph, solved):
    p, state = solved
    with pytest.raises(UnknownNodeError):
        build_curves(28, p, state)
    with pytest.raises(ValueError):
        build_panel(graph, 12, current=(p, state), overlay="sideways")


def test_payload_round_trip(graph, solved):
    p, state = solved
    payload = build_panel(graph, 24, current=(p, state), overlay="both",
                          baseline=(p, state), dirty=True)
    raw = payload.to_dict()
    assert set(raw) == {"nodeId", "curves", "equilibriumMarker", "definition",
                        "dirty"}
    assert PanelPayload.from_dict(raw) == payload


def test_vertical_saving_schedule_when_rate_insensitive(graph):
    p = Params(e=0.0)
    state = short_run_ge(p)
    payload = build_panel(graph, 21, current=(p, state))
    assert payload.curves[0].is_vertical
