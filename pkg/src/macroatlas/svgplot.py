"""Hand-emitted SVG rendering of panel payloads: polylines, ticks, text.

No plotting dependency; output is deterministic for a given payload (floats
are formatted with %.6g everywhere) so files can be golden-tested byte for
byte.  Baseline-variant curves are dashed, current ones solid, matching the
before/after overlay convention.
"""

from __future__ import annotations

from .panels import PanelPayload

WIDTH, HEIGHT = 640.0, 480.0
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64.0, 24.0, 40.0, 48.0
PALETTE = ("#1f6fb2", "#c23b22", "#2e8540", "#8451a1", "#b8860b")


def _fmt(value: float) -> str:
    text = f"{value:.6g}"
    return "0" if text == "-0" else text


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi == lo:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def render_panel(payload: PanelPayload, title: str, xLabel: str, yLabel: str) -> str:
    """Standalone SVG for one panel."""
    xs, ys = [], []
    for curve in payload.curves:
        xs.extend(p[0] for p in curve.points)
        ys.extend(p[1] for p in curve.points)
    if payload.equilibriumMarker:
        xs.append(payload.equilibriumMarker[0])
        ys.append(payload.equilibriumMarker[1])
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    pad_x = 0.04 * (x_hi - x_lo)
    pad_y = 0.06 * (y_hi - y_lo)
    x_lo, x_hi = x_lo - pad_x, x_hi + pad_x
    y_lo, y_hi = y_lo - pad_y, y_hi + pad_y

    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def sx(x: float) -> float:
        return MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return MARGIN_T + (y_hi - y) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(WIDTH)}" '
        f'height="{_fmt(HEIGHT)}" viewBox="0 0 {_fmt(WIDTH)} {_fmt(HEIGHT)}">',
        f'<rect width="{_fmt(WIDTH)}" height="{_fmt(HEIGHT)}" fill="white"/>',
        f'<text x="{_fmt(WIDTH / 2)}" y="22" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
    ]

    # axes
    x0, y0 = sx(x_lo), sy(y_lo)
    x1, y1 = sx(x_hi), sy(y_hi)
    out.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" '
               f'y2="{_fmt(y0)}" stroke="black" stroke-width="1"/>')
    out.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x0)}" '
               f'y2="{_fmt(y1)}" stroke="black" stroke-width="1"/>')
    for tick in _ticks(x_lo + pad_x, x_hi - pad_x):
        tx = sx(tick)
        out.append(f'<line x1="{_fmt(tx)}" y1="{_fmt(y0)}" x2="{_fmt(tx)}" '
                   f'y2="{_fmt(y0 + 4)}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_fmt(tx)}" y="{_fmt(y0 + 16)}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="10">{_fmt(tick)}</text>')
    for tick in _ticks(y_lo + pad_y, y_hi - pad_y):
        ty = sy(tick)
        out.append(f'<line x1="{_fmt(x0 - 4)}" y1="{_fmt(ty)}" x2="{_fmt(x0)}" '
                   f'y2="{_fmt(ty)}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_fmt(x0 - 7)}" y="{_fmt(ty + 3)}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="10">{_fmt(tick)}</text>')
    out.append(f'<text x="{_fmt(WIDTH - MARGIN_R)}" y="{_fmt(y0 + 34)}" '
               f'text-anchor="end" font-family="sans-serif" font-size="12" '
               f'font-style="italic">{xLabel}</text>')
    out.append(f'<text x="{_fmt(MARGIN_L - 44)}" y="{_fmt(MARGIN_T - 12)}" '
               f'text-anchor="start" font-family="sans-serif" font-size="12" '
               f'font-style="italic">{yLabel}</text>')

    # curves and legend
    legend_y = MARGIN_T + 6.0
    for index, curve in enumerate(payload.curves):
        color = PALETTE[index % len(PALETTE)]
        dash = ' stroke-dasharray="6 4"' if curve.variant == "baseline" else ""
        pts = " ".join(f"{_fmt(sx(px))},{_fmt(sy(py))}" for px, py in curve.points)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5"'
                   f'{dash} points="{pts}"/>')
        label = curve.name or f"curve {index + 1}"
        if curve.variant == "baseline":
            label += " (baseline)"
        out.append(f'<text x="{_fmt(WIDTH - MARGIN_R - 4)}" y="{_fmt(legend_y)}" '
                   f'text-anchor="end" font-family="sans-serif" font-size="10" '
                   f'fill="{color}">{label}</text>')
        legend_y += 13.0

    if payload.equilibriumMarker:
        mx, my = payload.equilibriumMarker
        out.append(f'<circle cx="{_fmt(sx(mx))}" cy="{_fmt(sy(my))}" r="4" '
                   f'fill="black"/>')
        out.append(f'<text x="{_fmt(sx(mx) + 7)}" y="{_fmt(sy(my) - 7)}" '
                   f'font-family="sans-serif" font-size="10">'
                   f'({_fmt(mx)}, {_fmt(my)})</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
