// Renders one PanelDoc into a small SVG. Axis labels are copied from the
// payload character for character; nothing is recomputed client-side.

import type { Curve, DiagramNode, PanelDoc, Point } from "./types.js";

export const PANEL_W = 228;
export const PANEL_H = 186;
const PLOT = { left: 34, right: 8, top: 24, bottom: 22 };
const COLORS = ["#1f6fb2", "#c23b22", "#2e8540", "#8451a1", "#b8860b"];

export interface Extent {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export function extentOf(panel: PanelDoc): Extent {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const curve of panel.curves) {
    for (const [x, y] of curve.points) {
      xs.push(x);
      ys.push(y);
    }
  }
  if (panel.equilibriumMarker) {
    xs.push(panel.equilibriumMarker[0]);
    ys.push(panel.equilibriumMarker[1]);
  }
  let [xMin, xMax] = [Math.min(...xs), Math.max(...xs)];
  let [yMin, yMax] = [Math.min(...ys), Math.max(...ys)];
  if (xMin === xMax) [xMin, xMax] = [xMin - 1, xMax + 1];
  if (yMin === yMax) [yMin, yMax] = [yMin - 1, yMax + 1];
  const padX = 0.05 * (xMax - xMin);
  const padY = 0.08 * (yMax - yMin);
  return { xMin: xMin - padX, xMax: xMax + padX, yMin: yMin - padY, yMax: yMax + padY };
}

export interface Scaler {
  sx(x: number): number;
  sy(y: number): number;
}

export function makeScaler(extent: Extent): Scaler {
  const innerW = PANEL_W - PLOT.left - PLOT.right;
  const innerH = PANEL_H - PLOT.top - PLOT.bottom;
  return {
    sx: (x) => PLOT.left + ((x - extent.xMin) / (extent.xMax - extent.xMin)) * innerW,
    sy: (y) => PLOT.top + ((extent.yMax - y) / (extent.yMax - extent.yMin)) * innerH,
  };
}

export function curvePath(curve: Curve, scale: Scaler): string {
  return curve.points
    .map(([x, y], i) => `${i === 0 ? "M" : "L"}${scale.sx(x).toFixed(2)},${scale.sy(y).toFixed(2)}`)
    .join(" ");
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  doc: Document, tag: K, attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const el = doc.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

/** Build the panel SVG. The caller owns insertion and highlight classes. */
export function renderPanel(doc: Document, node: DiagramNode, panel: PanelDoc): SVGSVGElement {
  const svg = svgEl(doc, "svg", {
    viewBox: `0 0 ${PANEL_W} ${PANEL_H}`,
    class: "panel-svg",
    role: "img",
  });
  if (panel.definition) {
    const tip = svgEl(doc, "title");
    tip.textContent = panel.definition;
    svg.appendChild(tip);
  }

  const title = svgEl(doc, "text", {
    x: String(PANEL_W / 2), y: "14", "text-anchor": "middle",
    class: "panel-title",
  });
  title.textContent = `${node.id}. ${node.name}`;
  svg.appendChild(title);

  const extent = extentOf(panel);
  const scale = makeScaler(extent);
  const x0 = scale.sx(extent.xMin);
  const y0 = scale.sy(extent.yMin);

  svg.appendChild(svgEl(doc, "line", {
    x1: String(x0), y1: String(y0), x2: String(scale.sx(extent.xMax)),
    y2: String(y0), class: "axis",
  }));
  svg.appendChild(svgEl(doc, "line", {
    x1: String(x0), y1: String(y0), x2: String(x0),
    y2: String(scale.sy(extent.yMax)), class: "axis",
  }));

  const xLab = svgEl(doc, "text", {
    x: String(PANEL_W - PLOT.right), y: String(PANEL_H - 6),
    "text-anchor": "end", class: "axis-label x-label",
  });
  xLab.textContent = panel.curves[0]?.xLabel ?? node.xLabel;
  svg.appendChild(xLab);

  const yLab = svgEl(doc, "text", {
    x: "6", y: String(PLOT.top - 8), "text-anchor": "start",
    class: "axis-label y-label",
  });
  yLab.textContent = panel.curves[0]?.yLabel ?? node.yLabel;
  svg.appendChild(yLab);

  panel.curves.forEach((curve, index) => {
    const attrs: Record<string, string> = {
      d: curvePath(curve, scale),
      fill: "none",
      stroke: COLORS[index % COLORS.length],
      "stroke-width": "1.4",
      class: `curve variant-${curve.variant}`,
      "data-name": curve.name,
    };
    if (curve.variant === "baseline") attrs["stroke-dasharray"] = "5 3";
    svg.appendChild(svgEl(doc, "path", attrs));
  });

  if (panel.equilibriumMarker) {
    const [mx, my] = panel.equilibriumMarker as Point;
    svg.appendChild(svgEl(doc, "circle", {
      cx: scale.sx(mx).toFixed(2), cy: scale.sy(my).toFixed(2), r: "3",
      class: "marker",
    }));
  }
  return svg;
}
