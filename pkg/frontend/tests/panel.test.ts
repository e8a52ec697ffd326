import { describe, expect, it } from "vitest";

import { curvePath, extentOf, makeScaler, PANEL_H, PANEL_W, renderPanel } from "../src/panel.js";
import type { GraphDoc, PanelDoc } from "../src/types.js";
import { fixture } from "./helpers.js";

const graph = fixture<GraphDoc>("graph");
const panels = fixture<Record<string, PanelDoc>>("panels");
const panelsBoth = fixture<Record<string, PanelDoc>>("panels_both");

const nodeById = (id: number) => graph.nodes.find((n) => n.id === id)!;

describe("panel geometry", () => {
  it("computes a padded extent covering every curve and the marker", () => {
    const panel = panels["24"];
    const extent = extentOf(panel);
    for (const curve of panel.curves) {
      for (const [x, y] of curve.points) {
        expect(x).toBeGreaterThanOrEqual(extent.xMin);
        expect(x).toBeLessThanOrEqual(extent.xMax);
        expect(y).toBeGreaterThanOrEqual(extent.yMin);
        expect(y).toBeLessThanOrEqual(extent.yMax);
      }
    }
  });

  it("scales into the panel viewport", () => {
    const panel = panels["14"];
    const scale = makeScaler(extentOf(panel));
    for (const curve of panel.curves) {
      for (const [x, y] of curve.points) {
        expect(scale.sx(x)).toBeGreaterThanOrEqual(0);
        expect(scale.sx(x)).toBeLessThanOrEqual(PANEL_W);
        expect(scale.sy(y)).toBeGreaterThanOrEqual(0);
        expect(scale.sy(y)).toBeLessThanOrEqual(PANEL_H);
      }
    }
  });

  it("emits one path command per point", () => {
    const panel = panels["23"];
    const d = curvePath(panel.curves[0], makeScaler(extentOf(panel)));
    expect(d.startsWith("M")).toBe(true);
    expect(d.split("L").length).toBe(panel.curves[0].points.length);
  });

  it("handles vertical schedules (LRAS) without degenerating", () => {
    const panel = panels["13"];
    const lras = panel.curves.find((c) => c.name === "LRAS")!;
    const d = curvePath(lras, makeScaler(extentOf(panel)));
    const xs = new Set([...d.matchAll(/[ML]([\d.]+),/g)].map((m) => m[1]));
    expect(xs.size).toBe(1); // one x coordinate, repeated
  });
});

describe("panel rendering", () => {
  it("copies axis labels from the payload character for character", () => {
    const panel = panels["20"];
    const svg = renderPanel(document, nodeById(20), panel);
    expect(svg.querySelector(".x-label")!.textContent).toBe("U");
    expect(svg.querySelector(".y-label")!.textContent).toBe("π");
    expect(panel.curves[0].xLabel).toBe("U");
    expect(panel.curves[0].yLabel).toBe("π");
  });

  it("shows the verbatim LM and IS definitions as tooltips", () => {
    const lm = renderPanel(document, nodeById(17), panels["17"]);
    expect(lm.querySelector("title")!.textContent).toBe(
      "The combinations of interest rates and levels of real income for "
      + "which the money market is in equilibrium");
    const is = renderPanel(document, nodeById(23), panels["23"]);
    expect(is.querySelector("title")!.textContent).toBe(
      "The equilibria where total private investment equals total saving");
  });

  it("dashes baseline curves and keeps current ones solid", () => {
    const svg = renderPanel(document, nodeById(24), panelsBoth["24"]);
    const dashed = svg.querySelectorAll("path[stroke-dasharray]");
    const solid = svg.querySelectorAll("path:not([stroke-dasharray])");
    expect(dashed.length).toBe(2);  // IS and LM baselines
    expect(solid.length).toBe(2);
    for (const path of dashed) {
      expect(path.getAttribute("class")).toContain("variant-baseline");
    }
  });

  it("marks the equilibrium", () => {
    const svg = renderPanel(document, nodeById(14), panels["14"]);
    expect(svg.querySelector("circle.marker")).not.toBeNull();
    expect(svg.querySelector(".panel-title")!.textContent).toBe(
      "14. A Diagram for General Equilibrium in the Macroeconomy");
  });
});
