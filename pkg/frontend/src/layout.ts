// Grid placement mirroring the poster's two bands: supply-side panels on top,
// demand-side panels below, with the integrative panels (general equilibrium
// and the Phillips curve) emphasized in a column on the right.

import type { DiagramNode } from "./types.js";

export const BAND_COLUMNS = 7;
export const INTEGRATIVE_COLUMN = BAND_COLUMNS + 1;

export interface Placement {
  id: number;
  column: number; // 1-based CSS grid column
  row: number;    // 1-based CSS grid row
  rowSpan: number;
}

export function layoutPanels(nodes: DiagramNode[]): Map<number, Placement> {
  const byId = new Map(nodes.map((n) => [n.id, n]));
  const supply = nodes.filter((n) => n.side === "SupplySide").map((n) => n.id)
    .sort((a, b) => a - b);
  const demand = nodes.filter((n) => n.side === "DemandSide").map((n) => n.id)
    .sort((a, b) => a - b);
  const integrative = nodes.filter((n) => n.side === "Integrative")
    .map((n) => n.id).sort((a, b) => a - b);

  const supplyRows = Math.ceil(supply.length / BAND_COLUMNS);
  const placements = new Map<number, Placement>();

  supply.forEach((id, i) => {
    placements.set(id, {
      id,
      column: 1 + (i % BAND_COLUMNS),
      row: 1 + Math.floor(i / BAND_COLUMNS),
      rowSpan: 1,
    });
  });
  demand.forEach((id, i) => {
    placements.set(id, {
      id,
      column: 1 + (i % BAND_COLUMNS),
      row: supplyRows + 1 + Math.floor(i / BAND_COLUMNS),
      rowSpan: 1,
    });
  });
  const demandRows = Math.ceil(demand.length / BAND_COLUMNS);
  const totalRows = supplyRows + demandRows;
  const span = Math.max(1, Math.floor(totalRows / Math.max(integrative.length, 1)));
  integrative.forEach((id, i) => {
    placements.set(id, {
      id,
      column: INTEGRATIVE_COLUMN,
      row: 1 + i * span,
      rowSpan: span,
    });
  });

  if (placements.size !== byId.size) {
    throw new Error("layout dropped a node");
  }
  return placements;
}

// Cell geometry used for the edge overlay; pure arithmetic so the overlay is
// identical in tests and the browser.
export const CELL_W = 228;
export const CELL_H = 186;
export const CELL_GAP = 10;

export function cellCenter(p: Placement): { x: number; y: number } {
  const x = (p.column - 1) * (CELL_W + CELL_GAP) + CELL_W / 2;
  const spanH = p.rowSpan * CELL_H + (p.rowSpan - 1) * CELL_GAP;
  const y = (p.row - 1) * (CELL_H + CELL_GAP) + spanH / 2;
  return { x, y };
}
