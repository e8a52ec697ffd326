// Wire types for the scenario API; field names mirror the server exactly.

export type Side = "SupplySide" | "DemandSide" | "Integrative";
export type EdgeKind = "Derivation" | "PartOfComplex" | "DualView";

export interface DiagramNode {
  id: number;
  name: string;
  side: Side;
  xLabel: string;
  yLabel: string;
  binding: string;
  note: string;
}

export interface GraphEdge {
  from: number;
  to: number;
  kind: EdgeKind;
  note: string;
}

export interface GraphDoc {
  nodes: DiagramNode[];
  edges: GraphEdge[];
  paramOwners: Record<string, number[]>;
}

export type Point = [number, number];

export interface Curve {
  xLabel: string;
  yLabel: string;
  points: Point[];
  markers: Record<string, Point>;
  name: string;
  variant: "current" | "baseline";
}

export interface PanelDoc {
  nodeId: number;
  curves: Curve[];
  equilibriumMarker: Point | null;
  definition: string | null;
  dirty: boolean;
}

export interface ShockRecord {
  field: string;
  oldValue: number;
  newValue: number;
  timestamp: string;
}

export interface Plan {
  dirty: number[];
  trigger: string[];
}

export interface ScenarioDoc {
  id: string;
  params: Record<string, number>;
  baseline: Record<string, number>;
  shocks: ShockRecord[];
  current: Record<string, number>;
  lastPlan: Plan;
}

export interface ShockResponse {
  scenario: ScenarioDoc;
  plan: Plan;
}
