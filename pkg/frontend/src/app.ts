// The explorer: a grid of 27 linked panels with parameter sliders, shock
// propagation highlighting, and provenance-channel inspection.

import { ApiClient, ApiError } from "./api.js";
import { CELL_GAP, CELL_H, CELL_W, cellCenter, layoutPanels, Placement } from "./layout.js";
import { renderPanel } from "./panel.js";
import { pathUnion, provenancePaths } from "./paths.js";
import type { DiagramNode, GraphDoc, PanelDoc, ScenarioDoc } from "./types.js";

interface SliderSpec {
  field: string;
  min: number;
  max: number;
  step: number;
}

const SLIDERS: SliderSpec[] = [
  { field: "Ms", min: 600, max: 1600, step: 10 },
  { field: "G", min: 150, max: 450, step: 5 },
  { field: "A", min: 0.6, max: 1.6, step: 0.01 },
  { field: "s", min: 0.05, max: 0.6, step: 0.01 },
];

export class Explorer {
  readonly api: ApiClient;
  private readonly root: HTMLElement;
  private readonly doc: Document;
  graph: GraphDoc | null = null;
  scenario: ScenarioDoc | null = null;
  private placements = new Map<number, Placement>();
  private panelHosts = new Map<number, HTMLElement>();
  private busy = false;

  constructor(root: HTMLElement, api: ApiClient = new ApiClient()) {
    this.root = root;
    this.doc = root.ownerDocument;
    this.api = api;
  }

  // -- boot ------------------------------------------------------------

  async start(): Promise<void> {
    this.root.innerHTML = "";
    this.root.appendChild(this.el("div", "banner", { hidden: "hidden" }));
    try {
      this.graph = await this.api.graph();
      this.scenario = await this.api.createScenario();
    } catch (err) {
      this.showBanner(`service unreachable: ${(err as Error).message}`);
      return;
    }
    this.buildControls();
    this.buildGrid();
    await this.refreshAllPanels("current");
    this.drawEdges();
  }

  private el(tag: string, className: string,
             attrs: Record<string, string> = {}): HTMLElement {
    const node = this.doc.createElement(tag);
    node.className = className;
    for (const [key, value] of Object.entries(attrs)) {
      node.setAttribute(key, value);
    }
    return node;
  }

  private showBanner(message: string): void {
    const banner = this.root.querySelector(".banner") as HTMLElement;
    banner.textContent = message;
    banner.removeAttribute("hidden");
  }

  private clearBanner(): void {
    const banner = this.root.querySelector(".banner") as HTMLElement;
    banner.textContent = "";
    banner.setAttribute("hidden", "hidden");
  }

  // -- static structure ---------------------------------------------------

  private buildControls(): void {
    const controls = this.el("div", "controls");
    for (const spec of SLIDERS) {
      const wrap = this.el("label", "slider");
      wrap.setAttribute("data-field", spec.field);
      const caption = this.el("span", "slider-caption");
      const value = this.scenario!.params[spec.field];
      caption.textContent = `${spec.field} = ${value}`;
      const input = this.el("input", "slider-input", {
        type: "range",
        min: String(spec.min),
        max: String(spec.max),
        step: String(spec.step),
        value: String(value),
      }) as HTMLInputElement;
      input.addEventListener("change", () => {
        void this.applyShock(spec.field, Number(input.value));
      });
      input.addEventListener("input", () => {
        caption.textContent = `${spec.field} = ${input.value}`;
      });
      wrap.append(caption, input);
      controls.appendChild(wrap);
    }

    // free-form shock entry for any parameter
    const entry = this.el("div", "shock-entry");
    const select = this.el("select", "shock-field") as HTMLSelectElement;
    for (const field of Object.keys(this.scenario!.params).sort()) {
      const option = this.doc.createElement("option");
      option.value = field;
      option.textContent = field;
      select.appendChild(option);
    }
    const valueBox = this.el("input", "shock-value", { type: "text" }) as HTMLInputElement;
    const button = this.el("button", "shock-apply") as HTMLButtonElement;
    button.textContent = "apply shock";
    button.addEventListener("click", () => {
      const value = Number(valueBox.value);
      if (!Number.isFinite(value) || valueBox.value.trim() === "") {
        this.showBanner(`shock value "${valueBox.value}" is not a number`);
        return;
      }
      void this.applyShock(select.value, value);
    });
    entry.append(select, valueBox, button);
    controls.appendChild(entry);

    // provenance channel inspector
    const channel = this.el("div", "channel-controls");
    const from = this.channelSelect("channel-from");
    const to = this.channelSelect("channel-to");
    const inspect = this.el("button", "channel-inspect") as HTMLButtonElement;
    inspect.textContent = "inspect channel";
    inspect.addEventListener("click", () => {
      this.inspectChannel(Number(from.value), Number(to.value));
    });
    channel.append(from, to, inspect);
    controls.appendChild(channel);

    this.root.appendChild(controls);
    this.root.appendChild(this.el("aside", "channel-list"));
  }

  private channelSelect(className: string): HTMLSelectElement {
    const select = this.el("select", className) as HTMLSelectElement;
    for (const node of [...this.graph!.nodes].sort((a, b) => a.id - b.id)) {
      const option = this.doc.createElement("option");
      option.value = String(node.id);
      option.textContent = `${node.id}. ${node.name}`;
      select.appendChild(option);
    }
    return select;
  }

  private buildGrid(): void {
    this.placements = layoutPanels(this.graph!.nodes);
    const wrap = this.el("div", "grid-wrap");
    const edges = this.doc.createElementNS("http://www.w3.org/2000/svg", "svg");
    edges.setAttribute("class", "edges");
    wrap.appendChild(edges);
    const grid = this.el("div", "grid");
    for (const node of this.graph!.nodes) {
      const place = this.placements.get(node.id)!;
      const host = this.el("div", `panel side-${node.side}`, {
        "data-node-id": String(node.id),
        "data-col": String(place.column),
        "data-row": String(place.row),
        "data-row-span": String(place.rowSpan),
      });
      host.style.gridColumn = String(place.column);
      host.style.gridRow = `${place.row} / span ${place.rowSpan}`;
      grid.appendChild(host);
      this.panelHosts.set(node.id, host);
    }
    wrap.appendChild(grid);
    this.root.appendChild(wrap);
  }

  private nodeById(id: number): DiagramNode {
    const node = this.graph!.nodes.find((n) => n.id === id);
    if (!node) throw new Error(`unknown node ${id}`);
    return node;
  }

  private setPanel(panel: PanelDoc): void {
    const host = this.panelHosts.get(panel.nodeId)!;
    const svg = renderPanel(this.doc, this.nodeById(panel.nodeId), panel);
    host.querySelector("svg")?.remove();
    host.appendChild(svg);
  }

  private async refreshAllPanels(overlay: "current" | "both"): Promise<void> {
    const panels = await Promise.all(
      this.graph!.nodes.map((n) => this.api.panel(this.scenario!.id, n.id, overlay)),
    );
    for (const panel of panels) this.setPanel(panel);
  }

  private drawEdges(): void {
    const svg = this.root.querySelector(".edges") as SVGSVGElement;
    const columns = Math.max(...[...this.placements.values()].map((p) => p.column));
    const rows = Math.max(
      ...[...this.placements.values()].map((p) => p.row + p.rowSpan - 1));
    const width = columns * (CELL_W + CELL_GAP);
    const height = rows * (CELL_H + CELL_GAP);
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    svg.replaceChildren();
    for (const edge of this.graph!.edges) {
      const a = cellCenter(this.placements.get(edge.from)!);
      const b = cellCenter(this.placements.get(edge.to)!);
      const line = this.doc.createElementNS("http://www.w3.org/2000/svg", "line");
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
      line.setAttribute("class", `edge kind-${edge.kind}`);
      if (edge.kind === "DualView") line.setAttribute("stroke-dasharray", "7 4");
      if (edge.kind === "PartOfComplex") line.setAttribute("stroke-dasharray", "2 3");
      if (edge.note) {
        const tip = this.doc.createElementNS("http://www.w3.org/2000/svg", "title");
        tip.textContent = edge.note;
        line.appendChild(tip);
      }
      svg.appendChild(line);
    }
  }

  // -- interactions ----------------------------------------------------------

  clearHighlights(): void {
    for (const host of this.panelHosts.values()) {
      host.classList.remove("dirty", "on-path");
      host.style.removeProperty("--stagger");
    }
  }

  /** POST one shock, then overlay baselines on the propagated panels. */
  async applyShock(field: string, value: number): Promise<void> {
    if (this.busy || !this.scenario) return;
    this.busy = true;
    this.root.classList.add("busy");
    try {
      const response = await this.api.applyShock(this.scenario.id, field, value);
      this.scenario = response.scenario;
      this.clearBanner();
      this.clearHighlights();
      const last = response.scenario.shocks[response.scenario.shocks.length - 1];
      if (last && last.oldValue === last.newValue) {
        return; // a no-op shock is recorded server-side but highlights nothing
      }
      const panels = await Promise.all(
        response.plan.dirty.map((id) => this.api.panel(this.scenario!.id, id, "both")),
      );
      for (const panel of panels) this.setPanel(panel);
      response.plan.dirty.forEach((id, index) => {
        const host = this.panelHosts.get(id)!;
        host.classList.add("dirty");
        host.style.setProperty("--stagger", String(index));
      });
    } catch (err) {
      if (err instanceof ApiError) {
        this.showBanner(err.message); // server names the failing invariant
      } else {
        this.showBanner(`shock failed: ${(err as Error).message}`);
      }
    } finally {
      this.busy = false;
      this.root.classList.remove("busy");
    }
  }

  /** Highlight every derivation path from a to b and list them aside. */
  inspectChannel(a: number, b: number): void {
    if (!this.graph) return;
    const list = this.root.querySelector(".channel-list") as HTMLElement;
    list.innerHTML = "";
    for (const host of this.panelHosts.values()) host.classList.remove("on-path");
    const paths = provenancePaths(this.graph, a, b);
    if (paths.length === 0) {
      const message = this.el("p", "no-channel");
      message.textContent = `no derivation channel from ${a} to ${b}`;
      list.appendChild(message);
      return;
    }
    pathUnion(paths).forEach((id, index) => {
      const host = this.panelHosts.get(id)!;
      host.classList.add("on-path");
      host.style.setProperty("--stagger", String(index));
    });
    for (const path of paths) {
      const item = this.el("ol", "channel-path");
      for (const id of path) {
        const li = this.el("li", "channel-step");
        li.textContent = `${id}. ${this.nodeById(id).name}`;
        item.appendChild(li);
      }
      list.appendChild(item);
    }
  }
}
