import type { GraphDoc, PanelDoc, ScenarioDoc, ShockResponse } from "./types.js";

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function asError(res: Response): Promise<ApiError> {
  let message = `${res.status} ${res.statusText}`;
  try {
    const body = await res.json();
    if (body && typeof body.error === "string") message = body.error;
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiError(message, res.status);
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, init);
    if (!res.ok) throw await asError(res);
    return res.json() as Promise<T>;
  }

  graph(): Promise<GraphDoc> {
    return this.request("/graph");
  }

  createScenario(overrides: Record<string, number> = {}): Promise<ScenarioDoc> {
    return this.request("/scenarios", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(overrides),
    });
  }

  scenario(id: string): Promise<ScenarioDoc> {
    return this.request(`/scenarios/${id}`);
  }

  applyShock(id: string, field: string, value: number): Promise<ShockResponse> {
    return this.request(`/scenarios/${id}/shocks`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ field, value }),
    });
  }

  panel(id: string, nodeId: number,
        overlay: "current" | "baseline" | "both" = "current"): Promise<PanelDoc> {
    return this.request(`/scenarios/${id}/panels/${nodeId}?overlay=${overlay}`);
  }

  compare(a: string, b: string): Promise<{ a: string; b: string; deltas: Record<string, number> }> {
    return this.request(`/compare?a=${encodeURIComponent(a)}&b=${encodeURIComponent(b)}`);
  }
}
