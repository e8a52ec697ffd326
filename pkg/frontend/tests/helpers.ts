// Fixture-backed fetch stub. Fixtures are genuine server responses captured
// by scripts/gen_frontend_fixtures.py, so the UI tests replay real payloads.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { vi } from "vitest";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixture<T = any>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, `${name}.json`), "utf-8"));
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export interface FakeServer {
  calls: { method: string; url: string; body: any }[];
}

/** Route fetch against the fixture set; returns a call log for assertions. */
export function installApi(): FakeServer {
  const server: FakeServer = { calls: [] };
  const graph = fixture("graph");
  const scenario = fixture("scenario");
  const panels = fixture("panels");
  const panelsBoth = fixture("panels_both");
  const shockMs = fixture("shock_ms");
  const shockNoop = fixture("shock_noop");
  const shockRejected = fixture("shock_rejected");

  globalThis.fetch = vi.fn(async (input: any, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    server.calls.push({ method, url, body });

    if (url.endsWith("/graph")) return json(graph);
    if (method === "POST" && url.endsWith("/scenarios")) return json(scenario, 201);
    if (method === "POST" && url.includes("/shocks")) {
      if (body.field === "Ms") return json(shockMs);
      if (body.field === "G") return json(shockNoop);
      return json(shockRejected.body, shockRejected.status);
    }
    const panelMatch = url.match(/\/panels\/(\d+)(\?overlay=(\w+))?/);
    if (panelMatch) {
      const nodeId = panelMatch[1];
      const overlay = panelMatch[3] ?? "current";
      const source = overlay === "both" ? panelsBoth : panels;
      const payload = source[nodeId];
      return payload ? json(payload) : json({ error: `unknown node ${nodeId}` }, 404);
    }
    return json({ error: `unrouted ${method} ${url}` }, 500);
  }) as typeof fetch;
  return server;
}

export function installDeadApi(): void {
  globalThis.fetch = vi.fn(async () => {
    throw new TypeError("fetch failed");
  }) as typeof fetch;
}
