// Provenance-channel enumeration over the Derivation edges of /graph.
// Topology only: every economic number on screen comes from the service.

import type { GraphDoc } from "./types.js";

export function derivationChildren(graph: GraphDoc): Map<number, number[]> {
  const children = new Map<number, number[]>();
  for (const node of graph.nodes) children.set(node.id, []);
  for (const edge of graph.edges) {
    if (edge.kind === "Derivation") children.get(edge.from)!.push(edge.to);
  }
  for (const list of children.values()) list.sort((a, b) => a - b);
  return children;
}

/** All simple Derivation paths from a to b, lexicographically ordered. */
export function provenancePaths(graph: GraphDoc, a: number, b: number): number[][] {
  const children = derivationChildren(graph);
  if (!children.has(a) || !children.has(b)) {
    throw new Error(`unknown node in channel (${a}, ${b})`);
  }
  const paths: number[][] = [];
  const stack: number[] = [a];
  const onStack = new Set<number>([a]);

  const walk = (node: number): void => {
    if (node === b) {
      paths.push([...stack]);
      return;
    }
    for (const child of children.get(node)!) {
      if (onStack.has(child)) continue;
      stack.push(child);
      onStack.add(child);
      walk(child);
      stack.pop();
      onStack.delete(child);
    }
  };

  walk(a);
  return paths;
}

/** Union of nodes appearing on any path, preserving path order for staging. */
export function pathUnion(paths: number[][]): number[] {
  const seen = new Set<number>();
  const ordered: number[] = [];
  for (const path of paths) {
    for (const node of path) {
      if (!seen.has(node)) {
        seen.add(node);
        ordered.push(node);
      }
    }
  }
  return ordered;
}
