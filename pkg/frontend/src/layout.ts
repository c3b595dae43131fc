import type { Explanation } from "./types.js";

export interface PlacedNode {
  name: string;
  layer: number;
  x: number;
  y: number;
}

export interface PlacedEdge {
  from: string;
  to: string;
  selfLoop: boolean;
}

export interface Layout {
  nodes: PlacedNode[];
  edges: PlacedEdge[];
  width: number;
  height: number;
}

const COL_GAP = 150;
const ROW_GAP = 90;
const MARGIN = 60;

/**
 * Layered drawing of an explanation graph: the root sits on the top
 * layer, each other node on the layer of its shortest path from the
 * root. Cycles are fine — back edges simply point upward.
 */
export function layoutExplanation(expl: Explanation): Layout {
  const children = new Map<string, string[]>();
  for (const name of expl.nodes) children.set(name, []);
  for (const [from, to] of expl.edges) children.get(from)?.push(to);

  // BFS from the root; every node of an explanation is reachable from it.
  const layerOf = new Map<string, number>();
  layerOf.set(expl.root, 0);
  let frontier = [expl.root];
  while (frontier.length > 0) {
    const next: string[] = [];
    for (const name of frontier) {
      for (const child of children.get(name) ?? []) {
        if (!layerOf.has(child)) {
          layerOf.set(child, layerOf.get(name)! + 1);
          next.push(child);
        }
      }
    }
    frontier = next;
  }

  const depth = Math.max(...layerOf.values()) + 1;
  const layers: string[][] = Array.from({ length: depth }, () => []);
  for (const name of [...expl.nodes].sort()) {
    const l = layerOf.get(name);
    if (l !== undefined) layers[l].push(name);
  }

  // Order each layer under its parents: median parent position first,
  // node name as the deterministic tiebreak.
  const position = new Map<string, number>();
  layers[0].forEach((name, i) => position.set(name, i));
  for (let l = 1; l < depth; l++) {
    const key = (name: string): [number, string] => {
      const above: number[] = [];
      for (const [from, to] of expl.edges) {
        if (to === name && layerOf.get(from) === l - 1) {
          above.push(position.get(from) ?? 0);
        }
      }
      above.sort((a, b) => a - b);
      const median = above.length ? above[Math.floor(above.length / 2)] : 0;
      return [median, name];
    };
    layers[l].sort((a, b) => {
      const [ma, na] = key(a);
      const [mb, nb] = key(b);
      return ma - mb || (na < nb ? -1 : na > nb ? 1 : 0);
    });
    layers[l].forEach((name, i) => position.set(name, i));
  }

  const widest = Math.max(...layers.map((l) => l.length));
  const width = 2 * MARGIN + (widest - 1) * COL_GAP;
  const height = 2 * MARGIN + (depth - 1) * ROW_GAP;

  const nodes: PlacedNode[] = [];
  for (let l = 0; l < depth; l++) {
    const row = layers[l];
    const x0 = (width - (row.length - 1) * COL_GAP) / 2;
    row.forEach((name, i) => {
      nodes.push({ name, layer: l, x: x0 + i * COL_GAP, y: MARGIN + l * ROW_GAP });
    });
  }

  const edges: PlacedEdge[] = expl.edges.map(([from, to]) => ({
    from,
    to,
    selfLoop: from === to,
  }));

  return { nodes, edges, width, height };
}
