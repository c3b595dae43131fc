import type { Explanation } from "./types.js";
import { layoutExplanation } from "./layout.js";

const NODE_W = 130;
const NODE_H = 34;

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/**
 * SVG drawing of an explanation graph, plus a count line. The counts
 * come straight from the explanation JSON so they always match it.
 */
export function renderGraph(expl: Explanation): string {
  const layout = layoutExplanation(expl);
  const at = new Map(layout.nodes.map((n) => [n.name, n]));

  const edges = layout.edges
    .map((e) => {
      if (e.selfLoop) {
        const n = at.get(e.from)!;
        const x = n.x + NODE_W / 2;
        return `<path class="edge" d="M ${x} ${n.y - 8} C ${x + 36} ${n.y - 26}, ${x + 36} ${n.y + 26}, ${x} ${n.y + 8}" marker-end="url(#arrow)"/>`;
      }
      const a = at.get(e.from)!;
      const b = at.get(e.to)!;
      const down = b.y > a.y;
      const y1 = down ? a.y + NODE_H / 2 : a.y - NODE_H / 2;
      const y2 = down ? b.y - NODE_H / 2 : b.y + NODE_H / 2;
      return `<path class="edge" d="M ${a.x} ${y1} L ${b.x} ${y2}" marker-end="url(#arrow)"/>`;
    })
    .join("\n    ");

  const nodes = layout.nodes
    .map((n) => {
      const cls = n.name === expl.root ? "node root" : "node";
      return (
        `<g class="${cls}" data-name="${esc(n.name)}">` +
        `<rect x="${n.x - NODE_W / 2}" y="${n.y - NODE_H / 2}" width="${NODE_W}" height="${NODE_H}" rx="6"/>` +
        `<text x="${n.x}" y="${n.y + 5}" text-anchor="middle">${esc(n.name)}</text></g>`
      );
    })
    .join("\n    ");

  return `<svg class="graph" viewBox="0 0 ${layout.width} ${layout.height}" role="img">
    <defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>
    ${edges}
    ${nodes}
  </svg>
  <p class="graph-counts">${expl.nodes.length} nodes, ${expl.edges.length} edges</p>`;
}
