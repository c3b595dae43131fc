import type { SessionView } from "./types.js";
import { renderGraph } from "./graph.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/**
 * The questions to put in front of the user: the union of relevant
 * opens over the still-open queries. Answered opens never appear here
 * (the server already drops them from relevant_opens) and neither does
 * anything the server marked irrelevant.
 */
export function questionList(view: SessionView): string[] {
  const seen = new Set<string>();
  const out: string[] = [];
  for (const q of view.queries) {
    if (q.status !== "open") continue;
    for (const open of q.relevant_opens) {
      if (!seen.has(open) && !(open in view.answered)) {
        seen.add(open);
        out.push(open);
      }
    }
  }
  return out;
}

export function renderQuestions(questions: string[], answered: Record<string, boolean>): string {
  const rows = questions
    .map(
      (fact) =>
        `<li class="question" data-fact="${esc(fact)}">` +
        `<span class="fact">${esc(fact)}</span>` +
        `<span class="controls">` +
        `<button data-act="yes">true</button>` +
        `<button data-act="no">false</button>` +
        `<button data-act="skip">skip</button>` +
        `</span></li>`,
    )
    .join("");
  const done = Object.keys(answered)
    .sort()
    .map(
      (fact) =>
        `<li class="answered" data-fact="${esc(fact)}">` +
        `<span class="fact">${esc(fact)} = ${answered[fact]}</span>` +
        `<button data-act="retract" title="retract this answer">&#10005;</button></li>`,
    )
    .join("");
  return (
    `<ul class="questions">${rows || '<li class="empty">no questions</li>'}</ul>` +
    (done ? `<h3>Answered</h3><ul class="answers">${done}</ul>` : "")
  );
}

export function renderConclusions(view: SessionView, selected: string | null): string {
  const rows = view.queries
    .map((q) => {
      const sel = q.fact === selected ? " selected" : "";
      const pick = q.explanation ? ` data-pick="1"` : "";
      return (
        `<li class="conclusion${sel}" data-fact="${esc(q.fact)}"${pick}>` +
        `<span class="fact">${esc(q.fact)}</span>` +
        `<span class="badge ${q.status}">${q.status}</span></li>`
      );
    })
    .join("");
  return `<ul class="conclusions">${rows || '<li class="empty">no queries</li>'}</ul>`;
}

export function renderExplanation(view: SessionView, selected: string | null): string {
  const q = view.queries.find((q) => q.fact === selected);
  if (!q || !q.explanation) {
    return '<p class="empty">select a decided conclusion to see why it holds</p>';
  }
  return renderGraph(q.explanation);
}
