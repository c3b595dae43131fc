import type { Explanation, SessionView } from "../src/types.js";

// The reachability explanation the service produces once both edges
// on the a->b->c chain are answered true.
export const PATH_EXPLANATION: Explanation = {
  root: "path(a,c)",
  nodes: ["edge(a,b)", "edge(b,c)", "path(a,b)", "path(a,c)", "path(b,c)"],
  edges: [
    ["path(a,b)", "edge(a,b)"],
    ["path(a,c)", "path(a,b)"],
    ["path(a,c)", "path(b,c)"],
    ["path(b,c)", "edge(b,c)"],
  ],
};

export function freshPathView(): SessionView {
  return {
    session_id: "abc123",
    semantics: "wf",
    opens: [
      "edge(a,a)", "edge(a,b)", "edge(a,c)",
      "edge(b,a)", "edge(b,b)", "edge(b,c)",
      "edge(c,a)", "edge(c,b)", "edge(c,c)",
    ],
    answered: {},
    queries: [
      {
        fact: "path(a,c)",
        status: "open",
        relevant_opens: ["edge(a,b)", "edge(a,c)", "edge(b,c)"],
        explanation: null,
      },
    ],
  };
}

export function decidedPathView(): SessionView {
  const view = freshPathView();
  view.answered = { "edge(a,b)": true, "edge(b,c)": true };
  view.queries = [
    {
      fact: "path(a,c)",
      status: "true",
      relevant_opens: [],
      explanation: PATH_EXPLANATION,
    },
  ];
  return view;
}
