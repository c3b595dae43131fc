import type { SessionRequest } from "./types.js";

export interface Sample {
  name: string;
  request: SessionRequest;
}

const PATH_PROGRAM = `% Reachability over an unknown edge relation.
#open edge/2.
node(a). node(b). node(c).
path(X,Y) :- edge(X,Y).
path(X,Y) :- path(X,Z), path(Z,Y).
`;

const SEVERANCE_PROGRAM = `% Toy severance decision model.
#open notice_given/0.
#open service_over_five_years/0.
#open gross_misconduct/0.
base_award :- notice_given.
denied :- gross_misconduct.
award :- base_award, not denied.
enhanced_award :- award, service_over_five_years.
`;

export const SAMPLES: Sample[] = [
  {
    name: "Path",
    request: {
      program: PATH_PROGRAM,
      domain: ["a", "b", "c"],
      queries: ["path(a,c)"],
      semantics: "wf",
    },
  },
  {
    name: "Severance",
    request: {
      program: SEVERANCE_PROGRAM,
      queries: ["award", "enhanced_award"],
      semantics: "wf",
    },
  },
];
