// Mirrors of the session service's JSON shapes.

export interface Explanation {
  root: string;
  nodes: string[];
  edges: [string, string][];
}

export type QueryStatus = "true" | "false" | "unknown" | "open";

export interface QueryView {
  fact: string;
  status: QueryStatus;
  relevant_opens: string[];
  explanation: Explanation | null;
}

export interface SessionView {
  session_id: string;
  semantics: string;
  opens: string[];
  answered: Record<string, boolean>;
  queries: QueryView[];
}

export interface SessionRequest {
  program: string;
  queries: string[];
  semantics: string;
  domain?: string[];
  answered?: Record<string, boolean>;
}
