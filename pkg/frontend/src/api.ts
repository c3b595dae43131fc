import type { SessionRequest, SessionView } from "./types.js";

/** A non-2xx response; `message` is the server's error text. */
export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

/** The server replied with something that is not the expected JSON. */
export class ProtocolError extends Error {}

async function parseBody(res: Response): Promise<any> {
  const text = await res.text();
  if (text === "") return null;
  try {
    return JSON.parse(text);
  } catch {
    throw new ProtocolError(`malformed response from server (status ${res.status})`);
  }
}

export class SessionApi {
  constructor(private base: string = "") {}

  private async request(method: string, path: string, body?: unknown): Promise<any> {
    let res: Response;
    try {
      res = await fetch(this.base + path, {
        method,
        headers: body === undefined ? {} : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ProtocolError(`cannot reach server: ${err}`);
    }
    const parsed = await parseBody(res);
    if (!res.ok) {
      const message =
        parsed && typeof parsed.error === "string"
          ? parsed.error
          : `server error (status ${res.status})`;
      throw new ApiError(res.status, message);
    }
    return parsed;
  }

  createSession(req: SessionRequest): Promise<SessionView> {
    return this.request("POST", "/sessions", req);
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${id}`);
  }

  answer(id: string, fact: string, value: boolean): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/answers`, { fact, value });
  }

  retract(id: string, fact: string): Promise<SessionView> {
    return this.request("DELETE", `/sessions/${id}/answers/${encodeURIComponent(fact)}`);
  }
}
