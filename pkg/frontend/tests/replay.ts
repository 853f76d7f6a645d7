// Fetch stub that replays recorded server responses. Each route holds a
// sequence of payloads; the last one repeats once the sequence is exhausted.

type Payload = unknown;

export class Replay {
  private routes = new Map<string, Payload[]>();
  readonly calls: { method: string; path: string; body?: unknown }[] = [];

  on(method: string, path: string, ...payloads: Payload[]): this {
    this.routes.set(`${method} ${path}`, payloads);
    return this;
  }

  fetch = async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const method = (init?.method ?? "GET").toUpperCase();
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    this.calls.push({ method, path, body });
    const key = `${method} ${path}`;
    const payloads = this.routes.get(key);
    if (!payloads || payloads.length === 0) {
      return {
        ok: false,
        status: 404,
        json: async () => ({ detail: `no recording for ${key}` }),
        text: async () => `no recording for ${key}`,
      } as Response;
    }
    const payload = payloads.length > 1 ? payloads.shift() : payloads[0];
    return {
      ok: true,
      status: 200,
      json: async () => JSON.parse(JSON.stringify(payload)),
      text: async () => JSON.stringify(payload),
    } as Response;
  };
}

export function installFetch(replay: Replay): void {
  (globalThis as { fetch: typeof fetch }).fetch = replay.fetch as typeof fetch;
}
