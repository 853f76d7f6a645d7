// Typed client over the teach service HTTP API. The console never derives
// linguistic data itself: meta-sequence encodings, matches, and QA pairs are
// rendered exactly as the server returns them.

export interface NearMiss {
  pair_id: string | null;
  z_len: number;
  classification: string;
  missing: string[];
}

export interface QueueView {
  id: string;
  sentence_ref: string;
  text: string;
  encoding: string;
  near_misses: NearMiss[];
  status: string;
}

export interface QAPairView {
  sentence: string;
  question: string;
  answer: string;
  wh: string | null;
  pair_id: string;
  match: string;
}

export interface PairPreview {
  learned: string[];
  duplicates: string[];
  qaps: QAPairView[];
}

export interface StoredPairView {
  id: string;
  source: "seed" | "taught";
  wh: string | null;
  md: string;
  mi: string;
}

export interface StoreListing {
  config: { r: number; phrasal_merge: boolean };
  size: number;
  pairs: StoredPairView[];
}

export interface GenerateResult {
  qaps: QAPairView[];
  teach_request: QueueView | null;
  diagnostics: { stage: string; reason: string }[];
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    const body = await response.text();
    throw new Error(`${response.status}: ${body}`);
  }
  return (await response.json()) as T;
}

export class TeachApi {
  constructor(private readonly base: string = "") {}

  async queue(): Promise<QueueView[]> {
    const doc = await asJson<{ requests: QueueView[] }>(
      await fetch(`${this.base}/queue`),
    );
    return doc.requests;
  }

  async teach(requestId: string, interrogatives: string[]): Promise<PairPreview> {
    return asJson<PairPreview>(
      await fetch(`${this.base}/teach`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ request_id: requestId, interrogatives }),
      }),
    );
  }

  async dismiss(requestId: string): Promise<void> {
    await asJson<{ status: string }>(
      await fetch(`${this.base}/queue/${requestId}`, { method: "DELETE" }),
    );
  }

  async listStore(): Promise<StoreListing> {
    return asJson<StoreListing>(await fetch(`${this.base}/msdip`));
  }

  async generate(text: string): Promise<GenerateResult> {
    return asJson<GenerateResult>(
      await fetch(`${this.base}/generate`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ text }),
      }),
    );
  }
}
