// DOM construction for the three console views. All text content comes from
// server responses verbatim; encodings are shown in monospace unchanged.

import type {
  NearMiss,
  PairPreview,
  QAPairView,
  QueueView,
  StoreListing,
} from "./api";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function nearMissLine(miss: NearMiss): string {
  const missing = miss.missing.length ? `missing ${miss.missing.join(", ")}` : "all roles covered";
  return `${miss.classification} (z=${miss.z_len}, ${missing})`;
}

export function renderQueue(
  requests: QueueView[],
  onTeach: (request: QueueView) => void,
  onDismiss: (request: QueueView) => void,
): HTMLElement {
  const root = el("section", "queue");
  root.appendChild(el("h2", undefined, "Waiting for teaching"));
  if (requests.length === 0) {
    root.appendChild(
      el("p", "empty-state", "Nothing to teach: every sentence matched a stored pattern."),
    );
    return root;
  }
  const list = el("ul", "queue-list");
  for (const request of requests) {
    const item = el("li", "queue-item");
    item.dataset.requestId = request.id;
    item.appendChild(el("p", "sentence", request.text));
    item.appendChild(el("code", "encoding", request.encoding));
    const misses = el("ul", "near-misses");
    for (const miss of request.near_misses) {
      misses.appendChild(el("li", "near-miss", nearMissLine(miss)));
    }
    if (request.near_misses.length === 0) {
      misses.appendChild(el("li", "near-miss", "no candidate patterns"));
    }
    item.appendChild(misses);
    const teachButton = el("button", "teach-button", "Teach");
    teachButton.addEventListener("click", () => onTeach(request));
    const dismissButton = el("button", "dismiss-button", "Dismiss");
    dismissButton.addEventListener("click", () => onDismiss(request));
    item.append(teachButton, dismissButton);
    list.appendChild(item);
  }
  root.appendChild(list);
  return root;
}

export function renderQaps(qaps: QAPairView[]): HTMLElement {
  const list = el("ul", "qap-list");
  for (const qap of qaps) {
    const item = el("li", "qap");
    item.appendChild(el("span", "question", qap.question));
    item.appendChild(el("span", "answer", qap.answer));
    item.appendChild(el("span", "match", qap.match));
    list.appendChild(item);
  }
  return list;
}

export function renderTeachForm(
  request: QueueView,
  onSubmit: (lines: string[]) => void,
  onCancel: () => void,
): HTMLElement {
  const root = el("section", "teach-form");
  root.appendChild(el("h2", undefined, "Teach a new pattern"));
  root.appendChild(el("p", "sentence", request.text));
  root.appendChild(el("code", "encoding", request.encoding));
  root.appendChild(
    el("p", "hint", "Write one interrogative sentence per line for this sentence."),
  );
  const textarea = el("textarea", "interrogatives");
  textarea.rows = 4;
  root.appendChild(textarea);
  const submit = el("button", "submit-button", "Teach and save");
  submit.addEventListener("click", () => {
    const lines = textarea.value
      .split("\n")
      .map((line) => line.trim())
      .filter((line) => line.length > 0);
    if (lines.length > 0) onSubmit(lines);
  });
  const cancel = el("button", "cancel-button", "Discard");
  cancel.addEventListener("click", onCancel);
  root.append(submit, cancel);
  return root;
}

export function renderPreview(preview: PairPreview): HTMLElement {
  const root = el("section", "preview");
  root.appendChild(el("h2", undefined, "Learned"));
  if (preview.learned.length > 0) {
    root.appendChild(
      el("p", "learned", `Stored ${preview.learned.length} new pair(s): ${preview.learned.join(", ")}`),
    );
  }
  if (preview.duplicates.length > 0) {
    root.appendChild(
      el("p", "duplicate", `Already known (duplicate): ${preview.duplicates.join(", ")}`),
    );
  }
  root.appendChild(el("h3", undefined, "Questions this sentence now yields"));
  root.appendChild(renderQaps(preview.qaps));
  return root;
}

export function renderStore(
  listing: StoreListing,
  filter: "all" | "seed" | "taught",
): HTMLElement {
  const root = el("section", "store");
  root.appendChild(
    el("h2", undefined, `Stored patterns (${listing.size})`),
  );
  const table = el("table", "pairs");
  const head = el("tr");
  for (const column of ["id", "source", "wh", "declarative", "interrogative"]) {
    head.appendChild(el("th", undefined, column));
  }
  table.appendChild(head);
  for (const pair of listing.pairs) {
    if (filter !== "all" && pair.source !== filter) continue;
    const row = el("tr", `pair source-${pair.source}`);
    row.appendChild(el("td", undefined, pair.id));
    row.appendChild(el("td", undefined, pair.source));
    row.appendChild(el("td", undefined, pair.wh ?? ""));
    const md = el("td");
    md.appendChild(el("code", "encoding", pair.md));
    const mi = el("td");
    mi.appendChild(el("code", "encoding", pair.mi));
    row.append(md, mi);
    table.appendChild(row);
  }
  root.appendChild(table);
  return root;
}

export function renderTryPanel(
  onGenerate: (text: string) => void,
): HTMLElement {
  const root = el("section", "try-panel");
  root.appendChild(el("h2", undefined, "Try a sentence"));
  const input = el("input", "try-input");
  input.type = "text";
  const button = el("button", "try-button", "Generate");
  button.addEventListener("click", () => {
    if (input.value.trim()) onGenerate(input.value.trim());
  });
  root.append(input, button);
  root.appendChild(el("div", "try-results"));
  return root;
}

export function renderError(message: string): HTMLElement {
  return el("p", "error", message);
}
