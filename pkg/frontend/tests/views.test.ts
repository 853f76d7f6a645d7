// Rendering tests against recorded responses: the console shows server
// strings exactly and performs no derivation of its own.

import { describe, expect, it } from "vitest";

import { renderPreview, renderQueue, renderStore } from "../src/render";
import type { PairPreview, QueueView, StoreListing } from "../src/api";

import queueWithJohn from "./recorded/queue_with_john.json";
import teachJohn from "./recorded/teach_john.json";
import teachDuplicate from "./recorded/teach_duplicate.json";
import msdip from "./recorded/msdip.json";

const requests = queueWithJohn.requests as QueueView[];

describe("queue page", () => {
  it("renders sentence text and the exact server encoding", () => {
    const view = renderQueue(requests, () => {}, () => {});
    expect(view.querySelector(".sentence")?.textContent).toBe(
      "John traveled to Boston last week.",
    );
    expect(view.querySelector(".encoding")?.textContent).toBe(
      requests[0].encoding,
    );
  });

  it("shows an empty state when nothing is queued", () => {
    const view = renderQueue([], () => {}, () => {});
    expect(view.querySelector(".empty-state")).not.toBeNull();
    expect(view.querySelectorAll(".queue-item")).toHaveLength(0);
  });

  it("wires the teach button to the selected request", () => {
    let chosen: QueueView | null = null;
    const view = renderQueue(requests, (request) => {
      chosen = request;
    }, () => {});
    (view.querySelector(".teach-button") as HTMLButtonElement).click();
    expect(chosen).not.toBeNull();
    expect(chosen!.id).toBe(requests[0].id);
  });
});

describe("teach preview", () => {
  it("renders learned pairs and their questions", () => {
    const view = renderPreview(teachJohn as PairPreview);
    expect(view.querySelector(".learned")?.textContent).toContain(
      teachJohn.learned[0],
    );
    expect(view.querySelector(".qap .question")?.textContent).toBe(
      "Where did John travel to last week?",
    );
    expect(view.querySelector(".qap .answer")?.textContent).toBe("Boston");
  });

  it("renders a duplicate notice on repeated teaching", () => {
    const view = renderPreview(teachDuplicate as PairPreview);
    expect(view.querySelector(".duplicate")?.textContent).toContain("duplicate");
    expect(view.querySelector(".learned")).toBeNull();
  });
});

describe("pattern browser", () => {
  it("lists stored pairs with source and encodings", () => {
    const view = renderStore(msdip as StoreListing, "all");
    const rows = view.querySelectorAll("tr.pair");
    expect(rows).toHaveLength(msdip.pairs.length);
    expect(rows[0].textContent).toContain("taught");
    expect(rows[0].querySelectorAll("code.encoding")[0].textContent).toBe(
      msdip.pairs[0].md,
    );
  });

  it("filters by source", () => {
    const seedOnly = renderStore(msdip as StoreListing, "seed");
    expect(seedOnly.querySelectorAll("tr.pair")).toHaveLength(0);
    const taughtOnly = renderStore(msdip as StoreListing, "taught");
    expect(taughtOnly.querySelectorAll("tr.pair")).toHaveLength(
      msdip.pairs.length,
    );
  });
});
