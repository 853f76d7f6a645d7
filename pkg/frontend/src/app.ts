// Console wiring: one-page app with queue, pattern browser, and a try box.
// Server state is the source of truth; the queue is re-fetched after every
// mutation.

import { TeachApi, type QueueView } from "./api";
import {
  renderError,
  renderPreview,
  renderQaps,
  renderQueue,
  renderStore,
  renderTeachForm,
  renderTryPanel,
} from "./render";

export class ConsoleApp {
  private storeFilter: "all" | "seed" | "taught" = "all";

  constructor(
    private readonly root: HTMLElement,
    private readonly api: TeachApi,
  ) {}

  async start(): Promise<void> {
    await this.showQueue();
  }

  private clear(): HTMLElement {
    this.root.innerHTML = "";
    return this.root;
  }

  async showQueue(): Promise<void> {
    try {
      const requests = await this.api.queue();
      const root = this.clear();
      root.appendChild(this.navigation());
      root.appendChild(
        renderQueue(
          requests,
          (request) => this.showTeachForm(request),
          (request) => this.dismiss(request),
        ),
      );
      root.appendChild(
        renderTryPanel((text) => this.tryGenerate(text)),
      );
    } catch (error) {
      this.clear().appendChild(renderError(String(error)));
    }
  }

  private navigation(): HTMLElement {
    const nav = document.createElement("nav");
    const queueLink = document.createElement("button");
    queueLink.className = "nav-queue";
    queueLink.textContent = "Queue";
    queueLink.addEventListener("click", () => void this.showQueue());
    const storeLink = document.createElement("button");
    storeLink.className = "nav-store";
    storeLink.textContent = "Patterns";
    storeLink.addEventListener("click", () => void this.showStore());
    nav.append(queueLink, storeLink);
    return nav;
  }

  showTeachForm(request: QueueView): void {
    const root = this.clear();
    root.appendChild(this.navigation());
    root.appendChild(
      renderTeachForm(
        request,
        (lines) => void this.submitTeach(request, lines),
        () => void this.showQueue(),
      ),
    );
  }

  private async submitTeach(request: QueueView, lines: string[]): Promise<void> {
    try {
      const preview = await this.api.teach(request.id, lines);
      const root = this.clear();
      root.appendChild(this.navigation());
      root.appendChild(renderPreview(preview));
      const back = document.createElement("button");
      back.className = "back-button";
      back.textContent = "Back to queue";
      back.addEventListener("click", () => void this.showQueue());
      root.appendChild(back);
    } catch (error) {
      this.root.appendChild(renderError(String(error)));
    }
  }

  private async dismiss(request: QueueView): Promise<void> {
    try {
      await this.api.dismiss(request.id);
    } finally {
      await this.showQueue();
    }
  }

  async showStore(): Promise<void> {
    try {
      const listing = await this.api.listStore();
      const root = this.clear();
      root.appendChild(this.navigation());
      const filter = document.createElement("select");
      filter.className = "source-filter";
      for (const option of ["all", "seed", "taught"]) {
        const node = document.createElement("option");
        node.value = option;
        node.textContent = option;
        if (option === this.storeFilter) node.selected = true;
        filter.appendChild(node);
      }
      filter.addEventListener("change", () => {
        this.storeFilter = filter.value as "all" | "seed" | "taught";
        void this.showStore();
      });
      root.appendChild(filter);
      root.appendChild(renderStore(listing, this.storeFilter));
    } catch (error) {
      this.clear().appendChild(renderError(String(error)));
    }
  }

  private async tryGenerate(text: string): Promise<void> {
    const container = this.root.querySelector(".try-results");
    if (!container) return;
    container.innerHTML = "";
    try {
      const result = await this.api.generate(text);
      container.appendChild(renderQaps(result.qaps));
      if (result.teach_request) {
        const note = document.createElement("p");
        note.className = "queued-note";
        note.textContent = "No full match: the sentence was added to the teach queue.";
        container.appendChild(note);
      }
    } catch (error) {
      container.appendChild(renderError(String(error)));
    }
  }
}

export function mount(root: HTMLElement, base = ""): ConsoleApp {
  const app = new ConsoleApp(root, new TeachApi(base));
  void app.start();
  return app;
}

declare global {
  interface Window {
    __teachConsoleAutoMount?: boolean;
  }
}

if (typeof document !== "undefined" && window.__teachConsoleAutoMount !== false) {
  const root = document.getElementById("app");
  if (root) mount(root);
}
