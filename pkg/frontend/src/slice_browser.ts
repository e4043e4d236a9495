/**
 * Slice navigation strip: the current slice render plus prev/next controls
 * and a "current/total" counter. Index changes are clamped by ViewState.
 */

import type { ReviewApi } from "./api.js";
import type { ViewState } from "./state.js";

export class SliceBrowser {
  readonly root: HTMLElement;
  private readonly img: HTMLImageElement;
  private readonly counter: HTMLSpanElement;
  private readonly error: HTMLDivElement;

  constructor(
    doc: Document,
    private readonly api: ReviewApi,
    private readonly state: ViewState,
    private readonly onChange: (index: number) => void,
  ) {
    this.root = doc.createElement("section");
    this.root.className = "slice-browser";

    const prev = doc.createElement("button");
    prev.textContent = "prev";
    prev.className = "prev";
    prev.addEventListener("click", () => this.step(-1));

    const next = doc.createElement("button");
    next.textContent = "next";
    next.className = "next";
    next.addEventListener("click", () => this.step(1));

    this.counter = doc.createElement("span");
    this.counter.className = "counter";

    this.img = doc.createElement("img");
    this.img.className = "slice";
    this.img.alt = "axial slice";
    this.img.addEventListener("error", () => {
      this.error.textContent = `slice ${this.state.sliceIndex} failed to load`;
    });

    this.error = doc.createElement("div");
    this.error.className = "error";

    const nav = doc.createElement("nav");
    nav.append(prev, this.counter, next);
    this.root.append(nav, this.img, this.error);
    this.render();
  }

  private step(delta: number): void {
    const before = this.state.sliceIndex;
    const after = delta > 0 ? this.state.next() : this.state.prev();
    this.render();
    if (after !== before) this.onChange(after);
  }

  render(): void {
    this.counter.textContent = this.state.counterLabel();
    this.img.src = this.api.sliceUrl(this.state.sessionId, this.state.sliceIndex);
    this.error.textContent = "";
  }
}
