/**
 * Candidate gallery: one panel per cluster mask for the current slice.
 * Clicking a panel selects that cluster as the tumor and fetches the
 * overlap report. Each panel carries an overlay toggle that stacks the
 * mask over the anatomy render.
 *
 * Segmentation requests are deduplicated per slice, and responses that
 * arrive after the user has browsed away are applied to the cache but
 * never rendered over the newer slice (generation counter).
 */

import { ApiError } from "./api.js";
import type { ReviewApi, SegmentResponse, SelectResponse } from "./api.js";
import type { ViewState } from "./state.js";

export class CandidateGallery {
  readonly root: HTMLElement;
  private readonly panels: HTMLDivElement;
  private readonly status: HTMLDivElement;
  private gen = 0;
  private readonly inflight = new Map<number, Promise<SegmentResponse>>();
  private selecting = false;

  constructor(
    private readonly doc: Document,
    private readonly api: ReviewApi,
    private readonly state: ViewState,
    private readonly onReport: (index: number, report: SelectResponse) => void,
  ) {
    this.root = doc.createElement("section");
    this.root.className = "gallery";
    this.panels = doc.createElement("div");
    this.panels.className = "panels";
    this.status = doc.createElement("div");
    this.status.className = "status";
    this.root.append(this.panels, this.status);
  }

  /** Render the gallery for a slice, segmenting it first if needed. */
  async showSlice(index: number): Promise<void> {
    const gen = ++this.gen;
    const view = this.state.view(index);
    if (view.segment) {
      this.renderPanels(index);
      return;
    }
    this.renderPending();
    let seg: SegmentResponse;
    try {
      seg = await this.segmentOnce(index);
    } catch (err) {
      if (gen === this.gen) this.showError(err);
      return;
    }
    // cache fills even for a slice the user already left
    if (!this.state.view(index).segment) this.state.setSegment(index, seg);
    if (gen !== this.gen) return;
    this.renderPanels(index);
  }

  private segmentOnce(index: number): Promise<SegmentResponse> {
    const running = this.inflight.get(index);
    if (running) return running;
    const job = this.api
      .segment(this.state.sessionId, index, this.state.params)
      .finally(() => this.inflight.delete(index));
    this.inflight.set(index, job);
    return job;
  }

  private renderPending(): void {
    this.panels.replaceChildren();
    this.status.textContent = "segmenting";
    this.panels.classList.add("pending");
  }

  private renderPanels(index: number): void {
    const view = this.state.view(index);
    const seg = view.segment;
    this.panels.classList.remove("pending");
    this.panels.replaceChildren();
    this.status.textContent = "";
    if (!seg) return;
    seg.candidates.forEach((maskUrl, k) => {
      this.panels.append(this.buildPanel(index, k, maskUrl, view.selected === k));
    });
  }

  private buildPanel(
    index: number,
    k: number,
    maskUrl: string,
    selected: boolean,
  ): HTMLElement {
    const view = this.state.view(index);
    const panel = this.doc.createElement("figure");
    panel.className = selected ? "panel selected" : "panel";
    panel.dataset["k"] = String(k);

    const stack = this.doc.createElement("div");
    stack.className = view.overlays[k] ? "stack overlay" : "stack";
    const base = this.doc.createElement("img");
    base.className = "anatomy";
    base.src = this.api.sliceUrl(this.state.sessionId, index);
    const mask = this.doc.createElement("img");
    mask.className = "mask";
    mask.src = maskUrl;
    stack.append(base, mask);
    stack.addEventListener("click", () => void this.select(index, k));

    const toggle = this.doc.createElement("button");
    toggle.className = "toggle";
    toggle.textContent = "overlay";
    toggle.addEventListener("click", (ev) => {
      ev.stopPropagation();
      this.state.toggleOverlay(index, k);
      stack.className = this.state.view(index).overlays[k] ? "stack overlay" : "stack";
    });

    const caption = this.doc.createElement("figcaption");
    caption.textContent = `cluster ${k}`;
    caption.append(toggle);
    panel.append(stack, caption);
    return panel;
  }

  /** POST the selection; re-clicking the same panel just refreshes the report. */
  async select(index: number, k: number): Promise<void> {
    if (this.selecting || this.panels.classList.contains("pending")) return;
    this.selecting = true;
    this.status.textContent = "";
    try {
      const report = await this.api.select(this.state.sessionId, index, k);
      this.state.setReport(index, k, report);
      if (index === this.state.sliceIndex) {
        this.renderPanels(index);
        this.onReport(index, report);
      }
    } catch (err) {
      this.showError(err);
    } finally {
      this.selecting = false;
    }
  }

  private showError(err: unknown): void {
    this.panels.classList.remove("pending");
    if (err instanceof ApiError) {
      this.status.textContent = `${err.code}: ${err.message}`;
    } else {
      this.status.textContent = String(err);
    }
  }
}
