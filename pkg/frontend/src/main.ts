/**
 * Page wiring: volume upload, slice browser, candidate gallery and the
 * overlap report panel. The slice index is mirrored into the URL fragment
 * so a review position survives a reload.
 */

import { ReviewApi } from "./api.js";
import type { FetchLike } from "./api.js";
import { ViewState } from "./state.js";
import { SliceBrowser } from "./slice_browser.js";
import { CandidateGallery } from "./gallery.js";
import { ReportPanel } from "./report_panel.js";

export function fragmentSlice(fragment: string): number | null {
  const m = /^#slice=(\d+)$/.exec(fragment);
  if (!m || m[1] === undefined) return null;
  return Number.parseInt(m[1], 10);
}

export class App {
  readonly root: HTMLElement;
  private readonly api: ReviewApi;
  private browser: SliceBrowser | null = null;
  private gallery: CandidateGallery | null = null;
  private report: ReportPanel | null = null;
  private state: ViewState | null = null;

  constructor(
    private readonly doc: Document,
    private readonly win: { location: { hash: string } },
    fetchFn?: FetchLike,
  ) {
    this.api = new ReviewApi(fetchFn);
    this.root = doc.createElement("div");
    this.root.className = "app";
    this.root.append(this.buildUpload());
  }

  private buildUpload(): HTMLElement {
    const bar = this.doc.createElement("div");
    bar.className = "upload";
    const input = this.doc.createElement("input");
    input.type = "file";
    input.accept = ".nii";
    const note = this.doc.createElement("span");
    note.className = "upload-note";
    input.addEventListener("change", () => {
      const file = input.files && input.files[0];
      if (!file) return;
      note.textContent = "uploading";
      file
        .arrayBuffer()
        .then((buf) => this.openSession(buf))
        .then(() => {
          note.textContent = "";
        })
        .catch((err) => {
          note.textContent = String(err);
        });
    });
    bar.append(input, note);
    return bar;
  }

  /** Create a session from raw volume bytes and build the review widgets. */
  async openSession(volume: ArrayBuffer): Promise<ViewState> {
    const info = await this.api.createSession(volume);
    const state = new ViewState(info.session_id, info.slices);
    const wanted = fragmentSlice(this.win.location.hash);
    if (wanted !== null) state.goTo(wanted);

    this.state = state;
    this.report = new ReportPanel(this.doc);
    this.gallery = new CandidateGallery(this.doc, this.api, state, (index, rep) => {
      if (index === state.sliceIndex) this.report?.show(rep);
    });
    this.browser = new SliceBrowser(this.doc, this.api, state, (index) => {
      this.onSliceChange(index);
    });

    this.root.append(this.browser.root, this.gallery.root, this.report.root);
    await this.gallery.showSlice(state.sliceIndex);
    return state;
  }

  private onSliceChange(index: number): void {
    this.win.location.hash = `#slice=${index}`;
    void this.gallery?.showSlice(index);
    const view = this.state?.view(index);
    if (view && view.report) {
      this.report?.show(view.report);
    } else {
      this.report?.clear();
    }
  }
}

declare const window: (Window & typeof globalThis) | undefined;

if (typeof window !== "undefined" && typeof document !== "undefined") {
  const mount = document.getElementById("app");
  if (mount) {
    const app = new App(document, window);
    mount.append(app.root);
  }
}
