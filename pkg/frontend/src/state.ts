/**
 * Review-session view state. One session, one current slice, and a cache
 * of what the reviewer has done per slice. Browsing never throws away
 * another slice's segmentation or report.
 */

import {
  DEFAULT_PARAMS,
  type SegmentParams,
  type SegmentResponse,
  type SelectResponse,
} from "./api.js";

export interface SliceView {
  segment: SegmentResponse | null;
  /** cluster index the reviewer picked, once select has succeeded */
  selected: number | null;
  report: SelectResponse | null;
  /** per-panel overlay-on-anatomy toggles, one per candidate */
  overlays: boolean[];
}

function emptyView(): SliceView {
  return { segment: null, selected: null, report: null, overlays: [] };
}

export class ViewState {
  readonly sessionId: string;
  readonly sliceCount: number;
  params: SegmentParams = { ...DEFAULT_PARAMS };

  private index = 0;
  private views = new Map<number, SliceView>();

  constructor(sessionId: string, sliceCount: number) {
    if (sliceCount < 1) throw new Error(`empty session: ${sliceCount} slices`);
    this.sessionId = sessionId;
    this.sliceCount = sliceCount;
  }

  get sliceIndex(): number {
    return this.index;
  }

  /** Move to a slice, clamped into [0, sliceCount). */
  goTo(index: number): number {
    this.index = Math.min(Math.max(index, 0), this.sliceCount - 1);
    return this.index;
  }

  next(): number {
    return this.goTo(this.index + 1);
  }

  prev(): number {
    return this.goTo(this.index - 1);
  }

  /** 1-based position label, e.g. "6/16". */
  counterLabel(): string {
    return `${this.index + 1}/${this.sliceCount}`;
  }

  view(index: number = this.index): SliceView {
    let v = this.views.get(index);
    if (v === undefined) {
      v = emptyView();
      this.views.set(index, v);
    }
    return v;
  }

  setSegment(index: number, segment: SegmentResponse): void {
    const v = this.view(index);
    v.segment = segment;
    v.selected = null;
    v.report = null;
    v.overlays = segment.candidates.map(() => false);
  }

  setReport(index: number, k: number, report: SelectResponse): void {
    const v = this.view(index);
    v.selected = k;
    v.report = report;
  }

  toggleOverlay(index: number, k: number): boolean {
    const v = this.view(index);
    v.overlays[k] = !v.overlays[k];
    return v.overlays[k] ?? false;
  }
}
