/**
 * Renders the overlap report hemisphere by hemisphere. Values are displayed
 * exactly as the server sent them; no rounding or reordering happens here.
 */

import type { SelectResponse, AreaHit } from "./api.js";

function hitRow(doc: Document, hit: AreaHit): HTMLLIElement {
  const li = doc.createElement("li");
  li.className = "hit";
  li.textContent =
    `${String(hit.area)} - ${hit.name}: ` +
    `${String(hit.pixels)} px, fraction ${String(hit.fraction)}`;
  return li;
}

function column(doc: Document, label: string, hits: readonly AreaHit[]): HTMLDivElement {
  const col = doc.createElement("div");
  col.className = `column ${label.toLowerCase()}`;
  const head = doc.createElement("h3");
  head.textContent = label;
  col.append(head);
  const list = doc.createElement("ul");
  for (const hit of hits) list.append(hitRow(doc, hit));
  col.append(list);
  return col;
}

export class ReportPanel {
  readonly root: HTMLElement;

  constructor(private readonly doc: Document) {
    this.root = doc.createElement("section");
    this.root.className = "report-panel";
    this.clear();
  }

  clear(): void {
    this.root.replaceChildren();
    const note = this.doc.createElement("p");
    note.className = "placeholder";
    note.textContent = "no selection yet";
    this.root.append(note);
  }

  show(report: SelectResponse): void {
    this.root.replaceChildren();
    if (report.left.length === 0 && report.right.length === 0) {
      const note = this.doc.createElement("p");
      note.className = "placeholder";
      note.textContent = "no areas affected";
      this.root.append(note);
      return;
    }
    const wrap = this.doc.createElement("div");
    wrap.className = "columns";
    wrap.append(
      column(this.doc, "Left", report.left),
      column(this.doc, "Right", report.right),
    );
    this.root.append(wrap);
  }
}
