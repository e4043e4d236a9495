import { describe, expect, it } from "vitest";

import { ReportPanel } from "../src/report_panel.js";
import { EMPTY_REPORT_BODY, SELECT_K2_BODY, SELECT_TUMOR_BODY } from "./fixtures.js";
import type { SelectResponse } from "../src/api.js";

const doc = document;

function rows(panel: ReportPanel, side: string): string[] {
  const col = panel.root.querySelector(`.column.${side}`);
  if (!col) return [];
  return Array.from(col.querySelectorAll("li")).map((li) => li.textContent ?? "");
}

describe("ReportPanel", () => {
  it("starts with a placeholder", () => {
    const panel = new ReportPanel(doc);
    expect(panel.root.textContent).toContain("no selection yet");
  });

  it("renders the straddling-cluster report with the exact wire values", () => {
    const panel = new ReportPanel(doc);
    const report = JSON.parse(SELECT_K2_BODY) as SelectResponse;
    panel.show(report);

    expect(rows(panel, "left")).toEqual([
      "4 - Primary motor cortex: 135 px, fraction 0.05806451612903226",
    ]);
    expect(rows(panel, "right")).toEqual([
      "4 - Primary motor cortex: 436 px, fraction 0.1875268817204301",
      "6 - Premotor and supplementary motor cortex: 333 px, fraction 0.1432258064516129",
    ]);

    // every rendered number is a verbatim substring of the response bytes
    for (const token of [
      "135",
      "0.05806451612903226",
      "436",
      "0.1875268817204301",
      "333",
      "0.1432258064516129",
    ]) {
      expect(SELECT_K2_BODY).toContain(token);
      expect(panel.root.textContent).toContain(token);
    }
  });

  it("renders the tumor report into the right column only", () => {
    const panel = new ReportPanel(doc);
    panel.show(JSON.parse(SELECT_TUMOR_BODY) as SelectResponse);
    expect(rows(panel, "left")).toEqual([]);
    expect(rows(panel, "right")).toEqual([
      "4 - Primary motor cortex: 144 px, fraction 1",
    ]);
  });

  it("says so when no areas are affected", () => {
    const panel = new ReportPanel(doc);
    panel.show(JSON.parse(EMPTY_REPORT_BODY) as SelectResponse);
    expect(panel.root.textContent).toContain("no areas affected");
    expect(panel.root.querySelector(".columns")).toBeNull();
  });

  it("preserves the server's row order", () => {
    const panel = new ReportPanel(doc);
    const scrambled: SelectResponse = {
      left: [],
      right: [
        { area: 40, name: "B", pixels: 2, fraction: 0.5 },
        { area: 3, name: "A", pixels: 1, fraction: 0.25 },
      ],
    };
    panel.show(scrambled);
    const right = rows(panel, "right");
    expect(right[0]).toMatch(/^40 /);
    expect(right[1]).toMatch(/^3 /);
  });

  it("clears back to the placeholder", () => {
    const panel = new ReportPanel(doc);
    panel.show(JSON.parse(SELECT_K2_BODY) as SelectResponse);
    panel.clear();
    expect(panel.root.textContent).toContain("no selection yet");
    expect(panel.root.querySelector("li")).toBeNull();
  });
});
