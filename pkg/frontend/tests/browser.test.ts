import { describe, expect, it, vi } from "vitest";

import { ReviewApi } from "../src/api.js";
import { App, fragmentSlice } from "../src/main.js";
import { SliceBrowser } from "../src/slice_browser.js";
import { ViewState } from "../src/state.js";
import {
  SEGMENT_BODY,
  SESSION_BODY,
  SESSION_ID,
  jsonResponse,
  stubFetch,
} from "./fixtures.js";

function makeBrowser(onChange: (i: number) => void = () => undefined) {
  const api = new ReviewApi(() => Promise.reject(new Error("no fetch")));
  const state = new ViewState(SESSION_ID, 16);
  const browser = new SliceBrowser(document, api, state, onChange);
  return { browser, state };
}

function counter(browser: SliceBrowser): string {
  return browser.root.querySelector(".counter")?.textContent ?? "";
}

describe("SliceBrowser", () => {
  it("shows the 1-based counter and the current slice image", () => {
    const { browser } = makeBrowser();
    expect(counter(browser)).toBe("1/16");
    const img = browser.root.querySelector("img.slice");
    expect(img?.getAttribute("src")).toBe(
      `/api/v1/sessions/${SESSION_ID}/slices/0.png`,
    );
  });

  it("steps forward and back, updating image and counter", () => {
    const seen: number[] = [];
    const { browser } = makeBrowser((i) => seen.push(i));
    browser.root.querySelector<HTMLElement>("button.next")?.click();
    expect(counter(browser)).toBe("2/16");
    browser.root.querySelector<HTMLElement>("button.prev")?.click();
    expect(counter(browser)).toBe("1/16");
    expect(seen).toEqual([1, 0]);
    const img = browser.root.querySelector("img.slice");
    expect(img?.getAttribute("src")).toBe(
      `/api/v1/sessions/${SESSION_ID}/slices/0.png`,
    );
  });

  it("clamps at the first slice without firing onChange", () => {
    const onChange = vi.fn();
    const { browser } = makeBrowser(onChange);
    browser.root.querySelector<HTMLElement>("button.prev")?.click();
    expect(counter(browser)).toBe("1/16");
    expect(onChange).not.toHaveBeenCalled();
  });

  it("clamps at the last slice", () => {
    const onChange = vi.fn();
    const { browser, state } = makeBrowser(onChange);
    state.goTo(15);
    browser.render();
    browser.root.querySelector<HTMLElement>("button.next")?.click();
    expect(counter(browser)).toBe("16/16");
    expect(onChange).not.toHaveBeenCalled();
  });
});

describe("fragmentSlice", () => {
  it("parses a slice fragment", () => {
    expect(fragmentSlice("#slice=0")).toBe(0);
    expect(fragmentSlice("#slice=12")).toBe(12);
  });

  it("rejects everything else", () => {
    expect(fragmentSlice("")).toBeNull();
    expect(fragmentSlice("#")).toBeNull();
    expect(fragmentSlice("#slice=")).toBeNull();
    expect(fragmentSlice("#slice=-1")).toBeNull();
    expect(fragmentSlice("#slice=abc")).toBeNull();
    expect(fragmentSlice("#other=3")).toBeNull();
  });
});

describe("App", () => {
  it("opens a session and starts at the slice named in the URL fragment", async () => {
    const { fetchFn, calls } = stubFetch([
      jsonResponse(SESSION_BODY, 201),
      jsonResponse(SEGMENT_BODY),
    ]);
    const win = { location: { hash: "#slice=5" } };
    const app = new App(document, win, fetchFn);
    const state = await app.openSession(new ArrayBuffer(16));

    expect(state.sliceIndex).toBe(5);
    expect(calls[0]?.url).toBe("/api/v1/sessions");
    expect(calls[1]?.url).toBe(
      `/api/v1/sessions/${SESSION_ID}/slices/5/segment`,
    );
    expect(app.root.querySelector(".slice-browser")).not.toBeNull();
    expect(app.root.querySelector(".gallery")).not.toBeNull();
    expect(app.root.querySelector(".report-panel")?.textContent).toContain(
      "no selection yet",
    );
    expect(app.root.querySelectorAll(".panel")).toHaveLength(5);
  });

  it("ignores a fragment pointing past the end by clamping", async () => {
    const { fetchFn, calls } = stubFetch([
      jsonResponse(SESSION_BODY, 201),
      jsonResponse(SEGMENT_BODY.replaceAll("/slices/5/", "/slices/19/")),
    ]);
    const win = { location: { hash: "#slice=99" } };
    const app = new App(document, win, fetchFn);
    const state = await app.openSession(new ArrayBuffer(16));
    expect(state.sliceIndex).toBe(19);
    expect(calls[1]?.url).toBe(
      `/api/v1/sessions/${SESSION_ID}/slices/19/segment`,
    );
  });
});
