/** Summary-panel rendering: drill-down rows, served-number fidelity. */

import { describe, expect, it } from "vitest";

import { renderSummaryPanel } from "../src/render/summary.js";
import { ViewState } from "../src/state.js";
import type { ProductSummary } from "../src/api.js";
import { ALPHA_ID, GOLDEN } from "./helpers.js";

const noop = { onToggleCategory: () => {}, onViewSentences: () => {} };

function alphaSummary(): ProductSummary {
  return structuredClone(GOLDEN.summaries[ALPHA_ID]);
}

describe("summary panel", () => {
  it("renders the collapsed screen row exactly as served", () => {
    const panel = renderSummaryPanel(alphaSummary(), new ViewState(), noop);
    const screen = panel.querySelector('[data-category="screen"] .category-header');
    expect(screen?.textContent).toBe("Screen · 5 sentences · 4.2");
  });

  it("keeps children hidden until the category is expanded", () => {
    const state = new ViewState();
    const collapsed = renderSummaryPanel(alphaSummary(), state, noop);
    expect(collapsed.querySelectorAll(".child-row")).toHaveLength(0);

    state.toggleCategory(ALPHA_ID, "screen");
    const expanded = renderSummaryPanel(alphaSummary(), state, noop);
    const children = [...expanded.querySelectorAll('[data-category="screen"] .child-row')].map(
      (row) => (row as HTMLElement).dataset.child,
    );
    expect(children).toEqual(["General", "display", "resolution", "screen size"]);
    expect(
      expanded.querySelectorAll('[data-category="screen"] .view-sentences'),
    ).toHaveLength(4);
  });

  it("shows an explicit no-opinions state for zero-count rows", () => {
    const summary = alphaSummary();
    summary.categories = summary.categories.map((category) => ({
      ...category,
      nSentences: 0,
      nPos: 0,
      nNeg: 0,
      rating: null,
    }));
    const panel = renderSummaryPanel(summary, new ViewState(), noop);
    for (const row of panel.querySelectorAll(".category-header")) {
      expect(row.textContent).toContain("no opinions");
    }
  });

  it("displays served numbers verbatim, never recomputing them", () => {
    // a deliberately inconsistent payload: counts say 4.2, rating says 9.9.
    // The UI must show 9.9 - proof it echoes the API instead of computing.
    const summary = alphaSummary();
    const screen = summary.categories.find((c) => c.term === "screen")!;
    screen.rating = 9.9;
    const panel = renderSummaryPanel(summary, new ViewState(), noop);
    const header = panel.querySelector('[data-category="screen"] .category-header');
    expect(header?.textContent).toBe("Screen · 5 sentences · 9.9");
  });

  it("renders a proportional rating bar without changing the number", () => {
    const panel = renderSummaryPanel(alphaSummary(), new ViewState(), noop);
    const fill = panel.querySelector(
      '[data-category="screen"] .rating-bar-fill',
    ) as HTMLElement;
    expect(fill.style.width).toBe("80%"); // (4.2 - 1) / 4, presentation only
  });
});
