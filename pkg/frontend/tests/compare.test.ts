/** Compare view: aligned category rows across products from one run. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ExplorerApp } from "../src/app.js";
import { renderCompareView } from "../src/render/compare.js";
import type { ProductSummary } from "../src/api.js";
import { ALPHA_ID, BETA_ID, GOLDEN, flush, mockApi } from "./helpers.js";

function summaries(): [ProductSummary, ProductSummary] {
  return [
    structuredClone(GOLDEN.summaries[ALPHA_ID]),
    structuredClone(GOLDEN.summaries[BETA_ID]),
  ];
}

describe("compare view", () => {
  it("aligns category rows across the two fixture products", () => {
    const [alpha, beta] = summaries();
    const view = renderCompareView([alpha, beta]);
    const rows = [...view.querySelectorAll(".compare-row")];
    const rowTerms = rows.map((row) => (row as HTMLElement).dataset.category);
    expect(rowTerms).toEqual(alpha.categories.map((c) => c.term));
    // both products share the hierarchy, so every row has a cell per product
    const betaTerms = new Set(beta.categories.map((c) => c.term));
    for (const row of rows) {
      expect(row.querySelectorAll(".compare-cell")).toHaveLength(2);
      expect(betaTerms.has((row as HTMLElement).dataset.category!)).toBe(true);
    }
  });

  it("shows served ratings side by side", () => {
    const view = renderCompareView(summaries());
    const screenRow = view.querySelector('[data-category="screen"]')!;
    const cells = [...screenRow.querySelectorAll(".compare-cell")].map((c) => c.textContent);
    expect(cells).toEqual(["4.2 (5)", "3.0 (2)"]);
  });

  it("leaves blanks for categories with no sentences", () => {
    const [alpha, beta] = summaries();
    const price = beta.categories.find((c) => c.term === "price")!;
    price.nSentences = 0;
    price.nPos = 0;
    price.nNeg = 0;
    price.rating = null;
    const view = renderCompareView([alpha, beta]);
    const priceRow = view.querySelector('[data-category="price"]')!;
    const cells = [...priceRow.querySelectorAll(".compare-cell")];
    expect(cells[0].textContent).not.toBe("");
    expect(cells[1].textContent).toBe("");
    expect(cells[1].classList.contains("blank")).toBe(true);
  });

  it("requires two products before the compare control activates", async () => {
    document.body.innerHTML = '<main id="app"></main>';
    const root = document.getElementById("app")!;
    const { fetchFn } = mockApi();
    const app = new ExplorerApp(root, new ApiClient("", fetchFn));
    await app.start();

    const disabled = root.querySelector(".compare-control") as HTMLButtonElement;
    expect(disabled.disabled).toBe(true);
    expect(root.querySelector(".compare-table")).toBeNull();

    (root.querySelector(`[data-product-id="${ALPHA_ID}"] .product-select`) as HTMLButtonElement).click();
    await flush();
    expect(root.querySelector(".compare-table")).toBeNull();

    (root.querySelector(`[data-product-id="${BETA_ID}"] .product-select`) as HTMLButtonElement).click();
    await flush();
    const table = root.querySelector(".compare-table");
    expect(table).not.toBeNull();
    expect(table!.querySelectorAll(".compare-row")).toHaveLength(3);
  });
});
