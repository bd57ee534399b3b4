/** Exploration panel error surfaces and polarity grouping. */

import { beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { ExplorerApp } from "../src/app.js";
import { renderExplorePanel } from "../src/render/explore.js";
import { ALPHA_ID, flush, mockApi } from "./helpers.js";

const aspect = { productId: "p", category: "screen", child: "General" };

describe("explore panel states", () => {
  it("renders positive and negative groups distinctly", () => {
    const panel = renderExplorePanel(
      {
        status: "ready",
        aspect,
        sentences: [
          { text: "great", polarity: "positive" },
          { text: "awful", polarity: "negative" },
        ],
      },
      { onRetry: () => {} },
    );
    expect(panel.querySelector(".sentence-group.positive .sentence")?.textContent).toBe("great");
    expect(panel.querySelector(".sentence-group.negative .sentence")?.textContent).toBe("awful");
  });

  it("shows a retry affordance on network failure and retries on click", () => {
    const onRetry = vi.fn();
    const panel = renderExplorePanel(
      { status: "error", aspect, httpStatus: null },
      { onRetry },
    );
    const retry = panel.querySelector(".retry") as HTMLButtonElement;
    expect(retry).not.toBeNull();
    retry.click();
    expect(onRetry).toHaveBeenCalledWith(aspect);
  });

  it("renders 404 as a data-inconsistency warning", () => {
    const panel = renderExplorePanel(
      { status: "error", aspect, httpStatus: 404 },
      { onRetry: () => {} },
    );
    expect(panel.querySelector(".banner.inconsistent")).not.toBeNull();
  });

  it("renders 503 as a blocking no-store banner", () => {
    const panel = renderExplorePanel(
      { status: "error", aspect, httpStatus: 503 },
      { onRetry: () => {} },
    );
    expect(panel.querySelector(".banner.no-store")?.textContent).toContain("No summary store");
  });
});

describe("app-level error wiring", () => {
  beforeEach(() => {
    document.body.innerHTML = '<main id="app"></main>';
  });

  it("surfaces sentence-request failures in the panel", async () => {
    const root = document.getElementById("app")!;
    const { fetchFn } = mockApi({ sentenceStatus: 503 });
    const app = new ExplorerApp(root, new ApiClient("", fetchFn));
    await app.start();
    (root.querySelector(`[data-product-id="${ALPHA_ID}"] .product-select`) as HTMLButtonElement).click();
    await flush();
    (root.querySelector('[data-category="screen"] .category-header') as HTMLButtonElement).click();
    await flush();
    (root.querySelector('[data-child="General"] .view-sentences') as HTMLButtonElement).click();
    await flush();
    expect(root.querySelector(".explore-panel .banner.no-store")).not.toBeNull();
  });

  it("shows the blocking banner when the store is missing at startup", async () => {
    const root = document.getElementById("app")!;
    const fetchFn = async () =>
      new Response(JSON.stringify({ detail: { code: "no_store" } }), { status: 503 });
    const app = new ExplorerApp(root, new ApiClient("", fetchFn));
    await app.start();
    expect(root.querySelector(".banner.no-store")).not.toBeNull();
  });
});
