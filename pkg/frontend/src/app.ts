/** Wires the API client, view state and the three panels into a root node.
 *
 * Sentences are requested only from the view-sentences handler; selecting
 * products or expanding categories never touches the sentences endpoint.
 */

import { ApiClient, ApiError } from "./api.js";
import type { ProductListItem, ProductSummary } from "./api.js";
import { MAX_COMPARED, ViewState } from "./state.js";
import type { ActiveAspect } from "./state.js";
import { renderProductsPanel } from "./render/products.js";
import { renderSummaryPanel } from "./render/summary.js";
import { renderCompareView } from "./render/compare.js";
import { renderExplorePanel } from "./render/explore.js";
import type { ExploreData } from "./render/explore.js";
import { el } from "./format.js";

export class ExplorerApp {
  readonly state = new ViewState();
  private products: ProductListItem[] = [];
  private summaries = new Map<string, ProductSummary>();
  private explore: ExploreData = { status: "empty" };
  private notice = "";

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {}

  async start(): Promise<void> {
    try {
      this.products = await this.api.products();
    } catch (error) {
      if (error instanceof ApiError && error.status === 503) {
        this.root.replaceChildren(
          el("div", "banner no-store", "No summary store is loaded. Run the pipeline first."),
        );
        return;
      }
      throw error;
    }
    this.render();
  }

  async toggleProduct(productId: string): Promise<void> {
    if (!this.state.toggleProduct(productId)) {
      this.notice = `At most ${MAX_COMPARED} products can be compared.`;
      this.render();
      return;
    }
    this.notice = "";
    if (this.state.isSelected(productId) && !this.summaries.has(productId)) {
      this.summaries.set(productId, await this.api.summary(productId));
    }
    this.render();
  }

  toggleCategory(productId: string, category: string): void {
    this.state.toggleCategory(productId, category);
    const active = this.state.activeAspect;
    if (!active) {
      this.explore = { status: "empty" };
    }
    this.render();
  }

  async viewSentences(productId: string, category: string, child: string): Promise<void> {
    const aspect: ActiveAspect = { productId, category, child };
    if (!this.state.setActiveAspect(aspect)) {
      return;
    }
    this.explore = { status: "loading", aspect };
    this.render();
    try {
      const sentences = await this.api.sentences(productId, category, child);
      this.explore = { status: "ready", aspect, sentences };
    } catch (error) {
      const status = error instanceof ApiError ? error.status : null;
      this.explore = { status: "error", aspect, httpStatus: status };
    }
    this.render();
  }

  private render(): void {
    const products = renderProductsPanel(this.products, this.state, {
      onToggleProduct: (id) => void this.toggleProduct(id),
    });

    const middle = el("div", "middle-column");
    if (this.notice) {
      middle.appendChild(el("div", "banner notice", this.notice));
    }
    const selected = this.state.selectedProducts
      .map((id) => this.summaries.get(id))
      .filter((s): s is ProductSummary => s !== undefined);
    if (selected.length === 0) {
      const placeholder = el("section", "panel summary-panel");
      placeholder.appendChild(el("h2", "panel-title", "Aspect summary"));
      placeholder.appendChild(el("p", "empty-state", "Select a product."));
      middle.appendChild(placeholder);
    } else {
      for (const summary of selected) {
        middle.appendChild(
          renderSummaryPanel(summary, this.state, {
            onToggleCategory: (pid, cat) => this.toggleCategory(pid, cat),
            onViewSentences: (pid, cat, child) => void this.viewSentences(pid, cat, child),
          }),
        );
      }
    }
    if (this.state.canCompare()) {
      middle.appendChild(renderCompareView(selected));
    } else {
      const disabled = el("button", "compare-control", "Compare");
      disabled.disabled = true;
      disabled.title = "Select at least two products";
      middle.appendChild(disabled);
    }

    const explore = renderExplorePanel(this.explore, {
      onRetry: (aspect) => void this.viewSentences(aspect.productId, aspect.category, aspect.child),
    });

    this.root.replaceChildren(products, middle, explore);
  }
}
