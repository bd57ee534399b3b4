/** Aspect-opinion summarization panel: two-level drill-down.
 *
 * Collapsed categories show "<Name> · <n> sentences · <rating>"; expanding
 * reveals the children (General included) with their own counts, ratings
 * and a "view sentences" button. Every number comes straight off the API
 * payload; nothing is recomputed client-side.
 */

import type { ProductSummary, SummaryNode } from "../api.js";
import type { ViewState } from "../state.js";
import { displayName, el, ratingText, ratingPercent } from "../format.js";

export interface SummaryHandlers {
  onToggleCategory(productId: string, category: string): void;
  onViewSentences(productId: string, category: string, child: string): void;
}

function ratingBar(rating: number | null): HTMLElement {
  const bar = el("span", "rating-bar");
  if (rating !== null) {
    const fill = el("span", "rating-bar-fill");
    fill.style.width = `${ratingPercent(rating)}%`;
    bar.appendChild(fill);
  }
  return bar;
}

function rowLabel(node: SummaryNode): string {
  if (node.nSentences === 0) {
    return `${displayName(node.term)} · no opinions`;
  }
  return `${displayName(node.term)} · ${node.nSentences} sentences · ${ratingText(node.rating)}`;
}

function renderChild(
  productId: string,
  category: string,
  child: SummaryNode,
  handlers: SummaryHandlers,
): HTMLElement {
  const row = el("li", "child-row");
  row.dataset.child = child.term;
  row.appendChild(el("span", "child-label", rowLabel(child)));
  row.appendChild(ratingBar(child.rating));
  const view = el("button", "view-sentences", "view sentences");
  view.addEventListener("click", () =>
    handlers.onViewSentences(productId, category, child.term),
  );
  row.appendChild(view);
  return row;
}

export function renderSummaryPanel(
  summary: ProductSummary,
  state: ViewState,
  handlers: SummaryHandlers,
): HTMLElement {
  const panel = el("section", "panel summary-panel");
  panel.appendChild(el("h2", "panel-title", `Aspect summary · ${summary.title}`));
  const list = el("ul", "category-list");
  for (const category of summary.categories) {
    const item = el("li", "category-row");
    item.dataset.category = category.term;
    const header = el("button", "category-header", rowLabel(category));
    header.addEventListener("click", () =>
      handlers.onToggleCategory(summary.productId, category.term),
    );
    item.appendChild(header);
    item.appendChild(ratingBar(category.rating));
    if (category.nSentences === 0) {
      item.classList.add("no-opinions");
    }
    if (state.isExpanded(summary.productId, category.term)) {
      const children = el("ul", "child-list");
      for (const child of category.children) {
        children.appendChild(renderChild(summary.productId, category.term, child, handlers));
      }
      item.appendChild(children);
    }
    list.appendChild(item);
  }
  panel.appendChild(list);
  return panel;
}
