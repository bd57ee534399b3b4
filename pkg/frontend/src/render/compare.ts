/** Side-by-side comparison: one aligned row per category across products.
 *
 * All selected products come from the same pipeline run, so they share one
 * hierarchy; rows are keyed by the first product's category order and every
 * product contributes a cell (blank when it has no sentences there).
 */

import type { ProductSummary, SummaryNode } from "../api.js";
import { displayName, el, ratingText } from "../format.js";

export function renderCompareView(summaries: ProductSummary[]): HTMLElement {
  const panel = el("section", "panel compare-panel");
  panel.appendChild(el("h2", "panel-title", "Compare"));
  if (summaries.length < 2) {
    panel.appendChild(
      el("p", "empty-state", "Select at least two products to compare."),
    );
    return panel;
  }
  const byProduct: Map<string, Map<string, SummaryNode>> = new Map();
  for (const summary of summaries) {
    byProduct.set(summary.productId, new Map(summary.categories.map((c) => [c.term, c])));
  }
  const rowTerms = summaries[0].categories.map((c) => c.term);

  const table = el("table", "compare-table");
  const head = el("tr");
  head.appendChild(el("th", "corner", "Aspect"));
  for (const summary of summaries) {
    head.appendChild(el("th", "product-column", summary.title));
  }
  table.appendChild(head);

  for (const term of rowTerms) {
    const row = el("tr", "compare-row");
    row.dataset.category = term;
    row.appendChild(el("th", "row-label", displayName(term)));
    for (const summary of summaries) {
      const node = byProduct.get(summary.productId)?.get(term);
      const cell = el("td", "compare-cell");
      if (node && node.nSentences > 0) {
        cell.textContent = `${ratingText(node.rating)} (${node.nSentences})`;
      } else {
        cell.textContent = "";
        cell.classList.add("blank");
      }
      row.appendChild(cell);
    }
    table.appendChild(row);
  }
  panel.appendChild(table);
  return panel;
}
