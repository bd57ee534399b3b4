/** Product presentation panel: name, site, sentence volume, top aspects. */

import type { ProductListItem } from "../api.js";
import type { ViewState } from "../state.js";
import { displayName, el, ratingText } from "../format.js";

export interface ProductsHandlers {
  onToggleProduct(productId: string): void;
}

export function renderProductsPanel(
  products: ProductListItem[],
  state: ViewState,
  handlers: ProductsHandlers,
): HTMLElement {
  const panel = el("section", "panel products-panel");
  panel.appendChild(el("h2", "panel-title", "Products"));
  if (products.length === 0) {
    panel.appendChild(el("p", "empty-state", "No products in the store."));
    return panel;
  }
  const list = el("ul", "product-list");
  for (const product of products) {
    const item = el("li", "product-item");
    item.dataset.productId = product.productId;
    if (state.isSelected(product.productId)) {
      item.classList.add("selected");
    }
    const button = el("button", "product-select", product.title);
    button.addEventListener("click", () => handlers.onToggleProduct(product.productId));
    item.appendChild(button);
    item.appendChild(
      el("div", "product-meta", `${product.siteId} · ${product.totalSentences} sentences`),
    );
    const tops = el("div", "product-top-categories");
    for (const category of product.topCategories) {
      tops.appendChild(
        el(
          "span",
          "top-category",
          `${displayName(category.term)} ${ratingText(category.rating)}`,
        ),
      );
    }
    item.appendChild(tops);
    list.appendChild(item);
  }
  panel.appendChild(list);
  return panel;
}
