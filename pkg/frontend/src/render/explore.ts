/** Sentence exploration panel.
 *
 * Stays empty until an aspect is selected; sentences are fetched only on a
 * "view sentences" click (never prefetched) and rendered in distinct
 * positive / negative groups. Failures get explicit affordances: a retry
 * button for network errors, a data-inconsistency warning for 404 and a
 * blocking banner when no store is loaded (503).
 */

import type { SentenceItem } from "../api.js";
import type { ActiveAspect } from "../state.js";
import { displayName, el } from "../format.js";

export type ExploreData =
  | { status: "empty" }
  | { status: "loading"; aspect: ActiveAspect }
  | { status: "ready"; aspect: ActiveAspect; sentences: SentenceItem[] }
  | { status: "error"; aspect: ActiveAspect; httpStatus: number | null };

export interface ExploreHandlers {
  onRetry(aspect: ActiveAspect): void;
}

function group(title: string, items: SentenceItem[], polarity: string): HTMLElement {
  const box = el("div", `sentence-group ${polarity}`);
  box.appendChild(el("h3", "group-title", title));
  const list = el("ul", "sentence-list");
  for (const item of items) {
    list.appendChild(el("li", "sentence", item.text));
  }
  if (items.length === 0) {
    box.appendChild(el("p", "empty-state", "none"));
  } else {
    box.appendChild(list);
  }
  return box;
}

export function renderExplorePanel(data: ExploreData, handlers: ExploreHandlers): HTMLElement {
  const panel = el("section", "panel explore-panel");
  panel.appendChild(el("h2", "panel-title", "Opinion sentences"));
  switch (data.status) {
    case "empty":
      panel.appendChild(
        el("p", "empty-state", "Select an aspect and click “view sentences”."),
      );
      break;
    case "loading":
      panel.appendChild(el("p", "loading", "Loading…"));
      break;
    case "ready": {
      const { category, child } = data.aspect;
      panel.appendChild(
        el("p", "aspect-label", `${displayName(category)} / ${displayName(child)}`),
      );
      panel.appendChild(
        group("Positive", data.sentences.filter((s) => s.polarity === "positive"), "positive"),
      );
      panel.appendChild(
        group("Negative", data.sentences.filter((s) => s.polarity === "negative"), "negative"),
      );
      break;
    }
    case "error":
      if (data.httpStatus === 503) {
        panel.appendChild(
          el("div", "banner no-store", "No summary store is loaded. Run the pipeline first."),
        );
      } else if (data.httpStatus === 404) {
        panel.appendChild(
          el(
            "div",
            "banner inconsistent",
            "This aspect is missing from the server store (data inconsistency).",
          ),
        );
      } else {
        panel.appendChild(el("p", "error-text", "Could not load sentences."));
        const retry = el("button", "retry", "retry");
        retry.addEventListener("click", () => handlers.onRetry(data.aspect));
        panel.appendChild(retry);
      }
      break;
  }
  return panel;
}
