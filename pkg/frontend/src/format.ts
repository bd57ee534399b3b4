/** Small display helpers. Numbers are rendered exactly as the API served
 * them; nothing here recomputes a count or a rating. */

export function displayName(term: string): string {
  if (!term) return term;
  return term.charAt(0).toUpperCase() + term.slice(1);
}

export function ratingText(rating: number | null): string {
  return rating === null ? "–" : rating.toFixed(1);
}

/** Bar geometry for a 1..5 rating (presentation only). */
export function ratingPercent(rating: number): number {
  return ((rating - 1) / 4) * 100;
}

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}
