/** View state: selections, expanded categories, and the active aspect. */

export const MAX_COMPARED = 4;

export interface ActiveAspect {
  productId: string;
  category: string;
  child: string;
}

export class ViewState {
  readonly selectedProducts: string[] = [];
  private expanded = new Map<string, Set<string>>();
  activeAspect: ActiveAspect | null = null;

  isSelected(productId: string): boolean {
    return this.selectedProducts.includes(productId);
  }

  /** Toggle product selection; returns false when the cap would be exceeded. */
  toggleProduct(productId: string): boolean {
    const at = this.selectedProducts.indexOf(productId);
    if (at >= 0) {
      this.selectedProducts.splice(at, 1);
      if (this.activeAspect?.productId === productId) {
        this.activeAspect = null;
      }
      return true;
    }
    if (this.selectedProducts.length >= MAX_COMPARED) {
      return false;
    }
    this.selectedProducts.push(productId);
    return true;
  }

  isExpanded(productId: string, category: string): boolean {
    return this.expanded.get(productId)?.has(category) ?? false;
  }

  toggleCategory(productId: string, category: string): void {
    let set = this.expanded.get(productId);
    if (!set) {
      set = new Set();
      this.expanded.set(productId, set);
    }
    if (set.has(category)) {
      set.delete(category);
      const active = this.activeAspect;
      if (active && active.productId === productId && active.category === category) {
        this.activeAspect = null; // the active aspect must stay visible
      }
    } else {
      set.add(category);
    }
  }

  /** The active aspect must refer to an expanded category. */
  setActiveAspect(aspect: ActiveAspect): boolean {
    if (!this.isExpanded(aspect.productId, aspect.category)) {
      return false;
    }
    this.activeAspect = aspect;
    return true;
  }

  canCompare(): boolean {
    return this.selectedProducts.length >= 2;
  }
}
