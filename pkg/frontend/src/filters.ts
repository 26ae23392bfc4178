/** Search box and filter dropdowns; selections are conjunctive and clearing
 * restores the full view. */

import type { UseFilters } from "./types.js";

export type FilterListener = (filters: UseFilters) => void;

export class FilterPanel {
  private listeners: FilterListener[] = [];

  constructor(
    private search: HTMLInputElement,
    private category: HTMLSelectElement,
    private risk: HTMLSelectElement,
    private clearButton: HTMLButtonElement,
  ) {
    search.addEventListener("input", () => this.emit());
    category.addEventListener("change", () => this.emit());
    risk.addEventListener("change", () => this.emit());
    clearButton.addEventListener("click", () => this.clear());
  }

  setCategories(names: string[]): void {
    for (const name of names) {
      const option = document.createElement("option");
      option.value = name;
      option.textContent = name;
      this.category.appendChild(option);
    }
  }

  get filters(): UseFilters {
    const filters: UseFilters = {};
    if (this.search.value.trim()) filters.q = this.search.value.trim();
    if (this.category.value) filters.category = this.category.value;
    if (this.risk.value) filters.risk = this.risk.value;
    return filters;
  }

  get empty(): boolean {
    return Object.keys(this.filters).length === 0;
  }

  clear(): void {
    this.search.value = "";
    this.category.value = "";
    this.risk.value = "";
    this.emit();
  }

  onChange(listener: FilterListener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener(this.filters);
    }
  }
}
