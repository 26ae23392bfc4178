/** Exploration tracking: which uses were opened, persisted per dataset
 * version, with a counter that changes color tier as coverage grows. */

import { loadJson, removeKey, saveJson } from "./storage.js";

/** Counter color tiers switch at these explored counts. */
export const TIER_THRESHOLDS: readonly [number, number] = [10, 30];

export type ExplorationListener = (count: number, tier: number) => void;

export class ExplorationStore {
  private explored: Set<string>;
  private listeners: ExplorationListener[] = [];

  constructor(
    private storageKey: string,
    private thresholds: readonly [number, number] = TIER_THRESHOLDS,
  ) {
    this.explored = new Set(loadJson<string[]>(storageKey, []));
  }

  /** Key is namespaced by dataset version so a new dataset starts fresh. */
  static forDataset(schemaVersion: number, technology: string): ExplorationStore {
    return new ExplorationStore(`explored:v${schemaVersion}:${technology}`);
  }

  get count(): number {
    return this.explored.size;
  }

  /** 0 before the first threshold, then 1, then 2. */
  get tier(): number {
    if (this.explored.size >= this.thresholds[1]) return 2;
    if (this.explored.size >= this.thresholds[0]) return 1;
    return 0;
  }

  isExplored(id: string): boolean {
    return this.explored.has(id);
  }

  /** Record a profile opening; re-opening the same use is a no-op. */
  explore(id: string): void {
    if (this.explored.has(id)) return;
    this.explored.add(id);
    saveJson(this.storageKey, [...this.explored].sort());
    this.notify();
  }

  reset(): void {
    this.explored.clear();
    removeKey(this.storageKey);
    this.notify();
  }

  onChange(listener: ExplorationListener): void {
    this.listeners.push(listener);
    listener(this.count, this.tier);
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener(this.count, this.tier);
    }
  }
}

/** Bind a store to the counter element: text is the explored count, the
 * class encodes the color tier. */
export function bindCounter(store: ExplorationStore, element: HTMLElement): void {
  store.onChange((count, tier) => {
    element.textContent = String(count);
    element.classList.remove("tier-0", "tier-1", "tier-2");
    element.classList.add(`tier-${tier}`);
  });
}
