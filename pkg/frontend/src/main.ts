/** Wires the narrative atlas together: API data, dot map, cards, filters,
 * onboarding, and exploration tracking. Read-only against the service. */

import { ApiError, fetchMeta, fetchUseDetail, fetchUses } from "./api.js";
import { hideTooltip, renderProfile, renderTooltip, toast } from "./cards.js";
import { ExplorationStore, bindCounter } from "./exploration.js";
import { FilterPanel } from "./filters.js";
import { AtlasMap } from "./map.js";
import { NarrativeController, SECTIONS } from "./narrative.js";
import { OnboardingTour } from "./onboarding.js";
import type { UseFilters, UseSummary } from "./types.js";

/** Category colors; mirrors the default palette the pipeline ships. */
export const CATEGORY_PALETTE: Record<string, string> = {
  "application-area:public-sector": "#1f77b4",
  "application-area:law-enforcement": "#d62728",
  "application-area:commerce": "#ff7f0e",
  "application-area:health": "#2ca02c",
  "subject:children": "#9467bd",
  "subject:general-public": "#8c564b",
  "subject:workers": "#e377c2",
  "impact:critical-infrastructure": "#7f7f7f",
  "impact:entertainment": "#bcbd22",
  "use:daily": "#17becf",
};

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export interface App {
  map: AtlasMap;
  store: ExplorationStore;
  narrative: NarrativeController;
  tour: OnboardingTour;
  filters: FilterPanel;
  uses: UseSummary[];
}

/** Boot the UI against the DOM scaffold in index.html. */
export async function boot(): Promise<App | null> {
  const banner = byId<HTMLElement>("banner");
  const mapHost = byId<HTMLElement>("map");
  const tooltipHost = byId<HTMLElement>("tooltip");
  const profileHost = byId<HTMLElement>("profile");
  const dashboard = byId<HTMLElement>("dashboard");

  let uses: UseSummary[];
  let categories: string[];
  let storeKeyParts: { version: number; technology: string };
  try {
    const meta = await fetchMeta();
    uses = await fetchUses();
    categories = meta.categories;
    storeKeyParts = { version: meta.schema_version, technology: meta.technology };
  } catch (err) {
    banner.textContent =
      err instanceof ApiError && err.status > 0
        ? `The atlas service answered ${err.status}; try reloading.`
        : "Cannot reach the atlas service; is it running?";
    banner.classList.remove("hidden");
    return null;
  }

  const store = ExplorationStore.forDataset(storeKeyParts.version, storeKeyParts.technology);
  bindCounter(store, byId<HTMLElement>("explored-counter"));

  // illustration refs become known once a profile is fetched
  const illustrationRefs = new Map<string, string | null>();

  const map = new AtlasMap(mapHost, {
    onHover: (use) => {
      if (use) renderTooltip(tooltipHost, use, illustrationRefs.get(use.id) ?? null);
      else hideTooltip(tooltipHost);
    },
    onOpen: (use) => {
      void openProfile(use.id);
    },
  });
  map.setData(uses);
  for (const use of uses) {
    if (store.isExplored(use.id)) map.markExplored(use.id);
  }

  async function openProfile(id: string): Promise<void> {
    try {
      const detail = await fetchUseDetail(id);
      illustrationRefs.set(id, detail.card.illustration_ref);
      renderProfile(profileHost, detail);
      store.explore(id);
      map.markExplored(id);
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) toast(`Use ${id} was not found.`);
      else toast("Could not load the profile; try again.");
    }
  }

  // --- filters -------------------------------------------------------------
  const filters = new FilterPanel(
    byId<HTMLInputElement>("search"),
    byId<HTMLSelectElement>("category-filter"),
    byId<HTMLSelectElement>("risk-filter"),
    byId<HTMLButtonElement>("clear-filters"),
  );
  filters.setCategories(categories);
  filters.onChange((active: UseFilters) => {
    void applyFilters(active);
  });

  async function applyFilters(active: UseFilters): Promise<void> {
    if (!Object.keys(active).length) {
      map.setHighlight(null);
      return;
    }
    try {
      const matches = await fetchUses(active);
      const color = active.category ? CATEGORY_PALETTE[active.category] : undefined;
      map.setHighlight(new Set(matches.map((u) => u.id)), color);
    } catch {
      toast("Filtering failed; showing the full map.");
      map.setHighlight(null);
    }
  }

  // --- narrative -----------------------------------------------------------
  const story = byId<HTMLElement>("story");
  const sectionsHost = byId<HTMLElement>("narrative-sections");
  for (const spec of SECTIONS) {
    const section = document.createElement("section");
    section.className = "story-section";
    const h = document.createElement("h2");
    h.textContent = spec.title;
    const p = document.createElement("p");
    p.textContent = spec.text;
    section.append(h, p);
    sectionsHost.appendChild(section);
  }

  const sectionHeight = story.clientHeight || 600;
  const narrative = new NarrativeController(sectionHeight);
  const dailyIds = new Set(uses.filter((u) => u.daily).map((u) => u.id));

  // section 4 colors dots by their first matching category; membership comes
  // from one category-filtered query each, fetched once and cached
  let categoryColors: Map<string, string> | null = null;
  async function paletteColors(): Promise<Map<string, string>> {
    if (categoryColors) return categoryColors;
    const colors = new Map<string, string>();
    const groups = await Promise.all(
      categories.map(async (name) => ({ name, members: await fetchUses({ category: name }) })),
    );
    for (const group of groups) {
      const color = CATEGORY_PALETTE[group.name];
      if (!color) continue;
      for (const member of group.members) {
        if (!colors.has(member.id)) colors.set(member.id, color);
      }
    }
    categoryColors = colors;
    return colors;
  }

  narrative.onSection((_, spec) => {
    switch (spec.effect) {
      case "all":
        map.setMode("unified");
        map.setHighlight(null);
        break;
      case "daily":
        map.setMode("unified");
        map.setHighlight(dailyIds);
        break;
      case "split":
        map.setHighlight(null);
        map.setMode("split");
        break;
      case "palette":
        map.setMode("split");
        void paletteColors().then((colors) => map.paintByColor(colors));
        break;
      case "dashboard":
        map.paintByColor(new Map());
        map.setMode("unified");
        map.setHighlight(null);
        dashboard.classList.remove("locked");
        break;
    }
  });
  story.addEventListener("scroll", () => narrative.update(story.scrollTop));
  narrative.update(0);

  // --- dashboard controls ---------------------------------------------------
  byId<HTMLButtonElement>("toggle-split").addEventListener("click", () => map.toggleSplit());

  // --- onboarding ------------------------------------------------------------
  const tour = new OnboardingTour(byId<HTMLElement>("tour"));
  byId<HTMLButtonElement>("reset-tour").addEventListener("click", () => {
    OnboardingTour.reset();
    tour.start();
  });
  if (OnboardingTour.shouldShow()) tour.start();

  return { map, store, narrative, tour, filters, uses };
}
