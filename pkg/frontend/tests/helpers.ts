/** Test scaffolding: a synthetic 138-use dataset, a GET-only fetch stub that
 * mimics the service contract, and the DOM shell boot() expects. */

import type { CardDetail, Meta, RiskLevel, UseDetail, UseRecord, UseSummary } from "../src/types.js";

export const CATEGORIES = [
  "application-area:public-sector",
  "application-area:law-enforcement",
  "application-area:commerce",
  "application-area:health",
  "subject:children",
  "subject:general-public",
  "subject:workers",
  "impact:critical-infrastructure",
  "impact:entertainment",
  "use:daily",
];

const BANDS: Record<RiskLevel, [number, number]> = {
  unacceptable: [0.0, 0.3],
  high: [0.35, 0.65],
  "limited-low": [0.7, 1.0],
};

/** Small deterministic generator so fixtures are stable across runs. */
function lcg(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state * 1664525 + 1013904223) >>> 0;
    return state / 2 ** 32;
  };
}

export interface StubDataset {
  meta: Meta;
  uses: UseSummary[];
  records: Map<string, UseRecord>;
  cards: Map<string, CardDetail>;
}

export function makeDataset(count = 138): StubDataset {
  const rand = lcg(42);
  const uses: UseSummary[] = [];
  const records = new Map<string, UseRecord>();
  const cards = new Map<string, CardDetail>();

  for (let i = 0; i < count; i++) {
    const id = `use-${String(i).padStart(12, "0")}`;
    const risk: RiskLevel = i < 10 ? "unacceptable" : i < 76 ? "high" : "limited-low";
    const daily = i % 2 === 0;
    const x = rand();
    const y = rand();
    const [lo, hi] = BANDS[risk];
    const summary: UseSummary = {
      id,
      short_description: `synthetic use ${i} ${i % 3 === 0 ? "border" : "service"}`,
      risk_level: risk,
      daily,
      implementation_potential: "existing",
      x,
      y,
      split_x: lo + x * (hi - lo),
      split_y: y,
    };
    uses.push(summary);

    const categories: Record<string, boolean> = {};
    CATEGORIES.forEach((name, j) => {
      categories[name] = name === "use:daily" ? daily : (i + j) % 5 === 0;
    });
    records.set(id, {
      id,
      purpose: `purpose ${i}`,
      capability: `capability ${i}`,
      ai_user: `user ${i}`,
      ai_subject: `subject ${i}`,
      domain: `domain ${i % 7}`,
      short_description: summary.short_description,
      long_description: `long description of synthetic use ${i}`,
      daily,
      implementation_potential: "existing",
      risk_level: risk,
      categories,
      source_incident_ids: [],
    });
    cards.set(id, {
      use_id: id,
      risks: {
        capability: [{ text: `risk of use ${i}`, affected: ["subject"], basis: null }],
        "human-interaction": [],
        "systemic-impact": [{ text: "societal risk", affected: ["society"], basis: "Article 12" }],
      },
      benefits: {
        capability: [{ text: "works fast", affected: ["user"], basis: null }],
        "human-interaction": [],
        "systemic-impact": [],
      },
      mitigations: [{ text: "allow opt-out", layer: "human-interaction" }],
      mitigated_description: `mitigated version of use ${i}`,
      mitigated_risk_level: "limited-low",
      risk_reasoning: "synthetic reasoning",
      illustration_prompt: "Generate an image…",
      illustration_ref: null,
    });
  }

  const meta: Meta = {
    schema_version: 1,
    technology: "facial recognition",
    use_count: count,
    categories: CATEGORIES,
  };
  return { meta, uses, records, cards };
}

export interface FetchLog {
  method: string;
  url: string;
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function matchesQuery(record: UseRecord, q: string): boolean {
  const needle = q.toLowerCase();
  return [
    record.short_description,
    record.long_description,
    record.purpose,
    record.capability,
    record.ai_user,
    record.ai_subject,
    record.domain,
  ].some((hay) => hay.toLowerCase().includes(needle));
}

/** Install a fetch stub that serves the dataset; returns the request log. */
export function stubApi(dataset: StubDataset): FetchLog[] {
  const log: FetchLog[] = [];
  globalThis.fetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    log.push({ method, url });
    if (method !== "GET") return json({ detail: "method not allowed" }, 405);

    const parsed = new URL(url, "http://atlas.test");
    if (parsed.pathname === "/api/meta") return json(dataset.meta);

    if (parsed.pathname === "/api/uses") {
      const q = parsed.searchParams.get("q") ?? "";
      const category = parsed.searchParams.get("category") ?? "";
      const risk = parsed.searchParams.get("risk") ?? "";
      if (category && !CATEGORIES.includes(category)) return json({ detail: "bad category" }, 400);
      if (risk && !(risk in BANDS)) return json({ detail: "bad risk" }, 400);
      const selected = dataset.uses.filter((use) => {
        const record = dataset.records.get(use.id)!;
        if (q && !matchesQuery(record, q)) return false;
        if (category && !record.categories[category]) return false;
        if (risk && use.risk_level !== risk) return false;
        return true;
      });
      return json({ uses: selected });
    }

    const detailMatch = parsed.pathname.match(/^\/api\/uses\/(.+)$/);
    if (detailMatch) {
      const id = decodeURIComponent(detailMatch[1]!);
      const record = dataset.records.get(id);
      if (!record) return json({ detail: "unknown use" }, 404);
      const use = dataset.uses.find((u) => u.id === id)!;
      const detail: UseDetail = {
        use: record,
        card: dataset.cards.get(id)!,
        coords: [use.x, use.y],
        split_coords: [use.split_x, use.split_y],
      };
      return json(detail);
    }
    return json({ detail: "not found" }, 404);
  }) as typeof fetch;
  return log;
}

/** Install a fetch stub that always fails (service down). */
export function stubApiFailure(): void {
  globalThis.fetch = (async () => {
    throw new TypeError("fetch failed");
  }) as typeof fetch;
}

/** Build the DOM shell from index.html that boot() wires into. */
export function mountShell(): void {
  document.body.innerHTML = `
    <div id="banner" class="banner hidden"></div>
    <div id="layout">
      <main id="story"><div id="narrative-sections"></div></main>
      <div id="map-panel">
        <div id="map"></div>
        <div id="tooltip" class="hidden"></div>
        <div id="profile" class="hidden"></div>
      </div>
    </div>
    <div id="dashboard" class="locked">
      <input id="search" type="search" />
      <select id="category-filter"><option value=""></option></select>
      <select id="risk-filter">
        <option value=""></option>
        <option value="unacceptable">Unacceptable</option>
        <option value="high">High</option>
        <option value="limited-low">Limited or low</option>
      </select>
      <button id="clear-filters">Clear</button>
      <button id="toggle-split">Split by risk</button>
      <span>Explored: <span id="explored-counter" class="tier-0">0</span></span>
      <button id="reset-tour">Replay tour</button>
    </div>
    <div id="tour"></div>
  `;
}

export function resetBrowserState(): void {
  localStorage.clear();
  document.body.innerHTML = "";
}

/** Let queued microtasks (fetch chains) settle. */
export async function flush(): Promise<void> {
  for (let i = 0; i < 8; i++) {
    await Promise.resolve();
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
