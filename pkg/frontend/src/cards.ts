/** Impact assessment cards: the mouseover tooltip and the full profile. */

import type { AssessmentEntry, LayerGroups, UseDetail, UseSummary } from "./types.js";

const LAYER_TITLES: [keyof LayerGroups, string][] = [
  ["capability", "Technical capability"],
  ["human-interaction", "Human interaction"],
  ["systemic-impact", "Systemic impact"],
];

const PARTIES = ["subject", "user", "society"] as const;

const RISK_LABELS: Record<string, string> = {
  unacceptable: "Unacceptable",
  high: "High risk",
  "limited-low": "Limited or low risk",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function illustrationFor(ref: string | null): HTMLElement {
  if (ref) {
    const img = el("img", "illustration") as HTMLImageElement;
    img.src = ref;
    img.alt = "illustration of the use";
    return img;
  }
  return el("div", "illustration placeholder", "◦");
}

/** Brief card shown on mouseover: illustration, one-liner, risk tag. */
export function renderTooltip(container: HTMLElement, use: UseSummary, ref: string | null = null): void {
  container.replaceChildren();
  const tooltip = el("div", "tooltip");
  tooltip.appendChild(illustrationFor(ref));
  tooltip.appendChild(el("p", "short-description", use.short_description));
  tooltip.appendChild(el("span", `risk-tag risk-${use.risk_level}`, RISK_LABELS[use.risk_level]));
  container.appendChild(tooltip);
  container.classList.remove("hidden");
}

export function hideTooltip(container: HTMLElement): void {
  container.classList.add("hidden");
  container.replaceChildren();
}

function affectedChecks(entry: AssessmentEntry): HTMLElement {
  const row = el("span", "affected");
  for (const party of PARTIES) {
    const checked = entry.affected.includes(party);
    const box = el("label", checked ? "party checked" : "party");
    box.textContent = `${checked ? "☑" : "☐"} ${party}`;
    row.appendChild(box);
  }
  return row;
}

function layeredSection(title: string, groups: LayerGroups): HTMLElement {
  const section = el("section", "card-section");
  section.appendChild(el("h3", undefined, title));
  for (const [key, layerTitle] of LAYER_TITLES) {
    const entries = groups[key];
    const block = el("div", `layer layer-${key}`);
    block.appendChild(el("h4", undefined, layerTitle));
    const list = el("ul");
    for (const entry of entries) {
      const item = el("li");
      item.appendChild(el("span", "text", entry.text));
      item.appendChild(affectedChecks(entry));
      if (entry.basis) item.appendChild(el("small", "basis", entry.basis));
      list.appendChild(item);
    }
    if (!entries.length) list.appendChild(el("li", "none", "none identified"));
    block.appendChild(list);
    section.appendChild(block);
  }
  return section;
}

/** Full profile: summary box plus benefits, risks, and mitigations. */
export function renderProfile(container: HTMLElement, detail: UseDetail): void {
  container.replaceChildren();
  const profile = el("article", "profile");

  const close = el("button", "close", "×");
  close.addEventListener("click", () => hideProfile(container));
  profile.appendChild(close);

  const summary = el("header", "summary-box");
  summary.appendChild(illustrationFor(detail.card.illustration_ref));
  const overview = el("div", "overview");
  overview.appendChild(el("h2", undefined, detail.use.short_description));
  overview.appendChild(el("p", "long-description", detail.use.long_description));
  overview.appendChild(
    el("span", `risk-tag risk-${detail.use.risk_level}`, RISK_LABELS[detail.use.risk_level]),
  );
  summary.appendChild(overview);
  profile.appendChild(summary);

  profile.appendChild(layeredSection("Benefits", detail.card.benefits));
  profile.appendChild(layeredSection("Risks", detail.card.risks));

  const mitigations = el("section", "card-section mitigations");
  mitigations.appendChild(el("h3", undefined, "Mitigations"));
  const list = el("ul");
  for (const m of detail.card.mitigations) {
    list.appendChild(el("li", undefined, m.text));
  }
  if (!detail.card.mitigations.length) list.appendChild(el("li", "none", "none proposed"));
  mitigations.appendChild(list);
  mitigations.appendChild(el("p", "mitigated", detail.card.mitigated_description));
  mitigations.appendChild(
    el(
      "span",
      `risk-tag risk-${detail.card.mitigated_risk_level}`,
      `After mitigation: ${RISK_LABELS[detail.card.mitigated_risk_level]}`,
    ),
  );
  profile.appendChild(mitigations);

  container.appendChild(profile);
  container.classList.remove("hidden");
}

export function hideProfile(container: HTMLElement): void {
  container.classList.add("hidden");
  container.replaceChildren();
}

/** Small transient error notice (e.g. a profile that 404s). */
export function toast(message: string): void {
  const note = el("div", "toast", message);
  document.body.appendChild(note);
  setTimeout(() => note.remove(), 4000);
}
