/** The dot map: one SVG circle per use, positioned by the unified layout or
 * the risk-split layout, with highlight/dim states for filtering. */

import type { UseSummary } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW = 100;

export type MapMode = "unified" | "split";

/** Risk-split band labels, left to right. */
const BANDS: { label: string; x: number }[] = [
  { label: "Unacceptable", x: 15 },
  { label: "High", x: 50 },
  { label: "Low", x: 85 },
];

export interface MapCallbacks {
  onHover?: (use: UseSummary | null, event: MouseEvent) => void;
  onOpen?: (use: UseSummary) => void;
}

export class AtlasMap {
  private svg: SVGSVGElement;
  private dotLayer: SVGGElement;
  private labelLayer: SVGGElement;
  private dots = new Map<string, SVGCircleElement>();
  private uses = new Map<string, UseSummary>();
  private emptyMessage: SVGTextElement;
  mode: MapMode = "unified";

  constructor(
    private container: HTMLElement,
    private callbacks: MapCallbacks = {},
  ) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`);
    this.svg.classList.add("atlas-map");
    this.labelLayer = document.createElementNS(SVG_NS, "g");
    this.labelLayer.classList.add("band-labels", "hidden");
    this.dotLayer = document.createElementNS(SVG_NS, "g");
    this.emptyMessage = document.createElementNS(SVG_NS, "text");
    this.emptyMessage.setAttribute("x", String(VIEW / 2));
    this.emptyMessage.setAttribute("y", String(VIEW / 2));
    this.emptyMessage.classList.add("empty-state", "hidden");
    this.emptyMessage.textContent = "No uses to show";
    for (const band of BANDS) {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(band.x));
      label.setAttribute("y", "4");
      label.classList.add("band-label");
      label.textContent = band.label;
      this.labelLayer.appendChild(label);
    }
    this.svg.append(this.labelLayer, this.dotLayer, this.emptyMessage);
    container.appendChild(this.svg);
  }

  /** Render one dot per use; daily uses get their own color class. */
  setData(uses: UseSummary[]): void {
    this.dotLayer.replaceChildren();
    this.dots.clear();
    this.uses.clear();
    this.emptyMessage.classList.toggle("hidden", uses.length > 0);
    for (const use of uses) {
      const dot = document.createElementNS(SVG_NS, "circle");
      dot.setAttribute("r", "0.9");
      dot.classList.add("dot", use.daily ? "daily" : "non-daily", `risk-${use.risk_level}`);
      dot.dataset.id = use.id;
      dot.addEventListener("mouseenter", (event) => this.callbacks.onHover?.(use, event));
      dot.addEventListener("mouseleave", (event) => this.callbacks.onHover?.(null, event));
      dot.addEventListener("click", () => this.callbacks.onOpen?.(use));
      this.dots.set(use.id, dot);
      this.uses.set(use.id, use);
      this.dotLayer.appendChild(dot);
    }
    this.applyPositions();
  }

  get size(): number {
    return this.dots.size;
  }

  /** Animated transition between the unified and risk-split layouts;
   * toggling twice restores the original positions exactly. */
  toggleSplit(): MapMode {
    this.mode = this.mode === "unified" ? "split" : "unified";
    this.labelLayer.classList.toggle("hidden", this.mode !== "split");
    this.applyPositions();
    return this.mode;
  }

  setMode(mode: MapMode): void {
    if (mode !== this.mode) this.toggleSplit();
  }

  /** Current dot positions keyed by use id (test/observability hook). */
  positions(): Record<string, [number, number]> {
    const out: Record<string, [number, number]> = {};
    for (const [id, dot] of this.dots) {
      out[id] = [Number(dot.getAttribute("cx")), Number(dot.getAttribute("cy"))];
    }
    return out;
  }

  /** Highlight the given ids (optionally in a palette color) and dim the
   * rest; null clears back to the plain view. */
  setHighlight(ids: Set<string> | null, color?: string): void {
    for (const [id, dot] of this.dots) {
      if (ids === null) {
        dot.classList.remove("highlight", "dimmed");
        dot.style.removeProperty("fill");
      } else if (ids.has(id)) {
        dot.classList.add("highlight");
        dot.classList.remove("dimmed");
        if (color) dot.style.setProperty("fill", color);
        else dot.style.removeProperty("fill");
      } else {
        dot.classList.add("dimmed");
        dot.classList.remove("highlight");
        dot.style.removeProperty("fill");
      }
    }
  }

  /** Color dots by whether their use matches each category color. */
  paintByColor(colors: Map<string, string>): void {
    for (const [id, dot] of this.dots) {
      const color = colors.get(id);
      if (color) dot.style.setProperty("fill", color);
      else dot.style.removeProperty("fill");
    }
  }

  markExplored(id: string): void {
    this.dots.get(id)?.classList.add("explored");
  }

  dot(id: string): SVGCircleElement | null {
    return this.dots.get(id) ?? null;
  }

  private applyPositions(): void {
    for (const [id, dot] of this.dots) {
      const use = this.uses.get(id)!;
      const x = this.mode === "split" ? use.split_x : use.x;
      const y = this.mode === "split" ? use.split_y : use.y;
      dot.setAttribute("cx", (x * VIEW).toFixed(3));
      dot.setAttribute("cy", (y * VIEW).toFixed(3));
    }
  }
}
