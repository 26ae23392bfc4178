/** First-visit guided tour over the dashboard, in a fixed topic order.
 * Skippable, and never shown again unless reset from settings. */

import { loadString, removeKey, saveString } from "./storage.js";

const DONE_KEY = "tour-done";

export interface TourStep {
  topic: string;
  title: string;
  text: string;
}

/** The five tour topics, in the order they are shown. */
export const TOUR_STEPS: readonly TourStep[] = [
  {
    topic: "interface",
    title: "The atlas",
    text: "The map shows every use as a dot; scroll through the story or jump straight in.",
  },
  {
    topic: "tooltips",
    title: "Quick look",
    text: "Hover a dot for a snapshot: what the use is and how risky it is.",
  },
  {
    topic: "profiles",
    title: "Full profile",
    text: "Click a dot to open its full card with benefits, risks, and mitigations.",
  },
  {
    topic: "search",
    title: "Search",
    text: "Type a keyword to light up every matching use.",
  },
  {
    topic: "filtering",
    title: "Filters",
    text: "Color-code the dots by category or risk level to compare groups.",
  },
];

export class OnboardingTour {
  private stepIndex = 0;
  private overlay: HTMLElement | null = null;

  constructor(private container: HTMLElement) {}

  /** True on first visit (or after a reset). */
  static shouldShow(): boolean {
    return loadString(DONE_KEY) === null;
  }

  static reset(): void {
    removeKey(DONE_KEY);
  }

  get active(): boolean {
    return this.overlay !== null;
  }

  get currentTopic(): string | null {
    return this.overlay ? TOUR_STEPS[this.stepIndex]!.topic : null;
  }

  start(): void {
    this.stepIndex = 0;
    this.render();
  }

  /** Advance; finishing the last step completes the tour. */
  next(): void {
    if (!this.overlay) return;
    if (this.stepIndex + 1 >= TOUR_STEPS.length) {
      this.finish();
      return;
    }
    this.stepIndex += 1;
    this.render();
  }

  skip(): void {
    this.finish();
  }

  private finish(): void {
    saveString(DONE_KEY, new Date().toISOString());
    this.overlay?.remove();
    this.overlay = null;
  }

  private render(): void {
    const step = TOUR_STEPS[this.stepIndex]!;
    if (!this.overlay) {
      this.overlay = document.createElement("div");
      this.overlay.className = "tour-overlay";
      this.container.appendChild(this.overlay);
    }
    this.overlay.replaceChildren();

    const box = document.createElement("div");
    box.className = "tour-step";
    box.dataset.topic = step.topic;

    const title = document.createElement("h3");
    title.textContent = `${this.stepIndex + 1}/${TOUR_STEPS.length} · ${step.title}`;
    const text = document.createElement("p");
    text.textContent = step.text;

    const next = document.createElement("button");
    next.className = "tour-next";
    next.textContent = this.stepIndex + 1 === TOUR_STEPS.length ? "Done" : "Next";
    next.addEventListener("click", () => this.next());

    const skip = document.createElement("button");
    skip.className = "tour-skip";
    skip.textContent = "Skip tour";
    skip.addEventListener("click", () => this.skip());

    box.append(title, text, next, skip);
    this.overlay.appendChild(box);
  }
}
