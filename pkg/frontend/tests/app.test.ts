/** Behavioral suite over the wired app with a stubbed API: the dot map, the
 * risk-split toggle, exploration counting, filters, and the no-writes rule. */

import { beforeEach, describe, expect, it } from "vitest";

import { boot } from "../src/main.js";
import {
  flush,
  makeDataset,
  mountShell,
  resetBrowserState,
  stubApi,
  stubApiFailure,
} from "./helpers.js";

function clickDot(id: string): void {
  const dot = document.querySelector(`circle[data-id="${id}"]`)!;
  dot.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

function hoverDot(id: string): void {
  const dot = document.querySelector(`circle[data-id="${id}"]`)!;
  dot.dispatchEvent(new MouseEvent("mouseenter", { bubbles: true }));
}

describe("atlas app", () => {
  beforeEach(() => {
    resetBrowserState();
    mountShell();
  });

  it("renders all 138 uses as dots", async () => {
    stubApi(makeDataset());
    const app = await boot();
    expect(app).not.toBeNull();
    expect(document.querySelectorAll("circle.dot").length).toBe(138);
  });

  it("the dashboard split toggle is an involution", async () => {
    stubApi(makeDataset());
    const app = (await boot())!;
    const before = app.map.positions();
    const toggle = document.getElementById("toggle-split") as HTMLButtonElement;
    toggle.click();
    expect(app.map.mode).toBe("split");
    toggle.click();
    expect(app.map.mode).toBe("unified");
    expect(app.map.positions()).toEqual(before);
  });

  it("opening N distinct profiles sets the counter to N; re-opening does not increment", async () => {
    const dataset = makeDataset();
    stubApi(dataset);
    const app = (await boot())!;
    const counter = document.getElementById("explored-counter")!;

    const targets = dataset.uses.slice(0, 5).map((u) => u.id);
    for (const id of targets) {
      clickDot(id);
      await flush();
    }
    expect(counter.textContent).toBe("5");
    expect(app.store.count).toBe(5);

    clickDot(targets[2]!);
    await flush();
    expect(counter.textContent).toBe("5");

    for (const id of targets) {
      expect(document.querySelector(`circle[data-id="${id}"]`)!.classList.contains("explored")).toBe(
        true,
      );
    }
  });

  it("opening a profile renders the layer-grouped card", async () => {
    const dataset = makeDataset();
    stubApi(dataset);
    await boot();
    clickDot(dataset.uses[0]!.id);
    await flush();
    const profile = document.getElementById("profile")!;
    expect(profile.classList.contains("hidden")).toBe(false);
    const headings = [...profile.querySelectorAll("h3")].map((h) => h.textContent);
    expect(headings).toEqual(["Benefits", "Risks", "Mitigations"]);
    expect(profile.querySelectorAll(".layer").length).toBe(6);
    expect(profile.textContent).toContain("long description of synthetic use 0");
  });

  it("hovering shows the tooltip with the risk tag", async () => {
    const dataset = makeDataset();
    stubApi(dataset);
    await boot();
    hoverDot(dataset.uses[0]!.id);
    const tooltip = document.getElementById("tooltip")!;
    expect(tooltip.classList.contains("hidden")).toBe(false);
    expect(tooltip.querySelector(".risk-tag")!.textContent).toBe("Unacceptable");
  });

  it("search highlights matching dots and clearing restores the full view", async () => {
    const dataset = makeDataset();
    stubApi(dataset);
    await boot();
    const search = document.getElementById("search") as HTMLInputElement;
    search.value = "border";
    search.dispatchEvent(new Event("input", { bubbles: true }));
    await flush();
    const highlighted = document.querySelectorAll("circle.highlight").length;
    const dimmed = document.querySelectorAll("circle.dimmed").length;
    expect(highlighted).toBe(dataset.uses.filter((u) => u.short_description.includes("border")).length);
    expect(highlighted + dimmed).toBe(138);

    (document.getElementById("clear-filters") as HTMLButtonElement).click();
    await flush();
    expect(document.querySelectorAll("circle.dimmed").length).toBe(0);
    expect(document.querySelectorAll("circle.highlight").length).toBe(0);
  });

  it("category filtering recolors matches with the palette entry", async () => {
    const dataset = makeDataset();
    stubApi(dataset);
    await boot();
    const select = document.getElementById("category-filter") as HTMLSelectElement;
    expect(select.options.length).toBe(1 + 10);
    select.value = "subject:children";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    await flush();
    const highlighted = [...document.querySelectorAll<SVGCircleElement>("circle.highlight")];
    expect(highlighted.length).toBeGreaterThan(0);
    for (const dot of highlighted) {
      expect(dot.style.fill).toBe("#9467bd");
    }
  });

  it("scrolling to the third narrative section triggers the risk split", async () => {
    stubApi(makeDataset());
    const app = (await boot())!;
    expect(document.querySelectorAll(".story-section").length).toBe(5);
    const story = document.getElementById("story")!;
    story.scrollTop = 1200; // 2 * fallback section height
    story.dispatchEvent(new Event("scroll"));
    expect(app.map.mode).toBe("split");
    story.scrollTop = 0;
    story.dispatchEvent(new Event("scroll"));
    expect(app.map.mode).toBe("unified");
  });

  it("reaching the final section unlocks the dashboard", async () => {
    stubApi(makeDataset());
    await boot();
    const story = document.getElementById("story")!;
    const dashboard = document.getElementById("dashboard")!;
    expect(dashboard.classList.contains("locked")).toBe(true);
    story.scrollTop = 600 * 4;
    story.dispatchEvent(new Event("scroll"));
    expect(dashboard.classList.contains("locked")).toBe(false);
  });

  it("starts the onboarding tour on first visit only", async () => {
    stubApi(makeDataset());
    const app = (await boot())!;
    expect(app.tour.active).toBe(true);
    expect(app.tour.currentTopic).toBe("interface");
    app.tour.skip();

    // simulated reload: fresh DOM, same storage
    mountShell();
    stubApi(makeDataset());
    const second = (await boot())!;
    expect(second.tour.active).toBe(false);
  });

  it("shows a banner when the service is unreachable", async () => {
    stubApiFailure();
    const app = await boot();
    expect(app).toBeNull();
    const banner = document.getElementById("banner")!;
    expect(banner.classList.contains("hidden")).toBe(false);
    expect(banner.textContent).toContain("Cannot reach");
  });

  it("never issues a non-GET request", async () => {
    const dataset = makeDataset();
    const log = stubApi(dataset);
    const app = (await boot())!;
    clickDot(dataset.uses[3]!.id);
    await flush();
    const search = document.getElementById("search") as HTMLInputElement;
    search.value = "use";
    search.dispatchEvent(new Event("input", { bubbles: true }));
    await flush();
    (document.getElementById("toggle-split") as HTMLButtonElement).click();
    const story = document.getElementById("story")!;
    story.scrollTop = 600 * 3; // palette section fans out category queries
    story.dispatchEvent(new Event("scroll"));
    await flush();
    expect(log.length).toBeGreaterThan(3);
    expect(log.every((call) => call.method === "GET")).toBe(true);
    expect(app.store.count).toBe(1);
  });

  it("persists exploration across reloads keyed by dataset version", async () => {
    const dataset = makeDataset();
    stubApi(dataset);
    await boot();
    clickDot(dataset.uses[0]!.id);
    clickDot(dataset.uses[1]!.id);
    await flush();

    mountShell();
    stubApi(dataset);
    const second = (await boot())!;
    expect(second.store.count).toBe(2);
    expect(
      document
        .querySelector(`circle[data-id="${dataset.uses[0]!.id}"]`)!
        .classList.contains("explored"),
    ).toBe(true);
  });
});
