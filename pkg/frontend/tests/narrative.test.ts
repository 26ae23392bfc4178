import { describe, expect, it } from "vitest";

import { NarrativeController, SECTIONS } from "../src/narrative.js";

describe("NarrativeController", () => {
  it("has exactly five sections, ending in the free-exploration dashboard", () => {
    expect(SECTIONS.length).toBe(5);
    expect(SECTIONS[4]!.effect).toBe("dashboard");
  });

  it("the third section triggers the risk-split animation", () => {
    expect(SECTIONS[2]!.effect).toBe("split");
  });

  it("fires exactly once per boundary crossing", () => {
    const narrative = new NarrativeController(100);
    const fired: number[] = [];
    narrative.onSection((index) => fired.push(index));
    narrative.update(0);
    narrative.update(10); // still section 0
    narrative.update(40); // still section 0
    narrative.update(60); // crosses into section 1
    narrative.update(80);
    narrative.update(160); // section 2
    narrative.update(140); // back within section 1? no: 140/100+0.5=1.9 -> 1
    expect(fired).toEqual([0, 1, 2, 1]);
  });

  it("section index is monotone in scroll position", () => {
    const narrative = new NarrativeController(120);
    let last = -1;
    for (let scroll = 0; scroll <= 120 * 5; scroll += 7) {
      const index = narrative.sectionForScroll(scroll);
      expect(index).toBeGreaterThanOrEqual(last);
      last = index;
    }
    expect(last).toBe(4);
  });

  it("clamps to the last section", () => {
    const narrative = new NarrativeController(100);
    expect(narrative.sectionForScroll(10_000)).toBe(4);
    expect(narrative.sectionForScroll(0)).toBe(0);
  });

  it("rejects a non-positive section height", () => {
    expect(() => new NarrativeController(0)).toThrow();
  });
});
