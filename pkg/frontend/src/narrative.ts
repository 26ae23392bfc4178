/** The five-section scroll narrative: four author-driven sections, then the
 * free-exploration dashboard (Martini Glass). Section transitions fire
 * exactly once per boundary crossing. */

export interface SectionSpec {
  title: string;
  text: string;
  /** styling directive the map applies when the section becomes active */
  effect: "all" | "daily" | "split" | "palette" | "dashboard";
}

export const SECTIONS: readonly SectionSpec[] = [
  {
    title: "A map of AI uses",
    text: "Every dot is one way this technology is used. Nearby dots describe similar uses.",
    effect: "all",
  },
  {
    title: "Part of daily life",
    text: "Highlighted dots are uses people encounter day to day.",
    effect: "daily",
  },
  {
    title: "Not all uses carry the same risk",
    text: "The dots regroup into three bands: banned outright, tightly regulated, and low risk.",
    effect: "split",
  },
  {
    title: "What the groups share",
    text: "Colors trace common traits across the groups; regulation alone does not remove harm.",
    effect: "palette",
  },
  {
    title: "Explore on your own",
    text: "Search, filter, and open any dot to weigh its benefits, risks, and mitigations.",
    effect: "dashboard",
  },
];

export type SectionListener = (index: number, spec: SectionSpec) => void;

export class NarrativeController {
  private current = -1;
  private listeners: SectionListener[] = [];

  constructor(private sectionHeight: number) {
    if (sectionHeight <= 0) throw new Error("sectionHeight must be positive");
  }

  get sectionCount(): number {
    return SECTIONS.length;
  }

  get index(): number {
    return Math.max(this.current, 0);
  }

  onSection(listener: SectionListener): void {
    this.listeners.push(listener);
  }

  /** Map a scroll offset to a section index; monotone in scroll position. */
  sectionForScroll(scrollTop: number): number {
    const raw = Math.floor(scrollTop / this.sectionHeight + 0.5);
    return Math.min(Math.max(raw, 0), SECTIONS.length - 1);
  }

  /** Feed scroll updates; fires listeners only when the section changes. */
  update(scrollTop: number): void {
    const index = this.sectionForScroll(scrollTop);
    if (index === this.current) return;
    this.current = index;
    const spec = SECTIONS[index]!;
    for (const listener of this.listeners) {
      listener(index, spec);
    }
  }
}
