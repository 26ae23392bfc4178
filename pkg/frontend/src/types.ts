/** Shapes of the service API responses the UI consumes. */

export type RiskLevel = "unacceptable" | "high" | "limited-low";

export interface Meta {
  schema_version: number;
  technology: string;
  use_count: number;
  categories: string[];
}

export interface UseSummary {
  id: string;
  short_description: string;
  risk_level: RiskLevel;
  daily: boolean;
  implementation_potential: string;
  x: number;
  y: number;
  split_x: number;
  split_y: number;
}

export interface AssessmentEntry {
  text: string;
  affected: string[];
  basis: string | null;
}

/** Risks/benefits grouped by sociotechnical layer. */
export interface LayerGroups {
  capability: AssessmentEntry[];
  "human-interaction": AssessmentEntry[];
  "systemic-impact": AssessmentEntry[];
}

export interface CardDetail {
  use_id: string;
  risks: LayerGroups;
  benefits: LayerGroups;
  mitigations: { text: string; layer: string }[];
  mitigated_description: string;
  mitigated_risk_level: RiskLevel;
  risk_reasoning: string;
  illustration_prompt: string;
  illustration_ref: string | null;
}

export interface UseRecord {
  id: string;
  purpose: string;
  capability: string;
  ai_user: string;
  ai_subject: string;
  domain: string;
  short_description: string;
  long_description: string;
  daily: boolean;
  implementation_potential: string;
  risk_level: RiskLevel;
  categories: Record<string, boolean>;
  source_incident_ids: number[];
}

export interface UseDetail {
  use: UseRecord;
  card: CardDetail;
  coords: [number, number];
  split_coords: [number, number];
}

export interface UseFilters {
  q?: string;
  category?: string;
  risk?: string;
}
