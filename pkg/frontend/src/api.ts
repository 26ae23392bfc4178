/** Typed read-only client for the atlas service. The UI never writes. */

import type { Meta, UseDetail, UseFilters, UseSummary } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(path: string): Promise<T> {
  let response: Response;
  try {
    response = await fetch(path, { method: "GET" });
  } catch (err) {
    throw new ApiError(0, `network failure: ${String(err)}`);
  }
  if (!response.ok) {
    throw new ApiError(response.status, `GET ${path} -> ${response.status}`);
  }
  return (await response.json()) as T;
}

export function fetchMeta(): Promise<Meta> {
  return getJson<Meta>("/api/meta");
}

export async function fetchUses(filters: UseFilters = {}): Promise<UseSummary[]> {
  const params = new URLSearchParams();
  if (filters.q) params.set("q", filters.q);
  if (filters.category) params.set("category", filters.category);
  if (filters.risk) params.set("risk", filters.risk);
  const query = params.toString();
  const body = await getJson<{ uses: UseSummary[] }>(`/api/uses${query ? `?${query}` : ""}`);
  return body.uses;
}

export function fetchUseDetail(id: string): Promise<UseDetail> {
  return getJson<UseDetail>(`/api/uses/${encodeURIComponent(id)}`);
}
