/** Wire formats served by the ranking service.  The UI never recomputes
 * scores; these documents are rendered as-is. */

export const SCHEMA_VERSION = 1;

export const CATEGORIES = ["SP", "FP", "RHM", "CSF"] as const;
export type Category = (typeof CATEGORIES)[number];

export interface GroupCell {
  score: number;
  score_display: number;
  rank: number;
}

export interface RankedSite {
  site_id: string;
  name: string;
  state: string;
  score: number;
  score_display: number;
  rank: number;
  /** Present on overall ranking documents, absent on what-if responses. */
  groups?: Record<Category, GroupCell>;
}

export interface RankingDocument {
  schema_version: number;
  group: Category | null;
  mode: "overall" | "renormalized";
  sites: RankedSite[];
  weights_used: Record<string, number>;
  chi_summary: Record<string, unknown>;
}

export interface WhatIfDocument {
  schema_version: number;
  overrides: Record<string, number>;
  /** Full weight set after server-side renormalization; sums to 1. */
  weights: Record<string, number>;
  sites: RankedSite[];
  reversals: [string, string][];
  reversal_count: number;
}

export interface WeightEntry {
  code: string;
  category: Category;
  weight: number;
}

export interface WeightsDocument {
  schema_version: number;
  global: WeightEntry[];
  category_totals: Record<Category, number>;
  chi: Record<string, unknown>;
  per_expert: unknown[];
}

export class SchemaMismatchError extends Error {
  constructor(public readonly got: unknown) {
    super(
      `service document has schema_version ${String(got)}, ` +
        `this client expects ${SCHEMA_VERSION}`,
    );
    this.name = "SchemaMismatchError";
  }
}

export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`service returned ${status}: ${detail}`);
    this.name = "ServiceError";
  }
}

/** Reject anything that is not a well-formed document before rendering. */
export function checkDocument<T extends { schema_version: number; sites?: unknown }>(
  doc: unknown,
): T {
  if (typeof doc !== "object" || doc === null) {
    throw new Error("service response is not an object");
  }
  const d = doc as { schema_version?: unknown };
  if (d.schema_version !== SCHEMA_VERSION) {
    throw new SchemaMismatchError(d.schema_version);
  }
  return doc as T;
}
