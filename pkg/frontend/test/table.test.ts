import { describe, expect, it } from "vitest";

import { baselineRanks, buildTable } from "../src/table.js";
import {
  RankingDocument,
  SchemaMismatchError,
  WhatIfDocument,
  checkDocument,
} from "../src/types.js";
import { fixture } from "./helpers.js";

const ranking = fixture<RankingDocument>("ranking.json");
const whatif = fixture<WhatIfDocument>("whatif_fp3.json");

describe("buildTable on the baseline ranking", () => {
  it("renders every site with rank 1 on top", () => {
    const view = buildTable(ranking, "overall", null);
    expect(view.rows).toHaveLength(220);
    expect(view.rows[0].rank).toBe(1);
    for (let i = 1; i < view.rows.length; i++) {
      expect(view.rows[i].rank).toBeGreaterThanOrEqual(view.rows[i - 1].rank);
    }
  });

  it("mirrors the document scores verbatim", () => {
    const view = buildTable(ranking, "overall", null);
    const byId = new Map(ranking.sites.map((s) => [s.site_id, s]));
    for (const row of view.rows) {
      expect(row.score).toBe(byId.get(row.siteId)!.score);
      expect(row.scoreDisplay).toBe(byId.get(row.siteId)!.score_display);
    }
  });

  it("group tab reorders by the group rank the service computed", () => {
    const view = buildTable(ranking, "CSF", null);
    const byId = new Map(ranking.sites.map((s) => [s.site_id, s]));
    expect(view.rows[0].rank).toBe(1);
    for (const row of view.rows) {
      expect(row.rank).toBe(byId.get(row.siteId)!.groups!.CSF.rank);
    }
    // CSF order differs from the overall order for this fixture
    const overall = buildTable(ranking, "overall", null);
    expect(view.rows.map((r) => r.siteId)).not.toEqual(overall.rows.map((r) => r.siteId));
  });

  it("no rows are highlighted without a baseline to compare", () => {
    const view = buildTable(ranking, "overall", null);
    expect(view.rows.every((r) => !r.highlighted)).toBe(true);
  });
});

describe("buildTable on a what-if response", () => {
  it("highlights exactly the sites whose rank changed", () => {
    const ranks = baselineRanks(ranking);
    const view = buildTable(whatif, "overall", ranks, whatif.reversal_count);
    for (const row of view.rows) {
      expect(row.highlighted).toBe(ranks.get(row.siteId) !== row.rank);
    }
    expect(view.rows.some((r) => r.highlighted)).toBe(true);
    expect(view.reversalCount).toBe(whatif.reversal_count);
  });

  it("comparing the baseline to itself highlights nothing", () => {
    const view = buildTable(ranking, "overall", baselineRanks(ranking));
    expect(view.rows.every((r) => !r.highlighted)).toBe(true);
  });
});

describe("checkDocument", () => {
  it("accepts the recorded documents", () => {
    expect(() => checkDocument(ranking)).not.toThrow();
    expect(() => checkDocument(whatif)).not.toThrow();
  });

  it("rejects a schema version mismatch before any rendering", () => {
    expect(() => checkDocument({ ...ranking, schema_version: 2 })).toThrow(
      SchemaMismatchError,
    );
  });

  it("rejects non-object bodies", () => {
    expect(() => checkDocument([1, 2, 3] as unknown)).toThrow(SchemaMismatchError);
    expect(() => checkDocument(null)).toThrow();
  });
});
