/** Pure table model: turns service documents into row views the DOM layer
 * renders verbatim.  No score arithmetic happens here — ordering and
 * highlighting only compare fields the service already computed. */

import { Category, RankedSite, RankingDocument, WhatIfDocument } from "./types.js";

export interface TableRow {
  siteId: string;
  name: string;
  state: string;
  score: number;
  scoreDisplay: number;
  rank: number;
  /** rank changed relative to the baseline ranking */
  highlighted: boolean;
}

export interface TableView {
  tab: Category | "overall";
  rows: TableRow[];
  reversalCount: number;
}

export function baselineRanks(doc: RankingDocument): Map<string, number> {
  return new Map(doc.sites.map((s) => [s.site_id, s.rank]));
}

function cell(site: RankedSite, tab: Category | "overall") {
  if (tab === "overall" || !site.groups) {
    return { score: site.score, scoreDisplay: site.score_display, rank: site.rank };
  }
  const g = site.groups[tab];
  return { score: g.score, scoreDisplay: g.score_display, rank: g.rank };
}

/** Rows for one tab, best rank first; ties fall back to site id so the
 * order is stable across renders. */
export function buildTable(
  doc: RankingDocument | WhatIfDocument,
  tab: Category | "overall",
  baseline: Map<string, number> | null,
  reversalCount = 0,
): TableView {
  const rows = doc.sites
    .map((site) => {
      const c = cell(site, tab);
      return {
        siteId: site.site_id,
        name: site.name,
        state: site.state,
        score: c.score,
        scoreDisplay: c.scoreDisplay,
        rank: c.rank,
        highlighted: baseline !== null && baseline.get(site.site_id) !== site.rank,
      };
    })
    .sort((a, b) => a.rank - b.rank || a.siteId.localeCompare(b.siteId));
  return { tab, rows, reversalCount };
}
