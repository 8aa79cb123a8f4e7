/** Scenario state machine.
 *
 * Invariants:
 *  - the displayed table always equals the most recent service response
 *    (baseline ranking or what-if); the client never rescales weights;
 *  - at most one what-if request in flight; edits made meanwhile are
 *    coalesced and sent when the response lands (latest wins);
 *  - responses carry the sequence number of their request, and anything
 *    older than the newest applied response is discarded.
 */

import { ApiClient } from "./api.js";
import { TableView, baselineRanks, buildTable } from "./table.js";
import { Category, RankingDocument, WhatIfDocument } from "./types.js";

export interface ScenarioSnapshot {
  overrides: Record<string, number>;
  weights: Record<string, number>;
  view: TableView;
  /** group tabs only exist while no overrides are applied */
  tabsEnabled: boolean;
  error: string | null;
}

export class ScenarioState {
  private baseline: RankingDocument;
  private ranks: Map<string, number>;
  private overrides: Record<string, number> = {};
  private current: WhatIfDocument | null = null;
  private tab: Category | "overall" = "overall";
  private error: string | null = null;

  private nextSeq = 0;
  private appliedSeq = -1;
  private inFlight = false;
  private pending: Record<string, number> | null = null;

  constructor(
    baseline: RankingDocument,
    private readonly onChange: (snap: ScenarioSnapshot) => void = () => {},
  ) {
    this.baseline = baseline;
    this.ranks = baselineRanks(baseline);
  }

  snapshot(): ScenarioSnapshot {
    const atBaseline = this.current === null;
    const view = atBaseline
      ? buildTable(this.baseline, this.tab, null, 0)
      : buildTable(this.current!, "overall", this.ranks, this.current!.reversal_count);
    return {
      overrides: { ...this.overrides },
      weights: atBaseline ? { ...this.baseline.weights_used } : { ...this.current!.weights },
      view,
      tabsEnabled: atBaseline,
      error: this.error,
    };
  }

  selectTab(tab: Category | "overall"): void {
    this.tab = tab;
    this.emit();
  }

  /** Stage an override and send (or queue) the what-if request. */
  adjust(client: ApiClient, code: string, value: number): void {
    if (!(code in this.baseline.weights_used)) {
      this.error = `unknown criterion ${code}`;
      this.emit();
      return;
    }
    if (!(value >= 0 && value <= 1)) {
      this.error = `weight for ${code} must be in [0, 1]`;
      this.emit();
      return;
    }
    this.overrides = { ...this.overrides, [code]: value };
    this.send(client, { ...this.overrides });
  }

  /** Drop all overrides; the view reverts to the initially loaded
   * baseline response without another round trip. */
  reset(): void {
    this.overrides = {};
    this.current = null;
    this.error = null;
    this.pending = null;
    // anything still in flight is stale by construction
    this.appliedSeq = this.nextSeq;
    this.emit();
  }

  private send(client: ApiClient, overrides: Record<string, number>): void {
    if (this.inFlight) {
      this.pending = overrides;
      return;
    }
    const seq = this.nextSeq++;
    this.inFlight = true;
    void client
      .whatif(overrides)
      .then((doc) => this.applyResponse(seq, doc))
      .catch((err: Error) => this.applyFailure(seq, err))
      .finally(() => {
        this.inFlight = false;
        if (this.pending !== null) {
          const next = this.pending;
          this.pending = null;
          this.send(client, next);
        }
      });
  }

  /** Exposed for tests; responses are only applied in sequence order. */
  applyResponse(seq: number, doc: WhatIfDocument): void {
    if (seq < this.appliedSeq) return; // stale
    this.appliedSeq = seq;
    this.current = doc;
    this.error = null;
    this.emit();
  }

  applyFailure(seq: number, err: Error): void {
    if (seq < this.appliedSeq) return;
    this.appliedSeq = seq;
    this.error = err.message;
    this.emit();
  }

  /** Test hook mirroring what send() does, without the network. */
  beginRequest(): { seq: number; overrides: Record<string, number> } {
    return { seq: this.nextSeq++, overrides: { ...this.overrides } };
  }

  setOverrideLocal(code: string, value: number): void {
    this.overrides = { ...this.overrides, [code]: value };
  }

  private emit(): void {
    this.onChange(this.snapshot());
  }
}
