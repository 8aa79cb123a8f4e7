import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ScenarioState } from "../src/state.js";
import { buildTable, baselineRanks } from "../src/table.js";
import { RankingDocument, WhatIfDocument } from "../src/types.js";
import { fixture, fixtureText, replayFetch } from "./helpers.js";

const ranking = fixture<RankingDocument>("ranking.json");
const whatifFp3 = fixture<WhatIfDocument>("whatif_fp3.json");
const whatifSp6 = fixture<WhatIfDocument>("whatif_sp6_only.json");

const tick = () => new Promise((r) => setTimeout(r, 0));

describe("single-override round trip", () => {
  it("table after an override equals the table built from the service response", async () => {
    const { fn } = replayFetch([{ status: 200, body: fixtureText("whatif_fp3.json") }]);
    const state = new ScenarioState(ranking);
    state.adjust(new ApiClient("", fn), "FP3", 0.2);
    await tick();

    const snap = state.snapshot();
    const direct = buildTable(whatifFp3, "overall", baselineRanks(ranking), whatifFp3.reversal_count);
    expect(snap.view).toEqual(direct);
    expect(snap.weights).toEqual(whatifFp3.weights);
    expect(snap.overrides).toEqual({ FP3: 0.2 });
    expect(snap.tabsEnabled).toBe(false);
  });

  it("clearing overrides restores the baseline view with zero highlights", async () => {
    const { fn } = replayFetch([{ status: 200, body: fixtureText("whatif_fp3.json") }]);
    const state = new ScenarioState(ranking);
    const initial = state.snapshot();

    state.adjust(new ApiClient("", fn), "FP3", 0.2);
    await tick();
    expect(state.snapshot().view.rows.some((r) => r.highlighted)).toBe(true);

    state.reset();
    const after = state.snapshot();
    expect(after).toEqual(initial);
    expect(after.view.rows.every((r) => !r.highlighted)).toBe(true);
    expect(after.view.reversalCount).toBe(0);
    expect(after.overrides).toEqual({});
  });

  it("slider to 1.0 ranks by that single criterion", async () => {
    const { fn } = replayFetch([{ status: 200, body: fixtureText("whatif_sp6_only.json") }]);
    const state = new ScenarioState(ranking);
    state.adjust(new ApiClient("", fn), "SP6", 1.0);
    await tick();

    const snap = state.snapshot();
    expect(snap.weights.SP6).toBe(1.0);
    const others = Object.entries(snap.weights).filter(([c]) => c !== "SP6");
    expect(others.every(([, w]) => w === 0)).toBe(true);
    expect(snap.view).toEqual(
      buildTable(whatifSp6, "overall", baselineRanks(ranking), whatifSp6.reversal_count),
    );
  });
});

describe("input validation", () => {
  it("rejects unknown criteria without a request", () => {
    const { fn, calls } = replayFetch([{ status: 200, body: fixtureText("whatif_fp3.json") }]);
    const state = new ScenarioState(ranking);
    state.adjust(new ApiClient("", fn), "ZZ9", 0.2);
    expect(calls).toHaveLength(0);
    expect(state.snapshot().error).toContain("ZZ9");
  });

  it("rejects weights outside [0, 1] without a request", () => {
    const { fn, calls } = replayFetch([{ status: 200, body: fixtureText("whatif_fp3.json") }]);
    const state = new ScenarioState(ranking);
    state.adjust(new ApiClient("", fn), "FP3", 1.5);
    expect(calls).toHaveLength(0);
    expect(state.snapshot().error).toContain("FP3");
  });

  it("shows the service detail on a 4xx and keeps the last good view", async () => {
    const { fn } = replayFetch([
      { status: 422, body: fixtureText("whatif_error_unknown_code.json") },
    ]);
    const state = new ScenarioState(ranking);
    const before = state.snapshot().view;
    state.adjust(new ApiClient("", fn), "FP3", 0.2);
    await tick();
    const snap = state.snapshot();
    expect(snap.error).toContain("422");
    expect(snap.view.rows).toEqual(before.rows);
  });
});

describe("request sequencing", () => {
  it("discards responses older than the newest applied one", () => {
    const state = new ScenarioState(ranking);
    const a = state.beginRequest();
    const b = state.beginRequest();
    state.applyResponse(b.seq, whatifSp6);
    state.applyResponse(a.seq, whatifFp3); // stale; must not clobber
    expect(state.snapshot().view).toEqual(
      buildTable(whatifSp6, "overall", baselineRanks(ranking), whatifSp6.reversal_count),
    );
  });

  it("coalesces edits made while a request is in flight (latest wins)", async () => {
    const { fn, calls } = replayFetch([
      { status: 200, body: fixtureText("whatif_fp3.json") },
      { status: 200, body: fixtureText("whatif_sp6_only.json") },
    ]);
    const state = new ScenarioState(ranking);
    const client = new ApiClient("", fn);
    state.adjust(client, "FP3", 0.2);
    // both edits land while the first request is still in flight
    state.adjust(client, "SP6", 0.5);
    state.adjust(client, "SP6", 1.0);
    await tick();
    await tick();

    expect(calls).toHaveLength(2);
    const second = JSON.parse(calls[1].body!) as { overrides: Record<string, number> };
    expect(second.overrides.SP6).toBe(1.0); // intermediate 0.5 never sent
    expect(state.snapshot().view).toEqual(
      buildTable(whatifSp6, "overall", baselineRanks(ranking), whatifSp6.reversal_count),
    );
  });

  it("reset invalidates the in-flight request", async () => {
    const { fn } = replayFetch([{ status: 200, body: fixtureText("whatif_fp3.json") }]);
    const state = new ScenarioState(ranking);
    const initial = state.snapshot();
    state.adjust(new ApiClient("", fn), "FP3", 0.2);
    state.reset(); // before the response lands
    await tick();
    expect(state.snapshot()).toEqual(initial);
  });
});
