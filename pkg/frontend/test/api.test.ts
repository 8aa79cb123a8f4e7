import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { SchemaMismatchError, ServiceError } from "../src/types.js";
import { fixtureText, replayFetch } from "./helpers.js";

describe("ApiClient", () => {
  it("fetches and parses the ranking document", async () => {
    const { fn, calls } = replayFetch([{ status: 200, body: fixtureText("ranking.json") }]);
    const doc = await new ApiClient("http://svc", fn).ranking();
    expect(calls[0].url).toBe("http://svc/api/ranking");
    expect(doc.sites).toHaveLength(220);
    expect(doc.group).toBeNull();
  });

  it("posts overrides as JSON", async () => {
    const { fn, calls } = replayFetch([{ status: 200, body: fixtureText("whatif_fp3.json") }]);
    const doc = await new ApiClient("", fn).whatif({ FP3: 0.2 });
    expect(calls[0].url).toBe("/api/whatif");
    expect(JSON.parse(calls[0].body!)).toEqual({ overrides: { FP3: 0.2 } });
    expect(doc.overrides).toEqual({ FP3: 0.2 });
    // server-renormalized weights arrive summing to 1
    const total = Object.values(doc.weights).reduce((a, b) => a + b, 0);
    expect(total).toBeCloseTo(1.0, 9);
  });

  it("surfaces service 4xx detail messages", async () => {
    const { fn } = replayFetch([
      { status: 422, body: fixtureText("whatif_error_unknown_code.json") },
    ]);
    const err = await new ApiClient("", fn)
      .whatif({ ZZ9: 0.1 })
      .then(() => null)
      .catch((e: ServiceError) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect(err!.status).toBe(422);
    expect(err!.detail).toContain("ZZ9");
  });

  it("raises a schema mismatch for future document versions", async () => {
    const future = JSON.stringify({ schema_version: 99, sites: [] });
    const { fn } = replayFetch([{ status: 200, body: future }]);
    await expect(new ApiClient("", fn).ranking()).rejects.toBeInstanceOf(SchemaMismatchError);
  });
});
