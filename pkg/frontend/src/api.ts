/** HTTP client for the ranking service.  fetch is injectable so the unit
 * tests can replay recorded responses without a live backend. */

import {
  RankingDocument,
  ServiceError,
  WeightsDocument,
  WhatIfDocument,
  checkDocument,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ ok: boolean; status: number; text(): Promise<string> }>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (u, i) => fetch(u, i),
  ) {}

  private async request(path: string, init?: Parameters<FetchLike>[1]): Promise<unknown> {
    const resp = await this.fetchFn(this.baseUrl + path, init);
    const text = await resp.text();
    if (!resp.ok) {
      let detail = text;
      try {
        detail = (JSON.parse(text) as { detail?: string }).detail ?? text;
      } catch {
        // non-JSON error body; show it raw
      }
      throw new ServiceError(resp.status, detail);
    }
    return JSON.parse(text);
  }

  async ranking(): Promise<RankingDocument> {
    return checkDocument<RankingDocument>(await this.request("/api/ranking"));
  }

  async weights(): Promise<WeightsDocument> {
    return checkDocument<WeightsDocument>(await this.request("/api/weights"));
  }

  async whatif(overrides: Record<string, number>): Promise<WhatIfDocument> {
    return checkDocument<WhatIfDocument>(
      await this.request("/api/whatif", {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ overrides }),
      }),
    );
  }
}
