import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixtureText(name: string): string {
  return readFileSync(join(here, "fixtures", name), "utf-8");
}

export function fixture<T>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}

/** fetch stand-in that replays one recorded response per call. */
export function replayFetch(
  responses: { status: number; body: string }[],
): { fn: FetchLike; calls: { url: string; body?: string }[] } {
  const calls: { url: string; body?: string }[] = [];
  let i = 0;
  const fn: FetchLike = (url, init) => {
    calls.push({ url, body: init?.body });
    const r = responses[Math.min(i++, responses.length - 1)];
    return Promise.resolve({
      ok: r.status < 400,
      status: r.status,
      text: () => Promise.resolve(r.body),
    });
  };
  return { fn, calls };
}
