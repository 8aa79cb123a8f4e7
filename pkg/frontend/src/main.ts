/** DOM wiring.  Everything testable lives in state.ts / table.ts / api.ts;
 * this file only moves data between those modules and the page. */

import { ApiClient } from "./api.js";
import { ScenarioSnapshot, ScenarioState } from "./state.js";
import { CATEGORIES, Category, SchemaMismatchError } from "./types.js";

const BASE_URL = (window as { SITERANK_BASE_URL?: string }).SITERANK_BASE_URL ?? "";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function fmt(x: number): string {
  return x.toFixed(4);
}

function render(snap: ScenarioSnapshot): void {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = snap.error ?? "";
  banner.style.display = snap.error ? "block" : "none";

  el<HTMLSpanElement>("reversals").textContent = String(snap.view.reversalCount);

  for (const tab of ["overall", ...CATEGORIES]) {
    const btn = el<HTMLButtonElement>(`tab-${tab}`);
    btn.disabled = tab !== "overall" && !snap.tabsEnabled;
    btn.classList.toggle("active", snap.view.tab === tab);
  }

  const body = el<HTMLTableSectionElement>("ranking-body");
  body.replaceChildren(
    ...snap.view.rows.map((row) => {
      const tr = document.createElement("tr");
      tr.classList.toggle("changed", row.highlighted);
      for (const text of [
        String(row.rank),
        row.siteId,
        row.name,
        row.state,
        fmt(row.score),
        fmt(row.scoreDisplay),
      ]) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.appendChild(td);
      }
      return tr;
    }),
  );

  const sliders = el<HTMLDivElement>("sliders");
  if (sliders.childElementCount === 0) {
    for (const code of Object.keys(snap.weights).sort()) {
      const label = document.createElement("label");
      label.textContent = code;
      const input = document.createElement("input");
      input.type = "range";
      input.min = "0";
      input.max = "1";
      input.step = "0.005";
      input.dataset.code = code;
      label.appendChild(input);
      sliders.appendChild(label);
    }
  }
  for (const input of Array.from(sliders.querySelectorAll<HTMLInputElement>("input"))) {
    const code = input.dataset.code!;
    input.value = String(snap.overrides[code] ?? snap.weights[code] ?? 0);
  }
}

async function boot(): Promise<void> {
  const client = new ApiClient(BASE_URL);
  let baseline;
  try {
    baseline = await client.ranking();
  } catch (err) {
    const banner = el<HTMLDivElement>("banner");
    banner.style.display = "block";
    banner.textContent =
      err instanceof SchemaMismatchError
        ? err.message
        : `cannot reach the ranking service: ${String(err)}`;
    return;
  }

  const state = new ScenarioState(baseline, render);
  render(state.snapshot());

  el<HTMLDivElement>("sliders").addEventListener("change", (ev) => {
    const input = ev.target as HTMLInputElement;
    if (input.dataset.code) state.adjust(client, input.dataset.code, Number(input.value));
  });
  el<HTMLButtonElement>("reset").addEventListener("click", () => state.reset());
  for (const tab of ["overall", ...CATEGORIES]) {
    el<HTMLButtonElement>(`tab-${tab}`).addEventListener("click", () =>
      state.selectTab(tab as Category | "overall"),
    );
  }
}

void boot();
