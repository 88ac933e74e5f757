/** DOM wiring for the explorer: sliders in, service documents out.
 *
 * Three request slots, each behind its own gate: the main panel, the pinned
 * comparison panel, and the tension sweep. Everything shown is taken from
 * the service documents; see view.ts for the string mapping.
 */

import { ApiClient, SampleDocument, SchemeDocument, SweepDocument } from "./api.js";
import { RequestGate } from "./gate.js";
import {
  ExplorerState,
  FAMILIES,
  Family,
  OMEGA_STEPS,
  clampParams,
  defaultParams,
  limitsOf,
  queryOf,
  sampleLevels,
  visibleControls,
} from "./state.js";
import { Box, curveDomain, drawAxes, drawCurve } from "./plot.js";
import { regularityDelta, schemeView, titleOf } from "./view.js";

interface PanelResult {
  scheme: SchemeDocument;
  sample: SampleDocument;
}

function apiBase(): string {
  const meta = document.querySelector('meta[name="api-base"]');
  return meta?.getAttribute("content") ?? "";
}

const api = new ApiClient(apiBase());

const state: ExplorerState = { main: defaultParams("pseudo"), compare: null };
let lastMain: PanelResult | null = null;
let lastCompare: PanelResult | null = null;
let lastSweep: SweepDocument | null = null;

const el = (id: string) => document.getElementById(id) as HTMLElement;
const input = (id: string) => document.getElementById(id) as HTMLInputElement;

const banner = el("banner");
const bannerText = el("banner-text");

function showBanner(error: unknown): void {
  bannerText.textContent = error instanceof Error ? error.message : String(error);
  banner.hidden = false;
}

function panelQuery(params: ReturnType<typeof clampParams>): Record<string, string> {
  return queryOf(params);
}

async function fetchPanel(q: Record<string, string>): Promise<PanelResult> {
  // sequential on purpose: one slot, one request in flight
  const scheme = await api.scheme(q);
  const sample = await api.sample({ ...q, levels: String(sampleLevels(Number(q.m))) });
  return { scheme, sample };
}

const mainGate = new RequestGate<Record<string, string>, PanelResult>(
  fetchPanel,
  (result) => {
    banner.hidden = true;
    lastMain = result;
    renderMain(result);
    redrawCurves();
  },
  showBanner,
);

const compareGate = new RequestGate<Record<string, string>, PanelResult>(
  fetchPanel,
  (result) => {
    lastCompare = result;
    renderComparison();
    redrawCurves();
  },
  showBanner,
);

const sweepGate = new RequestGate<Record<string, string>, SweepDocument>(
  (q) => api.sweep(q),
  (doc) => {
    lastSweep = doc;
    drawSweep(doc);
  },
  showBanner,
);

function renderMain(result: PanelResult): void {
  const view = schemeView(result.scheme);
  el("regularity").textContent = view.regularity;
  el("certainty").textContent = view.certainty;
  el("title").textContent = titleOf(result.scheme);
  el("rho").textContent = view.rho;
  el("tau").textContent = view.tau;
  el("support").textContent = view.support;
  el("degrees").textContent = view.degrees;
  el("mask").textContent = view.mask;
  const folded = el("folded");
  folded.textContent = "";
  for (const row of view.foldedRows) {
    const tr = document.createElement("tr");
    for (const entry of row) {
      const td = document.createElement("td");
      td.textContent = entry;
      tr.appendChild(td);
    }
    folded.appendChild(tr);
  }
  el("folded-box").hidden = view.foldedRows.length === 0;
  renderComparison();
}

function renderComparison(): void {
  const box = el("compare-box");
  if (state.compare === null || lastCompare === null) {
    box.hidden = true;
    return;
  }
  box.hidden = false;
  el("compare-title").textContent = titleOf(lastCompare.scheme);
  el("compare-regularity").textContent = lastCompare.scheme.display;
  el("compare-delta").textContent =
    lastMain !== null ? regularityDelta(lastMain.scheme, lastCompare.scheme) : "";
}

const CURVE_BOX: Box = { width: 640, height: 360, pad: 24 };
const SWEEP_BOX: Box = { width: 640, height: 220, pad: 24 };

function redrawCurves(): void {
  const canvas = el("curve") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d");
  if (!ctx || lastMain === null) return;
  ctx.clearRect(0, 0, CURVE_BOX.width, CURVE_BOX.height);
  const sample = lastMain.sample;
  const domain = curveDomain(sample.points, sample.support);
  if (lastCompare !== null && state.compare !== null) {
    const other = curveDomain(lastCompare.sample.points, lastCompare.sample.support);
    domain.t0 = Math.min(domain.t0, other.t0);
    domain.t1 = Math.max(domain.t1, other.t1);
    domain.v0 = Math.min(domain.v0, other.v0);
    domain.v1 = Math.max(domain.v1, other.v1);
    drawAxes(ctx, domain, CURVE_BOX);
    drawCurve(ctx, lastCompare.sample.points, domain, CURVE_BOX, {
      color: "#d97706",
      width: 1.5,
    });
  } else {
    drawAxes(ctx, domain, CURVE_BOX);
  }
  drawCurve(ctx, sample.points, domain, CURVE_BOX, { color: "#2563eb", width: 2 });
}

function drawSweep(doc: SweepDocument): void {
  const canvas = el("sweep") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, SWEEP_BOX.width, SWEEP_BOX.height);
  const points: [number, number][] = [];
  for (const [omega, , regularity] of doc.rows) {
    if (regularity !== null) points.push([omega, regularity]);
  }
  const domain = curveDomain(points, [0, 1]);
  drawAxes(ctx, domain, SWEEP_BOX);
  drawCurve(ctx, points, domain, SWEEP_BOX, { color: "#2563eb", width: 2 });
}

function syncControls(): void {
  const params = state.main;
  const visible = visibleControls(params.family);
  const limits = limitsOf(params.family);

  (el("family") as HTMLSelectElement).value = params.family;

  const rows: [string, keyof typeof visible | "m"][] = [
    ["row-m", "m"],
    ["row-n", "n"],
    ["row-lprime", "lprime"],
    ["row-omega", "omega"],
  ];
  for (const [rowId, key] of rows) {
    el(rowId).hidden = key !== "m" && !visible[key];
  }

  const setSlider = (id: string, range: { min: number; max: number; step: number }, value: number) => {
    const slider = input(id);
    slider.min = String(range.min);
    slider.max = String(range.max);
    slider.step = String(range.step);
    slider.value = String(value);
  };
  setSlider("m", limits.m, params.m);
  if (limits.n) setSlider("n", limits.n, params.n);
  if (limits.lprime) setSlider("lprime", limits.lprime, params.lprime);
  if (limits.omega) setSlider("omega", limits.omega, params.omegaNum);

  el("m-value").textContent = String(params.m);
  el("n-value").textContent = String(params.n);
  el("lprime-value").textContent = String(params.lprime);
  el("omega-value").textContent = (params.omegaNum / OMEGA_STEPS).toFixed(3);

  el("sweep-panel").hidden = params.family !== "tension";
}

function requestMain(): void {
  mainGate.request(panelQuery(state.main));
  if (state.main.family === "tension") {
    sweepGate.request({ m: String(state.main.m), steps: "32" });
  }
}

function onParamChange(mutate: (p: typeof state.main) => void): void {
  const next = { ...state.main };
  mutate(next);
  state.main = clampParams(next);
  syncControls();
  requestMain();
}

function wire(): void {
  const familySelect = el("family") as HTMLSelectElement;
  for (const family of FAMILIES) {
    const option = document.createElement("option");
    option.value = family;
    option.textContent = family;
    familySelect.appendChild(option);
  }
  familySelect.addEventListener("change", () =>
    onParamChange((p) => {
      p.family = familySelect.value as Family;
    }),
  );

  const bind = (id: string, apply: (p: typeof state.main, v: number) => void) => {
    input(id).addEventListener("input", () =>
      onParamChange((p) => apply(p, Number(input(id).value))),
    );
  };
  bind("m", (p, v) => (p.m = v));
  bind("n", (p, v) => (p.n = v));
  bind("lprime", (p, v) => (p.lprime = v));
  bind("omega", (p, v) => (p.omegaNum = v));

  el("pin").addEventListener("click", () => {
    state.compare = { ...state.main };
    el("clear").hidden = false;
    compareGate.flush(panelQuery(state.compare));
  });
  el("clear").addEventListener("click", () => {
    state.compare = null;
    lastCompare = null;
    el("clear").hidden = true;
    renderComparison();
    redrawCurves();
  });
  el("retry").addEventListener("click", () => {
    banner.hidden = true;
    mainGate.flush(panelQuery(state.main));
    if (state.compare !== null) compareGate.flush(panelQuery(state.compare));
    if (state.main.family === "tension") {
      sweepGate.flush({ m: String(state.main.m), steps: "32" });
    }
  });

  syncControls();
  mainGate.flush(panelQuery(state.main));
}

window.addEventListener("load", wire);
