// DOM wiring for the explorer: preset gallery, coefficient sliders, live
// canvas, badge row, and the destination-census overlay controls.

import { ApiClient, ServiceDownError } from "./api.js";
import {
  PortraitUpdater,
  SessionState,
  coefficientCount,
  validateParams,
  type ScalarField,
} from "./state.js";
import { badges, censusAvailable, drawPortrait, markerCount } from "./render.js";
import type { PresetEntry } from "./types.js";

const SERVICE = (window as unknown as { MEANDER_SERVICE?: string }).MEANDER_SERVICE
  ?? "http://127.0.0.1:8707";

const api = new ApiClient(SERVICE);
const state = new SessionState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const canvas = el<HTMLCanvasElement>("portrait");
const ctx = canvas.getContext("2d")!;

function redraw(): void {
  const badgeRow = el<HTMLDivElement>("badges");
  const overlayNote = el<HTMLDivElement>("census-note");
  el<HTMLDivElement>("pending").style.display = state.pending ? "block" : "none";
  el<HTMLDivElement>("error").textContent = state.error ?? "";
  el<HTMLDivElement>("offline").style.display = state.offline ? "block" : "none";
  if (!state.portrait) return;
  const doc = state.portrait;
  drawPortrait(doc, ctx, canvas.width, state.window);
  const b = badges(doc);
  const parts = [
    `equilibria: ${markerCount(doc)}`,
    b.rings === null ? "degenerate portrait" : `flower rings: ${b.rings}`,
    `cycles: ${b.cycles.join(", ") || "none"}`,
    `spider-net: ${b.spider === null ? "?" : b.spider}`,
    b.hamiltonian ? "Hamiltonian" : "non-Hamiltonian",
  ];
  if (b.regime) parts.push(`regime: ${b.regime}`);
  if (b.degenerate.length) parts.push(`degenerate: ${b.degenerate.join("; ")}`);
  badgeRow.textContent = parts.join("  |  ");
  const censusButton = el<HTMLButtonElement>("census-run");
  if (censusAvailable(doc)) {
    censusButton.disabled = false;
    overlayNote.textContent = "";
  } else {
    censusButton.disabled = true;
    overlayNote.textContent = doc.hamiltonian
      ? "census overlay needs dissipative coefficients (energy-conserving flows have no destinations)"
      : "census overlay needs peripheral spirals to bin against";
  }
}

const updater = new PortraitUpdater(api, state, { onChange: redraw });

function sliderRow(
  container: HTMLElement,
  label: string,
  value: number,
  onInput: (v: number) => void,
): void {
  const row = document.createElement("div");
  row.className = "slider-row";
  const span = 3 * Math.max(1, Math.abs(value));
  const name = document.createElement("label");
  name.textContent = label;
  const slider = document.createElement("input");
  slider.type = "range";
  slider.min = String(-span);
  slider.max = String(span);
  slider.step = String(span / 300);
  slider.value = String(value);
  const box = document.createElement("input");
  box.type = "number";
  box.step = "any";
  box.value = String(value);
  const apply = (v: number) => {
    if (!Number.isFinite(v)) return;
    slider.value = String(v);
    box.value = String(v);
    onInput(v);
    updater.schedule();
  };
  slider.addEventListener("input", () => apply(parseFloat(slider.value)));
  box.addEventListener("change", () => apply(parseFloat(box.value)));
  row.append(name, slider, box);
  container.append(row);
}

function rebuildSliders(): void {
  const container = el<HTMLDivElement>("sliders");
  container.innerHTML = "";

  const nRow = document.createElement("div");
  nRow.className = "slider-row";
  const nLabel = document.createElement("label");
  nLabel.textContent = "n";
  const nBox = document.createElement("input");
  nBox.type = "number";
  nBox.min = "4";
  nBox.max = "15";
  nBox.step = "1";
  nBox.value = String(state.params.n);
  nBox.addEventListener("change", () => {
    const n = parseInt(nBox.value, 10);
    if (Number.isInteger(n) && n >= 4) {
      state.setN(n);
      rebuildSliders(); // s changed: different coefficient lists
      updater.schedule();
    }
  });
  nRow.append(nLabel, nBox);
  container.append(nRow);

  for (const f of ["eps1", "eps2", "b1", "b2"] as ScalarField[]) {
    sliderRow(container, f, state.params[f], (v) => state.setScalar(f, v));
  }
  const s = coefficientCount(state.params.n);
  for (let i = 0; i < s; i++) {
    sliderRow(container, `a1[${i + 1}]`, state.params.a1[i] ?? 0,
      (v) => state.setCoefficient("a1", i, v));
    sliderRow(container, `a2[${i + 1}]`, state.params.a2[i] ?? 0,
      (v) => state.setCoefficient("a2", i, v));
  }
}

function renderGallery(entries: PresetEntry[]): void {
  const gallery = el<HTMLSelectElement>("presets");
  gallery.innerHTML = "";
  if (entries.length === 0) {
    const opt = document.createElement("option");
    opt.textContent = "(no presets available)";
    gallery.append(opt);
    gallery.disabled = true;
    return;
  }
  const blank = document.createElement("option");
  blank.value = "";
  blank.textContent = "custom";
  gallery.append(blank);
  for (const entry of entries) {
    const opt = document.createElement("option");
    opt.value = entry.name;
    opt.textContent = `${entry.name} (n=${entry.params.n}) - ${entry.note}`;
    gallery.append(opt);
  }
  gallery.addEventListener("change", () => {
    const chosen = entries.find((e) => e.name === gallery.value);
    if (chosen) {
      state.selectPreset(chosen);
      rebuildSliders();
      updater.schedule();
    }
  });
}

async function boot(): Promise<void> {
  rebuildSliders();
  el<HTMLButtonElement>("reset").addEventListener("click", () => {
    state.reset();
    rebuildSliders();
    updater.schedule();
  });
  el<HTMLButtonElement>("census-run").addEventListener("click", () => {
    const r0 = parseFloat(el<HTMLInputElement>("census-r0").value);
    const count = parseInt(el<HTMLInputElement>("census-count").value, 10);
    if (!(r0 > 0) || !(count > 0)) return;
    updater.census = { r0, count };
    updater.schedule();
    updater.census = null;
  });
  try {
    renderGallery(await api.presets());
  } catch (err) {
    if (err instanceof ServiceDownError) {
      state.offline = true;
      renderGallery([]);
      redraw();
      return;
    }
    throw err;
  }
  if (validateParams(state.params).length === 0) updater.schedule();
}

void boot();
