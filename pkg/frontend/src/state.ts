// Session state and the debounced portrait updater.
//
// All mathematics stays server-side; this module only keeps coefficients
// valid (n >= 4, list lengths = floor(n/2) - 1), derives slider ranges,
// and guarantees at most one in-flight portrait request per editing burst
// via timer debouncing plus response-token versioning.

import type { ApiClient } from "./api.js";
import { ServiceDownError, ValidationError } from "./api.js";
import type { Params, PortraitDocument, PresetEntry } from "./types.js";

export function coefficientCount(n: number): number {
  return Math.floor(n / 2) - 1;
}

export function defaultParams(n: number): Params {
  const s = coefficientCount(n);
  return {
    n,
    eps1: 0,
    eps2: 1,
    a1: new Array(s).fill(0),
    a2: new Array(s).fill(0),
    b1: 0,
    b2: 0,
  };
}

export function cloneParams(p: Params): Params {
  return { ...p, a1: [...p.a1], a2: [...p.a2] };
}

export function validateParams(p: Params): string[] {
  const errors: string[] = [];
  if (!Number.isInteger(p.n) || p.n < 4) {
    errors.push("n must be an integer >= 4");
  }
  const s = coefficientCount(p.n);
  if (p.a1.length !== s) errors.push(`a1 needs exactly ${s} entries`);
  if (p.a2.length !== s) errors.push(`a2 needs exactly ${s} entries`);
  for (const [key, value] of Object.entries(p)) {
    if (typeof value === "number" && !Number.isFinite(value)) {
      errors.push(`${key} must be finite`);
    }
  }
  for (const list of [p.a1, p.a2]) {
    if (list.some((v) => !Number.isFinite(v))) errors.push("coefficients must be finite");
  }
  return errors;
}

export interface SliderRange {
  min: number;
  max: number;
  step: number;
}

/** Default slider span: +-3x the current magnitude (at least +-3). */
export function sliderRange(value: number): SliderRange {
  const span = 3 * Math.max(1, Math.abs(value));
  return { min: -span, max: span, step: span / 300 };
}

export type ScalarField = "eps1" | "eps2" | "b1" | "b2";

export class SessionState {
  params: Params = defaultParams(5);
  presetName: string | null = null;
  presetParams: Params | null = null;
  window = 2.5;
  presetWindow = 2.5;
  portrait: PortraitDocument | null = null;
  pending = false;
  error: string | null = null;
  offline = false;

  selectPreset(entry: PresetEntry): void {
    this.presetName = entry.name;
    this.presetParams = cloneParams(entry.params);
    this.params = cloneParams(entry.params);
    this.window = entry.window;
    this.presetWindow = entry.window;
    this.markEdited();
  }

  /** Restore the byte-identical preset coefficients. */
  reset(): void {
    if (this.presetParams) {
      this.params = cloneParams(this.presetParams);
      this.window = this.presetWindow;
      this.markEdited();
    }
  }

  setScalar(field: ScalarField, value: number): void {
    this.params = { ...cloneParams(this.params), [field]: value };
    this.markEdited();
  }

  setCoefficient(list: "a1" | "a2", index: number, value: number): void {
    const p = cloneParams(this.params);
    p[list][index] = value;
    this.params = p;
    this.markEdited();
  }

  /** Changing n rebuilds the coefficient lists to the new s. */
  setN(n: number): void {
    const s = coefficientCount(n);
    const resize = (xs: number[]) => {
      const out = xs.slice(0, s);
      while (out.length < s) out.push(0);
      return out;
    };
    const p = cloneParams(this.params);
    this.params = { ...p, n, a1: resize(p.a1), a2: resize(p.a2) };
    this.markEdited();
  }

  sliderRanges(): Record<string, SliderRange> {
    const out: Record<string, SliderRange> = {};
    for (const f of ["eps1", "eps2", "b1", "b2"] as ScalarField[]) {
      out[f] = sliderRange(this.params[f]);
    }
    this.params.a1.forEach((v, i) => (out[`a1_${i + 1}`] = sliderRange(v)));
    this.params.a2.forEach((v, i) => (out[`a2_${i + 1}`] = sliderRange(v)));
    return out;
  }

  private markEdited(): void {
    // never show a stale portrait for edited params without the indicator
    this.pending = true;
    this.error = null;
  }
}

export type TimerHandle = unknown;
export type SetTimeoutLike = (fn: () => void, ms: number) => TimerHandle;
export type ClearTimeoutLike = (h: TimerHandle) => void;

export interface UpdaterOptions {
  delayMs?: number;
  maxPoints?: number;
  seedCount?: number;
  setTimeoutFn?: SetTimeoutLike;
  clearTimeoutFn?: ClearTimeoutLike;
  onChange?: () => void;
}

export class PortraitUpdater {
  private timer: TimerHandle | null = null;
  private token = 0;
  inflight = 0;
  requestsSent = 0;
  census: { r0: number; count: number } | null = null;

  private readonly delayMs: number;
  private readonly maxPoints: number;
  private readonly seedCount: number;
  private readonly setTimeoutFn: SetTimeoutLike;
  private readonly clearTimeoutFn: ClearTimeoutLike;
  private readonly onChange: () => void;

  constructor(
    private api: ApiClient,
    private state: SessionState,
    opts: UpdaterOptions = {},
  ) {
    this.delayMs = opts.delayMs ?? 250;
    this.maxPoints = opts.maxPoints ?? 1500;
    this.seedCount = opts.seedCount ?? 3;
    this.setTimeoutFn = opts.setTimeoutFn ?? ((fn, ms) => setTimeout(fn, ms));
    this.clearTimeoutFn = opts.clearTimeoutFn ?? ((h) => clearTimeout(h as number));
    this.onChange = opts.onChange ?? (() => undefined);
  }

  /** Debounced: a burst of edits collapses into one request. */
  schedule(): void {
    this.state.pending = true;
    this.onChange();
    if (this.timer !== null) this.clearTimeoutFn(this.timer);
    this.timer = this.setTimeoutFn(() => {
      this.timer = null;
      void this.fire();
    }, this.delayMs);
  }

  async fire(): Promise<void> {
    const errors = validateParams(this.state.params);
    if (errors.length > 0) {
      this.state.error = errors.join("; ");
      this.state.pending = false;
      this.onChange();
      return;
    }
    const token = ++this.token;
    this.inflight += 1;
    this.requestsSent += 1;
    try {
      const doc = await this.api.portrait({
        params: this.state.params,
        max_points: this.maxPoints,
        seed_count: this.seedCount,
        census: this.census,
      });
      if (token === this.token) {
        this.state.portrait = doc;
        this.state.pending = false;
        this.state.error = null;
        this.state.offline = false;
      }
    } catch (err) {
      if (token !== this.token) return;
      this.state.pending = false;
      if (err instanceof ValidationError) {
        this.state.error = JSON.stringify(err.detail);
      } else if (err instanceof ServiceDownError) {
        this.state.offline = true;
        this.state.error = "service unreachable";
      } else {
        this.state.error = String(err);
      }
    } finally {
      this.inflight -= 1;
      this.onChange();
    }
  }
}
