// Canvas rendering of a portrait payload.  No client-side mathematics:
// every polyline and marker comes straight from the service document, so
// the picture is exactly what the engine computed.

import type { CensusSeed, PortraitDocument } from "./types.js";

export interface Ctx2D {
  lineWidth: number;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  clearRect(x: number, y: number, w: number, h: number): void;
}

export interface DrawStats {
  polylines: number;
  markers: number;
  censusDots: number;
}

export const KIND_COLORS: Record<string, string> = {
  saddle: "#000000",
  center: "#228833",
  "stable-spiral": "#aa3377",
  "unstable-spiral": "#ee6677",
  "stable-node": "#4477aa",
  "unstable-node": "#ccbb44",
  weak: "#bbbbbb",
};

const CENSUS_PALETTE = [
  "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee",
  "#aa3377", "#bbbbbb", "#222255", "#225555", "#552222",
];

export function makeTransform(window: number, sizePx: number) {
  const scale = sizePx / (2 * window);
  return (x: number, y: number): [number, number] => [
    (x + window) * scale,
    (window - y) * scale,
  ];
}

export function markerCount(doc: PortraitDocument): number {
  return doc.equilibria.length;
}

export interface Badges {
  rings: number | null;
  cycles: string[];
  spider: boolean | null;
  regime: string | null;
  hamiltonian: boolean;
  degenerate: string[];
  unresolved: string[];
}

export function badges(doc: PortraitDocument): Badges {
  const rep = doc.pattern_report;
  return {
    rings: rep ? rep.flower_rings.count : null,
    cycles: rep ? rep.n_cycles.map((c) => c.shape) : [],
    spider: rep ? rep.spider_net.present : null,
    regime: rep?.regime ?? null,
    hamiltonian: doc.hamiltonian,
    degenerate: doc.degenerate,
    unresolved: rep?.unresolved ?? [],
  };
}

/** Census coloring needs attracting peripheral structure to bin against. */
export function censusAvailable(doc: PortraitDocument): boolean {
  if (doc.hamiltonian) return false;
  return doc.equilibria.some(
    (e) => e.locus === "peripheral" && e.kind.endsWith("spiral"),
  );
}

export function censusColors(seeds: CensusSeed[]): Map<string, string> {
  const labels = [...new Set(seeds.map((s) => s.forward ?? "?"))].sort();
  const out = new Map<string, string>();
  labels.forEach((label, i) =>
    out.set(label, CENSUS_PALETTE[i % CENSUS_PALETTE.length] as string),
  );
  return out;
}

function polyline(ctx: Ctx2D, pts: [number, number][], tf: (x: number, y: number) => [number, number]): boolean {
  if (pts.length < 2) return false;
  ctx.beginPath();
  const first = pts[0] as [number, number];
  const [x0, y0] = tf(first[0], first[1]);
  ctx.moveTo(x0, y0);
  for (let i = 1; i < pts.length; i++) {
    const p = pts[i] as [number, number];
    const [x, y] = tf(p[0], p[1]);
    ctx.lineTo(x, y);
  }
  ctx.stroke();
  return true;
}

export function drawPortrait(
  doc: PortraitDocument,
  ctx: Ctx2D,
  sizePx: number,
  window: number,
): DrawStats {
  const tf = makeTransform(window, sizePx);
  ctx.clearRect(0, 0, sizePx, sizePx);
  const stats: DrawStats = { polylines: 0, markers: 0, censusDots: 0 };

  ctx.lineWidth = 1;
  ctx.strokeStyle = "#88aacc";
  for (const orbit of doc.orbits) {
    if (polyline(ctx, orbit.points, tf)) stats.polylines += 1;
  }

  ctx.lineWidth = 1.6;
  ctx.strokeStyle = "#cc3311";
  for (const sep of doc.separatrices) {
    for (const br of sep.branches) {
      if (polyline(ctx, br.points, tf)) stats.polylines += 1;
    }
  }

  for (const e of doc.equilibria) {
    const [px, py] = tf(e.r * Math.cos(e.phi), e.r * Math.sin(e.phi));
    ctx.fillStyle = KIND_COLORS[e.kind] ?? "#000000";
    if (e.kind === "saddle") {
      ctx.lineWidth = 1.5;
      ctx.strokeStyle = "#000000";
      ctx.beginPath();
      ctx.moveTo(px - 4, py - 4);
      ctx.lineTo(px + 4, py + 4);
      ctx.stroke();
      ctx.beginPath();
      ctx.moveTo(px - 4, py + 4);
      ctx.lineTo(px + 4, py - 4);
      ctx.stroke();
    } else {
      ctx.beginPath();
      ctx.arc(px, py, 3, 0, 2 * Math.PI);
      ctx.fill();
    }
    stats.markers += 1;
  }

  const seeds = doc.pattern_report?.indeterminacy?.seeds;
  if (seeds && seeds.length > 0) {
    const r0 = doc.pattern_report?.indeterminacy?.r0 ?? 0;
    const colors = censusColors(seeds);
    for (const seed of seeds) {
      const [px, py] = tf(r0 * Math.cos(seed.angle), r0 * Math.sin(seed.angle));
      ctx.fillStyle = colors.get(seed.forward ?? "?") ?? "#000000";
      ctx.beginPath();
      ctx.arc(px, py, 2.2, 0, 2 * Math.PI);
      ctx.fill();
      stats.censusDots += 1;
    }
  }
  return stats;
}
