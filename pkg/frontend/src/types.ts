// Payload types mirroring the portrait service JSON contract.

export interface Params {
  n: number;
  eps1: number;
  eps2: number;
  a1: number[];
  a2: number[];
  b1: number;
  b2: number;
}

export interface PresetEntry {
  name: string;
  note: string;
  window: number;
  params: Params;
}

export interface EquilibriumDoc {
  id: string;
  locus: string;
  r: number;
  phi: number;
  ray: string;
  kind: string;
  multiplicity: number;
  root_multiplicity?: number;
  trace: number;
  det: number;
  eigenvalues: [number, number][];
}

export interface BranchDoc {
  manifold: "unstable" | "stable";
  orientation: 1 | -1;
  connection: { kind: string; target: string | null };
  points: [number, number][];
}

export interface SeparatrixDoc {
  saddle_id: string;
  branches: BranchDoc[];
}

export interface OrbitDoc {
  termination: {
    kind: string;
    period?: number | null;
    exit_radius?: number | null;
    exit_angle?: number | null;
    equilibrium_id?: string | null;
  };
  h_drift?: number | null;
  points: [number, number][];
}

export interface CensusSeed {
  angle: number;
  forward?: string;
  backward?: string;
}

export interface PatternReportDoc {
  centroids: { count: number; radii: number[] };
  flower_rings: { count: number; radii: number[] };
  n_cycles: { radius: number; shape: "star" | "convex" }[];
  spider_net: { present: boolean; sectors: number };
  indeterminacy?: {
    r0: number;
    count: number;
    forward: Record<string, number>;
    backward: Record<string, number>;
    seeds: CensusSeed[];
  } | null;
  regime?: string | null;
  unresolved?: string[];
}

export interface PortraitDocument {
  schema_version: string;
  params: Params & { beta: number };
  hamiltonian: boolean;
  degenerate: string[];
  equilibria: EquilibriumDoc[];
  separatrices: SeparatrixDoc[];
  orbits: OrbitDoc[];
  equator_nodes: { phi: number; kind: string; margin: number }[];
  quasi_equilibrium_radii: number[];
  limit_cycles: { r: number; stability: string; approximate: boolean }[];
  pattern_report: PatternReportDoc | null;
}

export interface PortraitRequest {
  params: Params;
  seed_count?: number;
  max_points?: number;
  census?: { r0: number; count: number } | null;
}
