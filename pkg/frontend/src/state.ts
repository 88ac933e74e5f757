/** Explorer parameter state: families, slider ranges, query building.
 *
 * Ranges are (subsets of) what the service validates, so clamping here means
 * an in-range slider can never produce a 400. The omega slider works on an
 * integer numerator so the query carries an exact rational, not a float.
 */

export type Family = "pseudo" | "bspline" | "dd-primal" | "lian" | "tension";

export const FAMILIES: Family[] = ["pseudo", "bspline", "dd-primal", "lian", "tension"];

export const OMEGA_STEPS = 64;

export interface ParamSet {
  family: Family;
  m: number;
  n: number;
  lprime: number;
  /** numerator of omega over OMEGA_STEPS */
  omegaNum: number;
}

export interface Range {
  min: number;
  max: number;
  step: number;
}

interface FamilyLimits {
  m: Range;
  n?: Range;
  lprime?: Range;
  omega?: Range;
}

// service caps: m <= 9, n <= 12, l' <= 30; the l' ceilings here are lower to
// keep every slider position inside the 1 s response budget
const LIMITS: Record<Family, FamilyLimits> = {
  pseudo: {
    m: { min: 2, max: 9, step: 1 },
    n: { min: 1, max: 12, step: 1 },
    lprime: { min: 0, max: 5, step: 1 },
  },
  bspline: {
    m: { min: 2, max: 9, step: 1 },
    n: { min: 0, max: 12, step: 1 },
  },
  "dd-primal": {
    m: { min: 2, max: 9, step: 1 },
    lprime: { min: 0, max: 8, step: 1 },
  },
  lian: {
    m: { min: 3, max: 9, step: 2 },
    lprime: { min: 0, max: 8, step: 1 },
  },
  tension: {
    m: { min: 2, max: 9, step: 1 },
    omega: { min: 0, max: OMEGA_STEPS, step: 1 },
  },
};

export function limitsOf(family: Family): FamilyLimits {
  return LIMITS[family];
}

export interface ControlVisibility {
  n: boolean;
  lprime: boolean;
  omega: boolean;
}

/** Which sliders a family actually uses; the rest are hidden, not disabled. */
export function visibleControls(family: Family): ControlVisibility {
  const limits = LIMITS[family];
  return {
    n: limits.n !== undefined,
    lprime: limits.lprime !== undefined,
    omega: limits.omega !== undefined,
  };
}

function clampTo(value: number, range: Range): number {
  let v = Math.round(value);
  if (v < range.min) v = range.min;
  if (v > range.max) v = range.max;
  // snap onto the step grid (odd arities for lian)
  v = range.min + Math.round((v - range.min) / range.step) * range.step;
  return Math.min(v, range.max);
}

export function clampParams(p: ParamSet): ParamSet {
  const limits = LIMITS[p.family];
  return {
    family: p.family,
    m: clampTo(p.m, limits.m),
    n: limits.n ? clampTo(p.n, limits.n) : p.n,
    lprime: limits.lprime ? clampTo(p.lprime, limits.lprime) : p.lprime,
    omegaNum: limits.omega ? clampTo(p.omegaNum, limits.omega) : p.omegaNum,
  };
}

export function defaultParams(family: Family): ParamSet {
  return clampParams({ family, m: family === "lian" ? 3 : 2, n: 3, lprime: 1, omegaNum: OMEGA_STEPS / 2 });
}

/** Exact omega as the service expects it: "0", "1", or "k/64". */
export function omegaString(omegaNum: number): string {
  if (omegaNum <= 0) return "0";
  if (omegaNum >= OMEGA_STEPS) return "1";
  return `${omegaNum}/${OMEGA_STEPS}`;
}

/** Query-string parameters for /api/scheme and /api/sample. */
export function queryOf(p: ParamSet): Record<string, string> {
  const q: Record<string, string> = { family: p.family, m: String(p.m) };
  const visible = visibleControls(p.family);
  if (visible.n) q.n = String(p.n);
  if (visible.lprime) q.lprime = String(p.lprime);
  if (visible.omega) q.omega = omegaString(p.omegaNum);
  return q;
}

/** Sample levels chosen so point counts stay plot-sized at high arity. */
export function sampleLevels(m: number): number {
  if (m <= 2) return 6;
  if (m <= 4) return 4;
  return 3;
}

export interface ExplorerState {
  main: ParamSet;
  /** pinned second parameter set, overlaid until cleared */
  compare: ParamSet | null;
}
