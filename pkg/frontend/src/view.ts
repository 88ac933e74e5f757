/** Pure view-model: service documents in, display strings out.
 *
 * The regularity readout is the service's `display` field verbatim; nothing
 * is recomputed or re-rounded here except the comparison difference, which
 * only exists client-side.
 */

import type { SchemeDocument } from "./api.js";

export interface SchemeView {
  regularity: string;
  certainty: string;
  rho: string;
  tau: string;
  support: string;
  degrees: string;
  mask: string;
  foldedRows: string[][];
}

function signed(coeff: string, first: boolean): string {
  if (first) return coeff;
  return coeff.startsWith("-") ? `- ${coeff.slice(1)}` : `+ ${coeff}`;
}

/** Laurent coefficients as a readable sum of monomials. */
export function maskText(coeffs: string[], offset: number): string {
  const parts: string[] = [];
  coeffs.forEach((coeff, i) => {
    if (coeff === "0") return;
    const power = offset + i;
    const exp = power === 0 ? "" : power === 1 ? " z" : ` z^${power}`;
    parts.push(signed(coeff, parts.length === 0) + exp);
  });
  return parts.length ? parts.join(" ") : "0";
}

export function schemeView(doc: SchemeDocument): SchemeView {
  const reg = doc.regularity;
  const rho = reg.rho.exact !== null ? reg.rho.exact : `[${reg.rho.lo}, ${reg.rho.hi}]`;
  return {
    regularity: doc.display,
    certainty: reg.exact ? "exact" : reg.regularity === null ? "uncertified" : "enclosure",
    rho,
    tau: doc.spec.tau,
    support: `[${doc.support[0]}, ${doc.support[1]}]`,
    degrees: `generation ${doc.spec.r}` + (doc.spec.l !== null ? `, reproduction ${doc.spec.l}` : ""),
    mask: maskText(doc.spec.a.coeffs, doc.spec.a.offset),
    foldedRows: doc.folded ?? [],
  };
}

/** Difference shown in the comparison slot, from the service floats. */
export function regularityDelta(main: SchemeDocument, other: SchemeDocument): string {
  const a = main.regularity.regularity;
  const b = other.regularity.regularity;
  if (a === null || b === null) return "n/a";
  const d = a - b;
  return `${d >= 0 ? "+" : ""}${d.toFixed(5)}`;
}

export function titleOf(doc: SchemeDocument): string {
  const spec = doc.spec;
  const bits = [`${spec.family}`, `m=${spec.m}`];
  if (spec.n !== null) bits.push(`n=${spec.n}`);
  if (spec.l !== null) bits.push(`l=${spec.l}`);
  if (spec.omega !== undefined) bits.push(`ω=${spec.omega}`);
  return bits.join("  ");
}
