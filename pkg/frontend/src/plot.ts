/** Canvas plotting for basis-function curves and the tension sweep.
 *
 * Scaling is the only numeric work the client does. The mapping functions
 * are pure and unit-tested; the draw calls are a thin wrapper around the 2D
 * context so they stay out of the tests.
 */

export interface Box {
  width: number;
  height: number;
  pad: number;
}

export interface Mapped {
  x: number;
  y: number;
}

export interface ScaleDomain {
  t0: number;
  t1: number;
  v0: number;
  v1: number;
}

/** Domain covering the curve: x from the support, y from the values plus margin. */
export function curveDomain(points: [number, number][], support: [number, number]): ScaleDomain {
  let lo = 0;
  let hi = 1;
  for (const [, v] of points) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  const margin = 0.08 * (hi - lo);
  return { t0: support[0], t1: support[1], v0: lo - margin, v1: hi + margin };
}

export function mapPoint(t: number, v: number, domain: ScaleDomain, box: Box): Mapped {
  const w = box.width - 2 * box.pad;
  const h = box.height - 2 * box.pad;
  const sx = domain.t1 === domain.t0 ? 0.5 : (t - domain.t0) / (domain.t1 - domain.t0);
  const sy = domain.v1 === domain.v0 ? 0.5 : (v - domain.v0) / (domain.v1 - domain.v0);
  return { x: box.pad + sx * w, y: box.pad + (1 - sy) * h };
}

export interface CurveStyle {
  color: string;
  width: number;
}

export function drawAxes(ctx: CanvasRenderingContext2D, domain: ScaleDomain, box: Box): void {
  ctx.save();
  ctx.strokeStyle = "#ccc";
  ctx.lineWidth = 1;
  if (domain.v0 < 0 && domain.v1 > 0) {
    const y0 = mapPoint(domain.t0, 0, domain, box).y;
    ctx.beginPath();
    ctx.moveTo(box.pad, y0);
    ctx.lineTo(box.width - box.pad, y0);
    ctx.stroke();
  }
  if (domain.t0 < 0 && domain.t1 > 0) {
    const x0 = mapPoint(0, domain.v0, domain, box).x;
    ctx.beginPath();
    ctx.moveTo(x0, box.pad);
    ctx.lineTo(x0, box.height - box.pad);
    ctx.stroke();
  }
  ctx.restore();
}

export function drawCurve(
  ctx: CanvasRenderingContext2D,
  points: [number, number][],
  domain: ScaleDomain,
  box: Box,
  style: CurveStyle,
): void {
  if (points.length === 0) return;
  ctx.save();
  ctx.strokeStyle = style.color;
  ctx.lineWidth = style.width;
  ctx.beginPath();
  points.forEach(([t, v], i) => {
    const p = mapPoint(t, v, domain, box);
    if (i === 0) ctx.moveTo(p.x, p.y);
    else ctx.lineTo(p.x, p.y);
  });
  ctx.stroke();
  ctx.restore();
}
