/**
 * Minimal deterministic SVG assembly: fixed canvas, fixed font stack,
 * numbers printed through one formatter so re-renders are byte-identical.
 */

export const FONT = 'Helvetica, Arial, sans-serif';

/** Regime colors; code 0 (infeasible) stays background. */
export const REGIME_COLORS: Record<string, string> = {
  EqualBonus: '#2166ac',
  IntegratedManager: '#b2182b',
  SeparateManager: '#1b7837',
  ObservableBenchmark: '#777777',
};

export const CODE_NAMES: Record<number, string> = {
  1: 'EqualBonus',
  2: 'IntegratedManager',
  3: 'SeparateManager',
};

/** Canvas coordinates: fixed precision keeps files stable and small. */
export function px(v: number): string {
  const s = v.toFixed(2);
  return s === '-0.00' ? '0.00' : s;
}

/** Tick labels: short round-trippable decimal. */
export function label(v: number): string {
  if (!Number.isFinite(v)) return String(v);
  const s = v.toPrecision(6);
  return String(Number(s));
}

export function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export interface Extent { min: number; max: number }

export function extent(values: number[]): Extent {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (!Number.isFinite(v)) continue;
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (min > max) throw new Error('no finite values to scale');
  if (min === max) {
    // degenerate span: pad so the single value sits mid-axis
    const pad = min === 0 ? 1 : Math.abs(min) * 0.1;
    return { min: min - pad, max: max + pad };
  }
  return { min, max };
}

export function scale(e: Extent, rangeLo: number, rangeHi: number): (v: number) => number {
  const k = (rangeHi - rangeLo) / (e.max - e.min);
  return (v) => rangeLo + (v - e.min) * k;
}

/** Round ticks: 5 steps of a 1/2/5 decade fitting the extent. */
export function ticks(e: Extent): number[] {
  const span = e.max - e.min;
  const raw = span / 5;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (mag * m >= raw) { step = mag * m; break; }
  }
  const out: number[] = [];
  for (let t = Math.ceil(e.min / step) * step; t <= e.max + step * 1e-9; t += step) {
    out.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return out;
}

export function svgDocument(width: number, height: number, content: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    `<rect width="${width}" height="${height}" fill="#ffffff"/>`,
    ...content,
    '</svg>',
    '',
  ].join('\n');
}
