/**
 * Line chart from a sweep CSV: one colored series per regime, broken
 * wherever a regime is infeasible so gaps are visible rather than
 * interpolated away.
 */

import { SchemaMismatchError, EmptyInputError, SweepRow } from './schema.js';
import {
  FONT, REGIME_COLORS, esc, extent, label, px, scale, svgDocument, ticks,
} from './svg.js';

export type SweepField = 'effort' | 'surplus_pw' | 'owner_pw' | 'manager_pw';

export const FIELD_GETTERS: Record<SweepField, (r: SweepRow) => number> = {
  effort: (r) => r.effort,
  surplus_pw: (r) => r.surplusPw,
  owner_pw: (r) => r.ownerPw,
  manager_pw: (r) => r.managerPw,
};

const WIDTH = 800;
const HEIGHT = 500;
const M = { left: 70, right: 180, top: 40, bottom: 55 };

const REGIME_ORDER = [
  'ObservableBenchmark', 'EqualBonus', 'IntegratedManager', 'SeparateManager',
];

export function renderLineChart(rows: SweepRow[], field: SweepField = 'effort'): string {
  const get = FIELD_GETTERS[field];
  if (!get) {
    throw new SchemaMismatchError(`unknown sweep field ${JSON.stringify(field)}`);
  }
  if (rows.length === 0) {
    throw new EmptyInputError('sweep has no rows');
  }
  const varyName = rows[0]!.varyName;
  for (const r of rows) {
    if (r.varyName !== varyName) {
      throw new SchemaMismatchError(
        `sweep mixes vary_name ${r.varyName} with ${varyName}`);
    }
    if (!(r.regime in REGIME_COLORS)) {
      throw new SchemaMismatchError(`unknown regime ${JSON.stringify(r.regime)}`);
    }
  }

  const regimes = REGIME_ORDER.filter((g) => rows.some((r) => r.regime === g));
  const drawable = rows.filter((r) => r.feasible && Number.isFinite(get(r)));
  if (drawable.length === 0) {
    throw new EmptyInputError(`no feasible rows with a finite ${field} to plot`);
  }

  const xExtent = extent(rows.map((r) => r.varyValue));
  const yExtent = extent(drawable.map(get));
  const x = scale(xExtent, M.left, WIDTH - M.right);
  const y = scale(yExtent, HEIGHT - M.bottom, M.top);

  const parts: string[] = [];

  // axes and grid
  parts.push(`<g font-family="${FONT}" font-size="12" fill="#333333">`);
  for (const t of ticks(xExtent)) {
    const gx = px(x(t));
    parts.push(`<line x1="${gx}" y1="${px(HEIGHT - M.bottom)}" x2="${gx}" y2="${px(HEIGHT - M.bottom + 5)}" stroke="#333333"/>`);
    parts.push(`<text x="${gx}" y="${px(HEIGHT - M.bottom + 18)}" text-anchor="middle">${esc(label(t))}</text>`);
  }
  for (const t of ticks(yExtent)) {
    const gy = px(y(t));
    parts.push(`<line x1="${px(M.left - 5)}" y1="${gy}" x2="${px(M.left)}" y2="${gy}" stroke="#333333"/>`);
    parts.push(`<line x1="${px(M.left)}" y1="${gy}" x2="${px(WIDTH - M.right)}" y2="${gy}" stroke="#eeeeee"/>`);
    parts.push(`<text x="${px(M.left - 8)}" y="${px(y(t) + 4)}" text-anchor="end">${esc(label(t))}</text>`);
  }
  parts.push(`<line x1="${px(M.left)}" y1="${px(HEIGHT - M.bottom)}" x2="${px(WIDTH - M.right)}" y2="${px(HEIGHT - M.bottom)}" stroke="#333333"/>`);
  parts.push(`<line x1="${px(M.left)}" y1="${px(M.top)}" x2="${px(M.left)}" y2="${px(HEIGHT - M.bottom)}" stroke="#333333"/>`);
  parts.push(`<text x="${px((M.left + WIDTH - M.right) / 2)}" y="${px(HEIGHT - 12)}" text-anchor="middle">${esc(varyName)}</text>`);
  parts.push(`<text x="16" y="${px((M.top + HEIGHT - M.bottom) / 2)}" text-anchor="middle" transform="rotate(-90 16 ${px((M.top + HEIGHT - M.bottom) / 2)})">${esc(field)}</text>`);
  parts.push('</g>');

  // one polyline per regime, split at infeasible/non-finite rows
  for (const regime of regimes) {
    const color = REGIME_COLORS[regime]!;
    const series = rows.filter((r) => r.regime === regime);
    const segments: string[][] = [];
    let current: string[] = [];
    for (const r of series) {
      const v = get(r);
      if (r.feasible && Number.isFinite(v)) {
        current.push(`${px(x(r.varyValue))},${px(y(v))}`);
      } else if (current.length > 0) {
        segments.push(current);
        current = [];
      }
    }
    if (current.length > 0) segments.push(current);
    for (const seg of segments) {
      if (seg.length === 1) {
        const [pt] = seg;
        const [cx, cy] = pt!.split(',');
        parts.push(`<circle cx="${cx}" cy="${cy}" r="2" fill="${color}"/>`);
      } else {
        parts.push(`<polyline points="${seg.join(' ')}" fill="none" stroke="${color}" stroke-width="1.8"/>`);
      }
    }
  }

  // legend, one swatch per plotted regime
  parts.push(`<g font-family="${FONT}" font-size="12" fill="#333333">`);
  let ly = M.top + 8;
  for (const regime of regimes) {
    const color = REGIME_COLORS[regime]!;
    const lx = WIDTH - M.right + 14;
    parts.push(`<line x1="${px(lx)}" y1="${px(ly)}" x2="${px(lx + 22)}" y2="${px(ly)}" stroke="${color}" stroke-width="2.5"/>`);
    parts.push(`<text x="${px(lx + 28)}" y="${px(ly + 4)}">${esc(regime)}</text>`);
    ly += 20;
  }
  parts.push('</g>');

  return svgDocument(WIDTH, HEIGHT, parts);
}
