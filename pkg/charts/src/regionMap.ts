/**
 * Region image from a map CSV: one colored cell per grid point, colored
 * by the best regime's code. Infeasible cells stay background white
 * (blank), so the feasibility frontier reads directly off the image.
 */

import { MapData, SchemaMismatchError, EmptyInputError } from './schema.js';
import {
  CODE_NAMES, FONT, REGIME_COLORS, esc, extent, label, px, scale,
  svgDocument, ticks,
} from './svg.js';

const WIDTH = 760;
const HEIGHT = 620;
const M = { left: 80, right: 190, top: 40, bottom: 60 };

export function renderRegionMap(data: MapData): string {
  const { cells, axis1Name, axis2Name } = data;
  const a1 = uniqueSorted(cells.map((c) => c.axis1));
  const a2 = uniqueSorted(cells.map((c) => c.axis2));
  const seen = new Set(cells.map((c) => `${c.axis1}|${c.axis2}`));
  if (seen.size !== cells.length || cells.length !== a1.length * a2.length) {
    throw new SchemaMismatchError(
      `map is not a full grid: ${cells.length} cells for ${a1.length}x${a2.length}`);
  }
  if (!cells.some((c) => c.regimeCode !== 0)) {
    throw new EmptyInputError('map has no feasible cells to color');
  }

  const pitch1 = pitch(a1);
  const pitch2 = pitch(a2);
  const xExtent = { min: a1[0]! - pitch1 / 2, max: a1[a1.length - 1]! + pitch1 / 2 };
  const yExtent = { min: a2[0]! - pitch2 / 2, max: a2[a2.length - 1]! + pitch2 / 2 };
  const x = scale(xExtent, M.left, WIDTH - M.right);
  const y = scale(yExtent, HEIGHT - M.bottom, M.top);

  const parts: string[] = [];

  // cells first, axes drawn on top
  for (const c of cells) {
    if (c.regimeCode === 0) continue;
    const name = CODE_NAMES[c.regimeCode]!;
    const x0 = x(c.axis1 - pitch1 / 2);
    const y0 = y(c.axis2 + pitch2 / 2);
    const w = x(c.axis1 + pitch1 / 2) - x0;
    const h = y(c.axis2 - pitch2 / 2) - y0;
    parts.push(`<rect x="${px(x0)}" y="${px(y0)}" width="${px(w)}" height="${px(h)}" fill="${REGIME_COLORS[name]!}"/>`);
  }

  parts.push(`<g font-family="${FONT}" font-size="12" fill="#333333">`);
  for (const t of ticks(extent(a1))) {
    const gx = px(x(t));
    parts.push(`<line x1="${gx}" y1="${px(HEIGHT - M.bottom)}" x2="${gx}" y2="${px(HEIGHT - M.bottom + 5)}" stroke="#333333"/>`);
    parts.push(`<text x="${gx}" y="${px(HEIGHT - M.bottom + 18)}" text-anchor="middle">${esc(label(t))}</text>`);
  }
  for (const t of ticks(extent(a2))) {
    const gy = px(y(t));
    parts.push(`<line x1="${px(M.left - 5)}" y1="${gy}" x2="${px(M.left)}" y2="${gy}" stroke="#333333"/>`);
    parts.push(`<text x="${px(M.left - 8)}" y="${px(y(t) + 4)}" text-anchor="end">${esc(label(t))}</text>`);
  }
  parts.push(`<line x1="${px(M.left)}" y1="${px(HEIGHT - M.bottom)}" x2="${px(WIDTH - M.right)}" y2="${px(HEIGHT - M.bottom)}" stroke="#333333"/>`);
  parts.push(`<line x1="${px(M.left)}" y1="${px(M.top)}" x2="${px(M.left)}" y2="${px(HEIGHT - M.bottom)}" stroke="#333333"/>`);
  parts.push(`<text x="${px((M.left + WIDTH - M.right) / 2)}" y="${px(HEIGHT - 14)}" text-anchor="middle">${esc(axis1Name)}</text>`);
  parts.push(`<text x="18" y="${px((M.top + HEIGHT - M.bottom) / 2)}" text-anchor="middle" transform="rotate(-90 18 ${px((M.top + HEIGHT - M.bottom) / 2)})">${esc(axis2Name)}</text>`);
  parts.push('</g>');

  // legend: the regime-code color mapping plus the blank infeasible key
  parts.push(`<g font-family="${FONT}" font-size="12" fill="#333333">`);
  let ly = M.top + 4;
  for (const code of [1, 2, 3]) {
    const name = CODE_NAMES[code]!;
    const lx = WIDTH - M.right + 16;
    parts.push(`<rect x="${px(lx)}" y="${px(ly)}" width="14" height="14" fill="${REGIME_COLORS[name]!}"/>`);
    parts.push(`<text x="${px(lx + 20)}" y="${px(ly + 11)}">${esc(`${code} ${name}`)}</text>`);
    ly += 22;
  }
  const lx = WIDTH - M.right + 16;
  parts.push(`<rect x="${px(lx)}" y="${px(ly)}" width="14" height="14" fill="#ffffff" stroke="#999999"/>`);
  parts.push(`<text x="${px(lx + 20)}" y="${px(ly + 11)}">0 Infeasible (blank)</text>`);
  parts.push('</g>');

  return svgDocument(WIDTH, HEIGHT, parts);
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

function pitch(grid: number[]): number {
  if (grid.length < 2) return grid[0] === 0 ? 1 : Math.abs(grid[0]!) * 0.1;
  let smallest = Infinity;
  for (let i = 1; i < grid.length; i++) {
    smallest = Math.min(smallest, grid[i]! - grid[i - 1]!);
  }
  return smallest;
}
