/**
 * File-level entry point: read a CSV produced by the solver CLI, render
 * the requested chart, and write the SVG. The output file is written only
 * after rendering succeeds, so a failed job never leaves a partial image.
 */

import { readFileSync, writeFileSync } from 'node:fs';

import { parseMapCsv, parseSweepCsv } from './schema.js';
import { SweepField, renderLineChart } from './lineChart.js';
import { renderRegionMap } from './regionMap.js';

export type ChartKind = 'lines_vs_param' | 'region_map';

export interface ChartJob {
  inputCsv: string;
  chartKind: ChartKind;
  outputImage: string;
  /** Column to plot on the y axis of a line chart. Default: effort. */
  valueField?: SweepField;
}

export function render(job: ChartJob): string {
  const text = readFileSync(job.inputCsv, 'utf8');
  let svg: string;
  if (job.chartKind === 'lines_vs_param') {
    svg = renderLineChart(parseSweepCsv(text), job.valueField ?? 'effort');
  } else if (job.chartKind === 'region_map') {
    svg = renderRegionMap(parseMapCsv(text));
  } else {
    throw new Error(`unknown chart kind: ${String(job.chartKind)}`);
  }
  writeFileSync(job.outputImage, svg, 'utf8');
  return svg;
}
