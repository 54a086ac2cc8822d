#!/usr/bin/env node
/**
 * Command line wrapper around render(). Usage:
 *
 *   teambonus-charts line <sweep.csv> <out.svg> [--field effort]
 *   teambonus-charts map <map.csv> <out.svg>
 *
 * Exit codes: 0 success, 2 bad arguments, 1 render or IO failure.
 */

import { pathToFileURL } from 'node:url';

import { FIELD_GETTERS, SweepField } from './lineChart.js';
import { ChartKind, render } from './render.js';

const KIND_ALIASES: Record<string, ChartKind> = {
  line: 'lines_vs_param',
  lines: 'lines_vs_param',
  lines_vs_param: 'lines_vs_param',
  map: 'region_map',
  region: 'region_map',
  region_map: 'region_map',
};

const USAGE =
  'usage: teambonus-charts <line|map> <input.csv> <output.svg> [--field <column>]';

export function main(argv: string[]): number {
  const positional: string[] = [];
  let field: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i]!;
    if (arg === '--field') {
      field = argv[++i];
      if (field === undefined) {
        process.stderr.write('error: --field requires a value\n');
        return 2;
      }
    } else if (arg.startsWith('-')) {
      process.stderr.write(`error: unknown option ${arg}\n${USAGE}\n`);
      return 2;
    } else {
      positional.push(arg);
    }
  }

  if (positional.length !== 3) {
    process.stderr.write(`${USAGE}\n`);
    return 2;
  }
  const [kindArg, inputCsv, outputImage] = positional;
  const chartKind = KIND_ALIASES[kindArg!];
  if (chartKind === undefined) {
    process.stderr.write(`error: unknown chart kind ${kindArg}\n${USAGE}\n`);
    return 2;
  }
  if (field !== undefined && !(field in FIELD_GETTERS)) {
    process.stderr.write(
      `error: unknown field ${field} (expected one of ${Object.keys(FIELD_GETTERS).join(', ')})\n`);
    return 2;
  }
  if (field !== undefined && chartKind !== 'lines_vs_param') {
    process.stderr.write('error: --field only applies to line charts\n');
    return 2;
  }

  try {
    render({
      inputCsv: inputCsv!,
      chartKind,
      outputImage: outputImage!,
      valueField: field as SweepField | undefined,
    });
  } catch (err) {
    process.stderr.write(`error: ${err instanceof Error ? err.message : String(err)}\n`);
    return 1;
  }
  return 0;
}

if (import.meta.url === pathToFileURL(process.argv[1] ?? '').href) {
  process.exit(main(process.argv.slice(2)));
}
