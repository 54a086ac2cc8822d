/**
 * Parsers for the teambonus CLI's schema-tagged CSV outputs.
 *
 * Both formats carry their schema on a leading comment line:
 *
 *   # teambonus-sweep v1
 *   regime,vary_name,vary_value,branch,effort,surplus_pw,owner_pw,manager_pw,feasible
 *
 *   # teambonus-map v1 axis1=sigma axis2=u0
 *   axis1,axis2,regime_code,owner_profit
 *
 * Anything that does not match is rejected before any rendering starts,
 * so a chart is never written from a file we only half understood.
 */

import Papa from 'papaparse';

export class SchemaMismatchError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'SchemaMismatchError';
  }
}

export class EmptyInputError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'EmptyInputError';
  }
}

export const SWEEP_SCHEMA = 'teambonus-sweep v1';
export const MAP_SCHEMA = 'teambonus-map v1';

export const SWEEP_COLUMNS = [
  'regime', 'vary_name', 'vary_value', 'branch', 'effort',
  'surplus_pw', 'owner_pw', 'manager_pw', 'feasible',
] as const;

export const MAP_COLUMNS = ['axis1', 'axis2', 'regime_code', 'owner_profit'] as const;

export interface SweepRow {
  regime: string;
  varyName: string;
  varyValue: number;
  branch: string;
  effort: number;
  surplusPw: number;
  ownerPw: number;
  managerPw: number;
  feasible: boolean;
}

export interface MapCell {
  axis1: number;
  axis2: number;
  regimeCode: number;
  ownerProfit: number;
}

export interface MapData {
  axis1Name: string;
  axis2Name: string;
  cells: MapCell[];
}

/** Numeric fields use the CLI's conventions: nan, inf, -inf. */
function num(raw: string | undefined, where: string): number {
  if (raw === undefined) throw new SchemaMismatchError(`missing value in ${where}`);
  if (raw === 'nan') return NaN;
  if (raw === 'inf') return Infinity;
  if (raw === '-inf') return -Infinity;
  const v = Number(raw);
  if (raw === '' || Number.isNaN(v)) {
    throw new SchemaMismatchError(`bad number ${JSON.stringify(raw)} in ${where}`);
  }
  return v;
}

function splitSchemaLine(text: string): { schemaLine: string; body: string } {
  const firstBreak = text.indexOf('\n');
  const first = (firstBreak < 0 ? text : text.slice(0, firstBreak)).trim();
  if (!first.startsWith('# ')) {
    throw new SchemaMismatchError(`expected a "# <schema>" first line, got ${JSON.stringify(first.slice(0, 40))}`);
  }
  return { schemaLine: first.slice(2), body: firstBreak < 0 ? '' : text.slice(firstBreak + 1) };
}

function parseBody(body: string, expectedColumns: readonly string[], where: string): Record<string, string>[] {
  const parsed = Papa.parse<Record<string, string>>(body.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0]!;
    throw new SchemaMismatchError(`CSV parse error in ${where}: ${e.message} (row ${e.row})`);
  }
  const fields = parsed.meta.fields ?? [];
  if (fields.join(',') !== expectedColumns.join(',')) {
    throw new SchemaMismatchError(
      `${where} columns are [${fields.join(',')}], expected [${expectedColumns.join(',')}]`);
  }
  if (parsed.data.length === 0) {
    throw new EmptyInputError(`${where} has a header but no data rows`);
  }
  return parsed.data;
}

export function parseSweepCsv(text: string): SweepRow[] {
  const { schemaLine, body } = splitSchemaLine(text);
  if (schemaLine !== SWEEP_SCHEMA) {
    throw new SchemaMismatchError(`expected schema "${SWEEP_SCHEMA}", got "${schemaLine}"`);
  }
  return parseBody(body, SWEEP_COLUMNS, 'sweep CSV').map((r, i) => {
    const where = `sweep row ${i + 1}`;
    const feasible = r['feasible'];
    if (feasible !== 'true' && feasible !== 'false') {
      throw new SchemaMismatchError(`feasible must be true/false in ${where}`);
    }
    return {
      regime: r['regime'] ?? '',
      varyName: r['vary_name'] ?? '',
      varyValue: num(r['vary_value'], where),
      branch: r['branch'] ?? '',
      effort: num(r['effort'], where),
      surplusPw: num(r['surplus_pw'], where),
      ownerPw: num(r['owner_pw'], where),
      managerPw: num(r['manager_pw'], where),
      feasible: feasible === 'true',
    };
  });
}

export function parseMapCsv(text: string): MapData {
  const { schemaLine, body } = splitSchemaLine(text);
  const m = schemaLine.match(/^(.+) axis1=(\S+) axis2=(\S+)$/);
  if (!m || m[1] !== MAP_SCHEMA) {
    throw new SchemaMismatchError(
      `expected schema "${MAP_SCHEMA} axis1=<name> axis2=<name>", got "${schemaLine}"`);
  }
  const cells = parseBody(body, MAP_COLUMNS, 'map CSV').map((r, i) => {
    const where = `map row ${i + 1}`;
    const code = num(r['regime_code'], where);
    if (![0, 1, 2, 3].includes(code)) {
      throw new SchemaMismatchError(`regime_code ${code} out of range in ${where}`);
    }
    return {
      axis1: num(r['axis1'], where),
      axis2: num(r['axis2'], where),
      regimeCode: code,
      ownerProfit: num(r['owner_profit'], where),
    };
  });
  return { axis1Name: m[2]!, axis2Name: m[3]!, cells };
}
