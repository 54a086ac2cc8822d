import { existsSync, mkdtempSync, readFileSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { fileURLToPath } from 'node:url';

import { describe, expect, it } from 'vitest';

import { render } from '../src/render.js';
import { EmptyInputError, SchemaMismatchError } from '../src/schema.js';

const FIXTURES = fileURLToPath(new URL('./fixtures', import.meta.url));

function tmp(): string {
  return mkdtempSync(join(tmpdir(), 'teambonus-charts-'));
}

describe('render', () => {
  it('writes the SVG it returns', () => {
    const out = join(tmp(), 'line.svg');
    const svg = render({
      inputCsv: join(FIXTURES, 'sweep_sigma_all.csv'),
      chartKind: 'lines_vs_param',
      outputImage: out,
    });
    expect(readFileSync(out, 'utf8')).toBe(svg);
    expect(svg.startsWith('<svg ')).toBe(true);
  });

  it('honors the value field on line jobs', () => {
    const out = join(tmp(), 'owner.svg');
    const svg = render({
      inputCsv: join(FIXTURES, 'sweep_sigma_200.csv'),
      chartKind: 'lines_vs_param',
      outputImage: out,
      valueField: 'owner_pw',
    });
    expect(svg).toContain('>owner_pw</text>');
  });

  it('writes identical bytes for repeated map jobs', () => {
    const dir = tmp();
    const job = {
      inputCsv: join(FIXTURES, 'map_150.csv'),
      chartKind: 'region_map' as const,
      outputImage: join(dir, 'a.svg'),
    };
    render(job);
    render({ ...job, outputImage: join(dir, 'b.svg') });
    expect(readFileSync(join(dir, 'a.svg'), 'utf8'))
      .toBe(readFileSync(join(dir, 'b.svg'), 'utf8'));
  });

  it('writes nothing when the schema does not match the chart kind', () => {
    const out = join(tmp(), 'bad.svg');
    expect(() => render({
      inputCsv: join(FIXTURES, 'sweep_sigma_200.csv'),
      chartKind: 'region_map',
      outputImage: out,
    })).toThrow(SchemaMismatchError);
    expect(existsSync(out)).toBe(false);
  });

  it('writes nothing for a header-only input', () => {
    const dir = tmp();
    const input = join(dir, 'empty.csv');
    writeFileSync(input, '# teambonus-sweep v1\n' +
      'regime,vary_name,vary_value,branch,effort,surplus_pw,owner_pw,manager_pw,feasible\n');
    const out = join(dir, 'empty.svg');
    expect(() => render({
      inputCsv: input,
      chartKind: 'lines_vs_param',
      outputImage: out,
    })).toThrow(EmptyInputError);
    expect(existsSync(out)).toBe(false);
  });

  it('rejects an unknown chart kind', () => {
    expect(() => render({
      inputCsv: join(FIXTURES, 'sweep_sigma_200.csv'),
      chartKind: 'pie' as never,
      outputImage: join(tmp(), 'pie.svg'),
    })).toThrow(/unknown chart kind/);
  });
});
