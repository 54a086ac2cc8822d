import { spawnSync } from 'node:child_process';
import { existsSync, mkdtempSync, readFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { fileURLToPath } from 'node:url';

import { describe, expect, it } from 'vitest';

const CLI = fileURLToPath(new URL('../dist/cli.js', import.meta.url));
const FIXTURES = fileURLToPath(new URL('./fixtures', import.meta.url));

function run(...args: string[]): { status: number | null; stderr: string } {
  const res = spawnSync(process.execPath, [CLI, ...args], { encoding: 'utf8' });
  return { status: res.status, stderr: res.stderr };
}

function tmp(): string {
  return mkdtempSync(join(tmpdir(), 'teambonus-charts-cli-'));
}

describe('command line', () => {
  it('exits 2 with usage when arguments are missing', () => {
    const res = run();
    expect(res.status).toBe(2);
    expect(res.stderr).toContain('usage:');
  });

  it('exits 2 on an unknown chart kind', () => {
    const res = run('pie', 'in.csv', 'out.svg');
    expect(res.status).toBe(2);
    expect(res.stderr).toContain('unknown chart kind');
  });

  it('exits 2 on an unknown field', () => {
    const res = run('line', join(FIXTURES, 'sweep_sigma_200.csv'),
      join(tmp(), 'out.svg'), '--field', 'profit');
    expect(res.status).toBe(2);
    expect(res.stderr).toContain('unknown field');
  });

  it('exits 2 when --field is given for a map', () => {
    const res = run('map', join(FIXTURES, 'map_150.csv'),
      join(tmp(), 'out.svg'), '--field', 'effort');
    expect(res.status).toBe(2);
  });

  it('renders a line chart and is byte-stable across runs', () => {
    const dir = tmp();
    const a = join(dir, 'a.svg');
    const b = join(dir, 'b.svg');
    expect(run('line', join(FIXTURES, 'sweep_sigma_all.csv'), a).status).toBe(0);
    expect(run('lines_vs_param', join(FIXTURES, 'sweep_sigma_all.csv'), b).status).toBe(0);
    const bytesA = readFileSync(a, 'utf8');
    expect(bytesA.startsWith('<svg ')).toBe(true);
    expect(bytesA).toBe(readFileSync(b, 'utf8'));
  });

  it('renders a region map and is byte-stable across runs', () => {
    const dir = tmp();
    const a = join(dir, 'a.svg');
    const b = join(dir, 'b.svg');
    expect(run('map', join(FIXTURES, 'map_150.csv'), a).status).toBe(0);
    expect(run('region_map', join(FIXTURES, 'map_150.csv'), b).status).toBe(0);
    expect(readFileSync(a, 'utf8')).toBe(readFileSync(b, 'utf8'));
  });

  it('exits 1 and writes nothing when the input is the wrong schema', () => {
    const out = join(tmp(), 'out.svg');
    const res = run('map', join(FIXTURES, 'sweep_sigma_200.csv'), out);
    expect(res.status).toBe(1);
    expect(res.stderr).toContain('expected schema');
    expect(existsSync(out)).toBe(false);
  });

  it('exits 1 when the input file is missing', () => {
    const res = run('line', join(tmp(), 'missing.csv'), join(tmp(), 'out.svg'));
    expect(res.status).toBe(1);
    expect(res.stderr).toContain('error:');
  });
});
