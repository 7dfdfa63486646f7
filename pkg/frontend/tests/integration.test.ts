// End-to-end: run the real service and hold the UI's data path to the
// same bytes and numbers the command-line tool produces.

import { afterAll, beforeAll, describe, expect, it } from 'vitest';
import { spawn, spawnSync, type ChildProcess } from 'node:child_process';

import { fetchCloud, fetchCloudFile } from '../src/api.js';
import { binDistances, renderHistogramSvg } from '../src/histogram.js';
import { buildOverlay, renderCloudSvg } from '../src/overlay.js';
import { epsilonFromSlider, sliderFromEpsilon } from '../src/sliders.js';
import { countOccurrences } from './helpers.js';

const GEOIND = process.env.GEOIND_BIN ?? 'geoind';
const SITE = { lat: 26.689, lon: -80.018 };

let proc: ChildProcess;
let base = '';

beforeAll(async () => {
  proc = spawn(GEOIND, ['serve', '--port', '0'], {
    stdio: ['ignore', 'ignore', 'pipe'],
  });
  base = await new Promise<string>((resolve, reject) => {
    let buf = '';
    const timer = setTimeout(
      () => reject(new Error(`service never announced a port; stderr: ${buf}`)),
      20000,
    );
    proc.stderr!.on('data', (chunk: Buffer) => {
      buf += chunk.toString();
      const m = buf.match(/on (http:\/\/[^/\s]+)\//);
      if (m) {
        clearTimeout(timer);
        resolve(m[1]);
      }
    });
    proc.once('exit', (code) => {
      clearTimeout(timer);
      reject(new Error(`service exited early (${code}): ${buf}`));
    });
  });
}, 30000);

afterAll(() => {
  proc?.kill('SIGINT');
});

describe('UI export vs CLI output', () => {
  const params = { ...SITE, epsilon: 0.05, n: 512, seed: 7 };
  const cliArgs = (format: string) => [
    'cloud',
    '--lat', String(SITE.lat),
    '--lon', String(SITE.lon),
    '--epsilon', '0.05',
    '--n', '512',
    '--seed', '7',
    '--format', format,
  ];

  it('csv export is byte-equal to the CLI', async () => {
    const fromUi = Buffer.from(await fetchCloudFile(base, params, 'csv'));
    const cli = spawnSync(GEOIND, cliArgs('csv'));
    expect(cli.status).toBe(0);
    expect(fromUi.equals(cli.stdout)).toBe(true);
  }, 30000);

  it('geojson export is byte-equal to the CLI', async () => {
    const fromUi = Buffer.from(await fetchCloudFile(base, params, 'geojson'));
    const cli = spawnSync(GEOIND, cliArgs('geojson'));
    expect(cli.status).toBe(0);
    expect(fromUi.equals(cli.stdout)).toBe(true);
  }, 30000);

  it('exports keep 6-decimal coordinates and never the true site', async () => {
    const text = Buffer.from(await fetchCloudFile(base, params, 'csv')).toString();
    expect(text).not.toContain('26.689000,-80.018000');
    const firstData = text.split('\n')[1];
    expect(firstData).toMatch(/,-?[0-9]+\.\d{6},-?[0-9]+\.\d{6}/);
  }, 30000);
});

describe('slider-driven regeneration', () => {
  it('0.1 → 0.05 moves the expected-mean marker 20 m → 40 m and re-renders exactly n points', async () => {
    const n = 64;

    // both epsilons are exact slider detents
    const before = epsilonFromSlider(sliderFromEpsilon(0.1));
    const after = epsilonFromSlider(sliderFromEpsilon(0.05));
    expect(before).toBe(0.1);
    expect(after).toBe(0.05);

    const envA = await fetchCloud(base, { ...SITE, epsilon: before, n, seed: 7 });
    expect(envA.stats.expected_mean_m).toBe(20);
    const overlayA = buildOverlay(SITE, envA);
    const svgA = renderCloudSvg(overlayA, [], 520, false);
    expect(countOccurrences(svgA, '<circle class="pt"')).toBe(n);
    expect(svgA).toContain('data-mean-m="20"');
    const histA = renderHistogramSvg(
      binDistances(envA.stats.distances_m, overlayA.meanRadiusM), 340, 170);
    expect(histA).toContain('data-mean-m="20"');

    const envB = await fetchCloud(base, { ...SITE, epsilon: after, n, seed: 7 });
    expect(envB.stats.expected_mean_m).toBe(40);
    const overlayB = buildOverlay(SITE, envB);
    const svgB = renderCloudSvg(overlayB, [], 520, false);
    expect(countOccurrences(svgB, '<circle class="pt"')).toBe(n);
    expect(svgB).toContain('data-mean-m="40"');
    const histB = renderHistogramSvg(
      binDistances(envB.stats.distances_m, overlayB.meanRadiusM), 340, 170);
    expect(histB).toContain('data-mean-m="40"');

    // same seed, half the epsilon: the same underlying draws land twice
    // as far out, so the cloud really does double in spread
    expect(envB.stats.mean_m / envA.stats.mean_m).toBeCloseTo(2, 6);
  }, 30000);

  it('echoes the requested parameters so the caption can cite them', async () => {
    const env = await fetchCloud(base, { ...SITE, epsilon: 0.05, n: 8, seed: 7 });
    const overlay = buildOverlay(SITE, env);
    expect(overlay.caption).toContain('0.05');
    expect(overlay.caption).toContain('seed 7');
    expect(overlay.caption).toContain('n = 8');
  }, 30000);
});

describe('served UI', () => {
  it('serves the built page at the root', async () => {
    const resp = await fetch(`${base}/`);
    expect(resp.status).toBe(200);
    expect(resp.headers.get('content-type')).toContain('text/html');
    const text = await resp.text();
    expect(text).toContain('eps-slider');
    expect(text).toContain('main.js');
  });

  it('serves the compiled modules and stylesheet', async () => {
    for (const file of ['main.js', 'api.js', 'overlay.js', 'style.css']) {
      const resp = await fetch(`${base}/${file}`);
      expect(resp.status, file).toBe(200);
    }
  });
});

describe('error surfacing', () => {
  it('turns service rejections into coded errors for the banner', async () => {
    await expect(
      fetchCloud(base, { lat: 0, lon: 0, epsilon: -1, n: 4 }),
    ).rejects.toMatchObject({ code: 'epsilon_out_of_range' });
    await expect(
      fetchCloud(base, { lat: 95, lon: 0, epsilon: 0.1, n: 4 }),
    ).rejects.toMatchObject({ status: 400 });
  });
});
