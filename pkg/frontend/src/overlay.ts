// Turn a cloud envelope into drawable geometry, and geometry into SVG
// markup. Rendering is string-based so tests can count the emitted
// overlay points without a browser DOM.

import type { CloudEnvelope } from './api.js';
import {
  EastNorth,
  Viewport,
  fitViewport,
  toEastNorth,
  toPixels,
} from './projection.js';
import { expectedMeanM } from './sliders.js';

export interface CloudOverlay {
  points: EastNorth[];
  /** radius of the expected-mean circle, meters (2/epsilon) */
  meanRadiusM: number;
  maxDistanceM: number;
  caption: string;
  epsilon: number;
  seed: number;
  n: number;
}

export function buildOverlay(
  site: { lat: number; lon: number },
  envelope: CloudEnvelope,
): CloudOverlay {
  const points = envelope.cloud.features.map((f) =>
    toEastNorth(site, f.geometry.coordinates[0], f.geometry.coordinates[1]),
  );
  const maxDistanceM = envelope.stats.distances_m.reduce(
    (a, b) => Math.max(a, b),
    0,
  );
  return {
    points,
    meanRadiusM: expectedMeanM(envelope.epsilon),
    maxDistanceM,
    caption: `ε = ${envelope.epsilon} per meter · seed ${envelope.seed} · n = ${envelope.n}`,
    epsilon: envelope.epsilon,
    seed: envelope.seed,
    n: envelope.n,
  };
}

export interface LandPatch {
  name: string;
  ring: EastNorth[];
}

function esc(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

function fmt(v: number): string {
  return v.toFixed(1);
}

/**
 * Render the map panel as an SVG string.
 *
 * Layers, back to front: sea background, land patches, the dashed
 * expected-mean circle, one <circle class="pt"> per noisy point, and the
 * optional true-site star (view-only; exports come straight from the
 * server and never contain the site).
 */
export function renderCloudSvg(
  overlay: CloudOverlay,
  land: LandPatch[],
  size: number,
  showTrueSite: boolean,
): string {
  const vp: Viewport = fitViewport(size, overlay.meanRadiusM, overlay.maxDistanceM);
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" ` +
      `width="${size}" height="${size}" role="img">`,
  );
  parts.push(`<rect class="sea" width="${size}" height="${size}"/>`);

  for (const patch of land) {
    const d = patch.ring
      .map((p, i) => {
        const { x, y } = toPixels(vp, p);
        return `${i === 0 ? 'M' : 'L'}${fmt(x)} ${fmt(y)}`;
      })
      .join(' ');
    parts.push(`<path class="land" d="${d} Z"><title>${esc(patch.name)}</title></path>`);
  }

  const center = toPixels(vp, { east: 0, north: 0 });
  const meanRadiusPx = (overlay.meanRadiusM * size) / (2 * vp.halfSpanM);
  parts.push(
    `<circle class="mean-circle" cx="${fmt(center.x)}" cy="${fmt(center.y)}" ` +
      `r="${fmt(meanRadiusPx)}" data-mean-m="${overlay.meanRadiusM}"/>`,
  );

  for (const p of overlay.points) {
    const { x, y } = toPixels(vp, p);
    parts.push(`<circle class="pt" cx="${fmt(x)}" cy="${fmt(y)}" r="2.5"/>`);
  }

  if (showTrueSite) {
    parts.push(
      `<path class="true-site" transform="translate(${fmt(center.x)} ${fmt(center.y)})" ` +
        `d="M0 -7 L2 -2 L7 -2 L3 1.5 L4.5 7 L0 3.5 L-4.5 7 L-3 1.5 L-7 -2 L-2 -2 Z">` +
        `<title>true site (never exported)</title></path>`,
    );
  }

  // scale bar: round the half-span to one significant digit
  const barM = Number((vp.halfSpanM / 2).toPrecision(1));
  const barPx = (barM * size) / (2 * vp.halfSpanM);
  const y0 = size - 14;
  parts.push(
    `<g class="scalebar"><line x1="10" y1="${y0}" x2="${fmt(10 + barPx)}" y2="${y0}"/>` +
      `<text x="10" y="${y0 - 4}">${barM >= 1000 ? barM / 1000 + ' km' : barM + ' m'}</text></g>`,
  );
  parts.push('</svg>');
  return parts.join('');
}
