import type { CloudEnvelope, GeoJsonFeature } from '../src/api.js';

/** Build a synthetic envelope shaped like a real /api/cloud response. */
export function fakeEnvelope(opts: {
  lat?: number;
  lon?: number;
  epsilon?: number;
  n?: number;
  seed?: number;
}): CloudEnvelope {
  const lat = opts.lat ?? 26.689;
  const lon = opts.lon ?? -80.018;
  const epsilon = opts.epsilon ?? 0.1;
  const n = opts.n ?? 8;
  const seed = opts.seed ?? 7;
  const features: GeoJsonFeature[] = [];
  const distances: number[] = [];
  for (let i = 0; i < n; i++) {
    // spiral of plausible offsets, a few tens of meters
    const r = 5 + 30 * (i / Math.max(n - 1, 1));
    const th = (i * 2.39996) % (2 * Math.PI);
    const dlat = (r * Math.cos(th)) / 111194.9;
    const dlon = (r * Math.sin(th)) / (111194.9 * Math.cos((lat * Math.PI) / 180));
    features.push({
      type: 'Feature',
      id: `p${String(i).padStart(5, '0')}`,
      geometry: { type: 'Point', coordinates: [lon + dlon, lat + dlat] },
      properties: {},
    });
    distances.push(r);
  }
  const mean = distances.reduce((a, b) => a + b, 0) / n;
  return {
    cloud: { type: 'FeatureCollection', features },
    stats: {
      n,
      mean_m: mean,
      median_m: mean,
      expected_mean_m: 2 / epsilon,
      angle_chi2: 30.0,
      radius_ks: 0.02,
      distances_m: distances,
    },
    epsilon,
    n,
    seed,
  };
}

export function countOccurrences(haystack: string, needle: string): number {
  let count = 0;
  let at = haystack.indexOf(needle);
  while (at !== -1) {
    count += 1;
    at = haystack.indexOf(needle, at + needle.length);
  }
  return count;
}
