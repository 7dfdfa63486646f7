// Typed client for the local geoind JSON API. Everything the UI knows
// about the wire format lives here.

export interface CloudParams {
  lat: number;
  lon: number;
  epsilon: number;
  n: number;
  seed?: number;
}

export interface GeoJsonFeature {
  type: 'Feature';
  id: string;
  geometry: { type: 'Point'; coordinates: [number, number] };
  properties: Record<string, string>;
}

export interface CloudStats {
  n: number;
  mean_m: number;
  median_m: number;
  expected_mean_m: number;
  angle_chi2: number;
  radius_ks: number;
  distances_m: number[];
}

export interface CloudEnvelope {
  cloud: { type: 'FeatureCollection'; features: GeoJsonFeature[] };
  stats: CloudStats;
  epsilon: number;
  n: number;
  seed: number;
}

export interface PerturbResponse {
  lat: number;
  lon: number;
  distance_m: number;
  guarantee_weakened: boolean;
  epsilon: number;
  seed: number;
}

export interface Table1Row {
  epsilon: number;
  mean_m: number;
  expected_m: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  code: string;
  status: number;
  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
  }
}

function cloudQuery(params: CloudParams): URLSearchParams {
  const q = new URLSearchParams({
    lat: String(params.lat),
    lon: String(params.lon),
    epsilon: String(params.epsilon),
    n: String(params.n),
  });
  if (params.seed !== undefined) q.set('seed', String(params.seed));
  return q;
}

export function cloudUrl(base: string, params: CloudParams): string {
  return `${base}/api/cloud?${cloudQuery(params)}`;
}

/** URL for the raw file form of a cloud; the server emits the same bytes
 * the command-line tool writes, so a saved response is byte-identical to
 * the equivalent CLI output. */
export function cloudFileUrl(
  base: string,
  params: CloudParams,
  format: 'csv' | 'geojson',
): string {
  const q = cloudQuery(params);
  q.set('format', format);
  return `${base}/api/cloud?${q}`;
}

async function parseOrThrow(resp: Response): Promise<unknown> {
  if (!resp.ok) {
    let body: ApiErrorBody;
    try {
      body = (await resp.json()) as ApiErrorBody;
    } catch {
      body = { code: 'bad_response', message: `HTTP ${resp.status}` };
    }
    throw new ApiError(resp.status, body);
  }
  return resp.json();
}

export async function fetchCloud(
  base: string,
  params: CloudParams,
  signal?: AbortSignal,
): Promise<CloudEnvelope> {
  const resp = await fetch(cloudUrl(base, params), { signal });
  return (await parseOrThrow(resp)) as CloudEnvelope;
}

export async function fetchCloudFile(
  base: string,
  params: CloudParams,
  format: 'csv' | 'geojson',
): Promise<ArrayBuffer> {
  const resp = await fetch(cloudFileUrl(base, params, format));
  if (!resp.ok) {
    throw new ApiError(resp.status, (await resp.json()) as ApiErrorBody);
  }
  return resp.arrayBuffer();
}

export async function perturbPoint(
  base: string,
  body: { lat: number; lon: number; epsilon: number; seed?: number },
  signal?: AbortSignal,
): Promise<PerturbResponse> {
  const resp = await fetch(`${base}/api/perturb`, {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(body),
    signal,
  });
  return (await parseOrThrow(resp)) as PerturbResponse;
}

export async function fetchTable1(
  base: string,
  site: { lat: number; lon: number },
  n: number,
  seed?: number,
  signal?: AbortSignal,
): Promise<{ rows: Table1Row[]; seed: string | null }> {
  const q = new URLSearchParams({
    lat: String(site.lat),
    lon: String(site.lon),
    n: String(n),
  });
  if (seed !== undefined) q.set('seed', String(seed));
  const resp = await fetch(`${base}/api/table1?${q}`, { signal });
  const rows = (await parseOrThrow(resp)) as Table1Row[];
  return { rows, seed: resp.headers.get('X-Geoind-Seed') };
}
