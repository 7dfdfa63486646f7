// Typed client for the local geoind JSON API. Everything the UI knows
// about the wire format lives here.
export class ApiError extends Error {
    constructor(status, body) {
        super(body.message);
        this.status = status;
        this.code = body.code;
    }
}
function cloudQuery(params) {
    const q = new URLSearchParams({
        lat: String(params.lat),
        lon: String(params.lon),
        epsilon: String(params.epsilon),
        n: String(params.n),
    });
    if (params.seed !== undefined)
        q.set('seed', String(params.seed));
    return q;
}
export function cloudUrl(base, params) {
    return `${base}/api/cloud?${cloudQuery(params)}`;
}
/** URL for the raw file form of a cloud; the server emits the same bytes
 * the command-line tool writes, so a saved response is byte-identical to
 * the equivalent CLI output. */
export function cloudFileUrl(base, params, format) {
    const q = cloudQuery(params);
    q.set('format', format);
    return `${base}/api/cloud?${q}`;
}
async function parseOrThrow(resp) {
    if (!resp.ok) {
        let body;
        try {
            body = (await resp.json());
        }
        catch {
            body = { code: 'bad_response', message: `HTTP ${resp.status}` };
        }
        throw new ApiError(resp.status, body);
    }
    return resp.json();
}
export async function fetchCloud(base, params, signal) {
    const resp = await fetch(cloudUrl(base, params), { signal });
    return (await parseOrThrow(resp));
}
export async function fetchCloudFile(base, params, format) {
    const resp = await fetch(cloudFileUrl(base, params, format));
    if (!resp.ok) {
        throw new ApiError(resp.status, (await resp.json()));
    }
    return resp.arrayBuffer();
}
export async function perturbPoint(base, body, signal) {
    const resp = await fetch(`${base}/api/perturb`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(body),
        signal,
    });
    return (await parseOrThrow(resp));
}
export async function fetchTable1(base, site, n, seed, signal) {
    const q = new URLSearchParams({
        lat: String(site.lat),
        lon: String(site.lon),
        n: String(n),
    });
    if (seed !== undefined)
        q.set('seed', String(seed));
    const resp = await fetch(`${base}/api/table1?${q}`, { signal });
    const rows = (await parseOrThrow(resp));
    return { rows, seed: resp.headers.get('X-Geoind-Seed') };
}
