// Export the cloud that is on screen. The bytes come straight from the
// server's file mode (format=csv / format=geojson), which runs the same
// writer the command-line tool uses — so a UI export and a CLI run with
// identical parameters produce identical files. To guarantee "identical
// parameters", the URL is built from the displayed envelope's echoed
// values, never from the current control widgets.
import { cloudFileUrl, fetchCloudFile } from './api.js';
export function exportUrl(base, displayed, format) {
    const { site, envelope } = displayed;
    return cloudFileUrl(base, {
        lat: site.lat,
        lon: site.lon,
        epsilon: envelope.epsilon,
        n: envelope.n,
        seed: envelope.seed,
    }, format);
}
export function exportFilename(displayed, format) {
    const ext = format === 'csv' ? 'csv' : 'geojson';
    return `cloud-seed${displayed.envelope.seed}-n${displayed.envelope.n}.${ext}`;
}
/** Fetch the export bytes and hand them to the browser as a download. */
export async function downloadExport(base, displayed, format) {
    const bytes = await fetchCloudFile(base, {
        lat: displayed.site.lat,
        lon: displayed.site.lon,
        epsilon: displayed.envelope.epsilon,
        n: displayed.envelope.n,
        seed: displayed.envelope.seed,
    }, format);
    const type = format === 'csv' ? 'text/csv' : 'application/geo+json';
    const blob = new Blob([bytes], { type });
    const url = URL.createObjectURL(blob);
    try {
        const a = document.createElement('a');
        a.href = url;
        a.download = exportFilename(displayed, format);
        document.body.appendChild(a);
        a.click();
        a.remove();
    }
    finally {
        // let the click consume the URL before revoking
        setTimeout(() => URL.revokeObjectURL(url), 1000);
    }
}
