// Page wiring. All rendering math lives in the pure modules; this file
// only moves values between the DOM and the store and keeps at most one
// cloud request in flight.
import { ApiError, fetchCloud } from './api.js';
import { regionFor } from './coastline.js';
import { downloadExport } from './export.js';
import { binDistances, renderHistogramSvg } from './histogram.js';
import { buildOverlay, renderCloudSvg } from './overlay.js';
import { toEastNorth } from './projection.js';
import { epsilonFromSlider, sliderFromEpsilon, expectedMeanM, epsilonFromLevelRadius, formatEpsilon, formatMeters, SLIDER_STEPS, } from './sliders.js';
import { initialState, Store } from './state.js';
const BASE = ''; // same origin as the page
const store = new Store(initialState());
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing element #${id}`);
    return node;
}
const latInput = el('lat');
const lonInput = el('lon');
const epsSlider = el('eps-slider');
const epsValue = el('eps-value');
const meanValue = el('mean-value');
const levelInput = el('level');
const radiusInput = el('radius');
const applyLr = el('apply-lr');
const nInput = el('n');
const seedInput = el('seed');
const showSite = el('show-site');
const generateBtn = el('generate');
const errorBox = el('error');
const mapBox = el('map');
const histBox = el('hist');
const statsBox = el('stats');
const captionBox = el('caption');
const coastNote = el('coast-note');
const exportCsv = el('export-csv');
const exportGeojson = el('export-geojson');
const overlayFile = el('overlay-file');
// Optional user-supplied shoreline (loaded locally; never uploaded).
let localLand = null;
function readControls() {
    const seedRaw = seedInput.value.trim();
    store.setControls({
        site: { lat: Number(latInput.value), lon: Number(lonInput.value) },
        requestedEpsilon: epsilonFromSlider(Number(epsSlider.value)),
        n: Math.trunc(Number(nInput.value)),
        seed: seedRaw === '' ? null : Number(seedRaw),
        showTrueSite: showSite.checked,
    });
}
function updateEpsilonReadout(eps) {
    epsValue.textContent = `ε = ${formatEpsilon(eps)} per meter`;
    meanValue.textContent = `expected mean ${formatMeters(expectedMeanM(eps))}`;
}
let inflight = null;
async function requestCloud() {
    const s = store.get();
    const site = { ...s.site };
    inflight?.abort();
    const ctl = new AbortController();
    inflight = ctl;
    store.beginRequest();
    try {
        const envelope = await fetchCloud(BASE, {
            lat: site.lat,
            lon: site.lon,
            epsilon: s.requestedEpsilon,
            n: s.n,
            ...(s.seed !== null ? { seed: s.seed } : {}),
        }, ctl.signal);
        if (inflight !== ctl)
            return; // a newer request owns the screen now
        store.applyEnvelope(site, envelope);
    }
    catch (err) {
        if (inflight !== ctl)
            return;
        if (err instanceof DOMException && err.name === 'AbortError') {
            store.cancelRequest();
            return;
        }
        const msg = err instanceof ApiError
            ? `${err.code}: ${err.message}`
            : `service unreachable: ${String(err)}`;
        store.failRequest(msg);
    }
    finally {
        if (inflight === ctl)
            inflight = null;
    }
}
function landPatches(site) {
    if (localLand) {
        return localLand.map((ring) => ({
            name: ring.name,
            ring: ring.coords.map(([lon, lat]) => toEastNorth(site, lon, lat)),
        }));
    }
    const region = regionFor(site);
    if (!region)
        return [];
    return region.rings.map((ring) => ({
        name: ring.name,
        ring: ring.coords.map(([lon, lat]) => toEastNorth(site, lon, lat)),
    }));
}
function statsRows(state) {
    const st = state.displayed.envelope.stats;
    return [
        ['points', String(st.n)],
        ['mean distance', formatMeters(st.mean_m)],
        ['median distance', formatMeters(st.median_m)],
        ['expected mean (2/ε)', formatMeters(st.expected_mean_m)],
        ['angle χ² (36 bins)', st.angle_chi2.toFixed(2)],
        ['radius KS', st.radius_ks.toFixed(4)],
    ];
}
function render(state) {
    generateBtn.disabled = state.pending;
    generateBtn.textContent = state.pending ? 'Generating…' : 'Generate cloud';
    const haveCloud = state.displayed !== null;
    exportCsv.disabled = !haveCloud;
    exportGeojson.disabled = !haveCloud;
    if (state.error) {
        errorBox.hidden = false;
        errorBox.textContent = state.error;
    }
    else {
        errorBox.hidden = true;
        errorBox.textContent = '';
    }
    if (!state.displayed)
        return;
    const { site, envelope } = state.displayed;
    const overlay = buildOverlay(site, envelope);
    const land = landPatches(site);
    mapBox.innerHTML = renderCloudSvg(overlay, land, 520, state.showTrueSite);
    histBox.innerHTML = renderHistogramSvg(binDistances(envelope.stats.distances_m, overlay.meanRadiusM), 340, 170);
    statsBox.innerHTML = statsRows(state)
        .map(([k, v]) => `<div><dt>${k}</dt><dd>${v}</dd></div>`)
        .join('');
    captionBox.textContent = overlay.caption;
    if (localLand) {
        coastNote.textContent = 'shoreline: local file (approximate)';
    }
    else {
        const region = regionFor(site);
        coastNote.textContent = region
            ? `shoreline: bundled sketch — ${region.name}`
            : 'no bundled shoreline near this site; showing open water';
    }
}
store.subscribe(render);
epsSlider.addEventListener('input', () => {
    updateEpsilonReadout(epsilonFromSlider(Number(epsSlider.value)));
});
epsSlider.addEventListener('change', () => {
    readControls();
    void requestCloud();
});
applyLr.addEventListener('click', () => {
    try {
        const eps = epsilonFromLevelRadius(Number(levelInput.value), Number(radiusInput.value));
        epsSlider.value = String(sliderFromEpsilon(eps));
        updateEpsilonReadout(epsilonFromSlider(Number(epsSlider.value)));
        readControls();
        void requestCloud();
    }
    catch (err) {
        store.failRequest(err instanceof Error ? err.message : String(err));
    }
});
generateBtn.addEventListener('click', () => {
    readControls();
    void requestCloud();
});
showSite.addEventListener('change', () => {
    readControls();
});
for (const [btn, fmt] of [
    [exportCsv, 'csv'],
    [exportGeojson, 'geojson'],
]) {
    btn.addEventListener('click', () => {
        const displayed = store.get().displayed;
        if (!displayed)
            return;
        downloadExport(BASE, displayed, fmt).catch((err) => {
            store.failRequest(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
        });
    });
}
for (const preset of document.querySelectorAll('button[data-lat]')) {
    preset.addEventListener('click', () => {
        latInput.value = preset.dataset.lat ?? '';
        lonInput.value = preset.dataset.lon ?? '';
        readControls();
        void requestCloud();
    });
}
overlayFile.addEventListener('change', () => {
    const file = overlayFile.files?.[0];
    if (!file) {
        localLand = null;
        render(store.get());
        return;
    }
    const reader = new FileReader();
    reader.onload = () => {
        try {
            localLand = extractRings(JSON.parse(String(reader.result)));
            render(store.get());
        }
        catch (err) {
            store.failRequest(`could not read overlay: ${String(err)}`);
        }
    };
    reader.readAsText(file);
});
/** Pull outer polygon rings out of a GeoJSON document. */
function extractRings(doc) {
    const rings = [];
    const visit = (geom, name) => {
        if (geom.type === 'Polygon') {
            const outer = geom.coordinates[0];
            rings.push({ name, coords: outer });
        }
        else if (geom.type === 'MultiPolygon') {
            for (const poly of geom.coordinates) {
                rings.push({ name, coords: poly[0] });
            }
        }
    };
    const d = doc;
    if (d.type === 'FeatureCollection') {
        for (const f of d.features) {
            visit(f.geometry, f.properties?.name ?? 'local shoreline');
        }
    }
    else if (d.type === 'Feature') {
        visit(d.geometry, 'local shoreline');
    }
    else {
        visit(d, 'local shoreline');
    }
    if (rings.length === 0)
        throw new Error('no polygons found');
    return rings;
}
// initial paint
const init = store.get();
epsSlider.max = String(SLIDER_STEPS);
epsSlider.value = String(sliderFromEpsilon(init.requestedEpsilon));
latInput.value = String(init.site.lat);
lonInput.value = String(init.site.lon);
nInput.value = String(init.n);
seedInput.value = init.seed === null ? '' : String(init.seed);
showSite.checked = init.showTrueSite;
updateEpsilonReadout(init.requestedEpsilon);
void requestCloud();
