// Page wiring. All rendering math lives in the pure modules; this file
// only moves values between the DOM and the store and keeps at most one
// cloud request in flight.

import { ApiError, fetchCloud } from './api.js';
import { regionFor } from './coastline.js';
import { downloadExport, ExportFormat } from './export.js';
import { binDistances, renderHistogramSvg } from './histogram.js';
import { buildOverlay, renderCloudSvg, LandPatch } from './overlay.js';
import { toEastNorth } from './projection.js';
import {
  epsilonFromSlider,
  sliderFromEpsilon,
  expectedMeanM,
  epsilonFromLevelRadius,
  formatEpsilon,
  formatMeters,
  SLIDER_STEPS,
} from './sliders.js';
import { initialState, Store, UiState } from './state.js';

const BASE = ''; // same origin as the page

const store = new Store(initialState());

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const latInput = el<HTMLInputElement>('lat');
const lonInput = el<HTMLInputElement>('lon');
const epsSlider = el<HTMLInputElement>('eps-slider');
const epsValue = el<HTMLElement>('eps-value');
const meanValue = el<HTMLElement>('mean-value');
const levelInput = el<HTMLInputElement>('level');
const radiusInput = el<HTMLInputElement>('radius');
const applyLr = el<HTMLButtonElement>('apply-lr');
const nInput = el<HTMLInputElement>('n');
const seedInput = el<HTMLInputElement>('seed');
const showSite = el<HTMLInputElement>('show-site');
const generateBtn = el<HTMLButtonElement>('generate');
const errorBox = el<HTMLElement>('error');
const mapBox = el<HTMLElement>('map');
const histBox = el<HTMLElement>('hist');
const statsBox = el<HTMLElement>('stats');
const captionBox = el<HTMLElement>('caption');
const coastNote = el<HTMLElement>('coast-note');
const exportCsv = el<HTMLButtonElement>('export-csv');
const exportGeojson = el<HTMLButtonElement>('export-geojson');
const overlayFile = el<HTMLInputElement>('overlay-file');

// Optional user-supplied shoreline (loaded locally; never uploaded).
let localLand: { name: string; coords: [number, number][] }[] | null = null;

function readControls(): void {
  const seedRaw = seedInput.value.trim();
  store.setControls({
    site: { lat: Number(latInput.value), lon: Number(lonInput.value) },
    requestedEpsilon: epsilonFromSlider(Number(epsSlider.value)),
    n: Math.trunc(Number(nInput.value)),
    seed: seedRaw === '' ? null : Number(seedRaw),
    showTrueSite: showSite.checked,
  });
}

function updateEpsilonReadout(eps: number): void {
  epsValue.textContent = `ε = ${formatEpsilon(eps)} per meter`;
  meanValue.textContent = `expected mean ${formatMeters(expectedMeanM(eps))}`;
}

let inflight: AbortController | null = null;

async function requestCloud(): Promise<void> {
  const s = store.get();
  const site = { ...s.site };
  inflight?.abort();
  const ctl = new AbortController();
  inflight = ctl;
  store.beginRequest();
  try {
    const envelope = await fetchCloud(
      BASE,
      {
        lat: site.lat,
        lon: site.lon,
        epsilon: s.requestedEpsilon,
        n: s.n,
        ...(s.seed !== null ? { seed: s.seed } : {}),
      },
      ctl.signal,
    );
    if (inflight !== ctl) return; // a newer request owns the screen now
    store.applyEnvelope(site, envelope);
  } catch (err) {
    if (inflight !== ctl) return;
    if (err instanceof DOMException && err.name === 'AbortError') {
      store.cancelRequest();
      return;
    }
    const msg =
      err instanceof ApiError
        ? `${err.code}: ${err.message}`
        : `service unreachable: ${String(err)}`;
    store.failRequest(msg);
  } finally {
    if (inflight === ctl) inflight = null;
  }
}

function landPatches(site: { lat: number; lon: number }): LandPatch[] {
  if (localLand) {
    return localLand.map((ring) => ({
      name: ring.name,
      ring: ring.coords.map(([lon, lat]) => toEastNorth(site, lon, lat)),
    }));
  }
  const region = regionFor(site);
  if (!region) return [];
  return region.rings.map((ring) => ({
    name: ring.name,
    ring: ring.coords.map(([lon, lat]) => toEastNorth(site, lon, lat)),
  }));
}

function statsRows(state: UiState): [string, string][] {
  const st = state.displayed!.envelope.stats;
  return [
    ['points', String(st.n)],
    ['mean distance', formatMeters(st.mean_m)],
    ['median distance', formatMeters(st.median_m)],
    ['expected mean (2/ε)', formatMeters(st.expected_mean_m)],
    ['angle χ² (36 bins)', st.angle_chi2.toFixed(2)],
    ['radius KS', st.radius_ks.toFixed(4)],
  ];
}

function render(state: UiState): void {
  generateBtn.disabled = state.pending;
  generateBtn.textContent = state.pending ? 'Generating…' : 'Generate cloud';
  const haveCloud = state.displayed !== null;
  exportCsv.disabled = !haveCloud;
  exportGeojson.disabled = !haveCloud;

  if (state.error) {
    errorBox.hidden = false;
    errorBox.textContent = state.error;
  } else {
    errorBox.hidden = true;
    errorBox.textContent = '';
  }

  if (!state.displayed) return;
  const { site, envelope } = state.displayed;
  const overlay = buildOverlay(site, envelope);
  const land = landPatches(site);
  mapBox.innerHTML = renderCloudSvg(overlay, land, 520, state.showTrueSite);
  histBox.innerHTML = renderHistogramSvg(
    binDistances(envelope.stats.distances_m, overlay.meanRadiusM),
    340,
    170,
  );
  statsBox.innerHTML = statsRows(state)
    .map(([k, v]) => `<div><dt>${k}</dt><dd>${v}</dd></div>`)
    .join('');
  captionBox.textContent = overlay.caption;
  if (localLand) {
    coastNote.textContent = 'shoreline: local file (approximate)';
  } else {
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
    const eps = epsilonFromLevelRadius(
      Number(levelInput.value),
      Number(radiusInput.value),
    );
    epsSlider.value = String(sliderFromEpsilon(eps));
    updateEpsilonReadout(epsilonFromSlider(Number(epsSlider.value)));
    readControls();
    void requestCloud();
  } catch (err) {
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
] as [HTMLButtonElement, ExportFormat][]) {
  btn.addEventListener('click', () => {
    const displayed = store.get().displayed;
    if (!displayed) return;
    downloadExport(BASE, displayed, fmt).catch((err) => {
      store.failRequest(
        err instanceof ApiError ? `${err.code}: ${err.message}` : String(err),
      );
    });
  });
}

for (const preset of document.querySelectorAll<HTMLButtonElement>('button[data-lat]')) {
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
    } catch (err) {
      store.failRequest(`could not read overlay: ${String(err)}`);
    }
  };
  reader.readAsText(file);
});

/** Pull outer polygon rings out of a GeoJSON document. */
function extractRings(doc: unknown): { name: string; coords: [number, number][] }[] {
  const rings: { name: string; coords: [number, number][] }[] = [];
  const visit = (geom: { type?: string; coordinates?: unknown }, name: string) => {
    if (geom.type === 'Polygon') {
      const outer = (geom.coordinates as [number, number][][])[0];
      rings.push({ name, coords: outer });
    } else if (geom.type === 'MultiPolygon') {
      for (const poly of geom.coordinates as [number, number][][][]) {
        rings.push({ name, coords: poly[0] });
      }
    }
  };
  const d = doc as Record<string, unknown>;
  if (d.type === 'FeatureCollection') {
    for (const f of d.features as { geometry: never; properties?: { name?: string } }[]) {
      visit(f.geometry, f.properties?.name ?? 'local shoreline');
    }
  } else if (d.type === 'Feature') {
    visit(d.geometry as never, 'local shoreline');
  } else {
    visit(d as never, 'local shoreline');
  }
  if (rings.length === 0) throw new Error('no polygons found');
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
