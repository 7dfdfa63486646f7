// Bundled, deliberately coarse coastline sketches for the two demo
// sites, so the map gives land/sea context without any tile server or
// network fetch. These are hand-traced approximations — good enough to
// orient the viewer, nowhere near survey quality, and labeled as such
// in the UI.

export interface CoastRegion {
  name: string;
  /** site the sketch is drawn around */
  center: { lat: number; lon: number };
  /** how far from center (meters) the sketch is still worth drawing */
  usableRadiusM: number;
  /** rings of [lon, lat] pairs; drawn closed */
  rings: { name: string; coords: [number, number][] }[];
}

// Atlantic coast near Ron's Reef: the shoreline runs roughly N-S around
// lon -80.035; land (the Florida barrier strip) lies to the west, open
// water to the east where the reef sits.
const RONS_REEF: CoastRegion = {
  name: 'approximate Florida shoreline',
  center: { lat: 26.689, lon: -80.018 },
  usableRadiusM: 12000,
  rings: [
    {
      name: 'shore (approximate)',
      coords: [
        [-80.034, 26.589],
        [-80.0345, 26.62],
        [-80.036, 26.65],
        [-80.0355, 26.68],
        [-80.034, 26.7],
        [-80.0335, 26.73],
        [-80.035, 26.76],
        [-80.0365, 26.789],
        [-80.12, 26.789],
        [-80.12, 26.589],
      ],
    },
  ],
};

// Strait of Malacca near Padang Kemunting: the coast trends NW-SE with
// land to the northeast of the site and the strait to the southwest.
const PADANG_KEMUNTING: CoastRegion = {
  name: 'approximate Malacca shoreline',
  center: { lat: 2.3161, lon: 102.0704 },
  usableRadiusM: 12000,
  rings: [
    {
      name: 'shore (approximate)',
      coords: [
        [101.99, 2.375],
        [102.02, 2.36],
        [102.05, 2.345],
        [102.0704, 2.3261],
        [102.09, 2.312],
        [102.12, 2.295],
        [102.15, 2.275],
        [102.18, 2.26],
        [102.2, 2.42],
        [101.99, 2.42],
      ],
    },
  ],
};

export const REGIONS: CoastRegion[] = [RONS_REEF, PADANG_KEMUNTING];

function haversineM(a: { lat: number; lon: number }, b: { lat: number; lon: number }): number {
  const R = 6371000;
  const toRad = Math.PI / 180;
  const dLat = (b.lat - a.lat) * toRad;
  const dLon = (b.lon - a.lon) * toRad;
  const s =
    Math.sin(dLat / 2) ** 2 +
    Math.cos(a.lat * toRad) * Math.cos(b.lat * toRad) * Math.sin(dLon / 2) ** 2;
  return 2 * R * Math.asin(Math.min(1, Math.sqrt(s)));
}

/**
 * Pick the bundled sketch that covers the given site, or null when the
 * site is outside every sketch (the map then shows plain sea).
 */
export function regionFor(site: { lat: number; lon: number }): CoastRegion | null {
  let best: CoastRegion | null = null;
  let bestD = Infinity;
  for (const region of REGIONS) {
    const d = haversineM(site, region.center);
    if (d <= region.usableRadiusM && d < bestD) {
      best = region;
      bestD = d;
    }
  }
  return best;
}
