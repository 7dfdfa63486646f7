// Local tangent-plane projection: lon/lat to meters east/north of the
// site, then meters to SVG pixels. Equirectangular about the center is
// plenty at noise scale (hundreds of meters to a few km).
export const EARTH_RADIUS_M = 6371000;
const DEG = Math.PI / 180;
export function toEastNorth(center, lon, lat) {
    // wrap the lon difference so clouds straddling the antimeridian stay
    // together
    const dlon = ((lon - center.lon + 540) % 360) - 180;
    return {
        east: dlon * DEG * EARTH_RADIUS_M * Math.cos(center.lat * DEG),
        north: (lat - center.lat) * DEG * EARTH_RADIUS_M,
    };
}
/** Pick a view span that keeps the bulk of a cloud on screen: at least
 * 3x the analytic mean distance, stretched if samples run wider. */
export function fitViewport(size, expectedMeanM, maxDistanceM) {
    const halfSpanM = Math.max(3 * expectedMeanM, 1.05 * maxDistanceM, 1);
    return { size, halfSpanM };
}
export function metersPerPixel(vp) {
    return (2 * vp.halfSpanM) / vp.size;
}
export function toPixels(vp, p) {
    const scale = vp.size / (2 * vp.halfSpanM);
    return {
        x: vp.size / 2 + p.east * scale,
        y: vp.size / 2 - p.north * scale, // SVG y grows downward
    };
}
