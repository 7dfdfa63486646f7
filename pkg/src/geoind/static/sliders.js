// Epsilon slider math. The slider is logarithmic over [0.001, 0.5] so
// every decade of the privacy/utility tradeoff gets equal travel.
export const EPS_MIN = 0.001;
export const EPS_MAX = 0.5;
export const SLIDER_STEPS = 1000;
/** Canonical epsilons (the nine-row report ladder); the slider snaps to
 * these so round values like 0.1 and 0.05 are exactly reachable. */
export const LADDER = [0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5];
const LOG_SPAN = Math.log(EPS_MAX / EPS_MIN);
/** Snap to a ladder value when within one slider tick of it (in log
 * space), so integer slider positions can express exact round numbers. */
export function snapEpsilon(eps) {
    const tick = LOG_SPAN / SLIDER_STEPS;
    for (const v of LADDER) {
        if (Math.abs(Math.log(eps / v)) <= tick)
            return v;
    }
    return eps;
}
export function epsilonFromSlider(t) {
    const clamped = Math.min(Math.max(t, 0), SLIDER_STEPS);
    return snapEpsilon(EPS_MIN * Math.exp((clamped / SLIDER_STEPS) * LOG_SPAN));
}
export function sliderFromEpsilon(eps) {
    const clamped = Math.min(Math.max(eps, EPS_MIN), EPS_MAX);
    return Math.round((Math.log(clamped / EPS_MIN) / LOG_SPAN) * SLIDER_STEPS);
}
/** Mean displacement of the mechanism at this epsilon, in meters. */
export function expectedMeanM(eps) {
    return 2 / eps;
}
/** epsilon from the "level l within r meters" pair. */
export function epsilonFromLevelRadius(level, radius) {
    if (!(level > 0) || !(radius > 0)) {
        throw new RangeError('level and radius must be positive');
    }
    return level / radius;
}
export function formatEpsilon(eps) {
    return eps.toPrecision(3).replace(/\.?0+$/, '');
}
export function formatMeters(m) {
    if (m >= 100)
        return `${Math.round(m)} m`;
    return `${m.toPrecision(3)} m`;
}
