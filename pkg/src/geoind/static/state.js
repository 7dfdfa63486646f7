// Single source of truth for what the page is showing.
//
// The invariant that matters: the stats panel, the caption, and the
// export link always describe the cloud that is on screen. That holds
// because a response is applied in one atomic step — the envelope
// carries the echoed epsilon/seed/n alongside the features and stats,
// and we never mix fields from different responses. A failed request
// leaves the previous cloud untouched.
export class Store {
    constructor(initial) {
        this.listeners = [];
        this.state = initial;
    }
    get() {
        return this.state;
    }
    subscribe(fn) {
        this.listeners.push(fn);
    }
    emit() {
        for (const fn of this.listeners)
            fn(this.state);
    }
    setControls(patch) {
        this.state = { ...this.state, ...patch };
        this.emit();
    }
    beginRequest() {
        this.state = { ...this.state, pending: true, error: null };
        this.emit();
    }
    /**
     * Apply a successful response. The site is captured with the envelope
     * so later control edits cannot re-center a stale cloud.
     */
    applyEnvelope(site, envelope) {
        this.state = {
            ...this.state,
            pending: false,
            error: null,
            displayed: { site, envelope },
        };
        this.emit();
    }
    /** Record a failure; the displayed cloud (if any) stays as it was. */
    failRequest(message) {
        this.state = { ...this.state, pending: false, error: message };
        this.emit();
    }
    /** A newer request superseded this one; nothing on screen changes. */
    cancelRequest() {
        this.state = { ...this.state, pending: false };
        this.emit();
    }
}
export function initialState() {
    return {
        site: { lat: 26.689, lon: -80.018 },
        requestedEpsilon: 0.1,
        n: 200,
        seed: 7,
        showTrueSite: true,
        displayed: null,
        pending: false,
        error: null,
    };
}
