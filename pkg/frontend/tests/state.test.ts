import { describe, expect, it } from 'vitest';

import { Store, initialState } from '../src/state.js';
import { fakeEnvelope } from './helpers.js';

const SITE = { lat: 26.689, lon: -80.018 };

describe('Store', () => {
  it('applies a response atomically: stats, echo, and cloud arrive together', () => {
    const store = new Store(initialState());
    const env = fakeEnvelope({ epsilon: 0.05, seed: 7, n: 12 });
    store.beginRequest();
    store.applyEnvelope(SITE, env);
    const s = store.get();
    expect(s.pending).toBe(false);
    expect(s.displayed).not.toBeNull();
    // the displayed block is the single envelope object — stats cannot
    // belong to a different cloud than the features shown
    expect(s.displayed!.envelope).toBe(env);
    expect(s.displayed!.envelope.stats.n).toBe(env.cloud.features.length);
  });

  it('keeps the previous cloud when a request fails', () => {
    const store = new Store(initialState());
    const env = fakeEnvelope({ seed: 7 });
    store.applyEnvelope(SITE, env);
    store.beginRequest();
    store.failRequest('service unreachable');
    const s = store.get();
    expect(s.error).toBe('service unreachable');
    expect(s.displayed!.envelope).toBe(env); // untouched
    expect(s.pending).toBe(false);
  });

  it('clears the error once a later request succeeds', () => {
    const store = new Store(initialState());
    store.failRequest('boom');
    store.beginRequest();
    expect(store.get().error).toBeNull();
    store.applyEnvelope(SITE, fakeEnvelope({}));
    expect(store.get().error).toBeNull();
  });

  it('control edits never disturb the displayed cloud', () => {
    const store = new Store(initialState());
    const env = fakeEnvelope({ epsilon: 0.1, seed: 7 });
    store.applyEnvelope(SITE, env);
    store.setControls({ requestedEpsilon: 0.001, n: 9999, seed: 123 });
    const s = store.get();
    expect(s.displayed!.envelope.epsilon).toBe(0.1);
    expect(s.displayed!.envelope.seed).toBe(7);
    expect(s.displayed!.site).toEqual(SITE);
  });

  it('a superseded request leaves the screen alone', () => {
    const store = new Store(initialState());
    const env = fakeEnvelope({});
    store.applyEnvelope(SITE, env);
    store.beginRequest();
    store.cancelRequest();
    const s = store.get();
    expect(s.pending).toBe(false);
    expect(s.error).toBeNull();
    expect(s.displayed!.envelope).toBe(env);
  });

  it('notifies subscribers on every transition', () => {
    const store = new Store(initialState());
    const seen: boolean[] = [];
    store.subscribe((s) => seen.push(s.pending));
    store.beginRequest();
    store.applyEnvelope(SITE, fakeEnvelope({}));
    expect(seen).toEqual([true, false]);
  });
});
