// Single source of truth for what the page is showing.
//
// The invariant that matters: the stats panel, the caption, and the
// export link always describe the cloud that is on screen. That holds
// because a response is applied in one atomic step — the envelope
// carries the echoed epsilon/seed/n alongside the features and stats,
// and we never mix fields from different responses. A failed request
// leaves the previous cloud untouched.

import type { CloudEnvelope } from './api.js';

export interface SiteInput {
  lat: number;
  lon: number;
}

export interface DisplayedCloud {
  site: SiteInput;
  envelope: CloudEnvelope;
}

export interface UiState {
  site: SiteInput;
  /** epsilon currently selected in the controls (may differ from displayed) */
  requestedEpsilon: number;
  n: number;
  seed: number | null;
  showTrueSite: boolean;
  displayed: DisplayedCloud | null;
  pending: boolean;
  error: string | null;
}

export type Listener = (state: UiState) => void;

export class Store {
  private state: UiState;
  private listeners: Listener[] = [];

  constructor(initial: UiState) {
    this.state = initial;
  }

  get(): UiState {
    return this.state;
  }

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  setControls(patch: Partial<Pick<UiState, 'site' | 'requestedEpsilon' | 'n' | 'seed' | 'showTrueSite'>>): void {
    this.state = { ...this.state, ...patch };
    this.emit();
  }

  beginRequest(): void {
    this.state = { ...this.state, pending: true, error: null };
    this.emit();
  }

  /**
   * Apply a successful response. The site is captured with the envelope
   * so later control edits cannot re-center a stale cloud.
   */
  applyEnvelope(site: SiteInput, envelope: CloudEnvelope): void {
    this.state = {
      ...this.state,
      pending: false,
      error: null,
      displayed: { site, envelope },
    };
    this.emit();
  }

  /** Record a failure; the displayed cloud (if any) stays as it was. */
  failRequest(message: string): void {
    this.state = { ...this.state, pending: false, error: message };
    this.emit();
  }

  /** A newer request superseded this one; nothing on screen changes. */
  cancelRequest(): void {
    this.state = { ...this.state, pending: false };
    this.emit();
  }
}

export function initialState(): UiState {
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
