/**
 * View state with stale-fetch protection.
 *
 * Every state change bumps a generation counter and aborts the previous
 * generation's in-flight requests, so a slow response for an abandoned
 * selection can never overwrite the current view.
 */

import type { OntologyFilter, SpectrumMode } from "./types.js";

export interface ViewState {
  topicId: number | null;
  level: number;
  spectrumMode: SpectrumMode;
  ontologyFilter: OntologyFilter;
  showMap: boolean;
}

export class StateStore {
  private state: ViewState = {
    topicId: null,
    level: 0,
    spectrumMode: { kind: "title" },
    ontologyFilter: { kind: "none" },
    showMap: false,
  };
  private generation = 0;
  private controller: AbortController | null = null;
  private listeners: Array<(s: ViewState, signal: AbortSignal) => void> = [];

  get current(): ViewState {
    return { ...this.state };
  }

  get currentGeneration(): number {
    return this.generation;
  }

  subscribe(listener: (s: ViewState, signal: AbortSignal) => void): void {
    this.listeners.push(listener);
  }

  update(patch: Partial<ViewState>): AbortSignal {
    // a new selection invalidates whatever the old one was still loading
    if (this.controller) this.controller.abort();
    this.controller = new AbortController();
    this.generation += 1;
    this.state = { ...this.state, ...patch };
    // changing topic resets the drill-down filters
    if ("topicId" in patch) {
      this.state.ontologyFilter = { kind: "none" };
      if (this.state.spectrumMode.kind === "entity") {
        this.state.spectrumMode = { kind: "title" };
      }
    }
    const signal = this.controller.signal;
    for (const listener of this.listeners) listener(this.current, signal);
    return signal;
  }
}
