/**
 * Board state store: selection, last analysis, exploration mode, and
 * the request plumbing (debounced analyze, latest response wins).
 * Pure data plus an injected ApiClient; no DOM access here.
 */

import {
  AnalysisResponse,
  ApiClient,
  DecompositionsResponse,
  Grid36Response,
  PartitionResponse,
} from "./api.js";

export type Mode = "build" | "decompose" | "partition" | "grid36";

export interface BoardState {
  selected: Set<number>;
  analysis: AnalysisResponse | null;
  /** true while a request for the current selection is in flight */
  stale: boolean;
  /** set when the last request failed; cleared by the next success */
  error: string | null;
  mode: Mode;
  decompositions: DecompositionsResponse | null;
  activeDecomposition: number | null;
  partition: PartitionResponse | null;
  grid: Grid36Response | null;
}

export function emptyState(): BoardState {
  return {
    selected: new Set(),
    analysis: null,
    stale: false,
    error: null,
    mode: "build",
    decompositions: null,
    activeDecomposition: null,
    partition: null,
    grid: null,
  };
}

export type Scheduler = (fn: () => void, ms: number) => () => void;

const defaultScheduler: Scheduler = (fn, ms) => {
  const id = setTimeout(fn, ms);
  return () => clearTimeout(id);
};

export const ANALYZE_DEBOUNCE_MS = 100;

export class BoardStore {
  state: BoardState = emptyState();

  private listeners: Array<(s: BoardState) => void> = [];
  private cancelPending: (() => void) | null = null;
  private requestSeq = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly schedule: Scheduler = defaultScheduler,
  ) {}

  subscribe(listener: (s: BoardState) => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Flip one point and schedule a re-analyze (debounced). */
  togglePoint(point: number): void {
    const selected = new Set(this.state.selected);
    if (selected.has(point)) {
      selected.delete(point);
    } else {
      selected.add(point);
    }
    this.setSelection(selected);
  }

  /** Replace the whole selection, e.g. from a URL fragment or a grid cell. */
  setSelection(selected: Set<number>): void {
    this.state = {
      ...this.state,
      selected,
      stale: true,
      // derived views belong to the old selection
      decompositions: null,
      activeDecomposition: null,
      partition: null,
      grid: null,
    };
    this.emit();
    if (this.cancelPending) {
      this.cancelPending();
    }
    this.cancelPending = this.schedule(() => {
      this.cancelPending = null;
      void this.runAnalyze();
    }, ANALYZE_DEBOUNCE_MS);
  }

  setMode(mode: Mode): void {
    this.state = { ...this.state, mode };
    this.emit();
  }

  private async runAnalyze(): Promise<void> {
    const seq = ++this.requestSeq;
    const points = [...this.state.selected].sort((a, b) => a - b);
    try {
      const analysis = await this.api.analyze(points);
      if (seq !== this.requestSeq) {
        return; // a newer request is in flight; latest wins
      }
      this.state = { ...this.state, analysis, stale: false, error: null };
    } catch (err) {
      if (seq !== this.requestSeq) {
        return;
      }
      this.state = {
        ...this.state,
        stale: true,
        error: err instanceof Error ? err.message : String(err),
      };
    }
    this.emit();
  }

  /** Preconditions for the exploration views. */
  canExplore(): boolean {
    return this.state.analysis?.is_maximal_cap === true && !this.state.stale;
  }

  async loadDecompositions(): Promise<void> {
    if (!this.canExplore() || !this.state.analysis) {
      throw new Error("select a maximal cap first");
    }
    const decompositions = await this.api.decompositions(
      this.state.analysis.points,
    );
    this.state = { ...this.state, mode: "decompose", decompositions };
    this.emit();
  }

  selectDecomposition(index: number): void {
    const decs = this.state.decompositions;
    if (!decs || index < 0 || index >= decs.pairs.length) {
      throw new Error(`no decomposition ${index}`);
    }
    this.state = { ...this.state, activeDecomposition: index };
    this.emit();
  }

  async buildPartition(): Promise<void> {
    const decs = this.state.decompositions;
    const index = this.state.activeDecomposition;
    if (!decs || index === null) {
      throw new Error("choose a decomposition first");
    }
    const pair = decs.pairs[index];
    const partition = await this.api.partition(
      decs.cap,
      pair.half_a,
      pair.half_b,
    );
    this.state = { ...this.state, mode: "partition", partition };
    this.emit();
  }

  async loadGrid36(): Promise<void> {
    if (!this.canExplore() || !this.state.analysis) {
      throw new Error("select a maximal cap first");
    }
    const grid = await this.api.grid36(this.state.analysis.points);
    this.state = { ...this.state, mode: "grid36", grid };
    this.emit();
  }
}
