/**
 * Typed client for the ag43 analysis service.
 *
 * The UI never computes geometry itself; every displayed count or
 * predicate comes from one of these endpoints. The fetch function is
 * injectable so tests can intercept requests.
 */

export interface AnalysisResponse {
  points: number[];
  is_cap: boolean;
  is_complete: boolean;
  is_maximal_cap: boolean;
  anchor: number | null;
  is_demicap: boolean;
  demicap_anchor: number | null;
  completion_counts: Record<string, number>;
  violations: number[][];
}

export interface DecompositionPair {
  half_a: number[];
  half_b: number[];
  image_cap: number[];
}

export interface DecompositionsResponse {
  cap: number[];
  anchor: number;
  pairs: DecompositionPair[];
}

export interface PartitionResponse {
  anchor: number;
  blocks: number[][];
  s1: number[];
  s2: number[];
  m1_decomposition: { half_a: number[]; half_b: number[] };
  m2_decomposition: { half_a: number[]; half_b: number[] };
}

export interface Grid36Response {
  base: number[];
  anchor: number;
  rows: number[][];
  cols: number[][];
  caps: number[][][];
}

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      let detail = `${resp.status}`;
      try {
        const payload = await resp.json();
        if (payload && typeof payload.detail === "string") {
          detail = payload.detail;
        }
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ServiceError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  analyze(points: number[]): Promise<AnalysisResponse> {
    return this.post("/analyze", { points });
  }

  decompositions(cap: number[]): Promise<DecompositionsResponse> {
    return this.post("/decompositions", { cap });
  }

  partition(
    cap: number[],
    halfA: number[],
    halfB: number[],
  ): Promise<PartitionResponse> {
    return this.post("/partition", { cap, half_a: halfA, half_b: halfB });
  }

  grid36(cap: number[]): Promise<Grid36Response> {
    return this.post("/grid36", { cap });
  }
}
