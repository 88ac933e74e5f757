/** Typed client for the pseudospline JSON service.
 *
 * The explorer never computes anything numeric itself; every value shown in
 * the UI comes from these documents. Rationals arrive as "p/q" strings and
 * are displayed verbatim, floats are used only for plotting scales.
 */

export interface LaurentDoc {
  offset: number;
  coeffs: string[];
}

export interface SchemeSpecDoc {
  family: string;
  m: number;
  n: number | null;
  l: number | null;
  tau: string;
  a: LaurentDoc;
  b: LaurentDoc;
  r: number;
  omega?: string;
}

export interface RegularityDoc {
  r: number;
  char_poly: string[];
  rho: { lo: string; hi: string; exact: string | null };
  regularity: number | null;
  exact: boolean;
  positivity: string;
}

export interface SchemeDocument {
  spec: SchemeSpecDoc;
  regularity: RegularityDoc;
  display: string;
  tau_float: number;
  support: [string, string];
  support_float: [number, number];
  mask_float: number[];
  mask_offset: number;
  b_float: number[];
  b_offset: number;
  folded: string[][] | null;
}

export interface SampleDocument {
  level: number;
  points: [number, number][];
  points_exact: [string, string][];
  support: [number, number];
  support_exact: [string, string];
}

export interface SweepDocument {
  m: number;
  steps: number;
  omega_exact: string[];
  rows: [number, number | null, number | null][];
}

/** Shape of fetch the client needs; injectable so tests stay offline. */
export type FetchLike = (url: string) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export class ServiceError extends Error {}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  health(): Promise<{ ok: boolean }> {
    return this.get("/api/health", {});
  }

  scheme(params: Record<string, string>): Promise<SchemeDocument> {
    return this.get("/api/scheme", params);
  }

  sample(params: Record<string, string>): Promise<SampleDocument> {
    return this.get("/api/sample", params);
  }

  sweep(params: Record<string, string>): Promise<SweepDocument> {
    return this.get("/api/sweep", params);
  }

  private async get<T>(path: string, params: Record<string, string>): Promise<T> {
    const query = new URLSearchParams(params).toString();
    const url = this.baseUrl + path + (query ? `?${query}` : "");
    const response = await this.fetchFn(url);
    const body = (await response.json()) as { error?: string };
    if (!response.ok) {
      throw new ServiceError(body.error ?? `service returned ${response.status}`);
    }
    return body as T;
  }
}
