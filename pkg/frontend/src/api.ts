/**
 * Typed client for the review-service HTTP API. Every number shown in the
 * UI comes out of these responses untouched; the client never computes.
 */

export interface SessionInfo {
  session_id: string;
  slices: number;
}

export interface SegmentParams {
  c: number;
  m: number;
  epsilon: number;
  max_iter: number;
  seed: number;
}

export const DEFAULT_PARAMS: SegmentParams = {
  c: 5,
  m: 2.0,
  epsilon: 1e-5,
  max_iter: 100,
  seed: 0,
};

export interface SegmentResponse {
  candidates: string[];
  centroids: number[];
  iterations: number;
  converged: boolean;
}

export interface AreaHit {
  area: number;
  name: string;
  pixels: number;
  fraction: number;
}

export interface SelectResponse {
  left: AreaHit[];
  right: AreaHit[];
}

/** Error body shape the service uses for every failure. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ReviewApi {
  constructor(
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
    private readonly base: string = "",
  ) {}

  async createSession(volume: ArrayBuffer | Uint8Array): Promise<SessionInfo> {
    const resp = await this.fetchFn(`${this.base}/api/v1/sessions`, {
      method: "POST",
      headers: { "content-type": "application/octet-stream" },
      body: volume instanceof Uint8Array ? volume.slice() : new Uint8Array(volume),
    });
    return this.decode<SessionInfo>(resp);
  }

  sliceUrl(sessionId: string, index: number): string {
    return `${this.base}/api/v1/sessions/${sessionId}/slices/${index}.png`;
  }

  async segment(
    sessionId: string,
    index: number,
    params: SegmentParams,
  ): Promise<SegmentResponse> {
    const resp = await this.fetchFn(
      `${this.base}/api/v1/sessions/${sessionId}/slices/${index}/segment`,
      {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(params),
      },
    );
    return this.decode<SegmentResponse>(resp);
  }

  async select(
    sessionId: string,
    index: number,
    k: number,
  ): Promise<SelectResponse> {
    const resp = await this.fetchFn(
      `${this.base}/api/v1/sessions/${sessionId}/slices/${index}/select`,
      {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ k }),
      },
    );
    return this.decode<SelectResponse>(resp);
  }

  private async decode<T>(resp: Response): Promise<T> {
    if (resp.ok) {
      return (await resp.json()) as T;
    }
    let code = "Error";
    let message = `HTTP ${resp.status}`;
    try {
      const body = (await resp.json()) as { code?: string; message?: string };
      if (body.code) code = body.code;
      if (body.message) message = body.message;
    } catch {
      // non-JSON error body; keep the generic message
    }
    throw new ApiError(resp.status, code, message);
  }
}
