/**
 * Typed client for the diagnose service.
 *
 * The shapes here mirror the server's JSON payloads field for field; the UI
 * never computes masses itself, it only renders what these calls return.
 */

export interface KbSymptom {
  name: string;
  supports: string[];
  bpa: number[];
}

export interface KbPayload {
  frame: string[];
  conditions: string[];
  symptoms: KbSymptom[];
}

export interface TraceStep {
  symptom: string;
  conflict: number;
  /** focal-set masses keyed by comma-joined sorted disease labels */
  masses: Record<string, number>;
}

export interface DiseaseRow {
  mass: number;
  bel: number;
  pl: number;
}

export interface DiagnoseRequest {
  condition: string;
  symptoms: string[];
  trace: boolean;
}

export interface DiagnoseResponse {
  steps?: TraceStep[];
  final: Record<string, number>;
  /** per-disease singleton mass and [bel, pl], keyed by label, in rank order */
  diseases: Record<string, DiseaseRow>;
  ranking: string[];
}

/** A non-2xx reply; `message` carries the server's error text when present. */
export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function errorFrom(response: Response): Promise<ApiError> {
  let message = `request failed with status ${response.status}`;
  try {
    const body = (await response.json()) as { error?: unknown };
    if (typeof body.error === "string" && body.error) message = body.error;
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ApiError(message, response.status);
}

export async function fetchKb(base: string, fetcher: FetchLike = fetch): Promise<KbPayload> {
  const response = await fetcher(`${base}/api/kb`);
  if (!response.ok) throw await errorFrom(response);
  return (await response.json()) as KbPayload;
}

export async function diagnose(
  base: string,
  request: DiagnoseRequest,
  fetcher: FetchLike = fetch,
): Promise<DiagnoseResponse> {
  const response = await fetcher(`${base}/api/diagnose`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(request),
  });
  if (!response.ok) throw await errorFrom(response);
  return (await response.json()) as DiagnoseResponse;
}

/**
 * Latest-wins request coalescer.
 *
 * At most one diagnose request is logically current. While one is in flight,
 * newer selections overwrite the single queued slot, so a burst of rapid
 * toggles settles with one trailing request for the latest selection.
 * Responses to superseded requests are dropped, never rendered.
 */
export class DiagnoseCoalescer {
  private inFlight = false;
  private queued: DiagnoseRequest | null = null;
  /** bumped whenever the current request is superseded or cancelled */
  private stamp = 0;

  constructor(
    private readonly send: (request: DiagnoseRequest) => Promise<DiagnoseResponse>,
    private readonly onResult: (request: DiagnoseRequest, response: DiagnoseResponse) => void,
    private readonly onError: (request: DiagnoseRequest, error: Error) => void,
  ) {}

  /** Make `request` the current one; supersedes anything queued or in flight. */
  request(request: DiagnoseRequest): void {
    this.stamp++;
    if (this.inFlight) {
      this.queued = request;
      return;
    }
    void this.run(request);
  }

  /** Drop the queued request and ignore any response still in flight. */
  cancel(): void {
    this.stamp++;
    this.queued = null;
  }

  private async run(first: DiagnoseRequest): Promise<void> {
    this.inFlight = true;
    try {
      await this.attempt(first);
      while (this.queued) {
        const next = this.queued;
        this.queued = null;
        await this.attempt(next);
      }
    } finally {
      this.inFlight = false;
    }
  }

  private async attempt(request: DiagnoseRequest): Promise<void> {
    const stamp = this.stamp;
    try {
      const response = await this.send(request);
      if (this.stamp === stamp) this.onResult(request, response);
    } catch (error) {
      if (this.stamp === stamp) {
        this.onError(request, error instanceof Error ? error : new Error(String(error)));
      }
    }
  }
}
