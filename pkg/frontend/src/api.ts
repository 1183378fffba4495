// Thin fetch client over the session service. Validation errors (422) are
// surfaced as ApiError with the service's field paths intact.

import type { StatePayload, TerrainPayload, ValidationProblem } from "./types.js";

export class ApiError extends Error {
  status: number;
  problems: ValidationProblem[];

  constructor(status: number, problems: ValidationProblem[], message?: string) {
    super(message ?? problems.map((p) => `${p.field}: ${p.msg}`).join("; "));
    this.status = status;
    this.problems = problems;
  }
}

function asProblems(detail: unknown): ValidationProblem[] {
  if (Array.isArray(detail)) {
    return detail.map((d) => ({
      field: String((d as Record<string, unknown>).field ?? "body"),
      msg: String((d as Record<string, unknown>).msg ?? "invalid"),
    }));
  }
  return [{ field: "body", msg: String(detail) }];
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!resp.ok) {
    let detail: unknown = resp.statusText;
    try {
      detail = (await resp.json()).detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(resp.status, asProblems(detail));
  }
  return (await resp.json()) as T;
}

export class StudioApi {
  base: string;

  constructor(base = "") {
    this.base = base.replace(/\/$/, "");
  }

  sessionUrl(sessionId: string, suffix = ""): string {
    return `${this.base}/sessions/${sessionId}${suffix}`;
  }

  createSession(config?: unknown): Promise<{ session_id: string; agents: number }> {
    return request(`${this.base}/sessions`, {
      method: "POST",
      body: JSON.stringify(config ? { config } : {}),
    });
  }

  state(sessionId: string): Promise<StatePayload> {
    return request(this.sessionUrl(sessionId, "/state"));
  }

  terrain(sessionId: string, resolution = 48): Promise<TerrainPayload> {
    return request(this.sessionUrl(sessionId, `/terrain?resolution=${resolution}`));
  }

  run(sessionId: string, steps: number): Promise<StatePayload> {
    return request(this.sessionUrl(sessionId, "/run"), {
      method: "POST",
      body: JSON.stringify({ steps }),
    });
  }

  sendStroke(
    sessionId: string,
    points: [number, number][],
    durationS: number,
    weight: number,
    zOffset: number,
  ): Promise<{ track_index: number; revision: number; queued: boolean }> {
    return request(this.sessionUrl(sessionId, "/strokes"), {
      method: "POST",
      body: JSON.stringify({
        points,
        duration_s: durationS,
        weight,
        z_offset: zOffset,
      }),
    });
  }

  patchParams(sessionId: string, patch: Record<string, number>): Promise<{ revision: number }> {
    return request(this.sessionUrl(sessionId, "/params"), {
      method: "PATCH",
      body: JSON.stringify(patch),
    });
  }

  exportScene(
    sessionId: string,
    kind: "trails" | "scene",
    radius: number,
    sides: number,
  ): Promise<{ paths: string[] }> {
    return request(this.sessionUrl(sessionId, "/export"), {
      method: "POST",
      body: JSON.stringify({ kind, radius, sides }),
    });
  }

  streamUrl(sessionId: string): string {
    return this.sessionUrl(sessionId, "/stream");
  }
}
