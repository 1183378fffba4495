import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, StudioApi } from "../src/api.js";
import { MetricSeries } from "../src/metrics.js";

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("StudioApi", () => {
  it("builds session URLs against the base", () => {
    const api = new StudioApi("http://host:1234/");
    expect(api.sessionUrl("abc", "/state")).toBe("http://host:1234/sessions/abc/state");
    expect(api.streamUrl("abc")).toBe("http://host:1234/sessions/abc/stream");
  });

  it("posts strokes with the service's field names", async () => {
    const calls: { url: string; body: unknown }[] = [];
    vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
      calls.push({ url, body: JSON.parse(String(init?.body)) });
      return jsonResponse(200, { track_index: 0, revision: 1, queued: false });
    });
    const api = new StudioApi("");
    const out = await api.sendStroke("sid", [[1, 2], [3, 4]], 5.0, 1.0, 3.0);
    expect(out.track_index).toBe(0);
    expect(calls[0].url).toBe("/sessions/sid/strokes");
    expect(calls[0].body).toEqual({
      points: [[1, 2], [3, 4]],
      duration_s: 5.0,
      weight: 1.0,
      z_offset: 3.0,
    });
  });

  it("surfaces 422 validation problems with field paths", async () => {
    vi.stubGlobal("fetch", async () =>
      jsonResponse(422, { detail: [{ field: "params.v_max", msg: "must be > 0" }] }),
    );
    const api = new StudioApi("");
    const err = await api.patchParams("sid", { v_max: -1 }).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(422);
    expect((err as ApiError).problems[0].field).toBe("params.v_max");
  });

  it("maps non-JSON failures to a generic problem", async () => {
    vi.stubGlobal("fetch", async () => new Response("boom", { status: 500 }));
    const api = new StudioApi("");
    const err = await api.state("sid").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(500);
  });
});

describe("MetricSeries", () => {
  it("is append-only and keyed by step", () => {
    const s = new MetricSeries();
    expect(s.append(0, 0.1)).toBe(true);
    expect(s.append(5, 0.4)).toBe(true);
    expect(s.append(5, 0.9)).toBe(false); // duplicate step ignored
    expect(s.append(3, 0.2)).toBe(false); // out-of-order ignored
    expect(s.length).toBe(2);
    expect(s.latest()).toBe(0.4);
  });
});
