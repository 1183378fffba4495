// Live round-trip against the real session service: a captured stroke must
// come back as an attractor track in the next state frame, and the event
// stream must sustain at least 10 state frames per second with 200 agents.
// Skipped when the python package is not importable in this environment.

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { StudioApi } from "../src/api.js";
import { finalizeStroke } from "../src/stroke.js";
import type { StatePayload } from "../src/types.js";

const PYTHON = process.env.WINDFORM_PYTHON ?? "python3";

function pythonHasWindform(): boolean {
  const probe = spawnSync(PYTHON, ["-c", "import windform, uvicorn"], { timeout: 30000 });
  return probe.status === 0;
}

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const srv = createServer();
    srv.listen(0, "127.0.0.1", () => {
      const address = srv.address();
      if (address && typeof address === "object") {
        const port = address.port;
        srv.close(() => resolve(port));
      } else {
        reject(new Error("no port"));
      }
    });
  });
}

const available = pythonHasWindform();

describe.skipIf(!available)("live service round trip", () => {
  let child: ChildProcess | null = null;
  let base = "";
  let api: StudioApi;

  beforeAll(async () => {
    const dir = mkdtempSync(join(tmpdir(), "windform-studio-"));
    const setup = spawnSync(
      PYTHON,
      [
        "-c",
        [
          "import sys, json",
          "from pathlib import Path",
          "from windform import synth",
          "base = Path(sys.argv[1])",
          "(base / 'terrain.obj').write_text(synth.terrain_to_obj(synth.rolling_terrain(width=100, height=100, amplitude=3)))",
          "(base / 'stations.csv').write_text('Station,UTMX,UTMY,Direction,Speed\\nA,10,10,45,3\\nB,90,15,90,9\\nC,50,85,180,6\\n')",
          "cfg = {'name': 'studio', 'terrain': 'terrain.obj', 'stations': 'stations.csv',",
          "       'grid': {'ncols': 16, 'nrows': 16, 'pad': 0.0}, 'output_dir': str(base / 'out'),",
          "       'swarm': {'n': 200, 'seed': 3, 'spawn_region': [0.35, 0.35, 0.65, 0.65], 'steps': 10}}",
          "(base / 'project.json').write_text(json.dumps(cfg))",
        ].join("\n"),
        dir,
      ],
      { timeout: 60000 },
    );
    expect(setup.status).toBe(0);

    const port = await freePort();
    base = `http://127.0.0.1:${port}`;
    child = spawn(
      PYTHON,
      [
        "-c",
        [
          "import sys, uvicorn",
          "from windform.config import load_config",
          "from windform.service import create_app",
          "app = create_app(load_config(sys.argv[1]))",
          "uvicorn.run(app, host='127.0.0.1', port=int(sys.argv[2]), log_level='error')",
        ].join("\n"),
        join(dir, "project.json"),
        String(port),
      ],
      { stdio: "ignore" },
    );

    api = new StudioApi(base);
    const deadline = Date.now() + 30000;
    let ready = false;
    while (Date.now() < deadline && !ready) {
      try {
        await fetch(`${base}/sessions/none/state`);
        ready = true;
      } catch {
        await new Promise((r) => setTimeout(r, 100));
      }
    }
    expect(ready).toBe(true);
  }, 90000);

  afterAll(() => {
    child?.kill();
  });

  it("echoes a 10-point stroke as an attractor track in the next state", async () => {
    const session = await api.createSession();
    expect(session.agents).toBe(200);

    // Ten pointer points already projected to terrain XY (the capture
    // pipeline's clip + resample still runs).
    const drawn: [number, number][] = Array.from({ length: 10 }, (_, i) => [
      15 + i * 7.5,
      30 + Math.sin(i / 2) * 10,
    ]);
    const points = finalizeStroke(drawn, { xmin: 0, xmax: 100, ymin: 0, ymax: 100 });
    expect(points).not.toBeNull();
    expect(points!.length).toBe(10);

    const resp = await api.sendStroke(session.session_id, points!, 6.0, 1.0, 3.0);
    expect(resp.queued).toBe(false);

    const state = await api.state(session.session_id);
    const track = state.tracks[resp.track_index];
    expect(track).toBeDefined();
    expect(track.points.length).toBe(10);
    for (let i = 0; i < 10; i++) {
      expect(track.points[i][0]).toBeCloseTo(points![i][0], 6);
      expect(track.points[i][1]).toBeCloseTo(points![i][1], 6);
    }
    // The attractor is live in the same frame and below the terrain surface.
    expect(state.attractors.length).toBe(resp.track_index + 1);
  }, 30000);

  it("streams at >= 10 state frames per second with 200 agents", async () => {
    const session = await api.createSession();
    const stamps: number[] = [];
    let agentsSeen = 0;

    const streaming = (async () => {
      const resp = await fetch(api.streamUrl(session.session_id));
      const reader = resp.body!.getReader();
      const decoder = new TextDecoder();
      let buf = "";
      while (stamps.length < 40) {
        const { value, done } = await reader.read();
        if (done) break;
        buf += decoder.decode(value, { stream: true });
        let idx;
        while ((idx = buf.indexOf("\n\n")) >= 0) {
          const block = buf.slice(0, idx);
          buf = buf.slice(idx + 2);
          const data = block.split("\n").find((ln) => ln.startsWith("data: "));
          if (data) {
            const payload = JSON.parse(data.slice(6)) as StatePayload;
            agentsSeen = payload.agents.length;
            stamps.push(performance.now());
          }
        }
      }
      await reader.cancel();
    })();

    await new Promise((r) => setTimeout(r, 300));
    await api.run(session.session_id, 60);
    await streaming;

    expect(agentsSeen).toBe(200);
    expect(stamps.length).toBeGreaterThanOrEqual(20);
    // Rate over the streamed window (first event is the subscribe snapshot).
    const span = (stamps[stamps.length - 1] - stamps[1]) / 1000;
    const rate = (stamps.length - 2) / span;
    expect(rate).toBeGreaterThanOrEqual(10);
  }, 60000);
});
