// Studio orchestration: one session, one event-stream subscription, and UI
// bindings. Every displayed value originates from service payloads; the
// client only buffers recent positions for trail display.

import { ApiError, StudioApi } from "./api.js";
import { OrbitCamera } from "./camera.js";
import { PolarizationChart } from "./metrics.js";
import { SceneRenderer } from "./render.js";
import { finalizeStroke, type StrokeSample } from "./stroke.js";
import { PARAM_RANGES, type BoidParams, type OverlayToggles, type StatePayload } from "./types.js";

const TRAIL_CAP = 240;

export class StudioApp {
  private api: StudioApi;
  private sessionId = "";
  private camera: OrbitCamera | null = null;
  private renderer: SceneRenderer | null = null;
  private chart: PolarizationChart | null = null;
  private state: StatePayload | null = null;
  private trails = new Map<number, [number, number, number][]>();
  private toggles: OverlayToggles = { heatmap: true, arrows: true, trails: true, attractors: true };
  private drawMode = false;
  private samples: StrokeSample[] = [];
  private draft: [number, number][] = [];
  private dragging = false;
  private lastPointer: [number, number] | null = null;
  private running = false;
  private source: EventSource | null = null;

  private canvas: HTMLCanvasElement;

  constructor(private root: Document, base = "") {
    this.api = new StudioApi(base);
    this.canvas = root.getElementById("scene") as HTMLCanvasElement;
  }

  async start(): Promise<void> {
    this.status("creating session...");
    const created = await this.api.createSession();
    this.sessionId = created.session_id;
    this.status(`session ${this.sessionId} (${created.agents} agents)`);

    const terrain = await this.api.terrain(this.sessionId, 48);
    const spanX = terrain.xmax - terrain.xmin;
    const spanY = terrain.ymax - terrain.ymin;
    this.camera = new OrbitCamera(
      { x: (terrain.xmin + terrain.xmax) / 2, y: (terrain.ymin + terrain.ymax) / 2, z: 0 },
      Math.max(spanX, spanY) * 1.2,
    );
    this.renderer = new SceneRenderer(this.canvas, terrain);
    this.chart = new PolarizationChart(this.root.getElementById("chart") as HTMLCanvasElement);

    this.applyState(await this.api.state(this.sessionId));
    this.subscribe();
    this.buildPanel();
    this.bindPointer();
    this.frame();
  }

  private subscribe(): void {
    this.source?.close();
    const source = new EventSource(this.api.streamUrl(this.sessionId));
    source.onmessage = (event) => {
      this.applyState(JSON.parse(event.data) as StatePayload);
    };
    this.source = source;
  }

  private applyState(state: StatePayload): void {
    this.state = state;
    for (const agent of state.agents) {
      let trail = this.trails.get(agent.id);
      if (!trail) {
        trail = [];
        this.trails.set(agent.id, trail);
      }
      trail.push(agent.position);
      if (trail.length > TRAIL_CAP) trail.shift();
    }
    this.chart?.push(state.step_index, state.metrics.polarization);
    const meta = this.root.getElementById("meta");
    if (meta) {
      meta.textContent =
        `step ${state.step_index}  t=${state.time.toFixed(2)}s  ` +
        `polarization ${state.metrics.polarization.toFixed(3)}  ` +
        `rev ${state.revision}`;
    }
  }

  // -- UI -------------------------------------------------------------------

  private status(text: string, isError = false): void {
    const el = this.root.getElementById("status");
    if (el) {
      el.textContent = text;
      el.classList.toggle("error", isError);
    }
  }

  private numberInput(id: string, fallback: number): number {
    const el = this.root.getElementById(id) as HTMLInputElement | null;
    const value = el ? Number(el.value) : NaN;
    return Number.isFinite(value) ? value : fallback;
  }

  private buildPanel(): void {
    const holder = this.root.getElementById("params");
    if (holder) {
      for (const name of Object.keys(PARAM_RANGES) as Exclude<keyof BoidParams, "dt">[]) {
        const [min, max, step] = PARAM_RANGES[name];
        const row = this.root.createElement("div");
        row.className = "param-row";
        const label = this.root.createElement("label");
        label.textContent = name;
        const slider = this.root.createElement("input");
        slider.type = "range";
        slider.min = String(min);
        slider.max = String(max);
        slider.step = String(step);
        slider.id = `param-${name}`;
        const value = this.root.createElement("span");
        value.className = "param-value";
        slider.addEventListener("change", async () => {
          value.textContent = slider.value;
          try {
            const resp = await this.api.patchParams(this.sessionId, {
              [name]: Number(slider.value),
            });
            this.status(`params.${name} = ${slider.value} (rev ${resp.revision})`);
          } catch (err) {
            this.showApiError(err);
          }
        });
        slider.addEventListener("input", () => {
          value.textContent = slider.value;
        });
        row.append(label, slider, value);
        holder.append(row);
      }
    }

    this.bindButton("run", async () => {
      if (this.running) return;
      this.running = true;
      this.status("running...");
      try {
        const steps = Math.max(1, Math.round(this.numberInput("run-steps", 200)));
        const result = await this.api.run(this.sessionId, steps);
        this.status(`ran to step ${result.step_index}`);
      } catch (err) {
        this.showApiError(err);
      } finally {
        this.running = false;
      }
    });

    this.bindButton("export-trails", async () => {
      try {
        const out = await this.api.exportScene(this.sessionId, "trails", 0.1, 6);
        this.status(`exported ${out.paths.join(", ")}`);
      } catch (err) {
        this.showApiError(err);
      }
    });
    this.bindButton("export-scene", async () => {
      try {
        const out = await this.api.exportScene(this.sessionId, "scene", 0.3, 4);
        this.status(`exported ${out.paths.join(", ")}`);
      } catch (err) {
        this.showApiError(err);
      }
    });

    const draw = this.root.getElementById("draw-mode") as HTMLInputElement | null;
    draw?.addEventListener("change", () => {
      this.drawMode = Boolean(draw.checked);
    });

    for (const name of Object.keys(this.toggles) as (keyof OverlayToggles)[]) {
      const box = this.root.getElementById(`toggle-${name}`) as HTMLInputElement | null;
      if (box) {
        box.checked = this.toggles[name];
        box.addEventListener("change", () => {
          this.toggles[name] = Boolean(box.checked);
        });
      }
    }
  }

  private bindButton(id: string, handler: () => void): void {
    this.root.getElementById(id)?.addEventListener("click", handler);
  }

  private showApiError(err: unknown): void {
    if (err instanceof ApiError) {
      this.status(err.problems.map((p) => `${p.field}: ${p.msg}`).join("; "), true);
    } else {
      this.status(String(err), true);
    }
  }

  // -- pointer interaction ----------------------------------------------------

  private bindPointer(): void {
    const canvas = this.canvas;
    canvas.addEventListener("pointerdown", (e) => {
      canvas.setPointerCapture(e.pointerId);
      this.dragging = true;
      this.lastPointer = [e.offsetX, e.offsetY];
      if (this.drawMode) {
        this.samples = [{ sx: e.offsetX, sy: e.offsetY, t: performance.now() }];
        this.draft = [];
      }
    });
    canvas.addEventListener("pointermove", (e) => {
      if (!this.dragging || !this.camera) return;
      if (this.drawMode) {
        this.samples.push({ sx: e.offsetX, sy: e.offsetY, t: performance.now() });
        const world = this.screenToTerrain(e.offsetX, e.offsetY);
        if (world) this.draft.push(world);
        return;
      }
      const [lx, ly] = this.lastPointer ?? [e.offsetX, e.offsetY];
      const dx = e.offsetX - lx;
      const dy = e.offsetY - ly;
      if (e.shiftKey) {
        const scale = this.camera.distance / 500;
        this.camera.pan(-dx * scale, dy * scale);
      } else {
        this.camera.orbit(dx * 0.008, dy * 0.006);
      }
      this.lastPointer = [e.offsetX, e.offsetY];
    });
    canvas.addEventListener("pointerup", () => {
      this.dragging = false;
      this.lastPointer = null;
      if (this.drawMode) void this.submitStroke();
    });
    canvas.addEventListener("wheel", (e) => {
      e.preventDefault();
      this.camera?.zoom(e.deltaY > 0 ? 1.1 : 0.9);
    });
  }

  private screenToTerrain(sx: number, sy: number): [number, number] | null {
    if (!this.camera || !this.renderer) return null;
    const hit = this.camera.unprojectToPlane(
      sx, sy, this.canvas.width, this.canvas.height, this.renderer.meanHeight,
    );
    return hit ? [hit.x, hit.y] : null;
  }

  private async submitStroke(): Promise<void> {
    if (!this.renderer) return;
    const projected = this.samples
      .map((s) => this.screenToTerrain(s.sx, s.sy))
      .filter((p): p is [number, number] => p !== null);
    this.samples = [];
    this.draft = [];

    const points = finalizeStroke(projected, this.renderer.worldRect());
    if (!points) {
      this.status("stroke discarded (acquire at least two on-terrain points)");
      return;
    }
    try {
      const resp = await this.api.sendStroke(
        this.sessionId,
        points,
        this.numberInput("stroke-duration", 5.0),
        this.numberInput("stroke-weight", 1.0),
        this.numberInput("stroke-zoffset", 3.0),
      );
      this.status(
        `stroke -> track ${resp.track_index}` + (resp.queued ? " (queued)" : ""),
      );
    } catch (err) {
      this.showApiError(err);
    }
  }

  private frame = (): void => {
    if (this.renderer && this.camera) {
      this.renderer.render(this.camera, this.state, this.trails, this.toggles, this.draft);
    }
    requestAnimationFrame(this.frame);
  };
}
