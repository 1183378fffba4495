// Canvas renderer: terrain heightfield shaded by height (optionally tinted
// by wind speed), decimated direction arrows, agents as oriented darts,
// trail polylines, and attractor markers. Painter's sort keeps the 2.5D
// terrain reading correctly; everything drawn comes from service payloads.

import { OrbitCamera, type Vec3 } from "./camera.js";
import type { AgentState, OverlayToggles, StatePayload, TerrainPayload } from "./types.js";

interface Cell {
  corners: [Vec3, Vec3, Vec3, Vec3];
  height: number;
  speed: number;
}

const HEIGHT_LOW = [46, 74, 66];
const HEIGHT_HIGH = [216, 226, 200];
const SPEED_LOW = [34, 48, 120];
const SPEED_HIGH = [255, 176, 32];

function lerpColor(a: number[], b: number[], t: number): string {
  const c = a.map((v, i) => Math.round(v + (b[i] - v) * t));
  return `rgb(${c[0]},${c[1]},${c[2]})`;
}

export class SceneRenderer {
  private ctx: CanvasRenderingContext2D;
  private cells: Cell[] = [];
  private arrowAnchors: { p: Vec3; dx: number; dy: number }[] = [];
  private zMin = 0;
  private zMax = 1;
  private speedMin = 0;
  private speedMax = 1;
  readonly meanHeight: number;
  readonly terrain: TerrainPayload;

  constructor(private canvas: HTMLCanvasElement, terrain: TerrainPayload) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
    this.terrain = terrain;

    const res = terrain.resolution;
    const xs = (i: number) => terrain.xmin + ((terrain.xmax - terrain.xmin) * i) / (res - 1);
    const ys = (j: number) => terrain.ymin + ((terrain.ymax - terrain.ymin) * j) / (res - 1);

    const flat = terrain.heights.flat();
    this.zMin = Math.min(...flat);
    this.zMax = Math.max(...flat);
    this.meanHeight = flat.reduce((a, b) => a + b, 0) / flat.length;

    if (terrain.field) {
      const speeds = terrain.field.speed.flat();
      this.speedMin = Math.min(...speeds);
      this.speedMax = Math.max(...speeds);
    }

    for (let j = 0; j < res - 1; j++) {
      for (let i = 0; i < res - 1; i++) {
        const corners: [Vec3, Vec3, Vec3, Vec3] = [
          { x: xs(i), y: ys(j), z: terrain.heights[j][i] },
          { x: xs(i + 1), y: ys(j), z: terrain.heights[j][i + 1] },
          { x: xs(i + 1), y: ys(j + 1), z: terrain.heights[j + 1][i + 1] },
          { x: xs(i), y: ys(j + 1), z: terrain.heights[j + 1][i] },
        ];
        const height = (corners[0].z + corners[1].z + corners[2].z + corners[3].z) / 4;
        this.cells.push({
          corners,
          height,
          speed: this.sampleSpeed((corners[0].x + corners[2].x) / 2, (corners[0].y + corners[2].y) / 2),
        });
      }
    }

    const stride = Math.max(1, Math.floor(res / 12));
    if (terrain.field) {
      for (let j = 0; j < res; j += stride) {
        for (let i = 0; i < res; i += stride) {
          const x = xs(i);
          const y = ys(j);
          this.arrowAnchors.push({
            p: { x, y, z: terrain.heights[j][i] },
            dx: this.sampleField(terrain.field.dir_x, x, y),
            dy: this.sampleField(terrain.field.dir_y, x, y),
          });
        }
      }
    }
  }

  private sampleField(grid: number[][], x: number, y: number): number {
    const field = this.terrain.field;
    if (!field) return 0;
    const [x0, y0, x1, y1] = field.extent;
    const cols = grid[0].length;
    const rows = grid.length;
    const ci = Math.min(Math.max(Math.floor(((x - x0) / (x1 - x0)) * cols), 0), cols - 1);
    const rj = Math.min(Math.max(Math.floor(((y - y0) / (y1 - y0)) * rows), 0), rows - 1);
    return grid[rj][ci];
  }

  private sampleSpeed(x: number, y: number): number {
    return this.terrain.field ? this.sampleField(this.terrain.field.speed, x, y) : 0;
  }

  worldRect() {
    const t = this.terrain;
    return { xmin: t.xmin, xmax: t.xmax, ymin: t.ymin, ymax: t.ymax };
  }

  render(
    camera: OrbitCamera,
    state: StatePayload | null,
    trails: Map<number, [number, number, number][]>,
    toggles: OverlayToggles,
    strokeDraft: [number, number][],
  ): void {
    const { canvas, ctx } = this;
    const w = canvas.width;
    const h = canvas.height;
    ctx.fillStyle = "#14161c";
    ctx.fillRect(0, 0, w, h);

    const zSpan = this.zMax - this.zMin || 1;
    const sSpan = this.speedMax - this.speedMin || 1;

    const drawn = this.cells
      .map((cell) => {
        const pts = cell.corners.map((c) => camera.project(c, w, h));
        if (pts.some((p) => !p.visible)) return null;
        const depth = (pts[0].depth + pts[1].depth + pts[2].depth + pts[3].depth) / 4;
        return { cell, pts, depth };
      })
      .filter((d): d is NonNullable<typeof d> => d !== null)
      .sort((a, b) => b.depth - a.depth);

    for (const { cell, pts } of drawn) {
      const ht = (cell.height - this.zMin) / zSpan;
      let fill = lerpColor(HEIGHT_LOW, HEIGHT_HIGH, ht);
      if (toggles.heatmap && this.terrain.field) {
        fill = lerpColor(SPEED_LOW, SPEED_HIGH, (cell.speed - this.speedMin) / sSpan);
      }
      ctx.fillStyle = fill;
      ctx.strokeStyle = "rgba(0,0,0,0.12)";
      ctx.beginPath();
      ctx.moveTo(pts[0].sx, pts[0].sy);
      for (let k = 1; k < 4; k++) ctx.lineTo(pts[k].sx, pts[k].sy);
      ctx.closePath();
      ctx.fill();
      ctx.stroke();
    }

    if (toggles.arrows) {
      ctx.strokeStyle = "rgba(255,255,255,0.75)";
      ctx.lineWidth = 1;
      const span = Math.max(this.terrain.xmax - this.terrain.xmin, 1) / 28;
      for (const a of this.arrowAnchors) {
        const base = camera.project(a.p, w, h);
        const tip = camera.project(
          { x: a.p.x + a.dx * span, y: a.p.y + a.dy * span, z: a.p.z },
          w,
          h,
        );
        if (!base.visible || !tip.visible) continue;
        ctx.beginPath();
        ctx.moveTo(base.sx, base.sy);
        ctx.lineTo(tip.sx, tip.sy);
        ctx.stroke();
        ctx.beginPath();
        ctx.arc(tip.sx, tip.sy, 1.5, 0, 2 * Math.PI);
        ctx.stroke();
      }
    }

    if (toggles.trails) {
      ctx.strokeStyle = "rgba(120,200,255,0.5)";
      ctx.lineWidth = 1;
      for (const pts of trails.values()) {
        ctx.beginPath();
        let started = false;
        for (const [x, y, z] of pts) {
          const p = camera.project({ x, y, z }, w, h);
          if (!p.visible) continue;
          if (!started) {
            ctx.moveTo(p.sx, p.sy);
            started = true;
          } else {
            ctx.lineTo(p.sx, p.sy);
          }
        }
        ctx.stroke();
      }
    }

    if (state) {
      for (const agent of state.agents) {
        this.drawAgent(camera, agent, w, h);
      }
      if (toggles.attractors) {
        for (const track of state.tracks) {
          this.drawTrackPath(camera, track.points, track.weight, w, h);
        }
        state.attractors.forEach((pos, idx) => {
          const weight = state.track_weights[idx] ?? 1;
          this.drawAttractor(camera, pos, weight, w, h);
        });
      }
    }

    if (strokeDraft.length > 1) {
      ctx.strokeStyle = "#ffdd57";
      ctx.lineWidth = 2;
      ctx.beginPath();
      strokeDraft.forEach(([x, y], idx) => {
        const p = camera.project({ x, y, z: this.meanHeight }, w, h);
        if (idx === 0) ctx.moveTo(p.sx, p.sy);
        else ctx.lineTo(p.sx, p.sy);
      });
      ctx.stroke();
    }
  }

  private drawAgent(camera: OrbitCamera, agent: AgentState, w: number, h: number): void {
    const [x, y, z] = agent.position;
    const [vx, vy, vz] = agent.velocity;
    const speed = Math.hypot(vx, vy, vz);
    const span = Math.max(this.terrain.xmax - this.terrain.xmin, 1) / 90;
    const dir = speed > 1e-9 ? { x: vx / speed, y: vy / speed, z: vz / speed } : { x: 1, y: 0, z: 0 };
    const tipP = camera.project({ x: x + dir.x * span, y: y + dir.y * span, z: z + dir.z * span }, w, h);
    const base = camera.project({ x, y, z }, w, h);
    if (!base.visible || !tipP.visible) return;

    const angle = Math.atan2(tipP.sy - base.sy, tipP.sx - base.sx);
    const size = Math.max(3, 260 / base.depth);
    const ctx = this.ctx;
    ctx.fillStyle = "#ff5d5d";
    ctx.beginPath();
    ctx.moveTo(base.sx + Math.cos(angle) * size * 1.6, base.sy + Math.sin(angle) * size * 1.6);
    ctx.lineTo(base.sx + Math.cos(angle + 2.6) * size, base.sy + Math.sin(angle + 2.6) * size);
    ctx.lineTo(base.sx + Math.cos(angle - 2.6) * size, base.sy + Math.sin(angle - 2.6) * size);
    ctx.closePath();
    ctx.fill();
  }

  private drawTrackPath(
    camera: OrbitCamera,
    points: [number, number, number][],
    weight: number,
    w: number,
    h: number,
  ): void {
    if (points.length < 2) return;
    const ctx = this.ctx;
    ctx.strokeStyle = weight >= 0 ? "rgba(109,255,156,0.35)" : "rgba(255,109,109,0.35)";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    let started = false;
    for (const [x, y, z] of points) {
      const p = camera.project({ x, y, z }, w, h);
      if (!p.visible) continue;
      if (!started) {
        ctx.moveTo(p.sx, p.sy);
        started = true;
      } else {
        ctx.lineTo(p.sx, p.sy);
      }
    }
    ctx.stroke();
  }

  private drawAttractor(
    camera: OrbitCamera,
    pos: [number, number, number],
    weight: number,
    w: number,
    h: number,
  ): void {
    const p = camera.project({ x: pos[0], y: pos[1], z: pos[2] }, w, h);
    const surface = camera.project({ x: pos[0], y: pos[1], z: this.meanHeight }, w, h);
    if (!p.visible) return;
    const ctx = this.ctx;
    ctx.strokeStyle = weight >= 0 ? "#6dff9c" : "#ff6d6d";
    ctx.lineWidth = 2;
    const r = 6;
    ctx.beginPath();
    ctx.moveTo(p.sx - r, p.sy - r);
    ctx.lineTo(p.sx + r, p.sy + r);
    ctx.moveTo(p.sx - r, p.sy + r);
    ctx.lineTo(p.sx + r, p.sy - r);
    ctx.stroke();
    if (surface.visible) {
      ctx.setLineDash([3, 3]);
      ctx.beginPath();
      ctx.moveTo(p.sx, p.sy);
      ctx.lineTo(surface.sx, surface.sy);
      ctx.stroke();
      ctx.setLineDash([]);
    }
  }
}
