import { describe, expect, it } from "vitest";

import { OrbitCamera } from "../src/camera.js";

const W = 800;
const H = 600;

describe("OrbitCamera", () => {
  it("projects the orbit target to the canvas center", () => {
    const cam = new OrbitCamera({ x: 50, y: 50, z: 0 }, 120);
    const p = cam.project({ x: 50, y: 50, z: 0 }, W, H);
    expect(p.visible).toBe(true);
    expect(p.sx).toBeCloseTo(W / 2, 6);
    expect(p.sy).toBeCloseTo(H / 2, 6);
  });

  it("marks points behind the eye as not visible", () => {
    const cam = new OrbitCamera({ x: 0, y: 0, z: 0 }, 10);
    const eye = cam.eye();
    const behind = {
      x: eye.x * 2,
      y: eye.y * 2,
      z: eye.z * 2,
    };
    expect(cam.project(behind, W, H).visible).toBe(false);
  });

  it("round-trips screen -> plane -> screen", () => {
    const cam = new OrbitCamera({ x: 50, y: 50, z: 0 }, 150);
    for (const [sx, sy] of [[400, 300], [250, 200], [620, 410]] as [number, number][]) {
      const world = cam.unprojectToPlane(sx, sy, W, H, 0);
      expect(world).not.toBeNull();
      const back = cam.project(world!, W, H);
      expect(back.sx).toBeCloseTo(sx, 4);
      expect(back.sy).toBeCloseTo(sy, 4);
      expect(Math.abs(world!.z)).toBeLessThan(1e-9);
    }
  });

  it("returns null for rays that never hit the plane", () => {
    const cam = new OrbitCamera({ x: 0, y: 0, z: 0 }, 100);
    cam.elevation = 0.06; // nearly level: top of the screen looks at the sky
    expect(cam.unprojectToPlane(400, 0, W, H, 0)).toBeNull();
  });

  it("clamps elevation within the hemisphere", () => {
    const cam = new OrbitCamera({ x: 0, y: 0, z: 0 }, 100);
    cam.orbit(0, 10);
    expect(cam.elevation).toBeLessThan(Math.PI / 2);
    cam.orbit(0, -10);
    expect(cam.elevation).toBeGreaterThan(0);
  });

  it("zoom multiplies the distance within bounds", () => {
    const cam = new OrbitCamera({ x: 0, y: 0, z: 0 }, 100);
    cam.zoom(0.5);
    expect(cam.distance).toBeCloseTo(50);
    for (let i = 0; i < 50; i++) cam.zoom(0.1);
    expect(cam.distance).toBeGreaterThanOrEqual(1.0);
  });
});
