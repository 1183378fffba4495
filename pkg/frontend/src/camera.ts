// Orbit camera with a minimal perspective projection onto a 2D canvas.
// Also provides the inverse used by stroke capture: a screen point becomes
// a ray, intersected with a horizontal reference plane to get terrain XY.

export interface Vec3 {
  x: number;
  y: number;
  z: number;
}

export interface Projected {
  sx: number;
  sy: number;
  depth: number;
  visible: boolean;
}

export class OrbitCamera {
  target: Vec3;
  distance: number;
  azimuth: number; // radians around +Z, 0 looks along -Y
  elevation: number; // radians above the horizon
  fov: number;

  constructor(target: Vec3, distance: number) {
    this.target = { ...target };
    this.distance = distance;
    this.azimuth = Math.PI / 4;
    this.elevation = 0.9;
    this.fov = Math.PI / 4;
  }

  eye(): Vec3 {
    const ce = Math.cos(this.elevation);
    return {
      x: this.target.x + this.distance * ce * Math.sin(this.azimuth),
      y: this.target.y - this.distance * ce * Math.cos(this.azimuth),
      z: this.target.z + this.distance * Math.sin(this.elevation),
    };
  }

  // Camera basis: forward toward the target, right, and up (world +Z biased).
  private basis() {
    const eye = this.eye();
    const f = norm(sub(this.target, eye));
    const r = norm(cross(f, { x: 0, y: 0, z: 1 }));
    const u = cross(r, f);
    return { eye, f, r, u };
  }

  project(p: Vec3, width: number, height: number): Projected {
    const { eye, f, r, u } = this.basis();
    const d = sub(p, eye);
    const depth = dot(d, f);
    if (depth <= 1e-6) {
      return { sx: 0, sy: 0, depth, visible: false };
    }
    const scale = height / 2 / Math.tan(this.fov / 2);
    return {
      sx: width / 2 + (dot(d, r) / depth) * scale,
      sy: height / 2 - (dot(d, u) / depth) * scale,
      depth,
      visible: true,
    };
  }

  // Screen point -> world point on the plane z = planeZ (null if the ray
  // runs parallel or away from the plane).
  unprojectToPlane(
    sx: number,
    sy: number,
    width: number,
    height: number,
    planeZ: number,
  ): Vec3 | null {
    const { eye, f, r, u } = this.basis();
    const scale = height / 2 / Math.tan(this.fov / 2);
    const dir = norm(
      add(
        f,
        add(mul(r, (sx - width / 2) / scale), mul(u, (height / 2 - sy) / scale)),
      ),
    );
    const denom = dir.z;
    if (Math.abs(denom) < 1e-9) return null;
    const t = (planeZ - eye.z) / denom;
    if (t <= 0) return null;
    return add(eye, mul(dir, t));
  }

  orbit(dAzimuth: number, dElevation: number): void {
    this.azimuth += dAzimuth;
    this.elevation = Math.min(Math.max(this.elevation + dElevation, 0.05), Math.PI / 2 - 0.01);
  }

  zoom(factor: number): void {
    this.distance = Math.min(Math.max(this.distance * factor, 1.0), 1e5);
  }

  pan(dxWorld: number, dyWorld: number): void {
    // Pan in the ground plane along the view's right/forward directions.
    const sa = Math.sin(this.azimuth);
    const ca = Math.cos(this.azimuth);
    this.target.x += dxWorld * ca + dyWorld * sa;
    this.target.y += -dxWorld * sa + dyWorld * ca;
  }
}

export function sub(a: Vec3, b: Vec3): Vec3 {
  return { x: a.x - b.x, y: a.y - b.y, z: a.z - b.z };
}

export function add(a: Vec3, b: Vec3): Vec3 {
  return { x: a.x + b.x, y: a.y + b.y, z: a.z + b.z };
}

export function mul(a: Vec3, s: number): Vec3 {
  return { x: a.x * s, y: a.y * s, z: a.z * s };
}

export function dot(a: Vec3, b: Vec3): number {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

export function cross(a: Vec3, b: Vec3): Vec3 {
  return {
    x: a.y * b.z - a.z * b.y,
    y: a.z * b.x - a.x * b.z,
    z: a.x * b.y - a.y * b.x,
  };
}

export function norm(a: Vec3): Vec3 {
  const len = Math.hypot(a.x, a.y, a.z) || 1;
  return { x: a.x / len, y: a.y / len, z: a.z / len };
}
