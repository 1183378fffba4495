// Append-only metric series plus a small canvas line chart for the
// polarization trace (0..1). Series are keyed by step index so replayed or
// re-delivered states never duplicate a sample.

export class MetricSeries {
  steps: number[] = [];
  values: number[] = [];

  append(step: number, value: number): boolean {
    const last = this.steps[this.steps.length - 1];
    if (last !== undefined && step <= last) return false;
    this.steps.push(step);
    this.values.push(value);
    return true;
  }

  get length(): number {
    return this.steps.length;
  }

  latest(): number | null {
    return this.values.length ? this.values[this.values.length - 1] : null;
  }
}

export class PolarizationChart {
  private ctx: CanvasRenderingContext2D;
  readonly series = new MetricSeries();

  constructor(private canvas: HTMLCanvasElement) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
  }

  push(step: number, value: number): void {
    if (this.series.append(step, value)) this.draw();
  }

  draw(): void {
    const { canvas, ctx } = this;
    const w = canvas.width;
    const h = canvas.height;
    ctx.fillStyle = "#14161c";
    ctx.fillRect(0, 0, w, h);
    ctx.strokeStyle = "#3a3f4c";
    ctx.strokeRect(0.5, 0.5, w - 1, h - 1);

    for (const level of [0.5, 0.8]) {
      ctx.strokeStyle = level === 0.8 ? "#6dff9c44" : "#ffffff22";
      ctx.beginPath();
      ctx.moveTo(0, h - level * h);
      ctx.lineTo(w, h - level * h);
      ctx.stroke();
    }

    const { steps, values } = this.series;
    if (steps.length < 2) return;
    const sMin = steps[0];
    const sSpan = steps[steps.length - 1] - sMin || 1;
    ctx.strokeStyle = "#ffb020";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    steps.forEach((s, i) => {
      const x = ((s - sMin) / sSpan) * (w - 4) + 2;
      const y = h - values[i] * (h - 4) - 2;
      if (i === 0) ctx.moveTo(x, y);
      else ctx.lineTo(x, y);
    });
    ctx.stroke();
  }
}
