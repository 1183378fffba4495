// Service payload shapes; the studio displays these verbatim and never
// simulates anything client-side.

export interface AgentState {
  id: number;
  position: [number, number, number];
  velocity: [number, number, number];
}

export interface Metrics {
  polarization: number;
  mean_nn_distance: number | null;
  mean_height: number;
}

export interface AttractorTrack {
  weight: number;
  times: number[];
  points: [number, number, number][];
}

export interface StatePayload {
  session_id: string;
  revision: number;
  step_index: number;
  time: number;
  agents: AgentState[];
  attractors: [number, number, number][];
  track_weights: number[];
  tracks: AttractorTrack[];
  metrics: Metrics;
  digest: string;
}

export interface FieldPayload {
  speed: number[][];
  dir_x: number[][];
  dir_y: number[][];
  extent: [number, number, number, number];
}

export interface TerrainPayload {
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
  resolution: number;
  heights: number[][];
  field?: FieldPayload;
}

export interface BoidParams {
  r_sep: number;
  r_align: number;
  r_coh: number;
  w_sep: number;
  w_align: number;
  w_coh: number;
  w_attract: number;
  v_max: number;
  a_max: number;
  dt: number;
}

// [min, max, step] for the sliders; validation truth stays server-side.
// dt is absent: it fixes the session's time axis and cannot change mid-run.
export const PARAM_RANGES: Record<Exclude<keyof BoidParams, "dt">, [number, number, number]> = {
  r_sep: [0, 10, 0.1],
  r_align: [0, 20, 0.1],
  r_coh: [0, 40, 0.1],
  w_sep: [0, 5, 0.05],
  w_align: [0, 5, 0.05],
  w_coh: [0, 5, 0.05],
  w_attract: [0, 5, 0.05],
  v_max: [0.1, 10, 0.1],
  a_max: [0.1, 20, 0.1],
};

export interface OverlayToggles {
  heatmap: boolean;
  arrows: boolean;
  trails: boolean;
  attractors: boolean;
}

export interface ValidationProblem {
  field: string;
  msg: string;
}
