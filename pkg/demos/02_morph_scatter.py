"""Morph-target scattering driven by the wind field.

Builds a rolling synthetic terrain, binds a wind raster to its UV chart,
and scatters a 12x12 grid of winged darts: fast wind picks later morph
frames (swept wings), direction turns each instance downwind, and a pivot
offset phase-shifts neighbors into arcs. Exports the baked scene as OBJ.

Run: python3 demos/02_morph_scatter.py
"""

import pathlib

from windform import fieldkit, formout, morphscatter, synth

out = pathlib.Path("out/demo_scatter")
out.mkdir(parents=True, exist_ok=True)

terrain_mesh = synth.rolling_terrain(width=100.0, height=100.0, amplitude=4.0)

stations = fieldkit.parse_stations(
    "Station,UTMX,UTMY,Direction,Speed\n"
    "A,10,10,45,3\nB,90,15,90,9\nC,50,85,180,6\nD,15,70,270,4\nE,80,80,10,8\n"
)
raster = fieldkit.idw_interpolate(
    stations, grid=fieldkit.GridSpec(32, 32, 0.0, 0.0, 100.0 / 32.0)
)
print(f"field over {raster.grid.extent}, speeds "
      f"{raster.speed.min():.1f}..{raster.speed.max():.1f} m/s")

targets = morphscatter.MorphTargetSet(synth.dart_morph_targets(4, span=2.2),
                                      frame_count=24)

plain = morphscatter.ScatterSpec(nx=12, ny=12, base_scale=1.0)
bound = morphscatter.ScatterSpec(
    nx=12, ny=12,
    base_scale=0.8,
    scale_from_speed=morphscatter.LinearMap(0.12, 0.5),
    pivot_offset=(1.6, 0.0, 0.0),
)

for name, spec in (("regular", plain), ("wind_bound", bound)):
    instances = morphscatter.scatter_instances(terrain_mesh, raster, targets, spec)
    if name == "regular":
        # Strip the data bindings to show the baseline array.
        for inst in instances:
            inst.yaw = 0.0
            inst.frame = 0.0
    baked = morphscatter.bake_instances(terrain_mesh, instances, targets)
    path = out / f"scatter_{name}.obj"
    formout.write_obj(baked, path)
    frames = sorted({round(i.frame, 2) for i in instances})
    print(f"{name}: {len(instances)} instances, frames {frames[0]}..{frames[-1]} "
          f"-> {path}")
