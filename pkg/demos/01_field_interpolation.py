"""Wind stations to continuous rasters.

Parses a seven-station sample sheet, Shepard-interpolates speed and
direction onto a 64x64 grid, round-trips the ASCII grid format, and (when
matplotlib is available) draws the speed field with direction arrows.

Run: python3 demos/01_field_interpolation.py
"""

import pathlib

import numpy as np

from windform import fieldkit

STATIONS = """Station,UTMX,UTMY,Direction,Speed
ST1,615380,9531496,22.5,16
ST2,616004,9533157,45,14
ST3,617630,9533808,90,12
ST4,619191,9532326,135,12
ST5,621295,9530663,112.5,7
ST6,622303,9533906,180,6
ST7,616992,9532169,10.5,18
"""

out = pathlib.Path("out/demo_field")
out.mkdir(parents=True, exist_ok=True)

stations = fieldkit.parse_stations(STATIONS)
print(f"parsed {len(stations)} stations; speeds "
      f"{min(s.speed for s in stations)}..{max(s.speed for s in stations)} m/s")

raster = fieldkit.idw_interpolate(stations)
g = raster.grid
print(f"interpolated onto {g.ncols}x{g.nrows} cells of {g.cell_size:.1f} m")
print(f"speed range on the raster: {raster.speed.min():.2f}..{raster.speed.max():.2f}")

# Sample a transect between two stations: values stay inside the envelope
# and the direction is always unit length.
a, b = stations[0], stations[6]
for t in np.linspace(0.0, 1.0, 5):
    x = a.easting * (1 - t) + b.easting * t
    y = a.northing * (1 - t) + b.northing * t
    s = fieldkit.sample_field(raster, x, y)
    compass = fieldkit.vector_to_compass(*s.dir)
    print(f"  t={t:.2f}: speed {s.speed:5.2f} m/s, direction {compass:6.1f} deg")

for channel in ("speed", "dir_x", "dir_y"):
    path = out / f"{channel}.asc"
    path.write_text(fieldkit.write_raster(raster, channel))
    print(f"wrote {path}")

back = fieldkit.read_raster((out / "speed.asc").read_text())
print(f"round-trip max error: {np.abs(back.values - raster.speed).max():.2e}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ex = g.extent
    fig, ax = plt.subplots(figsize=(7, 5))
    im = ax.imshow(raster.speed, origin="lower", extent=ex, cmap="viridis")
    step = 6
    cx, cy = g.cell_centers()
    ax.quiver(cx[::step, ::step], cy[::step, ::step],
              raster.dir_x[::step, ::step], raster.dir_y[::step, ::step],
              color="white", scale=28)
    ax.scatter([s.easting for s in stations], [s.northing for s in stations],
               c="red", s=30, label="stations")
    ax.legend()
    fig.colorbar(im, label="wind speed (m/s)")
    fig.savefig(out / "field.png", dpi=120, bbox_inches="tight")
    print(f"wrote {out / 'field.png'}")
except ImportError:
    print("matplotlib not available; skipped the plot")
