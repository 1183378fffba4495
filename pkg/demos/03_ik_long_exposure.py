"""Long-exposure sweeps of a joint chain.

A five-bone chain chases a figure-eight effector path (a wing-stroke shape)
while its root drifts along a line. Sampling 90 frames and stamping a
feather blade at three joints piles the whole motion into one static form,
like a long-exposure photograph of a flapping wing.

Run: python3 demos/03_ik_long_exposure.py
"""

import pathlib

import numpy as np

from windform import formout, iktrail, synth

out = pathlib.Path("out/demo_iktrail")
out.mkdir(parents=True, exist_ok=True)

chain = iktrail.JointChain.straight((0.0, 0.0, 0.0), [1.0, 0.9, 0.8, 0.7, 0.6])
feather = synth.feather_mesh(length=0.8, width=0.12)

figure_eight = iktrail.Lissajous(
    center=(2.2, 0.0, 1.2),
    amplitude=(0.8, 1.4, 0.5),
    frequency=(2.0, 1.0, 2.0),
    phase=(np.pi / 2.0, 0.0, np.pi / 4.0),
)
drift = iktrail.Line((0.0, 0.0, 0.0), (6.0, 0.0, 0.0))

job = iktrail.SweepJob(
    chain=chain,
    effector_curve=figure_eight,
    root_curve=drift,
    sub_shapes=[(2, feather), (3, feather), (5, feather)],
    frames=90,
)
sweep = iktrail.snapshot_sweep(job)
print(f"accumulated {len(sweep)} instances over {job.frames} frames")

baked = sweep.bake()
bounds_lo = np.min([m.vertices.min(axis=0) for m in baked], axis=0)
bounds_hi = np.max([m.vertices.max(axis=0) for m in baked], axis=0)
print(f"composite bounds: {np.round(bounds_lo, 2)} .. {np.round(bounds_hi, 2)}")

path = out / "long_exposure.obj"
formout.write_obj(sweep, path)
print(f"wrote {path}")

# The same machinery also draws with a plain circle: a motionless root and a
# circular effector leave a ring of feathers.
ring = iktrail.snapshot_sweep(
    iktrail.SweepJob(
        chain=iktrail.JointChain.straight((0.0, 0.0, 0.0), [1.0, 1.0, 1.0]),
        effector_curve=iktrail.Circle((1.4, 0.0, 0.8), 1.0),
        sub_shapes=[(3, feather)],
        frames=48,
    )
)
formout.write_obj(ring, out / "ring.obj")
print(f"wrote {out / 'ring.obj'}")
