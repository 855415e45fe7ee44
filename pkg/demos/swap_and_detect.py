"""Train three small variants, fit a trigger kit and swap it into each model.

This is a shrunken version of the full pipeline (1500 training steps instead
of 8000), so the success rates are low; the point is the flow of
objects.  Takes about a minute on one core.
"""

import numpy as np

from guardmark import audit
from guardmark import microworld as mw
from guardmark import policy as pl
from guardmark import train as tr
from guardmark.inject import SecretMessage

SUITE = "spatial-mini"
message = SecretMessage.parse("010101")

data = mw.generate_dataset(SUITE, 60, seed=1, noise=0.03)
print(f"{data.n_episodes} demonstrations, {data.n_frames} frames")

variants = tr.train_all_variants(data, message, tr.TrainConfig(steps=1500, seed=1))
kit = tr.cotrain(variants["clean"], variants["watermarked"], variants["noise"], data,
                 tr.CoTrainConfig(steps=1000, seed=2), message)

# the verifier only sees activations exposed by the provider
frames, _ = data.batch(np.arange(16))
for name, bundle in variants.items():
    verifier = pl.Verifier(pl.ProviderInterface(bundle))
    verifier.attach(kit)
    p = verifier.probability(frames)
    print(f"{name:<12} mean trigger probability on training frames: {p.mean():.3f}")

for name, bundle in variants.items():
    wic = audit.compute_wic(bundle, kit, SUITE, trials=2, steps_per_trial=5, seed=3)
    sr = audit.performance_test(bundle, SUITE, trials=2, seed=3)
    print(f"{name:<12} SR={sr.sr:.2f}  WIC={wic.mean:.3f}")
