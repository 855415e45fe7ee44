"""Calibrate the two verification thresholds from synthetic scores.

No training involved: a negative pool of trigger probabilities is drawn from a
Beta distribution, and the performance threshold comes from a reference
success rate.  Run with ``python demos/threshold_calibration.py``.
"""

import numpy as np

from guardmark import audit

rng = np.random.default_rng(0)

# performance test: one-sided Hoeffding margin on top of p_min
reference_sr = 0.92
for n in (40, 160, 640):
    tau_sr = audit.calibrate_tau_sr(0.5 * reference_sr, 0.05, n)
    print(f"n={n:4d} trials  tau_sr={tau_sr:.4f}")

# watermark test: (1 - delta) quantile of scores from non-watermarked models
negatives = rng.beta(1.0, 40.0, size=2000)
for delta in (0.05, 0.01, 0.001):
    tau_wic, eps = audit.calibrate_tau_wic(negatives, delta, beta=0.05)
    fp = np.mean(negatives >= tau_wic)
    print(f"delta={delta:<6} tau_wic={tau_wic:.4f}  empirical FPR={fp:.4f}  DKW eps={eps:.4f}")

# the three-way verdict
tau_sr = audit.calibrate_tau_sr(0.46, 0.05, 160)
tau_wic, _ = audit.calibrate_tau_wic(negatives, 0.01, 0.05)
for sr, wic in ((0.10, 0.99), (0.90, 0.99), (0.90, 0.01)):
    print(f"SR={sr:.2f} WIC={wic:.2f} -> {audit.decide(sr, wic, tau_sr, tau_wic)}")
