#!/usr/bin/env python3
"""The factorized local model and the quantum/local ratio along the diagonal.

A useful local part must vanish wherever the quantum probability vanishes.
On the all-parties-equal diagonal the quantum probability has a double zero
at one angle theta0; the local model is pinned to vanish there too.  The
largest weight the model can carry is the minimum of the ratio f = P_Q/P_L.
"""

import math

import numpy as np

from ghzlocal import (
    GhzScenario,
    LocalModel,
    OutcomePattern,
    all_outcome_patterns,
    diagonal_prob,
    local_prob,
    ratio_f,
    theta0,
)

print("== The vanishing angle ==")
for n in (2, 3, 5):
    for alpha in (0.0, math.pi / 12, math.pi / 4):
        t0 = theta0(GhzScenario(n, alpha))
        print(f"n={n} alpha={alpha:.4f}: theta0 = {t0:.6f} rad "
              f"({math.degrees(t0):6.2f} deg)")

print("\n== The local model vanishes with the quantum probability ==")
sc = GhzScenario(2, math.pi / 6)
model = LocalModel(sc)
t0 = theta0(sc)
pat = OutcomePattern((1, 1))
print(f"at the diagonal zero (theta = theta0 = {t0:.4f}):")
print(f"  P_Q = {diagonal_prob(sc, t0):.2e}")
print(f"  P_L = {local_prob(model, [t0, t0], pat):.2e}")
t1 = 1.0
t2 = 2.0 * math.atan(1.0 / (math.tan(sc.alpha) * math.tan(t1 / 2)))
print(f"off the diagonal, at a constructed zero (t1={t1:.3f}, t2={t2:.3f}):")
print(f"  P_L = {local_prob(model, [t1, t2], pat):.2e}")

print("\n== Normalization ==")
rng = np.random.default_rng(1)
thetas = rng.uniform(0, math.pi, 4)
model4 = LocalModel(GhzScenario(4, 0.3))
total = sum(local_prob(model4, thetas, p) for p in all_outcome_patterns(4))
print(f"sum of P_L over all 16 patterns at random angles: {total:.15f}")

print("\n== The ratio f(theta) = P_Q/P_L on the diagonal ==")
sc = GhzScenario(2, math.pi / 6)
t0 = theta0(sc)
print(f"n=2, alpha=pi/6 (plateau value should be 1 - sin(pi/3) = "
      f"{1 - math.sin(math.pi / 3):.6f}):")
for theta in (0.0, 0.8, 1.2, 1.6, t0 - 1e-3, t0, t0 + 1e-3, 3.0):
    print(f"  f({theta:8.5f}) = {ratio_f(sc, theta)}")

print("\nn=3, alpha=pi/12 (the zero orders differ, so f diverges at theta0):")
sc3 = GhzScenario(3, math.pi / 12)
t0 = theta0(sc3)
for delta in (1e-2, 1e-3, 1e-4, 1e-5):
    print(f"  f(theta0 - {delta:.0e}) = {ratio_f(sc3, t0 - delta):12.2f}")
print(f"  f(theta0)         = {ratio_f(sc3, t0)}")
