#!/usr/bin/env python3
"""Two routes to the same GHZ outcome probabilities.

The state cos(a)|0..0> + sin(a)|1..1> is measured party by party along
Bloch directions.  A dense state-vector computation and a closed form must
agree on every configuration; the closed form additionally shows that the
azimuthal angles only matter through their sum.
"""

import math

import numpy as np

from ghzlocal import (
    GhzScenario,
    MeasurementContext,
    OutcomePattern,
    all_outcome_patterns,
    ghz_state,
    joint_prob_dense,
    joint_prob_ghz,
    projector,
)

rng = np.random.default_rng(0)

print("== The state ==")
scenario = GhzScenario(n=3, alpha=math.pi / 6)
state = ghz_state(scenario)
print(f"n = {scenario.n}, alpha = pi/6")
print(f"amplitude at |000>: {state[0]:.6f}   at |111>: {state[-1]:.6f}")
print(f"squared norm: {np.vdot(state, state).real:.15f}")

print("\n== Projectors ==")
from ghzlocal import BlochDirection

for theta, phi, r, label in [
    (0.0, 0.0, +1, "z axis, +1"),
    (math.pi / 2, 0.0, +1, "x axis, +1"),
    (math.pi / 2, math.pi / 2, -1, "y axis, -1"),
]:
    pi_matrix = projector(BlochDirection(theta, phi), r)
    print(f"{label}:")
    print(np.round(pi_matrix, 6))

print("\n== Dense route vs closed form ==")
worst = 0.0
for _ in range(500):
    n = int(rng.integers(2, 7))
    sc = GhzScenario(n, float(rng.uniform(0, math.pi / 4)))
    ctx = MeasurementContext.from_angles(
        rng.uniform(0, math.pi, n), rng.uniform(0, 2 * math.pi, n)
    )
    pat = OutcomePattern(tuple(int(s) for s in rng.choice((-1, 1), n)))
    dense = joint_prob_dense(ghz_state(sc), ctx, pat)
    closed = joint_prob_ghz(sc, ctx, pat)
    worst = max(worst, abs(dense - closed))
print(f"largest |dense - closed| over 500 random configurations: {worst:.3e}")

print("\n== Completeness ==")
ctx = MeasurementContext.from_angles(
    rng.uniform(0, math.pi, 3), rng.uniform(0, 2 * math.pi, 3)
)
total = sum(joint_prob_dense(state, ctx, p) for p in all_outcome_patterns(3))
print(f"sum over all 8 outcome patterns: {total:.15f}")

print("\n== Phases only enter through their sum ==")
sc = GhzScenario(2, math.pi / 5 / 2)
pat = OutcomePattern((1, -1))
base = MeasurementContext.from_angles([1.1, 2.0], [0.7, 1.9])
shifted = MeasurementContext.from_angles([1.1, 2.0], [0.7 + 0.4, 1.9 - 0.4])
print(f"p(base)    = {joint_prob_ghz(sc, base, pat):.15f}")
print(f"p(shifted) = {joint_prob_ghz(sc, shifted, pat):.15f}")

print("\n== Perfect anticorrelation along y at maximal entanglement ==")
sc = GhzScenario(2, math.pi / 4)
ctx = MeasurementContext.from_angles([math.pi / 2] * 2, [math.pi / 2] * 2)
print(f"p(+1, +1 | y, y) = {joint_prob_ghz(sc, ctx, OutcomePattern((1, 1))):.2e}")
