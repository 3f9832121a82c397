#!/usr/bin/env python3
"""Bell-expression maxima for GHZ states and the bounds they imply.

The two-setting correlation expression built by the standard two-term
recursion (CHSH for two parties) is maximized numerically over every
party's pair of measurement directions.  Any Bell inequality also caps the
local content from above via (P_NS* - P_Q*)/(P_NS* - P_L*).
"""

import math

from ghzlocal import GhzScenario, InequalityConstants, mabk_quantum_max, upper_from_inequality

print("== Generic inequality-based cap ==")
chsh = InequalityConstants(p_local=2.0, p_ns=4.0, p_quantum=2.0 * math.sqrt(2.0))
print(f"CHSH constants (2, 4, 2*sqrt2) cap the local content at "
      f"{upper_from_inequality(chsh):.6f}")

print("\n== Two parties ==")
report = mabk_quantum_max(GhzScenario(2, math.pi / 4), restarts=8, seed=0)
print(f"maximally entangled: max = {report.quantum_max:.9f} "
      f"(Tsirelson value sqrt2 = {math.sqrt(2):.9f})")
print(f"violates: {report.violates}, implied upper bound: {report.implied_upper}")

for alpha in (0.1, 0.2, 0.3):
    report = mabk_quantum_max(GhzScenario(2, alpha), restarts=6, seed=0)
    exact = math.sqrt(1.0 + math.sin(2 * alpha) ** 2)
    print(f"alpha={alpha:.2f}: max = {report.quantum_max:.6f} "
          f"(closed form sqrt(1 + sin(2a)^2) = {exact:.6f}) "
          f"-> every entangled two-qubit state violates")

print("\n== Three parties ==")
threshold = 0.5 * math.asin(0.5)
print(f"no-violation threshold: sin(2a) <= 1/2, i.e. a <= {threshold:.6f}")
for alpha, label in (
    (0.5 * threshold, "inside the region"),
    (threshold, "at the boundary"),
    (0.5, "above the region"),
    (math.pi / 4, "maximally entangled"),
):
    report = mabk_quantum_max(GhzScenario(3, alpha), restarts=6, seed=0)
    print(f"alpha={alpha:.4f} ({label}): max = {report.quantum_max:.6f}, "
          f"violates = {report.violates}, implied upper = {report.implied_upper}")
