"""Trace the points on the torus at separation 2pi/3 from an anchor and
count the pieces as the anchor moves toward the pinch."""

import math

from sicsets.torus import pinch_discriminant_threshold, separation_curve

print(f"transition at |tan theta| = sqrt(5/27) = {pinch_discriminant_threshold():.6f}\n")
for t in (0.0, 0.2, 0.4, 0.43, 0.44, 0.6, 1.0, 3.0):
    curve = separation_curve((0.0, math.atan(t)), 800)
    print(f"tan theta = {t:<5} components {curve.components}  samples {len(curve.samples)}")
