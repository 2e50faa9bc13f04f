"""
Reflection points on a circular mirror
======================================

Solve for the points I of a circle where a ray from A reflects through B, and
draw the result.
"""

from fractions import Fraction
from pathlib import Path

from stewart_alhazen import MirrorScenario, alhazen_quartic, solve_mirror
from stewart_alhazen.figure import render_svg

half = Fraction(1, 2)

###############################################################################
# A symmetric configuration: the two solutions lie on the diagonal.
scenario = MirrorScenario(A=(half, 0), B=(0, half))
print("Q coefficients:", [str(c) for c in alhazen_quartic(scenario.A, scenario.B).coefficients])
for sol in solve_mirror(scenario):
    print(f"  I = ({sol.point.x:+.6f}, {sol.point.y:+.6f})  z = {sol.z:+.6f}  {sol.classification.value}")

###############################################################################
# A and B on a diameter: Q drops to degree 3 and (-1, 0), which the
# tangent-half-angle parameter cannot reach, joins the solution set.
for sol in solve_mirror(MirrorScenario(A=(half, 0), B=(-half, 0))):
    print(f"  I = ({sol.point.x:+.3f}, {sol.point.y:+.3f})  z = {sol.z}")

###############################################################################
# Points outside the circle give tangent-bisector solutions as well.
outside = MirrorScenario(A=(3, 1), B=(-2, 2), center=(0, 0), radius=1)
solutions = solve_mirror(outside)
for sol in solutions:
    print(f"  I = ({sol.point.x:+.6f}, {sol.point.y:+.6f})  {sol.classification.value}")

Path("mirror_outside.svg").write_text(render_svg(outside, solutions))
print("wrote mirror_outside.svg")
