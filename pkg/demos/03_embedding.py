"""
Every X^4 - rX - 1 comes from a mirror
======================================

For each admissible r there are points A, B whose mirror quartic is a scalar
multiple of X^4 - rX - 1, so the reflection points of that configuration are
as non-constructible as the roots.
"""

from fractions import Fraction

from stewart_alhazen import alhazen_quartic, solve_mirror, stewart_roots, stewart_scenario

for r in (1, 3, Fraction(-8, 3)):
    scenario, lam = stewart_scenario(r)
    q = alhazen_quartic(scenario.A, scenario.B)
    print(f"r = {r}: A = {tuple(map(str, scenario.A))}, B = {tuple(map(str, scenario.B))}, lambda = {lam}")
    print("  Q =", [str(c) for c in q.coefficients])
    zs = sorted(sol.z for sol in solve_mirror(scenario))
    print("  mirror parameters:", [round(z, 9) for z in zs])
    print("  quartic real roots:", [round(x.approx, 9) for x in stewart_roots(r).real_roots])

###############################################################################
# r = 4 and r = -4 have no such configuration.
for r in (4, -4):
    try:
        stewart_scenario(r)
    except ValueError as exc:
        print(f"r = {r}: {exc}")
