"""
The quartics X^4 - rX - 1
=========================

Factor parameters, roots, reducibility and ruler-and-compass status for a
handful of values of r.
"""

from fractions import Fraction

from stewart_alhazen import (
    constructibility_verdict,
    factor_parameters,
    galois_class,
    reducibility_verdict,
    stewart_roots,
)

###############################################################################
# r = 1 is Stewart's original example: irreducible, Galois group S4, so neither
# real root can be constructed.
for r in (1, 2, 4, Fraction(15, 2)):
    data = factor_parameters(r)
    roots = stewart_roots(r)
    verdict = reducibility_verdict(r)
    print(f"r = {r}")
    print(f"  a^2 = {data.a_squared.exact if data.a_squared.is_exact else data.a_squared.approx}")
    print(f"  real roots: {[str(x.exact) if x.is_exact else round(x.approx, 6) for x in roots.real_roots]}")
    print(f"  reducible: {verdict.reducible} (rational root {verdict.c1_witness})")
    print(f"  {constructibility_verdict(r).value}, Galois class {galois_class(r).group.value}")

###############################################################################
# r = 4: a^2 = 2 is rational, the resolvent has a rational root and the real
# roots (a +/- sqrt(4 sqrt 2 - 2))/2 with a = sqrt 2 are constructible.
#
# Integer r never gives a reducible quartic, primes never give a constructible
# one:
print(all(not reducibility_verdict(r).reducible for r in range(1, 101)))
print({constructibility_verdict(p).value for p in (2, 3, 5, 7, 11, 13, 17, 19)})
