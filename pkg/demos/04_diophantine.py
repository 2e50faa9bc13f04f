"""
No solutions to x^4 + 4y^4 = z^2
================================

Bounded search, Diophantus' triples, and the search for a rational a with
r^2 = a^6 + 4a^2 that would make X^4 - rX - 1 split into rational quadratics.
"""

import random
import time
from fractions import Fraction

from stewart_alhazen import c2_witness_search, diophante_triple, search_biquadratic

t0 = time.perf_counter()
print("solutions up to 300:", search_biquadratic(300), f"({time.perf_counter() - t0:.2f} s)")

print([tuple(diophante_triple(a, b)) for a, b in [(2, 1), (3, 2), (4, 1), (4, 3), (5, 2)]])

rng = random.Random(0)
rs = [Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(200)]
print("C2 witnesses among 200 random r:", [r for r in rs if c2_witness_search(r) is not None])
