"""Integer machinery around ``x^4 + 4y^4 = z^2``.

The equation has no solution in positive integers.  This module backs that
statement with an exhaustive bounded search, provides Diophantus' rule for
primitive Pythagorean triples, and searches for a rational ``a`` with
``r^2 = a^6 + 4a^2`` (the condition for ``X^4 - rX - 1`` to split into two
rational quadratics), which the non-existence result rules out.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError
from .exact_core import RationalLike, as_rational, exact_isqrt, rational_roots, rational_sqrt


class Triple(NamedTuple):
    x: int
    y: int
    z: int


def search_biquadratic(bound: int) -> list[Triple]:
    """Every ``(x, y, z)`` with ``1 <= x, y <= bound`` and ``x^4 + 4y^4 = z^2``.

    Ordered by ``(x, y)``.  Squareness is decided with exact integer square
    roots.
    """
    if not isinstance(bound, int) or bound < 1:
        raise DomainError(f"bound must be a positive integer, got {bound!r}")
    out = []
    fourth = [0] + [k**4 for k in range(1, bound + 1)]
    for x in range(1, bound + 1):
        x4 = fourth[x]
        for y in range(1, bound + 1):
            z = exact_isqrt(x4 + 4 * fourth[y])
            if z is not None:
                out.append(Triple(x, y, z))
    return out


def search_report(bound: int) -> dict:
    solutions = search_biquadratic(bound)
    return {
        "bound": bound,
        "solutions": [list(t) for t in solutions],
        "checked_pairs": bound * bound,
    }


def diophante_triple(a: int, b: int) -> Triple:
    """Primitive Pythagorean triple ``(a^2 - b^2, 2ab, a^2 + b^2)``.

    Requires ``a > b >= 1``, ``gcd(a, b) = 1`` and ``a``, ``b`` of opposite
    parity.
    """
    if not (isinstance(a, int) and isinstance(b, int)):
        raise DomainError("a and b must be integers")
    if not a > b >= 1:
        raise DomainError(f"need a > b >= 1, got a={a}, b={b}")
    if math.gcd(a, b) != 1:
        raise DomainError(f"a and b must be coprime, got gcd {math.gcd(a, b)}")
    if (a - b) % 2 == 0:
        raise DomainError("a and b must have opposite parity")
    return Triple(a * a - b * b, 2 * a * b, a * a + b * b)


def c2_witness_search(r: RationalLike) -> Fraction | None:
    """Rational ``a`` of the sign of ``r`` with ``r^2 = a^6 + 4a^2``, if any.

    ``a^2`` must be a positive rational root of ``Y^3 + 4Y - r^2`` that is
    itself a rational square.  Never found in practice.
    """
    from .stewart import companion_cubic

    r = as_rational(r)
    if r == 0:
        raise DomainError("r must be a nonzero rational")
    sign = 1 if r > 0 else -1
    for y0 in sorted(rational_roots(companion_cubic(r))):
        if y0 <= 0:
            continue
        root = rational_sqrt(y0)
        if root is not None:
            return sign * root
    return None


def corollary_triple(r: RationalLike, a: RationalLike) -> Triple:
    """Integer solution of ``X^4 + 4Y^4 = Z^2`` built from a C2 witness.

    With ``a = y/z`` in lowest terms, ``(y, z, z^2 r / a)`` would solve the
    biquadratic equation.  Raises unless ``a`` really is a witness for ``r``,
    so in practice it always raises.
    """
    r, a = as_rational(r), as_rational(a)
    if r == 0 or a == 0:
        raise DomainError("r and a must be nonzero")
    if r * r != a**6 + 4 * a**2:
        raise DomainError(f"{a} is not a witness of r^2 = a^6 + 4a^2 for r = {r}")
    y, z = abs(a.numerator), a.denominator
    big = z * z * r / a
    if big.denominator != 1:
        raise ArithmeticError("z^2 r / a is not an integer")
    return Triple(y, z, abs(int(big)))
