"""Exact rational and univariate polynomial arithmetic.

Rationals are :class:`fractions.Fraction` instances, which are always stored
in lowest terms with a positive denominator.  :class:`Polynomial` is a small
immutable dense polynomial over those rationals, lowest degree first.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from sympy import divisors

from .errors import DomainError

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")
_DECIMAL_RE = re.compile(r"^-?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?$")


def make_rational(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` reduced, with the sign carried by the numerator."""
    if den == 0:
        raise DomainError("denominator must be nonzero")
    return Fraction(num, den)


def as_rational(value: RationalLike | float) -> Fraction:
    """Coerce ints, Fractions, rational strings and floats to a Fraction.

    Floats are converted exactly (every binary double is a dyadic rational).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"not a finite number: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value, allow_decimal=True)
    raise DomainError(f"not a rational number: {value!r}")


def parse_rational(text: str, allow_decimal: bool = False) -> Fraction:
    """Parse ``"-8/3"``-style text; with ``allow_decimal`` also ``"0.125"``.

    Decimal input is expanded exactly in base 10, never through a float.
    """
    text = text.strip()
    if _RATIONAL_RE.match(text):
        num, _, den = text.partition("/")
        return make_rational(int(num), int(den) if den else 1)
    if allow_decimal and _DECIMAL_RE.match(text):
        return Fraction(text)
    raise DomainError(f"malformed rational literal: {text!r}")


def format_rational(q: Fraction) -> str:
    """Emit the reduced text form accepted by :func:`parse_rational`."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def exact_isqrt(n: int) -> int | None:
    """Return the integer square root of ``n`` if ``n`` is a perfect square."""
    if n < 0:
        return None
    root = math.isqrt(n)
    return root if root * root == n else None


def rational_sqrt(q: RationalLike) -> Fraction | None:
    """Exact nonnegative square root of ``q``, or ``None`` if it is irrational.

    Negative inputs give ``None`` as well.
    """
    q = as_rational(q)
    if q < 0:
        return None
    num = exact_isqrt(q.numerator)
    den = exact_isqrt(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


class Polynomial:
    """Immutable dense univariate polynomial with rational coefficients.

    ``Polynomial([c0, c1, c2])`` is ``c0 + c1*X + c2*X**2``.  Trailing zero
    coefficients are dropped, so the zero polynomial has no coefficients and
    degree ``-1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def from_descending(cls, coefficients: Iterable[RationalLike]) -> "Polynomial":
        return cls(list(coefficients)[::-1])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __call__(self, x):
        """Exact for int/Fraction arguments, floating for float/complex."""
        if isinstance(x, (int, Fraction)):
            return poly_eval(self, x)
        acc = 0.0 * x
        for c in reversed(self._coeffs):
            acc = acc * x + float(c)
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "Polynomial":
        factor = as_rational(factor)
        return Polynomial(c * factor for c in self._coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self._coeffs) if k)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def to_text(self, var: str = "X") -> str:
        """Human-readable form, highest degree first: ``X^4 - 15/2*X - 1``."""
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Exact Horner evaluation of ``p`` at the rational ``x``."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def poly_eval_float(p: Polynomial | Sequence[float], x: float) -> float:
    """Floating Horner evaluation; accepts a Polynomial or ascending floats."""
    coeffs = p.coefficients if isinstance(p, Polynomial) else p
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + float(c)
    return acc


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact product by direct convolution."""
    if p.is_zero() or q.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(p.coefficients) + len(q.coefficients) - 1)
    for i, a in enumerate(p.coefficients):
        if a == 0:
            continue
        for j, b in enumerate(q.coefficients):
            out[i + j] += a * b
    return Polynomial(out)


def integer_primitive(p: Polynomial) -> list[int]:
    """Ascending integer coefficients of ``p`` with denominators cleared and
    content removed, leading coefficient made positive."""
    if p.is_zero():
        raise DomainError("zero polynomial has no primitive part")
    lcm = 1
    for c in p.coefficients:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p.coefficients]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    if ints[-1] < 0:
        content = -content
    return [c // content for c in ints]


def rational_roots(p: Polynomial) -> set[Fraction]:
    """All distinct rational roots of ``p``.

    Powers of ``X`` are stripped first (contributing the root 0); the rest is
    made integral and every candidate ``±n/d`` with ``n`` dividing the constant
    term and ``d`` dividing the leading term is checked by exact evaluation.
    """
    if p.is_zero():
        raise DomainError("the zero polynomial vanishes everywhere")
    roots: set[Fraction] = set()
    coeffs = list(p.coefficients)
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    core = Polynomial(coeffs[shift:])
    if core.degree < 1:
        return roots
    ints = integer_primitive(core)
    nums = divisors(abs(ints[0]))
    dens = divisors(abs(ints[-1]))
    for d in dens:
        for n in nums:
            if math.gcd(n, d) != 1:
                continue
            for cand in (Fraction(n, d), Fraction(-n, d)):
                if _int_horner(ints, cand) == 0:
                    roots.add(cand)
    return roots


def _int_horner(ints: Sequence[int], x: Fraction) -> int:
    # evaluates d**deg * p(n/d) in integers, zero iff p(n/d) == 0
    n, d = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(ints):
        acc = acc * n + c * dpow
        dpow *= d
    return acc
