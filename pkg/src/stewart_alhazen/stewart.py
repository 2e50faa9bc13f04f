"""Analysis of the quartic family ``S(X) = X^4 - rX - 1``.

Over the real algebraic numbers ``S`` splits as

    (X^2 + aX + b)(X^2 - aX + b_bar),

where ``a^2`` is the unique real root of the companion cubic
``R(Y) = Y^3 + 4Y - r^2``, ``a`` takes the sign of ``r`` and
``2b, 2b_bar = a^2 +/- sqrt(a^4 + 4)``.  The first factor carries the complex
pair, the second the two real roots.

Constructibility of the real roots of an irreducible quartic is decided by
the reducibility of its resolvent cubic.  We use the resolvent

    rho(W) = W^3 + 2pW^2 + (p^2 - 4c)W - q^2

of the depressed quartic ``X^4 + pX^2 + qX + c``; for ``S`` it coincides with
``R``.  The other common convention, ``W^3 + 4W + r^2 = -R(-W)``, has the
negated roots and hence the same reducibility.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact_core import (
    Polynomial,
    RationalLike,
    as_rational,
    format_rational,
    rational_roots,
    rational_sqrt,
)
from .numerics import DEFAULT_TOLERANCE, Tolerance, monotone_root_bounded, quartic_real_roots

_EPS = 2.0**-52


def _nonzero_r(r: RationalLike) -> Fraction:
    r = as_rational(r)
    if r == 0:
        raise DomainError("r must be a nonzero rational")
    return r


def stewart_polynomial(r: RationalLike) -> Polynomial:
    """``X^4 - rX - 1``."""
    r = _nonzero_r(r)
    return Polynomial([-1, -r, 0, 0, 1])


@dataclass(frozen=True)
class ExactOrApprox:
    """A real number known exactly (rational) or only approximately.

    ``approx`` is always populated; ``error_bound`` bounds ``|approx - value|``.
    """

    exact: Fraction | None
    approx: float
    error_bound: float = 0.0

    @classmethod
    def of_exact(cls, value: RationalLike) -> "ExactOrApprox":
        value = as_rational(value)
        approx = float(value)
        return cls(value, approx, abs(approx) * _EPS)

    @classmethod
    def of_approx(cls, approx: float, error_bound: float) -> "ExactOrApprox":
        return cls(None, float(approx), float(error_bound))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def __float__(self) -> float:
        return self.approx

    def to_json(self) -> dict:
        return {
            "exact": None if self.exact is None else format_rational(self.exact),
            "approx": self.approx,
            "error_bound": self.error_bound,
        }


@dataclass(frozen=True)
class FactorData:
    a_squared: ExactOrApprox
    a: ExactOrApprox
    b: ExactOrApprox
    b_bar: ExactOrApprox


@dataclass(frozen=True)
class ReducibilityVerdict:
    reducible: bool
    c1_witness: Fraction | None
    c2_witness: Fraction | None = None


class Constructibility(str, enum.Enum):
    CONSTRUCTIBLE = "Constructible"
    NOT_CONSTRUCTIBLE = "NotConstructible"
    REDUCIBLE_CASE = "ReducibleCase"


class GaloisGroup(str, enum.Enum):
    S4 = "S4"
    A4 = "A4"
    V4 = "V4"
    D4_OR_C4 = "D4orC4"
    REDUCIBLE = "Reducible"


@dataclass(frozen=True)
class GaloisClass:
    group: GaloisGroup

    @property
    def order_is_power_of_two(self) -> bool:
        return self.group in (GaloisGroup.V4, GaloisGroup.D4_OR_C4)


@dataclass(frozen=True)
class RootSet:
    real_roots: tuple[ExactOrApprox, ExactOrApprox]
    complex_pair: tuple[ExactOrApprox, ExactOrApprox]  # (real part, positive imaginary part)

    def complex_roots(self) -> tuple[complex, complex]:
        re, im = self.complex_pair
        return complex(re.approx, im.approx), complex(re.approx, -im.approx)


def companion_cubic(r: RationalLike) -> Polynomial:
    """``R(Y) = Y^3 + 4Y - r^2``, whose real root is ``a^2``."""
    r = _nonzero_r(r)
    return Polynomial([-r * r, 4, 0, 1])


def resolvent_cubic(p: RationalLike, q: RationalLike, c: RationalLike) -> Polynomial:
    """Resolvent ``W^3 + 2pW^2 + (p^2 - 4c)W - q^2`` of ``X^4 + pX^2 + qX + c``.

    Its roots are ``(x1 + x2)^2``, ``(x1 + x3)^2`` and ``(x1 + x4)^2`` for the
    quartic's roots ``x_i``; for ``X^4 - rX - 1`` it is the companion cubic.
    """
    p, q, c = as_rational(p), as_rational(q), as_rational(c)
    return Polynomial([-q * q, p * p - 4 * c, 2 * p, 1])


def depressed_quartic_discriminant(p: RationalLike, q: RationalLike, c: RationalLike) -> Fraction:
    p, q, c = as_rational(p), as_rational(q), as_rational(c)
    return (
        256 * c**3
        - 128 * p**2 * c**2
        + 144 * p * q**2 * c
        - 27 * q**4
        + 16 * p**4 * c
        - 4 * p**3 * q**2
    )


def stewart_discriminant(r: RationalLike) -> Fraction:
    """Discriminant of ``X^4 - rX - 1``, namely ``-27 r^4 - 256``."""
    r = _nonzero_r(r)
    return depressed_quartic_discriminant(0, -r, -1)


def _sqrt_bounded(x: float, err: float) -> tuple[float, float]:
    root = math.sqrt(x)
    # first-order propagation plus rounding of the sqrt itself
    return root, err / (2.0 * root) + 2 * root * _EPS if root else math.sqrt(err)


def factor_parameters(r: RationalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> FactorData:
    """``a^2``, ``a``, ``b`` and ``b_bar`` of the real quadratic factorization.

    Entries are exact whenever the radicals involved are rational.  ``b_bar``
    is computed as ``-1/b`` (since ``b * b_bar = -1``) to avoid cancellation.
    """
    r = _nonzero_r(r)
    sign = 1 if r > 0 else -1
    root, root_err = monotone_root_bounded(r, tol)

    if isinstance(root, Fraction):
        a_squared = ExactOrApprox.of_exact(root)
        a_exact = rational_sqrt(root)
    else:
        a_squared = ExactOrApprox.of_approx(root, root_err + abs(root) * _EPS)
        a_exact = None

    if a_exact is not None:
        a_val = sign * a_exact
        w = r / a_val  # sqrt(a^4 + 4) is r/a
        b_exact = (root + w) / 2
        return FactorData(
            a_squared,
            ExactOrApprox.of_exact(a_val),
            ExactOrApprox.of_exact(b_exact),
            ExactOrApprox.of_exact(-1 / b_exact),
        )

    t = a_squared.approx
    t_err = a_squared.error_bound
    a_abs, a_err = _sqrt_bounded(t, t_err)
    w = math.hypot(t, 2.0)
    w_err = t_err * t / w + 2 * w * _EPS
    b = 0.5 * (t + w)
    b_err = 0.5 * (t_err + w_err) + 2 * b * _EPS
    b_bar = -1.0 / b
    b_bar_err = b_err / (b * b) + 2 * abs(b_bar) * _EPS
    return FactorData(
        a_squared,
        ExactOrApprox.of_approx(sign * a_abs, a_err),
        ExactOrApprox.of_approx(b, b_err),
        ExactOrApprox.of_approx(b_bar, b_bar_err),
    )


def stewart_roots(r: RationalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> RootSet:
    """The two real roots and the complex pair of ``X^4 - rX - 1``.

    Real roots are ``(a +/- sqrt(2 sqrt(a^4+4) - a^2)) / 2``, the complex pair
    ``(-a +/- i sqrt(2 sqrt(a^4+4) + a^2)) / 2``.  A rational real root is
    reported exactly.
    """
    r = _nonzero_r(r)
    data = factor_parameters(r, tol)
    t, a = data.a_squared.approx, data.a.approx
    err = data.a_squared.error_bound + data.a.error_bound
    w = math.hypot(t, 2.0)
    disc = math.sqrt(2.0 * w - t)
    # avoid cancellation: the two real roots multiply to b_bar
    big = 0.5 * (a + math.copysign(disc, a))
    small = data.b_bar.approx / big
    reals = sorted((big, small))

    spoly = stewart_polynomial(r)
    exact_roots = sorted(rational_roots(spoly))
    out = []
    for x in reals:
        match = next((q for q in exact_roots if abs(float(q) - x) <= 1e-9 * max(1.0, abs(x))), None)
        if match is not None:
            out.append(ExactOrApprox.of_exact(match))
            continue
        value = spoly(x)
        scale = x**4 + abs(float(r) * x) + 1.0
        if abs(value) > tol.residual * scale:
            raise ArithmeticError(f"real root {x!r} failed the residual check")
        out.append(ExactOrApprox.of_approx(x, 4 * err + 8 * abs(x) * _EPS))

    re = ExactOrApprox.of_approx(-a / 2.0, data.a.error_bound / 2.0)
    im_val = 0.5 * math.sqrt(2.0 * w + t)
    im = ExactOrApprox.of_approx(im_val, 2 * err + 8 * im_val * _EPS)
    return RootSet((out[0], out[1]), (re, im))


def reducibility_verdict(r: RationalLike) -> ReducibilityVerdict:
    """Decide reducibility of ``S`` over the rationals.

    ``S`` splits off a linear factor exactly when it has a rational root
    ``s`` (equivalently ``r = s^3 - 1/s``).  A split into two rational
    quadratics would need a rational ``a`` with ``r^2 = a^6 + 4a^2``; that
    search is run as well and is expected to come back empty.
    """
    from .diophantine import c2_witness_search

    r = _nonzero_r(r)
    roots = sorted(rational_roots(stewart_polynomial(r)), key=lambda q: (abs(q), q))
    c1 = roots[0] if roots else None
    c2 = c2_witness_search(r)
    return ReducibilityVerdict(reducible=c1 is not None or c2 is not None, c1_witness=c1, c2_witness=c2)


def constructibility_verdict(r: RationalLike) -> Constructibility:
    """Ruler-and-compass status shared by both real roots of ``S``.

    Only meaningful for irreducible ``S``: constructible exactly when the
    resolvent cubic has a rational root.
    """
    r = _nonzero_r(r)
    if reducibility_verdict(r).reducible:
        return Constructibility.REDUCIBLE_CASE
    if rational_roots(resolvent_cubic(0, -r, -1)):
        return Constructibility.CONSTRUCTIBLE
    return Constructibility.NOT_CONSTRUCTIBLE


def galois_class(r: RationalLike) -> GaloisClass:
    r = _nonzero_r(r)
    if reducibility_verdict(r).reducible:
        return GaloisClass(GaloisGroup.REDUCIBLE)
    n_rational = len(rational_roots(resolvent_cubic(0, -r, -1)))
    if n_rational == 3:
        return GaloisClass(GaloisGroup.V4)
    if n_rational >= 1:
        return GaloisClass(GaloisGroup.D4_OR_C4)
    if rational_sqrt(stewart_discriminant(r)) is not None:
        return GaloisClass(GaloisGroup.A4)
    return GaloisClass(GaloisGroup.S4)


def analyze(r: RationalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> dict:
    """Full JSON-ready report for one value of ``r``."""
    r = _nonzero_r(r)
    data = factor_parameters(r, tol)
    roots = stewart_roots(r, tol)
    verdict = reducibility_verdict(r)
    cubic = companion_cubic(r)
    return {
        "r": format_rational(r),
        "polynomial": stewart_polynomial(r).to_text("X"),
        "companion_cubic": {
            "coefficients": [format_rational(c) for c in cubic.coefficients],
            "text": cubic.to_text("Y"),
        },
        "resolvent_convention": "W^3 + 2pW^2 + (p^2 - 4c)W - q^2 (equals R(W); -R(-W) has the same reducibility)",
        "a_squared": data.a_squared.to_json(),
        "a": data.a.to_json(),
        "b": data.b.to_json(),
        "b_bar": data.b_bar.to_json(),
        "real_roots": [x.to_json() for x in roots.real_roots],
        "complex_pair": {"re": roots.complex_pair[0].to_json(), "im": roots.complex_pair[1].to_json()},
        "reducible": verdict.reducible,
        "c1_witness": None if verdict.c1_witness is None else format_rational(verdict.c1_witness),
        "c2_witness": None if verdict.c2_witness is None else format_rational(verdict.c2_witness),
        "constructibility": constructibility_verdict(r).value,
        "galois_class": galois_class(r).group.value,
        "discriminant": format_rational(stewart_discriminant(r)),
    }


def check_identity_numeric(r: RationalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Largest coefficient error of ``(X^2+aX+b)(X^2-aX+b_bar)`` against ``S``."""
    r = _nonzero_r(r)
    d = factor_parameters(r, tol)
    a, b, bb = d.a.approx, d.b.approx, d.b_bar.approx
    expanded = (b * bb, a * bb - a * b, b + bb - a * a, 0.0, 1.0)
    target = (-1.0, -float(r), 0.0, 0.0, 1.0)
    return max(abs(x - y) for x, y in zip(expanded, target))


def stewart_real_roots_numeric(r: RationalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> list[float]:
    """Real roots straight from the generic quartic solver (cross-check path)."""
    r = _nonzero_r(r)
    return quartic_real_roots([1, 0, 0, -r, -1], tol)
