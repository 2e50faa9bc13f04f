"""Floating-point root finding with residuals checked against exact data.

Two entry points:

* :func:`monotone_root` for the strictly increasing cubic ``Y^3 + 4Y - r^2``
  (bisection on a guaranteed bracket, then Newton polishing);
* :func:`quartic_real_roots` for any polynomial of degree at most four
  (companion-matrix eigenvalues, Newton polishing, clustering of near
  multiple roots).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError
from .exact_core import Polynomial, RationalLike, as_rational, poly_eval, rational_roots


@dataclass(frozen=True)
class Tolerance:
    abs_root: float = 1e-12
    residual: float = 1e-10
    merge: float = 1e-7

    def __post_init__(self):
        for name in ("abs_root", "residual", "merge"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"tolerance {name} must be positive, got {value!r}")


DEFAULT_TOLERANCE = Tolerance()


class RealRoot(NamedTuple):
    value: float
    multiple: bool
    residual: float


def _companion_cubic(r: Fraction) -> Polynomial:
    return Polynomial([-r * r, 4, 0, 1])


def monotone_root_bounded(r: RationalLike, tol: Tolerance = DEFAULT_TOLERANCE):
    """Root of ``Y^3 + 4Y - r^2`` together with a rigorous error bound.

    Returns ``(root, bound)`` where ``root`` is a Fraction (bound 0) when the
    root is rational and a float otherwise.  Since the derivative is at least
    4 everywhere, ``|R(t)| / 4`` bounds the distance to the true root; the
    residual is evaluated exactly on the float ``t``.
    """
    r = as_rational(r)
    if r == 0:
        raise DomainError("r must be a nonzero rational")
    cubic = _companion_cubic(r)
    exact = rational_roots(cubic)
    if exact:
        (root,) = exact
        return root, 0.0

    r2 = float(r * r)
    lo, hi = 0.0, r2 / 4.0
    f = lambda y: (y * y + 4.0) * y - r2  # noqa: E731
    for _ in range(2000):
        if hi - lo <= tol.abs_root * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    for _ in range(8):
        step = f(t) / (3.0 * t * t + 4.0)
        nxt = t - step
        if not (0.0 < nxt <= r2 / 4.0) or nxt == t:
            break
        t = nxt

    def exact_residual(y: float) -> Fraction:
        return abs(poly_eval(cubic, Fraction(y)))

    best = min(
        (t, math.nextafter(t, math.inf), math.nextafter(t, 0.0)),
        key=exact_residual,
    )
    return best, float(exact_residual(best)) / 4.0


def monotone_root(r: RationalLike, tol: Tolerance = DEFAULT_TOLERANCE):
    """The unique real root of ``Y^3 + 4Y - r^2``.

    The root lies in ``(0, r^2/4]``.  A Fraction is returned when the root is
    rational, otherwise the closest double found by bisection and Newton.
    """
    return monotone_root_bounded(r, tol)[0]


def _strip(coeffs_desc: Sequence) -> list[float]:
    exact = [as_rational(c) if not isinstance(c, float) else c for c in coeffs_desc]
    while exact and exact[0] == 0:
        exact.pop(0)
    return [float(c) for c in exact]


def _relative_residual(c: np.ndarray, x: float) -> float:
    value = 0.0
    scale = 0.0
    ax = abs(x)
    for coef in c:
        value = value * x + coef
        scale = scale * ax + abs(coef)
    return abs(value) / scale if scale else 0.0


def _newton(c: np.ndarray, dc: np.ndarray, x0: float, max_iter: int = 60) -> float:
    x = best = x0
    best_res = _relative_residual(c, x0)
    window = 1e-3 * max(1.0, abs(x0))
    for _ in range(max_iter):
        d = np.polyval(dc, x)
        if d == 0:
            break
        nxt = x - np.polyval(c, x) / d
        if not math.isfinite(nxt) or abs(nxt - x0) > window:
            break
        res = _relative_residual(c, nxt)
        if res < best_res:
            best, best_res = nxt, res
        if nxt == x:
            break
        x = nxt
    return float(best)


def real_roots_detailed(coeffs_desc: Sequence, tol: Tolerance = DEFAULT_TOLERANCE) -> list[RealRoot]:
    """Real roots of a polynomial given highest degree first.

    Leading zeros are stripped before solving.  Residuals are relative:
    ``|p(x)| / sum |c_k| |x|^k``, which keeps the criterion meaningful for
    large roots.  Roots closer than ``tol.merge`` are averaged and marked as
    multiple.
    """
    c_list = _strip(coeffs_desc)
    if not c_list:
        raise DomainError("the zero polynomial has no isolated roots")
    if len(c_list) == 1:
        return []
    c = np.asarray(c_list, dtype=float)
    c = c / np.max(np.abs(c))
    dc = np.polyder(c)

    candidates = []
    for e in np.roots(c):
        if abs(e.imag) > 1e-3 * max(1.0, abs(e)):
            continue
        x = _newton(c, dc, float(e.real))
        if _relative_residual(c, x) <= tol.residual:
            candidates.append(x)
    candidates.sort()

    clusters: list[list[float]] = []
    for x in candidates:
        if clusters and abs(x - clusters[-1][-1]) <= tol.merge * max(1.0, abs(x)):
            clusters[-1].append(x)
        else:
            clusters.append([x])

    out = []
    for group in clusters:
        x = float(np.mean(group)) if len(group) > 1 else group[0]
        out.append(RealRoot(x, len(group) > 1, _relative_residual(c, x)))
    return out


def quartic_real_roots(coeffs_desc: Sequence, tol: Tolerance = DEFAULT_TOLERANCE) -> list[float]:
    """Ascending real roots of ``c4 z^4 + ... + c0`` (coefficients descending)."""
    if len(coeffs_desc) > 5:
        raise DomainError("at most five coefficients (degree <= 4) expected")
    return [root.value for root in real_roots_detailed(coeffs_desc, tol)]
