"""The circular mirror (Alhazen) problem.

Given the unit circle and points ``A = (s, t)``, ``B = (u, v)``, the points
``I`` of the circle at which the lines ``IO`` (normal) and ``IT`` (tangent)
bisect the angle between ``IA`` and ``IB`` lie on the conic

    H:  (sv + tu)(y^2 - x^2) + 2(su - tv)xy + (t + v)x - (s + u)y = 0.

Substituting ``x = (1 - z^2)/(1 + z^2)``, ``y = 2z/(1 + z^2)`` turns ``H``
into ``-Q(z) / (1 + z^2)^2`` with the quartic

    Q(z) = (sv + tu + t + v) z^4 + 2(2su - 2tv + s + u) z^3 - 6(sv + tu) z^2
           - 2(2su - 2tv - s - u) z + (sv + tu - t - v).

The point ``(-1, 0)`` has no finite parameter; since ``H(-1, 0) = -c4`` it
belongs to ``H`` exactly when ``Q`` drops degree.

Both kinds of harmonic solution are returned: ``TrueReflection`` when the
normal bisects the angle ``AIB`` (the reflection law), ``TangentBisector``
when the tangent does.  No visibility test is made.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DegenerateConfiguration, DomainError, EmbeddingDegenerate, InvalidScenario
from .exact_core import Polynomial, RationalLike, as_rational, format_rational
from .numerics import DEFAULT_TOLERANCE, Tolerance, real_roots_detailed


class Point(NamedTuple):
    x: object
    y: object

    def exact(self) -> "Point":
        return Point(as_rational(self.x), as_rational(self.y))

    def as_float(self) -> "Point":
        return Point(float(self.x), float(self.y))


ORIGIN = Point(Fraction(0), Fraction(0))


def _point(p: Sequence) -> Point:
    x, y = p
    return Point(as_rational(x), as_rational(y))


@dataclass(frozen=True)
class MirrorScenario:
    """A circle of given center and radius with a source ``A`` and target ``B``.

    All coordinates are stored as exact rationals (floats are converted
    exactly).
    """

    A: Point
    B: Point
    center: Point = ORIGIN
    radius: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "A", _point(self.A))
        object.__setattr__(self, "B", _point(self.B))
        object.__setattr__(self, "center", _point(self.center))
        object.__setattr__(self, "radius", as_rational(self.radius))
        if self.radius <= 0:
            raise InvalidScenario(f"radius must be positive, got {self.radius}")
        if self.A == self.B == self.center:
            raise DegenerateConfiguration("A and B both at the center")

    def normalized(self) -> tuple[Point, Point]:
        """``A`` and ``B`` after mapping the circle onto the unit circle."""
        cx, cy = self.center
        k = self.radius
        return (
            Point((self.A.x - cx) / k, (self.A.y - cy) / k),
            Point((self.B.x - cx) / k, (self.B.y - cy) / k),
        )

    def to_world(self, p: Point) -> Point:
        k = float(self.radius)
        return Point(float(self.center.x) + k * float(p.x), float(self.center.y) + k * float(p.y))

    def to_json(self) -> dict:
        fmt = lambda p: [format_rational(p.x), format_rational(p.y)]  # noqa: E731
        return {
            "center": fmt(self.center),
            "radius": format_rational(self.radius),
            "A": fmt(self.A),
            "B": fmt(self.B),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MirrorScenario":
        try:
            return cls(
                A=_point(doc["A"]),
                B=_point(doc["B"]),
                center=_point(doc.get("center", ["0", "0"])),
                radius=as_rational(doc.get("radius", "1")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, (InvalidScenario, DegenerateConfiguration)):
                raise
            raise InvalidScenario(f"malformed scenario document: {exc}") from exc


@dataclass(frozen=True)
class AlhazenQuartic:
    c4: Fraction
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c4", "c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if not any(self.coefficients):
            raise DegenerateConfiguration("Q vanishes identically (A = B = center)")

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Highest degree first."""
        return (self.c4, self.c3, self.c2, self.c1, self.c0)

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial.from_descending(self.coefficients)

    @property
    def degree(self) -> int:
        return self.polynomial.degree


@dataclass(frozen=True)
class ConicH:
    """``h_sq (y^2 - x^2) + 2 h_xy xy + h_x x + h_y y``; no constant term."""

    h_sq: Fraction
    h_xy: Fraction
    h_x: Fraction
    h_y: Fraction

    def __call__(self, x, y):
        if isinstance(x, float) or isinstance(y, float):
            hs, hxy, hx, hy = (float(c) for c in (self.h_sq, self.h_xy, self.h_x, self.h_y))
        else:
            hs, hxy, hx, hy = self.h_sq, self.h_xy, self.h_x, self.h_y
        return hs * (y * y - x * x) + 2 * hxy * x * y + hx * x + hy * y


class Classification(str, enum.Enum):
    TRUE_REFLECTION = "TrueReflection"
    TANGENT_BISECTOR = "TangentBisector"


@dataclass(frozen=True)
class VerificationReport:
    residual_circle: float
    residual_H: float
    harmonic_residual: float | None  # None when the cross-ratio is 0/0
    residual_angle: float
    classification: Classification


@dataclass(frozen=True)
class ReflectionSolution:
    point: Point  # in the scenario's coordinates
    point_unit: Point  # on the unit circle, after normalization
    z: float  # math.inf for (-1, 0)
    residual_H: float
    residual_angle: float
    harmonic_residual: float | None
    classification: Classification
    multiple: bool = False

    def to_json(self) -> dict:
        return {
            "point": [float(self.point.x), float(self.point.y)],
            "z": "infinity" if math.isinf(self.z) else self.z,
            "residual_H": self.residual_H,
            "residual_angle": self.residual_angle,
            "harmonic_residual": self.harmonic_residual,
            "classification": self.classification.value,
            "multiple": self.multiple,
        }


def alhazen_quartic(A: Sequence, B: Sequence) -> AlhazenQuartic:
    """Exact coefficients of ``Q(z)`` for ``A = (s, t)``, ``B = (u, v)``."""
    s, t = _point(A)
    u, v = _point(B)
    m = s * v + t * u
    n = s * u - t * v
    return AlhazenQuartic(
        m + t + v,
        2 * (2 * n + s + u),
        -6 * m,
        -2 * (2 * n - s - u),
        m - t - v,
    )


def carrega_quartic(a: RationalLike, b: RationalLike, c: RationalLike) -> AlhazenQuartic:
    """``Q`` in the form obtained with complex numbers for ``A = (a, 0)``, ``B = (b, c)``."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    return AlhazenQuartic(
        (a + 1) * c,
        2 * (a + b + 2 * a * b),
        -6 * a * c,
        2 * (a + b - 2 * a * b),
        (a - 1) * c,
    )


def hyperbola_coefficients(A: Sequence, B: Sequence) -> ConicH:
    s, t = _point(A)
    u, v = _point(B)
    return ConicH(s * v + t * u, s * u - t * v, t + v, -(s + u))


def circle_param(z) -> Point:
    """``((1 - z^2)/(1 + z^2), 2z/(1 + z^2))``; exact for rational ``z``.

    ``z = inf`` gives the limit point ``(-1, 0)``.
    """
    if isinstance(z, (int, Fraction)):
        z = Fraction(z)
        d = 1 + z * z
        return Point((1 - z * z) / d, 2 * z / d)
    z = float(z)
    if math.isinf(z):
        return Point(-1.0, 0.0)
    if abs(z) <= 1.0:
        d = 1.0 + z * z
        return Point((1.0 - z * z) / d, 2.0 * z / d)
    w = 1.0 / z
    d = w * w + 1.0
    return Point((w * w - 1.0) / d, 2.0 * w / d)


def param_of(P: Sequence, tol: float = 1e-9):
    """Inverse of :func:`circle_param`; ``None`` for ``(-1, 0)``."""
    x, y = P
    exact = all(isinstance(c, (int, Fraction)) for c in (x, y))
    if exact:
        x, y = Fraction(x), Fraction(y)
        if x * x + y * y != 1:
            raise DomainError(f"({x}, {y}) is not on the unit circle")
        if x == -1:
            return None
        return y / (1 + x)
    x, y = float(x), float(y)
    if abs(math.hypot(x, y) - 1.0) > tol:
        raise DomainError(f"({x}, {y}) is not on the unit circle")
    if x == -1.0 and y == 0.0:
        return None
    # y/(1+x) equals (1-x)/y on the circle; pick the well-conditioned form
    return y / (1.0 + x) if x >= 0 else (1.0 - x) / y


def _homogeneous_slope(m) -> tuple:
    if m is None or (isinstance(m, float) and math.isinf(m)):
        return (1, 0)
    return (m, 1)


def _cross_ratio(h1, h2, h3, h4, exact: bool) -> float | Fraction:
    def det(p, q):
        return p[0] * q[1] - p[1] * q[0]

    pairs = [(h1, h2), (h1, h3), (h1, h4), (h2, h3), (h2, h4), (h3, h4)]
    for p, q in pairs:
        d = det(p, q)
        if exact:
            if d == 0:
                raise DegenerateConfiguration("two of the four lines coincide")
        elif abs(d) <= 1e-12 * math.hypot(*p) * math.hypot(*q):
            raise DegenerateConfiguration("two of the four lines coincide")
    return (det(h1, h3) * det(h2, h4)) / (det(h2, h3) * det(h1, h4))


def cross_ratio_slopes(m1, m2, m3, m4):
    """Cross-ratio ``((m1-m3)(m2-m4)) / ((m2-m3)(m1-m4))`` of four slopes.

    Slopes are points of the projective line; ``math.inf`` or ``None`` stands
    for a vertical line.  Coincident slopes raise DegenerateConfiguration.
    """
    slopes = (m1, m2, m3, m4)
    exact = all(isinstance(m, (int, Fraction)) or m is None for m in slopes) and not any(
        isinstance(m, float) for m in slopes
    )
    hs = []
    for m in slopes:
        h = _homogeneous_slope(m)
        hs.append(tuple(Fraction(c) for c in h) if exact else tuple(float(c) for c in h))
    return _cross_ratio(*hs, exact=exact)


def _direction_slope(d: tuple[float, float]) -> tuple[float, float]:
    # homogeneous slope [dy : dx] of a line with direction d, normalized
    n = math.hypot(d[0], d[1])
    return (d[1] / n, d[0] / n)


def _harmonic_residual(h1, h2, h3, h4) -> float | None:
    # |CR + 1| from unit homogeneous slopes; None when the ratio is 0/0
    def det(p, q):
        return p[0] * q[1] - p[1] * q[0]

    num = det(h1, h3) * det(h2, h4)
    den = det(h2, h3) * det(h1, h4)
    small = 1e-12
    if abs(den) <= small:
        return None if abs(num) <= small else math.inf
    return abs(num / den + 1.0)


def _wrap(angle: float) -> float:
    return math.remainder(angle, 2 * math.pi)


def verify_solution(A: Sequence, B: Sequence, I: Sequence, tol: float = 1e-9) -> VerificationReport:
    """Check a candidate point ``I`` of the unit circle against ``A`` and ``B``.

    Reports ``|H(I)|``, the deviation of the cross-ratio of the slopes of
    ``IA, IB, IO, IT`` from -1, and the angular defect of the reflection law
    about whichever of the normal or tangent is the better bisector.
    """
    ax, ay = (float(c) for c in A)
    bx, by = (float(c) for c in B)
    ix, iy = (float(c) for c in I)
    radius_err = abs(math.hypot(ix, iy) - 1.0)
    if radius_err > tol:
        raise DomainError(f"I = ({ix}, {iy}) is not on the unit circle")
    if math.hypot(ax - ix, ay - iy) <= tol or math.hypot(bx - ix, by - iy) <= tol:
        raise DegenerateConfiguration("I coincides with A or B")

    conic = hyperbola_coefficients(A, B)
    res_h = abs(conic(ix, iy))

    dA = (ax - ix, ay - iy)
    dB = (bx - ix, by - iy)
    dO = (-ix, -iy)
    dT = (-iy, ix)
    harmonic = _harmonic_residual(*(_direction_slope(d) for d in (dA, dB, dO, dT)))

    def angle_from_normal(d):
        return math.atan2(dO[0] * d[1] - dO[1] * d[0], dO[0] * d[0] + dO[1] * d[1])

    total = angle_from_normal(dA) + angle_from_normal(dB)
    normal_defect = abs(_wrap(total))
    tangent_defect = abs(_wrap(total - math.pi))
    if normal_defect <= tangent_defect:
        cls, defect = Classification.TRUE_REFLECTION, normal_defect
    else:
        cls, defect = Classification.TANGENT_BISECTOR, tangent_defect
    return VerificationReport(radius_err, res_h, harmonic, defect, cls)


def solve_mirror(scenario: MirrorScenario, tol: Tolerance = DEFAULT_TOLERANCE) -> list[ReflectionSolution]:
    """All points of the circle satisfying the harmonic (bisector) condition.

    Solutions are sorted by polar angle around the center.  When ``A`` or
    ``B`` lies on the circle it is itself a root of ``Q``; that spurious point
    is dropped.
    """
    if not isinstance(scenario, MirrorScenario):
        raise InvalidScenario("expected a MirrorScenario")
    A, B = scenario.normalized()
    quartic = alhazen_quartic(A, B)

    candidates: list[tuple[float, Point, bool]] = []
    for root in real_roots_detailed(quartic.coefficients, tol):
        candidates.append((root.value, circle_param(root.value), root.multiple))
    if quartic.c4 == 0:
        candidates.append((math.inf, Point(-1.0, 0.0), quartic.c3 == 0))

    Af, Bf = A.as_float(), B.as_float()
    out = []
    for z, p, multiple in candidates:
        try:
            report = verify_solution(Af, Bf, p, tol=max(1e-9, tol.abs_root))
        except DegenerateConfiguration:
            continue
        out.append(
            ReflectionSolution(
                point=scenario.to_world(p),
                point_unit=p,
                z=z,
                residual_H=report.residual_H,
                residual_angle=report.residual_angle,
                harmonic_residual=report.harmonic_residual,
                classification=report.classification,
                multiple=multiple,
            )
        )
    out.sort(key=lambda sol: math.atan2(sol.point_unit.y, sol.point_unit.x))
    return out


def stewart_scenario(r: RationalLike) -> tuple[MirrorScenario, Fraction]:
    """Points ``A``, ``B`` whose Alhazen quartic is ``lam * (z^4 - r z - 1)``.

    With ``sigma = -r / (2(r + 4))``: ``A = (sigma, sigma)`` and
    ``B = (-sigma/(4 sigma + 1), sigma/(4 sigma + 1))``, and
    ``lam = 2 sigma (2 sigma + 1) / (4 sigma + 1)``.
    """
    r = as_rational(r)
    if r == 0:
        raise DomainError("r must be a nonzero rational")
    if r == -4:
        raise EmbeddingDegenerate("r = -4: no parameter sigma with -8 sigma/(2 sigma + 1) = r")
    sigma = -r / (2 * (r + 4))
    if 4 * sigma + 1 == 0:
        raise EmbeddingDegenerate("r = 4 forces sigma = -1/4, where 4 sigma + 1 vanishes")
    u = -sigma / (4 * sigma + 1)
    lam = 2 * sigma * (2 * sigma + 1) / (4 * sigma + 1)
    scenario = MirrorScenario(A=Point(sigma, sigma), B=Point(u, -u))
    return scenario, lam


def embedding_report(r: RationalLike) -> dict:
    r = as_rational(r)
    scenario, lam = stewart_scenario(r)
    quartic = alhazen_quartic(scenario.A, scenario.B)
    target = tuple(lam * c for c in (1, 0, 0, -r, -1))
    return {
        "r": format_rational(r),
        "scenario": scenario.to_json(),
        "lambda": format_rational(lam),
        "quartic": [format_rational(c) for c in quartic.coefficients],
        "identity_holds": quartic.coefficients == target,
    }


def solve_report(scenario: MirrorScenario, tol: Tolerance = DEFAULT_TOLERANCE) -> dict:
    A, B = scenario.normalized()
    quartic = alhazen_quartic(A, B)
    conic = hyperbola_coefficients(A, B)
    return {
        "scenario": scenario.to_json(),
        "quartic": [format_rational(c) for c in quartic.coefficients],
        "hyperbola": {
            "h_sq": format_rational(conic.h_sq),
            "h_xy": format_rational(conic.h_xy),
            "h_x": format_rational(conic.h_x),
            "h_y": format_rational(conic.h_y),
        },
        "solutions": [sol.to_json() for sol in solve_mirror(scenario, tol)],
    }
