from fractions import Fraction as F

import mpmath
import pytest
import sympy as sp

from stewart_alhazen.errors import DomainError
from stewart_alhazen.exact_core import Polynomial, poly_eval, rational_roots
from stewart_alhazen.stewart import (
    Constructibility,
    GaloisGroup,
    analyze,
    check_identity_numeric,
    companion_cubic,
    constructibility_verdict,
    depressed_quartic_discriminant,
    factor_parameters,
    galois_class,
    reducibility_verdict,
    resolvent_cubic,
    stewart_discriminant,
    stewart_real_roots_numeric,
    stewart_roots,
)

from conftest import random_rational

PRIMES = [2, 3, 5, 7, 11, 13]


def mp_roots(r):
    """Independent oracle: mpmath's high-precision polynomial solver."""
    with mpmath.workdps(40):
        roots = mpmath.polyroots([1, 0, 0, -mpmath.mpf(r.numerator) / r.denominator, -1], maxsteps=200, extraprec=80)
    reals = sorted(float(z) for z in roots if abs(mpmath.im(z)) < 1e-25)
    cplx = [complex(z) for z in roots if abs(mpmath.im(z)) >= 1e-25]
    return reals, cplx


@pytest.mark.parametrize(
    "r, coeffs",
    [(1, [-1, 4, 0, 1]), (4, [-16, 4, 0, 1]), (F(15, 2), [F(-225, 4), 4, 0, 1])],
)
def test_companion_cubic(r, coeffs):
    assert companion_cubic(r) == Polynomial(coeffs)


def test_companion_cubic_zero():
    with pytest.raises(DomainError):
        companion_cubic(0)


def test_resolvent_examples():
    assert resolvent_cubic(0, -1, -1) == Polynomial([-1, 4, 0, 1])
    assert resolvent_cubic(0, -4, -1) == Polynomial([-16, 4, 0, 1])
    rho = resolvent_cubic(1, 0, 1)
    assert rho == Polynomial([0, -3, 2, 1])
    assert rational_roots(rho) == {F(0), F(1), F(-3)}


def test_resolvent_roots_are_pair_sums_squared():
    # oracle: build a quartic from known roots and compare with (x1+x2)^2 etc.
    xs = [F(1), F(2), F(-1), F(-2)]
    p = Polynomial([1])
    for x in xs:
        p = p * Polynomial([-x, 1])
    c0, c1, c2 = p.coeff(0), p.coeff(1), p.coeff(2)
    rho = resolvent_cubic(c2, c1, c0)
    for j in (1, 2, 3):
        assert poly_eval(rho, (xs[0] + xs[j]) ** 2) == 0


def test_stewart_resolvent_is_negated_paper_form():
    # Y^3 + 4Y + r^2 == -R(-Y)
    Y = sp.symbols("Y")
    for r in (1, 4, F(15, 2)):
        R = sum(sp.Rational(c.numerator, c.denominator) * Y**k for k, c in enumerate(resolvent_cubic(0, -r, -1).coefficients))
        assert sp.expand(-R.subs(Y, -Y) - (Y**3 + 4 * Y + sp.Rational(r) ** 2)) == 0


@pytest.mark.parametrize("r, disc", [(1, -283), (4, -7168)])
def test_discriminant(r, disc):
    assert stewart_discriminant(r) == disc


def test_discriminant_against_sympy(rng):
    X = sp.symbols("X")
    for _ in range(20):
        r = random_rational(rng)
        oracle = sp.discriminant(X**4 - sp.Rational(r.numerator, r.denominator) * X - 1, X)
        assert stewart_discriminant(r) == F(int(sp.numer(oracle)), int(sp.denom(oracle)))
        assert stewart_discriminant(r) == stewart_discriminant(-r)
        p, q, c = (random_rational(rng, 9, nonzero=False) for _ in range(3))
        P = X**4 + sp.Rational(p) * X**2 + sp.Rational(q) * X + sp.Rational(c)
        d = sp.discriminant(P, X)
        assert depressed_quartic_discriminant(p, q, c) == F(int(sp.numer(d)), int(sp.denom(d)))


def test_factor_parameters_r4():
    d = factor_parameters(4)
    assert d.a_squared.exact == 2
    assert d.a.exact is None
    assert d.a.approx == pytest.approx(2**0.5, abs=1e-15)
    assert d.b.approx == pytest.approx(1 + 2**0.5, abs=1e-14)
    assert d.b_bar.approx == pytest.approx(1 - 2**0.5, abs=1e-14)


def test_factor_parameters_r1():
    d = factor_parameters(1)
    oracle = {"a2": 0.246266172167722732, "a": 0.496252125605243864, "b": 1.130685445462040587, "bb": -0.884419273294317855}
    assert d.a_squared.approx == pytest.approx(oracle["a2"], abs=1e-14)
    assert d.a.approx == pytest.approx(oracle["a"], abs=1e-14)
    assert d.b.approx == pytest.approx(oracle["b"], abs=1e-14)
    assert d.b_bar.approx == pytest.approx(oracle["bb"], abs=1e-14)
    for value, key in ((d.a_squared, "a2"), (d.a, "a"), (d.b, "b"), (d.b_bar, "bb")):
        assert abs(value.approx - oracle[key]) <= value.error_bound + 1e-16


def test_factor_parameters_sign_follows_r():
    assert factor_parameters(-1).a.approx < 0 < factor_parameters(1).a.approx


def test_factor_invariants_random(rng):
    for _ in range(500):
        r = random_rational(rng)
        d = factor_parameters(r)
        t, a, b, bb = d.a_squared.approx, d.a.approx, d.b.approx, d.b_bar.approx
        assert (a > 0) == (r > 0)
        assert abs(b * bb + 1) < 1e-12
        assert abs(b + bb - t) < 1e-12 * max(1, t)
        assert abs(a**6 + 4 * a**2 - float(r) ** 2) < 1e-10 * max(1, float(r) ** 2)
        assert t - 4 * b < 0 < t - 4 * bb
        assert check_identity_numeric(r) < 1e-10


def test_stewart_roots_r1():
    roots = stewart_roots(1)
    reals, cplx = mp_roots(F(1))
    got = [x.approx for x in roots.real_roots]
    assert got == pytest.approx(reals, abs=1e-14)
    assert got == pytest.approx([-0.724492, 1.220744], abs=1e-6)
    re, im = roots.complex_pair
    assert re.approx == pytest.approx(-0.248126, abs=1e-6)
    assert im.approx == pytest.approx(1.033982, abs=1e-6)
    z = complex(re.approx, im.approx)
    assert any(abs(z - w) < 1e-13 for w in cplx)


def test_stewart_roots_r4():
    got = [x.approx for x in stewart_roots(4).real_roots]
    assert got == pytest.approx([-0.249038376398374331, 1.663251938771469380], abs=1e-14)


def test_stewart_roots_exact_rational():
    roots = stewart_roots(F(15, 2))
    assert F(2) in [x.exact for x in roots.real_roots]


def test_stewart_roots_distinct_and_residual(rng):
    for _ in range(200):
        r = random_rational(rng)
        roots = stewart_roots(r)
        reals = [x.approx for x in roots.real_roots]
        z1, z2 = roots.complex_roots()
        everything = reals + [z1, z2]
        assert len({complex(w) for w in everything}) == 4
        assert reals[0] < reals[1]
        for x in reals:
            assert abs(x**4 - float(r) * x - 1) < 1e-10 * max(1, x**4)
        assert stewart_real_roots_numeric(r) == pytest.approx(reals, abs=1e-9)


def test_reducibility_examples():
    v = reducibility_verdict(1)
    assert not v.reducible and v.c1_witness is None and v.c2_witness is None
    v = reducibility_verdict(F(15, 2))
    assert v.reducible and v.c1_witness == 2
    assert not reducibility_verdict(7).reducible


def test_reducibility_from_c1(rng):
    for _ in range(100):
        s = random_rational(rng, 20)
        r = s**3 - 1 / s
        if r == 0:
            continue
        v = reducibility_verdict(r)
        assert v.reducible
        assert poly_eval(Polynomial([-1, -r, 0, 0, 1]), v.c1_witness) == 0
        assert s in rational_roots(Polynomial([-1, -r, 0, 0, 1]))


def test_integer_r_irreducible_and_cubic_roots_integral():
    for r in range(-200, 201):
        if r == 0:
            continue
        assert not reducibility_verdict(r).reducible
        for root in rational_roots(companion_cubic(r)):
            assert root.denominator == 1


@pytest.mark.parametrize("r", PRIMES)
def test_prime_not_constructible(r):
    assert constructibility_verdict(r) is Constructibility.NOT_CONSTRUCTIBLE
    assert rational_roots(companion_cubic(r)) == set()


def test_constructibility_examples():
    assert constructibility_verdict(4) is Constructibility.CONSTRUCTIBLE
    assert constructibility_verdict(F(15, 2)) is Constructibility.REDUCIBLE_CASE


@pytest.mark.parametrize(
    "r, group",
    [(1, GaloisGroup.S4), (4, GaloisGroup.D4_OR_C4), (2, GaloisGroup.S4), (F(15, 2), GaloisGroup.REDUCIBLE)],
)
def test_galois_class(r, group):
    assert galois_class(r).group is group


def test_galois_consistency(rng):
    for _ in range(300):
        r = random_rational(rng)
        g = galois_class(r)
        assert g.group in (GaloisGroup.S4, GaloisGroup.D4_OR_C4, GaloisGroup.REDUCIBLE)
        verdict = constructibility_verdict(r)
        if g.group is not GaloisGroup.REDUCIBLE:
            assert (verdict is Constructibility.CONSTRUCTIBLE) == g.order_is_power_of_two


def test_constructible_family_from_rational_a_squared():
    # a^2 = k rational non-square gives r^2 = k^3 + 4k; pick k with k^3 + 4k a square
    for k in range(1, 60):
        r2 = k**3 + 4 * k
        r = int(r2**0.5)
        if r * r == r2:
            assert constructibility_verdict(r) is Constructibility.CONSTRUCTIBLE
            assert factor_parameters(r).a_squared.exact == k


def test_analyze_report_keys():
    doc = analyze(1)
    assert doc["galois_class"] == "S4"
    assert doc["constructibility"] == "NotConstructible"
    assert doc["reducible"] is False
    assert doc["discriminant"] == "-283"


def test_zero_r_rejected():
    for fn in (factor_parameters, stewart_roots, reducibility_verdict, constructibility_verdict, galois_class, stewart_discriminant):
        with pytest.raises(DomainError):
            fn(0)
