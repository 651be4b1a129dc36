"""Truncated p-adic arithmetic: frozen examples plus oracle cross-validation.

The exact-rational path (Fraction) is the reference throughout: every
property asserts that an operation on PadicNum images agrees with the image
of the operation on exact rationals.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from congrkit.padic import (
    PadicNum,
    PrecisionError,
    PrimeCtx,
    congruent_mod,
    from_rational,
    inv_unit,
    jacobi,
    rat_sum,
    sqrt_mod,
    valuation_int,
    valuation_rat,
)

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


# ---------------------------------------------------------------------------
# frozen worked examples
# ---------------------------------------------------------------------------

def test_jacobi_small():
    assert jacobi(5, 7) == -1          # squares mod 7 are {1,2,4}
    assert jacobi(2, 7) == 1           # 3^2 == 2 (mod 7)
    assert jacobi(0, 7) == 0
    assert jacobi(-1, 5) == 1


def test_inv_unit():
    assert inv_unit(6, PrimeCtx(7, 3)) == 286   # 6*286 == 1 (mod 343)
    assert inv_unit(2, PrimeCtx(5, 1)) == 3


def test_from_rational_frozen():
    x = from_rational(Fraction(1, 6), PrimeCtx(7, 3))
    assert (x.val, x.unit) == (0, 286)
    y = from_rational(Fraction(49, 3), PrimeCtx(7, 2))
    assert (y.val, y.unit) == (2, 33)


def test_add_halves():
    ctx = PrimeCtx(7, 2)
    h = from_rational(Fraction(1, 2), ctx)
    s = h.add(h)
    assert (s.val, s.unit) == (0, 1)


def test_congruent_mod_exact_zero():
    ctx = PrimeCtx(3, 6)
    assert congruent_mod(from_rational(225, ctx), from_rational(0, ctx), 2)


def test_congruent_mod_rejects_undecidable():
    x = PadicNum.zero_to(5, 2)
    y = PadicNum.zero_to(5, 2)
    with pytest.raises(PrecisionError):
        congruent_mod(x, y, 3)


def test_sqrt_mod_frozen():
    assert sqrt_mod(-1, PrimeCtx(5, 1)) == (2, 3)
    assert sqrt_mod(2, PrimeCtx(7, 2)) == (10, 39)
    assert sqrt_mod(5, PrimeCtx(7, 1)) is None


def test_rat_sum():
    assert rat_sum([Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]) == Fraction(25, 12)
    assert rat_sum([]) == 0


def test_valuations():
    assert valuation_rat(Fraction(9, 5), 3) == 2
    assert valuation_rat(Fraction(1, 3), 3) == -1
    assert valuation_int(0, 5) == float("inf")
    assert valuation_int(250, 5) == 3


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

rationals = st.fractions(
    min_value=-10**6, max_value=10**6, max_denominator=10**4
)


@given(a=st.integers(min_value=-500, max_value=500), p=st.sampled_from(PRIMES))
def test_jacobi_matches_euler_criterion(a, p):
    j = jacobi(a, p)
    e = pow(a % p, (p - 1) // 2, p)
    assert j == (0 if a % p == 0 else (1 if e == 1 else -1))


@given(a=st.integers(min_value=1, max_value=10**4), p=st.sampled_from(PRIMES))
def test_sqrt_mod_roundtrip(a, p):
    if a % p == 0:
        return
    ctx = PrimeCtx(p, 3)
    roots = sqrt_mod(a, ctx)
    if jacobi(a, p) == -1:
        assert roots is None
        return
    r1, r2 = roots
    assert (r1 * r1 - a) % ctx.modulus == 0
    assert (r2 * r2 - a) % ctx.modulus == 0
    assert (r1 + r2) % ctx.modulus == 0


@settings(max_examples=300, deadline=None)
@given(x=rationals, y=rationals, p=st.sampled_from(PRIMES))
def test_ring_laws_via_images(x, y, p):
    ctx = PrimeCtx(p, 8)
    xi, yi = from_rational(x, ctx), from_rational(y, ctx)
    t = min(2, xi.add(yi).abs_prec, yi.add(xi).abs_prec)
    if t >= 1:
        assert congruent_mod(xi.add(yi), yi.add(xi), t)
        assert congruent_mod(xi.mul(yi), yi.mul(xi), min(2, xi.mul(yi).abs_prec))


def _congruent_to_image(approx, exact, p, ctx):
    """Compare a PadicNum against the image of the exact rational at the
    largest exponent both sides determine."""
    img = from_rational(exact, ctx)
    t = min(approx.abs_prec, img.abs_prec)
    if t < 1:
        return True  # nothing decidable at this precision
    return congruent_mod(approx, img, t)


def test_oracle_consistency_10k_seeded():
    """10^4 seeded random arithmetic cases: operating on truncated images
    agrees with the image of the exact Fraction result."""
    rng = random.Random(20260824)
    ctx_cache = {}
    for _ in range(10_000):
        p = rng.choice(PRIMES)
        ctx = ctx_cache.setdefault(p, PrimeCtx(p, 10))
        x = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        y = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        op = rng.choice(("add", "sub", "mul", "div"))
        xi, yi = from_rational(x, ctx), from_rational(y, ctx)
        if op == "add":
            assert _congruent_to_image(xi.add(yi), x + y, p, ctx)
        elif op == "sub":
            assert _congruent_to_image(xi.sub(yi), x - y, p, ctx)
        elif op == "mul":
            assert _congruent_to_image(xi.mul(yi), x * y, p, ctx)
        elif y != 0:
            try:
                assert _congruent_to_image(xi.div(yi), x / y, p, ctx)
            except PrecisionError:
                assert yi.is_zero_marker


def test_zero_marker_absorbs():
    p = 7
    z = PadicNum.zero_to(p, 4)
    x = from_rational(Fraction(3), PrimeCtx(p, 6))
    s = x.add(z)
    assert s.abs_prec == 4
    assert s.residue(4) == 3
    assert z.mul(x).is_zero_marker
