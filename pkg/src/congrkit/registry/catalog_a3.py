"""Open catalog, third block: central-binomial / harmonic-number congruences
and the Ramanujan-type mod p^4 refinements."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..seqgen import CENTRAL3, QUARTIC, factorial_ratio, odd_harmonic2
from .core import Env, chain_entry, int_scan_entry, sum_entry
from .lib import (
    fratio_terms,
    harmonic_cached,
    integrality_scan,
    require,
    rhs_zero,
)


def _C(k: int) -> int:
    return comb(2 * k, k)


def _H(env: Env) -> Fraction:
    return harmonic_cached(env.p - 1)


def _H_half(env: Env) -> Fraction:
    return harmonic_cached((env.p - 1) // 2)


def _sum_inv_cubes(env: Env) -> Fraction:
    return harmonic_cached(env.p - 1, 3)


def _below_half(p: int, e: int) -> range:
    return range((p - 1) // 2)


# ---------------------------------------------------------------------------
# A30 -- inverse central binomial sums against H_{p-1} and B_{p-5}
# ---------------------------------------------------------------------------

sum_entry(
    "A30.i",
    terms=lambda env, k: Fraction(_C(k), k ** 3),
    rhs=lambda env: -Fraction(2, env.p ** 2) * _H(env)
    - Fraction(13, 27) * _sum_inv_cubes(env),
    rng="full1",
    mod_exp=4,
    gate=(("min", 11),),
)

sum_entry(
    "A30.ii.a",
    terms=lambda env, k: Fraction(1, k ** 4 * _C(k)),
    rhs=lambda env: _H(env) / env.p ** 3
    + Fraction(7, 54 * env.p) * _sum_inv_cubes(env),
    rng="full1",
    mod_exp=2,
    gate=(("min", 7),),
)

sum_entry(
    "A30.ii.b",
    terms=lambda env, k: Fraction(7, 54 * env.p) * Fraction(1, k ** 3),
    rhs=lambda env: Fraction(-7, 45) * env.p * env.B(-5),
    rng="full1",
    mod_exp=2,
    gate=(("min", 7),),
)

sum_entry(
    "A30.iii",
    terms=lambda env, k: Fraction((-1) ** k, k ** 3 * _C(k)),
    rhs=lambda env: Fraction(-2 * env.B(-3)),
    rng="half1",
    mod_exp=1,
    gate=(("min", 7),),
)

sum_entry(
    "A30.iv",
    terms=lambda env, k: Fraction((-1) ** k * _C(k), k ** 2),
    rhs=lambda env: Fraction(56, 15) * env.p * env.B(-3),
    rng="half1",
    mod_exp=2,
    gate=(("min", 7),),
)

sum_entry(
    "A30.v",
    terms=lambda env, k: Fraction(_C(k) ** 2, k) / Fraction(16) ** k,
    rhs=lambda env: Fraction(-21, 2) * _H(env),
    rng="upper",
    mod_exp=4,
    gate=(("min", 7),),
)

sum_entry(
    "A30.rem.a",
    terms=lambda env, k: Fraction(_C(k), k),
    rhs=lambda env: -env.jac(-1) * Fraction(8, 3) * env.p * env.E(-3),
    rng="half1",
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)

sum_entry(
    "A30.rem.b",
    terms=lambda env, k: Fraction(1, k ** 2 * _C(k)),
    rhs=lambda env: env.jac(-1) * Fraction(4, 3) * env.E(-3),
    rng="half1",
    mod_exp=1,
    gate=(("min", 5),),
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A31 -- binom(2k,k)/(k m^k) sums
# ---------------------------------------------------------------------------

sum_entry(
    "A31.i",
    terms=lambda env, k: Fraction(_C(k), k) / Fraction(2) ** k,
    rhs=lambda env: -_H_half(env) / 2
    + Fraction(7, 16) * env.p ** 2 * env.B(-3),
    rng="full1",
    mod_exp=3,
)

sum_entry(
    "A31.ii",
    terms=lambda env, k: Fraction(_C(k), k) / Fraction(3) ** k,
    rhs=lambda env: -2
    * sum(
        Fraction(1, k)
        for k in range(1, env.p)
        if k % 3 != env.p % 3
    ),
    rng="full1",
    mod_exp=3,
    gate=(("min", 5),),
)

sum_entry(
    "A31.iii",
    terms=lambda env, k: Fraction(_C(k), k ** 2) / Fraction(4) ** k,
    rhs=lambda env: -_H_half(env) ** 2 / 2 - Fraction(7, 4) * _H(env) / env.p,
    rng="full1",
    mod_exp=3,
    gate=(("min", 7),),
)


# ---------------------------------------------------------------------------
# A32 -- binom(2k,k)/((2k+1)^r (+-16)^k) over k < (p-1)/2
# ---------------------------------------------------------------------------

sum_entry(
    "A32.i",
    terms=lambda env, k: Fraction(_C(k), 2 * k + 1) / Fraction(16) ** k,
    rhs=lambda env: env.jac(-1)
    * (_H(env) / 12 + Fraction(3, 160) * env.p ** 4 * env.B(-5)),
    rng=_below_half,
    mod_exp=5,
    gate=(("min", 7),),
)

sum_entry(
    "A32.ii",
    terms=lambda env, k: Fraction(_C(k), (2 * k + 1) ** 3) / Fraction(16) ** k,
    rhs=lambda env: env.jac(-1)
    * (_H(env) / (4 * env.p ** 2) + Fraction(env.p ** 2, 36) * env.B(-5)),
    rng=_below_half,
    mod_exp=3,
    gate=(("min", 7),),
)

sum_entry(
    "A32.iii",
    terms=lambda env, k: Fraction(_C(k), (2 * k + 1) ** 2) / Fraction(-16) ** k,
    rhs=lambda env: _H(env) / (5 * env.p),
    rng=_below_half,
    mod_exp=3,
    gate=(("min", 7),),
)

sum_entry(
    "A32.iv",
    terms=lambda env, k: Fraction(_C(k), (2 * k + 1) ** 2) / Fraction(-16) ** k,
    rhs=lambda env: -Fraction(env.p, 4) * env.B(-3),
    rng="upper",
    mod_exp=2,
    gate=(("min", 7),),
)

sum_entry(
    "A32.v",
    terms=lambda env, k: Fraction(_C(k), 2 * k + 1)
    * odd_harmonic2(k)
    / Fraction(16) ** k,
    rhs=lambda env: env.jac(-1) * _H(env) / (12 * env.p ** 2),
    rng=_below_half,
    mod_exp=2,
    gate=(("min", 7),),
)


def _a32_rem_rhs(env: Env) -> Fraction:
    q = env.qp(2)
    return -2 * q - env.p * q * q


sum_entry(
    "A32.rem",
    terms=lambda env, k: Fraction(_C(k) ** 2, 2 * k + 1) / Fraction(16) ** k,
    rhs=_a32_rem_rhs,
    rng=_below_half,
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A33 -- binom(2k,k)^2/16^k over fractional ranges of p^a
# ---------------------------------------------------------------------------

def _sq_over_16(env: Env, k: int) -> Fraction:
    return Fraction(_C(k) ** 2) / Fraction(16) ** k


def _a33_sign(env: Env) -> Fraction:
    return Fraction(1 if env.P % 4 == 1 else -1)


def _a33_rhs_34(env: Env) -> Fraction:
    require(env.p % 4 == 1 or env.e > 1)
    return _a33_sign(env)


def _a33_rhs_8(env: Env) -> Fraction:
    require(env.p % 8 in (1, 3) or env.e > 1)
    return _a33_sign(env)


sum_entry(
    "A33.i",
    terms=_sq_over_16,
    rhs=_a33_rhs_34,
    rng=("floor", 3, 4),
    mod_exp=3,
    powers=True,
)

sum_entry(
    "A33.ii.a",
    terms=_sq_over_16,
    rhs=_a33_rhs_8,
    rng=("floor", 5, 8),
    mod_exp=3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A33.ii.b",
    terms=_sq_over_16,
    rhs=_a33_rhs_8,
    rng=("floor", 7, 8),
    mod_exp=3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A33.rem",
    terms=_sq_over_16,
    rhs=lambda env: Fraction(env.jac(-1)) + env.p ** 2 * env.E(-3),
    rng="half",
    mod_exp=3,
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A34 -- (6k+1), (42k+5) and (7k+1) families with their partial-sum scans
# ---------------------------------------------------------------------------

def _denom_2nC(n: int) -> int:
    return 2 * n * comb(2 * n, n)


def _denom_2n2n1C(n: int) -> int:
    return 2 * n * (2 * n + 1) * comb(2 * n, n)


int_scan_entry(
    "A34.i.a",
    kind="IntegralityScan",
    checker=integrality_scan(CENTRAL3, 256, 6, 1, _denom_2nC),
    scan_max=200,
)

int_scan_entry(
    "A34.i.b",
    kind="IntegralityScan",
    checker=integrality_scan(CENTRAL3, -512, 6, 1, _denom_2nC),
    scan_max=200,
)

int_scan_entry(
    "A34.i.c",
    kind="IntegralityScan",
    checker=integrality_scan(CENTRAL3, 4096, 42, 5, _denom_2nC),
    scan_max=200,
)


def _a34_powers_rhs(env: Env) -> Fraction:
    sgn = env.jac(-1) ** env.e
    return env.P * sgn * (5 - Fraction(3, 4) * env.p * _H(env))


sum_entry(
    "A34.ii.main",
    terms=fratio_terms(CENTRAL3, 4096, 42, 5),
    rhs=_a34_powers_rhs,
    rng="half",
    mod_exp=lambda p, e: e + 4,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A34.ii.a",
    terms=fratio_terms(CENTRAL3, 256, 6, 1),
    rhs=lambda env: env.p * env.jac(-1) - env.p ** 3 * env.E(-3),
    mod_exp=4,
    gate=(("min", 5),),
)

sum_entry(
    "A34.ii.b",
    terms=fratio_terms(CENTRAL3, -512, 6, 1),
    rhs=lambda env: env.p * env.jac(-2)
    + Fraction(env.p ** 3, 4) * env.jac(2) * env.E(-3),
    rng="half",
    mod_exp=4,
    gate=(("min", 5),),
)

sum_entry(
    "A34.ii.c",
    terms=fratio_terms(CENTRAL3, 4096, 42, 5),
    rhs=lambda env: 5 * env.p * env.jac(-1) - env.p ** 3 * env.E(-3),
    mod_exp=4,
    gate=(("min", 5),),
)

sum_entry(
    "A34.iii",
    terms=fratio_terms(QUARTIC, 648, 7, 1),
    rhs=lambda env: env.p * env.jac(-1)
    - Fraction(5, 3) * env.p ** 3 * env.E(-3),
    mod_exp=4,
    gate=(("min", 5),),
)

int_scan_entry(
    "A34.iii.int",
    kind="IntegralityScan",
    checker=integrality_scan(
        QUARTIC, 648, 7, 1, _denom_2n2n1C, escape=("2n+1", 3)
    ),
    scan_max=200,
)


# ---------------------------------------------------------------------------
# A35 -- vanishing combinations split by p mod 4
# ---------------------------------------------------------------------------

sum_entry(
    "A35.i",
    terms=lambda env, k: _C(k) ** 3
    * (Fraction(-8) ** -k - Fraction(64) ** -k),
    rhs=rhs_zero,
    mod_exp=3,
    gate=(("mod", 4, (1,)),),
)

sum_entry(
    "A35.ii",
    terms=lambda env, k: _C(k) ** 2
    * Fraction(8) ** -k
    * (1 + Fraction(-2) ** -k),
    rhs=rhs_zero,
    mod_exp=3,
    gate=(("mod", 4, (3,)),),
)

sum_entry(
    "A35.iii",
    terms=lambda env, k: comb(env.p - 1, k) * _C(k) ** 2 * Fraction(-8) ** -k,
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 4, (3,)),),
)

sum_entry(
    "A35.rem",
    terms=lambda env, k: comb(env.p - 1, k) * _C(k) ** 3 * Fraction(-64) ** -k,
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 4, (3,)), ("min", 5)),
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A36 -- congruences linking binom(2k,k)^3 and (4k)!/k!^4 at different bases
# ---------------------------------------------------------------------------

def _cubes(m, sym=None):
    M = Fraction(m)

    def term(env: Env, k: int) -> Fraction:
        v = _C(k) ** 3 / M ** k
        return v * env.jac(sym) if sym is not None else v

    return term


def _quartics(m):
    M = Fraction(m)

    def term(env: Env, k: int) -> Fraction:
        return Fraction(factorial_ratio(k, QUARTIC)) / M ** k

    return term


chain_entry(
    "A36.i.a",
    sums=[(_cubes(-8), None), (_cubes(-512, sym=-2), None)],
    mod_exp=2,
)

chain_entry(
    "A36.i.b",
    sums=[(_cubes(16), None), (_cubes(256, sym=-1), None)],
    mod_exp=2,
)

chain_entry(
    "A36.i.c",
    sums=[(_cubes(-8), None), (_cubes(-512, sym=2), None), (_quartics(648), None)],
    mod_exp=3,
    gate=(("mod", 4, (1,)),),
)

chain_entry(
    "A36.i.d",
    sums=[(_cubes(16), None), (_cubes(256, sym=-1), None), (_quartics(-144), None)],
    mod_exp=3,
    gate=(("mod", 3, (1,)),),
)

chain_entry(
    "A36.ii.a",
    sums=[(_cubes(-64), None), (lambda env, k: env.jac(-1) * _quartics(256)(env, k), None)],
    mod_exp=3,
    gate=(("mod", 8, (1, 3)),),
)

chain_entry(
    "A36.ii.b",
    sums=[
        (_cubes(1, sym=-1), None),
        (_cubes(4096), None),
        (lambda env, k: env.jac(-1) * _quartics(-3969)(env, k), None),
    ],
    mod_exp=3,
    gate=(("mod", 7, (1, 2, 4)),),
)


# ---------------------------------------------------------------------------
# A37 -- harmonic-tail weighted half sums
# ---------------------------------------------------------------------------

def _tail_terms(m, scale=1, sym=None):
    """C(2k,k)^3/m^k times sum_{k<j<=2k} 1/j, optionally scaled by a constant
    and a quadratic symbol."""
    M = Fraction(m)
    S = Fraction(scale)

    def term(env: Env, k: int) -> Fraction:
        t = harmonic_cached(2 * k) - harmonic_cached(k)
        v = S * _C(k) ** 3 * t / M ** k
        return v * env.jac(sym) if sym is not None else v

    return term


chain_entry(
    "A37.i.a",
    sums=[
        (_tail_terms(-8), None),
        (_tail_terms(64, scale=Fraction(1, 2)), None),
        (_tail_terms(-512, scale=Fraction(1, 3), sym=2), None),
    ],
    rng="half",
    mod_exp=2,
    gate=(("mod", 4, (1,)),),
)

chain_entry(
    "A37.i.b",
    sums=[(_tail_terms(-8), None), (_tail_terms(64, scale=Fraction(-7, 2)), None)],
    rng="half",
    mod_exp=2,
    gate=(("mod", 4, (3,)),),
)

chain_entry(
    "A37.i.c",
    sums=[(_tail_terms(64), None), (_tail_terms(-512, scale=-1, sym=2), None)],
    rng="half",
    mod_exp=2,
    gate=(("mod", 4, (3,)),),
)

sum_entry(
    "A37.i.d",
    terms=_tail_terms(-8),
    rhs=rhs_zero,
    rng="half",
    mod_exp=1,
    gate=(("mod", 4, (3,)), ("min", 5)),
)

sum_entry(
    "A37.i.e",
    terms=_tail_terms(-512),
    rhs=rhs_zero,
    rng="half",
    mod_exp=1,
    gate=(("mod", 4, (3,)), ("min", 5)),
)

chain_entry(
    "A37.ii.a",
    sums=[(_tail_terms(16), None), (_tail_terms(256, scale=Fraction(1, 2), sym=-1), None)],
    rng="half",
    mod_exp=2,
    gate=(("mod", 3, (1,)),),
)

sum_entry(
    "A37.ii.b",
    terms=_tail_terms(16),
    rhs=rhs_zero,
    rng="half",
    mod_exp=1,
    gate=(("mod", 3, (2,)),),
)

sum_entry(
    "A37.ii.c",
    terms=_tail_terms(256),
    rhs=rhs_zero,
    rng="half",
    mod_exp=2,
    gate=(("mod", 3, (2,)),),
)

sum_entry(
    "A37.iii",
    terms=_tail_terms(-64),
    rhs=rhs_zero,
    rng="half",
    mod_exp=1,
    gate=(("mod", 8, (5, 7)),),
)

sum_entry(
    "A37.iv",
    terms=_tail_terms(1),
    rhs=rhs_zero,
    rng="half",
    mod_exp=2,
    gate=(("mod", 7, (1, 2, 4)), ("min", 5)),
)

sum_entry(
    "A37.obs",
    terms=_tail_terms(1),
    rhs=rhs_zero,
    rng="half",
    mod_exp=1,
    gate=(("min", 5),),
)


def _h_weight(which):
    def term(env: Env, k: int) -> Fraction:
        h = harmonic_cached(2 * k if which == 2 else k)
        return _C(k) ** 3 * h / Fraction(64) ** k

    return term


chain_entry(
    "A37.rem",
    sums=[(_h_weight(2), None), (_h_weight(1), None)],
    rhs=rhs_zero,
    rng="half",
    mod_exp=1,
    gate=(("mod", 4, (3,)), ("min", 5)),
    status="confirmed",
)
