"""Open catalog, fifth block: sextic/quartic binomial quotients, central
binomial tails with Fermat quotients, and fractional-range sums."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..padic import jacobi
from ..quadrep import FormSpec
from ..seqgen import (
    FIBONACCI,
    catalan,
    catalan2_first,
    catalan2_second,
    lucas_u,
)
from ..specialnum import euler_exact
from .core import CheckResult, Env, case_table, chain_entry, custom_entry, sum_entry
from .lib import harmonic_cached, require, rhs_zero


def _C(k: int) -> int:
    return comb(2 * k, k)


def _c63(k: int) -> int:
    """C(6k,3k) C(3k,k)."""
    return comb(6 * k, 3 * k) * comb(3 * k, k)


def _t3(k: int) -> int:
    """(3k)!/k!^3."""
    return comb(3 * k, k) * comb(2 * k, k)


def _cc(k: int) -> int:
    """C(2k,k) C(4k,2k)."""
    return comb(2 * k, k) * comb(4 * k, 2 * k)


# ---------------------------------------------------------------------------
# A45 -- C(6k,3k)C(3k,k)/432^k
# ---------------------------------------------------------------------------

sum_entry(
    "A45.i",
    terms=lambda env, k: Fraction(_c63(k)) / Fraction(432) ** k,
    rhs=lambda env: env.jac(-1) - Fraction(25, 9) * env.p ** 2 * env.E(-3),
    mod_exp=3,
    gate=(("min", 5),),
)

sum_entry(
    "A45.ii",
    terms=lambda env, k: Fraction(comb(6 * k, 3 * k) * catalan2_first(k))
    / Fraction(432) ** k,
    rhs=lambda env: Fraction(env.jac_of_p(3)),
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A45.rem.rv",
    terms=lambda env, k: Fraction(_c63(k)) / Fraction(432) ** k,
    rhs=lambda env: Fraction(env.jac(-1)),
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)

sum_entry(
    "A45.rem.gosper",
    terms=lambda env, k: (36 * k + 5) * Fraction(_c63(k)) / Fraction(432) ** k,
    rhs=lambda env: Fraction(5 * env.p ** 2),
    mod_exp=3,
    gate=(("min", 5),),
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A46 -- (3k)!/k!^3 over 24^k
# ---------------------------------------------------------------------------

def _a46_i_rhs(env: Env) -> Fraction:
    p = env.p
    if p % 3 == 1:
        m = (p - 1) // 3
        return Fraction(comb(2 * m, m))
    m = (p + 1) // 3
    return Fraction(p, comb(2 * m, m))


sum_entry(
    "A46.i",
    terms=lambda env, k: Fraction(_t3(k)) / Fraction(24) ** k,
    rhs=_a46_i_rhs,
    mod_exp=2,
    gate=(("min", 5),),
)

FORM_4P_27 = FormSpec(4, 1, 27, (("x_mod", 2, 3),))

sum_entry(
    "A46.ii",
    terms=lambda env, k: (k + 2) * Fraction(_t3(k)) / Fraction(24) ** k,
    rhs=lambda env: env.rep(FORM_4P_27, lambda x, y: Fraction(x)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 3, (1,))),
)

sum_entry(
    "A46.iii",
    terms=lambda env, k: Fraction(comb(3 * k, k) * catalan(k)) / Fraction(24) ** k,
    rhs=lambda env: Fraction(
        comb(2 * (env.p - env.jac_of_p(3)) // 3, (env.p - env.jac_of_p(3)) // 3),
        2,
    ),
    mod_exp=1,
    gate=(("min", 5),),
)

chain_entry(
    "A46.rem.a",
    sums=[
        (lambda env, k: Fraction(_t3(k)) / Fraction(24) ** k, None),
        (
            lambda env, k: env.jac_of_p(3) * Fraction(_t3(k)) / Fraction(-216) ** k,
            None,
        ),
    ],
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)

chain_entry(
    "A46.rem.b",
    sums=[
        (lambda env, k: k * Fraction(_t3(k)) / Fraction(24) ** k, None),
        (
            lambda env, k: 9
            * env.jac_of_p(3)
            * k
            * Fraction(_t3(k))
            / Fraction(-216) ** k,
            None,
        ),
    ],
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A47 / A48 / A49 -- C(2k,k)C(4k,2k) at 72, 48, 63
# ---------------------------------------------------------------------------

X1MOD4_YEVEN = FormSpec(1, 1, 1, (("x_mod", 1, 4), ("y_mod", 0, 2)))
X1MOD3_3Y = FormSpec(1, 1, 3, (("x_mod", 1, 3),))
X_J7 = FormSpec(1, 1, 7, (("jacobi_x", 7, 1),))


def _a47_rhs(env: Env) -> Fraction:
    p = env.p
    if p % 4 == 1:
        return env.jac(6) * env.rep(
            X1MOD4_YEVEN, lambda x, y: 2 * x - Fraction(p, 2 * x)
        )
    return env.jac(6) * Fraction(2 * p, 3 * comb((p + 1) // 2, (p + 1) // 4))


sum_entry(
    "A47.a",
    terms=lambda env, k: Fraction(_cc(k)) / Fraction(72) ** k,
    rhs=_a47_rhs,
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A47.b",
    terms=lambda env, k: (1 - k) * Fraction(_cc(k)) / Fraction(72) ** k,
    rhs=lambda env: env.jac(6) * env.rep(X1MOD4_YEVEN, lambda x, y: Fraction(x)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 4, (1,))),
)

sum_entry(
    "A48.a",
    terms=lambda env, k: Fraction(comb(2 * k, k) * comb(4 * k, 2 * k + 1))
    / Fraction(48) ** k,
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("min", 5),),
)


def _a48_rhs(env: Env) -> Fraction:
    p = env.p
    if p % 3 == 1:
        return env.rep(X1MOD3_3Y, lambda x, y: 2 * x - Fraction(p, 2 * x))
    return Fraction(3 * p, 2 * comb((p + 1) // 2, (p + 1) // 6))


sum_entry(
    "A48.b",
    terms=lambda env, k: Fraction(_cc(k)) / Fraction(48) ** k,
    rhs=_a48_rhs,
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A48.c",
    terms=lambda env, k: (k + 1) * Fraction(_cc(k)) / Fraction(48) ** k,
    rhs=lambda env: env.rep(X1MOD3_3Y, lambda x, y: Fraction(x)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 3, (1,))),
)

chain_entry(
    "A48.rem.a",
    sums=[
        (lambda env, k: Fraction(_cc(k)) / Fraction(-192) ** k, None),
        (lambda env, k: env.jac(-2) * Fraction(_cc(k)) / Fraction(48) ** k, None),
    ],
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)

chain_entry(
    "A48.rem.b",
    sums=[
        (lambda env, k: k * Fraction(_cc(k)) / Fraction(-192) ** k, None),
        (
            lambda env, k: Fraction(env.jac(-2), 4)
            * k
            * Fraction(_cc(k))
            / Fraction(48) ** k,
            None,
        ),
    ],
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)

sum_entry(
    "A49.i.a",
    terms=lambda env, k: Fraction(_cc(k)) / Fraction(63) ** k,
    rhs=lambda env: env.jac_of_p(3)
    * env.rep(X_J7, lambda x, y: 2 * x - Fraction(env.p, 2 * x)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 7, (1, 2, 4))),
)

sum_entry(
    "A49.i.b",
    terms=lambda env, k: (k + 8) * Fraction(_cc(k)) / Fraction(63) ** k,
    rhs=lambda env: 8 * env.jac_of_p(3) * env.rep(X_J7, lambda x, y: Fraction(x)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 7, (1, 2, 4))),
)

chain_entry(
    "A49.ii",
    sums=[
        (lambda env, k: Fraction(_cc(k)) / Fraction(63) ** k, None),
        (
            lambda env, k: Fraction(comb(2 * k, k) * comb(4 * k, 2 * k) ** 2)
            / Fraction(63) ** k,
            None,
        ),
    ],
    rhs=rhs_zero,
    mod_exp=1,
    gate=(("min", 5), ("mod", 7, (3, 5, 6))),
)


# ---------------------------------------------------------------------------
# A50 -- C(2k,k)C(4k,2k)/64^k and inverse variants
# ---------------------------------------------------------------------------

sum_entry(
    "A50.i.a",
    terms=lambda env, k: Fraction(_cc(k)) / Fraction(64) ** k,
    rhs=lambda env: env.jac(-2) ** env.e
    - env.jac(-2) ** (env.e - 1)
    * Fraction(3 * env.p ** 2, 16)
    * env.Epoly(-3, Fraction(1, 4)),
    mod_exp=3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A50.i.b",
    terms=lambda env, k: Fraction(comb(2 * k, k) * catalan(2 * k))
    / Fraction(64) ** k,
    rhs=lambda env: env.jac(-1) ** env.e
    - env.jac(-1) ** (env.e - 1) * 3 * env.p ** 2 * env.E(-3),
    mod_exp=3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A50.ii",
    terms=lambda env, k: Fraction(_cc(k), k) / Fraction(64) ** k,
    rhs=lambda env: -3 * harmonic_cached((env.p - 1) // 2)
    + Fraction(7, 4) * env.p ** 2 * env.B(-3),
    rng="full1",
    mod_exp=3,
    gate=(("min", 5),),
)

sum_entry(
    "A50.iii",
    terms=lambda env, k: Fraction(_cc(k), k) / Fraction(64) ** k,
    rhs=lambda env: -3 * harmonic_cached((env.p - 1) // 2)
    - 2 * env.jac(-1) * env.p * env.E(-3),
    rng="half1",
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A50.iv",
    terms=lambda env, k: env.p * Fraction(64) ** k / (k ** 3 * _cc(k)),
    rhs=lambda env: Fraction(32 * env.jac(-1) * env.E(-3)),
    rng="half1",
    mod_exp=1,
    gate=(("min", 5),),
)

sum_entry(
    "A50.v",
    terms=lambda env, k: env.p
    * Fraction(64) ** k
    / ((2 * k - 1) * k ** 2 * _cc(k)),
    rhs=lambda env: 16 * (env.p * env.E(-3) - env.jac(-1) * env.qp(2)),
    rng="half1",
    mod_exp=2,
    gate=(("min", 5),),
)


# ---------------------------------------------------------------------------
# A51 -- Catalan cubes over half range
# ---------------------------------------------------------------------------

sum_entry(
    "A51.i",
    terms=lambda env, k: k * Fraction(catalan(k) ** 3) / Fraction(16) ** k,
    rhs=lambda env: Fraction(2 * env.p - 2),
    rng="half",
    mod_exp=2,
    gate=(("mod", 3, (1,)),),
)

sum_entry(
    "A51.ii",
    terms=lambda env, k: Fraction(catalan(k) ** 3) / Fraction(64) ** k,
    rhs=lambda env: Fraction(8),
    rng="half",
    mod_exp=2,
    gate=(("mod", 4, (1,)),),
)


# ---------------------------------------------------------------------------
# A52 / A53 -- (3k)!/k!^3 over 27^k and second-order Catalan variants
# ---------------------------------------------------------------------------

sum_entry(
    "A52.i",
    terms=lambda env, k: Fraction(_t3(k)) / Fraction(27) ** k,
    rhs=lambda env: jacobi(env.P, 3)
    - jacobi(env.P // env.p, 3)
    * Fraction(env.p ** 2, 3)
    * env.Bpoly(-2, Fraction(1, 3)),
    mod_exp=3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A52.ii",
    terms=lambda env, k: Fraction(comb(2 * k, k) * catalan2_first(k))
    / Fraction(27) ** k,
    rhs=lambda env: jacobi(env.P, 3)
    - Fraction(2, 3)
    * jacobi(env.P // env.p, 3)
    * env.p ** 2
    * env.Bpoly(-2, Fraction(1, 3)),
    mod_exp=2,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A52.iii",
    terms=lambda env, k: (4 * k + 1)
    * Fraction(comb(2 * k, k) * catalan2_first(k))
    / Fraction(27) ** k,
    rhs=lambda env: Fraction(env.jac_of_p(3)),
    mod_exp=4,
    gate=(("min", 5),),
)

sum_entry(
    "A52.rem.rv",
    terms=lambda env, k: Fraction(_t3(k)) / Fraction(27) ** k,
    rhs=lambda env: Fraction(env.jac_of_p(3)),
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)

sum_entry(
    "A53.i",
    terms=lambda env, k: Fraction(catalan(k) * catalan2_first(k))
    / Fraction(27) ** k,
    rhs=lambda env: Fraction(2 * env.jac_of_p(3) - env.p),
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A53.ii",
    terms=lambda env, k: Fraction(catalan(k) * catalan2_second(k))
    / Fraction(27) ** k,
    rhs=lambda env: Fraction(-7),
    mod_exp=1,
    gate=(("min", 5),),
)

sum_entry(
    "A53.iii",
    terms=lambda env, k: Fraction(comb(2 * k, k - 1) * comb(3 * k, k - 1))
    / Fraction(27) ** k,
    rhs=lambda env: Fraction(env.jac_of_p(3) - env.p),
    rng="full1",
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A53.iv",
    terms=lambda env, k: Fraction(comb(2 * k, k + 1) * comb(3 * k, k + 1))
    / Fraction(27) ** k,
    rhs=lambda env: Fraction(2 * env.jac_of_p(3) - 7),
    rng="full1",
    mod_exp=1,
    gate=(("min", 5),),
)


# ---------------------------------------------------------------------------
# A54 -- 2^k C(3k,k) and its reciprocals
# ---------------------------------------------------------------------------

sum_entry(
    "A54.i",
    terms=lambda env, k: Fraction(2 ** k * comb(3 * k, k), k),
    rhs=lambda env: -3 * env.p * env.qp(2) ** 2,
    rng="full1",
    mod_exp=2,
)


def _a54_ii_rhs(env: Env) -> Fraction:
    return case_table(
        env,
        [
            (env.p % 4 == 1, lambda: Fraction(0)),
            (env.p % 4 == 3, lambda: Fraction(-3, 5)),
        ],
    )


sum_entry(
    "A54.ii",
    terms=lambda env, k: env.p / Fraction(k * 2 ** k * comb(3 * k, k)),
    rhs=_a54_ii_rhs,
    rng="full1",
    mod_exp=2,
)

sum_entry(
    "A54.iii",
    terms=lambda env, k: env.p / Fraction(k ** 2 * 2 ** k * comb(3 * k, k)),
    rhs=lambda env: -env.qp(2) / 2 - Fraction(env.p, 4) * env.qp(2) ** 2,
    rng="full1",
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A54.iv",
    terms=lambda env, k: Fraction((25 * k + 3) * k * 2 ** k * comb(3 * k, k)),
    rhs=lambda env: Fraction(6 * env.jac(-1) - 18 * env.p),
    mod_exp=2,
)

sum_entry(
    "A54.v",
    terms=lambda env, k: env.p * Fraction(25 * k - 3, 2 ** k * comb(3 * k, k)),
    rhs=lambda env: env.jac(-1) - env.jac(2) * Fraction(5 * env.p, 2),
    rng="half",
    mod_exp=2,
)

sum_entry(
    "A54.vi",
    terms=lambda env, k: 2 * env.p * Fraction(25 * k - 3, 2 ** k * comb(3 * k, k)),
    rhs=lambda env: 3 * env.jac(-1)
    + (euler_exact(env.p - 3) - 9) * env.p ** 2,
    mod_exp=3,
    gate=(("min", 5),),
    note="defect valuation is exactly 3 at every tested prime",
)


# ---------------------------------------------------------------------------
# A55 -- fractional-range central binomial sums (with 3-adic companions)
# ---------------------------------------------------------------------------

def _alt_central(env: Env, k: int) -> Fraction:
    return Fraction((-1) ** k * _C(k))


def _a55_ia_rhs(env: Env) -> Fraction:
    require(env.P % 5 in (1, 2) or (env.e > 1 and env.p % 5 != 3))
    return Fraction(jacobi(5, env.P))


def _a55_ib_rhs(env: Env) -> Fraction:
    require(env.P % 5 in (1, 3) or (env.e > 1 and env.p % 5 != 2))
    return Fraction(jacobi(5, env.P))


sum_entry(
    "A55.i.a",
    terms=_alt_central,
    rhs=_a55_ia_rhs,
    rng=("floor", 4, 5),
    mod_exp=2,
    powers=True,
    gate=(("not", (5,)),),
)

sum_entry(
    "A55.i.b",
    terms=_alt_central,
    rhs=_a55_ib_rhs,
    rng=("floor", 3, 5),
    mod_exp=2,
    powers=True,
    gate=(("not", (5,)),),
)


def _a55_ic_rhs(env: Env) -> Fraction:
    require(env.P % 5 == 1)
    return Fraction(0)


sum_entry(
    "A55.i.c",
    terms=_alt_central,
    rhs=_a55_ic_rhs,
    rng=lambda p, e: range(3 * p ** e // 5 + 1, 4 * p ** e // 5 + 1),
    mod_exp=2,
    powers=True,
    gate=(("not", (5,)),),
)


def _a55_iia_rhs(env: Env) -> Fraction:
    require(env.p % 10 in (1, 7) or env.e > 2)
    return Fraction(env.jac_of_p(5))


def _a55_iib_rhs(env: Env) -> Fraction:
    require(env.p % 10 in (1, 3) or env.e > 2)
    return Fraction(env.jac_of_p(5))


sum_entry(
    "A55.ii.a",
    terms=lambda env, k: Fraction(_C(k)) / Fraction(-16) ** k,
    rhs=_a55_iia_rhs,
    rng=("floor", 7, 10),
    mod_exp=2,
    powers=True,
    gate=(("not", (5,)),),
)

sum_entry(
    "A55.ii.b",
    terms=lambda env, k: Fraction(_C(k)) / Fraction(-16) ** k,
    rhs=_a55_iib_rhs,
    rng=("floor", 9, 10),
    mod_exp=2,
    powers=True,
    gate=(("not", (5,)),),
)


def _a55_iii_rhs(env: Env) -> Fraction:
    require(env.p % 3 == 1 or env.e > 1)
    return Fraction(jacobi(3, env.P))


sum_entry(
    "A55.iii.a",
    terms=lambda env, k: Fraction(_C(k)) / Fraction(16) ** k,
    rhs=_a55_iii_rhs,
    rng=("floor", 5, 6),
    mod_exp=2,
    powers=True,
    gate=(("not", (3,)),),
)


def _mod9_quotient_scan(bound: int) -> CheckResult:
    bad = []
    s = Fraction(0)
    for n in range(bound + 1):
        s += Fraction(_C(n)) / Fraction(16) ** n
        q = s / ((2 * n + 1) ** 2 * _C(n))
        target = 1 if n % 3 == 0 else 4
        if q.denominator % 3 == 0:
            bad.append(n)
            continue
        if q.numerator * pow(q.denominator, -1, 9) % 9 != target:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


custom_entry(
    "A55.iii.n",
    kind="ResidueScan",
    checker=_mod9_quotient_scan,
    scan_max=300,
)


def _a55_power3_scan(bound: int) -> CheckResult:
    bad = []
    for a in range(1, bound + 1):
        s = sum(
            Fraction(_C(k)) / Fraction(16) ** k
            for k in range((3 ** a - 1) // 2 + 1)
        )
        q = s / 9 ** a
        target = (-1) ** a * 10 % 27
        if q.denominator % 3 == 0 or q.numerator * pow(q.denominator, -1, 27) % 27 != target:
            bad.append(a)
    if bad:
        return CheckResult.failed({"violations": bad, "max_a": bound})
    return CheckResult.passed({"max_a": bound})


custom_entry(
    "A55.iii.p3",
    kind="ResidueScan",
    checker=_a55_power3_scan,
    scan_max=6,
)


def _fib(n: int) -> int:
    return lucas_u(n, FIBONACCI)


sum_entry(
    "A55.rem.ps",
    terms=_alt_central,
    rhs=lambda env: env.jac_of_p(5)
    * Fraction(1 - 2 * _fib(env.P - env.jac_of_p(5))),
    mod_exp=3,
    powers=True,
    gate=(("not", (5,)),),
    status="confirmed",
)

sum_entry(
    "A55.rem.s6a",
    terms=lambda env, k: Fraction(_C(k)) / Fraction(-16) ** k,
    rhs=lambda env: env.jac_of_p(5)
    * (1 + Fraction(_fib(env.P - env.jac_of_p(5)), 2)),
    rng="half",
    mod_exp=3,
    powers=True,
    gate=(("not", (5,)),),
    status="confirmed",
)

sum_entry(
    "A55.rem.s6b",
    terms=lambda env, k: Fraction(_C(k)) / Fraction(16) ** k,
    rhs=lambda env: Fraction(jacobi(3, env.P)),
    rng="half",
    mod_exp=2,
    powers=True,
    gate=(("not", (3,)),),
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A56 -- (k/3)-twisted central binomial squares
# ---------------------------------------------------------------------------

Y1MOD4_3Y = FormSpec(1, 1, 3, (("y_mod", 1, 4),))

sum_entry(
    "A56.i",
    terms=lambda env, k: jacobi(k, 3) * Fraction(_C(k) ** 2) / Fraction(-16) ** k,
    rhs=lambda env: (-1) ** ((env.p - 3) // 4)
    * env.rep(Y1MOD4_3Y, lambda x, y: 4 * y - Fraction(env.p, 3 * y)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (7,))),
)

sum_entry(
    "A56.ii",
    terms=lambda env, k: jacobi(k, 3)
    * k
    * Fraction(_C(k) ** 2)
    / Fraction(-16) ** k,
    rhs=lambda env: (-1) ** ((env.p + 1) // 4)
    * env.rep(Y1MOD4_3Y, lambda x, y: Fraction(y)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (7,))),
)

sum_entry(
    "A56.iii",
    terms=lambda env, k: comb(env.p - 1, k)
    * jacobi(k, 3)
    * Fraction(_C(k) ** 2)
    / Fraction(16) ** k,
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (1,))),
)
