"""Open catalog, first block: central-binomial-cube and class-number-one families."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..padic import jacobi
from ..quadrep import FormSpec
from ..seqgen import (
    C2C3,
    C6C3M,
    CENTRAL3,
    QUARTIC,
    factorial_ratio,
)
from .core import CheckResult, Env, case_table, int_scan_entry, sum_entry
from .lib import (
    fratio_terms,
    is_power_of,
    quad_case_rhs,
    require,
    rhs_zero,
    weighted_horner_scan,
)

X2_7Y2 = FormSpec(1, 1, 7)
X2_2Y2 = FormSpec(1, 1, 2)
X2_3Y2 = FormSpec(1, 1, 3)


def _4x2_2p(env, x, y):
    return 4 * x * x - 2 * env.p


def _x2_2p(env, x, y):
    return x * x - 2 * env.p


# --- A1 -------------------------------------------------------------------

sum_entry(
    "A1",
    terms=fratio_terms(CENTRAL3, 1),
    rhs=quad_case_rhs(("p/", 7), X2_7Y2, _4x2_2p),
    mod_exp=2,
    gate=(("not", (7,)),),
)

sum_entry(
    "A1.k",
    terms=fratio_terms(CENTRAL3, 1, c1=3, c0=0),
    rhs=quad_case_rhs(
        ("p/", 7),
        X2_7Y2,
        lambda env, x, y: Fraction(8, 7) * (3 * env.p - 4 * x * x),
        else_fn=lambda env: Fraction(8, 7) * env.p,
    ),
    mod_exp=2,
    gate=(("not", (7,)),),
    note="k-weighted companion of A1 (times 3)",
)

# --- A2 -------------------------------------------------------------------

def _a2_rhs(env: Env) -> Fraction:
    require(env.P % 3 == 1)
    return Fraction(8 * env.P)


sum_entry(
    "A2.i",
    terms=fratio_terms(CENTRAL3, 1, c1=21, c0=8),
    rhs=_a2_rhs,
    rng=("floor", 2, 3),
    mod_exp=lambda p, e: e + 4,
    powers=True,
)

sum_entry(
    "A2.rem",
    terms=fratio_terms(CENTRAL3, 1, c1=21, c0=8),
    rhs=lambda env: env.P * (8 + 16 * env.p ** 3 * env.B(-3)),
    mod_exp=lambda p, e: e + 4,
    powers=True,
    status="confirmed",
)

sum_entry(
    "A2.rem.half",
    terms=fratio_terms(CENTRAL3, 1, c1=21, c0=8),
    rhs=lambda env: 8 * env.p + env.jac(-1) * Fraction(32 * env.p ** 3 * env.E(-3)),
    rng="half",
    mod_exp=4,
    gate=(("min", 5),),
    status="confirmed",
)


def _a2_primality_scan(max_n: int) -> CheckResult:
    # running exact sum of (21k+8) C(2k,k)^3; a composite n passing mod n^4
    # would be a counterexample, a prime n failing would be an encoding bug
    from sympy import isprime

    exceptions = []
    s = 0
    c = 1  # C(2k,k)
    for n in range(1, max_n + 1):
        k = n - 1
        s += (21 * k + 8) * c ** 3
        c = c * (2 * (2 * k + 1)) // (k + 1)
        if n == 1:
            continue
        holds = s % n ** 4 == 8 * n % n ** 4
        if holds != bool(isprime(n)):
            exceptions.append(n)
    if exceptions:
        return CheckResult.failed({"exceptions": exceptions, "max_n": max_n})
    return CheckResult.passed({"max_n": max_n})


int_scan_entry(
    "A2.ii",
    kind="PrimalityCharacterization",
    checker=_a2_primality_scan,
    scan_max=1000,
)

# --- A3 -------------------------------------------------------------------

def _power3_side_condition_scan(spec, m, c1, c0, denom_fn, *, positive=False, start=2):
    """Integrality with the 'unless 2n+1 is a power of 3' escape clause."""

    def run(bound: int) -> CheckResult:
        bad = []
        for n, s in weighted_horner_scan(spec, m, c1, c0, bound):
            if n < start:
                continue
            a = Fraction(s, denom_fn(n))
            if is_power_of(2 * n + 1, 3) and 2 * n + 1 > 1:
                ok = (3 * a).denominator == 1 and (3 * a).numerator % 3 != 0
            else:
                ok = a.denominator == 1
            if ok and positive:
                ok = a > 0
            if not ok:
                bad.append(n)
        if bad:
            return CheckResult.failed({"violations": bad[:10], "max_n": bound})
        return CheckResult.passed({"max_n": bound})

    return run


int_scan_entry(
    "A3.i",
    kind="Integrality",
    checker=_power3_side_condition_scan(
        QUARTIC, 81, 35, 8, lambda n: 4 * n * (2 * n + 1) * comb(2 * n, n), start=1
    ),
    scan_max=121,
)

sum_entry(
    "A3.ii.a",
    terms=fratio_terms(QUARTIC, 81, c1=35, c0=8),
    rhs=lambda env: env.P * (8 + Fraction(416, 27) * env.p ** 3 * env.B(-3)),
    mod_exp=lambda p, e: e + 4,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A3.ii.b",
    terms=fratio_terms(QUARTIC, 81, c1=35, c0=8),
    rhs=lambda env: Fraction(8 * env.p * 3 ** (env.p - 1)),
    rng="half",
    mod_exp=3,
    gate=(("min", 5),),
)

sum_entry(
    "A3.ii.c1",
    # sum C(2k,k)^3 - sum (4k)!/(k!)^4/81^k == 0 (mod p^3) when (p/7) = 1
    terms=lambda env, k: Fraction(factorial_ratio(k, CENTRAL3))
    - Fraction(factorial_ratio(k, QUARTIC)) / Fraction(81) ** k,
    rhs=rhs_zero,
    mod_exp=3,
    gate=(("mod", 7, (1, 2, 4)),),
    note="(p/7)=1 equivalence of the two cube-type sums",
)

sum_entry(
    "A3.ii.c2",
    terms=lambda env, k: 3 * k * Fraction(factorial_ratio(k, CENTRAL3))
    - 5 * k * Fraction(factorial_ratio(k, QUARTIC)) / Fraction(81) ** k,
    rhs=rhs_zero,
    mod_exp=3,
    gate=(("mod", 7, (1, 2, 4)),),
)

sum_entry(
    "A3.ii.d",
    terms=fratio_terms(QUARTIC, 81),
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 7, (3, 5, 6)), ("not", (3,))),
)

# --- A4 -------------------------------------------------------------------

def _plain_integrality_scan(spec, m, c1, c0, denom_fn, *, positive=False, start=2):
    def run(bound: int) -> CheckResult:
        bad = []
        for n, s in weighted_horner_scan(spec, m, c1, c0, bound):
            if n < start:
                continue
            a = Fraction(s, denom_fn(n))
            ok = a.denominator == 1
            if ok and positive:
                ok = a > 0
            if not ok:
                bad.append(n)
        if bad:
            return CheckResult.failed({"violations": bad[:10], "max_n": bound})
        return CheckResult.passed({"max_n": bound})

    return run


int_scan_entry(
    "A4.i",
    kind="Integrality",
    checker=_plain_integrality_scan(
        C2C3, 64, 11, 3, lambda n: n * (2 * n + 1) * comb(2 * n, n)
    ),
    scan_max=121,
)

sum_entry(
    "A4.ii.case",
    terms=fratio_terms(C2C3, 64),
    rhs=quad_case_rhs(("p/", 11), FormSpec(4, 1, 11), _x2_2p),
    mod_exp=2,
    gate=(("not", (11,)),),
)

sum_entry(
    "A4.ii.weighted",
    terms=fratio_terms(C2C3, 64, c1=11, c0=3),
    rhs=lambda env: env.P * (3 + Fraction(7, 2) * env.p ** 3 * env.B(-3)),
    mod_exp=lambda p, e: e + 4,
    powers=True,
)

sum_entry(
    "A4.iii",
    terms=lambda env, k: env.p
    * Fraction((11 * k - 3) * 64 ** k)
    / (k ** 3 * factorial_ratio(k, C2C3)),
    rhs=lambda env: 32 * env.qp(2) - Fraction(64, 3) * env.p ** 2 * env.B(-3),
    rng="half1",
    mod_exp=3,
    gate=(("min", 5),),
)

# --- A5 -------------------------------------------------------------------

int_scan_entry(
    "A5.i",
    kind="Integrality",
    checker=_plain_integrality_scan(
        C2C3, 8, 10, 3, lambda n: n * (2 * n + 1) * comb(2 * n, n)
    ),
    scan_max=121,
)

sum_entry(
    "A5.ii.case",
    terms=fratio_terms(C2C3, 8),
    rhs=quad_case_rhs(-2, X2_2Y2, _4x2_2p),
    mod_exp=2,
)

sum_entry(
    "A5.ii.weighted",
    terms=fratio_terms(C2C3, 8, c1=10, c0=3),
    rhs=lambda env: env.P * (3 + Fraction(49, 8) * env.p ** 3 * env.B(-3)),
    mod_exp=lambda p, e: e + 4,
    powers=True,
)

# --- A6 -------------------------------------------------------------------

sum_entry(
    "A6.case",
    terms=fratio_terms(CENTRAL3, 16),
    rhs=quad_case_rhs(-3, X2_3Y2, _4x2_2p),
    mod_exp=2,
    gate=(("min", 5),),
)


def _a6_k_rhs(env: Env) -> Fraction:
    return case_table(
        env,
        [
            (
                env.p % 6 == 1,
                lambda: env.rep(
                    X2_3Y2, lambda x, y: env.p - Fraction(4 * x * x, 3)
                ),
            ),
            (env.p % 6 == 5, lambda: Fraction(env.p, 3)),
        ],
    )


sum_entry(
    "A6.case.k",
    terms=fratio_terms(CENTRAL3, 16, c1=1, c0=0),
    rhs=_a6_k_rhs,
    mod_exp=2,
    gate=(("min", 5),),
    note="the p = 5 (mod 6) branch of the k-weighted sum is p/3, not 0",
)

sum_entry(
    "A6.weighted",
    terms=fratio_terms(CENTRAL3, 16, c1=3, c0=1),
    rhs=lambda env: env.P * (1 + Fraction(7, 6) * env.p ** 3 * env.B(-3)),
    mod_exp=lambda p, e: e + 4,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A6.half",
    terms=fratio_terms(CENTRAL3, 16, c1=3, c0=1),
    rhs=lambda env: env.p + 2 * env.jac(-1) * Fraction(env.p ** 3 * env.E(-3)),
    rng="half",
    mod_exp=4,
    gate=(("min", 5),),
)

int_scan_entry(
    "A6.int",
    kind="Integrality",
    checker=_plain_integrality_scan(
        CENTRAL3, 16, 3, 1, lambda n: 2 * n * comb(2 * n, n)
    ),
    scan_max=121,
)

# --- A7 -------------------------------------------------------------------

sum_entry(
    "A7",
    terms=fratio_terms(CENTRAL3, -8, c1=3, c0=1),
    rhs=lambda env: env.jac(-1) * env.p + Fraction(env.p ** 3 * env.E(-3)),
    mod_exp=4,
    gate=(("min", 5),),
)

int_scan_entry(
    "A7.int",
    kind="Integrality",
    checker=_plain_integrality_scan(
        CENTRAL3, -8, 3, 1, lambda n: 2 * n * comb(2 * n, n), positive=True
    ),
    scan_max=121,
)

# --- A8 -------------------------------------------------------------------

int_scan_entry(
    "A8.i",
    kind="Integrality",
    checker=_power3_side_condition_scan(
        C2C3, -192, 5, 1, lambda n: n * (2 * n + 1) * comb(2 * n, n)
    ),
    scan_max=121,
)


def _a8_weighted_rhs(env: Env) -> Fraction:
    # the two Jacobi symbols are (p^a / 3) and (p^(a-1) / 3)
    main = jacobi(env.P, 3)
    tail = jacobi(env.P // env.p, 3)
    return env.P * (
        main + tail * Fraction(5, 18) * env.p ** 2 * env.Bpoly(-2, Fraction(1, 3))
    )


sum_entry(
    "A8.ii.weighted",
    terms=fratio_terms(C2C3, -192, c1=5, c0=1),
    rhs=_a8_weighted_rhs,
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)


def _a8_case_rhs(env: Env) -> Fraction:
    return case_table(
        env,
        [
            (
                env.p % 3 == 1,
                lambda: env.rep(
                    FormSpec(4, 1, 27), lambda x, y: Fraction(_x2_2p(env, x, y))
                ),
            ),
            (env.p % 3 == 2, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A8.ii.case",
    terms=fratio_terms(C2C3, -192),
    rhs=_a8_case_rhs,
    mod_exp=2,
    gate=(("min", 5),),
)

# --- A9..A12 (class-number-one sextic families) ---------------------------

def _sextic_family(
    tag: str,
    base: int,
    d: int,
    mult,
    c1: int,
    c0: int,
    *,
    gate=(),
    weighted=True,
):
    m = base ** 3  # sums run against (base)^{3k}
    gate = tuple(gate) + (("not", (d,)),)  # (p/d) = 0 leaves no case
    sum_entry(
        f"{tag}.case",
        terms=fratio_terms(C6C3M, m),
        rhs=quad_case_rhs(
            ("p/", d),
            FormSpec(4, 1, d),
            _x2_2p,
            mult_fn=mult,
        ),
        mod_exp=2,
        gate=gate,
    )
    if weighted:
        sum_entry(
            f"{tag}.weighted",
            terms=fratio_terms(C6C3M, m, c1=c1, c0=c0),
            rhs=lambda env: c0 * env.p * Fraction(mult(env)),
            mod_exp=3,
            gate=gate,
        )
    int_scan_entry(
        f"{tag}.int",
        kind="Integrality",
        checker=_power3_side_condition_scan(
            C6C3M, m, c1, c0, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n)
        ),
        scan_max=121,
    )


_sextic_family(
    "A9", -96, 19, lambda env: env.jac(-6), 342, 25, gate=(("min", 5),)
)
_sextic_family(
    "A10",
    -960,
    43,
    lambda env: jacobi(env.p, 15),
    5418,
    263,
    gate=(("min", 7),),
    weighted=False,
)
sum_entry(
    "A10.weighted",
    terms=fratio_terms(C6C3M, (-960) ** 3, c1=5418, c0=263),
    rhs=lambda env: Fraction(263 * env.p * env.jac(-15)),
    mod_exp=3,
    gate=(("min", 7),),
    note="mod p^3 refinement with symbol (-15/p)",
)
_sextic_family(
    "A11",
    -5280,
    67,
    lambda env: env.jac(-330),
    261702,
    10177,
    gate=(("min", 7), ("not", (11,))),
)
_sextic_family(
    "A12",
    -640320,
    163,
    lambda env: env.jac(-10005),
    545140134,
    13591409,
    gate=(("min", 7), ("not", (23, 29))),
)
