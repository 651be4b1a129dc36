"""Open catalog, second block: Ramanujan-type genus families and their scans."""

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
    binom_rat,
    factorial_ratio,
)
from .core import (
    CheckResult,
    Env,
    case_table,
    congruence_paths,
    custom_entry,
    int_scan_entry,
    sum_entry,
)
from .lib import fratio_terms, integrality_scan, quad_case_rhs, rhs_zero

X2_Y2 = FormSpec(1, 1, 1)


def _jp3(x: int) -> int:
    return jacobi(x, 3)


def _v4x2(env, x, y):
    return 4 * x * x - 2 * env.p


def _vx2(env, x, y):
    return x * x - 2 * env.p


# mod-p^3 right-hand side shared by the (p^a/3)-type power congruences
def jp3_powers_rhs(c0: int, coef: Fraction):
    def rhs(env: Env) -> Fraction:
        b = env.Bpoly(-2, Fraction(1, 3))
        return env.P * (
            c0 * _jp3(env.P) + _jp3(env.P // env.p) * coef * env.p ** 2 * b
        )

    return rhs


# analogous (-2/p^a)-type with E_{p-3}(1/4)
def em2_powers_rhs(c0: int, coef: Fraction):
    def rhs(env: Env) -> Fraction:
        s = env.jac(-2)
        e4 = env.Epoly(-3, Fraction(1, 4))
        return env.P * (
            c0 * pow(s, env.e) + pow(s, env.e - 1) * coef * env.p ** 2 * e4
        )

    return rhs


# three-way genus case table keyed on residues of p
def genus3(mod: int, ones, form1, val1, twos, form2, val2):
    ones, twos = frozenset(ones), frozenset(twos)

    def rhs(env: Env) -> Fraction:
        r = env.p % mod
        return case_table(
            env,
            [
                (r in ones, lambda: env.rep(form1, lambda x, y: Fraction(val1(env, x, y)))),
                (r in twos, lambda: env.rep(form2, lambda x, y: Fraction(val2(env, x, y)))),
                (r not in ones and r not in twos, lambda: Fraction(0)),
            ],
        )

    return rhs


# three-way table keyed on a pair of Jacobi symbols (both +1 / both -1 / mixed)
def jacpair3(sym1_fn, sym2_fn, form1, val1, form2, val2):
    def rhs(env: Env) -> Fraction:
        j1, j2 = sym1_fn(env), sym2_fn(env)
        return case_table(
            env,
            [
                (j1 == 1 and j2 == 1, lambda: env.rep(form1, lambda x, y: Fraction(val1(env, x, y)))),
                (j1 == -1 and j2 == -1, lambda: env.rep(form2, lambda x, y: Fraction(val2(env, x, y)))),
                (j1 == -j2, lambda: Fraction(0)),
            ],
        )

    return rhs


# --- A13 ------------------------------------------------------------------

sum_entry(
    "A13.case",
    terms=fratio_terms(C2C3, -27),
    rhs=genus3(
        15,
        (1, 4), FormSpec(1, 1, 15), _v4x2,
        (2, 8), FormSpec(1, 5, 3), lambda env, x, y: 20 * x * x - 2 * env.p,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (5,))),
)

int_scan_entry(
    "A13.i",
    kind="Integrality",
    checker=integrality_scan(
        C2C3, -27, 15, 4, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3), start=1,
    ),
    scan_max=121,
)

sum_entry(
    "A13.ii.w1",
    terms=fratio_terms(C2C3, -27, c1=15, c0=4),
    rhs=jp3_powers_rhs(4, Fraction(4, 3)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A13.ii.w2",
    terms=fratio_terms(QUARTIC, -144, c1=5, c0=1),
    rhs=jp3_powers_rhs(1, Fraction(5, 12)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

# --- A14 ------------------------------------------------------------------

int_scan_entry(
    "A14.i.a",
    kind="Integrality",
    checker=integrality_scan(
        C2C3, 216, 6, 1, lambda n: n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

int_scan_entry(
    "A14.i.b",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, 2304, 8, 1, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

sum_entry(
    "A14.ii.case1",
    terms=fratio_terms(C2C3, 216),
    rhs=genus3(
        24,
        (1, 7), FormSpec(1, 1, 6), _v4x2,
        (5, 11), FormSpec(1, 2, 3), lambda env, x, y: 8 * x * x - 2 * env.p,
    ),
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A14.ii.case2",
    terms=fratio_terms(QUARTIC, 2304),
    rhs=genus3(
        24,
        (1, 7), FormSpec(1, 1, 6), _v4x2,
        (5, 11), FormSpec(1, 2, 3), lambda env, x, y: 2 * env.p - 8 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 5),),
)

sum_entry(
    "A14.ii.w1",
    terms=fratio_terms(C2C3, 216, c1=6, c0=1),
    rhs=jp3_powers_rhs(1, Fraction(-5, 12)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A14.ii.w2",
    terms=fratio_terms(QUARTIC, 2304, c1=8, c0=1),
    rhs=jp3_powers_rhs(1, Fraction(-5, 24)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A14.ii.upper",
    terms=fratio_terms(QUARTIC, 2304, c1=8, c0=1),
    rhs=rhs_zero,
    rng="upper",
    mod_exp=lambda p, e: e + 2,
    powers=True,
    gate=(("min", 5),),
)

# --- A15 ------------------------------------------------------------------

int_scan_entry(
    "A15.i",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, -1024, 20, 3, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        alt_sign=True, positive=True,
    ),
    scan_max=121,
)

sum_entry(
    "A15.ii",
    terms=fratio_terms(QUARTIC, -1024),
    rhs=genus3(
        20,
        (1, 9), FormSpec(1, 1, 5), _v4x2,
        (3, 7), FormSpec(2, 1, 5), lambda env, x, y: 2 * (env.p - x * x),
    ),
    mod_exp=2,
    gate=(("not", (5,)),),
)

# --- A16 ------------------------------------------------------------------

int_scan_entry(
    "A16.i",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, 12 ** 4, 10, 1, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

sum_entry(
    "A16.ii.weighted",
    terms=fratio_terms(QUARTIC, 12 ** 4, c1=10, c0=1),
    rhs=em2_powers_rhs(1, Fraction(-1, 48)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A16.ii.case",
    terms=fratio_terms(QUARTIC, 12 ** 4),
    rhs=genus3(
        40,
        (1, 9, 11, 19), FormSpec(1, 1, 10), _v4x2,
        (7, 13, 23, 37), FormSpec(1, 2, 5), lambda env, x, y: 2 * env.p - 8 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 7),),
)

# --- A17 ------------------------------------------------------------------

sum_entry(
    "A17.case",
    terms=fratio_terms(QUARTIC, -(2 ** 10) * 3 ** 4),
    rhs=jacpair3(
        lambda env: env.jac(13), lambda env: env.jac(-1),
        FormSpec(1, 1, 13), _v4x2,
        FormSpec(2, 1, 13), lambda env, x, y: 2 * env.p - 2 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (13,))),
)

sum_entry(
    "A17.weighted",
    terms=fratio_terms(QUARTIC, -82944, c1=260, c0=23),
    rhs=lambda env: 23 * env.p * env.jac(-1) + Fraction(5, 3) * env.p ** 3 * env.E(-3),
    mod_exp=4,
    gate=(("min", 5),),
)

int_scan_entry(
    "A17.int",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, -82944, 260, 23, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

# --- A18 ------------------------------------------------------------------

sum_entry(
    "A18.case",
    terms=fratio_terms(QUARTIC, 1584 ** 2),
    rhs=jacpair3(
        lambda env: env.jac(-11), lambda env: env.jac(2),
        FormSpec(1, 1, 22), _v4x2,
        FormSpec(1, 2, 11), lambda env, x, y: 2 * env.p - 8 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (11,))),
)

sum_entry(
    "A18.weighted",
    terms=fratio_terms(QUARTIC, 1584 ** 2, c1=280, c0=19),
    rhs=lambda env: Fraction(19 * env.p * jacobi(env.p, 11)),
    mod_exp=3,
    gate=(("min", 5), ("not", (11,))),
)

int_scan_entry(
    "A18.int",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, 1584 ** 2, 280, 19, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

# --- A19 ------------------------------------------------------------------

sum_entry(
    "A19.case",
    terms=fratio_terms(QUARTIC, -(2 ** 10) * 21 ** 4),
    rhs=jacpair3(
        lambda env: env.jac(37), lambda env: env.jac(-1),
        FormSpec(1, 1, 37), _v4x2,
        FormSpec(2, 1, 37), lambda env, x, y: 2 * env.p - 2 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (7, 37))),
)

int_scan_entry(
    "A19.int",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, -(2 ** 10) * 21 ** 4, 21460, 1123,
        lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

# --- A20 ------------------------------------------------------------------

int_scan_entry(
    "A20.i",
    kind="Integrality",
    checker=integrality_scan(
        C2C3, -(12 ** 3), 51, 7, lambda n: n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3), alt_sign=True, positive=True,
    ),
    scan_max=121,
)

sum_entry(
    "A20.ii.weighted",
    terms=fratio_terms(C2C3, -(12 ** 3), c1=51, c0=7),
    rhs=jp3_powers_rhs(7, Fraction(5, 6)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

sum_entry(
    "A20.ii.case",
    terms=fratio_terms(C2C3, -(12 ** 3)),
    rhs=jacpair3(
        lambda env: jacobi(env.p, 3), lambda env: jacobi(env.p, 17),
        FormSpec(4, 1, 51), _vx2,
        FormSpec(4, 3, 17), lambda env, x, y: 2 * env.p - 3 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (17,))),
)

# --- A21 ------------------------------------------------------------------

sum_entry(
    "A21.case",
    terms=fratio_terms(QUARTIC, 396 ** 4),
    rhs=jacpair3(
        lambda env: env.jac(29), lambda env: env.jac(-2),
        FormSpec(1, 1, 58), _v4x2,
        FormSpec(1, 2, 29), lambda env, x, y: 2 * env.p - 8 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (11, 29))),
)

int_scan_entry(
    "A21.int",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, 396 ** 4, 26390, 1103,
        lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

# --- A22 ------------------------------------------------------------------

sum_entry(
    "A22.case",
    terms=fratio_terms(C2C3, -(48 ** 3)),
    rhs=jacpair3(
        lambda env: jacobi(env.p, 3), lambda env: jacobi(env.p, 41),
        FormSpec(4, 1, 123), _vx2,
        FormSpec(4, 3, 41), lambda env, x, y: 2 * env.p - 3 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (41,))),
)

sum_entry(
    "A22.weighted",
    terms=fratio_terms(C2C3, -(48 ** 3), c1=615, c0=53),
    rhs=jp3_powers_rhs(53, Fraction(5, 12)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

int_scan_entry(
    "A22.int",
    kind="Integrality",
    checker=integrality_scan(
        C2C3, -(48 ** 3), 615, 53, lambda n: n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

# --- A23 ------------------------------------------------------------------

sum_entry(
    "A23.case",
    terms=fratio_terms(C2C3, -(300 ** 3)),
    rhs=jacpair3(
        lambda env: jacobi(env.p, 3), lambda env: jacobi(env.p, 89),
        FormSpec(4, 1, 267), _vx2,
        FormSpec(4, 3, 89), lambda env, x, y: 2 * env.p - 3 * x * x,
    ),
    mod_exp=2,
    gate=(("min", 7), ("not", (89,))),
)

sum_entry(
    "A23.weighted",
    terms=fratio_terms(C2C3, -(300 ** 3), c1=14151, c0=827),
    rhs=jp3_powers_rhs(827, Fraction(13, 150)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 7),),
)

int_scan_entry(
    "A23.int",
    kind="Integrality",
    checker=integrality_scan(
        C2C3, -(300 ** 3), 14151, 827, lambda n: 2 * n * comb(2 * n, n),
        escape=("n-1", 2),
    ),
    scan_max=121,
)

sum_entry(
    "A23.zudilin",
    terms=fratio_terms(C2C3, -(300 ** 3), c1=14151, c0=827),
    rhs=lambda env: Fraction(827 * env.p * jacobi(env.p, 3)),
    mod_exp=3,
    gate=(("min", 7),),
    note="mod p^3 refinement with symbol (p/3)",
)

# --- A24 ------------------------------------------------------------------

int_scan_entry(
    "A24.i",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, -3 * 2 ** 12, 28, 3, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        alt_sign=True, positive=True,
    ),
    scan_max=121,
)

sum_entry(
    "A24.ii.weighted",
    terms=fratio_terms(QUARTIC, -3 * 2 ** 12, c1=28, c0=3),
    rhs=jp3_powers_rhs(3, Fraction(5, 24)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5),),
)

X_1MOD4_Y_EVEN = FormSpec(1, 1, 1, (("x_mod", 1, 4), ("y_mod", 0, 2)))


def _a24_case_rhs(env: Env) -> Fraction:
    return case_table(
        env,
        [
            (
                env.p % 12 == 1,
                lambda: env.rep(
                    X_1MOD4_Y_EVEN,
                    lambda x, y: (-1) ** (x // 6) * Fraction(4 * x * x - 2 * env.p),
                ),
            ),
            (
                env.p % 12 == 5,
                lambda: env.rep(
                    X_1MOD4_Y_EVEN,
                    lambda x, y: Fraction(-4 * jacobi(x * y, 3) * x * y),
                ),
            ),
            (env.p % 4 == 3, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A24.ii.case",
    terms=fratio_terms(QUARTIC, -3 * 2 ** 12),
    rhs=_a24_case_rhs,
    mod_exp=2,
    gate=(("min", 5),),
)

# --- A25 ------------------------------------------------------------------

X_ODD = FormSpec(1, 1, 1, (("x_mod", 1, 2),))
XPY_5 = FormSpec(1, 1, 1, (("xpy_mod", 0, 5),))


def _a25_case_rhs(env: Env) -> Fraction:
    j5 = jacobi(env.p, 5)
    return case_table(
        env,
        [
            (
                env.p % 4 == 1 and j5 == 1,
                lambda: env.rep(
                    X_ODD,
                    lambda x, y: (-1 if x % 5 == 0 else 1)
                    * Fraction(4 * x * x - 2 * env.p),
                ),
            ),
            (
                env.p % 4 == 1 and j5 == -1,
                lambda: env.rep(XPY_5, lambda x, y: Fraction(4 * x * y)),
            ),
            (env.p % 4 == 3, lambda: Fraction(0)),
        ],
    )


A25_M = -(2 ** 14) * 3 ** 4 * 5

sum_entry(
    "A25.case",
    terms=fratio_terms(QUARTIC, A25_M),
    rhs=_a25_case_rhs,
    mod_exp=2,
    gate=(("min", 7),),
)

sum_entry(
    "A25.weighted",
    terms=fratio_terms(QUARTIC, A25_M, c1=644, c0=41),
    rhs=lambda env: Fraction(41 * env.p * env.jac(-5)),
    mod_exp=3,
    gate=(("min", 7),),
)

int_scan_entry(
    "A25.int",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, A25_M, 644, 41, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 3),
    ),
    scan_max=121,
)

# --- A26 ------------------------------------------------------------------

int_scan_entry(
    "A26.i",
    kind="Integrality",
    checker=integrality_scan(
        C6C3M, -(2 ** 15), 154, 15,
        lambda n: 10 * n * (2 * n + 1) * comb(2 * n, n),
        escape=("2n+1", 5), alt_sign=True, positive=True,
    ),
    scan_max=121,
)

sum_entry(
    "A26.ii.weighted",
    terms=fratio_terms(C6C3M, -(2 ** 15), c1=154, c0=15),
    rhs=em2_powers_rhs(15, Fraction(15, 16)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
)

sum_entry(
    "A26.ii.case",
    terms=fratio_terms(C6C3M, -(2 ** 15)),
    rhs=quad_case_rhs(
        ("p/", 11), FormSpec(4, 1, 11), _vx2, mult_fn=lambda env: env.jac(-2)
    ),
    mod_exp=2,
    gate=(("not", (11,)),),
)

# --- A27 ------------------------------------------------------------------

sum_entry(
    "A27.i.a",
    terms=lambda env, k: k ** 3 * Fraction(factorial_ratio(k, CENTRAL3)) / Fraction(64) ** k,
    rhs=rhs_zero,
    mod_exp=lambda p, e: 2 * e,
    powers=True,
    gate=(("min", 7), ("mod", 4, (1,))),
)


def _a27_family_checker(p: int, e: int = 1) -> CheckResult:
    """For each m <= 8 with p == m-1 (mod 2m), the odd-power alternating sums
    of k^n C(-1/m, k)^n over k < p vanish mod p^2."""
    pairs = []
    for m in range(2, 9):
        if p % (2 * m) != (m - 1) % (2 * m):
            continue
        delta = 1 if p == 3 * m - 1 else 0
        for n in range(3, 2 * (m - delta) - 1 + 1, 2):
            pairs.append((m, n))
    if not pairs:
        return CheckResult.inapplicable()
    witness = {"pairs": pairs}
    for m, n in pairs:
        terms = [
            (-1) ** k * k ** n * binom_rat(Fraction(-1, m), k) ** n
            for k in range(p)
        ]
        ok_f, ok_o, sig_f, sig_o, w = congruence_paths(p, 2, terms, Fraction(0))
        if ok_f != ok_o or sig_f != sig_o:
            return CheckResult.error(f"path disagreement at (m,n)=({m},{n})")
        if not ok_f:
            witness.update({"failed_pair": (m, n), **w})
            return CheckResult.failed(witness)
    return CheckResult.passed(witness)


custom_entry(
    "A27.i.b",
    kind="SumCongruence",
    checker=_a27_family_checker,
    mod_exp=2,
)


def _a27_ii_checker(p: int, e: int = 1) -> CheckResult:
    """n >= 2, x == -2k (mod p) for 1 <= k <= (p+1)//(2n+1):
    sum_r (-1)^r C(x,r)^(2n+1) == 0 (mod p^2).  Sampled at n = 2, 3 with
    representatives x = -2k and x = -2k + p."""
    checked = 0
    for n in (2, 3):
        for k in range(1, (p + 1) // (2 * n + 1) + 1):
            for x in (-2 * k, -2 * k + p):
                terms = [
                    (-1) ** r * binom_rat(Fraction(x), r) ** (2 * n + 1)
                    for r in range(p)
                ]
                ok_f, ok_o, sig_f, sig_o, w = congruence_paths(p, 2, terms, Fraction(0))
                if ok_f != ok_o or sig_f != sig_o:
                    return CheckResult.error(f"path disagreement at (n,k,x)=({n},{k},{x})")
                if not ok_f:
                    return CheckResult.failed({"n": n, "k": k, "x": x, **w})
                checked += 1
    if checked == 0:
        return CheckResult.inapplicable()
    return CheckResult.passed({"cases": checked})


custom_entry(
    "A27.ii",
    kind="SumCongruence",
    checker=_a27_ii_checker,
    mod_exp=2,
    gate=(("min", 5),),
)

# --- A28 ------------------------------------------------------------------

sum_entry(
    "A28.case1a",
    terms=lambda env, k: env.jac(-1)
    * Fraction(factorial_ratio(k, CENTRAL3))
    / Fraction(-64) ** k,
    rhs=lambda env: env.rep(FormSpec(1, 1, 2), lambda x, y: Fraction(_v4x2(env, x, y))),
    mod_exp=2,
    gate=(("jacobi", -2, 1),),
)

sum_entry(
    "A28.case1b",
    terms=fratio_terms(QUARTIC, 28 ** 4),
    rhs=lambda env: env.rep(FormSpec(1, 1, 2), lambda x, y: Fraction(_v4x2(env, x, y))),
    mod_exp=2,
    gate=(("jacobi", -2, 1), ("not", (7,))),
)

sum_entry(
    "A28.case2a",
    terms=fratio_terms(CENTRAL3, -64),
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("jacobi", -2, -1),),
)

sum_entry(
    "A28.case2b",
    terms=fratio_terms(QUARTIC, 28 ** 4),
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("jacobi", -2, -1), ("not", (7,))),
)

sum_entry(
    "A28.weighted",
    terms=fratio_terms(QUARTIC, 28 ** 4, c1=40, c0=3),
    rhs=jp3_powers_rhs(3, Fraction(-5, 392)),
    mod_exp=lambda p, e: e + 3,
    powers=True,
    gate=(("min", 5), ("not", (7,))),
)

int_scan_entry(
    "A28.int",
    kind="Integrality",
    checker=integrality_scan(
        QUARTIC, 28 ** 4, 40, 3, lambda n: 2 * n * (2 * n + 1) * comb(2 * n, n)
    ),
    scan_max=121,
)

sum_entry(
    "A28.rem.vh",
    terms=fratio_terms(CENTRAL3, -64, c1=4, c0=1),
    rhs=lambda env: Fraction(env.jac(-1) * env.p),
    rng="half",
    mod_exp=3,
    status="confirmed",
)

int_scan_entry(
    "A28.rem.int",
    kind="Integrality",
    checker=integrality_scan(
        CENTRAL3, -64, 4, 1, lambda n: 2 * n * comb(2 * n, n)
    ),
    scan_max=121,
    status="confirmed",
)

# --- A29 ------------------------------------------------------------------

sum_entry(
    "A29.1",
    terms=fratio_terms(C2C3, 108, c1=9, c0=2),
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 3, (1,)),),
)

sum_entry(
    "A29.2",
    terms=fratio_terms(QUARTIC, 256, c1=16, c0=3),
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 8, (1, 3)),),
)

sum_entry(
    "A29.3",
    terms=fratio_terms(C6C3M, 12 ** 3, c1=36, c0=5),
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 4, (1,)),),
)

sum_entry(
    "A29.rem.1",
    terms=fratio_terms(C2C3, 108),
    rhs=quad_case_rhs(("p/", 3), FormSpec(1, 1, 3), _v4x2),
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)

sum_entry(
    "A29.rem.2",
    terms=fratio_terms(QUARTIC, 256),
    rhs=quad_case_rhs(-2, FormSpec(1, 1, 2), _v4x2),
    mod_exp=2,
    status="confirmed",
)


def _a29_rem3_rhs(env: Env) -> Fraction:
    return case_table(
        env,
        [
            (
                env.p % 4 == 1,
                lambda: jacobi(env.p, 3)
                * env.rep(X_ODD, lambda x, y: Fraction(_v4x2(env, x, y))),
            ),
            (env.p % 4 == 3, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A29.rem.3",
    terms=fratio_terms(C6C3M, 12 ** 3),
    rhs=_a29_rem3_rhs,
    mod_exp=2,
    gate=(("min", 5),),
    status="confirmed",
)
