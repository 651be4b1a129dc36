"""Open catalog, eighth block: central-binomial-weighted T_k(b,c) genus
families, the Legendre-polynomial entries at quadratic irrationalities,
and the s_n / t_n series congruences."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from ..padic import PrimeCtx, jacobi, sqrt_mod
from ..quadrep import FormSpec
from ..seqgen import trinomial_T
from .core import (
    CheckResult,
    Env,
    case_table,
    chain_entry,
    custom_entry,
    int_scan_entry,
    sum_entry,
)
from .lib import genus_rhs, seq_div_scan, sym_case_rhs


@lru_cache(maxsize=None)
def _T(k: int, b: int, c: int) -> int:
    return trinomial_T(k, b, c)


_LUCAS_CACHE: dict[tuple[str, int, int], list[int]] = {}


def _lucas(kind: str, A: int, B: int, n: int) -> int:
    seq = _LUCAS_CACHE.setdefault((kind, A, B), [0, 1] if kind == "u" else [2, A])
    while len(seq) <= n:
        seq.append(A * seq[-1] - B * seq[-2])
    return seq[n]


def _fib(k: int) -> int:
    return _lucas("u", 1, -1, k)


def _luc(k: int) -> int:
    return _lucas("v", 1, -1, k)


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


def _C2(k: int) -> int:
    return comb(2 * k, k) ** 2


def _cc3(k: int) -> int:
    return comb(2 * k, k) * comb(3 * k, k)


def _frac_mod(x: Fraction, m: int) -> int:
    return x.numerator * pow(x.denominator, -1, m) % m


# ---------------------------------------------------------------------------
# A78 -- central binomials against small T_{2k}(b,c)
# ---------------------------------------------------------------------------

sum_entry(
    "A78.i.a",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(k, 1, 1)) / Fraction(12) ** k,
    rhs=lambda env: jacobi(env.p, 3) * Fraction(3 ** (env.p - 1) + 3, 4),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A78.i.b",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 4, 1)) / Fraction(16) ** k,
    rhs=lambda env: Fraction(1),
    rng="half",
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A78.i.c",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 4, 1))
    / Fraction((k + 1) * 16 ** k),
    rhs=lambda env: Fraction(4, 3) * (jacobi(3, env.p) - env.p * env.jac(-1)),
    rng="half",
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A78.i.d",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 3, 4)) / Fraction(4) ** k,
    rhs=lambda env: env.jac(-1) * Fraction(7 - 3 ** env.p, 4),
    rng="half",
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A78.i.e",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 8, 9)) / Fraction(16) ** k,
    rhs=lambda env: Fraction(jacobi(3, env.p)),
    rng="half",
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)

FORM_3_X1 = FormSpec(1, 1, 3, (("x_mod", 1, 3),))
FORM_11_X14 = FormSpec(1, 1, 1, (("x_mod", 1, 4),))

chain_entry(
    "A78.ii.a",
    sums=[
        (lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 2, 3))
         / Fraction(16) ** k, "half"),
        (lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 4, -3))
         / Fraction(16) ** k, "half"),
    ],
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 3 == 1,
                FORM_3_X1,
                lambda env, x, y: env.jac(-1)
                * (Fraction(2 * x) - Fraction(env.p, 2 * x)),
            ),
        ],
        zero_when=lambda env: env.p % 3 == 2,
    ),
    mod_exp=lambda p, e: 2 if p % 3 == 1 else 1,
    gate=(("min", 5),),
    cost="quadratic",
    note="both sums taken over 0 <= k <= (p-1)/2",
)

sum_entry(
    "A78.ii.b",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 1, -3)) / Fraction(4) ** k,
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 3 == 1,
                FORM_3_X1,
                lambda env, x, y: _sgn((x * y) // 2) * 2 * x,
            ),
        ],
        zero_when=lambda env: env.p % 3 == 2,
    ),
    rng="half",
    mod_exp=1,
    gate=(("min", 5),),
    cost="quadratic",
)

sum_entry(
    "A78.ii.c",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 4, 3)) / Fraction(16) ** k,
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 12 == 1,
                FORM_11_X14,
                lambda env, x, y: _sgn((env.p - 1) // 4 - x // 6) * 2 * x,
            ),
            (
                lambda env: env.p % 12 == 5,
                FORM_11_X14,
                lambda env, x, y: _sgn(y // 2 - 1) * jacobi(x * y, 3) * 2 * y,
            ),
        ],
        zero_when=lambda env: env.p % 4 == 3,
    ),
    rng="half",
    mod_exp=1,
    gate=(("min", 5),),
    cost="quadratic",
    note="case conditions use p = x^2 + y^2 with x == 1 (mod 4)",
)


# ---------------------------------------------------------------------------
# A79 -- (-1)^k C(2k,k)^2 T_k, Legendre values, and Fibonacci/Lucas twists
# ---------------------------------------------------------------------------

FORM_15_FREE = FormSpec(1, 1, 15)
FORM_35_FREE = FormSpec(1, 3, 5)
FORM_15_X1 = FormSpec(1, 1, 15, (("x_mod", 1, 3),))
FORM_35_Y1 = FormSpec(1, 3, 5, (("y_mod", 1, 3),))

sum_entry(
    "A79.i.a",
    terms=lambda env, k: Fraction((-1) ** k * _C2(k) * _T(k, 1, 1)),
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 15 in (1, 4),
                FORM_15_FREE,
                lambda env, x, y: 4 * x * x - 2 * env.p,
            ),
            (
                lambda env: env.p % 15 in (2, 8),
                FORM_35_FREE,
                lambda env, x, y: 2 * env.p - 12 * x * x,
            ),
        ],
        zero_when=lambda env: jacobi(env.p, 15) == -1,
    ),
    mod_exp=2,
    gate=(("min", 7),),
    cost="quadratic",
)

sum_entry(
    "A79.i.b",
    terms=lambda env, k: Fraction((105 * k + 44) * (-1) ** k * _C2(k) * _T(k, 1, 1)),
    rhs=lambda env: env.p
    * (20 + 24 * jacobi(env.p, 3) * (2 - Fraction(3) ** (env.p - 1))),
    mod_exp=3,
    gate=(("min", 5),),
    cost="quadratic",
)


def _a79_int_scan(bound: int) -> CheckResult:
    bad = []
    s = 0
    for n in range(1, bound + 1):
        k = n - 1
        s = (105 * k + 44) * _C2(k) * _T(k, 1, 1) - s
        q, r = divmod(s, 2 * n * comb(2 * n, n))
        if r or q <= 0:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A79.i.n", kind="DivisibilityScan", checker=_a79_int_scan, scan_max=60)


def _legendre_mod(n: int, z: int, m: int) -> int:
    w = (z - 1) * pow(2, -1, m) % m
    tot = 0
    wp = 1
    for k in range(n + 1):
        tot = (tot + comb(n, k) * comb(n + k, k) % m * wp) % m
        wp = wp * w % m
    return tot


def _a79_ii_checker(p: int, e: int = 1) -> CheckResult:
    if p % 15 not in (1, 4):
        return CheckResult.inapplicable()
    env = Env(p, 1)
    m = p * p
    target = _frac_mod(
        env.rep(
            FORM_15_FREE,
            lambda x, y: jacobi(x % 15, 15)
            * (Fraction(2 * x) - Fraction(p, 2 * x)),
        ),
        m,
    )
    ctx = PrimeCtx(p, 2)
    for s in sqrt_mod(-15 % m, ctx):
        for t in sqrt_mod(-3 % m, ctx):
            lhs = _legendre_mod((p - 1) // 2, (7 * s + 16 * t) % m, m)
            rhs = jacobi((-s) % p, p) * target % m
            if lhs != rhs:
                return CheckResult.failed(
                    {"modulus_exp": 2, "root_pair": (s % p, t % p)}
                )
    return CheckResult.passed({"modulus_exp": 2, "combos": 4})


custom_entry(
    "A79.ii",
    kind="SumCongruence",
    checker=_a79_ii_checker,
    mod_exp=2,
    gate=(("min", 7), ("mod", 15, (1, 4))),
    cost="quadratic",
)

_GATE_15P = (("min", 7), ("mod", 15, (1, 4)))
_GATE_15Q = (("min", 7), ("mod", 15, (2, 8)))

sum_entry(
    "A79.iii.p.kf",
    terms=lambda env, k: k * Fraction(_cc3(k) * _fib(k)) / Fraction(27) ** k,
    rhs=lambda env: env.rep(
        FORM_15_X1,
        lambda x, y: Fraction(2, 15) * (Fraction(env.p, x) - 2 * x),
    ),
    mod_exp=2,
    gate=_GATE_15P,
    cost="quadratic",
)
sum_entry(
    "A79.iii.p.l",
    terms=lambda env, k: Fraction(_cc3(k) * _luc(k)) / Fraction(27) ** k,
    rhs=lambda env: env.rep(
        FORM_15_X1, lambda x, y: 4 * x - Fraction(env.p, x)
    ),
    mod_exp=2,
    gate=_GATE_15P,
    cost="quadratic",
)
sum_entry(
    "A79.iii.p.wl",
    terms=lambda env, k: Fraction((3 * k + 2) * _cc3(k) * _luc(k)) / Fraction(27) ** k,
    rhs=lambda env: env.rep(FORM_15_X1, lambda x, y: Fraction(4 * x)),
    mod_exp=2,
    gate=_GATE_15P,
    cost="quadratic",
)
sum_entry(
    "A79.iii.q.f",
    terms=lambda env, k: Fraction(_cc3(k) * _fib(k)) / Fraction(27) ** k,
    rhs=lambda env: env.rep(
        FORM_35_Y1, lambda x, y: Fraction(env.p, 5 * y) - 4 * y
    ),
    mod_exp=2,
    gate=_GATE_15Q,
    cost="quadratic",
)
chain_entry(
    "A79.iii.q.k",
    sums=[
        (lambda env, k: k * Fraction(_cc3(k) * _fib(k)) / Fraction(27) ** k, None),
        (lambda env, k: k * Fraction(_cc3(k) * _luc(k)) / Fraction(27) ** k, None),
    ],
    rhs=lambda env: env.rep(FORM_35_Y1, lambda x, y: Fraction(4 * y, 3)),
    mod_exp=2,
    gate=_GATE_15Q,
    cost="quadratic",
)
sum_entry(
    "A79.rem.f",
    terms=lambda env, k: Fraction(_cc3(k) * _fib(k)) / Fraction(27) ** k,
    rhs=lambda env: Fraction(0),
    mod_exp=2,
    status="confirmed",
    gate=(("min", 5), ("mod", 3, (1,))),
    cost="quadratic",
)
sum_entry(
    "A79.rem.l",
    terms=lambda env, k: Fraction(_cc3(k) * _luc(k)) / Fraction(27) ** k,
    rhs=lambda env: Fraction(0),
    mod_exp=2,
    status="confirmed",
    gate=(("min", 5), ("mod", 3, (2,))),
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A80 -- C(2k,k)^2 T(10,1) / T_{2k}(6,1), and u/v(4,2) companions
# ---------------------------------------------------------------------------

FORM_6_FREE = FormSpec(1, 1, 6)
FORM_23_FREE = FormSpec(1, 2, 3)
FORM_6_X1 = FormSpec(1, 1, 6, (("x_mod", 1, 3),))
FORM_23_X1 = FormSpec(1, 2, 3, (("x_mod", 1, 3),))

_A80_CASES = genus_rhs(
    [
        (
            lambda env: env.p % 24 in (1, 7),
            FORM_6_FREE,
            lambda env, x, y: 4 * x * x - 2 * env.p,
        ),
        (
            lambda env: env.p % 24 in (5, 11),
            FORM_23_FREE,
            lambda env, x, y: 8 * x * x - 2 * env.p,
        ),
    ],
    zero_when=lambda env: env.jac(-6) == -1,
)

chain_entry(
    "A80.i.a",
    sums=[
        (lambda env, k: Fraction(_C2(k) * _T(k, 10, 1)) / Fraction(-64) ** k, None),
        (lambda env, k: jacobi(env.p, 3) * Fraction(_C2(k) * _T(2 * k, 6, 1))
         / Fraction(256) ** k, None),
        (lambda env, k: Fraction(_C2(k) * _T(2 * k, 6, 1)) / Fraction(1024) ** k, None),
    ],
    rhs=_A80_CASES,
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A80.i.b",
    terms=lambda env, k: Fraction((3 * k + 1) * _C2(k) * _T(k, 10, 1))
    / Fraction(-64) ** k,
    rhs=lambda env: Fraction(env.p, 4) * (3 * jacobi(env.p, 3) + 1),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
int_scan_entry(
    "A80.i.n",
    kind="DivisibilityScan",
    checker=seq_div_scan(
        lambda k: _C2(k) * _T(k, 10, 1),
        -64,
        (1, 3),
        lambda n: 2 * n * comb(2 * n, n),
        start=2,
    ),
    scan_max=50,
)
sum_entry(
    "A80.i.c",
    terms=lambda env, k: Fraction((16 * k + 5) * _C2(k) * _T(2 * k, 6, 1))
    / Fraction(256) ** k,
    rhs=lambda env: Fraction(8, 3) * env.p * jacobi(env.p, 3),
    mod_exp=2,
    gate=(("min", 5), ("jacobi", -6, 1)),
    cost="quadratic",
)
sum_entry(
    "A80.i.d",
    terms=lambda env, k: Fraction((16 * k + 3) * _C2(k) * _T(2 * k, 6, 1))
    / Fraction(1024) ** k,
    rhs=lambda env: Fraction(-2, 3) * env.p,
    mod_exp=2,
    gate=(("min", 5), ("jacobi", -6, 1)),
    cost="quadratic",
)

_GATE_24P = (("min", 5), ("mod", 24, (1, 7)))
_GATE_24Q = (("min", 5), ("mod", 24, (5, 11)))

sum_entry(
    "A80.ii.p.ku",
    terms=lambda env, k: k * Fraction(_cc3(k) * _lucas("u", 4, 2, k))
    / Fraction(108) ** k,
    rhs=lambda env: env.rep(
        FORM_6_X1, lambda x, y: Fraction(2 * x - Fraction(env.p, x), 6)
    ),
    mod_exp=2,
    gate=_GATE_24P,
    cost="quadratic",
)
sum_entry(
    "A80.ii.p.v",
    terms=lambda env, k: Fraction(_cc3(k) * _lucas("v", 4, 2, k)) / Fraction(108) ** k,
    rhs=lambda env: env.rep(
        FORM_6_X1, lambda x, y: 4 * x - Fraction(env.p, x)
    ),
    mod_exp=2,
    gate=_GATE_24P,
    cost="quadratic",
)
sum_entry(
    "A80.ii.p.wv",
    terms=lambda env, k: Fraction((3 * k - 1) * _cc3(k) * _lucas("v", 4, 2, k))
    / Fraction(108) ** k,
    rhs=lambda env: env.rep(FORM_6_X1, lambda x, y: Fraction(-2 * x)),
    mod_exp=2,
    gate=_GATE_24P,
    cost="quadratic",
)
sum_entry(
    "A80.ii.q.u",
    terms=lambda env, k: Fraction(_cc3(k) * _lucas("u", 4, 2, k)) / Fraction(108) ** k,
    rhs=lambda env: env.rep(
        FORM_23_X1, lambda x, y: 2 * x - Fraction(env.p, 4 * x)
    ),
    mod_exp=2,
    gate=_GATE_24Q,
    cost="quadratic",
)
sum_entry(
    "A80.ii.q.ku",
    terms=lambda env, k: k * Fraction(_cc3(k) * _lucas("u", 4, 2, k))
    / Fraction(108) ** k,
    rhs=lambda env: env.rep(FORM_23_X1, lambda x, y: Fraction(x, 3)),
    mod_exp=2,
    gate=_GATE_24Q,
    cost="quadratic",
)
sum_entry(
    "A80.ii.q.kv",
    terms=lambda env, k: k * Fraction(_cc3(k) * _lucas("v", 4, 2, k))
    / Fraction(108) ** k,
    rhs=lambda env: env.rep(FORM_23_X1, lambda x, y: Fraction(4 * x, 3)),
    mod_exp=2,
    gate=_GATE_24Q,
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A81 -- T(18,1) / T_{3k}(6,1) and the sqrt(5), sqrt(-35) series
# ---------------------------------------------------------------------------

FORM_4P_35 = FormSpec(4, 1, 35)
FORM_4P_57 = FormSpec(4, 5, 7)


def _a81_case(env: Env) -> Fraction:
    j5, j7 = jacobi(env.p, 5), jacobi(env.p, 7)
    return case_table(
        env,
        [
            (
                j5 == 1 and j7 == 1,
                lambda: env.rep(
                    FORM_4P_35, lambda x, y: Fraction(x * x - 2 * env.p)
                ),
            ),
            (
                j5 == -1 and j7 == -1,
                lambda: env.rep(
                    FORM_4P_57, lambda x, y: Fraction(2 * env.p - 5 * x * x)
                ),
            ),
            (j5 * j7 == -1, lambda: Fraction(0)),
        ],
    )


chain_entry(
    "A81.i.a",
    sums=[
        (lambda env, k: Fraction(_cc3(k) * _T(k, 18, 1)) / Fraction(512) ** k, None),
        (lambda env, k: env.jac(10) * Fraction(_cc3(k) * _T(3 * k, 6, 1))
         / Fraction(-512) ** k, None),
    ],
    rhs=_a81_case,
    mod_exp=2,
    gate=(("min", 11),),
    cost="quadratic",
)
sum_entry(
    "A81.i.b",
    terms=lambda env, k: Fraction((35 * k + 9) * _cc3(k) * _T(k, 18, 1))
    / Fraction(512) ** k,
    rhs=lambda env: Fraction(9 * env.p, 2) * (7 - 5 * jacobi(env.p, 5)),
    mod_exp=2,
    gate=(("min", 11),),
    cost="quadratic",
)
sum_entry(
    "A81.i.c",
    terms=lambda env, k: Fraction((35 * k + 9) * _cc3(k) * _T(3 * k, 6, 1))
    / Fraction(-512) ** k,
    rhs=lambda env: Fraction(9 * env.p, 32)
    * env.jac(2)
    * (25 + 7 * jacobi(env.p, 7)),
    mod_exp=2,
    gate=(("min", 11),),
    cost="quadratic",
    note="binomial weight read as C(2k,k)C(3k,k)",
)


def _a81_ii_checker(p: int, e: int = 1) -> CheckResult:
    if jacobi(p, 5) != 1 or jacobi(p, 7) != 1:
        return CheckResult.inapplicable()
    env = Env(p, 1)
    m = p * p
    inv = pow(3456, -1, m)
    ctx = PrimeCtx(p, 2)
    if p % 3 == 1:
        base = _frac_mod(
            env.rep(
                FORM_4P_35,
                lambda x, y: jacobi(x % 3, 3)
                * (Fraction(p, x) - Fraction(x)),
            ),
            m,
        )
    for t5 in sqrt_mod(5, ctx):
        for s35 in sqrt_mod(-35 % m, ctx):
            z = (64 + 27 * t5 + s35) % m
            s = 0
            zp = 1
            for k in range(p):
                s = (s + _cc3(k) % m * zp % m * pow(inv, k, m)) % m
                zp = zp * z % m
            if p % 3 == 1:
                rhs = base
            else:
                rhs = _frac_mod(
                    env.rep(
                        FORM_4P_35,
                        lambda x, y: jacobi(y % 3, 3)
                        * (Fraction(y) - Fraction(p, 35 * y)),
                    ),
                    m,
                ) * s35 % m
            if s != rhs:
                return CheckResult.failed(
                    {"modulus_exp": 2, "root_pair": (t5 % p, s35 % p)}
                )
    return CheckResult.passed({"modulus_exp": 2, "combos": 4})


custom_entry(
    "A81.ii",
    kind="SumCongruence",
    checker=_a81_ii_checker,
    mod_exp=2,
    gate=(("min", 11),),
    cost="quadratic",
    note="p == 1 (mod 3) right-hand side corrected against computation",
)


# ---------------------------------------------------------------------------
# A82 -- A85: C(2k,k)^2 T_{2k}(b,1) genus case tables
# ---------------------------------------------------------------------------

def _jp(d):
    return lambda env: jacobi(env.p, d)


def _j(d):
    return lambda env: env.jac(d)


sum_entry(
    "A82.a",
    terms=lambda env, k: Fraction(_C2(k) * _T(2 * k, 18, 1)) / Fraction(256) ** k,
    rhs=sym_case_rhs(
        (_j(2), _jp(3), _jp(5)),
        [
            ((1, 1, 1), FormSpec(1, 1, 30), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((-1, 1, -1), FormSpec(1, 3, 10), lambda env, x, y: 12 * x * x - 2 * env.p),
            ((1, -1, -1), FormSpec(1, 2, 15), lambda env, x, y: 2 * env.p - 8 * x * x),
            ((-1, -1, 1), FormSpec(2, 3, 10), lambda env, x, y: 2 * env.p - 6 * x * x),
        ],
    ),
    mod_exp=2,
    gate=(("min", 7),),
    cost="quadratic",
)
sum_entry(
    "A82.b",
    terms=lambda env, k: Fraction(_C2(k) * _T(2 * k, 30, 1)) / Fraction(256) ** k,
    rhs=sym_case_rhs(
        (_j(-2), _jp(3), _jp(7)),
        [
            ((1, 1, 1), FormSpec(1, 1, 42), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((1, -1, -1), FormSpec(1, 3, 14), lambda env, x, y: 12 * x * x - 2 * env.p),
            ((-1, -1, 1), FormSpec(1, 2, 21), lambda env, x, y: 2 * env.p - 8 * x * x),
            ((-1, 1, -1), FormSpec(2, 3, 14), lambda env, x, y: 2 * env.p - 6 * x * x),
        ],
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)

sum_entry(
    "A83.a",
    terms=lambda env, k: Fraction(_cc3(k) * _T(k, 102, 1)) / Fraction(102) ** (3 * k),
    rhs=sym_case_rhs(
        (_j(2), _jp(3), _jp(13)),
        [
            ((1, 1, 1), FormSpec(1, 1, 78), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((1, -1, -1), FormSpec(1, 2, 39), lambda env, x, y: 2 * env.p - 8 * x * x),
            ((-1, -1, 1), FormSpec(1, 3, 26), lambda env, x, y: 12 * x * x - 2 * env.p),
            ((-1, 1, -1), FormSpec(1, 6, 13), lambda env, x, y: 2 * env.p - 24 * x * x),
        ],
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (13, 17))),
    cost="quadratic",
)
sum_entry(
    "A83.b",
    terms=lambda env, k: Fraction(_cc3(k) * _T(k, 198, 1)) / Fraction(198) ** (3 * k),
    rhs=sym_case_rhs(
        (_j(2), _jp(3), _jp(17)),
        [
            ((1, 1, 1), FormSpec(1, 1, 102), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((-1, -1, 1), FormSpec(1, 2, 51), lambda env, x, y: 2 * env.p - 8 * x * x),
            ((-1, 1, -1), FormSpec(1, 3, 34), lambda env, x, y: 12 * x * x - 2 * env.p),
            ((1, -1, -1), FormSpec(1, 6, 17), lambda env, x, y: 2 * env.p - 24 * x * x),
        ],
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (11, 17))),
    cost="quadratic",
)

_A84_CASES = sym_case_rhs(
    (_j(2), _jp(5), _jp(19)),
    [
        ((1, 1, 1), FormSpec(1, 1, 190), lambda env, x, y: 4 * x * x - 2 * env.p),
        ((1, -1, -1), FormSpec(1, 2, 95), lambda env, x, y: 8 * x * x - 2 * env.p),
        ((-1, -1, 1), FormSpec(1, 5, 38), lambda env, x, y: 2 * env.p - 20 * x * x),
        ((-1, 1, -1), FormSpec(1, 10, 19), lambda env, x, y: 2 * env.p - 40 * x * x),
    ],
)

sum_entry(
    "A84.a",
    terms=lambda env, k: Fraction(_C2(k) * _T(2 * k, 5778, 1))
    / Fraction(1216) ** (2 * k),
    rhs=_A84_CASES,
    mod_exp=2,
    gate=(("min", 3), ("not", (5, 19))),
    cost="quadratic",
)
sum_entry(
    "A84.b",
    terms=lambda env, k: Fraction((57720 * k + 24893) * _C2(k) * _T(2 * k, 5778, 1))
    / Fraction(1216) ** (2 * k),
    rhs=lambda env: env.p * (11548 + 13345 * jacobi(env.p, 95)),
    mod_exp=2,
    gate=(("min", 3), ("not", (5, 19))),
    cost="quadratic",
)
chain_entry(
    "A84.c",
    sums=[
        (lambda env, k: Fraction(_C2(k) * _T(2 * k, 5778, 1))
         / Fraction(439280) ** (2 * k), None),
        (lambda env, k: jacobi(env.p, 5) * Fraction(_C2(k) * _T(2 * k, 5778, 1))
         / Fraction(1216) ** (2 * k), None),
    ],
    mod_exp=2,
    gate=(("min", 3), ("not", (5, 17, 19))),
    cost="quadratic",
)
sum_entry(
    "A84.d",
    terms=lambda env, k: Fraction((57720 * k + 3967) * _C2(k) * _T(2 * k, 5778, 1))
    / Fraction(439280) ** (2 * k),
    rhs=lambda env: env.p
    * jacobi(env.p, 19)
    * (3983 - 16 * jacobi(env.p, 95)),
    mod_exp=2,
    gate=(("min", 3), ("not", (5, 17, 19))),
    cost="quadratic",
)

chain_entry(
    "A85.a",
    sums=[
        (lambda env, k: Fraction(_C2(k) * _T(2 * k, 198, 1))
         / Fraction(224) ** (2 * k), None),
        (lambda env, k: jacobi(env.p, 7) * Fraction(_C2(k) * _T(2 * k, 322, 1))
         / Fraction(48) ** (4 * k), None),
    ],
    rhs=sym_case_rhs(
        (_j(2), _jp(5), _jp(7)),
        [
            ((1, 1, 1), FormSpec(1, 1, 70), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((-1, -1, 1), FormSpec(1, 2, 35), lambda env, x, y: 8 * x * x - 2 * env.p),
            ((-1, 1, -1), FormSpec(1, 5, 14), lambda env, x, y: 2 * env.p - 20 * x * x),
            ((1, -1, -1), FormSpec(1, 7, 10), lambda env, x, y: 28 * x * x - 2 * env.p),
        ],
    ),
    mod_exp=2,
    gate=(("min", 7), ("not", (7,))),
    cost="quadratic",
)
sum_entry(
    "A85.b",
    terms=lambda env, k: Fraction(_C2(k) * _T(2 * k, 322, 1))
    / Fraction(-82944) ** k,
    rhs=sym_case_rhs(
        (_j(-1), _jp(5), _jp(17)),
        [
            ((1, 1, 1), FormSpec(1, 1, 85), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((-1, -1, 1), FormSpec(2, 1, 85), lambda env, x, y: 2 * env.p - 2 * x * x),
            ((1, -1, -1), FormSpec(1, 5, 17), lambda env, x, y: 2 * env.p - 20 * x * x),
            ((-1, 1, -1), FormSpec(2, 5, 17), lambda env, x, y: 10 * x * x - 2 * env.p),
        ],
    ),
    mod_exp=2,
    gate=(("min", 7), ("not", (17,))),
    cost="quadratic",
)
sum_entry(
    "A85.c",
    terms=lambda env, k: Fraction(_C2(k) * _T(2 * k, 1298, 1))
    / Fraction(24) ** (4 * k),
    rhs=sym_case_rhs(
        (_j(-2), _jp(5), _jp(13)),
        [
            ((1, 1, 1), FormSpec(1, 1, 130), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((1, -1, -1), FormSpec(1, 2, 65), lambda env, x, y: 8 * x * x - 2 * env.p),
            ((-1, 1, -1), FormSpec(1, 5, 26), lambda env, x, y: 2 * env.p - 20 * x * x),
            ((-1, -1, 1), FormSpec(1, 10, 13), lambda env, x, y: 2 * env.p - 40 * x * x),
        ],
    ),
    mod_exp=2,
    gate=(("min", 7), ("not", (13,))),
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A86 -- C(4k,2k)C(2k,k) T_k families and the double sums
# ---------------------------------------------------------------------------

def _c42(k: int) -> int:
    return comb(4 * k, 2 * k) * comb(2 * k, k)


sum_entry(
    "A86.i.a",
    terms=lambda env, k: Fraction(_c42(k) * _T(k, 2702, 1)) / Fraction(384) ** (2 * k),
    rhs=sym_case_rhs(
        (_j(-1), _jp(3), _jp(11)),
        [
            ((1, 1, 1), FormSpec(1, 1, 33), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((1, -1, -1), FormSpec(2, 1, 33), lambda env, x, y: 2 * env.p - 2 * x * x),
            ((-1, -1, 1), FormSpec(1, 3, 11), lambda env, x, y: 12 * x * x - 2 * env.p),
            ((-1, 1, -1), FormSpec(2, 3, 11), lambda env, x, y: 2 * env.p - 6 * x * x),
        ],
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (11,))),
    cost="quadratic",
)
sum_entry(
    "A86.i.b",
    terms=lambda env, k: Fraction((220 * k + 119) * _c42(k) * _T(k, 2702, 1))
    / Fraction(384) ** (2 * k),
    rhs=lambda env: Fraction(env.p, 2)
    * jacobi(env.p, 3)
    * (55 + 183 * env.jac(-1)),
    mod_exp=2,
    gate=(("min", 5), ("not", (11,))),
    cost="quadratic",
)
sum_entry(
    "A86.ii.a",
    terms=lambda env, k: jacobi(env.p, 7)
    * Fraction(_c42(k) * _T(k, 115598, 1))
    / Fraction(2688) ** (2 * k),
    rhs=sym_case_rhs(
        (_j(-1), _jp(3), _jp(19)),
        [
            ((1, 1, 1), FormSpec(1, 1, 57), lambda env, x, y: 4 * x * x - 2 * env.p),
            ((1, -1, -1), FormSpec(2, 1, 57), lambda env, x, y: 2 * env.p - 2 * x * x),
            ((-1, 1, -1), FormSpec(1, 3, 19), lambda env, x, y: 12 * x * x - 2 * env.p),
            ((-1, -1, 1), FormSpec(2, 3, 19), lambda env, x, y: 2 * env.p - 6 * x * x),
        ],
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (7, 19))),
    cost="quadratic",
)
sum_entry(
    "A86.ii.b",
    terms=lambda env, k: Fraction((260 * k + 513) * _c42(k) * _T(k, 115598, 1))
    / Fraction(2688) ** (2 * k),
    rhs=lambda env: Fraction(env.p, 2) * env.jac(21) * (961 + 65 * env.jac(-1)),
    mod_exp=2,
    gate=(("min", 5), ("not", (7, 19))),
    cost="quadratic",
)


@lru_cache(maxsize=None)
def _a86_inner(n: int) -> Fraction:
    return sum(
        Fraction(comb(n, k) * comb(n + 2 * k, 2 * k) * comb(2 * k, k))
        / Fraction(64) ** k
        for k in range(n + 1)
    )


@lru_cache(maxsize=None)
def _a86_inner4(n: int) -> int:
    return sum(
        comb(n, k) * comb(n + 2 * k, 2 * k) * comb(2 * k, k) * 196 ** (n - k)
        for k in range(n + 1)
    )


def _a86_iii_case(env: Env) -> Fraction:
    j3, j17 = jacobi(env.p, 3), jacobi(env.p, 17)
    return case_table(
        env,
        [
            (
                j3 == 1 and j17 == 1,
                lambda: env.rep(
                    FormSpec(4, 1, 51), lambda x, y: Fraction(x * x - 2 * env.p)
                ),
            ),
            (
                j3 == -1 and j17 == -1,
                lambda: env.rep(
                    FormSpec(4, 3, 17),
                    lambda x, y: Fraction(3 * x * x - 2 * env.p),
                ),
            ),
            (j3 * j17 == -1, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A86.iii.a",
    terms=lambda env, n: comb(2 * n, n) * _a86_inner(n),
    rhs=_a86_iii_case,
    mod_exp=2,
    gate=(("min", 5), ("not", (17,))),
    cost="quadratic",
)
sum_entry(
    "A86.iii.b",
    terms=lambda env, n: (17 * n + 9) * comb(2 * n, n) * _a86_inner(n),
    rhs=lambda env: Fraction(env.p, 3) * (34 * jacobi(env.p, 17) - 7),
    mod_exp=2,
    gate=(("min", 5), ("not", (17,))),
    cost="quadratic",
)


def _a86_iv_case(env: Env) -> Fraction:
    j2, j11 = env.jac(2), jacobi(env.p, 11)
    return case_table(
        env,
        [
            (
                j2 == 1 and j11 == 1,
                lambda: env.rep(
                    FormSpec(1, 1, 22), lambda x, y: Fraction(4 * x * x - 2 * env.p)
                ),
            ),
            (
                j2 == -1 and j11 == -1,
                lambda: env.rep(
                    FormSpec(1, 2, 11),
                    lambda x, y: Fraction(8 * x * x - 2 * env.p),
                ),
            ),
            (j2 * j11 == -1, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A86.iv.a",
    terms=lambda env, n: Fraction(comb(2 * n, n) * _a86_inner4(n))
    / Fraction(400) ** n,
    rhs=_a86_iv_case,
    mod_exp=2,
    gate=(("min", 7), ("not", (11,))),
    cost="quadratic",
    note="first case right-hand side corrected against computation",
)
sum_entry(
    "A86.iv.b",
    terms=lambda env, n: Fraction((33 * n + 19) * comb(2 * n, n) * _a86_inner4(n))
    / Fraction(400) ** n,
    rhs=lambda env: Fraction(19 * env.p),
    mod_exp=2,
    gate=(("min", 7), ("not", (11,))),
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A87 / A88 -- binomial divisibility
# ---------------------------------------------------------------------------

def _a87_scan(bound: int) -> CheckResult:
    c63 = [comb(6 * n, 3 * n) * comb(3 * n, n) for n in range(bound + 1)]
    bad = []
    for n in range(1, bound + 1):
        s = sum(c63[k] * c63[n - k] for k in range(n + 1))
        if s % (8 * (2 * n - 1) * comb(3 * n, n)):
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A87", kind="DivisibilityScan", checker=_a87_scan, scan_max=200)


def _a88_scan(bound: int) -> CheckResult:
    """Weak finite form: a prime factor of k missing from l forces a
    counterexample n to (ln+1) | C(kn+ln, kn) below the bound."""
    missing = []
    for k, l in ((2, 1), (3, 1), (2, 3), (5, 3), (6, 4)):
        if not any(
            comb(k * n + l * n, k * n) % (l * n + 1) for n in range(1, bound + 1)
        ):
            missing.append((k, l))
    if missing:
        return CheckResult.failed({"violations": missing, "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A88", kind="ExistenceScan", checker=_a88_scan, scan_max=60)


def _a88_rem_scan(bound: int) -> CheckResult:
    bad = []
    for k, l in ((2, 1), (3, 2), (4, 3), (5, 1), (6, 4)):
        for n in range(1, bound + 1):
            m = (l * n + 1) // gcd(k, l * n + 1)
            if comb(k * n + l * n, k * n) % m:
                bad.append((k, l, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry(
    "A88.rem",
    kind="DivisibilityScan",
    checker=_a88_rem_scan,
    scan_max=60,
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A89 -- s_n = C(6n,3n)C(3n,n)/(2(2n+1)C(2n,n)) and its companion series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _s89(n: int) -> int:
    q, r = divmod(comb(6 * n, 3 * n) * comb(3 * n, n), 2 * (2 * n + 1) * comb(2 * n, n))
    if r:
        raise ArithmeticError("s_n is not an integer")
    return q


sum_entry(
    "A89.p",
    terms=lambda env, k: Fraction(_s89(k)) / Fraction(108) ** k,
    rhs=lambda env: Fraction(0 if env.p % 12 in (1, 11) else -1),
    rng="full1",
    mod_exp=1,
    gate=(("min", 5),),
    cost="quadratic",
)


def _arcsin_series(c: Fraction, nmax: int) -> list[Fraction]:
    """Taylor coefficients of cos(c*arcsin(y)) (even) and sin(c*arcsin(y))
    (odd) both satisfy g_{m+2} = (m^2 - c^2) g_m / ((m+1)(m+2))."""
    out = [Fraction(1), c]
    for m in range(nmax - 1):
        out.append((m * m - c * c) * out[m] / ((m + 1) * (m + 2)))
    return out


def _a89_t_scan(bound: int) -> CheckResult:
    from sympy import isprime

    g = _arcsin_series(Fraction(2, 3), 2 * bound + 2)
    bad = []
    for k in range(1, bound + 1):
        t = -(Fraction(108) ** k) * g[2 * k] / 24
        s = Fraction(3, 4) * Fraction(108) ** k * g[2 * k + 1]
        if t.denominator != 1 or t <= 0 or s != _s89(k):
            bad.append(k)
            continue
        if isprime(k) and (int(t) + 2) % k:
            bad.append(k)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A89.t", kind="ResidueScan", checker=_a89_t_scan, scan_max=120)


def _a89_int_scan(bound: int) -> CheckResult:
    try:
        for n in range(1, bound + 1):
            _s89(n)
    except ArithmeticError:
        return CheckResult.failed({"violations": [n], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry(
    "A89.rem",
    kind="DivisibilityScan",
    checker=_a89_int_scan,
    scan_max=200,
    status="confirmed",
)
