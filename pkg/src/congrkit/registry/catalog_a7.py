"""Open catalog, seventh block: Apery-polynomial / Delannoy-polynomial
normalizations, Motzkin and central-trinomial sums, and the T_k(b,c)^3
genus families."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..padic import jacobi
from ..quadrep import FormSpec
from ..seqgen import apery_A, delannoy_D, motzkin_M, trinomial_T
from .core import (
    CheckResult,
    Env,
    SkipEntry,
    case_table,
    chain_entry,
    congruence_paths,
    custom_entry,
    int_scan_entry,
    sum_entry,
)
from .lib import genus_rhs, harmonic_cached, nu


@lru_cache(maxsize=None)
def _T(k: int, b: int, c: int) -> int:
    return trinomial_T(k, b, c)


@lru_cache(maxsize=None)
def _M(k: int, b: int, c: int) -> int:
    return motzkin_M(k, b, c)


@lru_cache(maxsize=None)
def _Dx(k: int, x) -> Fraction:
    return Fraction(delannoy_D(k, x))


@lru_cache(maxsize=None)
def _Ax(k: int, x) -> Fraction:
    return Fraction(apery_A(k, x))


def _nu2_fact(n: int) -> int:
    # nu_2(n!) by Legendre's formula
    v = 0
    while n:
        n //= 2
        v += n
    return v


def _nu_frac(x: Fraction, p: int) -> int | None:
    """p-adic valuation of a rational, None standing for +infinity at 0."""
    if x == 0:
        return None
    return nu(x.numerator, p) - nu(x.denominator, p)


# ---------------------------------------------------------------------------
# A67 -- normalized alternating Apery / Delannoy-cube partial sums
# ---------------------------------------------------------------------------

def _s_value(n: int) -> Fraction:
    return sum(
        (2 * k + 1) * (-1) ** k * _Ax(k, Fraction(1, 4)) for k in range(n)
    ) / Fraction(n * n)


def _t_value(n: int) -> Fraction:
    return sum(
        (2 * k + 1) * (-1) ** k * _Dx(k, Fraction(-1, 4)) ** 3 for k in range(n)
    ) / Fraction(n * n)


def _a67_s_scan(bound: int) -> CheckResult:
    bad = []
    for n in range(1, bound + 1):
        s = _s_value(n)
        ok = s.denominator == 2 ** (2 * _nu2_fact(n))
        if ok:
            ok = s.numerator % 12 == (1 if n % 2 else 7)
        if not ok:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


def _a67_t_scan(bound: int) -> CheckResult:
    bad = []
    for n in range(1, bound + 1):
        t = _t_value(n)
        target = 2 ** (3 * (n - 1 + _nu2_fact(n)) - nu(n, 2))
        if t.denominator != target:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A67.i.s", kind="DenominatorScan", checker=_a67_s_scan, scan_max=48)
int_scan_entry("A67.i.t", kind="DenominatorScan", checker=_a67_t_scan, scan_max=48)


def _a67_pp_checker(p: int, e: int = 1) -> CheckResult:
    """s(p^a) and t(p^a) mod p (stronger moduli at p = 3), via the un-normalized
    sums so that both evaluation routes apply."""
    witness = {"args_checked": 0}
    a = 1
    while p ** a <= 250:
        n = p ** a
        terms_s = [(2 * k + 1) * (-1) ** k * _Ax(k, Fraction(1, 4)) for k in range(n)]
        terms_t = [
            (2 * k + 1) * (-1) ** k * _Dx(k, Fraction(-1, 4)) ** 3 for k in range(n)
        ]
        if p == 3:
            jobs = [
                (terms_s, 2 * a + 2, Fraction(4 * 9 ** a)),
                (terms_t, 2 * a + 5, Fraction(-8 * 9 ** a)),
            ]
        else:
            jobs = [
                (terms_s, 2 * a + 1, Fraction(p ** (2 * a))),
                (terms_t, 2 * a + 1, Fraction(p ** (2 * a))),
            ]
        for terms, target, rhs in jobs:
            ok_f, ok_o, _, _, w = congruence_paths(p, target, terms, rhs)
            if ok_f != ok_o:
                return CheckResult.error(f"path disagreement at a={a}")
            if not ok_f:
                witness.update({"a": a, "diff_val": w["diff_val"]})
                return CheckResult.failed(witness)
            witness["args_checked"] += 1
        a += 1
    return CheckResult.passed(witness)


custom_entry(
    "A67.i.pp",
    kind="SumCongruence",
    checker=_a67_pp_checker,
    mod_exp=1,
    gate=(("min", 3),),
    cost="quadratic",
)


def _a67_val_scan(poly):
    """Valuation-bound scan shared by the Apery and Delannoy-cube halves."""
    samples = (
        Fraction(0),
        Fraction(1),
        Fraction(2),
        Fraction(3),
        Fraction(5),
        Fraction(7),
        Fraction(-1),
        Fraction(-6),
        Fraction(19),
        Fraction(1, 4),
        Fraction(-1, 4),
        Fraction(5, 3),
    )
    term, shift = poly

    def run(bound: int) -> CheckResult:
        bad = []
        for x in samples:
            partial = []
            s = Fraction(0)
            for k in range(bound):
                s += (2 * k + 1) * (-1) ** k * term(k, x)
                partial.append(s)
            for p in (2, 3, 5, 7):
                if x.denominator % p == 0:
                    continue
                vx = _nu_frac(4 * x + shift, p)
                for n in range(1, bound + 1):
                    floor = min(nu(n, p), vx) if vx is not None else nu(n, p)
                    vs = _nu_frac(partial[n - 1] / n, p)
                    if vs is not None and vs < floor:
                        bad.append((p, str(x), n))
        if bad:
            return CheckResult.failed({"violations": bad[:10], "max_n": bound})
        return CheckResult.passed({"max_n": bound})

    return run


int_scan_entry(
    "A67.ii.a",
    kind="ValuationBound",
    checker=_a67_val_scan((_Ax, -1)),
    scan_max=40,
)
int_scan_entry(
    "A67.ii.b",
    kind="ValuationBound",
    checker=_a67_val_scan((lambda k, x: _Dx(k, x) ** 3, 1)),
    scan_max=40,
)


# ---------------------------------------------------------------------------
# A68 -- (2k+1) D_k(x)^3 and D_k(x)^4 at integer arguments
# ---------------------------------------------------------------------------

def _a68_checker(p: int, e: int = 1) -> CheckResult:
    witness = {"modulus_exp": 2, "args_checked": 0}
    for x in (1, 2, 3, 4, -3):
        if x % p == 0 or (x + 1) % p == 0:
            continue
        xf = Fraction(x)
        jobs = [
            (
                [(2 * k + 1) * (-1) ** k * _Dx(k, xf) ** 3 for k in range(p)],
                p * jacobi(4 * x + 1, p),
            ),
            ([(2 * k + 1) * _Dx(k, xf) ** 4 for k in range(p)], p),
        ]
        for terms, rhs in jobs:
            ok_f, ok_o, _, _, w = congruence_paths(p, 2, terms, Fraction(rhs))
            if ok_f != ok_o:
                return CheckResult.error(f"path disagreement at x={x}")
            if not ok_f:
                witness.update({"arg": x, "diff_val": w["diff_val"]})
                return CheckResult.failed(witness)
            witness["args_checked"] += 1
    return CheckResult.passed(witness)


custom_entry(
    "A68",
    kind="SumCongruence",
    checker=_a68_checker,
    mod_exp=2,
    gate=(("min", 3),),
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A69 -- Delannoy-polynomial cubes and their u/v(6,1) companions
# ---------------------------------------------------------------------------

FORM_3_FREE = FormSpec(1, 1, 3)
FORM_6_FREE = FormSpec(1, 1, 6)
FORM_23_FREE = FormSpec(1, 2, 3)
FORM_15_FREE = FormSpec(1, 1, 15)
FORM_35_FREE = FormSpec(1, 3, 5)

chain_entry(
    "A69.i.a",
    sums=[
        (lambda env, k: _Dx(k, Fraction(-3)) ** 3, None),
        (lambda env, k: (-1) ** k * _Dx(k, Fraction(2)) ** 3, None),
        (lambda env, k: (-1) ** k * _Dx(k, Fraction(-1, 4)) ** 3, None),
        (lambda env, k: env.jac(-2) * (-1) ** k * _Dx(k, Fraction(1, 8)) ** 3, None),
    ],
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 3 == 1,
                FORM_3_FREE,
                lambda env, x, y: env.jac(-1) * (4 * x * x - 2 * env.p),
            ),
        ],
        zero_when=lambda env: env.p % 3 == 2,
    ),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)

sum_entry(
    "A69.i.b",
    terms=lambda env, k: env.jac(-1) * (-1) ** k * _Dx(k, Fraction(1, 2)) ** 3,
    rhs=genus_rhs(
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
    ),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)

chain_entry(
    "A69.i.c",
    sums=[
        (lambda env, k: _Dx(k, Fraction(3)) ** 3, None),
        (lambda env, k: (-1) ** k * _Dx(k, Fraction(-4)) ** 3, None),
        (lambda env, k: env.jac(-5) * (-1) ** k * _Dx(k, Fraction(-1, 16)) ** 3, None),
    ],
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
                lambda env, x, y: 12 * x * x - 2 * env.p,
            ),
        ],
        zero_when=lambda env: jacobi(env.p, 15) == -1,
    ),
    mod_exp=2,
    gate=(("min", 7),),
    cost="quadratic",
)


_LUCAS_CACHE: dict[tuple[str, int, int], list[int]] = {}


def _lucas(kind: str, A: int, B: int, n: int) -> int:
    seq = _LUCAS_CACHE.setdefault((kind, A, B), [0, 1] if kind == "u" else [2, A])
    while len(seq) <= n:
        seq.append(A * seq[-1] - B * seq[-2])
    return seq[n]


@lru_cache(maxsize=None)
def _D(k: int) -> int:
    return delannoy_D(k)


def _d3u(env: Env, k: int) -> Fraction:
    return Fraction(_D(k) ** 3 * _lucas("u", 6, 1, k))


def _d3v(env: Env, k: int) -> Fraction:
    return Fraction(_D(k) ** 3 * _lucas("v", 6, 1, k))


_GATE_24M = (("mod", 24, (13, 17, 19, 23)),)
_GATE_24P = (("mod", 24, (1, 7)),)
_GATE_24Q = (("mod", 24, (5, 11)),)

sum_entry("A69.ii.m.u", terms=_d3u, rhs=lambda env: Fraction(0), mod_exp=2,
          gate=_GATE_24M, cost="quadratic")
sum_entry("A69.ii.m.v", terms=_d3v, rhs=lambda env: Fraction(0), mod_exp=2,
          gate=_GATE_24M, cost="quadratic")

sum_entry("A69.ii.p.u", terms=_d3u, rhs=lambda env: Fraction(0), mod_exp=2,
          gate=_GATE_24P, cost="quadratic")
sum_entry(
    "A69.ii.p.ku",
    terms=lambda env, k: k * _d3u(env, k),
    rhs=lambda env: env.rep(
        FORM_6_FREE, lambda x, y: Fraction(-11 * x * x, 96)
    ),
    mod_exp=2,
    gate=_GATE_24P,
    cost="quadratic",
)
sum_entry(
    "A69.ii.p.v",
    terms=_d3v,
    rhs=lambda env: env.rep(FORM_6_FREE, lambda x, y: Fraction(8 * x * x - 4 * env.p)),
    mod_exp=2,
    gate=_GATE_24P,
    cost="quadratic",
)
sum_entry(
    "A69.ii.p.wv",
    terms=lambda env, k: (2 * k + 1) * _d3v(env, k),
    rhs=lambda env: Fraction(-env.p, 4),
    mod_exp=2,
    gate=_GATE_24P,
    cost="quadratic",
)

sum_entry(
    "A69.ii.q.u",
    terms=_d3u,
    rhs=lambda env: env.rep(FORM_23_FREE, lambda x, y: Fraction(8 * x * x - 2 * env.p)),
    mod_exp=2,
    gate=_GATE_24Q,
    cost="quadratic",
)
sum_entry(
    "A69.ii.q.wu",
    terms=lambda env, k: (128 * k + 53) * _d3u(env, k),
    rhs=lambda env: Fraction(30 * env.p),
    mod_exp=2,
    gate=_GATE_24Q,
    cost="quadratic",
    note="defect valuation is exactly 2 at most applicable primes",
)
sum_entry(
    "A69.ii.q.v",
    terms=_d3v,
    rhs=lambda env: env.rep(
        FORM_23_FREE, lambda x, y: Fraction(12 * env.p - 48 * x * x)
    ),
    mod_exp=2,
    gate=_GATE_24Q,
    cost="quadratic",
)
sum_entry(
    "A69.ii.q.wv",
    terms=lambda env, k: (144 * k + 61) * _d3v(env, k),
    rhs=lambda env: Fraction(-186 * env.p),
    mod_exp=2,
    gate=_GATE_24Q,
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A70 -- Motzkin / central-trinomial sums
# ---------------------------------------------------------------------------

sum_entry(
    "A70.a",
    terms=lambda env, k: Fraction(_M(k, 1, 1) ** 2),
    rhs=lambda env: (2 - 6 * env.p) * Fraction(jacobi(env.p, 3)),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A70.b",
    terms=lambda env, k: k * Fraction(_M(k, 1, 1) ** 2),
    rhs=lambda env: (9 * env.p - 1) * Fraction(jacobi(env.p, 3)),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A70.c",
    terms=lambda env, k: Fraction(_T(k, 1, 1) * _M(k, 1, 1)),
    rhs=lambda env: Fraction(4, 3) * jacobi(env.p, 3)
    + Fraction(env.p, 6) * (1 - 9 * jacobi(env.p, 3)),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A70.d",
    terms=lambda env, k: Fraction(_T(k, 1, 1)) * harmonic_cached(k) / Fraction(3) ** k,
    rhs=lambda env: Fraction(3 + jacobi(env.p, 3), 2)
    - env.p * (1 + jacobi(env.p, 3)),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A70.rem",
    terms=lambda env, k: Fraction(_T(k, 1, 1) ** 2),
    rhs=lambda env: Fraction(env.jac(-1)),
    mod_exp=1,
    status="confirmed",
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A71 / A72 -- T_k(b,c) M_k(b,c) and (8ck+4c+b) T_k(b,c^2)^2 families
# ---------------------------------------------------------------------------

_TM_SAMPLES = ((1, 1), (2, 3), (3, 1), (1, -1), (4, 1))


def _a71_div_scan(bound: int) -> CheckResult:
    bad = []
    for b, c in _TM_SAMPLES:
        d = b * b - 4 * c
        s = 0
        for n in range(1, bound + 1):
            k = n - 1
            s = d * s + _T(k, b, c) * _M(k, b, c)
            if s % n:
                bad.append((b, c, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A71.i.n", kind="DivisibilityScan", checker=_a71_div_scan, scan_max=60)


def _a71_prime_checker(p: int, e: int = 1) -> CheckResult:
    witness = {"modulus_exp": 2, "args_checked": 0}
    for b, c in _TM_SAMPLES:
        d = b * b - 4 * c
        if (c * d) % p == 0:
            continue
        terms = [
            Fraction(_T(k, b, c) * _M(k, b, c)) / Fraction(d) ** k for k in range(p)
        ]
        rhs = Fraction(p * b * b, 2 * c) * (jacobi(d, p) - 1)
        ok_f, ok_o, _, _, w = congruence_paths(p, 2, terms, rhs)
        if ok_f != ok_o:
            return CheckResult.error(f"path disagreement at (b,c)=({b},{c})")
        if not ok_f:
            witness.update({"arg": (b, c), "diff_val": w["diff_val"]})
            return CheckResult.failed(witness)
        witness["args_checked"] += 1
    return CheckResult.passed(witness)


custom_entry(
    "A71.i.p",
    kind="SumCongruence",
    checker=_a71_prime_checker,
    mod_exp=2,
    gate=(("min", 3),),
    cost="quadratic",
)

sum_entry(
    "A71.ii",
    terms=lambda env, k: Fraction(_T(k, 3, 3) * _M(k, 3, 3)) / Fraction(-3) ** k,
    rhs=lambda env: case_table(
        env,
        [
            (env.p % 3 == 1, lambda: Fraction(2 * env.p ** 2)),
            (
                env.p % 3 == 2,
                lambda: Fraction(env.p ** 3 - env.p ** 2 - 3 * env.p),
            ),
        ],
    ),
    mod_exp=lambda p, e: 3 if p % 3 == 1 else 4,
    gate=(("min", 5),),
    cost="quadratic",
)


def _a71_rem_checker(p: int, e: int = 1) -> CheckResult:
    """Proved mod-p statements over the same (b, c) sample set."""
    for b, c in _TM_SAMPLES:
        d = b * b - 4 * c
        d2 = b * b - 4 * c * c
        if (c * d) % p == 0:
            continue
        jobs = [
            (
                [Fraction(_T(k, b, c) * _M(k, b, c)) / Fraction(d) ** k
                 for k in range(p)],
                Fraction(0),
            )
        ]
        if (b - 2 * c) % p and d2 % p and c % p:
            jobs.append(
                (
                    [
                        Fraction(_T(k, b, c * c)) * harmonic_cached(k)
                        / Fraction(b - 2 * c) ** k
                        for k in range(p)
                    ],
                    1 + jacobi(d2, p) + Fraction(b, 2 * c) * (jacobi(d2, p) - 1),
                )
            )
            jobs.append(
                (
                    [
                        Fraction(_T(k, b, c * c) * _M(k, b, c * c))
                        / Fraction(b - 2 * c) ** (2 * k)
                        for k in range(p)
                    ],
                    Fraction(4 * b, b + 2 * c) * jacobi(d2, p),
                )
            )
        for terms, rhs in jobs:
            if isinstance(rhs, Fraction) and rhs.denominator % p == 0:
                continue
            ok_f, ok_o, _, _, w = congruence_paths(p, 1, terms, Fraction(rhs))
            if ok_f != ok_o:
                return CheckResult.error(f"path disagreement at (b,c)=({b},{c})")
            if not ok_f:
                return CheckResult.failed({"arg": (b, c), "diff_val": w["diff_val"]})
    return CheckResult.passed({"modulus_exp": 1})


custom_entry(
    "A71.rem",
    kind="SumCongruence",
    checker=_a71_rem_checker,
    mod_exp=1,
    status="confirmed",
    gate=(("min", 3),),
    cost="quadratic",
)


def _a72_div_scan(bound: int) -> CheckResult:
    bad = []
    for b, c in _TM_SAMPLES:
        d = (b - 2 * c) ** 2
        s = 0
        for n in range(1, bound + 1):
            k = n - 1
            s = d * s + (8 * c * k + 4 * c + b) * _T(k, b, c * c) ** 2
            if s % n:
                bad.append((b, c, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A72.n", kind="DivisibilityScan", checker=_a72_div_scan, scan_max=60)


def _a72_prime_checker(p: int, e: int = 1) -> CheckResult:
    witness = {"modulus_exp": 2, "args_checked": 0}
    for b, c in _TM_SAMPLES:
        if (b * (b - 2 * c)) % p == 0:
            continue
        terms = [
            Fraction((8 * c * k + 4 * c + b) * _T(k, b, c * c) ** 2)
            / Fraction(b - 2 * c) ** (2 * k)
            for k in range(p)
        ]
        rhs = Fraction(p * (b + 2 * c) * jacobi(b * b - 4 * c * c, p))
        ok_f, ok_o, _, _, w = congruence_paths(p, 2, terms, rhs)
        if ok_f != ok_o:
            return CheckResult.error(f"path disagreement at (b,c)=({b},{c})")
        if not ok_f:
            witness.update({"arg": (b, c), "diff_val": w["diff_val"]})
            return CheckResult.failed(witness)
        witness["args_checked"] += 1
    return CheckResult.passed(witness)


custom_entry(
    "A72.p",
    kind="SumCongruence",
    checker=_a72_prime_checker,
    mod_exp=2,
    gate=(("min", 3),),
    cost="quadratic",
)


def _a72_identity_scan(bound: int) -> CheckResult:
    bad = []
    s = 0
    for n in range(1, bound + 1):
        k = n - 1
        s = 3 * s + (2 * k + 1) * _T(k, 1, 1)
        rhs = n * sum(
            comb(n - 1, k) * (-1) ** (n - 1 - k) * (k + 1) * comb(2 * k, k)
            for k in range(n)
        )
        if s != rhs:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry(
    "A72.rem.id",
    kind="IdentityScan",
    checker=_a72_identity_scan,
    scan_max=60,
    status="confirmed",
)

sum_entry(
    "A72.rem.w",
    terms=lambda env, k: Fraction((2 * k + 1) * _T(k, 1, 1)) / Fraction(3) ** k,
    rhs=lambda env: Fraction(env.p, 3) * jacobi(env.p, 3)
    + Fraction(env.p ** 2, 3) * (1 + jacobi(env.p, 3)),
    mod_exp=3,
    status="confirmed",
    gate=(("min", 5),),
    cost="quadratic",
)


def _a72_sq_checker(p: int, e: int = 1) -> CheckResult:
    for b, c in _TM_SAMPLES:
        if (b - 2 * c) % p == 0:
            continue
        terms = [
            Fraction(_T(k, b, c * c) ** 2) / Fraction(b - 2 * c) ** (2 * k)
            for k in range(p)
        ]
        ok_f, ok_o, _, _, w = congruence_paths(
            p, 1, terms, Fraction(jacobi(-c * c, p))
        )
        if ok_f != ok_o:
            return CheckResult.error(f"path disagreement at (b,c)=({b},{c})")
        if not ok_f:
            return CheckResult.failed({"arg": (b, c), "diff_val": w["diff_val"]})
    return CheckResult.passed({"modulus_exp": 1})


custom_entry(
    "A72.rem.sq",
    kind="SumCongruence",
    checker=_a72_sq_checker,
    mod_exp=1,
    status="confirmed",
    gate=(("min", 3),),
    cost="quadratic",
)


def _a72_oeis_scan(bound: int) -> CheckResult:
    bad = []
    s = 0
    for n in range(1, bound + 1):
        k = n - 1
        s += (8 * k + 5) * _T(k, 1, 1) ** 2
        if s % n:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry(
    "A72.rem.oeis",
    kind="DivisibilityScan",
    checker=_a72_oeis_scan,
    scan_max=80,
    status="confirmed",
)


# ---------------------------------------------------------------------------
# A73 -- T_k(2,2)^2 against C(2k,k)^2, and T_k(4,1)^2
# ---------------------------------------------------------------------------

chain_entry(
    "A73.a",
    sums=[
        (lambda env, k: Fraction(_T(k, 2, 2) ** 2) / Fraction(4) ** k, None),
        (lambda env, k: Fraction(comb(2 * k, k) ** 2) / Fraction(8) ** k, None),
    ],
    mod_exp=lambda p, e: 3 if p % 4 == 1 else 2,
    cost="quadratic",
)

chain_entry(
    "A73.b",
    sums=[
        (lambda env, k: Fraction(_T(k, 4, 1) ** 2) / Fraction(4) ** k, None),
        (lambda env, k: Fraction(_T(k, 4, 1) ** 2) / Fraction(36) ** k, None),
    ],
    rhs=lambda env: Fraction(env.jac(-1)),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)

sum_entry(
    "A73.rem.a",
    terms=lambda env, k: Fraction(_T(k, 6, -3) ** 2) / Fraction(48) ** k,
    rhs=lambda env: env.jac(-1) + Fraction(env.p ** 2, 3) * env.E(-3),
    mod_exp=3,
    status="confirmed",
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A73.rem.b",
    terms=lambda env, k: Fraction(_T(k, 2, -1) ** 2) / Fraction(8) ** k,
    rhs=lambda env: Fraction(env.jac(-2)),
    mod_exp=2,
    status="confirmed",
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A73.rem.c",
    terms=lambda env, k: Fraction(_T(k, 2, -3) ** 2) / Fraction(16) ** k,
    rhs=lambda env: Fraction(jacobi(env.p, 3)),
    mod_exp=2,
    status="confirmed",
    gate=(("min", 5),),
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A74 -- T_k(2,3)^3, T_k(2,9)^3 and T_k(18,49)^3, T_k(10,49)^3
# ---------------------------------------------------------------------------

_A74_CASES = genus_rhs(
    [
        (
            lambda env: env.p % 24 in (1, 7),
            FORM_6_FREE,
            lambda env, x, y: 4 * x * x - 2 * env.p,
        ),
        (
            lambda env: env.p % 24 in (5, 11),
            FORM_23_FREE,
            lambda env, x, y: 2 * env.p - 8 * x * x,
        ),
    ],
    zero_when=lambda env: env.jac(-6) == -1,
)

chain_entry(
    "A74.i.a",
    sums=[
        (lambda env, k: env.jac(3) * Fraction(_T(k, 2, 3) ** 3) / Fraction(8) ** k, None),
        (lambda env, k: Fraction(_T(k, 2, 3) ** 3) / Fraction(-64) ** k, None),
        (lambda env, k: Fraction(_T(k, 2, 9) ** 3) / Fraction(-64) ** k, None),
        (lambda env, k: env.jac(3) * Fraction(_T(k, 2, 9) ** 3) / Fraction(512) ** k, None),
    ],
    rhs=_A74_CASES,
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)

sum_entry(
    "A74.i.b",
    terms=lambda env, k: Fraction((3 * k + 2) * _T(k, 2, 3) ** 3) / Fraction(8) ** k,
    rhs=lambda env: env.p * (3 * env.jac(3) - 1),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A74.i.c",
    terms=lambda env, k: Fraction((3 * k + 1) * _T(k, 2, 3) ** 3) / Fraction(-64) ** k,
    rhs=lambda env: Fraction(env.p * env.jac(-2)),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
    note="defect valuation is exactly 2 at most primes",
)
sum_entry(
    "A74.i.d",
    terms=lambda env, k: Fraction((72 * k + 47) * _T(k, 2, 9) ** 3) / Fraction(-64) ** k,
    rhs=lambda env: Fraction(42 * env.p),
    mod_exp=2,
    gate=(("min", 5), ("jacobi", -6, 1)),
    cost="quadratic",
)
sum_entry(
    "A74.i.e",
    terms=lambda env, k: Fraction((72 * k + 25) * _T(k, 2, 9) ** 3) / Fraction(512) ** k,
    rhs=lambda env: Fraction(12 * env.p * env.jac(3)),
    mod_exp=2,
    gate=(("min", 5), ("jacobi", -6, 1)),
    cost="quadratic",
)


def _a74_scan(b, c, m, c1, c0, mult):
    def run(bound: int) -> CheckResult:
        bad = []
        s = 0
        for n in range(1, bound + 1):
            k = n - 1
            s = m * s + (c1 * k + c0) * _T(k, b, c) ** 3
            if s % (mult * n):
                bad.append(n)
        if bad:
            return CheckResult.failed({"violations": bad[:10], "max_n": bound})
        return CheckResult.passed({"max_n": bound})

    return run


int_scan_entry("A74.i.s1", kind="DivisibilityScan",
               checker=_a74_scan(2, 3, 8, 3, 2, 2), scan_max=60)
int_scan_entry("A74.i.s2", kind="DivisibilityScan",
               checker=_a74_scan(2, 3, -64, 3, 1, 1), scan_max=60)

FORM_11_XODD = FormSpec(1, 1, 1, (("x_mod", 1, 2),))
FORM_2_FREE = FormSpec(1, 1, 2)

chain_entry(
    "A74.ii.a",
    sums=[
        (lambda env, k: env.jac(2) * Fraction(_T(k, 18, 49) ** 3) / Fraction(512) ** k, None),
        (lambda env, k: Fraction(_T(k, 18, 49) ** 3) / Fraction(4096) ** k, None),
    ],
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 4 == 1,
                FORM_11_XODD,
                lambda env, x, y: 4 * x * x - 2 * env.p,
            ),
        ],
        zero_when=lambda env: env.p % 4 == 3,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)

chain_entry(
    "A74.ii.b",
    sums=[
        (lambda env, k: env.jac(-1) * Fraction(_T(k, 10, 49) ** 3) / Fraction(-512) ** k, None),
        (lambda env, k: env.jac(6) * Fraction(_T(k, 10, 49) ** 3) / Fraction(1728) ** k, None),
    ],
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 8 in (1, 3),
                FORM_2_FREE,
                lambda env, x, y: 4 * x * x - 2 * env.p,
            ),
        ],
        zero_when=lambda env: env.jac(-2) == -1,
    ),
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)

sum_entry(
    "A74.ii.c",
    terms=lambda env, k: Fraction((7 * k + 4) * _T(k, 10, 49) ** 3)
    / Fraction(-512) ** k,
    rhs=lambda env: Fraction(env.p, 14)
    * env.jac(2)
    * (65 - 9 * jacobi(env.p, 3)),
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)
sum_entry(
    "A74.ii.d",
    terms=lambda env, k: Fraction((7 * k + 3) * _T(k, 10, 49) ** 3)
    / Fraction(1728) ** k,
    rhs=lambda env: Fraction(3 * env.p, 28) * (13 + 15 * jacobi(env.p, 3)),
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)

int_scan_entry("A74.ii.s1", kind="DivisibilityScan",
               checker=_a74_scan(10, 49, -512, 7, 4, 4), scan_max=50)
int_scan_entry("A74.ii.s2", kind="DivisibilityScan",
               checker=_a74_scan(10, 49, 1728, 7, 3, 1), scan_max=50)


# ---------------------------------------------------------------------------
# A75 -- (T_k(38,441)/m^k)^3 and (T_k(110,3249)/m^k)^3 genus families
# ---------------------------------------------------------------------------

def _tri_sym_rhs(sym_fns, cases):
    """Sign-pattern case table whose product-(-1) branch is unreadable in the
    source; those arguments are Skipped rather than guessed."""

    def rhs(env: Env) -> Fraction:
        signs = tuple(f(env) for f in sym_fns)
        if signs[0] * signs[1] * signs[2] == -1:
            raise SkipEntry("garbled source")
        table = [
            (
                signs == pat,
                lambda f=form, v=val: env.rep(f, lambda x, y: Fraction(v(env, x, y))),
            )
            for pat, form, val in cases
        ]
        return case_table(env, table)

    return rhs


_A75_I_RHS = _tri_sym_rhs(
    (
        lambda env: env.jac(2),
        lambda env: jacobi(env.p, 3),
        lambda env: jacobi(env.p, 5),
    ),
    [
        ((1, 1, 1), FormSpec(1, 1, 30), lambda env, x, y: 4 * x * x - 2 * env.p),
        ((-1, 1, -1), FormSpec(1, 3, 10), lambda env, x, y: 12 * x * x - 2 * env.p),
        ((1, -1, -1), FormSpec(1, 2, 15), lambda env, x, y: 2 * env.p - 8 * x * x),
        ((-1, -1, 1), FormSpec(1, 5, 6), lambda env, x, y: 20 * x * x - 2 * env.p),
    ],
)

chain_entry(
    "A75.i.a",
    sums=[
        (lambda env, k: Fraction(_T(k, 38, 441) ** 3) / Fraction(-4096) ** k, None),
        (lambda env, k: env.jac(-5) * Fraction(_T(k, 38, 441) ** 3) / Fraction(8000) ** k, None),
    ],
    rhs=_A75_I_RHS,
    mod_exp=2,
    gate=(("min", 7),),
    cost="quadratic",
)

sum_entry(
    "A75.i.b",
    terms=lambda env, k: Fraction((28 * k + 15) * _T(k, 38, 441) ** 3)
    / Fraction(-4096) ** k,
    rhs=lambda env: Fraction(env.p, 7) * (124 - 19 * jacobi(env.p, 3)),
    mod_exp=2,
    gate=(("min", 7),),
    cost="quadratic",
)

_A75_II_RHS = _tri_sym_rhs(
    (
        lambda env: env.jac(-2),
        lambda env: jacobi(env.p, 3),
        lambda env: jacobi(env.p, 7),
    ),
    [
        ((1, 1, 1), FormSpec(1, 1, 42), lambda env, x, y: 4 * x * x - 2 * env.p),
        ((-1, -1, 1), FormSpec(1, 2, 21), lambda env, x, y: 8 * x * x - 2 * env.p),
        ((1, -1, -1), FormSpec(1, 3, 14), lambda env, x, y: 12 * x * x - 2 * env.p),
        ((-1, 1, -1), FormSpec(1, 6, 7), lambda env, x, y: 24 * x * x - 2 * env.p),
    ],
)

chain_entry(
    "A75.ii.a",
    sums=[
        (lambda env, k: Fraction(_T(k, 110, 3249) ** 3) / Fraction(32768) ** k, None),
        (lambda env, k: env.jac(-14) * Fraction(_T(k, 110, 3249) ** 3)
         / Fraction(-21952) ** k, None),
    ],
    rhs=_A75_II_RHS,
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)

sum_entry(
    "A75.ii.b",
    terms=lambda env, k: Fraction((684 * k + 329) * _T(k, 110, 3249) ** 3)
    / Fraction(32768) ** k,
    rhs=lambda env: Fraction(env.p, 19) * (5160 * env.jac(-2) + 1091),
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A76 / A77 -- C(2k,k)-weighted T_k^2 genus families
# ---------------------------------------------------------------------------

def _sym_zero_rhs(sym_fns, cases):
    """Sign-pattern table with a plain zero product-(-1) branch."""

    def rhs(env: Env) -> Fraction:
        signs = tuple(f(env) for f in sym_fns)
        table = [
            (
                signs == pat,
                lambda f=form, v=val: env.rep(f, lambda x, y: Fraction(v(env, x, y))),
            )
            for pat, form, val in cases
        ]
        table.append((signs[0] * signs[1] * signs[2] == -1, lambda: Fraction(0)))
        return case_table(env, table)

    return rhs


_A76_RHS = _sym_zero_rhs(
    (
        lambda env: env.jac(-1),
        lambda env: jacobi(env.p, 3),
        lambda env: jacobi(env.p, 7),
    ),
    [
        ((1, 1, 1), FormSpec(1, 1, 21), lambda env, x, y: 4 * x * x - 2 * env.p),
        ((-1, 1, -1), FormSpec(1, 3, 7), lambda env, x, y: 12 * x * x - 2 * env.p),
        ((-1, -1, 1), FormSpec(2, 1, 21), lambda env, x, y: 2 * x * x - 2 * env.p),
        ((1, -1, -1), FormSpec(2, 3, 7), lambda env, x, y: 6 * x * x - 2 * env.p),
    ],
)

sum_entry(
    "A76.a",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(k, 3, -3) ** 2)
    / Fraction(-108) ** k,
    rhs=_A76_RHS,
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)
sum_entry(
    "A76.b",
    terms=lambda env, k: Fraction((56 * k + 19) * comb(2 * k, k) * _T(k, 3, -3) ** 2)
    / Fraction(-108) ** k,
    rhs=lambda env: Fraction(env.p, 2) * (21 * jacobi(env.p, 7) + 17),
    mod_exp=2,
    gate=(("min", 5), ("not", (7,))),
    cost="quadratic",
)

FORM_9_FREE = FormSpec(1, 1, 9)
FORM_11_FREE = FormSpec(1, 1, 1)
FORM_25_FREE = FormSpec(1, 1, 25)
FORM_11_A77 = FormSpec(1, 1, 1, (("x_mod", 1, 2), ("xy_mod", 1, 5)))

sum_entry(
    "A77.i.a",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(k, 7, 12) ** 2)
    / Fraction(4) ** k,
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 12 == 1,
                FORM_9_FREE,
                lambda env, x, y: 4 * x * x - 2 * env.p,
            ),
            (
                lambda env: env.p % 12 == 5,
                FORM_11_FREE,
                lambda env, x, y: 4 * x * y * jacobi(x * y, 3),
            ),
        ],
        zero_when=lambda env: env.p % 4 == 3,
    ),
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)

chain_entry(
    "A77.i.b",
    sums=[
        (lambda env, k: Fraction(comb(2 * k, k) * _T(k, 7, 12) ** 2)
         / Fraction(4) ** k, None),
        (lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 3, 3) ** 2)
         / Fraction(36) ** k, None),
    ],
    mod_exp=lambda p, e: 3 if p % 4 == 1 else 2,
    gate=(("min", 5),),
    cost="quadratic",
)

sum_entry(
    "A77.ii.a",
    terms=lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 9, 20) ** 2)
    / Fraction(4) ** k,
    rhs=genus_rhs(
        [
            (
                lambda env: env.p % 20 in (1, 9),
                FORM_25_FREE,
                lambda env, x, y: 4 * x * x - 2 * env.p,
            ),
            (
                lambda env: env.p % 20 in (13, 17),
                FORM_11_A77,
                lambda env, x, y: jacobi(x, 5) * 4 * x * y,
            ),
        ],
        zero_when=lambda env: env.p % 4 == 3,
    ),
    mod_exp=2,
    gate=(("min", 7),),
    cost="quadratic",
)

chain_entry(
    "A77.ii.b",
    sums=[
        (lambda env, k: Fraction(comb(2 * k, k) * _T(2 * k, 9, 20) ** 2)
         / Fraction(4) ** k, None),
        (lambda env, k: Fraction(comb(2 * k, k) * _T(k, 19, -20) ** 2)
         / Fraction(484) ** k, None),
    ],
    mod_exp=2,
    gate=(("min", 3), ("not", (11,))),
    cost="quadratic",
)
