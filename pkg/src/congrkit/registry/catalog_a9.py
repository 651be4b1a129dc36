"""Open catalog, ninth block: Fibonacci/Lucas central-binomial sums, the
q-analogue congruence, p-adic valuation bounds for binomial sums, and the
primality-criterion scans."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..padic import jacobi
from ..seqgen import qcongruence_check
from .core import (
    CheckResult,
    congruence_paths,
    custom_entry,
    int_scan_entry,
    sum_entry,
)

_FIB: list[int] = [0, 1]
_LUC: list[int] = [2, 1]


def _fib(n: int) -> int:
    while len(_FIB) <= n:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[n]


def _luc(n: int) -> int:
    while len(_LUC) <= n:
        _LUC.append(_LUC[-1] + _LUC[-2])
    return _LUC[n]


def _u41(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 4 * b - a
    return a


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


def _nu_frac(x: Fraction, p: int) -> int | None:
    num, den = x.numerator, x.denominator
    if num == 0:
        return None
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _nu_int(n: int, p: int) -> int:
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _rbinom_row(x: Fraction, kmax: int) -> list[Fraction]:
    """C(x, k) for k = 0..kmax with rational upper argument."""
    out = [Fraction(1)]
    for k in range(kmax):
        out.append(out[-1] * (x - k) / (k + 1))
    return out


# ---------------------------------------------------------------------------
# A90 -- Fibonacci/Lucas sums against the Fibonacci quotient
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _fib_quot(p: int) -> int:
    return _fib(p - jacobi(p, 5)) // p


_GATE_90 = (("min", 3), ("not", (5,)))


sum_entry(
    "A90.a",
    terms=lambda env, k: env.p * Fraction(_fib(2 * k), k * k * comb(2 * k, k)),
    rhs=lambda env: -jacobi(env.p, 5)
    * (
        Fraction(3, 2) * _fib_quot(env.p)
        + Fraction(5, 4) * env.p * _fib_quot(env.p) ** 2
    ),
    rng="full1",
    mod_exp=2,
    gate=_GATE_90,
    cost="quadratic",
)
sum_entry(
    "A90.b",
    terms=lambda env, k: env.p * Fraction(_luc(2 * k), k * k * comb(2 * k, k)),
    rhs=lambda env: -Fraction(5, 2) * _fib_quot(env.p)
    - Fraction(15, 4) * env.p * _fib_quot(env.p) ** 2,
    rng="full1",
    mod_exp=2,
    gate=_GATE_90,
    cost="quadratic",
)
sum_entry(
    "A90.c",
    terms=lambda env, k: Fraction(0)
    if 2 * k + 1 == env.p
    else Fraction(comb(2 * k, k) * _fib(2 * k + 1), (2 * k + 1) * 16 ** k),
    rhs=lambda env: _sgn((env.p + 1) // 2)
    * jacobi(env.p, 5)
    * (
        Fraction(1, 2) * _fib_quot(env.p)
        + Fraction(5, 8) * env.p * _fib_quot(env.p) ** 2
    ),
    rng="half",
    mod_exp=2,
    gate=_GATE_90,
    cost="quadratic",
)
sum_entry(
    "A90.d",
    terms=lambda env, k: Fraction(0)
    if 2 * k + 1 == env.p
    else Fraction(comb(2 * k, k) * _luc(2 * k + 1), (2 * k + 1) * 16 ** k),
    rhs=lambda env: _sgn((env.p + 1) // 2)
    * (
        Fraction(5, 2) * _fib_quot(env.p)
        + Fraction(5, 8) * env.p * _fib_quot(env.p) ** 2
    ),
    rng="half",
    mod_exp=2,
    gate=_GATE_90,
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A91 / A93 -- 5-adic and 3-adic normalized partial sums
# ---------------------------------------------------------------------------

_A91_TABLE = {0: 6, 1: 4, 2: 1, 3: 9, 4: 1}


def _a91_table_scan(bound: int) -> CheckResult:
    bad = []
    s = 0
    for n in range(1, bound + 1):
        s += _fib(2 * (n - 1) + 1) * comb(2 * (n - 1), n - 1)
        x = Fraction(_sgn(n // 5 - 1) * s, (2 * n + 1) * n * n * comb(2 * n, n))
        d = x - _A91_TABLE[n % 5]
        if d != 0 and _nu_frac(d, 5) < 2:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A91.t", kind="ResidueScan", checker=_a91_table_scan, scan_max=60)


def _stability_scan(base: int, term, square_exp: int):
    """Check that sum_{k < base^a} term(k) / base^(2a), taken mod base^b,
    does not depend on a (for a >= b, or a >= b-1 when square_exp == 1)."""

    def run(bound: int) -> CheckResult:
        vals = []
        a = 1
        while base ** a <= bound:
            s = sum(term(k) for k in range(base ** a))
            if s % base ** (2 * a):
                return CheckResult.failed({"violations": [a], "max_n": bound})
            vals.append(s // base ** (2 * a))
            a += 1
        bad = []
        for b in range(1, len(vals) + 1):
            start = max(0, b - 1 - square_exp)
            ref = vals[start] % base ** b
            if any(v % base ** b != ref for v in vals[start:]):
                bad.append(b)
        if bad:
            return CheckResult.failed({"violations": bad, "max_n": bound})
        return CheckResult.passed({"max_n": bound, "levels": len(vals)})

    return run


int_scan_entry(
    "A91.s",
    kind="StabilityScan",
    checker=_stability_scan(5, lambda k: _fib(2 * k + 1) * comb(2 * k, k), 0),
    scan_max=625,
)

sum_entry(
    "A91.rem.a",
    terms=lambda env, k: Fraction(_fib(2 * k) * comb(2 * k, k)),
    rhs=lambda env: Fraction(_sgn(env.p // 5) * (1 - jacobi(env.p, 5))),
    mod_exp=2,
    status="confirmed",
    gate=_GATE_90,
    cost="quadratic",
)
sum_entry(
    "A91.rem.b",
    terms=lambda env, k: Fraction(_fib(2 * k + 1) * comb(2 * k, k)),
    rhs=lambda env: Fraction(_sgn(env.p // 5) * jacobi(env.p, 5)),
    mod_exp=2,
    status="confirmed",
    gate=_GATE_90,
    cost="quadratic",
)

_A93_TABLE = {0: 1, 2: 1, 5: 4, 6: 4}


def _a93_table_scan(bound: int) -> CheckResult:
    bad = []
    s = 0
    for n in range(1, bound + 1):
        s += _u41(n) * comb(2 * (n - 1), n - 1)
        x = Fraction(_sgn(n - 1) * s, n * n * (n + 1) * comb(2 * n, n))
        d = x - _A93_TABLE.get(n % 9, -2)
        if d != 0 and _nu_frac(d, 3) < 2:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A93.t", kind="ResidueScan", checker=_a93_table_scan, scan_max=60)

int_scan_entry(
    "A93.s",
    kind="StabilityScan",
    checker=_stability_scan(3, lambda k: _u41(k + 1) * comb(2 * k, k), 1),
    scan_max=243,
)

sum_entry(
    "A93.rem.a",
    terms=lambda env, k: Fraction(_u41(k) * comb(2 * k, k)),
    rhs=lambda env: Fraction(2 * (jacobi(env.p, 3) - env.jac(-1))),
    mod_exp=2,
    status="confirmed",
    gate=(("min", 5),),
    cost="quadratic",
)
sum_entry(
    "A93.rem.b",
    terms=lambda env, k: Fraction(_u41(k + 1) * comb(2 * k, k)),
    rhs=lambda env: Fraction(jacobi(env.p, 3)),
    mod_exp=2,
    status="confirmed",
    gate=(("min", 5),),
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A92 -- q-analogue congruence in Z[q]
# ---------------------------------------------------------------------------

def _a92_scan(bound: int) -> CheckResult:
    bad = []
    checked = []
    for a in (1, 2):
        for m in (1, 2, 3):
            if 5 ** a * m > bound:
                continue
            checked.append((a, m))
            if not qcongruence_check(a, m):
                bad.append((a, m))
    if bad:
        return CheckResult.failed({"violations": bad, "max_n": bound})
    return CheckResult.passed({"max_n": bound, "pairs": checked})


int_scan_entry("A92", kind="QCongruenceScan", checker=_a92_scan, scan_max=25)


# ---------------------------------------------------------------------------
# A94 -- second-order harmonic weights mod p^3
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _harmonic1(p: int) -> Fraction:
    return sum(Fraction(1, j) for j in range(1, p))


@lru_cache(maxsize=None)
def _h2_row(p: int) -> tuple[Fraction, ...]:
    out = [Fraction(0)]
    for j in range(1, p):
        out.append(out[-1] + Fraction(1, j * j))
    return tuple(out)


@lru_cache(maxsize=None)
def _bern_exact(n: int) -> Fraction:
    from sympy import bernoulli

    return Fraction(bernoulli(n))


def _a94_rhs(c1: Fraction, c2: Fraction):
    return lambda env: c1 * _harmonic1(env.p) / env.p ** 2 + c2 * env.p ** 2 * _bern_exact(
        env.p - 5
    )


for _tag, _m, _c1, _c2 in (
    ("a", 1, Fraction(2, 3), Fraction(76, 135)),
    ("b", 2, Fraction(-3, 16), Fraction(479, 1280)),
    ("c", 3, Fraction(-8, 9), Fraction(268, 1215)),
    ("d", 4, Fraction(-3, 2), Fraction(7, 80)),
):
    sum_entry(
        f"A94.{_tag}",
        terms=lambda env, k, _m=_m: Fraction(comb(2 * k, k), k)
        * _h2_row(env.p)[k]
        / Fraction(_m) ** k,
        rhs=_a94_rhs(_c1, _c2),
        rng="full1",
        mod_exp=3,
        gate=(("min", 5),),
        cost="quadratic",
    )


# ---------------------------------------------------------------------------
# A95 -- half-integer h families
# ---------------------------------------------------------------------------

def _a95_checker(p: int, e: int = 1) -> CheckResult:
    h0 = (p + 1) // 2
    args_checked = []
    a = 1
    while p ** a <= 250:
        n = p ** a
        if n > 3:
            for h in (h0, h0 + p):
                terms = [
                    comb(h * n - 1, k) * comb(2 * k, k) * Fraction(-h, 2) ** k
                    for k in range(n)
                ]
                ok_f, ok_o, _, _, w = congruence_paths(p, a + 1, terms, Fraction(0))
                if ok_f != ok_o:
                    return CheckResult.error(f"path disagreement at a={a}, h={h}")
                if not ok_o:
                    w["arg"] = (a, h)
                    return CheckResult.failed(w)
                args_checked.append((a, h))
        a += 1
    if not args_checked:
        return CheckResult.inapplicable()
    return CheckResult.passed({"args_checked": args_checked})


custom_entry(
    "A95.a",
    kind="SumCongruence",
    checker=_a95_checker,
    gate=(("min", 3),),
    cost="quadratic",
)


def _a95_val_scan(bound: int) -> CheckResult:
    bad = []
    for p in (3, 5, 7):
        h0 = (p + 1) // 2
        for h in (h0, h0 + p):
            for n in range(1, bound + 1):
                s = sum(
                    comb(h * n - 1, k) * comb(2 * k, k) * Fraction(-h, 2) ** k
                    for k in range(n)
                )
                v = _nu_frac(s, p)
                if v is not None and v < _nu_int(n, p):
                    bad.append((p, h, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A95.n", kind="ValuationBound", checker=_a95_val_scan, scan_max=40)


# ---------------------------------------------------------------------------
# A96 -- 3-adic behaviour for m == 1 (mod 3)
# ---------------------------------------------------------------------------

_A96_SAMPLES = (4, 7, 10, -2, 28, -8)


def _a96_val_scan(bound: int) -> CheckResult:
    bad = []
    for m in _A96_SAMPLES:
        vm = _nu_int(m - 1, 3)
        for n in range(1, bound + 1):
            s = Fraction(1, n) * sum(
                comb(n - 1, k) * _sgn(k) * comb(2 * k, k) * Fraction(1, m) ** k
                for k in range(n)
            )
            v = _nu_frac(s, 3)
            if v is not None and v < min(_nu_int(n, 3), vm) - 1:
                bad.append((m, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A96.n", kind="ValuationBound", checker=_a96_val_scan, scan_max=54)


def _a96_limit_scan(bound: int) -> CheckResult:
    bad = []
    checked = []
    for m in _A96_SAMPLES:
        vm = _nu_int(m - 1, 3)
        for a in range(vm + 1, vm + 3):
            if 3 ** a > bound:
                break
            s = Fraction(1, 3 ** a) * sum(
                comb(3 ** a - 1, k) * _sgn(k) * comb(2 * k, k) * Fraction(1, m) ** k
                for k in range(3 ** a)
            )
            d = s + Fraction(m - 1, 3)
            if d != 0 and _nu_frac(d, 3) < vm:
                bad.append((m, a))
            checked.append((m, a))
    if bad:
        return CheckResult.failed({"violations": bad, "max_n": bound})
    return CheckResult.passed({"max_n": bound, "pairs": len(checked)})


int_scan_entry("A96.b", kind="ResidueScan", checker=_a96_limit_scan, scan_max=243)


def _a96_power_scan(bound: int) -> CheckResult:
    bad = []
    a = 2
    while 3 ** a <= bound:
        s = sum(comb(3 ** a - 1, k) * _sgn(k) * comb(2 * k, k) for k in range(3 ** a))
        if (s + 3 ** (2 * a - 1)) % 3 ** (2 * a):
            bad.append(a)
        a += 1
    if bad:
        return CheckResult.failed({"violations": bad, "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A96.c", kind="ResidueScan", checker=_a96_power_scan, scan_max=243)


# ---------------------------------------------------------------------------
# A97 -- multinomial partial sums
# ---------------------------------------------------------------------------

def _a97_scan(bound: int) -> CheckResult:
    bad = []
    for p in (3, 5, 7):
        s = 0
        for n in range(1, bound + 1):
            k = n - 1
            s += factorial((p - 1) * k) // factorial(k) ** (p - 1)
            if _nu_int(s, p) < _nu_int(n * comb(2 * n, n), p):
                bad.append((p, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A97", kind="ValuationBound", checker=_a97_scan, scan_max=48)


# ---------------------------------------------------------------------------
# A98 -- powers of rational binomials
# ---------------------------------------------------------------------------

def _a98_i_checker(p: int, e: int = 1) -> CheckResult:
    args_checked = []
    for m in (3, 4, 5, 6):
        if m % p == 0:
            continue
        for r in range(-(m // 2) + (1 if m % 2 == 0 else 0), m + 1):
            if 2 * r < -m or (m - r) % 2 == 0 or p <= r or p % m != r % m:
                continue
            row = _rbinom_row(Fraction(r, m), p - 1)
            terms = [_sgn(k * m) * row[k] ** m for k in range(p)]
            ok_f, ok_o, _, _, w = congruence_paths(p, 3, terms, Fraction(0))
            if ok_f != ok_o:
                return CheckResult.error(f"path disagreement at (m,r)=({m},{r})")
            if not ok_o:
                w["arg"] = (m, r)
                return CheckResult.failed(w)
            args_checked.append((m, r))
    if not args_checked:
        return CheckResult.inapplicable()
    return CheckResult.passed({"args_checked": args_checked})


custom_entry(
    "A98.i",
    kind="SumCongruence",
    checker=_a98_i_checker,
    gate=(("min", 3),),
    cost="quadratic",
)


def _a98_ii_checker(p: int, e: int = 1) -> CheckResult:
    args_checked = []
    for m in (2, 3, 4):
        if m % p == 0:
            continue
        for r in range(-m, 2 * m + 1):
            if p <= r or (p - r) % (2 * m):
                continue
            row = _rbinom_row(Fraction(r, m), p - 1)
            for n in range(1, m):
                terms = [_sgn(k) * row[k] ** (2 * n + 1) for k in range(p)]
                ok_f, ok_o, _, _, w = congruence_paths(p, 2, terms, Fraction(0))
                if ok_f != ok_o:
                    return CheckResult.error(
                        f"path disagreement at (m,r,n)=({m},{r},{n})"
                    )
                if not ok_o:
                    w["arg"] = (m, r, n)
                    return CheckResult.failed(w)
                args_checked.append((m, r, n))
    if not args_checked:
        return CheckResult.inapplicable()
    return CheckResult.passed({"args_checked": args_checked})


custom_entry(
    "A98.ii",
    kind="SumCongruence",
    checker=_a98_ii_checker,
    gate=(("min", 3),),
    cost="quadratic",
)


def _a98_iii_scan(bound: int) -> CheckResult:
    bad = []
    for p in (2, 3, 5):
        cp = {2: 1, 3: 3}.get(p, 5)
        row = _rbinom_row(Fraction(-1, p + 1), bound)
        s = Fraction(0)
        for n in range(1, bound + 1):
            s += row[n - 1] ** (p + 1)
            v = _nu_frac(s, p)
            if v is not None and v < cp * ((_nu_int(n, p) + 1) // 2):
                bad.append((p, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A98.iii", kind="ValuationBound", checker=_a98_iii_scan, scan_max=50)


def _a98_rem_checker(p: int, e: int = 1) -> CheckResult:
    args_checked = []
    row = _rbinom_row(Fraction(-1, p + 1), p - 1)
    terms = [row[k] ** (p + 1) for k in range(p)]
    ok_f, ok_o, _, _, w = congruence_paths(p, 5, terms, Fraction(0))
    if ok_f != ok_o:
        return CheckResult.error("path disagreement on the (p+1)-power sum")
    if not ok_o:
        w["arg"] = "p5"
        return CheckResult.failed(w)
    args_checked.append("p5")
    for m in (2, 3, 4, 5, -3):
        if m % p == 0:
            continue
        row = _rbinom_row(Fraction(p, m) - 1, p - 1)
        terms = [_sgn(k * m) * row[k] ** m for k in range(p)]
        ok_f, ok_o, _, _, w = congruence_paths(p, 4, terms, Fraction(0))
        if ok_f != ok_o:
            return CheckResult.error(f"path disagreement at m={m}")
        if not ok_o:
            w["arg"] = m
            return CheckResult.failed(w)
        args_checked.append(m)
    return CheckResult.passed({"args_checked": args_checked})


custom_entry(
    "A98.rem",
    kind="SumCongruence",
    checker=_a98_rem_checker,
    status="confirmed",
    gate=(("min", 5),),
    cost="quadratic",
)


def _a98_comp_scan(bound: int) -> CheckResult:
    from sympy import isprime

    bad = []
    for n in range(2, bound + 1):
        if isprime(n):
            continue
        row = _rbinom_row(Fraction(-1, n + 1), n - 1)
        s = sum(row[k] ** (n + 1) for k in range(n))
        q = n
        holds = True
        d = 2
        while d * d <= q:
            if q % d == 0:
                v = _nu_int(q, d)
                fv = _nu_frac(s, d)
                if fv is not None and fv < 5 * v:
                    holds = False
                    break
                while q % d == 0:
                    q //= d
            d += 1
        if holds and q > 1:
            fv = _nu_frac(s, q)
            if fv is not None and fv < 5:
                holds = False
        if holds:
            bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad, "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry(
    "A98.rem.comp", kind="PrimalityScan", checker=_a98_comp_scan, scan_max=30
)


# ---------------------------------------------------------------------------
# A99 -- residue-class alternating sums
# ---------------------------------------------------------------------------

def _int_binom(m: int, l: int) -> int:
    out = 1
    for j in range(l):
        out *= m - j
    return out // factorial(l)


def _a99_scan(bound: int) -> CheckResult:
    bad = []
    for p in (2, 3, 5):
        for l in (0, 1, 2):
            for r in range(p):
                for n in range(1, bound + 1):
                    if n % p == 0 and r % p == 0:
                        continue
                    s = sum(
                        comb(n, k) * _sgn(k) * _int_binom((k - r) // p, l)
                        for k in range(r, n + 1, p)
                    )
                    if s == 0:
                        continue
                    top = (n - l - 1) // (p - 1) if n - l - 1 >= 0 else 0
                    extra = _int_binom(top, l)
                    b = (n - l * p - 1) // (p - 1) + (
                        _nu_int(extra, p) if extra else 0
                    )
                    if _nu_int(s, p) < b:
                        bad.append((p, l, r, n))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry(
    "A99",
    kind="ValuationBound",
    checker=_a99_scan,
    scan_max=36,
    note="residues sampled in canonical range 0 <= r < p",
)


# ---------------------------------------------------------------------------
# A100 -- primality criteria
# ---------------------------------------------------------------------------

def _a100_i_scan(bound: int) -> CheckResult:
    from sympy import isprime

    bad = []
    m = 1  # C(n-1, (n-1)/2) for the current odd n
    n = 1
    while n + 2 <= bound:
        m = m * n * (n + 1) // (((n + 1) // 2) ** 2)
        n += 2
        mod = n ** 3
        if m % mod == _sgn((n - 1) // 2) * pow(4, n - 1, mod) % mod:
            if not isprime(n):
                bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad, "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A100.i", kind="PrimalityScan", checker=_a100_i_scan, scan_max=5000)


def _a100_ii_scan(bound: int) -> CheckResult:
    from sympy import isprime

    bad = []
    c = 1  # C(2n, n)
    t = 0  # 2^(n-1) * sum_{k<n} C(2k,k)/2^k, exact
    for n in range(1, bound + 1):
        t = 2 * t + c if n > 1 else 1
        c = c * 2 * (2 * n - 1) // n
        if n > 1 and n % 2:
            mod = n * n
            if t % mod == _sgn((n - 1) // 2) * pow(2, n - 1, mod) % mod:
                if not isprime(n):
                    bad.append(n)
    if bad:
        return CheckResult.failed({"violations": bad, "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A100.ii", kind="PrimalityScan", checker=_a100_ii_scan, scan_max=10000)


def _a100_iii_scan(bound: int) -> CheckResult:
    from sympy import isprime

    bad = []
    a0, a1 = 1, 2  # a_0, a_1 with a_n = sum_k C(n,k)^2 Catalan_k
    prefix = 0  # a_1 + ... + a_{n-1} at the top of each iteration
    for n in range(2, bound + 1):
        prefix += a1
        if prefix % (n * n) == 0 and not isprime(n):
            bad.append(n)
        m = n - 2
        num = (40 * m ** 3 + 234 * m * m + 440 * m + 270) * a1 - 9 * (m + 1) ** 2 * (
            4 * m + 11
        ) * a0
        den = (m + 3) ** 2 * (4 * m + 7)
        q, r = divmod(num, den)
        if r:
            return CheckResult.error(f"recurrence division failed at n={n}")
        a0, a1 = a1, q
    if bad:
        return CheckResult.failed({"violations": bad, "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry("A100.iii", kind="PrimalityScan", checker=_a100_iii_scan, scan_max=5000)
