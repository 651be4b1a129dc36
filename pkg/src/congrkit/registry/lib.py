"""Shared term-stream and right-hand-side builders for catalog entries."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from ..quadrep import FormSpec
from ..seqgen import FactorialRatioSpec, factorial_ratio
from .core import Env, NotApplicable, case_table


def fr_stream(spec: FactorialRatioSpec, kmax: int) -> list[int]:
    """[value(0), ..., value(kmax)] computed incrementally with exact division."""
    out = [1]
    v = 1
    for k in range(kmax):
        num = 1
        for a in spec.num:
            for j in range(a * k + 1, a * k + a + 1):
                num *= j
        den = 1
        for b in spec.den:
            for j in range(b * k + 1, b * k + b + 1):
                den *= j
        v, r = divmod(v * num, den)
        if r:
            raise ArithmeticError("factorial-ratio stream lost integrality")
        out.append(v)
    return out


def fratio_terms(spec: FactorialRatioSpec, m, c1=0, c0=1):
    """term(env, k) = (c1*k + c0) * (prod (a_i k)!/prod (b_j k)!) / m^k."""
    M = Fraction(m)

    def term(env: Env, k: int) -> Fraction:
        return (c1 * k + c0) * Fraction(factorial_ratio(k, spec)) / M ** k

    return term


def seq_terms(seq_fn, m=1, c1=0, c0=1):
    """term(env, k) = (c1*k + c0) * seq_fn(k) / m^k for an integer sequence."""
    M = Fraction(m)

    def term(env: Env, k: int) -> Fraction:
        return (c1 * k + c0) * Fraction(seq_fn(k)) / M ** k

    return term


def poly_terms(val_fn, m, coeffs):
    """term(env, k) = (sum_i coeffs[i] k^i) * val_fn(k) / m^k.

    coeffs are listed from the constant coefficient upward.
    """
    M = Fraction(m)

    def term(env: Env, k: int) -> Fraction:
        w = sum(c * k ** i for i, c in enumerate(coeffs))
        return w * Fraction(val_fn(k)) / M ** k

    return term


_HARMONIC_CACHE: dict[int, list[Fraction]] = {}


def harmonic_cached(n: int, order: int = 1) -> Fraction:
    """H_n^(order) = sum_{k<=n} 1/k^order, memoized across entries."""
    vals = _HARMONIC_CACHE.setdefault(order, [Fraction(0)])
    while len(vals) <= n:
        j = len(vals)
        vals.append(vals[-1] + Fraction(1, j ** order))
    return vals[n]


def scaled(term_fn, factor_fn):
    """Multiply a term stream by a per-prime factor (e.g. an overall p)."""

    def term(env: Env, k: int) -> Fraction:
        return Fraction(term_fn(env, k)) * factor_fn(env)

    return term


# ---------------------------------------------------------------------------
# right-hand sides
# ---------------------------------------------------------------------------

def rhs_zero(env: Env) -> Fraction:
    return Fraction(0)


def rhs_const(value):
    v = Fraction(value)

    def rhs(env: Env) -> Fraction:
        return v

    return rhs


def quad_case_rhs(jac_arg, form: FormSpec, val_fn, mult_fn=None, else_fn=None):
    """Case table: symbol = 1 -> val_fn(env, x, y) on the form's representation;
    symbol = -1 -> else_fn(env) (default 0); optional overall multiplier.

    jac_arg d means (d/p); ("p/", d) means (p/d) -- these differ when
    d == 3 (mod 4) and p == 3 (mod 4).
    """
    from ..padic import jacobi

    def rhs(env: Env) -> Fraction:
        if isinstance(jac_arg, tuple) and jac_arg[0] == "p/":
            j = jacobi(env.p, jac_arg[1])
        else:
            j = env.jac(jac_arg)
        mult = Fraction(mult_fn(env)) if mult_fn else Fraction(1)
        other = (lambda: Fraction(else_fn(env))) if else_fn else (lambda: Fraction(0))
        return mult * case_table(
            env,
            [
                (j == 1, lambda: env.rep(form, lambda x, y: Fraction(val_fn(env, x, y)))),
                (j == -1, other),
            ],
        )

    rhs.case_rhs = True
    return rhs


def genus_rhs(cases, zero_when=None):
    """General multi-case quadratic-form RHS.

    cases: list of (gate_fn(env)->bool, form or None, val_fn(env,x,y) or const_fn(env)).
    Exactly one case (including the optional zero_when case) must fire.
    """

    def rhs(env: Env) -> Fraction:
        table = []
        for gate_fn, form, val in cases:
            if form is None:
                table.append((gate_fn(env), (lambda v=val: Fraction(v(env)))))
            else:
                table.append(
                    (
                        gate_fn(env),
                        (
                            lambda f=form, v=val: env.rep(
                                f, lambda x, y: Fraction(v(env, x, y))
                            )
                        ),
                    )
                )
        if zero_when is not None:
            table.append((zero_when(env), lambda: Fraction(0)))
        return case_table(env, table)

    rhs.case_rhs = True
    return rhs


def sym_case_rhs(sym_fns, cases):
    """Genus-family RHS keyed on a tuple of quadratic symbols.

    sym_fns: functions env -> +-1; cases: list of (sign_pattern, FormSpec,
    val_fn(env, x, y)).  When the symbol product is -1 the value is 0; the
    listed patterns must partition the product-(+1) side exactly.
    """

    def rhs(env: Env) -> Fraction:
        signs = tuple(f(env) for f in sym_fns)
        table = [
            (
                signs == pat,
                lambda f=form, v=val: env.rep(f, lambda x, y: Fraction(v(env, x, y))),
            )
            for pat, form, val in cases
        ]
        table.append((prod(signs) == -1, lambda: Fraction(0)))
        return case_table(env, table)

    rhs.case_rhs = True
    return rhs


def require(cond: bool) -> None:
    """Gate helper usable inside rhs closures for conditions on p^e."""
    if not cond:
        raise NotApplicable


# ---------------------------------------------------------------------------
# integrality-scan helpers
# ---------------------------------------------------------------------------

def is_power_of(n: int, b: int) -> bool:
    if n < 1:
        return False
    while n % b == 0:
        n //= b
    return n == 1


def nu(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def integrality_scan(
    spec: FactorialRatioSpec,
    m: int,
    c1: int,
    c0: int,
    denom_fn,
    *,
    escape=None,
    alt_sign: bool = False,
    positive: bool = False,
    start: int = 2,
):
    """Checker(bound) for a_n = (1/denom(n)) sum_{k<n} (c1 k+c0) fr(k) m^(n-1-k).

    escape: None, ("2n+1", b) -- when 2n+1 is a power of b, require
    b*a_n integral and not divisible by b -- or ("n-1", 2) likewise on n-1.
    alt_sign applies positivity to (-1)^(n-1) a_n instead of a_n.
    """
    from .core import CheckResult

    def escaped(n: int) -> int | None:
        if escape is None:
            return None
        shape, b = escape
        t = 2 * n + 1 if shape == "2n+1" else n - 1
        if t >= b and is_power_of(t, b):
            return b
        return None

    def run(bound: int):
        bad = []
        for n, s in weighted_horner_scan(spec, m, c1, c0, bound):
            if n < start:
                continue
            a = Fraction(s, denom_fn(n))
            v = -a if (alt_sign and n % 2 == 0) else a
            b = escaped(n)
            if b is not None:
                ok = (b * a).denominator == 1 and (b * a).numerator % b != 0
            else:
                ok = a.denominator == 1
                if ok and positive:
                    ok = v > 0
            if not ok:
                bad.append(n)
        if bad:
            return CheckResult.failed({"violations": bad[:10], "max_n": bound})
        return CheckResult.passed({"max_n": bound})

    return run


def seq_div_scan(val_fn, m, coeffs, modulus_fn, *, start=2, odd_iff=None):
    """Checker(bound) for S_n = sum_{k<n} w(k) val_fn(k) m^(n-1-k) with
    w(k) = sum_i coeffs[i] k^i, requiring modulus_fn(n) | S_n for n >= start.

    odd_iff(n) -> bool, when given, additionally requires the quotient to be
    a positive integer whose parity is odd exactly when odd_iff(n) holds.
    """
    from .core import CheckResult

    def run(bound: int):
        bad = []
        s = 0
        for n in range(1, bound + 1):
            k = n - 1
            s = m * s + sum(c * k ** i for i, c in enumerate(coeffs)) * val_fn(k)
            if n < start:
                continue
            q, r = divmod(s, modulus_fn(n))
            ok = r == 0
            if ok and odd_iff is not None:
                ok = q > 0 and (q % 2 == 1) == bool(odd_iff(n))
            if not ok:
                bad.append(n)
        if bad:
            return CheckResult.failed({"violations": bad[:10], "max_n": bound})
        return CheckResult.passed({"max_n": bound})

    return run


def weighted_horner_scan(
    spec: FactorialRatioSpec,
    m: int,
    c1: int,
    c0: int,
    max_n: int,
):
    """Yield (n, S_n) with S_n = sum_{k<n} (c1 k + c0) fr(k) m^(n-1-k), exactly."""
    vals = fr_stream(spec, max_n)
    s = 0
    for n in range(1, max_n + 1):
        s = m * s + (c1 * (n - 1) + c0) * vals[n - 1]
        yield n, s
