"""Bernoulli and Euler numbers/polynomials modulo p, and Fermat quotients.

Every right-hand-side occurrence of B_n or E_n in the catalog is multiplied
by at least p^2 relative to the target modulus, so mod-p residues suffice;
tables are built once per prime by the defining recurrences with modular
inverses and cached.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .padic import PadicNum, PrimeCtx


@lru_cache(maxsize=None)
def bernoulli_table(p: int) -> tuple[int, ...]:
    """Residues of B_0 .. B_{p-2} mod p.

    Well-defined by von Staudt-Clausen: p divides denom(B_k) only when
    (p-1) | k, which does not happen for 1 <= k <= p-2.
    """
    if p < 3:
        raise ValueError("bernoulli_table needs p >= 3")
    out = [1]  # B_0
    for n in range(1, p - 1):
        # sum_{k=0}^{n} C(n+1,k) B_k = 0
        s = sum(comb(n + 1, k) * out[k] for k in range(n)) % p
        out.append((-s * pow(n + 1, -1, p)) % p)
    return tuple(out)


@lru_cache(maxsize=None)
def euler_table(p: int) -> tuple[int, ...]:
    """Residues of E_0 .. E_{p-3} mod p (E_n are integers)."""
    if p < 3:
        raise ValueError("euler_table needs p >= 3")
    out = [1]  # E_0
    for n in range(1, p - 2):
        if n % 2 == 1:
            out.append(0)
            continue
        # sum_{k even, 0<=k<=n} C(n,k) E_{n-k} = 0
        s = sum(comb(n, k) * out[n - k] for k in range(2, n + 1, 2)) % p
        out.append((-s) % p)
    return tuple(out)


def _mod_rat(x: Fraction, p: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"denominator of {x} divisible by p={p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def bernoulli_poly(n: int, x, p: int) -> int:
    """B_n(x) mod p = sum_k C(n,k) B_k x^(n-k); n up to p-2."""
    table = bernoulli_table(p)
    if n >= len(table):
        raise ValueError(f"index {n} beyond table for p={p}")
    xr = _mod_rat(Fraction(x), p)
    total = 0
    xpow = 1  # x^(n-k) built from the top down
    for k in range(n, -1, -1):
        total += comb(n, k) * table[k] * xpow
        xpow = xpow * xr % p
    return total % p


def euler_poly(n: int, x, p: int) -> int:
    """E_n(x) mod p = sum_k C(n,k) (E_k / 2^k) (x - 1/2)^(n-k)."""
    table = euler_table(p)
    if n >= len(table):
        raise ValueError(f"index {n} beyond table for p={p}")
    y = _mod_rat(Fraction(x) - Fraction(1, 2), p)
    inv2 = pow(2, -1, p)
    total = 0
    for k in range(n + 1):
        total += comb(n, k) * table[k] * pow(inv2, k, p) * pow(y, n - k, p)
    return total % p


@lru_cache(maxsize=None)
def euler_exact(n: int) -> int:
    """The integer Euler number E_n, exact (needed when a residue mod p is
    not enough, e.g. E_{p-3} entering only two powers of p below the target)."""
    from sympy import euler

    return int(euler(n))


def fermat_quotient_int(base: int, p: int) -> int:
    """q_p(base) = (base^(p-1) - 1)/p as an exact integer (base coprime to p)."""
    if base % p == 0:
        raise ValueError(f"base {base} divisible by p={p}")
    t = base ** (p - 1) - 1
    q, r = divmod(t, p)
    if r:
        raise ArithmeticError("Fermat's little theorem violated -- p not prime?")
    return q


def fermat_quotient(base: int, ctx: PrimeCtx) -> PadicNum:
    """q_p(base) as a PadicNum with absolute precision N (power taken mod p^(N+1))."""
    p = ctx.p
    if base % p == 0:
        raise ValueError(f"base {base} divisible by p={p}")
    t = (pow(base, p - 1, p ** (ctx.N + 1)) - 1) % p ** (ctx.N + 1)
    if t == 0:
        return PadicNum.zero_to(p, ctx.N)
    v = 0
    while t % p == 0:
        t //= p
        v += 1
    # value = p^(v-1) * t known mod p^(N+1), i.e. unit precision N+1-v
    return PadicNum(p, v - 1, t, ctx.N + 1 - v)
