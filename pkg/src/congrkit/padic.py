"""Truncated p-adic arithmetic with precision tracking, plus the exact-rational oracle helpers.

A nonzero value is stored as p^val * unit where the unit is known modulo
p^prec only; arithmetic propagates the worst-case precision.  Full
cancellation in a sum degrades a value to the marker "zero to precision m"
(valuation known to be >= m, nothing else).  Congruence tests refuse to
answer when the tracked precision does not cover the requested modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

# The oracle representation is plain Fraction: exact, reduced, arbitrary size.
BigRat = Fraction

INF = math.inf


class PrecisionError(ArithmeticError):
    """Tracked precision is insufficient to decide the requested congruence."""


class NotInvertibleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PrimeCtx:
    """An odd prime p together with the working absolute precision N (modulus p^N)."""

    p: int
    N: int

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or not isprime(self.p):
            raise ValueError(f"PrimeCtx requires an odd prime, got {self.p}")
        if self.N < 1:
            raise ValueError(f"PrimeCtx requires N >= 1, got {self.N}")

    @property
    def modulus(self) -> int:
        return self.p ** self.N


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for positive odd n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi requires a positive odd lower argument, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def inv_unit(u: int, ctx: PrimeCtx) -> int:
    """Inverse of u modulo p^N; u must be coprime to p."""
    if u % ctx.p == 0:
        raise NotInvertibleError(f"{u} is divisible by p={ctx.p}")
    return pow(u, -1, ctx.modulus)


def valuation_int(n: int, p: int) -> int | float:
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_rat(r: BigRat, p: int) -> int | float:
    """p-adic valuation of an exact rational; +inf for zero."""
    if r == 0:
        return INF
    return valuation_int(r.numerator, p) - valuation_int(r.denominator, p)


def rat_sum(terms) -> BigRat:
    """Exact sum of rationals, accumulated without per-term normalization."""
    num, den = 0, 1
    pending = 0
    for t in terms:
        tn, td = t.numerator, t.denominator
        if td == den:
            num += tn
        else:
            num, den = num * td + tn * den, den * td
            pending += 1
            if pending >= 48:
                g = math.gcd(num, den)
                num, den = num // g, den // g
                pending = 0
    return Fraction(num, den)


class PadicNum:
    """p-adic rational known to finite precision.

    Nonzero: fields (val, unit, prec) with unit in [1, p^prec) coprime to p;
    the value is congruent to p^val * unit modulo p^(val + prec).
    Zero marker: unit is None and val holds m, meaning valuation >= m.
    """

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val: int, unit: int | None, prec: int):
        self.p = p
        if unit is None:
            self.val = val  # "zero to precision val"
            self.unit = None
            self.prec = 0
            return
        if prec < 1:
            raise ValueError("nonzero PadicNum needs prec >= 1")
        unit %= p ** prec
        if unit % p == 0:
            raise ValueError("unit must be coprime to p")
        self.val = val
        self.unit = unit
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero_to(p: int, m) -> "PadicNum":
        return PadicNum(p, m, None, 0)

    @property
    def is_zero_marker(self) -> bool:
        return self.unit is None

    @property
    def abs_prec(self):
        if self.unit is None:
            return self.val
        return self.val + self.prec

    def __repr__(self) -> str:
        if self.unit is None:
            return f"PadicNum(p={self.p}, O(p^{self.val}))"
        return f"PadicNum(p={self.p}, {self.p}^{self.val}*{self.unit} + O(p^{self.abs_prec}))"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PadicNum)
            and self.p == other.p
            and self.val == other.val
            and self.unit == other.unit
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.p, self.val, self.unit, self.prec))

    # -- arithmetic --------------------------------------------------------

    def _check_same(self, other: "PadicNum") -> None:
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def neg(self) -> "PadicNum":
        if self.unit is None:
            return self
        return PadicNum(self.p, self.val, self.p ** self.prec - self.unit, self.prec)

    def add(self, other: "PadicNum") -> "PadicNum":
        self._check_same(other)
        p = self.p
        A = min(self.abs_prec, other.abs_prec)
        if self.unit is None and other.unit is None:
            return PadicNum.zero_to(p, A)
        if self.unit is None or other.unit is None:
            x = other if self.unit is None else self
            if x.val >= A:
                return PadicNum.zero_to(p, A)
            return PadicNum(p, x.val, x.unit, A - x.val)
        s = min(self.val, other.val)
        width = A - s
        mod = p ** width
        r = (self.unit * p ** (self.val - s) + other.unit * p ** (other.val - s)) % mod
        if r == 0:
            return PadicNum.zero_to(p, A)
        v = valuation_int(r, p)
        return PadicNum(p, s + v, r // p ** v, width - v)

    def sub(self, other: "PadicNum") -> "PadicNum":
        return self.add(other.neg())

    def mul(self, other: "PadicNum") -> "PadicNum":
        self._check_same(other)
        p = self.p
        if self.unit is None and other.unit is None:
            return PadicNum.zero_to(p, self.val + other.val)
        if self.unit is None:
            return PadicNum.zero_to(p, self.val + other.val)
        if other.unit is None:
            return PadicNum.zero_to(p, self.val + other.val)
        prec = min(self.prec, other.prec)
        return PadicNum(p, self.val + other.val, self.unit * other.unit, prec)

    def div(self, other: "PadicNum") -> "PadicNum":
        self._check_same(other)
        if other.unit is None:
            raise PrecisionError("division by a possibly-zero value")
        p = self.p
        prec = min(self.prec, other.prec) if self.unit is not None else other.prec
        inv = pow(other.unit, -1, p ** other.prec)
        if self.unit is None:
            return PadicNum.zero_to(p, self.val - other.val)
        return PadicNum(p, self.val - other.val, self.unit * inv, prec)

    # -- queries -----------------------------------------------------------

    def residue(self, a: int) -> int:
        """Residue modulo p^a (requires val >= 0 and abs precision >= a)."""
        if self.abs_prec < a:
            raise PrecisionError(f"residue mod p^{a} not determined (abs prec {self.abs_prec})")
        if self.unit is None:
            return 0
        if self.val < 0:
            raise ValueError("negative valuation has no residue mod p^a")
        if self.val >= a:
            return 0
        return (self.unit * self.p ** self.val) % self.p ** a


def from_rational(r: BigRat, ctx: PrimeCtx) -> PadicNum:
    """Image of an exact rational at relative precision N."""
    r = Fraction(r)
    if r == 0:
        return PadicNum.zero_to(ctx.p, ctx.N)
    p = ctx.p
    num, den = r.numerator, r.denominator
    vn = valuation_int(num, p)
    vd = valuation_int(den, p)
    mod = ctx.modulus
    u = ((num // p ** vn) % mod) * pow((den // p ** vd) % mod, -1, mod) % mod
    return PadicNum(p, vn - vd, u, ctx.N)


def congruent_mod(x: PadicNum, y: PadicNum, a: int) -> bool:
    """Whether nu_p(x - y) >= a, decided from tracked precision only."""
    if a < 1:
        raise ValueError("modulus exponent must be >= 1")
    d = x.sub(y)
    if d.unit is None:
        if d.val >= a:
            return True
        raise PrecisionError(
            f"difference known only to O(p^{d.val}), cannot decide mod p^{a}"
        )
    # exact valuation of the difference is known
    return d.val >= a


def sqrt_mod(a: int, ctx: PrimeCtx):
    """Both square roots of a modulo p^N, or None when (a/p) = -1.

    Tonelli-Shanks modulo p, then Hensel lifting to p^N.
    """
    p, N = ctx.p, ctx.N
    if a % p == 0:
        raise ValueError("sqrt_mod requires a unit; strip the valuation first")
    if jacobi(a, p) == -1:
        return None
    r = _tonelli_shanks(a % p, p)
    mod = p
    while mod < ctx.modulus:
        # Newton step doubles the exponent: r <- r - (r^2 - a) / (2r)
        mod = min(mod * mod, ctx.modulus)
        r = (r - (r * r - a) * pow(2 * r, -1, mod)) % mod
    r %= ctx.modulus
    return (min(r, ctx.modulus - r), max(r, ctx.modulus - r))


def _tonelli_shanks(a: int, p: int) -> int:
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r
