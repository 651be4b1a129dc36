"""Exact generators for every sequence the catalog sums over.

Everything here is computed exactly over Python big integers / Fractions and
only reduced p-adically by the caller.  No modular recurrences that divide by
indices (which could hit the prime under test) are used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


# ---------------------------------------------------------------------------
# factorial-ratio products
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorialRatioSpec:
    """Term k = prod (a_i k)! / prod (b_j k)!  with sum(a) == sum(b)."""

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.num) != sum(self.den):
            raise ValueError("factorial-ratio spec must balance multipliers")


# the products that actually occur on left-hand sides
CENTRAL = FactorialRatioSpec((2,), (1, 1))                  # C(2k,k)
CENTRAL3 = FactorialRatioSpec((2, 2, 2), (1, 1, 1, 1, 1, 1))  # C(2k,k)^3
QUARTIC = FactorialRatioSpec((4,), (1, 1, 1, 1))            # (4k)!/(k!)^4
C2C3 = FactorialRatioSpec((2, 2, 3), (1, 1, 1, 1, 1, 2))    # C(2k,k)^2 C(3k,k)
C6C3M = FactorialRatioSpec((6, 3), (3, 3, 1, 1, 1))         # C(6k,3k) C(3k;k,k,k)
C4C2 = FactorialRatioSpec((4, 2), (2, 2, 1, 1))             # C(4k,2k) C(2k,k)
C6C3 = FactorialRatioSpec((6,), (1, 2, 3))                  # (6k)!/(k!(2k)!(3k)!) = C(6k,3k)C(3k,k)


def factorial_ratio(k: int, spec: FactorialRatioSpec) -> int:
    num = 1
    for a in spec.num:
        num *= factorial(a * k)
    den = 1
    for b in spec.den:
        den *= factorial(b * k)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral factorial ratio at k={k}: {spec}")
    return q


def central_binom(k: int) -> int:
    return comb(2 * k, k)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def catalan2_first(k: int) -> int:
    """C_k^(2) = C(3k,k)/(2k+1)."""
    q, r = divmod(comb(3 * k, k), 2 * k + 1)
    if r:
        raise ArithmeticError(f"C(3k,k) not divisible by 2k+1 at k={k}")
    return q


def catalan2_second(k: int) -> int:
    """bar C_k^(2) = 2 C(3k,k)/(k+1)."""
    q, r = divmod(2 * comb(3 * k, k), k + 1)
    if r:
        raise ArithmeticError(f"2 C(3k,k) not divisible by k+1 at k={k}")
    return q


def binom_rat(x: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient C(x, k) for rational x."""
    out = Fraction(1)
    for j in range(k):
        out *= x - j
    return out / factorial(k)


def multinomial_central(k: int, parts: int) -> int:
    """(parts*k)! / (k!)^parts."""
    return factorial(parts * k) // factorial(k) ** parts


# ---------------------------------------------------------------------------
# Lucas sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LucasParams:
    A: int
    B: int


def lucas_u(n: int, params: LucasParams) -> int:
    a, b = 0, 1  # u_0, u_1
    for _ in range(n):
        a, b = b, params.A * b - params.B * a
    return a


def lucas_v(n: int, params: LucasParams) -> int:
    # companion seeds v_0 = 2, v_1 = A (so that v_n(1,-1) = L_n, v_n(2,-1) = Q_n)
    a, b = 2, params.A
    for _ in range(n):
        a, b = b, params.A * b - params.B * a
    return a


FIBONACCI = LucasParams(1, -1)   # u -> F_n, v -> L_n
PELL = LucasParams(2, -1)        # u -> P_n, v -> Q_n


def lucas_u_seq(count: int, params: LucasParams) -> list[int]:
    out = [0, 1]
    for _ in range(count - 2):
        out.append(params.A * out[-1] - params.B * out[-2])
    return out[:count]


def lucas_v_seq(count: int, params: LucasParams) -> list[int]:
    out = [2, params.A]
    for _ in range(count - 2):
        out.append(params.A * out[-1] - params.B * out[-2])
    return out[:count]


# ---------------------------------------------------------------------------
# trinomial / Motzkin / Apery / Delannoy / Schroder families
# ---------------------------------------------------------------------------

def trinomial_T(n: int, b, c):
    """[x^n] (x^2 + b x + c)^n = sum_j C(n,2j) C(2j,j) b^(n-2j) c^j."""
    total = 0
    for j in range(n // 2 + 1):
        total += comb(n, 2 * j) * comb(2 * j, j) * b ** (n - 2 * j) * c ** j
    return total


def motzkin_M(n: int, b, c):
    """sum_j C(n,2j) Catalan_j b^(n-2j) c^j."""
    total = 0
    for j in range(n // 2 + 1):
        total += comb(n, 2 * j) * catalan(j) * b ** (n - 2 * j) * c ** j
    return total


def apery_A(n: int, x=1):
    """A_n(x) = sum_k C(n,k)^2 C(n+k,k)^2 x^k."""
    total = Fraction(0) if isinstance(x, Fraction) else 0
    for k in range(n + 1):
        total += (comb(n, k) * comb(n + k, k)) ** 2 * x ** k
    return total


def delannoy_D(n: int, x=1):
    """D_n(x) = sum_k C(n,k) C(n+k,k) x^k."""
    total = Fraction(0) if isinstance(x, Fraction) else 0
    for k in range(n + 1):
        total += comb(n, k) * comb(n + k, k) * x ** k
    return total


def schroder_S(n: int) -> int:
    """S_n = sum_k C(n+k,2k) Catalan_k (large Schroder numbers)."""
    return sum(comb(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def quartic_S(n: int, x=1):
    """S_n(x) = sum_k C(n,k)^4 x^k."""
    total = Fraction(0) if isinstance(x, Fraction) else 0
    for k in range(n + 1):
        total += comb(n, k) ** 4 * x ** k
    return total


# ---------------------------------------------------------------------------
# harmonic-type sums, Bell, derangement
# ---------------------------------------------------------------------------

def harmonic(n: int, order: int = 1) -> Fraction:
    if order not in (1, 2):
        raise ValueError("harmonic order must be 1 or 2")
    return sum((Fraction(1, k ** order) for k in range(1, n + 1)), Fraction(0))


def harmonic_seq(n: int, order: int = 1) -> list[Fraction]:
    """[H_0, H_1, ..., H_n] (incremental, cheap)."""
    out = [Fraction(0)]
    for k in range(1, n + 1):
        out.append(out[-1] + Fraction(1, k ** order))
    return out


def odd_harmonic2(k: int) -> Fraction:
    """sum_{0<j<=k} 1/(2j-1)^2."""
    return sum((Fraction(1, (2 * j - 1) ** 2) for j in range(1, k + 1)), Fraction(0))


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell(k) for k in range(n))


def derangement(n: int) -> int:
    # D_0 = 1, D_n = n D_{n-1} + (-1)^n
    d = 1
    for m in range(1, n + 1):
        d = m * d + (-1) ** m
    return d


# ---------------------------------------------------------------------------
# q-polynomials (dense, lowest degree first, integer coefficients)
# ---------------------------------------------------------------------------

class PolyZ:
    """Dense univariate polynomial over Z, coefficients lowest-degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = c

    @staticmethod
    def const(v: int) -> "PolyZ":
        return PolyZ([v])

    @staticmethod
    def monomial(deg: int, v: int = 1) -> "PolyZ":
        return PolyZ([0] * deg + [v])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyZ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self) -> str:
        return f"PolyZ({self.coeffs})"

    def __add__(self, other: "PolyZ") -> "PolyZ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyZ(out)

    def __sub__(self, other: "PolyZ") -> "PolyZ":
        out = list(self.coeffs)
        out.extend(0 for _ in range(len(other.coeffs) - len(out)))
        for i, v in enumerate(other.coeffs):
            out[i] -= v
        return PolyZ(out)

    def __mul__(self, other: "PolyZ") -> "PolyZ":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyZ([])
        out = [0] * (len(a) + len(b) - 1)
        for i, va in enumerate(a):
            if va:
                for j, vb in enumerate(b):
                    out[i + j] += va * vb
        return PolyZ(out)

    def shift(self, deg: int) -> "PolyZ":
        """Multiply by q^deg (deg >= 0)."""
        if self.is_zero():
            return self
        return PolyZ([0] * deg + self.coeffs)

    def rem(self, divisor: "PolyZ") -> "PolyZ":
        """Remainder of division by a monic divisor (stays over Z)."""
        if divisor.is_zero() or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        d = divisor.coeffs
        dd = len(d) - 1
        for i in range(len(r) - 1, dd - 1, -1):
            c = r[i]
            if c:
                r[i] = 0
                for j in range(dd):
                    r[i - dd + j] -= c * d[j]
        return PolyZ(r[:dd])

    def eval_at(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out


def q_bracket(n: int) -> PolyZ:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_bracket needs n >= 0")
    return PolyZ([1] * n)


def gauss_binom(n: int, k: int) -> PolyZ:
    """Gaussian binomial via the q-Pascal recurrence (no polynomial division)."""
    if k < 0 or k > n:
        raise ValueError(f"gauss_binom requires 0 <= k <= n, got ({n}, {k})")
    # row-by-row: [m, j] = [m-1, j-1] + q^j [m-1, j]
    row = [PolyZ.const(1)]
    for m in range(1, n + 1):
        new = [PolyZ.const(1)]
        for j in range(1, m):
            new.append(row[j - 1] + row[j].shift(j))
        new.append(PolyZ.const(1))
        row = new
    return row[k]


def schur_fib(n: int) -> PolyZ:
    """q-Fibonacci: F_0 = 0, F_1 = 1, F_{m+1}(q) = F_m(q) + q^m F_{m-1}(q)."""
    if n < 0:
        raise ValueError("schur_fib needs n >= 0")
    a, b = PolyZ([]), PolyZ.const(1)  # F_0, F_1
    for m in range(1, n):
        a, b = b, b + a.shift(m)  # F_{m+1} = F_m + q^m F_{m-1}
    return a if n == 0 else b


def qcongruence_check(a: int, m: int) -> bool:
    """Whether sum_{k<5^a m} q^(-2k(k+1)) [2k,k]_q F_{2k+1}(q) vanishes mod ([5^a]_q)^2.

    Negative powers are cleared by the global factor q^(2K(K-1)), K = 5^a m,
    which is coprime to [5^a]_q and so does not affect the divisibility.
    """
    K = 5 ** a * m
    clear = 2 * K * (K - 1)
    total = PolyZ([])
    for k in range(K):
        term = gauss_binom(2 * k, k) * schur_fib(2 * k + 1)
        total = total + term.shift(clear - 2 * k * (k + 1))
    modulus = q_bracket(5 ** a)
    return total.rem(modulus * modulus).is_zero()
