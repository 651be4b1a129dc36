"""Open catalog, fourth block: quartic-coefficient polynomial sums S_n(x),
high-modulus squared/cubed central-binomial families, and two double sums."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..padic import jacobi
from ..quadrep import FormSpec
from .core import Env, case_table, int_scan_entry, sum_entry
from .lib import is_power_of, poly_terms, require, seq_div_scan, sym_case_rhs

from ..seqgen import quartic_S


def _s(d: int):
    """(d/p) as a symbol function."""
    return lambda env: env.jac(d)


def _sp(n: int):
    """(p/n) as a symbol function."""
    return lambda env: env.jac_of_p(n)


def _cx2m2p(c: int):
    return lambda env, x, y: c * x * x - 2 * env.p


def _2pmcx2(c: int):
    return lambda env, x, y: 2 * env.p - c * x * x


# ---------------------------------------------------------------------------
# A38 -- S_n(12) and S_n(-20)
# ---------------------------------------------------------------------------

X_1MOD4 = FormSpec(1, 1, 1, (("x_mod", 1, 4),))
X_ODD = FormSpec(1, 1, 1, (("x_mod", 1, 2),))
X_ODD_XY1MOD5 = FormSpec(1, 1, 1, (("x_mod", 1, 2), ("xy_mod", 1, 5)))


def _a38_i_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (
                p % 12 == 1,
                lambda: env.rep(
                    X_1MOD4,
                    lambda x, y: Fraction(
                        (-1 if x % 3 == 0 else 1) * (4 * x * x - 2 * p)
                    ),
                ),
            ),
            (
                p % 12 == 5,
                lambda: env.rep(
                    X_1MOD4, lambda x, y: Fraction(jacobi(x * y, 3) * 4 * x * y)
                ),
            ),
            (p % 4 == 3, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A38.i.case",
    terms=poly_terms(lambda k: quartic_S(k, 12), 1, (1,)),
    rhs=_a38_i_rhs,
    mod_exp=2,
    cost="quadratic",
)

sum_entry(
    "A38.i.weighted",
    terms=poly_terms(lambda k: quartic_S(k, 12), 1, (3, 4)),
    rhs=lambda env: Fraction(env.p * (1 + 2 * env.jac(3))),
    mod_exp=2,
    cost="quadratic",
)

int_scan_entry(
    "A38.i.int",
    kind="IntegralityScan",
    checker=seq_div_scan(
        lambda k: quartic_S(k, 12), 1, (3, 4), lambda n: n, start=1
    ),
    scan_max=200,
)


def _a38_ii_rhs(env: Env) -> Fraction:
    s1, s5 = env.jac(-1), env.jac_of_p(5)
    return case_table(
        env,
        [
            (
                s1 == 1 and s5 == 1,
                lambda: env.rep(
                    X_ODD,
                    lambda x, y: Fraction(
                        (-1 if x % 5 == 0 else 1) * (4 * x * x - 2 * env.p)
                    ),
                ),
            ),
            (
                s1 == 1 and s5 == -1,
                lambda: env.rep(
                    X_ODD_XY1MOD5, lambda x, y: Fraction(jacobi(x, 5) * 4 * x * y)
                ),
            ),
            (s1 == -1, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A38.ii.case",
    terms=poly_terms(lambda k: quartic_S(k, -20), 1, (1,)),
    rhs=_a38_ii_rhs,
    mod_exp=2,
    gate=(("not", (5,)),),
    cost="quadratic",
)

sum_entry(
    "A38.ii.weighted",
    terms=poly_terms(lambda k: quartic_S(k, -20), 1, (5, 6)),
    rhs=lambda env: env.p * env.jac(-1) * Fraction(2 + 3 * env.jac(-5)),
    mod_exp=2,
    gate=(("not", (5,)),),
    cost="quadratic",
)

int_scan_entry(
    "A38.ii.int",
    kind="IntegralityScan",
    checker=seq_div_scan(
        lambda k: quartic_S(k, -20), 1, (5, 6), lambda n: n, start=1
    ),
    scan_max=200,
)


# ---------------------------------------------------------------------------
# A39 -- five genus families for S_n(x)
# ---------------------------------------------------------------------------

def _a39_family(tag, x, syms, cases, wcoeffs, wrhs, *, gate, wgate):
    sum_entry(
        f"{tag}.case",
        terms=poly_terms(lambda k: quartic_S(k, x), 1, (1,)),
        rhs=sym_case_rhs(syms, cases),
        mod_exp=2,
        gate=gate,
        cost="quadratic",
    )
    sum_entry(
        f"{tag}.weighted",
        terms=poly_terms(lambda k: quartic_S(k, x), 1, wcoeffs),
        rhs=wrhs,
        mod_exp=2,
        gate=wgate,
        cost="quadratic",
    )
    int_scan_entry(
        f"{tag}.int",
        kind="IntegralityScan",
        checker=seq_div_scan(
            lambda k: quartic_S(k, x), 1, wcoeffs, lambda n: n, start=1
        ),
        scan_max=200,
    )


_a39_family(
    "A39.i",
    36,
    [_s(2), _sp(3), _sp(5)],
    [
        ((1, 1, 1), FormSpec(1, 1, 30), _cx2m2p(4)),
        ((-1, 1, -1), FormSpec(1, 3, 10), _cx2m2p(12)),
        ((1, -1, -1), FormSpec(1, 2, 15), _cx2m2p(8)),
        ((-1, -1, 1), FormSpec(1, 5, 6), _2pmcx2(20)),
    ],
    (7, 8),
    lambda env: env.p * env.jac_of_p(15) * Fraction(3 + 4 * env.jac(-6)),
    gate=(("not", (3, 5)),),
    wgate=(("not", (3, 5)),),
)

_a39_family(
    "A39.ii",
    196,
    [_s(2), _sp(5), _sp(7)],
    [
        ((1, 1, 1), FormSpec(1, 1, 70), _cx2m2p(4)),
        ((-1, -1, 1), FormSpec(1, 2, 35), _cx2m2p(8)),
        ((-1, 1, -1), FormSpec(1, 5, 14), _2pmcx2(20)),
        ((1, -1, -1), FormSpec(1, 7, 10), _cx2m2p(28)),
    ],
    (109, 120),
    lambda env: env.p * env.jac_of_p(7) * Fraction(49 + 60 * env.jac(-14)),
    gate=(("not", (5, 7)),),
    wgate=(("not", (7,)),),
)

_a39_family(
    "A39.iii",
    -324,
    [_s(-1), _sp(5), _sp(17)],
    [
        ((1, 1, 1), FormSpec(1, 1, 85), _cx2m2p(4)),
        ((-1, -1, 1), FormSpec(2, 1, 85), _cx2m2p(2)),
        ((1, -1, -1), FormSpec(1, 5, 17), _2pmcx2(20)),
        ((-1, 1, -1), FormSpec(2, 5, 17), _2pmcx2(10)),
    ],
    (31, 34),
    lambda env: env.p * env.jac_of_p(5) * Fraction(17 + 14 * env.jac(-1)),
    gate=(("not", (3, 5, 17)),),
    wgate=(("min", 5), ("not", (5,))),
)

_a39_family(
    "A39.iv",
    1296,
    [_s(-2), _sp(5), _sp(13)],
    [
        ((1, 1, 1), FormSpec(1, 1, 130), _cx2m2p(4)),
        ((1, -1, -1), FormSpec(1, 2, 65), _cx2m2p(8)),
        ((-1, 1, -1), FormSpec(1, 5, 26), _2pmcx2(20)),
        ((-1, -1, 1), FormSpec(1, 10, 13), _2pmcx2(40)),
    ],
    (121, 130),
    lambda env: env.p * env.jac(-2) * Fraction(56 + 65 * env.jac(-26)),
    gate=(("not", (3, 5, 13)),),
    wgate=(("min", 5), ("not", (13,))),
)

_a39_family(
    "A39.v",
    5776,
    [_s(2), _sp(5), _sp(19)],
    [
        ((1, 1, 1), FormSpec(1, 1, 190), _cx2m2p(4)),
        ((1, -1, -1), FormSpec(1, 2, 95), _cx2m2p(8)),
        ((-1, -1, 1), FormSpec(1, 5, 38), _2pmcx2(20)),
        ((-1, 1, -1), FormSpec(1, 10, 19), _2pmcx2(40)),
    ],
    (769, 816),
    lambda env: env.p * env.jac_of_p(95) * Fraction(361 + 408 * env.jac_of_p(19)),
    gate=(("not", (5, 19)),),
    wgate=(("not", (5, 19)),),
)


# ---------------------------------------------------------------------------
# A40 / A41 / A42 -- high-modulus polynomial-weight families and their scans
# ---------------------------------------------------------------------------

def _c4c3(k: int) -> int:
    return comb(2 * k, k) ** 4 * comb(3 * k, k)


def _c5(k: int) -> int:
    return comb(2 * k, k) ** 5


def _c7(k: int) -> int:
    return comb(2 * k, k) ** 7


sum_entry(
    "A40.i.full",
    terms=poly_terms(_c4c3, -64, (3, 18, 28)),
    rhs=lambda env: 3 * env.p ** 2
    - Fraction(7, 2) * env.p ** 5 * env.B(-3),
    mod_exp=6,
)

sum_entry(
    "A40.i.half",
    terms=poly_terms(_c4c3, -64, (3, 18, 28)),
    rhs=lambda env: 3 * env.p ** 2
    + 6 * env.jac(-1) * env.p ** 4 * env.E(-3),
    rng="half",
    mod_exp=5,
)

int_scan_entry(
    "A40.ii",
    kind="IntegralityScan",
    checker=seq_div_scan(
        _c4c3,
        -64,
        (3, 18, 28),
        lambda n: (2 * n + 1) * n * n * comb(2 * n, n) ** 2,
    ),
    scan_max=200,
)

sum_entry(
    "A41.i.full",
    terms=poly_terms(_c5, -256, (1, 6, 10)),
    rhs=lambda env: env.p ** 2 - Fraction(7, 6) * env.p ** 5 * env.B(-3),
    mod_exp=6,
    gate=(("not", (3,)),),
)

sum_entry(
    "A41.i.half",
    terms=poly_terms(_c5, -256, (1, 6, 10)),
    rhs=lambda env: env.p ** 2 + Fraction(7, 3) * env.p ** 5 * env.B(-3),
    rng="half",
    mod_exp=6,
    gate=(("not", (3,)),),
)

sum_entry(
    "A41.ii.full",
    terms=poly_terms(_c4c3, 4096, (3, 27, 74)),
    rhs=lambda env: 3 * env.p ** 2 + 7 * env.p ** 5 * env.B(-3),
    mod_exp=6,
    gate=(("not", (5,)),),
)


def _a41_half_rhs(env: Env) -> Fraction:
    h = sum(Fraction(1, k) for k in range(1, env.p))
    return 3 * env.p ** 2 - Fraction(9, 4) * env.p ** 3 * h


sum_entry(
    "A41.ii.half",
    terms=poly_terms(_c4c3, 4096, (3, 27, 74)),
    rhs=_a41_half_rhs,
    rng="half",
    mod_exp=7,
    gate=(("not", (5,)),),
)

sum_entry(
    "A42.i.a",
    terms=poly_terms(_c7, 256, (1, 8, 22, 21)),
    rhs=lambda env: Fraction(env.p ** 3),
    mod_exp=8,
    gate=(("not", (5,)),),
)

sum_entry(
    "A42.i.b",
    terms=poly_terms(_c7, 2 ** 20, (1, 14, 76, 168)),
    rhs=lambda env: Fraction(env.jac(-1) * env.p ** 3),
    rng="half",
    mod_exp=8,
    gate=(("not", (5,)),),
)


def _mod_2n3C3(n: int) -> int:
    return 2 * n ** 3 * comb(2 * n, n) ** 3


int_scan_entry(
    "A42.ii.a",
    kind="IntegralityScan",
    checker=seq_div_scan(_c7, 256, (1, 8, 22, 21), _mod_2n3C3),
    scan_max=200,
)

int_scan_entry(
    "A42.ii.b",
    kind="IntegralityScan",
    checker=seq_div_scan(_c7, 2 ** 20, (1, 14, 76, 168), _mod_2n3C3),
    scan_max=200,
)

int_scan_entry(
    "A42.rem.odd",
    kind="IntegralityScan",
    checker=seq_div_scan(
        _c7,
        256,
        (1, 8, 22, 21),
        _mod_2n3C3,
        odd_iff=lambda n: n - 1 >= 2 and is_power_of(n - 1, 2),
    ),
    scan_max=200,
)


# ---------------------------------------------------------------------------
# A43 / A44 -- double sums
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pair_product_sum(n: int) -> int:
    return sum(
        comb(n, k) ** 2 * comb(2 * k, k) * comb(2 * (n - k), n - k)
        for k in range(n + 1)
    )


def _a43_rhs(env: Env) -> Fraction:
    q = env.qp(2)
    return -4 * env.p ** 4 * q + 6 * env.p ** 5 * q * q


sum_entry(
    "A43.i",
    terms=poly_terms(_pair_product_sum, 16, (0, 1, 3)),
    rhs=_a43_rhs,
    mod_exp=6,
    gate=(("min", 5),),
    cost="quadratic",
)

int_scan_entry(
    "A43.ii",
    kind="IntegralityScan",
    checker=seq_div_scan(
        _pair_product_sum,
        16,
        (0, 1, 3),
        lambda m: 2 * m ** 3 * (m - 1),
        odd_iff=lambda m: is_power_of(m, 2),
    ),
    scan_max=200,
)


@lru_cache(maxsize=None)
def _a44_seq(n: int) -> int:
    return comb(2 * n, n) * sum(
        comb(n, k) * comb(n + 2 * k, 2 * k) * comb(2 * k, k) * (-324) ** (n - k)
        for k in range(n + 1)
    )


sum_entry(
    "A44.weighted",
    terms=poly_terms(_a44_seq, 2160, (103, 357)),
    rhs=lambda env: env.p
    * env.jac(-1)
    * Fraction(54 + 49 * env.jac_of_p(15)),
    mod_exp=2,
    gate=(("min", 7),),
    cost="quadratic",
)

sum_entry(
    "A44.case",
    terms=poly_terms(_a44_seq, 2160, (1,)),
    rhs=sym_case_rhs(
        [_s(-1), _sp(3), _sp(5), _sp(7)],
        [
            ((1, 1, 1, 1), FormSpec(1, 1, 105), _cx2m2p(4)),
            ((1, -1, -1, 1), FormSpec(2, 1, 105), _cx2m2p(2)),
            ((-1, -1, -1, -1), FormSpec(1, 3, 35), _2pmcx2(12)),
            ((-1, 1, 1, -1), FormSpec(2, 3, 35), _2pmcx2(6)),
            ((1, -1, 1, -1), FormSpec(1, 5, 21), _cx2m2p(20)),
            ((1, 1, -1, -1), FormSpec(2, 5, 21), _cx2m2p(10)),
            ((-1, 1, -1, 1), FormSpec(1, 7, 15), _cx2m2p(28)),
            ((-1, -1, 1, 1), FormSpec(2, 7, 15), _cx2m2p(14)),
        ],
    ),
    mod_exp=2,
    gate=(("min", 7), ("not", (7,))),
    cost="quadratic",
)
