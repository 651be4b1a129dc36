"""Open catalog, sixth block: Lucas-sequence-weighted central binomial
squares, Apery-number families, and central Delannoy / Schroder sums."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..padic import jacobi
from ..quadrep import FormSpec
from ..seqgen import QUARTIC, apery_A, delannoy_D, factorial_ratio, schroder_S
from .core import (
    CheckResult,
    Env,
    case_table,
    chain_entry,
    congruence_paths,
    custom_entry,
    int_scan_entry,
    sum_entry,
)
from .lib import harmonic_cached, rhs_zero


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


def _C2(k: int) -> int:
    return comb(2 * k, k) ** 2


# Lucas-sequence prefix cache: one growing list per parameter pair.
_LUCAS_CACHE: dict[tuple[str, int, int], list[int]] = {}


def _lucas(kind: str, A: int, B: int, n: int) -> int:
    seq = _LUCAS_CACHE.setdefault((kind, A, B), [0, 1] if kind == "u" else [2, A])
    while len(seq) <= n:
        seq.append(A * seq[-1] - B * seq[-2])
    return seq[n]


def _pell(k: int) -> int:
    return _lucas("u", 2, -1, k)


def _pell_c(k: int) -> int:
    return _lucas("v", 2, -1, k)


def _u41(k: int) -> int:
    return _lucas("u", 4, 1, k)


def _v41(k: int) -> int:
    return _lucas("v", 4, 1, k)


def _u71(k: int) -> int:
    return _lucas("u", 7, 1, k)


def _v71(k: int) -> int:
    return _lucas("v", 7, 1, k)


def _u141(k: int) -> int:
    return _lucas("u", 14, 1, k)


def _v141(k: int) -> int:
    return _lucas("v", 14, 1, k)


@lru_cache(maxsize=None)
def _A(k: int) -> int:
    return apery_A(k)


@lru_cache(maxsize=None)
def _D(k: int) -> int:
    return delannoy_D(k)


@lru_cache(maxsize=None)
def _S(k: int) -> int:
    return schroder_S(k)


# p = x^2 + 2y^2 with the sign of x (and, where used, y) pinned mod 8;
# p = x^2 + 3y^2 with x pinned mod 3 or y pinned mod 4.
FORM_2_X13 = FormSpec(1, 1, 2, (("x_mod_in", (1, 3), 8),))
FORM_2_X13_Y13 = FormSpec(1, 1, 2, (("x_mod_in", (1, 3), 8), ("y_mod_in", (1, 3), 8)))
FORM_2_FREE = FormSpec(1, 1, 2)
FORM_3_X1 = FormSpec(1, 1, 3, (("x_mod", 1, 3),))
FORM_3_Y1 = FormSpec(1, 1, 3, (("y_mod", 1, 4),))
FORM_3_FREE = FormSpec(1, 1, 3)


# ---------------------------------------------------------------------------
# A57 -- Pell numbers against C(2k,k)^2/(-8)^k
# ---------------------------------------------------------------------------

def _a57_ia_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (p % 8 == 1, lambda: Fraction(0)),
            (
                p % 8 == 3,
                lambda: env.rep(
                    FORM_2_X13,
                    lambda x, y: _sgn((p - 3) // 8)
                    * (Fraction(p, 2 * x) - 2 * x),
                ),
            ),
        ],
    )


sum_entry(
    "A57.i.a",
    terms=lambda env, k: _pell(k) * Fraction(_C2(k)) / Fraction(-8) ** k,
    rhs=_a57_ia_rhs,
    mod_exp=2,
    gate=(("mod", 8, (1, 3)),),
)

sum_entry(
    "A57.i.b",
    terms=lambda env, k: k * _pell(k) * Fraction(_C2(k)) / Fraction(-8) ** k,
    rhs=lambda env: env.rep(
        FORM_2_X13,
        lambda x, y: Fraction(_sgn((x + 1) // 2), 2)
        * (x + (1 - 2 * env.jac(2)) * Fraction(env.p, 2 * x)),
    ),
    mod_exp=2,
    gate=(("mod", 8, (1, 3)),),
)

sum_entry(
    "A57.ii",
    terms=lambda env, k: comb(env.p - 1, k)
    * _pell(k)
    * Fraction(_C2(k))
    / Fraction(8) ** k,
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 8, (7,)),),
)


# ---------------------------------------------------------------------------
# A58 -- Pell numbers against C(2k,k)^2/32^k
# ---------------------------------------------------------------------------

sum_entry(
    "A58.i",
    terms=lambda env, k: _pell(k) * Fraction(_C2(k)) / Fraction(32) ** k,
    rhs=lambda env: env.rep(
        FORM_2_X13_Y13,
        lambda x, y: _sgn((y - 1) // 2) * (2 * y - Fraction(env.p, 4 * y)),
    ),
    mod_exp=2,
    gate=(("mod", 8, (3,)),),
)


def _a58_ii_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (
                p % 8 == 1,
                lambda: env.rep(
                    FORM_2_X13,
                    lambda x, y: _sgn((p - 1) // 8)
                    * (Fraction(p, 4 * x) - Fraction(x, 2)),
                ),
            ),
            (
                p % 8 == 3,
                lambda: env.rep(
                    FORM_2_X13_Y13,
                    lambda x, y: Fraction(_sgn((y + 1) // 2) * y),
                ),
            ),
        ],
    )


sum_entry(
    "A58.ii",
    terms=lambda env, k: k * _pell(k) * Fraction(_C2(k)) / Fraction(32) ** k,
    rhs=_a58_ii_rhs,
    mod_exp=2,
    gate=(("mod", 8, (1, 3)),),
)


# ---------------------------------------------------------------------------
# A59 / A60 -- companion Pell numbers
# ---------------------------------------------------------------------------

sum_entry(
    "A59.a",
    terms=lambda env, k: _pell_c(k) * Fraction(_C2(k)) / Fraction(-8) ** k,
    rhs=lambda env: env.rep(
        FORM_2_X13,
        lambda x, y: _sgn((x - 1) // 2) * (4 * x - Fraction(env.p, x)),
    ),
    mod_exp=2,
    gate=(("mod", 8, (1, 3)),),
)


def _a59_b_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (p % 8 == 1, lambda: Fraction(0)),
            (
                p % 8 == 3,
                lambda: env.rep(
                    FORM_2_X13,
                    lambda x, y: _sgn((p - 3) // 8)
                    * 2
                    * (x + Fraction(p, x)),
                ),
            ),
        ],
    )


sum_entry(
    "A59.b",
    terms=lambda env, k: k * _pell_c(k) * Fraction(_C2(k)) / Fraction(-8) ** k,
    rhs=_a59_b_rhs,
    mod_exp=2,
    gate=(("mod", 8, (1, 3)),),
)

sum_entry(
    "A60.i",
    terms=lambda env, k: _pell_c(k) * Fraction(_C2(k)) / Fraction(32) ** k,
    rhs=lambda env: env.rep(
        FORM_2_X13,
        lambda x, y: _sgn((env.p - 1) // 8) * (4 * x - Fraction(env.p, x)),
    ),
    mod_exp=2,
    gate=(("mod", 8, (1,)),),
)


def _a60_ii_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (
                p % 8 == 1,
                lambda: env.rep(
                    FORM_2_X13,
                    lambda x, y: _sgn((p - 1) // 8)
                    * (Fraction(p, x) - 2 * x),
                ),
            ),
            (
                p % 8 == 3,
                lambda: env.rep(
                    FORM_2_X13_Y13,
                    lambda x, y: Fraction(_sgn((y + 1) // 2) * 2 * y),
                ),
            ),
        ],
    )


sum_entry(
    "A60.ii",
    terms=lambda env, k: k * _pell_c(k) * Fraction(_C2(k)) / Fraction(32) ** k,
    rhs=_a60_ii_rhs,
    mod_exp=2,
    gate=(("mod", 8, (1, 3)),),
)


# ---------------------------------------------------------------------------
# A61 / A62 -- u_k(4,1) weights
# ---------------------------------------------------------------------------

sum_entry(
    "A61.a",
    terms=lambda env, k: _u41(k) * Fraction(_C2(k)) / Fraction(4) ** k,
    rhs=lambda env: env.rep(
        FORM_3_Y1,
        lambda x, y: _sgn((env.p + 1) // 4) * (4 * y - Fraction(env.p, 3 * y)),
    ),
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (7,))),
)

sum_entry(
    "A61.b",
    terms=lambda env, k: k * _u41(k) * Fraction(_C2(k)) / Fraction(4) ** k,
    rhs=lambda env: env.rep(
        FORM_3_Y1,
        lambda x, y: _sgn((env.p - 3) // 4)
        * (6 * y - Fraction(7 * env.p, 3 * y)),
    ),
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (7,))),
)

sum_entry(
    "A61.c",
    terms=lambda env, k: _u41(k) * Fraction(_C2(k)) / Fraction(4) ** k,
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (1,))),
)

sum_entry(
    "A62.a",
    terms=lambda env, k: _u41(k) * Fraction(_C2(k)) / Fraction(64) ** k,
    rhs=lambda env: env.rep(
        FORM_3_Y1, lambda x, y: 2 * y - Fraction(env.p, 6 * y)
    ),
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (7,))),
)

sum_entry(
    "A62.b",
    terms=lambda env, k: k * _u41(k) * Fraction(_C2(k)) / Fraction(64) ** k,
    rhs=lambda env: env.rep(FORM_3_Y1, lambda x, y: Fraction(y)),
    mod_exp=2,
    gate=(("min", 5), ("mod", 12, (7,))),
)


# ---------------------------------------------------------------------------
# A63 -- v_k(4,1) weights
# ---------------------------------------------------------------------------

sum_entry(
    "A63.i.a",
    terms=lambda env, k: _v41(k) * Fraction(_C2(k)) / Fraction(4) ** k,
    rhs=lambda env: env.rep(
        FORM_3_X1,
        lambda x, y: _sgn((env.p - 1) // 4 + (x - 1) // 2)
        * (4 * x - Fraction(env.p, x)),
    ),
    mod_exp=2,
    gate=(("mod", 12, (1,)),),
)

sum_entry(
    "A63.i.b",
    terms=lambda env, k: _v41(k) * Fraction(_C2(k)) / Fraction(64) ** k,
    rhs=lambda env: env.rep(
        FORM_3_X1,
        lambda x, y: _sgn((x - 1) // 2) * (4 * x - Fraction(env.p, x)),
    ),
    mod_exp=2,
    gate=(("mod", 12, (1,)),),
)

sum_entry(
    "A63.i.c",
    terms=lambda env, k: k * _v41(k) * Fraction(_C2(k)) / Fraction(4) ** k,
    rhs=lambda env: env.rep(
        FORM_3_X1,
        lambda x, y: _sgn((env.p - 1) // 4 + (x + 1) // 2)
        * (4 * x - Fraction(2 * env.p, x)),
    ),
    mod_exp=2,
    gate=(("mod", 12, (1,)),),
)

sum_entry(
    "A63.i.d",
    terms=lambda env, k: k * _v41(k) * Fraction(_C2(k)) / Fraction(64) ** k,
    rhs=lambda env: env.rep(
        FORM_3_X1,
        lambda x, y: _sgn((x - 1) // 2) * (2 * x - Fraction(env.p, x)),
    ),
    mod_exp=2,
    gate=(("mod", 12, (1,)),),
)

sum_entry(
    "A63.ii.a",
    terms=lambda env, k: _v41(k) * Fraction(_C2(k)) / Fraction(4) ** k,
    rhs=lambda env: env.rep(
        FORM_3_Y1,
        lambda x, y: _sgn((env.p - 3) // 4) * (12 * y - Fraction(env.p, y)),
    ),
    mod_exp=2,
    gate=(("mod", 12, (7,)),),
)

sum_entry(
    "A63.ii.b",
    terms=lambda env, k: k * _v41(k) * Fraction(_C2(k)) / Fraction(4) ** k,
    rhs=lambda env: env.rep(
        FORM_3_Y1,
        lambda x, y: _sgn((env.p + 1) // 4)
        * (20 * y - Fraction(8 * env.p, y)),
    ),
    mod_exp=2,
    gate=(("mod", 12, (7,)),),
)

sum_entry(
    "A63.ii.c",
    terms=lambda env, k: k * _v41(k) * Fraction(_C2(k)) / Fraction(64) ** k,
    rhs=lambda env: env.rep(FORM_3_Y1, lambda x, y: Fraction(4 * y)),
    mod_exp=2,
    gate=(("mod", 12, (7,)),),
)

sum_entry(
    "A63.iii",
    terms=lambda env, k: comb(env.p - 1, k)
    * _v41(k)
    * Fraction(_C2(k))
    / Fraction(-4) ** k,
    rhs=rhs_zero,
    mod_exp=2,
    gate=(("mod", 12, (11,)),),
)


# ---------------------------------------------------------------------------
# A64 -- Apery numbers
# ---------------------------------------------------------------------------

def _a64_i_a_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (
                p % 8 in (1, 3),
                lambda: env.rep(FORM_2_FREE, lambda x, y: Fraction(4 * x * x - 2 * p)),
            ),
            (p % 8 in (5, 7), lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A64.i.a",
    terms=lambda env, k: Fraction(_A(k)),
    rhs=_a64_i_a_rhs,
    mod_exp=2,
    cost="quadratic",
)


def _a64_i_b_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (
                p % 3 == 1,
                lambda: env.rep(FORM_3_FREE, lambda x, y: Fraction(4 * x * x - 2 * p)),
            ),
            (p % 3 == 2, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A64.i.b",
    terms=lambda env, k: Fraction((-1) ** k * _A(k)),
    rhs=_a64_i_b_rhs,
    mod_exp=2,
    gate=(("not", (3,)),),
    cost="quadratic",
)

chain_entry(
    "A64.ii.a",
    sums=[
        (lambda env, k: Fraction((-1) ** k * _A(k)), None),
        (lambda env, k: Fraction(comb(2 * k, k) ** 3) / Fraction(16) ** k, None),
    ],
    mod_exp=3,
    gate=(("min", 5), ("mod", 3, (1,))),
    cost="quadratic",
)

chain_entry(
    "A64.ii.b",
    sums=[
        (lambda env, k: Fraction(_A(k)), None),
        (
            lambda env, k: Fraction(factorial_ratio(k, QUARTIC))
            / Fraction(256) ** k,
            None,
        ),
    ],
    mod_exp=3,
    gate=(("min", 5), ("mod", 8, (1, 3))),
    cost="quadratic",
)

_A64_ARGS = (
    Fraction(1),
    Fraction(-4),
    Fraction(9),
    Fraction(-48),
    Fraction(81),
    Fraction(-324),
    Fraction(2401),
    Fraction(9801),
    Fraction(-25920),
    Fraction(-777924),
    Fraction(96059601),
    Fraction(81, 256),
    Fraction(-9, 16),
    Fraction(81, 32),
    Fraction(-3969, 256),
)


def _a64_iii_checker(p: int, e: int = 1) -> CheckResult:
    witness = {"modulus_exp": 2, "args_checked": 0}
    for x in _A64_ARGS:
        if x.numerator % p == 0 or x.denominator % p == 0:
            continue
        sign = jacobi(x.numerator * x.denominator, p)
        diff = [apery_A(k, x) for k in range(p)] + [
            -sign * factorial_ratio(k, QUARTIC) / (256 * x) ** k for k in range(p)
        ]
        ok_f, ok_o, _, _, w = congruence_paths(p, 2, diff, Fraction(0))
        if ok_f != ok_o:
            return CheckResult.error(f"path disagreement at x={x}")
        if not ok_f:
            witness.update({"arg": str(x), "diff_val": w["diff_val"]})
            return CheckResult.failed(witness)
        witness["args_checked"] += 1
    return CheckResult.passed(witness)


custom_entry(
    "A64.iii",
    kind="SumCongruence",
    checker=_a64_iii_checker,
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)


def _a64_rem_checker(p: int, e: int = 1) -> CheckResult:
    """Proved transfer congruences, sampled at small integer arguments."""
    for x in (Fraction(1), Fraction(-1), Fraction(2), Fraction(3), Fraction(5)):
        diff = [(-1) ** k * apery_A(k, x) for k in range(p)] + [
            -Fraction(comb(2 * k, k) ** 3) * x ** k / Fraction(16) ** k
            for k in range(p)
        ]
        ok_f, ok_o, _, _, w = congruence_paths(p, 2, diff, Fraction(0))
        if ok_f != ok_o:
            return CheckResult.error(f"path disagreement at x={x}")
        if not ok_f:
            return CheckResult.failed({"arg": str(x), "diff_val": w["diff_val"]})
    return CheckResult.passed({"modulus_exp": 2})


custom_entry(
    "A64.rem",
    kind="SumCongruence",
    checker=_a64_rem_checker,
    mod_exp=2,
    status="confirmed",
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A65 -- weighted Apery sums and u/v(7,1), u/v(14,1) companions
# ---------------------------------------------------------------------------

sum_entry(
    "A65.i.a",
    terms=lambda env, k: (2 * k + 1) * Fraction(_A(k)),
    rhs=lambda env: env.p
    - Fraction(7, 2) * env.p ** 2 * harmonic_cached(env.p - 1),
    mod_exp=6,
    gate=(("min", 7),),
    cost="quadratic",
)

sum_entry(
    "A65.i.b",
    terms=lambda env, k: (2 * k + 1) ** 3 * Fraction(_A(k)),
    rhs=lambda env: env.p ** 3
    + 4 * env.p ** 4 * harmonic_cached(env.p - 1)
    + Fraction(6, 5) * env.p ** 8 * env.B(-5),
    mod_exp=9,
    gate=(("min", 5),),
    cost="quadratic",
)

sum_entry(
    "A65.i.c",
    terms=lambda env, k: (2 * k + 1) ** 3 * Fraction((-1) ** k * _A(k)),
    rhs=lambda env: -Fraction(env.p, 3) * env.jac_of_p(3),
    mod_exp=3,
    gate=(("min", 5),),
    cost="quadratic",
)

# (p/15) = -1 family
_GATE_15M = (("min", 7), ("mod", 15, (7, 11, 13, 14)))

sum_entry(
    "A65.ii.m.a",
    terms=lambda env, k: Fraction(_A(k) * _u71(k)),
    rhs=rhs_zero,
    mod_exp=2,
    gate=_GATE_15M,
    cost="quadratic",
)

sum_entry(
    "A65.ii.m.b",
    terms=lambda env, k: Fraction(_A(k) * _v71(k)),
    rhs=rhs_zero,
    mod_exp=2,
    gate=_GATE_15M,
    cost="quadratic",
)

sum_entry(
    "A65.ii.m.c",
    terms=lambda env, k: k * Fraction(_A(k) * _u71(k)),
    rhs=lambda env: Fraction(env.p, 90) * (25 * env.jac_of_p(3) + 27),
    mod_exp=2,
    gate=_GATE_15M,
    cost="quadratic",
)

sum_entry(
    "A65.ii.m.d",
    terms=lambda env, k: k * Fraction(_A(k) * _v71(k)),
    rhs=lambda env: -Fraction(env.p, 2) * (5 * env.jac_of_p(3) + 3),
    mod_exp=2,
    gate=_GATE_15M,
    cost="quadratic",
)

# p == 1, 4 (mod 15), p = x^2 + 15y^2
FORM_15 = FormSpec(1, 1, 15)
_GATE_15P1 = (("min", 7), ("mod", 15, (1, 4)))

sum_entry(
    "A65.ii.p1.a",
    terms=lambda env, k: Fraction(_A(k) * _u71(k)),
    rhs=rhs_zero,
    mod_exp=3,
    gate=_GATE_15P1,
    cost="quadratic",
)

sum_entry(
    "A65.ii.p1.b",
    terms=lambda env, k: k * Fraction(_A(k) * _u71(k)),
    rhs=lambda env: env.rep(
        FORM_15, lambda x, y: Fraction(3 * env.p - 4 * x * x, 45)
    ),
    mod_exp=2,
    gate=_GATE_15P1,
    cost="quadratic",
)

sum_entry(
    "A65.ii.p1.c",
    terms=lambda env, k: Fraction(_A(k) * _v71(k)),
    rhs=lambda env: env.rep(
        FORM_15, lambda x, y: Fraction(8 * x * x - 4 * env.p)
    ),
    mod_exp=2,
    gate=_GATE_15P1,
    cost="quadratic",
)

sum_entry(
    "A65.ii.p1.d",
    terms=lambda env, k: (2 * k + 1) * Fraction(_A(k) * _v71(k)),
    rhs=lambda env: Fraction(2 * env.p),
    mod_exp=3,
    gate=_GATE_15P1,
    cost="quadratic",
)

# p == 2, 8 (mod 15), p = 3x^2 + 5y^2
FORM_35 = FormSpec(1, 3, 5)
_GATE_15P2 = (("min", 7), ("mod", 15, (2, 8)))

sum_entry(
    "A65.ii.p2.a",
    terms=lambda env, k: Fraction(_A(k) * _u71(k)),
    rhs=lambda env: env.rep(
        FORM_35, lambda x, y: Fraction(2 * env.p - 12 * x * x)
    ),
    mod_exp=2,
    gate=_GATE_15P2,
    cost="quadratic",
)

sum_entry(
    "A65.ii.p2.b",
    terms=lambda env, k: (45 * k + 19) * Fraction(_A(k) * _u71(k)),
    rhs=lambda env: Fraction(26 * env.p),
    mod_exp=3,
    gate=_GATE_15P2,
    cost="quadratic",
)

sum_entry(
    "A65.ii.p2.c",
    terms=lambda env, k: Fraction(_A(k) * _v71(k)),
    rhs=lambda env: env.rep(
        FORM_35, lambda x, y: Fraction(84 * x * x - 14 * env.p)
    ),
    mod_exp=2,
    gate=_GATE_15P2,
    cost="quadratic",
)

sum_entry(
    "A65.ii.p2.d",
    terms=lambda env, k: (7 * k + 3) * Fraction(_A(k) * _v71(k)),
    rhs=lambda env: Fraction(-28 * env.p),
    mod_exp=3,
    gate=_GATE_15P2,
    cost="quadratic",
)

# (iii): (-1)^k weights with u/v(14,1), keyed on p mod 12
_GATE_12M = (("min", 7), ("mod", 12, (7, 11)))

sum_entry(
    "A65.iii.m.a",
    terms=lambda env, k: Fraction((-1) ** k * _A(k) * _u141(k)),
    rhs=rhs_zero,
    mod_exp=2,
    gate=_GATE_12M,
    cost="quadratic",
)

sum_entry(
    "A65.iii.m.b",
    terms=lambda env, k: Fraction((-1) ** k * _A(k) * _v141(k)),
    rhs=rhs_zero,
    mod_exp=2,
    gate=_GATE_12M,
    cost="quadratic",
)

sum_entry(
    "A65.iii.m.c",
    terms=lambda env, k: k * Fraction((-1) ** k * _A(k) * _u141(k)),
    rhs=lambda env: -Fraction(env.p, 48) * (15 * env.jac_of_p(3) + 16),
    mod_exp=2,
    gate=_GATE_12M,
    cost="quadratic",
)

sum_entry(
    "A65.iii.m.d",
    terms=lambda env, k: k * Fraction((-1) ** k * _A(k) * _v141(k)),
    rhs=lambda env: env.p * (5 * env.jac_of_p(3) + 4),
    mod_exp=2,
    gate=_GATE_12M,
    cost="quadratic",
)

FORM_9 = FormSpec(1, 1, 9)
_GATE_12P1 = (("min", 7), ("mod", 12, (1,)))

sum_entry(
    "A65.iii.p1.a",
    terms=lambda env, k: Fraction((-1) ** k * _A(k) * _u141(k)),
    rhs=rhs_zero,
    mod_exp=3,
    gate=_GATE_12P1,
    cost="quadratic",
)

sum_entry(
    "A65.iii.p1.b",
    terms=lambda env, k: k * Fraction((-1) ** k * _A(k) * _u141(k)),
    rhs=lambda env: env.rep(
        FORM_9, lambda x, y: Fraction(3 * env.p - 4 * x * x, 48)
    ),
    mod_exp=2,
    gate=_GATE_12P1,
    cost="quadratic",
)

sum_entry(
    "A65.iii.p1.c",
    terms=lambda env, k: Fraction((-1) ** k * _A(k) * _v141(k)),
    rhs=lambda env: env.rep(
        FORM_9, lambda x, y: Fraction(8 * x * x - 4 * env.p)
    ),
    mod_exp=2,
    gate=_GATE_12P1,
    cost="quadratic",
)

sum_entry(
    "A65.iii.p1.d",
    terms=lambda env, k: (2 * k + 1) * Fraction((-1) ** k * _A(k) * _v141(k)),
    rhs=lambda env: Fraction(2 * env.p),
    mod_exp=3,
    gate=_GATE_12P1,
    cost="quadratic",
)

FORM_11 = FormSpec(1, 1, 1)
_GATE_12P5 = (("min", 7), ("mod", 12, (5,)))


def _xy3(mult: int):
    def fn(x, y):
        return Fraction(mult * x * y * jacobi(x * y, 3))

    return fn


sum_entry(
    "A65.iii.p5.a",
    terms=lambda env, k: Fraction((-1) ** k * _A(k) * _u141(k)),
    rhs=lambda env: env.rep(FORM_11, _xy3(-4)),
    mod_exp=2,
    gate=_GATE_12P5,
    cost="quadratic",
)

sum_entry(
    "A65.iii.p5.b",
    terms=lambda env, k: (48 * k + 17) * Fraction((-1) ** k * _A(k) * _u141(k)),
    rhs=lambda env: Fraction(31 * env.p),
    mod_exp=3,
    gate=_GATE_12P5,
    cost="quadratic",
)

sum_entry(
    "A65.iii.p5.c",
    terms=lambda env, k: Fraction((-1) ** k * _A(k) * _v141(k)),
    rhs=lambda env: env.rep(FORM_11, _xy3(56)),
    mod_exp=2,
    gate=_GATE_12P5,
    cost="quadratic",
)

sum_entry(
    "A65.iii.p5.d",
    terms=lambda env, k: (14 * k + 5) * Fraction((-1) ** k * _A(k) * _v141(k)),
    rhs=lambda env: Fraction(-126 * env.p),
    mod_exp=3,
    gate=_GATE_12P5,
    cost="quadratic",
)


def _a65_rem_div_scan(bound: int) -> CheckResult:
    """n | sum_{k<n} (2k+1) A_k(x) and n^3 | sum_{k<n} (2k+1)^3 A_k."""
    bad = []
    for n in range(1, bound + 1):
        for x in (1, -1, 2, 3):
            if sum((2 * k + 1) * apery_A(k, x) for k in range(n)) % n:
                bad.append((n, x))
        if sum((2 * k + 1) ** 3 * apery_A(k) for k in range(n)) % n ** 3:
            bad.append((n, "cubic"))
    if bad:
        return CheckResult.failed({"violations": bad[:10], "max_n": bound})
    return CheckResult.passed({"max_n": bound})


int_scan_entry(
    "A65.rem.div",
    kind="DivisibilityScan",
    checker=_a65_rem_div_scan,
    scan_max=60,
    status="confirmed",
)

sum_entry(
    "A65.rem.a",
    terms=lambda env, k: (2 * k + 1) * Fraction(_A(k)),
    rhs=lambda env: env.p + Fraction(7, 6) * env.p ** 4 * env.B(-3),
    mod_exp=5,
    gate=(("min", 5),),
    status="confirmed",
    cost="quadratic",
)

sum_entry(
    "A65.rem.gz",
    terms=lambda env, k: (2 * k + 1) ** 3 * Fraction(_A(k)),
    rhs=lambda env: Fraction(env.p ** 3),
    mod_exp=6,
    gate=(("min", 5),),
    status="confirmed",
    cost="quadratic",
)


# ---------------------------------------------------------------------------
# A66 -- central Delannoy and Schroder numbers
# ---------------------------------------------------------------------------

sum_entry(
    "A66.i",
    terms=lambda env, k: Fraction(_D(k), k),
    rhs=lambda env: -env.qp(2) + env.p * env.qp(2) ** 2,
    rng="full1",
    mod_exp=2,
    gate=(("min", 5),),
    cost="quadratic",
)

chain_entry(
    "A66.ii",
    sums=[
        (lambda env, k: Fraction(_D(k) * _S(k)), None),
        (lambda env, k: -2 * env.p * Fraction(3 + (-1) ** k, k), None),
    ],
    rhs=lambda env: -2 * env.p * harmonic_cached((env.p - 1) // 2)
    + Fraction(4, 3) * env.p ** 3 * env.B(-3),
    rng="full1",
    mod_exp=4,
    gate=(("min", 5),),
    cost="quadratic",
)

FORM_XODD = FormSpec(1, 1, 1, (("x_mod", 1, 2),))


def _a66_iii_rhs(env: Env) -> Fraction:
    p = env.p
    return case_table(
        env,
        [
            (
                p % 4 == 1,
                lambda: env.rep(FORM_XODD, lambda x, y: Fraction(4 * x * x)),
            ),
            (p % 4 == 3, lambda: Fraction(0)),
        ],
    )


sum_entry(
    "A66.iii",
    terms=lambda env, k: Fraction(_D(k) * _S(k)),
    rhs=_a66_iii_rhs,
    rng="half1",
    mod_exp=1,
    gate=(("min", 5),),
    cost="quadratic",
)

sum_entry(
    "A66.rem.a",
    terms=lambda env, k: Fraction(_D(k)),
    rhs=lambda env: env.jac(-1) - env.p ** 2 * env.E(-3),
    mod_exp=3,
    status="confirmed",
    cost="quadratic",
)

sum_entry(
    "A66.rem.b",
    terms=lambda env, k: Fraction(_D(k), k * k),
    rhs=lambda env: Fraction(2 * env.jac(-1) * env.E(-3)),
    rng="full1",
    mod_exp=1,
    status="confirmed",
    cost="quadratic",
)

sum_entry(
    "A66.rem.c",
    terms=lambda env, k: Fraction(_D(k), k),
    rhs=lambda env: -env.qp(2),
    rng="full1",
    mod_exp=1,
    status="confirmed",
    cost="quadratic",
)

sum_entry(
    "A66.rem.d",
    terms=lambda env, k: Fraction(_D(k) ** 2, k * k),
    rhs=lambda env: -2 * env.qp(2) ** 2,
    rng="full1",
    mod_exp=1,
    status="confirmed",
    cost="quadratic",
)
