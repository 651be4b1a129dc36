"""Catalog entry types and the checker combinators shared by all entries."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from ..padic import (
    INF,
    PadicNum,
    PrecisionError,
    PrimeCtx,
    congruent_mod,
    from_rational,
    jacobi,
    rat_sum,
    sqrt_mod,
    valuation_rat,
)
from ..quadrep import FormSpec, NotRepresentable, NotUnique, rep_value, residue_gate
from ..specialnum import (
    bernoulli_poly,
    bernoulli_table,
    euler_poly,
    euler_table,
    fermat_quotient_int,
)

GUARD = 6          # initial precision guard above the target exponent
MAX_RETRIES = 3    # guard doublings before giving up

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"
SKIPPED = "skipped"
ERROR = "error"


class SkipEntry(Exception):
    """Raised inside a checker to mark the argument Skipped (with reason)."""


class NotApplicable(Exception):
    """Raised inside a checker when a dynamic applicability gate fails
    (e.g. conditions on p^a rather than on p alone)."""


@dataclass
class CheckResult:
    outcome: str
    witness: dict | None = None
    reason: str | None = None

    @staticmethod
    def passed(witness=None):
        return CheckResult(PASS, witness)

    @staticmethod
    def failed(witness=None):
        return CheckResult(FAIL, witness)

    @staticmethod
    def inapplicable():
        return CheckResult(INAPPLICABLE)

    @staticmethod
    def skipped(reason):
        return CheckResult(SKIPPED, reason=reason)

    @staticmethod
    def error(reason):
        return CheckResult(ERROR, reason=reason)


@dataclass(frozen=True)
class ConjectureSpec:
    id: str
    status: str                  # "open" | "confirmed"
    kind: str                    # SumCongruence | Integrality | ValuationBound |
    #                              PrimalityCharacterization | DivisibilityScan |
    #                              QPolyCongruence | SeriesSmoke
    cost: str = "linear"         # linear | quadratic (in p)
    mod_exp: int | None = None   # modulus exponent for congruence kinds (at e=1)
    powers: bool = False         # statement quantified over all a in Z+
    gate: tuple = ()             # residue_gate conditions
    checker: Callable = None     # signature depends on kind
    scan_max: int | None = None  # default argument bound for integer-scan kinds
    note: str = ""

    def applicable(self, p: int) -> bool:
        return residue_gate(p, self.gate)


# ---------------------------------------------------------------------------
# per-prime environment (shared read-only tables and helpers)
# ---------------------------------------------------------------------------

class Env:
    """Everything a right-hand side may need at one (p, e)."""

    def __init__(self, p: int, e: int = 1):
        self.p = p
        self.e = e
        self.P = p ** e  # the summation modulus base p^a of the statement

    def jac(self, d: int) -> int:
        return jacobi(d, self.p)

    def jac_of_p(self, n: int) -> int:
        """Jacobi symbol (p^e / n)."""
        return jacobi(self.P, n)

    def B(self, offset: int) -> int:
        """Residue of B_{p+offset} mod p (offset negative, e.g. B(-3) = B_{p-3})."""
        return bernoulli_table(self.p)[self.p + offset]

    def E(self, offset: int) -> int:
        return euler_table(self.p)[self.p + offset]

    def Bpoly(self, offset: int, x) -> int:
        return bernoulli_poly(self.p + offset, x, self.p)

    def Epoly(self, offset: int, x) -> int:
        return euler_poly(self.p + offset, x, self.p)

    def qp(self, base: int) -> Fraction:
        """Fermat quotient as an exact rational (it is an integer)."""
        return Fraction(fermat_quotient_int(base, self.p))

    def rep(self, form: FormSpec, fn):
        return rep_value(self.p, form, fn)

    def sqrt2(self, d: int, exp: int = 2):
        """Both square roots of d mod p^exp (d may be negative), or None."""
        ctx = PrimeCtx(self.p, exp)
        return sqrt_mod(d % ctx.modulus, ctx)


def case_table(env: Env, cases) -> Fraction:
    """Resolve a multi-case RHS; exactly one case must fire.

    cases: list of (condition, value_fn) where condition is a bool and
    value_fn() -> Fraction.  Overlap or zero coverage is a hard error
    (it means the table was encoded wrong).
    """
    hits = [fn for cond, fn in cases if cond]
    if len(hits) != 1:
        raise ArithmeticError(
            f"case table fired {len(hits)} branches at p={env.p} (must be exactly 1)"
        )
    return Fraction(hits[0]())


# ---------------------------------------------------------------------------
# summation ranges
# ---------------------------------------------------------------------------

def range_for(rng, p: int, e: int) -> range:
    P = p ** e
    if callable(rng):
        return rng(p, e)
    if rng == "full":
        return range(P)
    if rng == "full1":
        return range(1, P)
    if rng == "half":
        return range((P - 1) // 2 + 1)
    if rng == "half1":
        return range(1, (P - 1) // 2 + 1)
    if rng == "upper":
        return range(P // 2 + 1, P)
    if isinstance(rng, tuple) and rng[0] == "floor":
        _, num, den = rng
        return range(num * P // den + 1)
    raise ValueError(f"unknown range spec {rng!r}")


# ---------------------------------------------------------------------------
# the dual-route congruence runner
# ---------------------------------------------------------------------------

def padic_signature(x: PadicNum, t: int):
    """Canonical description of x mod p^t (valuation + truncated unit)."""
    if x.unit is None:
        if x.val >= t:
            return ("zero",)
        raise PrecisionError("signature undetermined")
    if x.val >= t:
        return ("zero",)
    if x.abs_prec < t:
        raise PrecisionError("signature undetermined")
    return (x.val, x.unit % x.p ** (t - x.val))


def padic_sum(terms, ctx: PrimeCtx) -> PadicNum:
    acc = PadicNum.zero_to(ctx.p, INF)
    for t in terms:
        acc = acc.add(from_rational(Fraction(t), ctx))
    return acc


def congruence_paths(p: int, target: int, terms: list, rhs: Fraction):
    """Run the truncated fast path and the exact oracle; return both.

    Returns (ok_fast, fast_sig, oracle_sig, witness) where the signatures
    describe the LHS mod p^target.
    """
    rhs = Fraction(rhs)
    lhs_fast = None
    ok_fast = None
    guard = GUARD
    for attempt in range(MAX_RETRIES + 1):
        ctx = PrimeCtx(p, target + guard)
        try:
            lhs_fast = padic_sum(terms, ctx)
            rhs_fast = from_rational(rhs, ctx)
            ok_fast = congruent_mod(lhs_fast, rhs_fast, target)
            fast_sig = padic_signature(lhs_fast, target)
            break
        except PrecisionError:
            guard *= 2
    else:
        raise PrecisionError(
            f"insufficient precision after {MAX_RETRIES} retries at p={p}, target {target}"
        )

    exact = rat_sum(Fraction(t) for t in terms)
    ctx = PrimeCtx(p, target + guard)
    oracle_sig = padic_signature(from_rational(exact, ctx), target)
    ok_oracle = valuation_rat(exact - rhs, p) >= target

    diff = exact - rhs
    witness = {
        "lhs_val": None if exact == 0 else valuation_rat(exact, p),
        "rhs": str(rhs),
        "diff_val": INF if diff == 0 else valuation_rat(diff, p),
        "modulus_exp": target,
        "fast_sig": str(fast_sig),
        "oracle_sig": str(oracle_sig),
    }
    return ok_fast, ok_oracle, fast_sig, oracle_sig, witness


def run_sum_congruence(
    p: int,
    e: int,
    *,
    term_fn,
    rhs_fn,
    rng,
    mod_exp,
    extra_witness=None,
) -> CheckResult:
    """Generic SumCongruence evaluation at one (p, e)."""
    env = Env(p, e)
    target = mod_exp(p, e) if callable(mod_exp) else mod_exp
    try:
        rhs = rhs_fn(env)
        ks = range_for(rng, p, e)
        terms = [term_fn(env, k) for k in ks]
        ok_fast, ok_oracle, fast_sig, oracle_sig, witness = congruence_paths(
            p, target, terms, rhs
        )
    except NotApplicable:
        return CheckResult.inapplicable()
    except SkipEntry as exc:
        return CheckResult.skipped(str(exc))
    except (NotRepresentable, NotUnique, PrecisionError, ArithmeticError) as exc:
        return CheckResult.error(f"{type(exc).__name__}: {exc}")
    if extra_witness:
        witness.update(extra_witness(env))
    if ok_fast != ok_oracle or fast_sig != oracle_sig:
        return CheckResult.error(
            f"fast path ({ok_fast}) disagrees with oracle ({ok_oracle}); "
            f"sigs {fast_sig} vs {oracle_sig}"
        )
    if ok_fast:
        return CheckResult.passed(witness)
    return CheckResult.failed(witness)


# ---------------------------------------------------------------------------
# entry factories
# ---------------------------------------------------------------------------

CATALOG: dict[str, ConjectureSpec] = {}

# (entry id, rhs closure) for every registered case-table RHS; lets the
# totality invariant be exercised without evaluating the left-hand sums
CASE_RHS_ENTRIES: list[tuple[str, Callable]] = []


def register(spec: ConjectureSpec) -> ConjectureSpec:
    if spec.id in CATALOG:
        raise ValueError(f"duplicate catalog id {spec.id}")
    CATALOG[spec.id] = spec
    return spec


def sum_entry(
    id: str,
    *,
    terms,
    rhs,
    mod_exp=2,
    rng="full",
    gate=(),
    powers=False,
    status="open",
    cost="linear",
    note="",
):
    """A 'sum over k of terms == rhs (mod p^mod_exp)' entry.

    terms(env, k) -> Fraction-like; rhs(env) -> Fraction-like (may raise SkipEntry).
    mod_exp may be an int or mod_exp(p, e) -> int.
    """

    def checker(p: int, e: int = 1) -> CheckResult:
        return run_sum_congruence(
            p, e, term_fn=terms, rhs_fn=rhs, rng=rng, mod_exp=mod_exp
        )

    if getattr(rhs, "case_rhs", False):
        CASE_RHS_ENTRIES.append((id, rhs))
    base = mod_exp if isinstance(mod_exp, int) else None
    return register(
        ConjectureSpec(
            id=id,
            status=status,
            kind="SumCongruence",
            cost=cost,
            mod_exp=base,
            powers=powers,
            gate=tuple(gate),
            checker=checker,
            note=note,
        )
    )


def chain_entry(
    id: str,
    *,
    sums,
    rhs=None,
    mod_exp=2,
    rng="full",
    gate=(),
    status="open",
    cost="linear",
    note="",
):
    """Several sums asserted congruent to each other (and optionally to rhs).

    sums: list of (terms_fn, rng_or_None); a None range uses the shared rng.
    The check verifies S_i == S_{i+1} for consecutive pairs and S_last == rhs.
    """

    def checker(p: int, e: int = 1) -> CheckResult:
        env = Env(p, e)
        target = mod_exp(p, e) if callable(mod_exp) else mod_exp
        try:
            values = []
            for term_fn, sub_rng in sums:
                ks = range_for(sub_rng if sub_rng is not None else rng, p, e)
                values.append([term_fn(env, k) for k in ks])
            pairs = [(values[i], values[i + 1]) for i in range(len(values) - 1)]
            witness = {"modulus_exp": target, "chain_len": len(values)}
            for i, (ta, tb) in enumerate(pairs):
                diff_terms = [Fraction(t) for t in ta] + [-Fraction(t) for t in tb]
                ok_f, ok_o, _, _, w = congruence_paths(p, target, diff_terms, Fraction(0))
                if ok_f != ok_o:
                    return CheckResult.error(f"path disagreement on link {i}")
                if not ok_f:
                    witness[f"link_{i}_diff_val"] = w["diff_val"]
                    return CheckResult.failed(witness)
            if rhs is not None:
                r = rhs(env)
                ok_f, ok_o, _, _, w = congruence_paths(
                    p, target, [Fraction(t) for t in values[-1]], Fraction(r)
                )
                if ok_f != ok_o:
                    return CheckResult.error("path disagreement on rhs link")
                if not ok_f:
                    witness.update(w)
                    return CheckResult.failed(witness)
        except NotApplicable:
            return CheckResult.inapplicable()
        except SkipEntry as exc:
            return CheckResult.skipped(str(exc))
        except (NotRepresentable, NotUnique, PrecisionError, ArithmeticError) as exc:
            return CheckResult.error(f"{type(exc).__name__}: {exc}")
        return CheckResult.passed(witness)

    if rhs is not None and getattr(rhs, "case_rhs", False):
        CASE_RHS_ENTRIES.append((id, rhs))
    return register(
        ConjectureSpec(
            id=id,
            status=status,
            kind="SumCongruence",
            cost=cost,
            mod_exp=mod_exp if isinstance(mod_exp, int) else None,
            gate=tuple(gate),
            checker=checker,
            note=note,
        )
    )


def custom_entry(
    id: str,
    *,
    kind: str,
    checker,
    gate=(),
    status="open",
    cost="linear",
    powers=False,
    mod_exp=None,
    scan_max=None,
    note="",
):
    return register(
        ConjectureSpec(
            id=id,
            status=status,
            kind=kind,
            cost=cost,
            mod_exp=mod_exp,
            powers=powers,
            gate=tuple(gate),
            checker=checker,
            scan_max=scan_max,
            note=note,
        )
    )


def int_scan_entry(id: str, *, kind: str, checker, scan_max: int, status="open", note=""):
    """Entry whose argument is an integer n (integrality / valuation claims).

    checker(n) -> CheckResult.
    """
    return register(
        ConjectureSpec(
            id=id,
            status=status,
            kind=kind,
            checker=checker,
            scan_max=scan_max,
            note=note,
        )
    )


# ---------------------------------------------------------------------------
# public checks used by the harness
# ---------------------------------------------------------------------------

def lookup(id: str) -> ConjectureSpec:
    try:
        return CATALOG[id]
    except KeyError:
        raise KeyError(f"no catalog entry with id {id!r}") from None


def list_entries(status=None, kind=None, cost=None) -> list[ConjectureSpec]:
    out = []
    for spec in CATALOG.values():
        if status and spec.status != status:
            continue
        if kind and spec.kind != kind:
            continue
        if cost and spec.cost != cost:
            continue
        out.append(spec)
    return sorted(out, key=lambda s: _id_key(s.id))


def _id_key(id: str):
    head = id.split(".")[0]
    letter = head[0]
    try:
        num = int(head[1:])
    except ValueError:
        num = 0
    return (letter, num, id)


def check_congruence(id: str, p: int, a_override: int | None = None) -> CheckResult:
    spec = lookup(id)
    if spec.kind != "SumCongruence":
        raise ValueError(f"{id} is not a per-prime congruence entry")
    if not spec.applicable(p):
        return CheckResult.inapplicable()
    e = a_override if (a_override and spec.powers) else 1
    return spec.checker(p, e)


def oracle_check(id: str, p: int, a_override: int | None = None) -> CheckResult:
    """Re-run a congruence entry; congruence_paths already cross-validates the
    exact-rational oracle against the truncated path, so a Pass here certifies
    both routes agree bit-for-bit at the target exponent."""
    return check_congruence(id, p, a_override)


def sample_oracle_pairs(seed: int, count: int = 25, max_p: int = 61):
    """Deterministic (entry, prime) sample for the oracle-equivalence check."""
    rng = random.Random(seed)
    sum_entries = [s for s in list_entries(kind="SumCongruence")]
    primes = [p for p in range(3, max_p + 1) if all(p % d for d in range(2, p))]
    pairs = []
    attempts = 0
    while len(pairs) < count and attempts < count * 40:
        attempts += 1
        spec = rng.choice(sum_entries)
        p = rng.choice(primes)
        if spec.applicable(p):
            pairs.append((spec.id, p))
    return pairs
