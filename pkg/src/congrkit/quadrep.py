"""Binary quadratic form representations m*p = A*x^2 + B*y^2 with normalization.

Solutions are found by brute-force scanning (O(sqrt p) per form, plenty at
desk scale).  Sign normalization applies the paper's side conditions
(x == r mod s, Jacobi constraints, parities) and refuses to guess when the
constraints leave essentially distinct solutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .padic import jacobi


class NotRepresentable(ArithmeticError):
    pass


class NotUnique(ArithmeticError):
    pass


# constraint forms: ("x_mod", r, s)  ("y_mod", r, s)  ("xy_mod", r, s)
#                   ("x_mod_in", residues, s)  ("y_mod_in", residues, s)
#                   ("xpy_mod", r, s)  x+y == r (mod s)
#                   ("jacobi_x", t, eps)  ("jacobi_y", t, eps)
#                   ("x_pos",)  ("y_pos",)
Constraint = tuple


@dataclass(frozen=True)
class FormSpec:
    m: int  # multiplier on p
    A: int
    B: int
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self) -> None:
        if self.m not in (1, 2, 4):
            raise ValueError(f"multiplier must be 1, 2 or 4, got {self.m}")
        if self.A < 1 or self.B < 1:
            raise ValueError("form coefficients must be positive")


def enumerate_reps(p: int, form: FormSpec) -> list[tuple[int, int]]:
    """All solutions (x >= 0, y >= 0) of m*p = A*x^2 + B*y^2."""
    target = form.m * p
    out = []
    y = 0
    while form.B * y * y <= target:
        rest = target - form.B * y * y
        q, r = divmod(rest, form.A)
        if r == 0:
            x = isqrt(q)
            if x * x == q:
                out.append((x, y))
        y += 1
    return out


def _satisfies(x: int, y: int, c: Constraint) -> bool:
    kind = c[0]
    if kind == "x_mod":
        return x % c[2] == c[1] % c[2]
    if kind == "y_mod":
        return y % c[2] == c[1] % c[2]
    if kind == "x_mod_in":
        return x % c[2] in c[1]
    if kind == "y_mod_in":
        return y % c[2] in c[1]
    if kind == "xy_mod":
        return (x * y) % c[2] == c[1] % c[2]
    if kind == "xpy_mod":
        return (x + y) % c[2] == c[1] % c[2]
    if kind == "jacobi_x":
        return jacobi(x, c[1]) == c[2]
    if kind == "jacobi_y":
        return jacobi(y, c[1]) == c[2]
    if kind == "x_pos":
        return x > 0
    if kind == "y_pos":
        return y > 0
    raise ValueError(f"unknown constraint {c!r}")


def signed_solutions(p: int, form: FormSpec) -> list[tuple[int, int]]:
    """All signed (x, y) meeting every normalization constraint."""
    seen = set()
    out = []
    for x0, y0 in enumerate_reps(p, form):
        xs = {x0, -x0}
        ys = {y0, -y0}
        for x in xs:
            for y in ys:
                if (x, y) in seen:
                    continue
                seen.add((x, y))
                if all(_satisfies(x, y, c) for c in form.constraints):
                    out.append((x, y))
    return out


def _sign_pinned(form: FormSpec, coord: str) -> bool:
    """Whether the constraints can distinguish the sign of the coordinate."""
    for c in form.constraints:
        kind = c[0]
        if coord == "x":
            if kind == "x_mod" and c[2] > 2:
                return True
            if kind == "x_mod_in" and all((-r) % c[2] not in c[1] for r in c[1]):
                return True
            if kind in ("jacobi_x", "x_pos"):
                return True
        if coord == "y":
            if kind == "y_mod" and c[2] > 2:
                return True
            if kind == "y_mod_in" and all((-r) % c[2] not in c[1] for r in c[1]):
                return True
            if kind in ("jacobi_y", "y_pos"):
                return True
        if kind in ("xy_mod", "xpy_mod"):
            return True
    return False


def normalized_rep(p: int, form: FormSpec) -> tuple[int, int]:
    """The unique constrained solution, up to constraint-irrelevant sign freedom.

    Raises NotRepresentable when the form has no solution at all, NotUnique
    when the constraints leave essentially distinct solutions.
    """
    if not enumerate_reps(p, form):
        raise NotRepresentable(f"{form.m}*{p} = {form.A}x^2 + {form.B}y^2 has no solution")
    sols = signed_solutions(p, form)
    if not sols:
        raise NotUnique(f"no signed solution meets constraints for p={p}, {form}")
    pin_x = _sign_pinned(form, "x")
    pin_y = _sign_pinned(form, "y")
    canon = {(x if pin_x else abs(x), y if pin_y else abs(y)) for x, y in sols}
    if len(canon) != 1:
        raise NotUnique(f"constraints leave {len(canon)} essential solutions for p={p}, {form}")
    return canon.pop()


def rep_value(p: int, form: FormSpec, fn):
    """Evaluate fn(x, y) over every admissible signed solution.

    All sign choices the constraints cannot distinguish must give the same
    value (the paper's right-hand sides are sign-invariant in exactly this
    sense); a non-singleton value set is an encoding error, raised as NotUnique.
    """
    sols = signed_solutions(p, form)
    if not sols:
        if enumerate_reps(p, form):
            raise NotUnique(f"no admissible sign choice for p={p}, {form}")
        raise NotRepresentable(f"{form.m}*{p} = {form.A}x^2 + {form.B}y^2 has no solution")
    values = {fn(x, y) for x, y in sols}
    if len(values) != 1:
        raise NotUnique(
            f"RHS not sign-invariant for p={p}, {form}: {sorted(values)[:4]}"
        )
    return values.pop()


def residue_gate(p: int, conditions) -> bool:
    """Conjunction of residue-class / Jacobi / minimum conditions on p.

    conditions: iterable of ("mod", m, residues), ("jacobi", d, eps), ("min", n),
    ("not", values).
    """
    for c in conditions:
        kind = c[0]
        if kind == "mod":
            if p % c[1] not in c[2]:
                return False
        elif kind == "jacobi":
            if jacobi(c[1], p) != c[2]:
                return False
        elif kind == "min":
            if p < c[1]:
                return False
        elif kind == "not":
            if p in c[1]:
                return False
        else:
            raise ValueError(f"unknown gate condition {c!r}")
    return True
