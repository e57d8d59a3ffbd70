"""Constructors for the classified operator families.

Each constructor validates the defining parameter constraints strictly and
returns an OperatorFamily; the construction realizes exactly the normalized
coefficient polynomials recorded for each family, so every family built here
passes the braid verification in :mod:`braidops.braid`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .divdiff import dpositive_lift  # noqa: F401  (re-exported surface)
from .field import FieldElement, ONE, ZERO, ZETA, ZETA_BAR
from .multipoly import SlotPoly
from .pddo import PDDO, Degeneracy, identity_op

__all__ = [
    "ConstraintError",
    "OperatorFamily",
    "Case2Line",
    "Isolated",
    "Interval",
    "main_case1",
    "main_case2",
    "degenerate_t_family",
    "zeta_pair",
    "with_vanishing_q0",
    "preset",
    "case1_operator",
    "case2_operator",
    "coincident_lines",
]

_U = SlotPoly.u()
_V = SlotPoly.v()


class ConstraintError(ValueError):
    """A family constructor was given parameters violating its constraints."""


@dataclass(frozen=True)
class OperatorFamily:
    """A sequence of n-1 operators indexed 1..n-1."""

    n: int
    ops: tuple[PDDO, ...]
    provenance: str = "user-supplied"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a family needs n >= 2")
        if len(self.ops) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} operators, got {len(self.ops)}")

    def __getitem__(self, i: int) -> PDDO:
        """The operator at index i (1-based)."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"operator index {i} out of range 1..{self.n - 1}")
        return self.ops[i - 1]


class Case2Line(Enum):
    """The four independent per-index operator shapes of the second main case,
    given as the (P, Q, R) of the presentation with d-positive Q and R."""

    LINE1 = 1  # P = a uv + b u + c v + d, Q = 0,              R = 0
    LINE2 = 2  # P = a uv + c u + c v + d, Q = (b - c) u,      R = 0
    LINE3 = 3  # P = a u^2 + (b+c) u + c v + d, Q = -c u,      R = -a u
    LINE4 = 4  # P = c v + d,              Q = a u^2 + b u,    R = -a u


def _fe(x) -> FieldElement:
    return FieldElement.of(x)


def _check_abcd(a, b, c, d) -> tuple[FieldElement, ...]:
    a, b, c, d = _fe(a), _fe(b), _fe(c), _fe(d)
    if not (a or b or c or d):
        raise ConstraintError("a, b, c, d must not all be zero")
    if a * d - b * c != ZERO:
        raise ConstraintError("ad - bc must vanish (ad = bc)")
    return a, b, c, d


def case1_operator(a, b, c, d, e) -> PDDO:
    """The uniform operator f |-> (b-c-e) d(x_i f) + [a x_i x_{i+1} + (c+e) x_i
    + c x_{i+1} + d] d f, without parameter validation."""
    a, b, c, d, e = map(_fe, (a, b, c, d, e))
    p = _U.scale(b - c - e)
    q = (_U * _V).scale(a) + _U.scale(c + e) + _V.scale(c) + SlotPoly.const(d)
    return PDDO.from_pqrs(p, q, SlotPoly.zero(), SlotPoly.zero())


def main_case1(n: int, a, b, c, d, e) -> OperatorFamily:
    """The five-constant uniform family; requires ad = bc, (a,b,c,d) not all
    zero, and e outside {0, b - c}."""
    a, b, c, d = _check_abcd(a, b, c, d)
    e = _fe(e)
    if e == ZERO or e == b - c:
        raise ConstraintError(
            "e must equal neither 0 nor b - c; those values belong to the "
            "per-index family (main_case2 lines 1-2)"
        )
    op = case1_operator(a, b, c, d, e)
    return OperatorFamily(n, (op,) * (n - 1), provenance="MainCase1")


def case2_operator(a, b, c, d, line: Case2Line) -> PDDO:
    """One per-index operator of the second main case, unvalidated."""
    a, b, c, d = map(_fe, (a, b, c, d))
    uv = _U * _V
    uu = _U * _U
    zero = SlotPoly.zero()
    if line is Case2Line.LINE1:
        p = uv.scale(a) + _U.scale(b) + _V.scale(c) + SlotPoly.const(d)
        q = zero
        r = zero
    elif line is Case2Line.LINE2:
        p = uv.scale(a) + _U.scale(c) + _V.scale(c) + SlotPoly.const(d)
        q = _U.scale(b - c)
        r = zero
    elif line is Case2Line.LINE3:
        p = uu.scale(a) + _U.scale(b + c) + _V.scale(c) + SlotPoly.const(d)
        q = _U.scale(-c)
        r = _U.scale(-a)
    elif line is Case2Line.LINE4:
        p = _V.scale(c) + SlotPoly.const(d)
        q = uu.scale(a) + _U.scale(b)
        r = _U.scale(-a)
    else:  # pragma: no cover
        raise ValueError(f"unknown line {line}")
    return PDDO.from_pqrs(p, q, r, zero)


def main_case2(n: int, a, b, c, d, lines: Sequence[Case2Line]) -> OperatorFamily:
    """The per-index family: any of the four lines independently per index."""
    a, b, c, d = _check_abcd(a, b, c, d)
    lines = list(lines)
    if len(lines) != n - 1:
        raise ConstraintError(f"need {n - 1} line choices, got {len(lines)}")
    ops = tuple(case2_operator(a, b, c, d, line) for line in lines)
    return OperatorFamily(n, ops, provenance="MainCase2")


def coincident_lines(a, b, c, d) -> list[set[Case2Line]]:
    """Groups of line choices that yield the same operator at these parameters."""
    ops = {line: case2_operator(a, b, c, d, line) for line in Case2Line}
    groups: list[tuple[PDDO, set[Case2Line]]] = []
    for line, op in ops.items():
        for rep, members in groups:
            if op == rep:
                members.add(line)
                break
        else:
            groups.append((op, {line}))
    return [members for _, members in groups if len(members) > 1]


def _uni_product(coeffs_a, coeffs_b) -> list[FieldElement]:
    out = [ZERO] * (len(coeffs_a) + len(coeffs_b) - 1)
    for i, ca in enumerate(coeffs_a):
        for j, cb in enumerate(coeffs_b):
            out[i + j] = out[i + j] + ca * cb
    while out and out[-1] == ZERO:
        out.pop()
    return out


def transposition_scaled(q_l, q_r, qhat: SlotPoly) -> PDDO:
    """The operator f |-> q_l(x_i) q_r(x_{i+1}) qhat(x_i, x_{i+1}) s_i f."""
    multiplier = SlotPoly.univariate(q_l, 0) * SlotPoly.univariate(q_r, 1) * qhat
    return PDDO.from_pqrs(
        SlotPoly.zero(), SlotPoly.zero(), SlotPoly.zero(), multiplier
    )


def degenerate_t_family(
    n: int,
    qhat: SlotPoly,
    p: Sequence,
    factor_pairs: Sequence[tuple[Sequence, Sequence]],
) -> OperatorFamily:
    """All operators are polynomial multiples of the transposition.

    Each index i gets pi_i f = q_l^i(x_i) q_r^i(x_{i+1}) qhat s_i f, where
    every pair must factor the shared univariate product p; this makes the
    multipliers of consecutive operators almost equal by construction.
    """
    if qhat.is_zero():
        raise ConstraintError("qhat must be nonzero")
    p_coeffs = [_fe(c) for c in p]
    while p_coeffs and p_coeffs[-1] == ZERO:
        p_coeffs.pop()
    if not p_coeffs:
        raise ConstraintError("shared product p must be nonzero")
    if len(factor_pairs) != n - 1:
        raise ConstraintError(f"need {n - 1} factor pairs, got {len(factor_pairs)}")
    ops = []
    for idx, (q_l, q_r) in enumerate(factor_pairs, start=1):
        ql = [_fe(c) for c in q_l]
        qr = [_fe(c) for c in q_r]
        if not any(ql) or not any(qr):
            raise ConstraintError(f"factor pair at index {idx} must be nonzero")
        if _uni_product(ql, qr) != p_coeffs:
            raise ConstraintError(
                f"factor pair at index {idx} violates the product property "
                "q_l * q_r = p"
            )
        ops.append(transposition_scaled(ql, qr, qhat))
    return OperatorFamily(n, tuple(ops), provenance="DegenT")


def zeta_pair(a, b, variant: int) -> tuple[PDDO, PDDO]:
    """A consecutive pair (pi, varpi) over Q(z) with varpi a multiplication
    operator with vanishing Q0 and pi nondegenerate; the pair satisfies the
    cubic braid relation.  variant selects one of the four shapes of pi."""
    a = _fe(a)
    b = _fe(b)
    if a == ZERO:
        raise ConstraintError("leading constant a must be nonzero")
    if variant not in (1, 2, 3, 4):
        raise ConstraintError("variant must be 1, 2, 3, or 4")
    u_b = _U + SlotPoly.const(b)
    v_b = _V + SlotPoly.const(b)
    mix = _U.scale(ZETA) + _V.scale(ZETA_BAR) + SlotPoly.const(b)
    mix_bar = _U.scale(ZETA_BAR) + _V.scale(ZETA) + SlotPoly.const(b)
    zero = SlotPoly.zero()
    if variant == 1:
        q = (u_b * mix).scale(a)
        r = u_b.scale(a * ZETA_BAR)
    elif variant == 2:
        q = (u_b * mix_bar).scale(a)
        r = u_b.scale(a * ZETA)
    elif variant == 3:
        q = (v_b * mix).scale(a)
        r = (_U + _V.scale(ZETA_BAR) + SlotPoly.const((ONE + ZETA_BAR) * b)).scale(a)
    else:
        q = (v_b * mix_bar).scale(a)
        r = (_U + _V.scale(ZETA) + SlotPoly.const((ONE + ZETA) * b)).scale(a)
    pi = PDDO.from_pqrs(zero, q, r, zero)
    # varpi multiplies f by a(x_{i+1} + b): in its own slots, a(u + b).
    varpi = PDDO.from_q0_r0(zero, u_b.scale(a))
    return pi, varpi


@dataclass(frozen=True)
class Isolated:
    """An isolated non-scalar index with pi_i f = phi d_i(psi f)."""

    index: int
    phi: SlotPoly
    psi: SlotPoly


@dataclass(frozen=True)
class Interval:
    """A maximal run start..stop (inclusive, length >= 2) of second-main-case
    operators sharing one (a, b, c, d)."""

    start: int
    stop: int
    a: object
    b: object
    c: object
    d: object
    lines: Sequence[Case2Line] | None = None


def isolated_operator(phi: SlotPoly, psi: SlotPoly) -> PDDO:
    """f |-> phi * d(psi f) = phi swap(psi) d f + phi d(psi) f."""
    return PDDO.from_pqrs(
        SlotPoly.zero(), phi * psi.swap(), phi * psi.ddiff(), SlotPoly.zero()
    )


def with_vanishing_q0(
    n: int, mu, segments: Sequence[Isolated | Interval]
) -> OperatorFamily:
    """Families containing scalar operators mu*Id at some indices.

    Indices not covered by a segment get mu*Id.  Isolated segments must have
    d(phi psi) = mu and no neighbor inside another segment; interval segments
    are length >= 2 runs of second-main-case operators with b - c = mu.
    """
    mu = _fe(mu)
    if n < 4:
        raise ConstraintError("the vanishing-Q0 classification requires n >= 4")
    if mu == ZERO:
        raise ConstraintError("mu must be nonzero")
    covered: dict[int, PDDO] = {}
    members: set[int] = set()
    for seg in segments:
        if isinstance(seg, Isolated):
            indices = [seg.index]
        else:
            if seg.stop - seg.start < 1:
                raise ConstraintError(
                    f"interval {seg.start}..{seg.stop} must contain at least "
                    "two indices; use an Isolated segment instead"
                )
            indices = list(range(seg.start, seg.stop + 1))
        for i in indices:
            if not 1 <= i <= n - 1:
                raise ConstraintError(f"segment index {i} out of range 1..{n - 1}")
            if i in members:
                raise ConstraintError(f"segments overlap at index {i}")
            members.add(i)

    for seg in segments:
        if isinstance(seg, Isolated):
            product = seg.phi * seg.psi
            dprod = product.ddiff()
            if not dprod.is_constant() or dprod.constant_value() != mu:
                raise ConstraintError(
                    f"isolated index {seg.index}: d(phi * psi) must equal mu"
                )
            covered[seg.index] = isolated_operator(seg.phi, seg.psi)
        else:
            a, b, c, d = _check_abcd(seg.a, seg.b, seg.c, seg.d)
            if b - c != mu:
                raise ConstraintError(
                    f"interval {seg.start}..{seg.stop}: b - c must equal mu"
                )
            lines = list(seg.lines) if seg.lines is not None else [
                Case2Line.LINE1
            ] * (seg.stop - seg.start + 1)
            if len(lines) != seg.stop - seg.start + 1:
                raise ConstraintError("interval line choices have wrong length")
            for i, line in zip(range(seg.start, seg.stop + 1), lines):
                covered[i] = case2_operator(a, b, c, d, line)

    complement = [i for i in range(1, n) if i not in members]
    if not complement:
        raise ConstraintError("the set of scalar indices must be non-empty")
    for seg in segments:
        if isinstance(seg, Isolated):
            for nb in (seg.index - 1, seg.index + 1):
                if nb in members:
                    raise ConstraintError(
                        f"isolated index {seg.index} has a non-scalar neighbor {nb}"
                    )
        else:
            for nb in (seg.start - 1, seg.stop + 1):
                if nb in members:
                    raise ConstraintError(
                        f"interval {seg.start}..{seg.stop} is not maximal: "
                        f"index {nb} is also non-scalar"
                    )

    ops = tuple(
        covered.get(i, identity_op(mu)) for i in range(1, n)
    )
    return OperatorFamily(n, ops, provenance="WithVanQ0")


def preset(name: str, n: int, param=None) -> OperatorFamily:
    """Classical presets: pure_ddiff(d), demazure, grothendieck(beta)."""
    if name == "pure_ddiff":
        d = _fe(1 if param is None else param)
        if d == ZERO:
            raise ConstraintError("pure_ddiff needs a nonzero scale d")
        fam = main_case2(n, 0, 0, 0, d, [Case2Line.LINE1] * (n - 1))
    elif name == "demazure":
        fam = main_case2(n, 0, 1, 0, 0, [Case2Line.LINE1] * (n - 1))
    elif name == "grothendieck":
        beta = _fe(0 if param is None else param)
        fam = main_case2(n, 0, 0, beta, 1, [Case2Line.LINE1] * (n - 1))
    else:
        raise ConstraintError(f"unknown preset {name!r}")
    return OperatorFamily(fam.n, fam.ops, provenance=f"preset:{name}")
