"""Exact verification of the braid relations and the almost-equality test.

The cubic check is fully symbolic: both triple compositions are brought over
the common denominator (x-y)^2 (x-z) (y-z)^2 and the six numerator
coefficients (of f, sf, sigma f, s sigma f, sigma s f, and the matched pair
s sigma s f / sigma s sigma f) are compared as exact polynomial identities
in three variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import TYPE_CHECKING

from .multipoly import MultiPoly, SlotPoly, instantiate
from .pddo import PDDO

if TYPE_CHECKING:  # pragma: no cover
    from .families import OperatorFamily

__all__ = [
    "CubicReport",
    "FamilyReport",
    "cubic_braid_check",
    "cubic_braid_oracle",
    "quad_commute_check",
    "almost_equal",
    "family_braid_check",
]

COEFF_NAMES = ("f", "sf", "sigma_f", "s_sigma_f", "sigma_s_f", "s_sigma_s_f")


@dataclass(frozen=True)
class CubicReport:
    """Outcome of one cubic braid comparison, one flag per coefficient."""

    flags: dict[str, bool]
    failure: tuple[str, MultiPoly] | None = None

    @property
    def passed(self) -> bool:
        return all(self.flags.values())

    def __bool__(self) -> bool:
        return self.passed


def _coefficients(pi: PDDO, varpi: PDDO) -> tuple[dict, dict]:
    """Numerator coefficients of both triple compositions.

    Common denominator (x-y)^2 (x-z) (y-z)^2: the pi varpi pi numerators are
    multiplied by (y-z) and the varpi pi varpi ones by (x-y).
    """
    n = 3

    def at(p: SlotPoly, i: int, j: int) -> MultiPoly:
        return instantiate(p, i, j, n)

    x = MultiPoly.variable(n, 1)
    y = MultiPoly.variable(n, 2)
    z = MultiPoly.variable(n, 3)
    xy, xz, yz = x - y, x - z, y - z

    T, Q = pi.T, pi.Q0
    Tt, Qt = varpi.T, varpi.Q0
    t_xy, t_yx, t_xz, t_yz = at(T, 1, 2), at(T, 2, 1), at(T, 1, 3), at(T, 2, 3)
    q_xy, q_yx, q_xz, q_yz = at(Q, 1, 2), at(Q, 2, 1), at(Q, 1, 3), at(Q, 2, 3)
    tt_xy, tt_xz, tt_yz, tt_zy = at(Tt, 1, 2), at(Tt, 1, 3), at(Tt, 2, 3), at(Tt, 3, 2)
    qt_xy, qt_xz, qt_yz, qt_zy = at(Qt, 1, 2), at(Qt, 1, 3), at(Qt, 2, 3), at(Qt, 3, 2)

    left = {
        "f": yz * (t_xy * t_xy * tt_yz * xz - tt_xz * q_xy * q_yx * yz),
        "sf": -yz * q_xy * (t_xy * tt_yz * xz - t_yx * tt_xz * yz),
        "sigma_f": -xy * yz * t_xy * qt_yz * t_xz,
        "sigma_s_f": xy * yz * t_xy * qt_yz * q_xz,
        "s_sigma_f": xy * yz * q_xy * qt_xz * t_yz,
        "s_sigma_s_f": -xy * yz * q_xy * qt_xz * q_yz,
    }
    right = {
        "f": xy * (t_xy * tt_yz * tt_yz * xz - t_xz * qt_yz * qt_zy * xy),
        "sigma_f": -xy * qt_yz * (t_xy * tt_yz * xz - tt_zy * t_xz * xy),
        "sf": -xy * yz * tt_yz * q_xy * tt_xz,
        "s_sigma_f": xy * yz * tt_yz * q_xy * qt_xz,
        "sigma_s_f": xy * yz * qt_yz * q_xz * tt_xy,
        "s_sigma_s_f": -xy * yz * qt_yz * q_xz * qt_xy,  # coefficient of sigma s sigma f
    }
    return left, right


def cubic_braid_check(pi: PDDO, varpi: PDDO) -> CubicReport:
    """Does pi at index i and varpi at index i+1 satisfy pi varpi pi = varpi pi varpi?"""
    left, right = _coefficients(pi, varpi)
    flags = {}
    failure = None
    for name in COEFF_NAMES:
        diff = left[name] - right[name]
        flags[name] = diff.is_zero()
        if failure is None and not flags[name]:
            failure = (name, diff)
    return CubicReport(flags=flags, failure=failure)


def cubic_braid_oracle(pi: PDDO, varpi: PDDO, max_degree: int | None = None) -> bool:
    """Brute-force check: apply both compositions to monomial probes.

    The probe degree defaults to the maximal coefficient degree plus two,
    which separates the six coefficient groups at the degrees in play.
    """
    if max_degree is None:
        max_degree = max(
            2,
            pi.T.degree(), pi.Q0.degree(), varpi.T.degree(), varpi.Q0.degree(),
        ) + 2

    def lhs(f: MultiPoly) -> MultiPoly:
        return pi.apply(1, varpi.apply(2, pi.apply(1, f)))

    def rhs(f: MultiPoly) -> MultiPoly:
        return varpi.apply(2, pi.apply(1, varpi.apply(2, f)))

    rng = range(max_degree + 1)
    for a, b, c in product(rng, rng, rng):
        f = MultiPoly.monomial(3, (a, b, c))
        if lhs(f) != rhs(f):
            return False
    return True


def quad_commute_check(pi_i: PDDO, pi_k: PDDO, i: int, k: int, n: int) -> bool:
    """Distant-index commutation pi_i pi_k = pi_k pi_i, checked on monomials.

    Probes every monomial in x_i, x_{i+1}, x_k, x_{k+1} with per-variable
    degree at most 2; holds for every pair of valid operators.
    """
    if abs(k - i) < 2:
        raise ValueError("quad_commute_check needs |k - i| >= 2")
    for idx in (i, k):
        if not 1 <= idx <= n - 1:
            raise IndexError(f"operator index {idx} out of range 1..{n - 1}")
    touched = (i, i + 1, k, k + 1)
    for degs in product(range(3), repeat=4):
        e = [0] * n
        for var, d in zip(touched, degs):
            e[var - 1] = d
        f = MultiPoly.monomial(n, e)
        if pi_i.apply(i, pi_k.apply(k, f)) != pi_k.apply(k, pi_i.apply(i, f)):
            return False
    return True


def almost_equal(q: SlotPoly, qt: SlotPoly) -> bool:
    """Decide almost-equality of two nonzero slot polynomials.

    Equivalent to the exact three-variable identity
    q(x,y) qt(x,z) q(y,z) = qt(x,y) q(x,z) qt(y,z).
    """
    if q.is_zero() or qt.is_zero():
        raise ValueError("almost_equal requires nonzero inputs")
    n = 3
    lhs = instantiate(q, 1, 2, n) * instantiate(qt, 1, 3, n) * instantiate(q, 2, 3, n)
    rhs = instantiate(qt, 1, 2, n) * instantiate(q, 1, 3, n) * instantiate(qt, 2, 3, n)
    return lhs == rhs


@dataclass(frozen=True)
class FamilyReport:
    """Aggregated braid verification for a whole family."""

    cubic: dict[tuple[int, int], CubicReport] = field(default_factory=dict)
    quad: dict[tuple[int, int], bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.cubic.values()) and all(self.quad.values())

    def __bool__(self) -> bool:
        return self.passed


def family_braid_check(fam: "OperatorFamily") -> FamilyReport:
    """Run the cubic check on consecutive pairs and the quadratic check on
    distant pairs of a family of n-1 operators."""
    ops = list(fam.ops)
    n = fam.n
    if len(ops) != n - 1:
        raise ValueError("family must have n - 1 operators")
    if n < 3:
        raise ValueError("braid relations need n >= 3")
    cubic = {}
    quad = {}
    for i in range(1, n - 1):
        cubic[(i, i + 1)] = cubic_braid_check(ops[i - 1], ops[i])
    for i in range(1, n):
        for k in range(i + 2, n):
            quad[(i, k)] = quad_commute_check(ops[i - 1], ops[k - 1], i, k, n)
    return FamilyReport(cubic=cubic, quad=quad)
