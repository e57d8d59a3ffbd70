"""Sparse multivariate polynomials over Q(z), plus bivariate slot templates.

MultiPoly is a polynomial in x_1..x_n with a canonical term map (no zero
coefficients stored).  SlotPoly is a polynomial in two abstract slots (u, v)
that can be instantiated at any ordered pair of variables; it carries the
coefficient polynomials of the operators built in :mod:`braidops.pddo`.
Term order for printing and leading terms is graded lexicographic.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .field import FieldElement, ONE, ZERO

__all__ = [
    "MultiPoly",
    "SlotPoly",
    "DimensionMismatchError",
    "InexactDivisionError",
    "swap_vars",
    "exact_div",
    "instantiate",
]


class DimensionMismatchError(ValueError):
    """Arithmetic between polynomials in different numbers of variables."""


class InexactDivisionError(ArithmeticError):
    """exact_div was called with a divisor that leaves a remainder."""


def _grlex(exponents: tuple[int, ...]) -> tuple:
    return (sum(exponents), exponents)


def _clean(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if c}


def _add_terms(a: Mapping, b: Mapping, sign: FieldElement) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, ZERO) + sign * c
    return _clean(out)


def _mul_terms(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, ZERO) + ca * cb
    return _clean(out)


def _divide_terms(f: Mapping, g: Mapping) -> dict:
    """Exact division of term maps; raises InexactDivisionError."""
    if not g:
        raise ZeroDivisionError("division of polynomial by zero")
    lead_g = max(g, key=_grlex)
    coeff_g = g[lead_g]
    rem = dict(f)
    quo: dict = {}
    while rem:
        lead = max(rem, key=_grlex)
        diff = tuple(a - b for a, b in zip(lead, lead_g))
        if any(d < 0 for d in diff):
            raise InexactDivisionError("nonzero remainder in exact division")
        c = rem[lead] / coeff_g
        quo[diff] = c
        for e, ce in g.items():
            shifted = tuple(a + b for a, b in zip(diff, e))
            new = rem.get(shifted, ZERO) - c * ce
            if new:
                rem[shifted] = new
            else:
                rem.pop(shifted, None)
    return quo


def _fmt_terms(terms: Mapping, names) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, key=_grlex, reverse=True):
        factors = []
        for name, exp in zip(names, e):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f"{name}^{exp}")
        coeff = terms[e]
        body = "*".join(factors)
        if not body:
            parts.append(f"({coeff})")
        elif coeff == ONE:
            parts.append(body)
        else:
            parts.append(f"({coeff})*{body}")
    return " + ".join(parts)


class MultiPoly:
    """A polynomial in variables x_1..x_n over Q(z)."""

    __slots__ = ("n_vars", "_terms")

    def __init__(self, n_vars: int, terms: Mapping[tuple[int, ...], FieldElement]):
        if n_vars < 1:
            raise ValueError("n_vars must be positive")
        cleaned = {}
        for e, c in terms.items():
            if len(e) != n_vars:
                raise ValueError(f"exponent vector {e} has wrong length")
            c = FieldElement.of(c)
            if c:
                cleaned[tuple(e)] = c
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, *args):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n_vars: int) -> "MultiPoly":
        return MultiPoly(n_vars, {})

    @staticmethod
    def const(n_vars: int, value) -> "MultiPoly":
        return MultiPoly(n_vars, {(0,) * n_vars: FieldElement.of(value)})

    @staticmethod
    def variable(n_vars: int, i: int) -> "MultiPoly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n_vars:
            raise IndexError(f"variable index {i} out of range 1..{n_vars}")
        e = tuple(1 if k == i - 1 else 0 for k in range(n_vars))
        return MultiPoly(n_vars, {e: ONE})

    @staticmethod
    def monomial(n_vars: int, exponents: Iterable[int], coeff=1) -> "MultiPoly":
        return MultiPoly(n_vars, {tuple(exponents): FieldElement.of(coeff)})

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def sorted_terms(self) -> list:
        return [(e, self._terms[e]) for e in sorted(self._terms, key=_grlex, reverse=True)]

    def evaluate(self, point) -> FieldElement:
        values = [FieldElement.of(p) for p in point]
        if len(values) != self.n_vars:
            raise DimensionMismatchError("evaluation point has wrong length")
        total = ZERO
        for e, c in self._terms.items():
            term = c
            for val, exp in zip(values, e):
                term = term * val**exp
            total = total + term
        return total

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.n_vars != other.n_vars:
            raise DimensionMismatchError(
                f"mixing {self.n_vars}-variable and {other.n_vars}-variable polynomials"
            )

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(self.n_vars, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        self._check(other)
        return MultiPoly(self.n_vars, _add_terms(self._terms, other._terms, ONE))

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        self._check(other)
        return MultiPoly(self.n_vars, _add_terms(self._terms, other._terms, -ONE))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n_vars, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        self._check(other)
        return MultiPoly(self.n_vars, _mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = FieldElement.of(c)
        return MultiPoly(self.n_vars, {e: c * v for e, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, FieldElement)):
            other = MultiPoly.const(self.n_vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n_vars == other.n_vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n_vars, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return _fmt_terms(self._terms, [f"x{k+1}" for k in range(self.n_vars)])

    __repr__ = __str__


def swap_vars(f: MultiPoly, i: int) -> MultiPoly:
    """Exchange x_i and x_{i+1} in every term (1 <= i <= n_vars - 1)."""
    if not 1 <= i <= f.n_vars - 1:
        raise IndexError(f"transposition index {i} out of range 1..{f.n_vars - 1}")
    out = {}
    for e, c in f.terms.items():
        le = list(e)
        le[i - 1], le[i] = le[i], le[i - 1]
        out[tuple(le)] = c
    return MultiPoly(f.n_vars, out)


def exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """The quotient f/g when g divides f exactly in the polynomial ring."""
    if isinstance(g, MultiPoly):
        f._check(g)
    return MultiPoly(f.n_vars, _divide_terms(f.terms, g.terms))


class SlotPoly:
    """A bivariate polynomial template in abstract slots (u, v)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], FieldElement]):
        cleaned = {}
        for e, c in terms.items():
            if len(e) != 2:
                raise ValueError(f"slot exponent pair {e} must have length 2")
            c = FieldElement.of(c)
            if c:
                cleaned[tuple(e)] = c
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, *args):
        raise AttributeError("SlotPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "SlotPoly":
        return SlotPoly({})

    @staticmethod
    def const(value) -> "SlotPoly":
        return SlotPoly({(0, 0): FieldElement.of(value)})

    @staticmethod
    def u() -> "SlotPoly":
        return SlotPoly({(1, 0): ONE})

    @staticmethod
    def v() -> "SlotPoly":
        return SlotPoly({(0, 1): ONE})

    @staticmethod
    def monomial(r: int, s: int, coeff=1) -> "SlotPoly":
        return SlotPoly({(r, s): FieldElement.of(coeff)})

    @staticmethod
    def univariate(coeffs, slot: int = 0) -> "SlotPoly":
        """Build sum coeffs[k] * slot^k; slot 0 is u, slot 1 is v."""
        if slot not in (0, 1):
            raise ValueError("slot must be 0 (u) or 1 (v)")
        terms = {}
        for k, c in enumerate(coeffs):
            e = (k, 0) if slot == 0 else (0, k)
            terms[e] = FieldElement.of(c)
        return SlotPoly(terms)

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((r + s for r, s in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), ZERO)

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def is_dpositive(self) -> bool:
        return all(r > s for r, s in self._terms)

    def sorted_terms(self) -> list:
        return [(e, self._terms[e]) for e in sorted(self._terms, key=_grlex, reverse=True)]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "SlotPoly":
        if isinstance(other, SlotPoly):
            return other
        return SlotPoly.const(other)

    def __add__(self, other) -> "SlotPoly":
        return SlotPoly(_add_terms(self._terms, self._coerce(other)._terms, ONE))

    __radd__ = __add__

    def __sub__(self, other) -> "SlotPoly":
        return SlotPoly(_add_terms(self._terms, self._coerce(other)._terms, -ONE))

    def __rsub__(self, other) -> "SlotPoly":
        return self._coerce(other) - self

    def __neg__(self) -> "SlotPoly":
        return SlotPoly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other) -> "SlotPoly":
        return SlotPoly(_mul_terms(self._terms, self._coerce(other)._terms))

    __rmul__ = __mul__

    def scale(self, c) -> "SlotPoly":
        c = FieldElement.of(c)
        return SlotPoly({e: c * v for e, v in self._terms.items()})

    def swap(self) -> "SlotPoly":
        """Exchange the two slots."""
        return SlotPoly({(s, r): c for (r, s), c in self._terms.items()})

    def ddiff(self) -> "SlotPoly":
        """The divided difference (p - swap p)/(u - v), taken in the slots.

        Computed monomial-wise from the closed form
        d(u^r v^s) = sum_{l=s}^{r-1} u^l v^{r+s-1-l} for r > s.
        """
        out: dict = {}
        for (r, s), c in self._terms.items():
            if r == s:
                continue
            lo, hi, sign = (s, r, c) if r > s else (r, s, -c)
            for l in range(lo, hi):
                e = (l, lo + hi - 1 - l)
                val = out.get(e, ZERO) + sign
                if val:
                    out[e] = val
                else:
                    out.pop(e, None)
        return SlotPoly(out)

    def exact_div(self, g: "SlotPoly") -> "SlotPoly":
        return SlotPoly(_divide_terms(self._terms, g._terms))

    def evaluate(self, uval, vval) -> FieldElement:
        u = FieldElement.of(uval)
        v = FieldElement.of(vval)
        total = ZERO
        for (r, s), c in self._terms.items():
            total = total + c * u**r * v**s
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, FieldElement)):
            other = SlotPoly.const(other)
        if not isinstance(other, SlotPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return _fmt_terms(self._terms, ["u", "v"])

    __repr__ = __str__


def instantiate(p: SlotPoly, i: int, j: int, n: int) -> MultiPoly:
    """Substitute u -> x_i, v -> x_j; requires i != j, both in 1..n."""
    if i == j:
        raise ValueError("slot instantiation needs two distinct variables")
    for idx in (i, j):
        if not 1 <= idx <= n:
            raise IndexError(f"variable index {idx} out of range 1..{n}")
    out = {}
    for (r, s), c in p.terms.items():
        e = [0] * n
        e[i - 1] += r
        e[j - 1] += s
        out[tuple(e)] = out.get(tuple(e), ZERO) + c
    return MultiPoly(n, out)
