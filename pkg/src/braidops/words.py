"""Permutations, reduced words, and polynomial tables built by iterated
operator application along reduced words."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Sequence

from .braid import family_braid_check
from .families import OperatorFamily
from .multipoly import MultiPoly

__all__ = [
    "Permutation",
    "SizeLimitError",
    "BraidCheckError",
    "TableEntry",
    "reduced_words",
    "apply_word",
    "staircase",
    "polynomial_table",
]

MAX_TABLE_N = 6


class SizeLimitError(ValueError):
    """Enumeration request beyond the supported symmetric-group size."""


class BraidCheckError(RuntimeError):
    """A table was requested for a family that fails the braid relations."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        n = len(self.one_line)
        if sorted(self.one_line) != list(range(1, n + 1)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..{n}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def longest(n: int) -> "Permutation":
        return Permutation(tuple(range(n, 0, -1)))

    @staticmethod
    def all(n: int) -> list["Permutation"]:
        return [Permutation(p) for p in _permutations(range(1, n + 1))]

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(self * other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    def length(self) -> int:
        """Number of inversions; equals the length of any reduced word."""
        w = self.one_line
        return sum(
            1
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )

    def descents(self) -> list[int]:
        """Indices i with w(i) > w(i+1)."""
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def apply_transposition(self, i: int) -> "Permutation":
        """Right multiplication by s_i (swaps positions i, i+1)."""
        w = list(self.one_line)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, self.n + 1))


def reduced_words(w: Permutation) -> list[list[int]]:
    """All reduced words of w, by recursive descent on descents."""
    if w.n > MAX_TABLE_N:
        raise SizeLimitError(f"reduced word enumeration capped at n = {MAX_TABLE_N}")
    if w.is_identity():
        return [[]]
    words = []
    for i in w.descents():
        for prefix in reduced_words(w.apply_transposition(i)):
            words.append(prefix + [i])
    return words


def apply_word(fam: OperatorFamily, word: Sequence[int], f: MultiPoly) -> MultiPoly:
    """Right-to-left application pi_{w1}(pi_{w2}(...f))."""
    for i in reversed(list(word)):
        f = fam[i].apply(i, f)
    return f


def staircase(n: int) -> MultiPoly:
    """The monomial x1^{n-1} x2^{n-2} ... x_{n-1}."""
    return MultiPoly.monomial(n, tuple(n - k for k in range(1, n + 1)))


@dataclass(frozen=True)
class TableEntry:
    perm: Permutation
    word: tuple[int, ...]
    poly: MultiPoly


def polynomial_table(
    fam: OperatorFamily,
    seed: MultiPoly | None = None,
    mode: str = "top_down",
) -> list[TableEntry]:
    """One polynomial per permutation of S_n, from the seed downward.

    Convention: the entry for w applies the operators along a reduced word
    of w^{-1} w0 to the seed (default: the staircase monomial), the standard
    top-down recursion from the longest element.  Equality across all
    reduced words of each w^{-1} w0 is asserted during generation.
    """
    if mode != "top_down":
        raise ValueError(f"unknown table mode {mode!r}")
    n = fam.n
    if n > MAX_TABLE_N:
        raise SizeLimitError(f"tables capped at n = {MAX_TABLE_N}")
    report = family_braid_check(fam)
    if not report.passed:
        raise BraidCheckError(
            "family fails the braid relations; table entries would depend "
            f"on the chosen reduced words (failing: {_failing(report)})"
        )
    if seed is None:
        seed = staircase(n)
    w0 = Permutation.longest(n)
    entries = []
    for w in sorted(Permutation.all(n), key=lambda p: p.one_line):
        v = w.inverse() * w0
        words = reduced_words(v)
        polys = [apply_word(fam, word, seed) for word in words]
        first = polys[0]
        if any(p != first for p in polys[1:]):
            raise AssertionError(
                f"reduced-word dependence at {w.one_line} despite braid check"
            )
        entries.append(TableEntry(perm=w, word=tuple(words[0]), poly=first))
    return entries


def _failing(report) -> str:
    bad = [f"cubic{pair}" for pair, rep in report.cubic.items() if not rep.passed]
    bad += [f"quad{pair}" for pair, ok in report.quad.items() if not ok]
    return ", ".join(bad)
