"""Exact monomial arithmetic and equigenerated monomial ideals.

A monomial in ``x_1, ..., x_n`` is stored as its exponent vector.  Lex order
uses ``x_1 > x_2 > ... > x_n``, which coincides with plain tuple comparison of
the exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .errors import DimensionError, UnsupportedInputError


@dataclass(frozen=True, slots=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int) -> Monomial:
        """The variable ``x_i`` (1-based) in ``n`` variables."""
        if not 1 <= i <= n:
            raise DimensionError(f"x{i} does not exist in {n} variables")
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def max_index(self) -> int:
        """Largest 1-based index of a variable dividing the monomial (0 for 1)."""
        for i in range(self.n, 0, -1):
            if self.exps[i - 1]:
                return i
        return 0

    def indices(self) -> list[int]:
        """The weakly increasing 1-based index word ``i_1 <= ... <= i_d``."""
        return [i + 1 for i, e in enumerate(self.exps) for _ in range(e)]

    def _check(self, other: Monomial) -> None:
        if not isinstance(other, Monomial):
            raise TypeError(f"expected Monomial, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionError(f"monomials in {self.n} and {other.n} variables")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: Monomial) -> Monomial:
        self._check(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple(k * a for a in self.exps))

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(map(min, self.exps, other.exps)))

    # lex order, x_1 > ... > x_n
    def __lt__(self, other: Monomial) -> bool:
        self._check(other)
        return self.exps < other.exps

    def __le__(self, other: Monomial) -> bool:
        self._check(other)
        return self.exps <= other.exps

    def __gt__(self, other: Monomial) -> bool:
        self._check(other)
        return self.exps > other.exps

    def __ge__(self, other: Monomial) -> bool:
        self._check(other)
        return self.exps >= other.exps

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self.exps})"


def mono(*exps: int) -> Monomial:
    """Shorthand constructor: ``mono(2, 1, 0)`` is ``x1^2*x2``."""
    return Monomial(tuple(exps))


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Return 1, 0 or -1 as ``u`` is lex-greater, equal or smaller than ``v``."""
    u._check(v)
    return (u.exps > v.exps) - (u.exps < v.exps)


def power_basis(n: int, d: int) -> list[Monomial]:
    """All monomials of degree ``d`` in ``n`` variables, descending lex."""
    if n < 1 or d < 0:
        raise ValueError(f"power_basis needs n >= 1 and d >= 0, got n={n}, d={d}")
    out = []
    for idx in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in idx:
            e[i] += 1
        out.append(Monomial(tuple(e)))
    # combinations_with_replacement already yields descending lex
    return out


def num_monomials(n: int, d: int) -> int:
    return comb(n + d - 1, d)


@dataclass(frozen=True)
class MonomialIdeal:
    """An equigenerated monomial ideal given by its minimal generators.

    Generators are kept in strictly descending lex order, so generator ``i``
    (1-based) is ``u_i`` with ``u_1 > u_2 > ... > u_q``.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        if not gens:
            raise UnsupportedInputError("an ideal needs at least one generator")
        for g in gens:
            if g.n != self.n:
                raise DimensionError(f"generator {g} is not in {self.n} variables")
        if len({g.degree for g in gens}) != 1:
            raise UnsupportedInputError("generators are not all of one degree")
        if any(a <= b for a, b in zip(gens, gens[1:])):
            raise ValueError("generators must be distinct and in descending lex order")
        object.__setattr__(self, "gens", gens)

    @property
    def d(self) -> int:
        return self.gens[0].degree

    @property
    def q(self) -> int:
        return len(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return u in self._index

    @cached_property
    def _index(self) -> dict[Monomial, int]:
        return {g: i for i, g in enumerate(self.gens, start=1)}

    def index(self, u: Monomial) -> int:
        """1-based generator index of ``u``; ``KeyError`` if not a generator."""
        return self._index[u]

    def gen(self, i: int) -> Monomial:
        return self.gens[i - 1]

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.gens)) + ")"


def minimalize(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal spanned by ``monomials``.

    Drops duplicates and anything strictly divisible by another element.  Raises
    :class:`UnsupportedInputError` if the survivors are not equigenerated.
    """
    ms = sorted(set(monomials), reverse=True)
    if not ms:
        raise UnsupportedInputError("no monomials given")
    if n is None:
        n = ms[0].n
    for m in ms:
        if m.n != n:
            raise DimensionError(f"{m} is not in {n} variables")
    # a divisor has degree <= the multiple, so scan by increasing degree
    survivors: list[Monomial] = []
    for m in sorted(ms, key=lambda m: m.degree):
        if not any(s.divides(m) for s in survivors):
            survivors.append(m)
    if len({s.degree for s in survivors}) != 1:
        raise UnsupportedInputError(
            "minimal generators have degrees "
            + ", ".join(str(k) for k in sorted({s.degree for s in survivors}))
            + "; only equigenerated ideals are supported"
        )
    return MonomialIdeal(n, tuple(sorted(survivors, reverse=True)))


def ideal(*gens: Sequence[int]) -> MonomialIdeal:
    """Build a minimalized ideal from exponent tuples."""
    return minimalize([Monomial(tuple(g)) for g in gens])
