"""Brute-force toric oracle: fibers of t-monomials and generation by degree.

A set of binomials generates the toric ideal ``J`` in degree ``k`` exactly when
every degree-``k`` fiber (t-monomials with a common image) is connected by the
moves ``m * (lhs - rhs)``.  Nothing here is symbolic; every claim is checked
degree by degree up to a caller-supplied bound.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable

from .errors import BoundExceededError, FibroxError, PreconditionError
from .monomial import Monomial, MonomialIdeal
from .relations import TBinomial, TMonomial, image

FIBER_CAP = 2_000_000
MAX_GENERATORS = 24
MAX_DEGREE = 10


@dataclass(frozen=True)
class Fiber:
    image: Monomial
    members: tuple[TMonomial, ...]


@dataclass
class GenerationReport:
    max_degree: int
    new_generators: dict[int, int] = field(default_factory=dict)
    relations: dict[int, list[TBinomial]] = field(default_factory=dict)

    @property
    def quadratically_generated(self) -> bool:
        """No new generators needed above degree 2 (up to ``max_degree``)."""
        return all(c == 0 for k, c in self.new_generators.items() if k > 2)

    @property
    def generator_degrees(self) -> list[int]:
        return [k for k, c in sorted(self.new_generators.items()) if c]

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "counts": {str(k): c for k, c in sorted(self.new_generators.items())},
            "relations": {
                str(k): [r.to_json() for r in rs] for k, rs in sorted(self.relations.items())
            },
            "quadratically_generated_up_to_max_degree": self.quadratically_generated,
        }


class InvalidMoveError(FibroxError, ValueError):
    def __init__(self, move: TBinomial):
        super().__init__(f"move {move} is not in the kernel (images differ)")
        self.move = move


def _guard(I: MonomialIdeal, k: int, cap: int) -> None:
    size = comb(I.q + k - 1, k)
    if size > cap:
        raise BoundExceededError(
            f"{size} t-monomials of degree {k} on {I.q} symbols exceed the cap {cap}"
        )


def fibers(I: MonomialIdeal, k: int, cap: int = FIBER_CAP) -> list[Fiber]:
    """Partition of all degree-``k`` t-monomials by image, descending lex on image."""
    if k < 1:
        raise ValueError("fiber degree must be >= 1")
    _guard(I, k, cap)
    groups: dict[tuple[int, ...], list[TMonomial]] = defaultdict(list)
    gens = [g.exps for g in I.gens]
    n = I.n
    for t in combinations_with_replacement(range(1, I.q + 1), k):
        e = [0] * n
        for i in t:
            for v, x in enumerate(gens[i - 1]):
                e[v] += x
        groups[tuple(e)].append(t)
    return [Fiber(Monomial(key), tuple(groups[key])) for key in sorted(groups, reverse=True)]


def quadratic_kernel(I: MonomialIdeal) -> set[TBinomial]:
    """All binomials ``t_u t_v - t_u' t_v'`` with ``uv = u'v'``."""
    out = set()
    for f in fibers(I, 2):
        for a, b in combinations(f.members, 2):
            out.add(TBinomial(a, b))
    return out


class _DSU:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


class _MoveIndex:
    """Lookup from a move side to the sides it can be swapped with."""

    def __init__(self, moves: Iterable[TBinomial]):
        self.swaps: dict[TMonomial, list[TMonomial]] = defaultdict(list)
        self.sizes: set[int] = set()
        for m in moves:
            self.swaps[m.lhs].append(m.rhs)
            self.swaps[m.rhs].append(m.lhs)
            self.sizes.add(m.degree)

    def neighbours(self, t: TMonomial):
        for s in self.sizes:
            if s > len(t):
                continue
            for side in set(combinations(t, s)):
                others = self.swaps.get(side)
                if not others:
                    continue
                rest = list(t)
                for x in side:
                    rest.remove(x)
                for other in others:
                    yield tuple(sorted(rest + list(other)))


def _components(members: tuple[TMonomial, ...], index: _MoveIndex) -> _DSU:
    pos = {t: p for p, t in enumerate(members)}
    dsu = _DSU(len(members))
    for p, t in enumerate(members):
        for nb in index.neighbours(t):
            dsu.union(p, pos[nb])
    return dsu


def _validate(I: MonomialIdeal, moves: Iterable[TBinomial]) -> list[TBinomial]:
    moves = list(moves)
    for m in moves:
        if max(m.lhs + m.rhs) > I.q or min(m.lhs + m.rhs) < 1:
            raise InvalidMoveError(m)
        if not m.is_balanced(I):
            raise InvalidMoveError(m)
    return moves


def first_failing_degree(
    I: MonomialIdeal, moves: Iterable[TBinomial], max_degree: int, cap: int = FIBER_CAP
) -> int | None:
    """Smallest ``k <= max_degree`` with a disconnected fiber, or ``None``."""
    if max_degree < 2:
        raise PreconditionError("degree bound must be at least 2")
    index = _MoveIndex(_validate(I, moves))
    for k in range(2, max_degree + 1):
        for f in fibers(I, k, cap):
            if len(f.members) < 2:
                continue
            dsu = _components(f.members, index)
            if any(dsu.find(p) != 0 for p in range(len(f.members))):
                return k
    return None


def generated_up_to(
    I: MonomialIdeal, moves: Iterable[TBinomial], max_degree: int, cap: int = FIBER_CAP
) -> bool:
    """Do ``moves`` generate the toric ideal of ``I`` in all degrees ``<= max_degree``?"""
    return first_failing_degree(I, moves, max_degree, cap) is None


def generation_degrees(I: MonomialIdeal, max_degree: int, cap: int = FIBER_CAP) -> GenerationReport:
    """Count the minimal generators of ``J`` needed in each degree up to ``max_degree``.

    At degree ``k`` the fibers are split into components under every relation
    found so far; each extra component costs one new generator, chosen as the
    binomial between the fiber's first member and the first member of that
    component (members are listed in t-lex descending order).
    """
    if max_degree < 2:
        raise PreconditionError("degree bound must be at least 2")
    if max_degree > MAX_DEGREE:
        raise BoundExceededError(f"degree bound {max_degree} exceeds {MAX_DEGREE}")
    report = GenerationReport(max_degree)
    found: list[TBinomial] = []
    for k in range(2, max_degree + 1):
        index = _MoveIndex(found)
        new = []
        for f in fibers(I, k, cap):
            if len(f.members) < 2:
                continue
            dsu = _components(f.members, index)
            roots = sorted({dsu.find(p) for p in range(len(f.members))})
            # DSU roots are the minimal member position of each component
            for r in roots[1:]:
                new.append(TBinomial(f.members[roots[0]], f.members[r]))
        report.new_generators[k] = len(new)
        report.relations[k] = sorted(new)
        found.extend(new)
    return report


def kernel_relations_balanced(I: MonomialIdeal, relations: Iterable[TBinomial]) -> bool:
    return all(r.is_balanced(I) for r in relations)

