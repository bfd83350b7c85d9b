"""Bounded (strongly) stable ideals, Borel closures and Veronese type ideals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, PreconditionError, UnsupportedInputError
from .monomial import Monomial, MonomialIdeal, minimalize, power_basis


@dataclass(frozen=True)
class BoundVector:
    """Per-variable exponent bounds; ``None`` means unbounded."""

    bounds: tuple[int | None, ...]

    def __post_init__(self):
        b = tuple(None if x is None else int(x) for x in self.bounds)
        if any(x is not None and x < 0 for x in b):
            raise ValueError(f"negative bound in {b}")
        object.__setattr__(self, "bounds", b)

    @classmethod
    def unbounded(cls, n: int) -> BoundVector:
        return cls((None,) * n)

    @classmethod
    def of(cls, *bounds: int | None) -> BoundVector:
        return cls(tuple(bounds))

    @property
    def n(self) -> int:
        return len(self.bounds)

    def __str__(self) -> str:
        return ",".join("inf" if b is None else str(b) for b in self.bounds)


def _as_bounds(c: BoundVector | Sequence[int | None] | None, n: int) -> BoundVector:
    if c is None:
        return BoundVector.unbounded(n)
    if not isinstance(c, BoundVector):
        c = BoundVector(tuple(c))
    if c.n != n:
        raise DimensionError(f"bound vector has length {c.n}, expected {n}")
    return c


def is_c_bounded(u: Monomial, c: BoundVector | Sequence[int | None]) -> bool:
    c = _as_bounds(c, u.n)
    return all(b is None or a <= b for a, b in zip(u.exps, c.bounds))


def _require_bounded(gens: Iterable[Monomial], c: BoundVector) -> None:
    for g in gens:
        if not is_c_bounded(g, c):
            raise PreconditionError(f"{g} is not bounded by ({c})", g)


def _exchange(u: Monomial, i: int, j: int) -> Monomial:
    """``x_i * u / x_j`` (1-based indices); caller ensures ``x_j | u``."""
    e = list(u.exps)
    e[i - 1] += 1
    e[j - 1] -= 1
    return Monomial(tuple(e))


def strong_stability_witness(I: MonomialIdeal, c=None) -> tuple[Monomial, int, int] | None:
    """First ``(u, i, j)`` with ``x_i u / x_j`` bounded but not in ``I``."""
    c = _as_bounds(c, I.n)
    _require_bounded(I.gens, c)
    for u in I.gens:
        for j in range(2, I.n + 1):
            if not u.exps[j - 1]:
                continue
            for i in range(1, j):
                w = _exchange(u, i, j)
                if is_c_bounded(w, c) and w not in I:
                    return u, i, j
    return None


def is_strongly_stable(I: MonomialIdeal, c=None) -> bool:
    return strong_stability_witness(I, c) is None


def stability_witness(I: MonomialIdeal, c=None) -> tuple[Monomial, int] | None:
    """First ``(u, i)`` with ``x_i u / x_m(u)`` bounded but not in ``I``."""
    c = _as_bounds(c, I.n)
    _require_bounded(I.gens, c)
    for u in I.gens:
        m = u.max_index
        for i in range(1, m):
            w = _exchange(u, i, m)
            if is_c_bounded(w, c) and w not in I:
                return u, i
    return None


def is_stable(I: MonomialIdeal, c=None) -> bool:
    return stability_witness(I, c) is None


def borel_closure(seeds: Iterable[Monomial], c=None) -> MonomialIdeal:
    """Smallest bounded strongly stable ideal containing the seeds.

    Breadth-first closure under the bounded exchanges ``x_i u / x_j``, ``i < j``.
    """
    seeds = list(seeds)
    if not seeds:
        raise UnsupportedInputError("borel_closure needs at least one seed")
    n = seeds[0].n
    c = _as_bounds(c, n)
    _require_bounded(seeds, c)
    if len({s.degree for s in seeds}) != 1:
        raise UnsupportedInputError("Borel seeds must share one degree")
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for j in range(2, n + 1):
            if not u.exps[j - 1]:
                continue
            for i in range(1, j):
                w = _exchange(u, i, j)
                if w not in seen and is_c_bounded(w, c):
                    seen.add(w)
                    queue.append(w)
    return minimalize(seen, n)


def veronese_type(a: Sequence[int], n: int, d: int) -> MonomialIdeal:
    """All degree-``d`` monomials in ``n`` variables with exponents bounded by ``a``."""
    a = tuple(int(x) for x in a)
    if len(a) != n:
        raise DimensionError(f"bound vector has length {len(a)}, expected {n}")
    if any(x < 0 for x in a) or any(x < y for x, y in zip(a, a[1:])):
        raise ValueError(f"bounds must be nonnegative and weakly decreasing, got {a}")
    if sum(a) < d:
        raise UnsupportedInputError(f"no monomial of degree {d} fits under bounds {a}")
    gens = [u for u in power_basis(n, d) if all(e <= b for e, b in zip(u.exps, a))]
    return MonomialIdeal(n, tuple(gens))
