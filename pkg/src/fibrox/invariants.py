"""Generator counts, analytic spread and the Freiman test."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .monomial import MonomialIdeal


@dataclass(frozen=True)
class InvariantReport:
    mu: int
    mu_square: int
    spread: int

    @property
    def freiman_rhs(self) -> int:
        return self.spread * self.mu - comb(self.spread, 2)

    @property
    def freiman(self) -> bool:
        return self.mu_square == self.freiman_rhs

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "mu_square": self.mu_square,
            "spread": self.spread,
            "freiman_rhs": self.freiman_rhs,
            "freiman": self.freiman,
        }


def mu_square(I: MonomialIdeal) -> int:
    """Minimal number of generators of ``I^2``.

    All products share degree ``2d``, so minimal generators are just the
    distinct products.
    """
    gens = I.gens
    return len({(gens[i] * gens[j]) for i in range(len(gens)) for j in range(i, len(gens))})


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            for c in range(col, ncols):
                # exact by Sylvester's identity
                m[r][c] = (p * m[r][c] - f * m[rank][c]) // prev
        prev = p
        rank += 1
    return rank


def analytic_spread(I: MonomialIdeal) -> int:
    """Krull dimension of the fiber cone: rank of the exponent matrix of ``G(I)``."""
    return integer_rank([g.exps for g in I.gens])


def invariant_report(I: MonomialIdeal) -> InvariantReport:
    return InvariantReport(mu=I.q, mu_square=mu_square(I), spread=analytic_spread(I))


def is_freiman(I: MonomialIdeal) -> InvariantReport:
    """Full invariant report; ``.freiman`` carries the verdict."""
    return invariant_report(I)
