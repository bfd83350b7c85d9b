"""Seeded random ideals for property suites and experiments."""

from __future__ import annotations

import random

from .monomial import MonomialIdeal, power_basis
from .stable import BoundVector, borel_closure


def random_borel_ideal(
    rng: random.Random,
    ns=(2, 3, 4),
    degrees=range(2, 6),
    max_seeds: int = 3,
    max_q: int = 12,
) -> tuple[MonomialIdeal, BoundVector]:
    """Bounded Borel closure of 1..max_seeds random seeds under random bounds.

    Bounds are drawn at or above the seeds' exponents so every seed is
    admissible.  Resamples until the closure has at most ``max_q`` generators.
    """
    while True:
        n = rng.choice(tuple(ns))
        d = rng.choice(tuple(degrees))
        seeds = rng.sample(power_basis(n, d), rng.randint(1, max_seeds))
        c = BoundVector(tuple(max(s.exps[i] for s in seeds) + rng.randint(0, d) for i in range(n)))
        I = borel_closure(seeds, c)
        if I.q <= max_q:
            return I, c


def random_equigenerated_ideal(
    rng: random.Random,
    ns=(2, 3, 4),
    degrees=range(2, 6),
    max_q: int = 12,
) -> MonomialIdeal:
    """Uniformly chosen subset of the degree-``d`` monomials."""
    n = rng.choice(tuple(ns))
    d = rng.choice(tuple(degrees))
    basis = power_basis(n, d)
    q = rng.randint(1, min(max_q, len(basis)))
    return MonomialIdeal(n, tuple(sorted(rng.sample(basis, q), reverse=True)))
