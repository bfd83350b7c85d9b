"""Exhaustive search for small ideals on which a theorem check fails.

    python scripts/counterexample_search.py --n 2 --degree 4 --max-q 5
    python scripts/counterexample_search.py --n 3 --degree 4 --max-q 4 --check more
    python scripts/counterexample_search.py --n 3 --degree 4 --check borel

``tor``/``more``: quadratically generated (up to ``--max-degree``) but the
bivariate/associate minors do not generate.  ``borel``: Borel closure of
a pair of seeds that is not sortable.  Hits are printed in the ideal file
format, smallest ``q`` first.
"""

import argparse
from itertools import combinations

from fibrox import (
    MonomialIdeal,
    binomial_two_minors,
    borel_closure,
    build_matrix,
    format_ideal,
    generated_up_to,
    generation_degrees,
    is_sortable,
    power_basis,
)


def minors_fail(I: MonomialIdeal, D: int) -> bool:
    if I.q < 2 or not generation_degrees(I, D).quadratically_generated:
        return False
    kind = "bivariate" if I.n == 2 else "associate"
    return not generated_up_to(I, binomial_two_minors(build_matrix(I, kind)), D)


def search_minors(n: int, d: int, max_q: int, D: int, limit: int):
    basis = power_basis(n, d)
    hits = 0
    for q in range(2, max_q + 1):
        for gens in combinations(basis, q):
            I = MonomialIdeal(n, gens)
            if minors_fail(I, D):
                yield I
                hits += 1
                if hits >= limit:
                    return


def search_borel(n: int, d: int, limit: int):
    hits = 0
    for a, b in combinations(power_basis(n, d), 2):
        I = borel_closure([a, b])
        if not is_sortable(I):
            yield I
            hits += 1
            if hits >= limit:
                return


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--max-q", type=int, default=4)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--limit", type=int, default=3)
    p.add_argument("--check", choices=["tor", "more", "borel"], default=None)
    args = p.parse_args()
    check = args.check or ("tor" if args.n == 2 else "more")
    if check == "borel":
        hits = search_borel(args.n, args.degree, args.limit)
    else:
        hits = search_minors(args.n, args.degree, args.max_q, args.max_degree, args.limit)
    found = False
    for I in hits:
        found = True
        print(format_ideal(I, symbolic=True, comment=f"{check} check fails"))
    if not found:
        print("no counterexample in range")


if __name__ == "__main__":
    main()
