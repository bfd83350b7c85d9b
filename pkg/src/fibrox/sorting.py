"""The sorting operator on pairs of equal-degree monomials and sortable sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DegreeMismatchError, DivergenceError, PreconditionError
from .monomial import Monomial, MonomialIdeal
from .relations import TBinomial


@dataclass(frozen=True)
class SortOutcome:
    first: Monomial
    second: Monomial

    def __iter__(self):
        yield self.first
        yield self.second


def _check_pair(u: Monomial, v: Monomial) -> None:
    u._check(v)
    if u.degree != v.degree:
        raise DegreeMismatchError(f"{u} has degree {u.degree}, {v} has degree {v.degree}")


def sort_pair(u: Monomial, v: Monomial) -> SortOutcome:
    """Sorting of ``(u, v)``.

    Writing ``uv = x_{i_1} ... x_{i_2d}`` with weakly increasing indices, the
    first output collects the odd positions and the second the even ones.
    Works on the merged exponent vector: a run of ``c`` copies of ``x_i``
    starting at an odd position gives ``ceil(c/2)`` to the first output.
    """
    _check_pair(u, v)
    first, second = [], []
    odd_start = True
    for a, b in zip(u.exps, v.exps):
        c = a + b
        hi, lo = (c + 1) // 2, c // 2
        if odd_start:
            first.append(hi)
            second.append(lo)
        else:
            first.append(lo)
            second.append(hi)
        if c % 2:
            odd_start = not odd_start
    return SortOutcome(Monomial(tuple(first)), Monomial(tuple(second)))


def is_sorted_pair(u: Monomial, v: Monomial) -> bool:
    """Check the interleaving chain ``i_1 <= j_1 <= i_2 <= ... <= i_d <= j_d``."""
    _check_pair(u, v)
    chain = [x for pair in zip(u.indices(), v.indices()) for x in pair]
    return all(a <= b for a, b in zip(chain, chain[1:]))


def sortability_witness(gens: Iterable[Monomial]) -> tuple[Monomial, Monomial] | None:
    """First pair ``(u, v)`` whose sorting leaves the set, or ``None``."""
    gens = list(gens)
    members = set(gens)
    for i, u in enumerate(gens):
        for v in gens[i + 1:]:
            a, b = sort_pair(u, v)
            if a not in members or b not in members:
                return u, v
    return None


def is_sortable(I: MonomialIdeal | Iterable[Monomial]) -> bool:
    return sortability_witness(I) is None


def unsorted_pair_relations(I: MonomialIdeal) -> set[TBinomial]:
    """``t_u t_v - t_u' t_v'`` for every unsorted pair, ``(u', v') = sort(u, v)``.

    Raises :class:`PreconditionError` (carrying the witness pair) if ``I`` is
    not sortable.
    """
    witness = sortability_witness(I.gens)
    if witness is not None:
        u, v = witness
        raise PreconditionError(f"ideal is not sortable: sort({u}, {v}) leaves G(I)", witness)
    out = set()
    q = I.q
    for i in range(1, q + 1):
        for j in range(i + 1, q + 1):
            u, v = I.gen(i), I.gen(j)
            if is_sorted_pair(u, v):
                continue
            a, b = sort_pair(u, v)
            lhs, rhs = (i, j), tuple(sorted((I.index(a), I.index(b))))
            if lhs != rhs:
                out.add(TBinomial(lhs, rhs))
    return out


def _unsorted_positions(factors: Sequence[Monomial]) -> list[tuple[int, int]]:
    # factors arrive in descending lex order: (factors[i], factors[j]) is the orientation to test
    return [
        (i, j)
        for i in range(len(factors))
        for j in range(i + 1, len(factors))
        if not is_sorted_pair(factors[i], factors[j])
    ]


def sorting_normal_form(
    factors: Iterable[Monomial],
    choose: Callable[[list[tuple[int, int]]], tuple[int, int]] | None = None,
) -> tuple[Monomial, ...]:
    """Rewrite unsorted pairs by their sorting until every pair is sorted.

    ``choose`` picks which unsorted position pair to rewrite next (default:
    the first).  The result is returned in descending lex order.
    """
    state = sorted(factors, reverse=True)
    if not state:
        return ()
    k, d = len(state), state[0].degree
    for f in state:
        _check_pair(state[0], f)
    cap = 10 * k * k * max(d, 1)
    for _ in range(cap + 1):
        todo = _unsorted_positions(state)
        if not todo:
            return tuple(state)
        i, j = (choose or (lambda ps: ps[0]))(todo)
        a, b = sort_pair(state[i], state[j])
        state[i], state[j] = a, b
        state.sort(reverse=True)
    raise DivergenceError(f"sorting did not terminate within {cap} rewrites")


def all_normal_forms(factors: Iterable[Monomial]) -> set[tuple[Monomial, ...]]:
    """Every terminal state reachable by some rewriting strategy.

    Exhaustive search over multisets; intended for small inputs only.
    """
    start = tuple(sorted(factors, reverse=True))
    seen = {start}
    stack = [start]
    terminal = set()
    while stack:
        state = stack.pop()
        todo = _unsorted_positions(state)
        if not todo:
            terminal.add(state)
            continue
        for i, j in todo:
            nxt = list(state)
            nxt[i], nxt[j] = sort_pair(state[i], state[j])
            nxt = tuple(sorted(nxt, reverse=True))
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return terminal


def k_sorting(factors: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Distribute the index word of the product round-robin over ``k`` factors.

    This is the unique fully sorted tuple with the given product.
    """
    factors = list(factors)
    k = len(factors)
    n = factors[0].n
    word = []
    for f in factors:
        word.extend(f.indices())
    word.sort()
    out = []
    for r in range(k):
        c = Counter(word[r::k])
        out.append(Monomial(tuple(c.get(i, 0) for i in range(1, n + 1))))
    return tuple(sorted(out, reverse=True))
