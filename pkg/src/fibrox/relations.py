"""Pure-difference relations between products of generator symbols.

A product ``t_{i_1} ... t_{i_k}`` of generator symbols is stored as the
ascending tuple ``(i_1, ..., i_k)`` of 1-based generator indices.  With the
symbol order ``t_1 > t_2 > ... > t_q``, a smaller tuple is the lex-larger
t-monomial, so ``min`` picks the leading side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .monomial import Monomial, MonomialIdeal

TMonomial = tuple[int, ...]


def tmono(*indices: int) -> TMonomial:
    return tuple(sorted(indices))


def image(ideal: MonomialIdeal, t: Iterable[int]) -> Monomial:
    """Image of a t-monomial under ``t_i -> u_i``."""
    exps = [0] * ideal.n
    for i in t:
        for v, e in enumerate(ideal.gens[i - 1].exps):
            exps[v] += e
    return Monomial(tuple(exps))


def format_tmono(t: TMonomial) -> str:
    parts = []
    for i in sorted(set(t)):
        c = t.count(i)
        parts.append(f"t{i}" if c == 1 else f"t{i}^{c}")
    return "*".join(parts)


@dataclass(frozen=True, order=True)
class TBinomial:
    """``t^lhs - t^rhs`` with ``lhs`` the t-lex-larger side."""

    lhs: TMonomial
    rhs: TMonomial

    def __post_init__(self):
        lhs, rhs = tuple(sorted(self.lhs)), tuple(sorted(self.rhs))
        if len(lhs) != len(rhs):
            raise ValueError("relation sides must have equal degree")
        if lhs == rhs:
            raise ValueError("zero binomial")
        if rhs < lhs:
            lhs, rhs = rhs, lhs
        object.__setattr__(self, "lhs", lhs)
        object.__setattr__(self, "rhs", rhs)

    @property
    def degree(self) -> int:
        return len(self.lhs)

    def is_balanced(self, ideal: MonomialIdeal) -> bool:
        return image(ideal, self.lhs) == image(ideal, self.rhs)

    def to_json(self) -> dict:
        return {"lhs": list(self.lhs), "rhs": list(self.rhs)}

    @classmethod
    def from_json(cls, obj: dict) -> TBinomial:
        return cls(tuple(obj["lhs"]), tuple(obj["rhs"]))

    def __str__(self) -> str:
        return f"{format_tmono(self.lhs)} - {format_tmono(self.rhs)}"


def binomial(lhs: Iterable[int], rhs: Iterable[int]) -> TBinomial:
    return TBinomial(tuple(lhs), tuple(rhs))


def parse_binomial(text: str) -> TBinomial:
    """Parse ``"t1*t4 - t2^2"`` style relations (used mostly by tests)."""
    left, right = text.split("-")
    return TBinomial(_parse_t(left), _parse_t(right))


def _parse_t(text: str) -> TMonomial:
    out: list[int] = []
    for factor in text.strip().split("*"):
        factor = factor.strip()
        base, _, power = factor.partition("^")
        out.extend([int(base.lstrip("t"))] * (int(power) if power else 1))
    return tuple(sorted(out))
