"""The two labeled matrices attached to an equigenerated ideal and their 2-minors.

``associate``: row ``i`` lists ``x_i * w`` for ``w`` running over the degree
``d-1`` monomials in descending lex order; cells that are not generators become
structural zeros and all-zero columns are dropped.

``bivariate`` (two variables only): after stripping the common power of ``x_2``,
cell ``(i, j)`` (0-based) holds ``x_1^(D-i-j) x_2^(i+j)`` on an
``(a+1) x (b+1)`` grid, where ``u_2 = x_1^(D-a) x_2^a`` and
``u_q = x_1^(D-a-b) x_2^(a+b)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .errors import UnsupportedInputError
from .monomial import Monomial, MonomialIdeal, power_basis
from .relations import TBinomial

Kind = Literal["associate", "bivariate"]


@dataclass(frozen=True)
class Cell:
    lattice: Monomial
    label: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.label is None


@dataclass(frozen=True)
class LabeledMatrix:
    kind: Kind
    cells: tuple[tuple[Cell, ...], ...]
    # bivariate layout parameters; zero for the associate kind
    d_prime: int = 0
    a: int = 0
    b: int = 0
    columns: tuple[Monomial, ...] = field(default=(), compare=False)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.cells), (len(self.cells[0]) if self.cells else 0)

    def label(self, i: int, j: int) -> int | None:
        return self.cells[i][j].label

    def labels(self) -> list[list[int | None]]:
        return [[c.label for c in row] for row in self.cells]

    def render(self) -> str:
        """Aligned text grid with ``t<i>`` for generator cells and ``0`` otherwise."""
        text = [["0" if c.label is None else f"t{c.label}" for c in row] for row in self.cells]
        if not text:
            return ""
        width = max(len(s) for row in text for s in row)
        return "\n".join(" ".join(s.rjust(width) for s in row) for row in text)

    def to_json(self) -> dict:
        rows, cols = self.shape
        out = {
            "kind": self.kind,
            "rows": rows,
            "cols": cols,
            "labels": [[0 if x is None else x for x in row] for row in self.labels()],
            "lattice": [[list(c.lattice.exps) for c in row] for row in self.cells],
        }
        if self.kind == "bivariate":
            out.update({"d_prime": self.d_prime, "a": self.a, "b": self.b})
        return out


def build_associate_matrix(I: MonomialIdeal, prune: bool = True) -> LabeledMatrix:
    """Matrix associated to ``I``; ``prune=False`` keeps the all-zero columns."""
    if I.d < 1:
        raise UnsupportedInputError("the associated matrix needs degree >= 1")
    n = I.n
    ws = power_basis(n, I.d - 1)
    grid = []
    for i in range(1, n + 1):
        xi = Monomial.var(i, n)
        row = []
        for w in ws:
            u = xi * w
            row.append(Cell(u, I.index(u) if u in I else None))
        grid.append(row)
    keep = [j for j in range(len(ws)) if not prune or any(grid[i][j].label for i in range(n))]
    cells = tuple(tuple(row[j] for j in keep) for row in grid)
    return LabeledMatrix("associate", cells, columns=tuple(ws[j] for j in keep))


def build_bivariate_matrix(I: MonomialIdeal) -> LabeledMatrix:
    """Hankel-style matrix for an ideal in two variables.

    Lattice monomials are reported in the original degree (the stripped
    ``x_2^d'`` is multiplied back), so a labeled cell equals its generator.
    """
    if I.n != 2:
        raise UnsupportedInputError(f"bivariate matrix needs n = 2, got n = {I.n}")
    d_prime = min(g.exps[1] for g in I.gens)
    top = I.d - d_prime
    # x_2-exponents after stripping; u_1 = x_1^top
    e = [g.exps[1] - d_prime for g in I.gens]
    a = e[1] if I.q > 1 else 0
    b = e[-1] - a
    by_exp = {x: i for i, x in enumerate(e, start=1)}
    cells = []
    for i in range(a + 1):
        row = []
        for j in range(b + 1):
            s = i + j
            lattice = Monomial((top - s, s + d_prime))
            row.append(Cell(lattice, by_exp.get(s)))
        cells.append(tuple(row))
    return LabeledMatrix("bivariate", tuple(cells), d_prime=d_prime, a=a, b=b)


def binomial_two_minors(T: LabeledMatrix) -> set[TBinomial]:
    """Binomials ``t_diag - t_anti`` of fully labeled 2x2 submatrices.

    Minors whose diagonal and antidiagonal agree as multisets are zero and
    are skipped.
    """
    out = set()
    rows, cols = T.shape
    labels = T.labels()
    for i, k in combinations(range(rows), 2):
        ri, rk = labels[i], labels[k]
        shared = [j for j in range(cols) if ri[j] is not None and rk[j] is not None]
        for j, l in combinations(shared, 2):
            diag = tuple(sorted((ri[j], rk[l])))
            anti = tuple(sorted((ri[l], rk[j])))
            if diag != anti:
                out.add(TBinomial(diag, anti))
    return out


def build_matrix(I: MonomialIdeal, kind: Kind | None = None) -> LabeledMatrix:
    """Matrix of the requested kind; defaults to bivariate for n = 2."""
    if kind is None:
        kind = "bivariate" if I.n == 2 else "associate"
    if kind == "bivariate":
        return build_bivariate_matrix(I)
    return build_associate_matrix(I)
