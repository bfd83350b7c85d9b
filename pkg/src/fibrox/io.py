"""Reading and writing the plain-text ideal format.

::

    # comment
    n 3
    x1^3            # symbolic form
    2 1 0           # exponent form
    x1*x2*x3

The first significant line is ``n <int>``; an optional ``d <int>`` line may
follow and declares the generating degree.  Every other significant line is one
monomial in either form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, UnsupportedInputError
from .monomial import Monomial, MonomialIdeal, minimalize

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


@dataclass
class IdealDocument:
    n: int
    degree: int | None
    lines: list[tuple[int, int, str]] = field(default_factory=list)  # (line, column, text)
    source: str | None = None

    def monomials(self) -> list[Monomial]:
        return [_parse_monomial(text, self.n, ln, col) for ln, col, text in self.lines]

    def to_ideal(self) -> MonomialIdeal:
        monos = self.monomials()
        if not monos:
            raise ParseError("no generators", self.lines[-1][0] if self.lines else 1)
        try:
            I = minimalize(monos, self.n)
        except UnsupportedInputError as exc:
            raise ParseError(str(exc), self.lines[0][0]) from exc
        if self.degree is not None and I.d != self.degree:
            raise ParseError(f"declared degree {self.degree} but generators have degree {I.d}", 1)
        return I


def _significant(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if stripped:
            yield ln, len(body) - len(body.lstrip()) + 1, stripped


def read_document(text: str, source: str | None = None) -> IdealDocument:
    lines = list(_significant(text))
    if not lines:
        raise ParseError("empty input: expected 'n <int>'", 1)
    ln, col, head = lines[0]
    m = re.fullmatch(r"n\s+(\d+)", head)
    if not m:
        raise ParseError(f"expected 'n <int>', got {head!r}", ln, col)
    n = int(m.group(1))
    if n < 1:
        raise ParseError("n must be positive", ln, col + 2)
    rest = lines[1:]
    degree = None
    if rest:
        m = re.fullmatch(r"d\s+(\d+)", rest[0][2])
        if m:
            degree = int(m.group(1))
            rest = rest[1:]
    return IdealDocument(n, degree, rest, source)


def _parse_monomial(text: str, n: int, ln: int, col: int) -> Monomial:
    if text[0].isdigit():
        tokens = list(re.finditer(r"\S+", text))
        exps = []
        for t in tokens:
            if not t.group().isdigit():
                raise ParseError(f"expected a nonnegative integer, got {t.group()!r}", ln, col + t.start())
            exps.append(int(t.group()))
        if len(exps) != n:
            raise ParseError(f"expected {n} exponents, got {len(exps)}", ln, col)
        return Monomial(tuple(exps))
    exps = [0] * n
    offset = 0
    for part in text.split("*"):
        token = part.strip()
        pos = col + offset + (len(part) - len(part.lstrip()))
        offset += len(part) + 1
        m = _FACTOR.match(token)
        if not m:
            raise ParseError(f"bad factor {token!r}; expected x<i> or x<i>^<k>", ln, pos)
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"variable x{i} out of range for n = {n}", ln, pos)
        exps[i - 1] += int(m.group(2)) if m.group(2) else 1
    return Monomial(tuple(exps))


def parse_ideal(text: str, source: str | None = None) -> MonomialIdeal:
    return read_document(text, source).to_ideal()


def load_ideal(path: str | Path) -> MonomialIdeal:
    path = Path(path)
    return parse_ideal(path.read_text(encoding="utf-8"), str(path))


def format_ideal(I: MonomialIdeal, symbolic: bool = False, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n {I.n}")
    for g in I.gens:
        out.append(str(g) if symbolic else " ".join(map(str, g.exps)))
    return "\n".join(out) + "\n"
