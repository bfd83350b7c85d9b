"""Machine-readable verification report tying all checks together."""

from __future__ import annotations

from .determinantal import binomial_two_minors, build_associate_matrix, build_bivariate_matrix
from .invariants import invariant_report
from .monomial import MonomialIdeal
from .relations import TBinomial
from .sorting import sort_pair, sortability_witness
from .stable import BoundVector, stability_witness, strong_stability_witness
from .toric import first_failing_degree, generation_degrees, quadratic_kernel

DEFAULT_MAX_DEGREE = 6


def _relations(rs) -> list[dict]:
    return [r.to_json() for r in sorted(rs)]


def _exps(u) -> list[int]:
    return list(u.exps)


def _theorem(applicable: bool, I: MonomialIdeal, moves: set[TBinomial], D: int) -> dict:
    fail = first_failing_degree(I, moves, D)
    return {"applicable": applicable, "holds_up_to_max_degree": fail is None, "first_failing_degree": fail}


def verify(
    I: MonomialIdeal,
    max_degree: int = DEFAULT_MAX_DEGREE,
    bounds: BoundVector | None = None,
    also_associate: bool = False,
    source: str | None = None,
) -> dict:
    """Run every check on ``I`` and return a JSON-ready report.

    The matrix is the bivariate one for ``n = 2`` and the associated one
    otherwise.  Theorem verdicts are only meaningful up to ``max_degree``.
    """
    witness = sortability_witness(I.gens)
    sortable = {"sortable": witness is None, "witness": None}
    if witness is not None:
        u, v = witness
        a, b = sort_pair(u, v)
        sortable["witness"] = {"pair": [_exps(u), _exps(v)], "sorting": [_exps(a), _exps(b)]}

    assoc = build_associate_matrix(I)
    assoc_minors = binomial_two_minors(assoc)
    if I.n == 2:
        T = build_bivariate_matrix(I)
        minors = binomial_two_minors(T)
    else:
        T, minors = assoc, assoc_minors

    qk = quadratic_kernel(I)
    gen = generation_degrees(I, max_degree)
    inv = invariant_report(I)
    quadratic = gen.quadratically_generated

    not_applicable = {"applicable": False, "holds_up_to_max_degree": None, "first_failing_degree": None}
    theorems = {
        "main_a": _theorem(witness is None, I, assoc_minors, max_degree),
        "tor": _theorem(quadratic, I, minors, max_degree) if I.n == 2 else not_applicable,
        "more": _theorem(quadratic, I, minors, max_degree) if I.n >= 3 else not_applicable,
        "freiman_corollary": {
            "applicable": inv.freiman,
            "holds_up_to_max_degree": quadratic,
            "first_failing_degree": min((k for k in gen.generator_degrees if k > 2), default=None),
        },
    }

    report = {
        "input": {
            "source": source,
            "n": I.n,
            "d": I.d,
            "q": I.q,
            "generators": [_exps(g) for g in I.gens],
        },
        "sortable": sortable,
        "matrix": T.to_json(),
        "minors": _relations(minors),
        "quadratic_kernel": _relations(qk),
        "minors_equal_quadratic_kernel": minors == qk,
        "generation": gen.to_json(),
        "theorems": theorems,
        "invariants": inv.to_json(),
    }
    if bounds is not None:
        sw = strong_stability_witness(I, bounds)
        w = stability_witness(I, bounds)
        report["stability"] = {
            "bounds": [b for b in bounds.bounds],
            "stable": w is None,
            "stable_witness": None if w is None else {"u": _exps(w[0]), "i": w[1]},
            "strongly_stable": sw is None,
            "strongly_stable_witness": None if sw is None else {"u": _exps(sw[0]), "i": sw[1], "j": sw[2]},
        }
    if also_associate and I.n == 2:
        report["associate"] = {
            "matrix": assoc.to_json(),
            "minors": _relations(assoc_minors),
            "minors_equal_quadratic_kernel": assoc_minors == qk,
        }
    return report


def theorems_hold(report: dict) -> bool:
    return all(
        t["holds_up_to_max_degree"] for t in report["theorems"].values() if t["applicable"]
    )
