"""Command line interface: ``fibrox <command> [path] [options]``.

Exit codes: 0 success / property holds, 1 property fails, 2 usage or input
error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .determinantal import binomial_two_minors, build_associate_matrix, build_bivariate_matrix
from .errors import BoundExceededError, FibroxError
from .invariants import invariant_report
from .io import format_ideal, load_ideal
from .monomial import MonomialIdeal
from .report import DEFAULT_MAX_DEGREE, theorems_hold, verify
from .sorting import sort_pair, sortability_witness
from .stable import BoundVector, borel_closure, stability_witness, strong_stability_witness, veronese_type
from .toric import generation_degrees

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

COMMANDS = ("sortable", "stable", "matrix", "minors", "toric", "freiman", "verify", "veronese", "borel")


class UsageError(FibroxError):
    pass


def parse_bounds(text: str) -> BoundVector:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("inf", "*", "-"):
            out.append(None)
        elif tok.isdigit():
            out.append(int(tok))
        else:
            raise argparse.ArgumentTypeError(f"bad bound {tok!r}")
    return BoundVector(tuple(out))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fibrox",
        description="Determinantal presentations of fiber cones of equigenerated monomial ideals.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("path", nargs="?", help="ideal file (seeds for 'borel')")
    p.add_argument("--bounds", type=parse_bounds, help="comma-separated exponent bounds, 'inf' for none")
    p.add_argument("--degree", type=int, help="generating degree (veronese)")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="degree bound D for generation checks")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--bivariate", action="store_true", help="force the two-variable matrix")
    kind.add_argument("--also-associate", action="store_true", help="for n = 2, also report the associated matrix")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("-o", "--output", help="write output to this file")
    return p


def _ideal(args) -> MonomialIdeal:
    if not args.path:
        raise UsageError(f"'{args.command}' needs an ideal file")
    return load_ideal(args.path)


def _exps(u) -> list[int]:
    return list(u.exps)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_sortable(args):
    I = _ideal(args)
    w = sortability_witness(I.gens)
    if args.json:
        body = {"sortable": w is None}
        if w:
            body["witness"] = {"pair": [_exps(w[0]), _exps(w[1])], "sorting": [_exps(x) for x in sort_pair(*w)]}
        return _dump(body), (EXIT_OK if w is None else EXIT_FAIL)
    if w is None:
        return "sortable: true\n", EXIT_OK
    a, b = sort_pair(*w)
    return f"sortable: false\nwitness: sort({w[0]}, {w[1]}) = ({a}, {b})\n", EXIT_FAIL


def cmd_stable(args):
    I = _ideal(args)
    c = args.bounds or BoundVector.unbounded(I.n)
    w = stability_witness(I, c)
    sw = strong_stability_witness(I, c)
    if args.json:
        body = {
            "bounds": list(c.bounds),
            "stable": w is None,
            "stable_witness": None if w is None else {"u": _exps(w[0]), "i": w[1]},
            "strongly_stable": sw is None,
            "strongly_stable_witness": None if sw is None else {"u": _exps(sw[0]), "i": sw[1], "j": sw[2]},
        }
        return _dump(body), (EXIT_OK if w is None else EXIT_FAIL)
    lines = [f"bounds: ({c})", f"stable: {str(w is None).lower()}"]
    if w:
        lines.append(f"  witness: u = {w[0]}, i = {w[1]}")
    lines.append(f"strongly stable: {str(sw is None).lower()}")
    if sw:
        lines.append(f"  witness: u = {sw[0]}, i = {sw[1]}, j = {sw[2]}")
    return "\n".join(lines) + "\n", (EXIT_OK if w is None else EXIT_FAIL)


def _matrices(args, I):
    if args.bivariate:
        return [build_bivariate_matrix(I)]
    if I.n == 2:
        mats = [build_bivariate_matrix(I)]
        if args.also_associate:
            mats.append(build_associate_matrix(I))
        return mats
    return [build_associate_matrix(I)]


def cmd_matrix(args):
    I = _ideal(args)
    mats = _matrices(args, I)
    if args.json:
        return _dump([T.to_json() for T in mats] if len(mats) > 1 else mats[0].to_json()), EXIT_OK
    blocks = []
    for T in mats:
        rows, cols = T.shape
        head = f"{T.kind} matrix ({rows}x{cols})"
        if T.kind == "bivariate":
            head += f", d'={T.d_prime}, a={T.a}, b={T.b}"
        blocks.append(head + "\n" + T.render())
    return "\n\n".join(blocks) + "\n", EXIT_OK


def cmd_minors(args):
    I = _ideal(args)
    mats = _matrices(args, I)
    if args.json:
        body = {T.kind: [r.to_json() for r in sorted(binomial_two_minors(T))] for T in mats}
        return _dump(body), EXIT_OK
    out = []
    for T in mats:
        ms = sorted(binomial_two_minors(T))
        out.append(f"{T.kind}: {len(ms)} binomial 2-minors")
        out.extend(f"  {m}" for m in ms)
    return "\n".join(out) + "\n", EXIT_OK


def cmd_toric(args):
    I = _ideal(args)
    rep = generation_degrees(I, args.max_degree)
    if args.json:
        return _dump(rep.to_json()), EXIT_OK
    lines = [f"new generators by degree (up to {args.max_degree}):"]
    for k, c in sorted(rep.new_generators.items()):
        lines.append(f"  {k}: {c}")
        lines.extend(f"    {r}" for r in rep.relations[k])
    lines.append(f"quadratically generated up to {args.max_degree}: {str(rep.quadratically_generated).lower()}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_freiman(args):
    I = _ideal(args)
    inv = invariant_report(I)
    code = EXIT_OK if inv.freiman else EXIT_FAIL
    if args.json:
        return _dump(inv.to_json()), code
    return f"freiman: {str(inv.freiman).lower()} (mu2={inv.mu_square}, l={inv.spread}, mu={inv.mu})\n", code


def cmd_verify(args):
    I = _ideal(args)
    rep = verify(I, args.max_degree, args.bounds, args.also_associate, source=args.path)
    code = EXIT_OK if theorems_hold(rep) else EXIT_FAIL
    if args.json:
        return _dump(rep), code
    lines = [
        f"ideal: n={I.n}, d={I.d}, q={I.q}",
        f"sortable: {str(rep['sortable']['sortable']).lower()}",
        f"matrix: {rep['matrix']['kind']} {rep['matrix']['rows']}x{rep['matrix']['cols']}",
        f"minors: {len(rep['minors'])}, quadratic kernel: {len(rep['quadratic_kernel'])}, "
        f"equal: {str(rep['minors_equal_quadratic_kernel']).lower()}",
        "generation: " + ", ".join(f"{k}:{c}" for k, c in rep["generation"]["counts"].items()),
    ]
    for name, t in rep["theorems"].items():
        if t["applicable"]:
            lines.append(f"theorem {name}: {'holds' if t['holds_up_to_max_degree'] else 'FAILS'} up to {args.max_degree}")
        else:
            lines.append(f"theorem {name}: not applicable")
    inv = rep["invariants"]
    lines.append(f"freiman: {str(inv['freiman']).lower()} (mu2={inv['mu_square']}, l={inv['spread']}, mu={inv['mu']})")
    return "\n".join(lines) + "\n", code


def cmd_veronese(args):
    if args.bounds is None or args.degree is None:
        raise UsageError("veronese needs --bounds and --degree")
    if any(b is None for b in args.bounds.bounds):
        raise UsageError("veronese bounds must be finite")
    I = veronese_type(args.bounds.bounds, args.bounds.n, args.degree)
    if args.json:
        return _dump({"n": I.n, "generators": [_exps(g) for g in I.gens]}), EXIT_OK
    return format_ideal(I, comment=f"Veronese type ideal, bounds ({args.bounds}), degree {args.degree}"), EXIT_OK


def cmd_borel(args):
    seeds = _ideal(args)
    c = args.bounds or BoundVector.unbounded(seeds.n)
    I = borel_closure(seeds.gens, c)
    if args.json:
        return _dump({"n": I.n, "generators": [_exps(g) for g in I.gens]}), EXIT_OK
    return format_ideal(I, comment=f"Borel closure, bounds ({c})"), EXIT_OK


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def run_command(argv: list[str] | None = None) -> tuple[int, str]:
    """Run one command; returns ``(exit_code, output)`` without printing."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), ""
    try:
        text, code = HANDLERS[args.command](args)
    except BoundExceededError as exc:
        return EXIT_CAP, f"error: {exc}\n"
    except (FibroxError, OSError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        return code, ""
    return code, text


def main(argv: list[str] | None = None) -> int:
    code, text = run_command(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_FAIL) else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
