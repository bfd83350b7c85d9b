"""Run the full verification report over a seeded random corpus and tabulate.

    python scripts/corpus_sweep.py --count 200 --seed 20240607 --max-degree 5

Prints, per family (Borel closures and plain random subsets), how often each
theorem check applies and how often it holds, plus how often the minors equal
the quadratic kernel.  ``--jsonl PATH`` also writes one report per line.
"""

import argparse
import json
import random
from collections import Counter
from dataclasses import dataclass

from fibrox.report import verify
from fibrox.sampling import random_borel_ideal, random_equigenerated_ideal


@dataclass
class SweepConfig:
    count: int = 200
    seed: int = 20240607
    max_degree: int = 5
    jsonl: str | None = None


def sweep(cfg: SweepConfig) -> dict[str, Counter]:
    rng = random.Random(cfg.seed)
    families = {
        "borel": [random_borel_ideal(rng) for _ in range(cfg.count)],
        "random": [(random_equigenerated_ideal(rng), None) for _ in range(cfg.count)],
    }
    out = open(cfg.jsonl, "w") if cfg.jsonl else None
    tallies = {}
    for name, instances in families.items():
        tally = Counter()
        for I, c in instances:
            rep = verify(I, cfg.max_degree, bounds=c, source=name)
            tally["instances"] += 1
            tally["minors == kernel"] += rep["minors_equal_quadratic_kernel"]
            tally["sortable"] += rep["sortable"]["sortable"]
            for key, t in rep["theorems"].items():
                if t["applicable"]:
                    tally[f"{key} applies"] += 1
                    tally[f"{key} holds"] += bool(t["holds_up_to_max_degree"])
            if out:
                out.write(json.dumps(rep, sort_keys=True) + "\n")
        tallies[name] = tally
    if out:
        out.close()
    return tallies


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=SweepConfig.count)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    p.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    p.add_argument("--jsonl")
    args = p.parse_args()
    tallies = sweep(SweepConfig(args.count, args.seed, args.max_degree, args.jsonl))
    for name, tally in tallies.items():
        print(f"[{name}]")
        for key in sorted(tally):
            print(f"  {key:28s} {tally[key]}")


if __name__ == "__main__":
    main()
