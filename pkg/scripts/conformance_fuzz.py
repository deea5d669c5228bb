"""Run the fuzz harness over every class and tabulate the outcome.

    python scripts/conformance_fuzz.py --count 500 --seed 1 --json fuzz.json
"""

import argparse
import io
import json
from dataclasses import asdict, dataclass

from lfcheck.cli import run_fuzz

CLASSES = ("acyclic", "triangle", "certificate", "adversarial")


@dataclass
class FuzzConfig:
    count: int = 200
    seed: int = 1
    max_order: int = 8
    instances_per: int = 4


def run(cfg: FuzzConfig):
    rows = []
    for cls in CLASSES:
        rep = run_fuzz(cls, cfg.count, cfg.seed, cfg.max_order, cfg.instances_per, out=io.StringIO())
        rows.append({"class": cls, "cases": rep["cases"], "violations": rep["violations"],
                     "counterexamples": len(rep["counterexamples"]),
                     "elapsed_s": round(rep["timing"]["elapsed_s"], 3)})
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(FuzzConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    p.add_argument("--json", metavar="OUT")
    args = p.parse_args()
    cfg = FuzzConfig(args.count, args.seed, args.max_order, args.instances_per)
    rows = run(cfg)
    print(f"{'class':<12} {'cases':>7} {'violations':>10} {'counterex.':>10} {'time':>8}")
    for r in rows:
        viol = "-" if r["violations"] is None else r["violations"]
        print(f"{r['class']:<12} {r['cases']:>7} {viol:>10} {r['counterexamples']:>10} {r['elapsed_s']:>7.2f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
