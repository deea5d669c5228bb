"""How often does the identity fail on unconstrained random matrices?

Samples dense integer matrices, records which hypotheses hold, and counts
failing random instances per order.  Failures inside a hypothesis class
would be bugs; the script exits 1 if it sees one.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from lfcheck.genlab import Sampler, gen_random_dense
from lfcheck.hypotheses import hypothesis_report
from lfcheck.verify import random_instance, verify_identity


@dataclass
class CensusConfig:
    samples: int = 300
    seed: int = 0
    max_order: int = 6
    density: float = 0.5
    instances: int = 4


def census(cfg: CensusConfig):
    rng = random.Random(cfg.seed)
    table = {n: Counter() for n in range(2, cfg.max_order + 1)}
    bugs = 0
    for _ in range(cfg.samples):
        n = rng.randint(2, cfg.max_order)
        a = gen_random_dense(n, Sampler(rng), cfg.density)
        hyp = hypothesis_report(a)
        failed = sum(not verify_identity(a, random_instance(rng, n)).equal for _ in range(cfg.instances))
        row = table[n]
        row["matrices"] += 1
        row["hypothesis"] += hyp.any_holds
        row["failing"] += failed > 0
        if failed and hyp.any_holds:
            bugs += 1
    return table, bugs


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=CensusConfig.samples)
    p.add_argument("--seed", type=int, default=CensusConfig.seed)
    p.add_argument("--max-order", type=int, default=CensusConfig.max_order)
    p.add_argument("--density", type=float, default=CensusConfig.density)
    args = p.parse_args()
    cfg = CensusConfig(args.samples, args.seed, args.max_order, args.density)
    table, bugs = census(cfg)
    print(f"{'n':>3} {'matrices':>9} {'in class':>9} {'failing':>8}")
    for n, row in table.items():
        print(f"{n:>3} {row['matrices']:>9} {row['hypothesis']:>9} {row['failing']:>8}")
    print(f"failures inside a hypothesis class: {bugs}")
    raise SystemExit(1 if bugs else 0)


if __name__ == "__main__":
    main()
