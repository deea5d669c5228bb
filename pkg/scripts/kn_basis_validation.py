"""Check the triangle family [1,j,j+1] against the cycle space of K_n.

For each n the script reports the cycle-space rank, the family size, and the
determinant of its coordinate matrix relative to the fundamental basis.
"""

import argparse
from dataclasses import dataclass

from lfcheck.digraph import complete_graph
from lfcheck.homology import (cycle_coordinates, cycle_space_rank, determinant,
                              is_z_basis, kn_triangle_basis)


@dataclass
class BasisConfig:
    n_min: int = 3
    n_max: int = 10


def validate(n: int):
    g = complete_graph(n)
    basis = kn_triangle_basis(n)
    rank = cycle_space_rank(g)
    det = determinant([cycle_coordinates(g, c) for c in basis]) if len(basis) == rank else None
    return rank, len(basis), det, is_z_basis(g, basis)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-min", type=int, default=BasisConfig.n_min)
    p.add_argument("--n-max", type=int, default=BasisConfig.n_max)
    args = p.parse_args()
    cfg = BasisConfig(args.n_min, args.n_max)
    print(f"{'n':>3} {'rank':>5} {'size':>5} {'det':>5}  z-basis")
    ok = True
    for n in range(cfg.n_min, cfg.n_max + 1):
        rank, size, det, good = validate(n)
        ok &= good
        print(f"{n:>3} {rank:>5} {size:>5} {det!s:>5}  {good}")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
