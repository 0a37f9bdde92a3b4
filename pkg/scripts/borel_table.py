"""Print k_g and the Borel index for every simple type up to rank 8."""

import argparse
import time

from seaweed_index.cascade import kg
from seaweed_index.chevalley import structure_constants
from seaweed_index.rootsys import all_types, build_root_system
from seaweed_index.seaweed import build_seaweed, generic_index


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=8)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    print(f"{'type':<5} {'k_g':>4} {'chi(b)':>7} {'rank-k_g':>9} {'sec':>6}")
    for t in all_types(args.max_rank):
        start = time.perf_counter()
        rs = build_root_system(t)
        chi = generic_index(build_seaweed(rs, rs.pi, ()), structure_constants(rs), 3, args.seed)
        k = kg(rs)
        flag = "" if chi == rs.rank - k else "  MISMATCH"
        print(f"{str(t):<5} {k:>4} {chi:>7} {rs.rank - k:>9} {time.perf_counter() - start:>6.2f}{flag}")


if __name__ == "__main__":
    main()
