"""Compare the generic index with d_{S,T} over all standard seaweeds of the given types.

Example: python3 scripts/verify_all.py A3 B4 D4 --json out.json
"""

import argparse
import json
import sys
import time
from collections import Counter

from seaweed_index.chevalley import structure_constants
from seaweed_index.rootsys import SimpleType, all_types, build_root_system, subset_from_mask
from seaweed_index.seaweed import verify_pair


def run_type(t: SimpleType, seed: int) -> dict:
    rs = build_root_system(t)
    sc = structure_constants(rs)
    tally, failures = Counter(), []
    start = time.perf_counter()
    for sm in range(1 << rs.rank):
        for tm in range(1 << rs.rank):
            rep = verify_pair(rs, subset_from_mask(sm), subset_from_mask(tm), seed=seed, sc=sc)
            tally["pairs"] += 1
            tally["bound_ok"] += rep.bound_ok
            tally["equal"] += rep.equality
            if not rep.equality:
                failures.append(rep.as_dict())
    return {"type": str(t), **tally, "seconds": round(time.perf_counter() - start, 2), "failures": failures}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("types", nargs="*", help="e.g. A3 B4; default: every type of rank <= 4")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--json", help="write the full report here")
    args = ap.parse_args()
    types = [SimpleType.parse(s) for s in args.types] or all_types(4)
    report = []
    for t in types:
        row = run_type(t, args.seed)
        report.append(row)
        print(f"{row['type']:<4} pairs={row['pairs']:>6} bound_ok={row['bound_ok']:>6} "
              f"equal={row['equal']:>6} {row['seconds']:>7.2f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2, default=sorted)
    return 0 if all(r["equal"] == r["pairs"] for r in report) else 1


if __name__ == "__main__":
    sys.exit(main())
