"""How the true distance of random ramified codes sits between the two classical bounds."""

import argparse
from collections import Counter

import numpy as np

from nbcodes import alinear as al, sympcode as sc


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    tally = Counter()
    for _ in range(args.trials):
        p = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(2, 6))
        data = al.random_ramified_data(p, n, rng)
        C = al.ramified_build(data)
        if C.dim == n:
            continue
        lo, hi = al.ramified_distance_bounds(data)
        d = sc.parameters(C).d
        zero_phi = al.RamifiedData(data.C1, data.C0, np.zeros_like(data.phi))
        d0 = sc.parameters(al.ramified_build(zero_phi)).d
        tally["instances"] += 1
        tally["lo > hi"] += int(lo is not None and hi is not None and lo > hi)
        tally["d == hi"] += int(d == hi)
        tally["d > d(phi=0)"] += int(d > d0)
        bounds = [b for b in (lo, hi) if b is not None]
        tally["outside [min, max]"] += int(not (min(bounds) <= d <= max(bounds)))
    for k, v in tally.items():
        print(f"{k:>20}: {v}")


if __name__ == "__main__":
    main()
