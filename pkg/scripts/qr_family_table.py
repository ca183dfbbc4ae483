"""Distance table for reductions of quadratic-residue modules modulo small primes.

    python3 scripts/qr_family_table.py --pprime 5 --primes 2 3 5 7 11 13
    python3 scripts/qr_family_table.py --pprime 13 --primes 2 3 13 --d 7
"""

import argparse

from nbcodes import numfield, sympcode as sc


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pprime", type=int, default=5)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7, 11, 13])
    ap.add_argument("--d", type=int, help="target distance for the bad-prime column")
    args = ap.parse_args()

    ring = numfield.QuadRing(args.pprime)
    M = numfield.qr_module(ring)
    target = args.d if args.d is not None else (args.pprime + 1) // 2
    bad = numfield.bad_primes(M, target)
    print(f"p' = {args.pprime}, rank {M.rank}, nu = {[str(c) for c in numfield.nu_poly(ring)]}")
    print(f"bad primes for d = {target}: {sorted(bad)}")
    print(f"{'p':>4} {'kind':>9} {'[[n,k,d]]':>12} {'pure_to':>8} {'singleton':>10}")
    for p in args.primes:
        C = numfield.reduce_mod_p(M, p)
        params = sc.parameters(C)
        kind = numfield.reduction_algebra(ring, p).kind
        print(f"{p:>4} {kind:>9} {f'[[{params.n},{params.k},{params.d}]]':>12} "
              f"{params.pure_to:>8} {sc.singleton_check(params):>10}")


if __name__ == "__main__":
    main()
