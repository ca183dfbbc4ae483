"""Count transversal (ft-unitary) matrices over small two-dimensional algebras.

Compares the exhaustive counts with the orders of the matching classical
groups: O_m(2) for scalar matrices, GU_m(2) for GF(4) and GL_m(2) for the
split algebra.
"""

import argparse
from math import prod

from nbcodes import alinear as al, ftops
from nbcodes.errors import ResourceError


def gu(m, q):
    return q ** (m * (m - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, m + 1))


def gl(m, q):
    return prod(q**m - q**i for i in range(m))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--limit", type=int, default=10**6)
    args = ap.parse_args()
    cases = [("scalar GF(2)", al.split_algebra(2), True, None),
             ("inert GF(4)", al.classify(1, 1, 2), False, gu),
             ("split GF(2)xGF(2)", al.split_algebra(2), False, gl)]
    print(f"{'algebra':>18} {'m':>2} {'total':>9} {'unitary':>8} {'non-monomial':>13} {'group order':>12}")
    for name, A, scalar, order in cases:
        for m in range(1, args.max_m + 2 if scalar else args.max_m + 1):
            try:
                c = ftops.enumerate_ft_group(A, m, limit=args.limit, scalar=scalar)
            except ResourceError as e:
                print(f"{name:>18} {m:>2}  skipped: {e}")
                continue
            ref = order(m, 2) if order else "-"
            print(f"{name:>18} {m:>2} {c.total:>9} {c.unitary:>8} {c.nonmonomial:>13} {ref:>12}")


if __name__ == "__main__":
    main()
