"""Hom_{g0[A]}(g_-1[k_Theta1] (x) L1, L2) solved over A/m^N for growing N.

The explicit solve should be constant from N = n + 1 on and equal the closed
form used by the Ext dispatcher.
"""

import argparse
from fractions import Fraction as F

from superkac.classify import LocalFactor
from superkac.coeffalg import Point, ZFunctional, minimal_order
from superkac.extblocks import hom_g0_dim, hom_g0_oracle
from superkac.rootdata import AlgebraId

P = Point((0,))


def kac(vals, n, lab):
    return LocalFactor.kac(P, ZFunctional.make(1, n, {(k,): F(v) for k, v in vals.items()}), lab)


PAIRS = [
    (kac({0: 1, 1: 1}, 2, (0,)), kac({1: 1}, 2, (1,))),
    (kac({0: 1, 1: 1}, 2, (1,)), kac({1: 1}, 2, (0,))),
    (kac({0: 1, 1: 1}, 2, (1,)), kac({1: 1}, 2, (2,))),
    (kac({0: 1, 2: 1}, 3, (0,)), kac({2: 1}, 3, (1,))),
    (kac({0: 1, 1: 1, 2: 1}, 3, (0,)), kac({1: 1, 2: 1}, 3, (1,))),
    (kac({0: 1, 1: 1}, 2, (0,)), kac({1: 2}, 2, (1,))),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--extra", type=int, default=2, help="orders beyond n + 1 to try")
    args = ap.parse_args()
    aid = AlgebraId.sl(1, 2)
    for fa, fb in PAIRS:
        n = max(minimal_order(fa.local_theta()), minimal_order(fb.local_theta()))
        dims = [hom_g0_oracle(fa, fb, aid, N) for N in range(n, n + 2 + args.extra)]
        closed = hom_g0_dim(fa, fb, aid)
        ok = len(set(dims[1:])) == 1 and dims[1] == closed
        print(f"n={n} V1={list(map(int, fa.hprime))} V2={list(map(int, fb.hprime))} "
              f"N={n}..{n + 1 + args.extra}: {dims}  closed form {closed}  {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
