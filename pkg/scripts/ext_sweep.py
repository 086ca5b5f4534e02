"""Ext^1 dispatch against the cochain oracle on the acceptance pair list."""

import argparse
import time

from superkac.classify import ModuleDescriptor, realize_over
from superkac.coeffalg import minimal_order
from superkac.extblocks import ext1_dispatch
from superkac.realize import ext1_koszul
from superkac.rootdata import AlgebraId
from superkac.verify import ext_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--extra", type=int, default=1, help="solve over A/m^(n+k) for k = 0..extra")
    args = ap.parse_args()
    aid = AlgebraId.sl(1, 2)
    pairs = ext_pairs(args.quick)
    for f1, f2 in pairs:
        ans = ext1_dispatch(f1, f2, aid)
        n = max(minimal_order(f1.local_theta()), minimal_order(f2.local_theta()))
        t = time.perf_counter()
        oracle = []
        for k in range(args.extra + 1):
            orders = {f1.point: n + k}
            m1 = realize_over(ModuleDescriptor(aid, (f1,)), orders)
            m2 = realize_over(ModuleDescriptor(aid, (f2,)), orders)
            oracle.append(ext1_koszul(m1, m2))
        print(f"{ans.case:<9} dim={str(ans.dim):<5} nonvanishing={ans.nonvanishing:<4} "
              f"oracle(N=n..n+{args.extra})={oracle}  [{time.perf_counter() - t:.1f}s]")


if __name__ == "__main__":
    main()
