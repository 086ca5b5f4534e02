"""Local blocks of the curated two-point universe and a few same_block queries."""

from superkac.classify import normalize
from superkac.extblocks import BLOCK_CAVEAT, BlockUniverse, same_block
from superkac.verify import block_universe


def show(f):
    if f.kind == "eval":
        return f"E({int(f.hw.hprime[0])}|z={f.hw.z})"
    vals = ",".join(f"{e[0]}:{v}" for e, v in f.theta.values)
    return f"K[{vals}](V={int(f.vlabel[0])})"


def main():
    aid, uni = block_universe()
    U = BlockUniverse(aid, uni)
    for p in sorted(uni):
        print(f"point {p}:")
        for comp in U.components(p):
            print("   {" + ", ".join(show(f) for f in comp) + "}")
    facs0, facs1 = uni[min(uni)], uni[max(uni)]
    print()
    for a in facs0[:4]:
        for b in facs1[:3]:
            d1 = normalize([a, b], aid)
            d2 = normalize([], aid)
            print(f"{show(a)} (x) {show(b)} ~ trivial: {same_block(d1, d2, U)}")
    print()
    print("note:", BLOCK_CAVEAT)


if __name__ == "__main__":
    main()
