"""Star-certificate scalars for two-variable functionals on sl(1|2).

For each Theta and each maximal exponent nhat of its support, builds the
Kac-like module over A/I for I = k_Theta and for I = m^n, and prints the
certificate scalar together with how the monomial basis was chosen
("adapted" when a basis below nhat exists, "clipped" otherwise).
"""

import argparse
from fractions import Fraction as F

from superkac.classify import is_irreducible_kac_like
from superkac.errors import SizeCapExceeded
from superkac.coeffalg import StarPartner, TruncatedAlgebra, ZFunctional, annihilator_ideal, maximal_support
from superkac.realize import build_kac_like, build_superalgebra, irreducibility_certificate
from superkac.rootdata import AlgebraId

CASES = [
    {(0, 0): 1, (1, 0): 1, (0, 1): 1},
    {(0, 0): 1, (2, 0): 1, (0, 1): 1},
    {(0, 0): F(1, 2), (1, 1): 1},
    {(0, 0): 2, (2, 0): 1, (0, 2): -1},
    {(0, 0): 1, (1, 0): 2, (0, 2): 1},
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3, help="truncation order")
    args = ap.parse_args()
    g = build_superalgebra(AlgebraId.sl(1, 2))
    print(f"{'Theta':<44} {'I':<8} {'nhat':<8} {'mode':<8} scalar")
    for vals in CASES:
        th = ZFunctional.make(2, args.n, vals)
        for name, ideal in (("k_Theta", annihilator_ideal(th)), ("m^n", TruncatedAlgebra(2, args.n))):
            irr = is_irreducible_kac_like(th, ideal)
            M = build_kac_like(g, ideal, th.at_order(ideal.order), (0,))
            label = ", ".join(f"{e}:{v}" for e, v in th.values)
            for nhat in sorted(maximal_support(th)):
                try:
                    c = irreducibility_certificate(M, StarPartner(nhat))
                except SizeCapExceeded:
                    print(f"{label:<44} {name:<8} {str(nhat):<8} skipped (dim {M.dim} over the cap)")
                    continue
                print(f"{label:<44} {name:<8} {str(nhat):<8} {c.mode:<8} {c.scalar}"
                      f"{'' if (c.scalar != 0) == irr else '  <-- disagrees'}")


if __name__ == "__main__":
    main()
