"""The ten acceptance checks at full size, exact arithmetic throughout.

Each test prints one ``[PASS]``/``[FAIL]`` line; the lines are repeated in the
terminal summary.  Run directly (``python tests/test_acceptance.py``) to get
just the lines.
"""

import pytest

from superkac import verify
from superkac.classify import HighestWeightData, normalize, oracle_highest_weight, literal_shift
from superkac.rootdata import AlgebraId, apply_chain, distinguished_borel

from superkac.coeffalg import StarPartner, annihilator_ideal
from superkac.realize import build_kac_like, build_superalgebra, irreducibility_certificate, submodule_search

from conftest import ev, th

LINES: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(verify.CHECKS))
def test_criterion(number):
    res = verify.CHECKS[number](quick=False)
    LINES[number] = res.line()
    print(res.line())
    assert res.passed, res.failures


def test_sweeps_meet_minimum_sizes():
    assert len(verify.irreducibility_sweep()) >= 30
    assert len(verify.ext_pairs()) >= 20
    assert len(verify.locality_pairs()) >= 20
    _, descs = verify.borel_cases()
    assert {tuple(f.d for f in d.factors) for d in descs} >= {(1,), (2,), (2, 1)}
    _, universe = verify.block_universe()
    assert sum(len(fs) for fs in universe.values()) >= 10 and len(universe) == 2


@pytest.mark.xfail(strict=True, reason="uncorrected shift moves a weight orthogonal to the odd root")
def test_uncorrected_shift_on_orthogonal_evaluation_weight():
    aid = AlgebraId.sl(1, 2)
    d = normalize([ev(1, -1)], aid)
    dist = distinguished_borel(aid)
    alpha = dist.odd_simple[0]
    found = oracle_highest_weight(d, apply_chain(dist, [alpha]))
    assert found == literal_shift(HighestWeightData.of(d), [alpha])


@pytest.mark.xfail(strict=True, reason="no monomial basis of A/k_Theta lies below nhat = (0, 1)")
def test_star_scalar_without_adapted_basis():
    # the module is irreducible (search agrees) but the pairing for this nhat cannot be formed
    g = build_superalgebra(AlgebraId.sl(1, 2))
    t = th({(0, 0): 1, (0, 1): 1, (2, 0): 1}, 3, 2)
    M = build_kac_like(g, annihilator_ideal(t), t, (0,))
    assert submodule_search(M).is_irreducible
    cert = irreducibility_certificate(M, StarPartner((0, 1)))
    assert cert.mode == "clipped"
    assert cert.scalar != 0


if __name__ == "__main__":
    for res in verify.run_all():
        print(res.line())
