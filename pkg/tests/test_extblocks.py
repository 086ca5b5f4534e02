from fractions import Fraction as F

import pytest

from superkac.classify import normalize
from superkac.errors import DomainError, PreconditionError
from superkac.extblocks import (BlockUniverse, extension_local_check, ext1_dispatch, hom_g0_dim,
                                hom_g0_oracle, local_components, same_block, trivial_factor)
from superkac.rootdata import AlgebraId, Family

from conftest import P0, P1, ev, kac


@pytest.mark.parametrize("a,b,case,dim", [
    (kac({0: F(1, 2), 1: 1}, 2), kac({1: 1}, 2), "zero", 0),
    (kac({0: 1, 1: 1}, 2), kac({1: 1}, 2), "hom1", 0),
    (kac({1: 1}, 2), kac({0: 1, 1: 1}, 2), "hom2", 0),
    (kac({0: 1, 1: 1}, 2, (1,)), kac({1: 1}, 2), "hom1", 1),
    (kac({0: 1, 1: 1}, 2), kac({0: 1, 1: 1}, 2), "g0red", None),
    (ev(1, -1), ev(0, 0), "evalpair", 1),
    (ev(0, 0), ev(0, 0, P1), "zero", 0),
])
def test_dispatch_cases(sl12, a, b, case, dim):
    ans = ext1_dispatch(a, b, sl12)
    assert ans.case == case and ans.dim == dim
    assert ans.nonvanishing == ("yes" if (dim or case == "g0red") else "no")


@pytest.mark.parametrize("fa,fb", [
    (kac({0: 1, 1: 1}, 2), kac({1: 1}, 2, (1,))),
    (kac({0: 1, 1: 1}, 3), kac({1: 1}, 3, (1,))),
    (kac({0: 1, 1: 1}, 2, (1,)), kac({1: 1}, 2, (0,))),
    (kac({0: 1, 1: 2}, 2), kac({1: 1}, 2, (1,))),
])
def test_hom_closed_form_matches_oracle(sl12, fa, fb):
    assert hom_g0_dim(fa, fb, sl12) == hom_g0_oracle(fa, fb, sl12)


def test_hom_stabilises(sl12):
    fa, fb = kac({0: 1, 1: 1}, 2), kac({1: 1}, 2, (1,))
    assert hom_g0_oracle(fa, fb, sl12, 3) == hom_g0_oracle(fa, fb, sl12, 4) == 1


def test_osp_dispatch_without_oracle():
    aid = AlgebraId(Family.OSP, 2, 2)
    f1 = kac({0: 1, 1: 1}, 2, (0, 0))
    f2 = kac({1: 1}, 2, (1, 0))
    assert ext1_dispatch(f1, f2, aid).case == "hom1"


def test_extension_locality(sl12):
    assert extension_local_check(ev(1, -1), kac({0: 1, 1: 1}, 2), sl12)
    assert extension_local_check(ev(0, F(1, 3)), kac({1: 1}, 2), sl12)
    with pytest.raises(PreconditionError):
        extension_local_check(ev(1, -1), kac({0: 1, 1: 1}, 2, (1,)), sl12)
    with pytest.raises(PreconditionError):
        extension_local_check(ev(1, -1), ev(0, 1), sl12)


def test_components_contain_trivial(sl12):
    comps = local_components(P0, [ev(1, -1), ev(0, 1)], sl12)
    flat = [f for c in comps for f in c]
    assert trivial_factor(P0, sl12) in flat
    assert sorted(len(c) for c in comps) == [1, 2]


def test_same_block(sl12):
    U = BlockUniverse(sl12, {P0: [ev(1, -1), ev(0, 1)], P1: [ev(1, -1, P1)]})
    a = normalize([ev(1, -1)], sl12)
    b = normalize([ev(1, -1, P1)], sl12)
    typ = normalize([ev(0, 1)], sl12)
    triv = normalize([], sl12)
    assert same_block(a, triv, U)
    assert same_block(a, b, U)
    assert not same_block(typ, triv, U)
    assert "caveat" in U.to_json()


def test_block_outside_universe(sl12):
    U = BlockUniverse(sl12, {P0: [ev(1, -1)]})
    with pytest.raises(DomainError):
        same_block(normalize([ev(0, 1)], sl12), normalize([], sl12), U)


def test_osp_evaluation_pairs_are_left_open():
    from superkac.classify import LocalFactor
    from superkac.rootdata import Weight
    aid = AlgebraId(Family.OSP, 2, 2)
    a = LocalFactor.evaluation(P0, Weight((1, 0), 0))
    ans = ext1_dispatch(a, trivial_factor(P0, aid), aid)
    assert (ans.case, ans.dim, ans.nonvanishing) == ("evalpair", None, "oracle")
