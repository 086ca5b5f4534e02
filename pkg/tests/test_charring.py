from collections import Counter
from fractions import Fraction as F

import pytest

from superkac.charring import (FormalCharacter, G0IrrepLabel, adjoint_character, decompose, dimension,
                               g_minus_one_character, grassmann_character, kac_like_character,
                               weyl_character, weyl_dimension)
from superkac.errors import DomainError
from superkac.rootdata import AlgebraId, Family, Weight


def lab(*h, z=0):
    return G0IrrepLabel(Weight(h, F(z)))


@pytest.mark.parametrize("h,dim", [((0, 0, 0), 1), ((1, 0, 0), 2), ((0, 1, 0), 3), ((0, 0, 1), 3),
                                   ((1, 0, 1), 6), ((2, 0, 0), 3)])
def test_weyl_dimension_sl23(h, dim):
    assert weyl_dimension(lab(*h), AlgebraId.sl(2, 3)) == dim


def test_weyl_dimension_osp():
    aid = AlgebraId(Family.OSP, 2, 2)
    assert weyl_dimension(lab(1, 0), aid) == 4
    assert weyl_dimension(lab(0, 1), aid) == 5


def test_weyl_character_matches_dimension():
    aid = AlgebraId.sl(2, 3)
    for h in [(1, 0, 1), (2, 1, 0), (0, 2, 1)]:
        assert dimension(weyl_character(lab(*h), aid)) == weyl_dimension(lab(*h), aid)


def test_grassmann_counts():
    aid = AlgebraId.sl(1, 2)
    assert grassmann_character(aid).total() == 4
    assert grassmann_character(aid, super=True).total() == 0
    assert adjoint_character(aid).total() == 3


def test_g_minus_one_is_standard():
    aid = AlgebraId.sl(1, 2)
    assert decompose(g_minus_one_character(aid), aid) == Counter({lab(1, z=-1): 1})


def test_kac_module_decomposition():
    aid = AlgebraId.sl(1, 2)
    got = decompose(kac_like_character(lab(1), 1, aid), aid)
    assert got == Counter({lab(2, z=-1): 1, lab(0, z=-1): 1, lab(1): 1, lab(1, z=-2): 1})


@pytest.mark.parametrize("d", [1, 2, 3])
def test_kac_like_dimension(d):
    aid = AlgebraId.sl(2, 2)
    ch = kac_like_character(lab(1, 0), d, aid)
    assert dimension(ch) == 2 ** (4 * d) * 2
    assert kac_like_character(lab(1, 0), d, aid, super=True).total() == 0


def test_label_validation():
    with pytest.raises(DomainError):
        lab(-1).check(AlgebraId.sl(1, 2))
    with pytest.raises(DomainError):
        lab(F(1, 2)).check(AlgebraId.sl(1, 2))
    with pytest.raises(DomainError):
        lab(1, 1).check(AlgebraId.sl(1, 2))
    with pytest.raises(DomainError):
        kac_like_character(lab(0), 0, AlgebraId.sl(1, 2))


def test_character_algebra():
    a = FormalCharacter({Weight((1,), 0): 2})
    b = FormalCharacter({Weight((1,), 0): -2, Weight((0,), 1): 1})
    assert (a + b).terms == ((Weight((0,), 1), 1),)
    assert (a - a).terms == ()
    assert (a * b).total() == -2
    assert FormalCharacter.of(a.as_dict()) == a
