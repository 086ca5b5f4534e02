from fractions import Fraction as F

import pytest

from superkac.classify import (HighestWeightData, LocalFactor, ModuleDescriptor, change_of_borel,
                               dimension_and_characters, is_irreducible_kac_like, normalize,
                               oracle_highest_weight, literal_shift, realize_descriptor)
from superkac.coeffalg import TruncatedAlgebra, annihilator_ideal
from superkac.errors import DomainError, MalformedInput, PreconditionError
from superkac.realize import character_of
from superkac.rootdata import AlgebraId, Weight, apply_chain, distinguished_borel

from conftest import P0, P1, ev, kac, th


def test_normalize_drops_trivial_and_demotes(sl12):
    d = normalize([kac({0: 1, 1: 1}, 2), ev(0, 0, P1)], sl12)
    assert len(d.factors) == 1 and d.factors[0].kind == "kac"
    d2 = normalize([kac({0: 1}, 2)], sl12)
    assert d2.factors == (ev(0, 1),)


def test_normalize_rejects_repeated_points(sl12):
    with pytest.raises(DomainError):
        normalize([ev(1, 0), ev(0, 1)], sl12)


def test_factor_validation(sl12):
    with pytest.raises(DomainError):
        LocalFactor(P0, "kac", theta=th({0: 1}, 1, 2))
    with pytest.raises(DomainError):
        normalize([ev(-1, 0)], sl12)
    with pytest.raises(MalformedInput):
        ModuleDescriptor.from_json({"algebra": {"family": "sl", "m": 1, "n": 2}, "factors": [{"kind": "eval"}]})


def test_irreducibility_criterion():
    t = th({0: 1, 1: 1}, 3)
    k = annihilator_ideal(t)
    assert is_irreducible_kac_like(t, k)
    assert not is_irreducible_kac_like(t, TruncatedAlgebra(1, 3))
    with pytest.raises(PreconditionError):
        is_irreducible_kac_like(t, TruncatedAlgebra(1, 1))


@pytest.mark.parametrize("factors,dim", [
    ([kac({0: 1, 1: 1}, 2), ev(1, -1, P1)], 48),
    ([kac({0: 2, 1: 1}, 2, (1,))], 32),
    ([ev(0, 1)], 4),
    ([ev(1, -1)], 3),
])
def test_dimension_and_characters(sl12, factors, dim):
    desc = normalize(factors, sl12)
    d, sd, ch, sch = dimension_and_characters(desc)
    assert d == dim and ch.total() == dim
    assert sd == sch.total()
    M = realize_descriptor(desc)
    assert M.dim == dim
    assert character_of(M) == ch
    assert character_of(M, super=True) == sch


def test_descriptor_json_roundtrip(sl12):
    d = normalize([kac({0: F(1, 2), 1: 1}, 2, (2,)), ev(1, 3, P1)], sl12)
    assert ModuleDescriptor.from_json(d.to_json()) == d
    hw = HighestWeightData.of(d)
    assert HighestWeightData.from_json(hw.to_json()) == hw


def test_highest_weight_data(sl12):
    hw = HighestWeightData.of(normalize([kac({0: 1, 1: 1}, 2)], sl12))
    vals = hw.to_json()["psi"][0]["values"]
    assert [v["weight"] for v in vals] == [{"hprime": ["0"], "z": "1"}] * 2


def test_change_of_borel_typical_agrees_with_literal(sl12):
    d = normalize([kac({0: 3, 1: 1}, 2)], sl12)
    dist = distinguished_borel(sl12)
    a = dist.odd_simple[0]
    hw = HighestWeightData.of(d)
    assert change_of_borel(hw, [a]) == literal_shift(hw, [a])
    assert oracle_highest_weight(d, apply_chain(dist, [a])) == change_of_borel(hw, [a])


def test_change_of_borel_atypical_evaluation(sl12):
    # (lambda, alpha) = 0: the highest weight does not move
    d = normalize([ev(1, -1)], sl12)
    dist = distinguished_borel(sl12)
    a = dist.odd_simple[0]
    hw = HighestWeightData.of(d)
    assert oracle_highest_weight(d, apply_chain(dist, [a])) == hw
    assert change_of_borel(hw, [a]) == hw
    assert literal_shift(hw, [a]) != hw
