from fractions import Fraction as F

import pytest

from superkac.coeffalg import (Point, StarPartner, TruncatedAlgebra, ZFunctional, annihilator_ideal,
                               maximal_support, minimal_order, monomials, star, vanishes_on_ideal)
from superkac.errors import MalformedInput, ParameterError, PreconditionError
from superkac.rootdata import AlgebraId, Parity, distinguished_borel

from conftest import th


def test_monomials_count():
    assert monomials(2, 3) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert len(monomials(3, 3)) == 10


def test_truncation_multiplication():
    A = TruncatedAlgebra(1, 3)
    assert A.mul({1: 1}, {1: 1}) == {2: 1}
    assert A.mul({2: 1}, {1: 1}) == {}
    assert A.cotangent_dim() == 1   # I = m^3 = (T^3)
    assert TruncatedAlgebra(2, 2).cotangent_dim() == 3   # m^2 needs three generators


def test_quotient_by_monomial_ideal():
    I = TruncatedAlgebra.from_monomials(1, 3, [(1,)])
    assert I.dim == 1 and I.std_exps == [(0,)]
    assert I.same_ideal(TruncatedAlgebra(1, 1).at_order(3))


def test_quotient_by_linear_form():
    J = TruncatedAlgebra.with_ideal(2, 3, [{1: 1}])   # (T1)
    assert J.is_ideal()
    assert J.std_exps == [(0, 0), (0, 1), (0, 2)]


@pytest.mark.parametrize("vals,n,r,dim,order", [
    ({0: 1}, 1, 1, 1, 1),
    ({1: 1}, 3, 1, 2, 2),
    ({2: 1}, 3, 1, 3, 3),
    ({0: 5, 2: 1}, 3, 1, 3, 3),
    ({(0, 0): 1, (1, 0): 1, (0, 1): 2, (2, 0): 1}, 3, 2, 3, 3),
    ({(1, 0): 1, (0, 1): 1}, 2, 2, 2, 2),
])
def test_annihilator_dimensions(vals, n, r, dim, order):
    t = th(vals, n, r)
    k = annihilator_ideal(t)
    assert k.dim == dim
    assert minimal_order(t) == order
    assert vanishes_on_ideal(t, k)



def test_zero_functional_rejected():
    with pytest.raises(Exception):
        annihilator_ideal(ZFunctional(1, 2))


def test_functional_validation():
    with pytest.raises(ParameterError):
        th({3: 1}, 3)
    with pytest.raises(MalformedInput):
        ZFunctional.from_json({"r": 1})


def test_maximal_support():
    assert maximal_support(th({(1, 0): 1, (0, 1): 1, (0, 0): 1}, 2, 2)) == {(1, 0), (0, 1)}
    assert maximal_support(th({(0, 1): 2, (2, 0): 1}, 3, 2)) == {(0, 1), (2, 0)}


def test_star_pairing():
    alpha = distinguished_borel(AlgebraId.sl(1, 2)).positive(Parity.ODD)[0]
    assert star((0, 1), alpha, StarPartner((1, 1))) == (alpha, (1, 0))
    with pytest.raises(PreconditionError):
        star((2, 0), alpha, StarPartner((1, 1)))
    with pytest.raises(PreconditionError):
        StarPartner((1,)).check(th({2: 1}, 3))


def test_json_roundtrips():
    t = th({0: F(1, 2), 1: -3}, 2)
    assert ZFunctional.from_json(t.to_json()) == t
    k = annihilator_ideal(th({(1, 0): 1, (0, 1): 1}, 2, 2))
    assert TruncatedAlgebra.from_json(k.to_json()).same_ideal(k)
    p = Point((F(1, 2), 0))
    assert Point.from_json(p.to_json()) == p


def test_annihilator_is_largest():
    # (T^2) is killed by Theta = T^2-coefficient-free functional, but not by one seeing T^2
    assert not vanishes_on_ideal(th({0: 1, 2: 1}, 3), TruncatedAlgebra.from_monomials(1, 3, [(1,)]))
    assert vanishes_on_ideal(th({0: 1, 1: 1}, 3), TruncatedAlgebra.from_monomials(1, 3, [(2,)]))
