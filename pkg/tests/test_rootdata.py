from fractions import Fraction as F

import pytest

from superkac.errors import MalformedInput, ParameterError
from superkac.rootdata import (AlgebraId, Family, Parity, Weight, all_roots, apply_chain, distinguished_borel,
                               form, hprime_rank, is_typical, odd_reflection, parse_rational,
                               reachable_borels, root, roots_by_parity, z_vector)


@pytest.mark.parametrize("m,n,nroots,nodd,nposodd", [(1, 2, 6, 4, 2), (2, 2, 12, 8, 4), (2, 3, 20, 12, 6)])
def test_sl_root_counts(m, n, nroots, nodd, nposodd):
    aid = AlgebraId.sl(m, n)
    assert len(all_roots(aid)) == nroots
    assert len(roots_by_parity(aid, Parity.ODD)) == nodd
    assert len(distinguished_borel(aid).positive(Parity.ODD)) == nposodd


def test_osp_counts():
    aid = AlgebraId(Family.OSP, 2, 2)
    assert len(all_roots(aid)) == 16
    assert len(distinguished_borel(aid).positive(Parity.ODD)) == 4
    assert hprime_rank(aid) == 2


def test_distinguished_has_one_odd_simple_root():
    for aid in (AlgebraId.sl(1, 2), AlgebraId.sl(2, 3), AlgebraId(Family.OSP, 2, 2)):
        b = distinguished_borel(aid)
        assert len(b.odd_simple) == 1


def test_z_grades_odd_roots():
    # on sl(1|2), ad z acts on e_ij by z_i - z_j: +1 on g_1, -1 on g_-1, 0 on g_0
    aid = AlgebraId.sl(1, 2)
    z = z_vector(aid)
    assert z == (2, 1, 1)
    for r in all_roots(aid):
        val = z[r.coords.index(1)] - z[r.coords.index(-1)]
        expected = 0 if r.parity is Parity.EVEN else (1 if r.coords[0] > 0 else -1)
        assert val == expected, r


def test_sl_nn_z_is_identity():
    assert set(z_vector(AlgebraId.sl(2, 2))) == {1}


def test_odd_roots_isotropic():
    aid = AlgebraId.sl(2, 3)
    for r in roots_by_parity(aid, Parity.ODD):
        assert form(aid, r.coords, r.coords) == 0


def test_odd_reflection_involutive():
    aid = AlgebraId.sl(1, 2)
    b = distinguished_borel(aid)
    a = b.odd_simple[0]
    b1 = odd_reflection(b, a)
    assert b1.simple_roots[0].coords == tuple(-x for x in a.coords)
    back = odd_reflection(b1, root(aid, [-x for x in a.coords]))
    assert set(back.simple_roots) == set(b.simple_roots)
    assert apply_chain(b, [a]).simple_roots == b1.simple_roots


def test_reachable_borels():
    assert len(reachable_borels(AlgebraId.sl(1, 2), 3)) == 3


def test_typicality():
    aid = AlgebraId.sl(1, 2)
    assert not is_typical(Weight((0,), 0), aid)
    assert is_typical(Weight((0,), 1), aid)


def test_parse_rational():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational(2) == 2
    with pytest.raises(Exception):
        parse_rational("x")


def test_bad_algebra_ids():
    with pytest.raises(ParameterError):
        AlgebraId.sl(2, 1)
    with pytest.raises(MalformedInput):
        AlgebraId.from_json({"m": 1})
    with pytest.raises(MalformedInput):
        AlgebraId.from_json(3)


def test_weight_json_roundtrip():
    w = Weight((F(1, 3), 2), F(-5, 7))
    assert Weight.from_json(w.to_json()) == w
    assert w.to_json()["z"] == "-5/7"
