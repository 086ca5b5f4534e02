from fractions import Fraction as F
from itertools import product

from hypothesis import HealthCheck, given, settings, strategies as st

from superkac.charring import G0IrrepLabel, dimension, kac_like_character, weyl_dimension
from superkac.classify import HighestWeightData, LocalFactor, ModuleDescriptor, normalize
from superkac.coeffalg import (Point, TruncatedAlgebra, ZFunctional, annihilator_ideal, maximal_support,
                               minimal_order, monomials, vanishes_on_ideal)
from superkac.extblocks import BlockUniverse, ext1_dispatch, same_block
from superkac.rootdata import AlgebraId, Weight, hprime_rank, roots_by_parity, Parity

SL12 = AlgebraId.sl(1, 2)
rats = st.fractions(min_value=-3, max_value=3, max_denominator=2)
small_ints = st.integers(-2, 2)


@st.composite
def functionals(draw, r=None, n=None, allow_const=True):
    r = r or draw(st.integers(1, 2))
    n = n or draw(st.integers(1, 3))
    exps = monomials(r, n)
    vals = {e: draw(rats) for e in exps if (allow_const or sum(e)) and draw(st.booleans())}
    # one guaranteed nonzero value keeps Theta from vanishing identically
    vals[draw(st.sampled_from(exps))] = draw(rats.filter(bool))
    return ZFunctional.make(r, n, vals)


@st.composite
def factors(draw, point=Point((0,)), ints=True, z=None):
    if z is None:
        z = draw(small_ints if ints else rats)
    h = draw(st.integers(0, 2))
    if draw(st.booleans()):
        return LocalFactor.evaluation(point, Weight((h,), z))
    top = {(0,): F(z), (1,): F(draw(st.sampled_from([-2, -1, 1, 2])))}
    return LocalFactor.kac(point, ZFunctional.make(1, 2, top), (h,))


# annihilator ------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(functionals())
def test_theta_vanishes_on_its_annihilator(t):
    k = annihilator_ideal(t)
    assert vanishes_on_ideal(t, k)
    assert 1 <= k.dim <= TruncatedAlgebra(t.r, t.n).dim
    assert minimal_order(t) <= t.n
    # k_Theta contains every monomial above the support
    for e in monomials(t.r, t.n):
        if not any(all(a <= b for a, b in zip(e, s)) for s in maximal_support(t)):
            assert not k.reduce({k.index[e]: 1})


@settings(max_examples=40, deadline=None)
@given(functionals(), st.integers(1, 3))
def test_annihilator_is_largest_among_powers(t, j):
    # if Theta kills m^j then m^j lies in k_Theta, so dim A/k_Theta <= dim A/m^j
    mj = TruncatedAlgebra(t.r, j).at_order(max(t.n, j))
    if vanishes_on_ideal(t.at_order(max(t.n, j)), mj):
        assert annihilator_ideal(t).dim <= TruncatedAlgebra(t.r, j).dim


@settings(max_examples=40, deadline=None)
@given(functionals())
def test_annihilator_stable_under_reindexing(t):
    # viewing Theta on a larger truncation does not change A/k_Theta
    assert annihilator_ideal(t.at_order(t.n + 1)).dim == annihilator_ideal(t).dim


# characters -----------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3), st.integers(0, 2), st.integers(1, 3), rats)
def test_kac_like_dimension_formula(a, b, d, z):
    aid = AlgebraId.sl(2, 2)
    lab = G0IrrepLabel(Weight((a, b), z))
    ch = kac_like_character(lab, d, aid)
    nodd = len(roots_by_parity(aid, Parity.ODD)) // 2
    assert dimension(ch) == 2 ** (nodd * d) * weyl_dimension(lab, aid)
    assert kac_like_character(lab, d, aid, super=True).total() == 0


# JSON -----------------------------------------------------------------------

@settings(max_examples=50, deadline=None)
@given(st.lists(rats, min_size=1, max_size=3), rats)
def test_weight_roundtrip(h, z):
    w = Weight(tuple(h), z)
    assert Weight.from_json(w.to_json()) == w


@settings(max_examples=50, deadline=None)
@given(functionals())
def test_functional_roundtrip(t):
    assert ZFunctional.from_json(t.to_json()) == t
    k = annihilator_ideal(t)
    assert TruncatedAlgebra.from_json(k.to_json()).same_ideal(k)


@settings(max_examples=40, deadline=None)
@given(factors(ints=False), factors(Point((1,)), ints=False))
def test_descriptor_roundtrip(f1, f2):
    desc = normalize([f1, f2], SL12)
    assert ModuleDescriptor.from_json(desc.to_json()) == desc
    hw = HighestWeightData.of(desc)
    assert HighestWeightData.from_json(hw.to_json()) == hw


# dispatch -------------------------------------------------------------------

@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(factors(), factors())
def test_dispatch_nonvanishing_is_symmetric(f1, f2):
    a = ext1_dispatch(f1, f2, SL12)
    b = ext1_dispatch(f2, f1, SL12)
    assert a.nonvanishing == b.nonvanishing


@settings(max_examples=40, deadline=None)
@given(st.data(), rats, st.integers(-2, 2), st.sampled_from([F(1, 2), F(1, 3), F(2, 3)]))
def test_non_integral_z_difference_vanishes(data, z, k, frac):
    f1 = data.draw(factors(z=z))
    f2 = data.draw(factors(z=z + k + frac))
    assert ext1_dispatch(f1, f2, SL12).case == "zero"


# blocks ---------------------------------------------------------------------

_P0, _P1 = Point((0,)), Point((1,))
_U0 = [LocalFactor.evaluation(_P0, Weight((h,), z)) for h, z in product(range(2), range(-1, 2))]
_U0 += [LocalFactor.kac(_P0, ZFunctional.make(1, 2, {(0,): z, (1,): 1}), (0,)) for z in (0, 1)]
_U1 = [LocalFactor.evaluation(_P1, Weight((h,), z)) for h, z in product(range(2), range(-1, 1))]
UNIVERSE = BlockUniverse(SL12, {_P0: _U0, _P1: _U1})
descs = st.tuples(st.sampled_from(_U0), st.sampled_from(_U1)).map(lambda fs: normalize(fs, SL12))


@settings(max_examples=60, deadline=None)
@given(descs, descs, descs)
def test_same_block_is_an_equivalence(a, b, c):
    assert same_block(a, a, UNIVERSE)
    assert same_block(a, b, UNIVERSE) == same_block(b, a, UNIVERSE)
    if same_block(a, b, UNIVERSE) and same_block(b, c, UNIVERSE):
        assert same_block(a, c, UNIVERSE)
