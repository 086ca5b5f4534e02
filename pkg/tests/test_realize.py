from fractions import Fraction as F

import pytest

from superkac.charring import G0IrrepLabel, kac_like_character
from superkac.classify import ModuleDescriptor, evaluation_module, realize_over
from superkac.coeffalg import StarPartner, TruncatedAlgebra
from superkac.errors import PreconditionError, SizeCapExceeded, UnsupportedAlgebra
from superkac.realize import (ExplicitModule, bracket_residual, build_adjoint, build_kac_like,
                              build_superalgebra, character_of, dual_module, ext1_koszul,
                              highest_weight_vector, hom_space, irreducibility_certificate,
                              irreducible_quotient, lie_generating_set, submodule_search,
                              verify_comm_rels)
from superkac.rootdata import AlgebraId, Family, Weight, distinguished_borel

from conftest import P0, ev, kac, th

B2 = TruncatedAlgebra(1, 2)


@pytest.fixture(scope="module")
def kac16(g12):
    return build_kac_like(g12, B2, th({0: 1, 1: 1}, 2), (0,))


def test_matrix_algebra_shape(g12):
    assert len(g12) == 8
    assert len(g12.g_minus) == len(g12.g_plus) == 2
    assert bracket_residual(build_adjoint(g12)) == 0


def test_osp_not_realized():
    with pytest.raises(UnsupportedAlgebra):
        build_superalgebra(AlgebraId(Family.OSP, 2, 2))


def test_kac_like_is_a_module(kac16):
    assert kac16.dim == 16
    assert sum(1 if p else -1 for p in kac16.parity) == 0
    assert bracket_residual(kac16) == 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_comm_rels_vanish(kac16, k):
    assert verify_comm_rels(kac16, k) == 0


def test_comm_rels_negative_control(g12, kac16):
    # doubling the g_-1 action breaks the module structure; the residual must notice
    M = kac16

    def bad(i, b):
        mat = M.rho(i, b)
        if i in g12.g_minus:
            return {c: {r: 2 * x for r, x in col.items()} for c, col in mat.items()}
        return mat

    W = ExplicitModule(g12, B2, M.dim, M.parity, M.weights, bad)
    assert bracket_residual(W) != 0
    assert verify_comm_rels(W, 1) != 0
    assert verify_comm_rels(W, 2) != 0


def test_comm_rels_k_range(kac16):
    with pytest.raises(PreconditionError):
        verify_comm_rels(kac16, 0)


def test_irreducible_when_ideal_is_annihilator(kac16):
    rep = submodule_search(kac16)
    assert rep.is_irreducible and rep.maximal_submodule_dim == 0
    cert = irreducibility_certificate(kac16, StarPartner((1,)))
    assert cert.scalar != 0


def test_reducible_when_ideal_too_small(g12):
    R = build_kac_like(g12, B2, th({0: 1}, 2), (0,))
    rep = submodule_search(R)
    assert not rep.is_irreducible
    assert rep.maximal_submodule_dim == 16 - 4
    assert irreducible_quotient(R).dim == 4


def test_evaluation_module_dims(sl12):
    assert evaluation_module(sl12, Weight((0,), 0)).dim == 1
    assert evaluation_module(sl12, Weight((1,), -1)).dim == 3   # atypical
    assert evaluation_module(sl12, Weight((0,), 1)).dim == 4    # typical
    assert submodule_search(evaluation_module(sl12, Weight((1,), -1))).omega_dim is None


def test_character_of_matches_prediction(sl12, kac16):
    assert character_of(kac16) == kac_like_character(G0IrrepLabel(Weight((0,), 1)), 2, sl12)


def test_highest_weight_vector(kac16, sl12):
    hv = highest_weight_vector(kac16, distinguished_borel(sl12))
    assert hv.weight == Weight((0,), 1)
    assert hv.psi[("z", 1)] == 1


def test_dual_hom_is_one_dimensional(kac16):
    assert len(hom_space(dual_module(kac16), kac16)) == 1
    assert len(hom_space(kac16, kac16)) == 1


def test_generating_set_size_is_stable(g12):
    assert len(lie_generating_set(g12, B2)) == 5
    assert len(lie_generating_set(g12, TruncatedAlgebra(1, 3))) == 5


def _ext(sl12, a, b, N):
    m1 = realize_over(ModuleDescriptor(sl12, (a,)), {P0: N})
    m2 = realize_over(ModuleDescriptor(sl12, (b,)), {P0: N})
    return ext1_koszul(m1, m2)


# frozen oracle values (cochain computation, both parities)
@pytest.mark.parametrize("a,b,N,dim", [
    (ev(1, -1), ev(0, 0), 1, 1),
    (ev(0, 0), ev(1, -1), 2, 1),
    (ev(0, 0), ev(0, 0), 2, 0),
    (ev(0, 1), ev(0, 0), 2, 0),
    (ev(1, -1), ev(1, -1), 1, 0),
    (ev(1, -1), ev(1, -1), 2, 1),
    (kac({0: 1, 1: 1}, 2), ev(0, 0), 2, 0),
    (ev(0, 0), kac({1: 1}, 2), 2, 0),
])
def test_ext_oracle_values(sl12, a, b, N, dim):
    assert _ext(sl12, a, b, N) == dim


def test_size_cap(monkeypatch, g12):
    monkeypatch.setenv("SUPERKAC_MAX_DIM", "8")
    M = build_kac_like(g12, B2, th({0: 1, 1: 1}, 2), (0,))
    with pytest.raises(SizeCapExceeded):
        M.rho(0, 0)
