"""Explicit realizations used as an independent oracle (sl(m|n) only)."""

from .matrices import MatrixSuperalgebra, build_superalgebra
from .modules import (ExplicitModule, ProductAlgebra, build_adjoint, build_g0_module,
                      build_gminus_ideal_module, build_kac_like, dual_module, embed, pullback,
                      quotient, tensor, trivial_module)
from .oracle import (Certificate, HighestWeightVector, SubmoduleReport, bracket_residual,
                     character_of, closure, ext1_koszul, highest_weight_vector, hom_space,
                     irreducibility_certificate, irreducible_quotient, lie_generating_set,
                     maximal_submodule,
                     submodule_search, verify_comm_rels)
