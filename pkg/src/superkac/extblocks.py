"""Ext^1 between local irreducible factors and the resulting block structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .charring import (G0IrrepLabel, adjoint_character, decompose, g_minus_one_character,
                       weyl_character)
from .classify import LocalFactor, ModuleDescriptor, evaluation_module
from .coeffalg import Point, TruncatedAlgebra, minimal_order
from .errors import (DomainError, InternalInconsistency, PreconditionError, SizeCapExceeded)
from .rootdata import AlgebraId, Family, Weight

YES, NO, ORACLE = "yes", "no", "oracle"
BLOCK_CAVEAT = ("blocks are connected components of the Ext graph over the supplied finite "
                "universe: 'same block' is certain, 'different blocks' means not connected "
                "within this universe; pairs the dispatcher cannot decide count as unconnected")


@dataclass(frozen=True)
class ExtAnswer:
    case: str                      # zero | hom1 | hom2 | g0red | evalpair
    dim: int | None
    nonvanishing: str              # yes | no | oracle
    detail: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.case == "zero" and self.nonvanishing != NO:
            raise InternalInconsistency("a zero answer must be vanishing")

    def to_json(self) -> dict:
        return {"case": self.case, "dim": self.dim, "nonvanishing": self.nonvanishing}


def _zero() -> ExtAnswer:
    return ExtAnswer("zero", 0, NO)


def _is_integer(x: Fraction) -> bool:
    return Fraction(x).denominator == 1


def _theta_map(f: LocalFactor) -> dict:
    return dict(f.local_theta().values)


def _z_shift(aid: AlgebraId) -> int:
    """Eigenvalue of -ad z on g_{-1}."""
    return 0 if aid.family is Family.SL and aid.m == aid.n else 1


def _g0prime_label(hprime) -> G0IrrepLabel:
    return G0IrrepLabel(Weight(tuple(hprime), Fraction(0)))


def multiplicity(aid: AlgebraId, hp1, hp2, kind: str) -> int:
    """[X (x) V(hp1) : V(hp2)] as g_0'-modules, X = g_{-1} or g_0'."""
    ch = weyl_character(_g0prime_label(hp1), aid)
    x = g_minus_one_character(aid) if kind == "g-1" else adjoint_character(aid)
    target = tuple(Fraction(a) for a in hp2)
    return sum(k for lab, k in decompose(x * ch, aid).items() if lab.hw.hprime == target)


def hom_g0_dim(fa: LocalFactor, fb: LocalFactor, aid: AlgebraId) -> int:
    """dim Hom_{g0[A]}(g_{-1}[k_a] (x) L_a, L_b) in closed form.

    A nonzero map forces Theta_a = Theta_b on z (x) m and a z-shift of one
    (zero for sl(n|n)); it then factors through g_{-1} (x) k_a/m k_a (x) V_a."""
    ta, tb = _theta_map(fa), _theta_map(fb)
    r = fa.point.r
    zero = (0,) * r
    higher = {e for e in set(ta) | set(tb) if e != zero}
    if any(ta.get(e, 0) != tb.get(e, 0) for e in higher):
        return 0
    if ta.get(zero, 0) - _z_shift(aid) != tb.get(zero, 0):
        return 0
    mu = fa.quotient().cotangent_dim()
    return mu * multiplicity(aid, fa.hprime, fb.hprime, "g-1")


def hom_g0_oracle(fa: LocalFactor, fb: LocalFactor, aid: AlgebraId, N: int | None = None) -> int:
    """The same Hom space solved over A/m^N with explicit matrices (sl only)."""
    from .realize import (build_g0_module, build_gminus_ideal_module, build_superalgebra,
                          hom_space, tensor)
    g = build_superalgebra(aid)
    r = fa.point.r
    n = max(minimal_order(fa.local_theta()), minimal_order(fb.local_theta()))
    N = N or 2 * n
    B = TruncatedAlgebra(r, N)
    k = fa.quotient().at_order(N)
    vecs = [B.reduce(dict(row)) for row in k.quotient_ideal]
    G = build_gminus_ideal_module(g, B, vecs)
    La = build_g0_module(g, B, fa.local_theta().at_order(N), tuple(int(x) for x in fa.hprime))
    Lb = build_g0_module(g, B, fb.local_theta().at_order(N), tuple(int(x) for x in fb.hprime))
    return len(hom_space(tensor(G, La), Lb, over="g0A"))


def different_points_zero(f1: LocalFactor, f2: LocalFactor) -> ExtAnswer:
    if f1.point == f2.point:
        raise PreconditionError("factors are at the same point")
    return _zero()


def ext1_eval_pair(f1: LocalFactor, f2: LocalFactor, aid: AlgebraId) -> ExtAnswer:
    """Ext^1_g(V1, V2) + Hom_g(g (x) V1, V2)^r for two evaluation factors."""
    if f1.kind != "eval" or f2.kind != "eval":
        raise PreconditionError("both factors must be evaluation factors")
    if f1.point != f2.point:
        raise PreconditionError("factors must be at the same point")
    if not _is_integer(f1.z_value - f2.z_value):
        return ExtAnswer("evalpair", 0, NO)
    if aid.family is not Family.SL:
        return ExtAnswer("evalpair", None, ORACLE)
    from .realize import build_adjoint, build_superalgebra, ext1_koszul, hom_space, tensor
    try:
        v1 = evaluation_module(aid, f1.hw)
        v2 = evaluation_module(aid, f2.hw)
        e = ext1_koszul(v1, v2)
        adj = build_adjoint(build_superalgebra(aid), v1.B)
        h = len(hom_space(tensor(adj, v1), v2, over="gA"))
    except SizeCapExceeded:
        return ExtAnswer("evalpair", None, ORACLE)
    dim = e + f1.point.r * h
    return ExtAnswer("evalpair", dim, YES if dim else NO, (("ext_g", e), ("hom_g", h)))


def _hom_answer(case: str, fa: LocalFactor, fb: LocalFactor, aid: AlgebraId) -> ExtAnswer:
    d = hom_g0_dim(fa, fb, aid)
    return ExtAnswer(case, d, YES if d else NO)


@lru_cache(maxsize=4096)
def _dispatch(f1: LocalFactor, f2: LocalFactor, aid: AlgebraId) -> ExtAnswer:
    if f1.point != f2.point:
        return different_points_zero(f1, f2)
    if not _is_integer(f1.z_value - f2.z_value):
        return _zero()
    if not f1.touches_m() and not f2.touches_m():
        return ext1_eval_pair(f1, f2, aid)
    if _theta_map(f1) == _theta_map(f2):
        yes = (multiplicity(aid, f1.hprime, f2.hprime, "g0'") > 0
               or tuple(f1.hprime) == tuple(f2.hprime))
        return ExtAnswer("g0red", None, YES if yes else NO)
    delta = f1.z_value - f2.z_value
    if delta > 0:
        return _hom_answer("hom1", f1, f2, aid)
    if delta < 0:
        return _hom_answer("hom2", f2, f1, aid)
    a1 = _hom_answer("hom1", f1, f2, aid)
    a2 = _hom_answer("hom2", f2, f1, aid)
    if a1.nonvanishing != a2.nonvanishing:
        raise InternalInconsistency("cases (1) and (2) disagree at equal z-values")
    return ExtAnswer("hom1", a1.dim, a1.nonvanishing, (("hom2_dim", a2.dim),))


def ext1_dispatch(f1: LocalFactor, f2: LocalFactor, aid: AlgebraId) -> ExtAnswer:
    f1.check(aid)
    f2.check(aid)
    if f1.point.r != f2.point.r:
        raise DomainError("factors live over different coordinate rings")
    return _dispatch(f1, f2, aid)


def extension_local_check(v: LocalFactor, lam: LocalFactor, aid: AlgebraId) -> bool:
    """Ext^1(V, C_lambda) and Ext^1(C_lambda, V) vanish for an evaluation V and
    a generalized evaluation module with trivial g_0'-part."""
    if v.kind != "eval":
        raise PreconditionError("v must be an evaluation factor")
    if lam.kind != "kac" or any(lam.hprime) or not lam.touches_m():
        raise PreconditionError("lam must be Kac-like with trivial V and Theta(z (x) m) != 0")
    return all(ext1_dispatch(a, b, aid).nonvanishing == NO for a, b in ((v, lam), (lam, v)))


# blocks ------------------------------------------------------------------------

def trivial_factor(p: Point, aid: AlgebraId) -> LocalFactor:
    return LocalFactor.evaluation(p, Weight.zero(aid))


@dataclass(frozen=True)
class LocalBlockId:
    representative: LocalFactor
    universe: tuple[LocalFactor, ...]

    def to_json(self) -> dict:
        return {"representative": self.representative.to_json(), "size": len(self.universe)}


def local_components(point: Point, factors: Iterable[LocalFactor], aid: AlgebraId) -> list[tuple[LocalFactor, ...]]:
    """Connected components of the Ext-nonvanishing graph (trivial factor included)."""
    nodes = sorted(set(factors) | {trivial_factor(point, aid)})
    if any(f.point != point for f in nodes):
        raise DomainError("universe factor at the wrong point")
    parent = {f: f for f in nodes}

    def find(f):
        while parent[f] != f:
            parent[f] = parent[parent[f]]
            f = parent[f]
        return f

    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if (ext1_dispatch(a, b, aid).nonvanishing == YES
                    or ext1_dispatch(b, a, aid).nonvanishing == YES):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    comps: dict = {}
    for f in nodes:
        comps.setdefault(find(f), []).append(f)
    return sorted(tuple(sorted(c)) for c in comps.values())


@dataclass(frozen=True)
class SpectralCharacter:
    assignments: tuple[tuple[Point, LocalBlockId], ...]

    def at(self, p: Point) -> LocalBlockId | None:
        return dict(self.assignments).get(p)


class BlockUniverse:
    """Per-point finite universes with cached components."""

    def __init__(self, aid: AlgebraId, universes: Mapping[Point, Iterable[LocalFactor]]):
        self.aid = aid
        self.universes = {p: tuple(sorted(set(fs))) for p, fs in universes.items()}
        self._comps: dict = {}

    def components(self, p: Point) -> list[tuple[LocalFactor, ...]]:
        if p not in self._comps:
            self._comps[p] = local_components(p, self.universes.get(p, ()), self.aid)
        return self._comps[p]

    def block_of(self, f: LocalFactor) -> LocalBlockId:
        for comp in self.components(f.point):
            if f in comp:
                return LocalBlockId(comp[0], comp)
        raise DomainError(f"factor at {f.point} is outside the universe")

    def default(self, p: Point) -> LocalBlockId:
        return self.block_of(trivial_factor(p, self.aid))

    def to_json(self) -> dict:
        return {"caveat": BLOCK_CAVEAT,
                "points": [{"point": p.to_json(),
                            "components": [[f.to_json() for f in c] for c in self.components(p)]}
                           for p in sorted(self.universes)]}


def spectral_character(desc: ModuleDescriptor, universe: BlockUniverse) -> SpectralCharacter:
    return SpectralCharacter(tuple((f.point, universe.block_of(f)) for f in desc.factors))


def same_block(d1: ModuleDescriptor, d2: ModuleDescriptor, universe: BlockUniverse) -> bool:
    c1, c2 = spectral_character(d1, universe), spectral_character(d2, universe)
    pts = {p for p, _ in c1.assignments} | {p for p, _ in c2.assignments}
    for p in pts:
        b1 = c1.at(p) or universe.default(p)
        b2 = c2.at(p) or universe.default(p)
        if b1.representative != b2.representative:
            return False
    return True


def affine_reduction_note(d1: ModuleDescriptor, d2: ModuleDescriptor, universe: BlockUniverse) -> bool:
    """Blocks for the affine algebra coincide with blocks over the loop ring C[t, 1/t]:
    the central element acts trivially on finite-dimensional irreducibles."""
    for d in (d1, d2):
        for p in d.points():
            if p.r != 1 or p.coords[0] == 0:
                raise PreconditionError("loop-ring points are nonzero scalars t = a")
    return same_block(d1, d2, universe)
