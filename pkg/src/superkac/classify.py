"""Normal-form descriptors of finite-dimensional irreducible g[A]-modules.

A module is a tensor product over distinct points of local factors, each
either an evaluation module (a g-highest weight) or a Kac-like module
K_{A/k_Theta}(Theta [x] V) with dim A/k_Theta > 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .charring import (FormalCharacter, G0IrrepLabel, dimension, kac_like_character)
from .coeffalg import (Point, TruncatedAlgebra, ZFunctional, annihilator_ideal,
                       minimal_order, monomials, vanishes_on_ideal)
from .errors import DomainError, MalformedInput, PreconditionError, RequiresRealization
from .rootdata import (AlgebraId, BorelChoice, Family, Root, Weight, apply_chain,
                       distinguished_borel, form, is_typical, root_weight, weight_coords)


@dataclass(frozen=True)
class LocalFactor:
    point: Point
    kind: str                                   # "eval" or "kac"
    hw: Weight | None = None                    # eval: g-highest weight
    theta: ZFunctional | None = None            # kac: central functional
    vlabel: tuple[Fraction, ...] | None = None  # kac: g_0' Dynkin labels

    def __post_init__(self):
        if self.kind not in ("eval", "kac"):
            raise DomainError(f"unknown factor kind {self.kind!r}")
        if self.kind == "eval":
            if self.hw is None:
                raise DomainError("evaluation factor needs hw")
        else:
            if self.theta is None:
                raise DomainError("Kac-like factor needs theta")
            if self.theta.r != self.point.r:
                raise DomainError("functional and point have different numbers of variables")
            if self.theta.is_zero():
                raise DomainError("Theta vanishes identically")
            lab = tuple(Fraction(x) for x in (self.vlabel or ()))
            object.__setattr__(self, "vlabel", lab)

    def sort_key(self):
        hw = (self.hw.hprime, self.hw.z) if self.hw is not None else ()
        th = (self.theta.n, self.theta.values) if self.theta is not None else ()
        return (self.point, self.kind, hw, th, self.vlabel or ())

    def __lt__(self, other: "LocalFactor") -> bool:
        return self.sort_key() < other.sort_key()

    @classmethod
    def evaluation(cls, point: Point, hw: Weight) -> "LocalFactor":
        return cls(point, "eval", hw=hw)

    @classmethod
    def kac(cls, point: Point, theta: ZFunctional, vlabel) -> "LocalFactor":
        return cls(point, "kac", theta=theta, vlabel=tuple(Fraction(x) for x in vlabel))

    # derived data -------------------------------------------------------------

    @property
    def hprime(self) -> tuple[Fraction, ...]:
        return self.hw.hprime if self.kind == "eval" else self.vlabel

    @property
    def z_value(self) -> Fraction:
        return self.hw.z if self.kind == "eval" else self.theta.constant

    def local_theta(self) -> ZFunctional:
        if self.kind == "kac":
            return self.theta
        return ZFunctional.make(self.point.r, 1, {(0,) * self.point.r: self.hw.z})

    def quotient(self) -> TruncatedAlgebra:
        """A/k_Theta (A/m for evaluation factors)."""
        if self.kind == "eval":
            return TruncatedAlgebra(self.point.r, 1)
        return annihilator_ideal(self.theta)

    @property
    def d(self) -> int:
        return 1 if self.kind == "eval" else self.quotient().dim

    def top_weight(self) -> Weight:
        return Weight(self.hprime, self.z_value)

    def label(self) -> G0IrrepLabel:
        return G0IrrepLabel(self.top_weight())

    def check(self, aid: AlgebraId) -> None:
        self.label().check(aid)

    def is_trivial(self) -> bool:
        return self.kind == "eval" and self.hw.is_zero()

    def touches_m(self) -> bool:
        """Theta(z (x) m) != 0."""
        return self.kind == "kac" and any(sum(e) > 0 for e, _ in self.theta.values)

    def to_json(self) -> dict:
        out = {"point": self.point.to_json(), "kind": self.kind}
        if self.kind == "eval":
            out["hw"] = self.hw.to_json()
        else:
            out["theta"] = self.theta.to_json()
            out["vlabel"] = Weight(self.vlabel).to_json()["hprime"]
        return out

    @classmethod
    def from_json(cls, d) -> "LocalFactor":
        from .rootdata import parse_rational
        try:
            pt = Point.from_json(d["point"])
            kind = d["kind"]
            if kind == "eval":
                return cls.evaluation(pt, Weight.from_json(d["hw"]))
            if kind == "kac":
                theta = ZFunctional.from_json(d["theta"])
                return cls.kac(pt, theta, [parse_rational(x) for x in d.get("vlabel", [])])
        except (KeyError, TypeError, AttributeError, IndexError) as exc:
            raise MalformedInput(f"malformed factor: {exc}") from exc
        raise DomainError(f"unknown factor kind {d.get('kind')!r}")


@dataclass(frozen=True)
class ModuleDescriptor:
    aid: AlgebraId
    factors: tuple[LocalFactor, ...] = ()

    def points(self) -> list[Point]:
        return [f.point for f in self.factors]

    def factor_at(self, p: Point) -> LocalFactor | None:
        for f in self.factors:
            if f.point == p:
                return f
        return None

    def to_json(self) -> dict:
        return {"algebra": self.aid.to_json(), "factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, d) -> "ModuleDescriptor":
        try:
            aid = AlgebraId.from_json(d["algebra"])
            facs = [LocalFactor.from_json(x) for x in d.get("factors", [])]
        except (KeyError, TypeError, AttributeError, IndexError) as exc:
            raise MalformedInput(f"malformed descriptor: {exc}") from exc
        return normalize(facs, aid)


def demote(f: LocalFactor) -> LocalFactor:
    """Kac-like factors with k_Theta = m are evaluation modules."""
    if f.kind == "kac" and f.d == 1:
        return LocalFactor.evaluation(f.point, f.top_weight())
    return f


def normalize(factors: Iterable[LocalFactor], aid: AlgebraId) -> ModuleDescriptor:
    out = []
    for f in factors:
        f.check(aid)
        f = demote(f)
        if not f.is_trivial():
            out.append(f)
    out.sort(key=lambda f: f.point)
    pts = [f.point for f in out]
    if len(set(pts)) != len(pts):
        raise DomainError("factors must be at distinct maximal ideals")
    if len({p.r for p in pts}) > 1:
        raise DomainError("all points must have the same number of coordinates")
    return ModuleDescriptor(aid, tuple(out))


def is_irreducible_kac_like(theta: ZFunctional, ideal: TruncatedAlgebra) -> bool:
    if theta.r != ideal.r:
        raise DomainError("functional and algebra have different numbers of variables")
    if minimal_order(theta) > ideal.order:
        raise PreconditionError("Kac-like module not defined for this ideal")
    th = theta.at_order(ideal.order)
    if not vanishes_on_ideal(th, ideal):
        raise PreconditionError("Kac-like module not defined for this ideal")
    return ideal.same_ideal(annihilator_ideal(th))


# dimensions and characters ---------------------------------------------------------

def factor_character(f: LocalFactor, aid: AlgebraId, super: bool = False) -> FormalCharacter:
    lab = f.label()
    if f.kind == "kac" or is_typical(lab.hw, aid):
        return kac_like_character(lab, f.d, aid, super)
    if aid.family is not Family.SL:
        raise RequiresRealization("atypical evaluation factor requires explicit realization")
    from .realize.oracle import character_of
    return character_of(evaluation_module(aid, lab.hw), super)


def evaluation_module(aid: AlgebraId, hw: Weight, r: int = 1):
    """Irreducible g-module of highest weight hw (over A/m)."""
    from .realize import build_kac_like, build_superalgebra, irreducible_quotient
    g = build_superalgebra(aid)
    C = TruncatedAlgebra(r, 1)
    th = ZFunctional.make(r, 1, {(0,) * r: hw.z})
    return irreducible_quotient(build_kac_like(g, C, th, tuple(int(x) for x in hw.hprime)))


def dimension_and_characters(desc: ModuleDescriptor):
    aid = desc.aid
    ch = FormalCharacter.unit(aid)
    sch = FormalCharacter.unit(aid)
    for f in desc.factors:
        ch = ch * factor_character(f, aid)
        sch = sch * factor_character(f, aid, super=True)
    return dimension(ch), sch.total(), ch, sch


def realize_factor(f: LocalFactor, aid: AlgebraId):
    """Explicit module for one factor, over its own A/k_Theta."""
    from .realize import build_kac_like, build_superalgebra
    if f.kind == "eval":
        return evaluation_module(aid, f.hw, f.point.r)
    g = build_superalgebra(aid)
    return build_kac_like(g, f.quotient(), f.theta, tuple(int(x) for x in f.vlabel))


def realize_descriptor(desc: ModuleDescriptor):
    """Explicit module over the product of the local quotients."""
    from .realize import tensor
    mods = [realize_factor(f, desc.aid) for f in desc.factors]
    if not mods:
        raise DomainError("the trivial module has no local factor to realize")
    out = mods[0]
    for m in mods[1:]:
        out = tensor(out, m, product=True)
    return out


def realize_over(desc: ModuleDescriptor, orders: Mapping[Point, int]):
    """Explicit module over the product of A/m_p^N_p for the given points, with
    trivial action at points carrying no factor.  Used to compare modules with
    different supports over one coefficient algebra."""
    from .realize import ProductAlgebra, build_superalgebra, embed, pullback, tensor, trivial_module
    pts = sorted(orders)
    here = {f.point: f for f in desc.factors}
    if not set(here) <= set(pts):
        raise DomainError("a factor lives outside the requested points")
    P = ProductAlgebra([TruncatedAlgebra(p.r, orders[p]) for p in pts])
    g = build_superalgebra(desc.aid)
    out = trivial_module(g, P)
    for k, p in enumerate(pts):
        if p in here:
            M = pullback(realize_factor(here[p], desc.aid), P.parts[k])
            out = tensor(out, embed(M, P, k))
    return out


# highest weights and change of Borel ------------------------------------------------

@dataclass(frozen=True)
class HighestWeightData:
    """psi restricted to each point: exponent of T -> weight of h (x) T^e."""

    aid: AlgebraId
    psi: tuple[tuple[Point, tuple[tuple[tuple[int, ...], Weight], ...]], ...] = ()

    def __post_init__(self):
        items = self.psi.items() if isinstance(self.psi, dict) else self.psi
        clean = []
        for p, vals in items:
            vals = vals.items() if isinstance(vals, dict) else vals
            v = tuple(sorted((tuple(e), w) for e, w in vals if not w.is_zero()))
            if v:
                clean.append((p, v))
        object.__setattr__(self, "psi", tuple(sorted(clean)))

    def at(self, p: Point) -> dict:
        return dict(dict(self.psi).get(p, ()))

    @classmethod
    def of(cls, desc: ModuleDescriptor) -> "HighestWeightData":
        out = {}
        for f in desc.factors:
            r = f.point.r
            vals = {(0,) * r: f.top_weight()}
            if f.kind == "kac":
                zero = (Fraction(0),) * len(f.hprime)
                for e, x in f.theta.values:
                    if sum(e):
                        vals[e] = Weight(zero, x)
            out[f.point] = vals
        return cls(desc.aid, out)

    def to_json(self) -> dict:
        return {"algebra": self.aid.to_json(),
                "psi": [{"point": p.to_json(),
                         "values": [{"exp": list(e), "weight": w.to_json()} for e, w in vals]}
                        for p, vals in self.psi]}

    @classmethod
    def from_json(cls, d) -> "HighestWeightData":
        try:
            aid = AlgebraId.from_json(d["algebra"])
            psi = {Point.from_json(x["point"]): {tuple(v["exp"]): Weight.from_json(v["weight"])
                                                 for v in x["values"]} for x in d.get("psi", [])}
        except (KeyError, TypeError, AttributeError, IndexError) as exc:
            raise MalformedInput(f"malformed highest-weight data: {exc}") from exc
        return cls(aid, psi)


def oracle_highest_weight(desc: ModuleDescriptor, borel: BorelChoice) -> HighestWeightData:
    """Highest weight of the explicit module for ``desc`` relative to ``borel``,
    read off from the oracle's highest-weight line, as psi(h (x) T^e) for every
    monomial T^e of each local truncation."""
    from .realize import ProductAlgebra, highest_weight_vector
    M = realize_descriptor(desc)
    hv = highest_weight_vector(M, borel)
    g = M.g
    labels = [g.elements[i].label for i in g.hprime]
    parts = M.B.parts if isinstance(M.B, ProductAlgebra) else [M.B]
    offsets = M.B.offsets if isinstance(M.B, ProductAlgebra) else [0]
    out = {}
    for f, B, off in zip(desc.factors, parts, offsets):
        vals = {}
        for e in monomials(B.r, B.order):
            vec = B.reduce({B.index[e]: 1})

            def ev(label):
                return sum((Fraction(x) * hv.psi[(label, off + b)] for b, x in vec.items()), Fraction(0))

            vals[e] = Weight(tuple(ev(lab) for lab in labels), ev("z"))
        out[f.point] = vals
    return HighestWeightData(desc.aid, out)


def support(hw: HighestWeightData) -> set[Point]:
    return {p for p, _ in hw.psi}


def local_d(vals: dict, r: int) -> int:
    """d_{psi,m} = dim A/k_Theta for Theta = psi restricted to z[A] at m."""
    zvals = {e: w.z for e, w in vals.items() if w.z != 0}
    if not zvals or all(sum(e) == 0 for e in zvals):
        return 1
    n = 1 + max(sum(e) for e in zvals)
    return annihilator_ideal(ZFunctional.make(r, n, zvals)).dim


def _reflect_evaluation(lam: Weight, chain, aid: AlgebraId) -> Weight:
    """Highest weight of an irreducible g-module after a chain of odd reflections."""
    for a in chain:
        c = weight_coords(lam, aid)
        if form(aid, c, a.coords) != 0:
            lam = lam - root_weight(a, aid)
    return lam


def change_of_borel(hw: HighestWeightData, chain: list[Root], borel: BorelChoice | None = None) -> HighestWeightData:
    aid = hw.aid
    dist = distinguished_borel(aid)
    if borel is not None and borel != dist:
        raise PreconditionError("change of Borel starts from the distinguished Borel")
    apply_chain(dist, chain)
    shift = Weight.zero(aid)
    for a in chain:
        shift = shift + root_weight(a, aid)
    out = {}
    for p, vals in hw.psi:
        vals = dict(vals)
        zero = (0,) * p.r
        d = local_d(vals, p.r)
        lam = vals.get(zero, Weight.zero(aid))
        if d == 1:
            vals[zero] = _reflect_evaluation(lam, chain, aid)
        else:
            vals[zero] = lam - shift * d
        out[p] = vals
    return HighestWeightData(aid, out)


def literal_shift(hw: HighestWeightData, chain: list[Root]) -> HighestWeightData:
    """psi - d (alpha_1 + ... + alpha_l) (x) ev at every support point, for every d.

    Agrees with change_of_borel except on evaluation factors orthogonal to alpha."""
    aid = hw.aid
    shift = Weight.zero(aid)
    for a in chain:
        shift = shift + root_weight(a, aid)
    out = {}
    for p, vals in hw.psi:
        vals = dict(vals)
        zero = (0,) * p.r
        vals[zero] = vals.get(zero, Weight.zero(aid)) - shift * local_d(vals, p.r)
        out[p] = vals
    return HighestWeightData(aid, out)
