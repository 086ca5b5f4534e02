"""Formal characters over h = h' + Cz.

Weights are ``rootdata.Weight`` values; a character is a sparse integer
combination of them.  Irreducible g_0-characters come from Freudenthal's
multiplicity formula, run in epsilon/delta coordinates with the Euclidean
form (which is invariant for each simple ideal of g_0').
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod

from .errors import DomainError, InternalInconsistency
from .rootdata import (AlgebraId, Parity, Weight, coords_weight, distinguished_borel,
                       hprime_rank, weight_coords)


@dataclass(frozen=True)
class FormalCharacter:
    terms: tuple[tuple[Weight, int], ...] = ()

    def __post_init__(self):
        items = self.terms.items() if isinstance(self.terms, dict) else self.terms
        acc: Counter = Counter()
        for w, k in items:
            acc[w] += int(k)
        object.__setattr__(self, "terms", tuple(sorted((w, k) for w, k in acc.items() if k)))

    @classmethod
    def of(cls, d: dict) -> "FormalCharacter":
        return cls(tuple(d.items()))

    @classmethod
    def unit(cls, aid: AlgebraId) -> "FormalCharacter":
        return cls(((Weight.zero(aid), 1),))

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.terms)

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        return FormalCharacter(self.terms + other.terms)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return FormalCharacter(self.terms + tuple((w, -k) for w, k in other.terms))

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        acc: Counter = Counter()
        for w1, k1 in self.terms:
            for w2, k2 in other.terms:
                acc[w1 + w2] += k1 * k2
        return FormalCharacter(tuple(acc.items()))

    def __pow__(self, e: int) -> "FormalCharacter":
        if e < 0:
            raise DomainError("negative power of a character")
        out = None
        base = self
        while e:
            if e & 1:
                out = base if out is None else out * base
            e >>= 1
            if e:
                base = base * base
        if out is None:
            raise DomainError("zeroth power needs an algebra; use FormalCharacter.unit")
        return out

    def shift(self, w: Weight) -> "FormalCharacter":
        return FormalCharacter(tuple((u + w, k) for u, k in self.terms))

    def total(self) -> int:
        return sum(k for _, k in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> list[dict]:
        return [{"weight": w.to_json(), "mult": k} for w, k in self.terms]


@dataclass(frozen=True, order=True)
class G0IrrepLabel:
    hw: Weight

    def check(self, aid: AlgebraId) -> None:
        if len(self.hw.hprime) != hprime_rank(aid):
            raise DomainError(f"label needs {hprime_rank(aid)} Dynkin entries for {aid}")
        for a in self.hw.hprime:
            if a.denominator != 1 or a < 0:
                raise DomainError(f"label {list(map(str, self.hw.hprime))} is not dominant integral")

    def to_json(self) -> dict:
        return self.hw.to_json()

    @classmethod
    def from_json(cls, d) -> "G0IrrepLabel":
        return cls(Weight.from_json(d))


def dimension(ch: FormalCharacter) -> int:
    return ch.total()


# Freudenthal ---------------------------------------------------------------

def _euclid(u, v) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


@lru_cache(maxsize=None)
def _even_data(aid: AlgebraId):
    b = distinguished_borel(aid)
    pos = [tuple(Fraction(c) for c in r.coords) for r in b.positive(Parity.EVEN)]
    simple = [tuple(Fraction(c) for c in r.coords) for r in b.even_simple]
    w = aid.width
    rho0 = tuple(sum((p[k] for p in pos), Fraction(0)) / 2 for k in range(w))
    return pos, simple, rho0


def _add(u, v, c=1):
    return tuple(a + c * b for a, b in zip(u, v))


@lru_cache(maxsize=4096)
def _freudenthal(aid: AlgebraId, hw: Weight) -> tuple[tuple[tuple[Fraction, ...], int], ...]:
    pos, simple, rho0 = _even_data(aid)
    lam = weight_coords(hw, aid)
    lr = _add(lam, rho0)
    top = _euclid(lr, lr)
    mult = {lam: 1}
    frontier = [lam]
    while frontier:
        cands = set()
        for mu in frontier:
            for a in simple:
                nu = _add(mu, a, -1)
                if nu not in mult:
                    cands.add(nu)
        frontier = []
        # all candidates at one level depend only on higher levels
        for mu in sorted(cands):
            num = Fraction(0)
            for a in pos:
                k = 1
                while True:
                    nu = _add(mu, a, k)
                    m = mult.get(nu)
                    if m is None:
                        break
                    num += m * _euclid(nu, a)
                    k += 1
            num *= 2
            mr = _add(mu, rho0)
            den = top - _euclid(mr, mr)
            if den == 0:
                if num != 0:
                    raise InternalInconsistency("Freudenthal: zero denominator with nonzero numerator")
                continue
            m = num / den
            if m.denominator != 1 or m < 0:
                raise InternalInconsistency(f"Freudenthal produced multiplicity {m}")
            if m:
                mult[mu] = int(m)
                frontier.append(mu)
    return tuple(mult.items())


def weyl_dimension(label: G0IrrepLabel, aid: AlgebraId) -> int:
    pos, _, rho0 = _even_data(aid)
    lam = weight_coords(label.hw, aid)
    val = prod((_euclid(_add(lam, rho0), a) / _euclid(rho0, a) for a in pos), start=Fraction(1))
    if val.denominator != 1:
        raise InternalInconsistency("Weyl dimension is not an integer")
    return int(val)


def weyl_character(label: G0IrrepLabel, aid: AlgebraId) -> FormalCharacter:
    label.check(aid)
    terms = [(coords_weight(c, aid), k) for c, k in _freudenthal(aid, label.hw)]
    ch = FormalCharacter(tuple(terms))
    if dimension(ch) != weyl_dimension(label, aid):
        raise InternalInconsistency("Freudenthal and Weyl dimension disagree")
    return ch


# odd part ------------------------------------------------------------------

def grassmann_character(aid: AlgebraId, super: bool = False) -> FormalCharacter:
    """Character of Lambda(g_{-1}); the super version weighs odd degree by -1."""
    sign = -1 if super else 1
    ch = FormalCharacter.unit(aid)
    for a in distinguished_borel(aid).positive(Parity.ODD):
        w = coords_weight(a.coords, aid)
        ch = ch * FormalCharacter(((Weight.zero(aid), 1), (-w, sign)))
    return ch


def kac_like_character(label: G0IrrepLabel, d: int, aid: AlgebraId,
                       super: bool = False) -> FormalCharacter:
    if d < 1:
        raise DomainError("dim A/k_Theta must be at least 1")
    return grassmann_character(aid, super) ** d * weyl_character(label, aid)


def adjoint_character(aid: AlgebraId) -> FormalCharacter:
    """Character of g_0' (the semisimple part of g_0) under h."""
    pos, _, _ = _even_data(aid)
    zero = Weight.zero(aid)
    terms = [(zero, hprime_rank(aid))]
    for a in pos:
        w = coords_weight(a, aid)
        terms += [(w, 1), (-w, 1)]
    return FormalCharacter(tuple(terms))


def g_minus_one_character(aid: AlgebraId) -> FormalCharacter:
    terms = [(-coords_weight(a.coords, aid), 1) for a in distinguished_borel(aid).positive(Parity.ODD)]
    return FormalCharacter(tuple(terms))


def _height(w: Weight, aid: AlgebraId) -> Fraction:
    _, _, rho0 = _even_data(aid)
    return _euclid(weight_coords(w, aid), rho0)


def decompose(ch: FormalCharacter, aid: AlgebraId) -> Counter:
    """Multiset of g_0 highest weights whose characters sum to ``ch``."""
    rest = ch.as_dict()
    out: Counter = Counter()
    while rest:
        w = max(rest, key=lambda u: (_height(u, aid), u))
        k = rest[w]
        lab = G0IrrepLabel(w)
        try:
            if k < 0:
                raise DomainError("negative leading multiplicity")
            lab.check(aid)
        except DomainError as exc:
            raise DomainError(f"not a module character: {exc}") from exc
        out[lab] += k
        for u, j in weyl_character(lab, aid).terms:
            v = rest.get(u, 0) - k * j
            if v:
                rest[u] = v
            else:
                rest.pop(u, None)
    return out
