"""Root data for sl(m|n) and osp(2|2n) in epsilon/delta coordinates.

Coordinates are integer vectors: for sl(m|n) the first m entries are the
epsilon part and the last n the delta part; for osp(2|2n) the first entry
is epsilon and the remaining n are delta.  The invariant form is
(eps_i, eps_j) = delta_ij and (delta_i, delta_j) = -delta_ij.

Cartan elements are stored as "diagonal" vectors d of the same length, so
that a root with coordinates c takes the value sum(c_k d_k) on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product

from .errors import DomainError, InternalInconsistency, MalformedInput, ParameterError, PreconditionError
from .linalg import solve_unique


class Family(str, Enum):
    SL = "sl"
    OSP = "osp"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True, order=True)
class AlgebraId:
    family: Family
    m: int
    n: int

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam is Family.SL:
            if not (1 <= self.m <= self.n and self.n > 1):
                raise ParameterError(f"sl(m|n) needs 1 <= m <= n and n > 1, got m={self.m}, n={self.n}")
        else:
            if self.n <= 1:
                raise ParameterError(f"osp(2|2n) needs n > 1, got n={self.n}")
            object.__setattr__(self, "m", 1)

    @classmethod
    def sl(cls, m: int, n: int) -> "AlgebraId":
        return cls(Family.SL, m, n)

    @classmethod
    def osp(cls, n: int) -> "AlgebraId":
        return cls(Family.OSP, 1, n)

    @property
    def width(self) -> int:
        return self.m + self.n if self.family is Family.SL else 1 + self.n

    @property
    def signs(self) -> tuple[int, ...]:
        if self.family is Family.SL:
            return (1,) * self.m + (-1,) * self.n
        return (1,) + (-1,) * self.n

    def to_json(self) -> dict:
        return {"family": self.family.value, "m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, d: dict) -> "AlgebraId":
        try:
            return cls(Family(d["family"]), int(d.get("m", 1)), int(d["n"]))
        except (KeyError, TypeError, AttributeError) as exc:
            raise MalformedInput(f"malformed algebra id: {exc}") from exc
        except ValueError as exc:
            raise ParameterError(str(exc)) from exc

    def __str__(self):
        if self.family is Family.SL:
            return f"sl({self.m}|{self.n})"
        return f"osp(2|{2 * self.n})"


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple[int, ...]
    parity: Parity = field(compare=False)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), self.parity)

    def __add__(self, other: "Root") -> "Root":
        c = tuple(a + b for a, b in zip(self.coords, other.coords))
        par = Parity.EVEN if (self.parity == other.parity) else Parity.ODD
        return Root(c, par)

    @property
    def is_odd(self) -> bool:
        return self.parity is Parity.ODD

    def to_json(self) -> list[int]:
        return list(self.coords)

    def __repr__(self):
        return f"Root({list(self.coords)}, {self.parity.value})"


def _unit(w: int, i: int, s: int = 1) -> list[int]:
    v = [0] * w
    v[i] = s
    return v


@lru_cache(maxsize=None)
def all_roots(aid: AlgebraId) -> tuple[Root, ...]:
    w = aid.width
    out = []
    if aid.family is Family.SL:
        m, n = aid.m, aid.n
        for i in range(m + n):
            for j in range(m + n):
                if i == j:
                    continue
                c = [0] * w
                c[i], c[j] = 1, -1
                odd = (i < m) != (j < m)
                out.append(Root(tuple(c), Parity.ODD if odd else Parity.EVEN))
    else:
        n = aid.n
        for i in range(1, n + 1):
            for s in (1, -1):
                for t in (1, -1):
                    c = [0] * w
                    c[0], c[i] = s, t
                    out.append(Root(tuple(c), Parity.ODD))
            for s in (1, -1):
                c = [0] * w
                c[i] = 2 * s
                out.append(Root(tuple(c), Parity.EVEN))
            for j in range(i + 1, n + 1):
                for s, t in product((1, -1), repeat=2):
                    c = [0] * w
                    c[i], c[j] = s, t
                    out.append(Root(tuple(c), Parity.EVEN))
    return tuple(sorted(out))


def roots_by_parity(aid: AlgebraId, parity: Parity) -> tuple[Root, ...]:
    return tuple(r for r in all_roots(aid) if r.parity is parity)


def _lookup(aid: AlgebraId, coords) -> Root:
    coords = tuple(coords)
    for r in all_roots(aid):
        if r.coords == coords:
            return r
    raise DomainError(f"{list(coords)} is not a root of {aid}")


def root(aid: AlgebraId, coords) -> Root:
    """The root of ``aid`` with the given coordinates (parity filled in)."""
    return _lookup(aid, coords)


def form(aid: AlgebraId, u, v) -> int:
    cu = u.coords if isinstance(u, Root) else u
    cv = v.coords if isinstance(v, Root) else v
    return sum(s * a * b for s, a, b in zip(aid.signs, cu, cv))


def is_root(aid: AlgebraId, r: Root) -> bool:
    return any(x.coords == r.coords and x.parity == r.parity for x in all_roots(aid))


def pairing(beta: Root, alpha: Root, aid: AlgebraId) -> Fraction:
    """beta(h_alpha).

    For non-isotropic alpha this is 2(beta, alpha)/(alpha, alpha); for
    isotropic odd alpha it is (beta, alpha), which matches
    h_alpha = [x_alpha, y_alpha] for elementary-matrix root vectors.
    """
    for r in (alpha, beta):
        if not is_root(aid, r):
            raise DomainError(f"{r!r} is not a root of {aid}")
    aa = form(aid, alpha, alpha)
    ba = form(aid, beta, alpha)
    if aa == 0:
        return Fraction(ba)
    return Fraction(2 * ba, aa)


def coroot_vector(alpha: Root, aid: AlgebraId) -> tuple[Fraction, ...]:
    """Diagonal vector of h_alpha."""
    aa = form(aid, alpha, alpha)
    scale = Fraction(1) if aa == 0 else Fraction(2, aa)
    return tuple(scale * s * c for s, c in zip(aid.signs, alpha.coords))


def z_vector(aid: AlgebraId) -> tuple[Fraction, ...]:
    """Diagonal vector of the fixed central element z of g_0.

    Normalised so that ad z is +1 on g_1 and -1 on g_{-1}; for sl(n|n),
    where no such element lies in g, z is the identity matrix.
    """
    if aid.family is Family.OSP:
        return (Fraction(1),) + (Fraction(0),) * aid.n
    m, n = aid.m, aid.n
    if m == n:
        return (Fraction(1),) * (m + n)
    return (Fraction(n, n - m),) * m + (Fraction(m, n - m),) * n


def evaluate(coords, d) -> Fraction:
    return sum((Fraction(c) * x for c, x in zip(coords, d)), Fraction(0))


# Borels ---------------------------------------------------------------------

def _coefficients(target, simple: tuple[Root, ...]) -> list[Fraction] | None:
    cols = [list(s.coords) for s in simple]
    return solve_unique(cols, list(target))


@dataclass(frozen=True)
class BorelChoice:
    aid: AlgebraId
    simple_roots: tuple[Root, ...]
    reflection_chain: tuple[Root, ...] = ()

    @cached_property
    def expansions(self) -> dict[Root, tuple[Fraction, ...]]:
        out = {}
        for r in all_roots(self.aid):
            c = _coefficients(r.coords, self.simple_roots)
            if c is None:
                raise InternalInconsistency(f"{r!r} is outside the span of {self.simple_roots}")
            out[r] = tuple(c)
        return out

    def validate(self) -> None:
        if len(self.simple_roots) != len(all_roots(self.aid)[0].coords) - (1 if self.aid.family is Family.SL else 0):
            raise InternalInconsistency("wrong number of simple roots")
        for r, c in self.expansions.items():
            if any(x.denominator != 1 for x in c):
                raise InternalInconsistency(f"{r!r} is not an integer combination of simple roots")
            if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                raise InternalInconsistency(f"{r!r} has mixed signs over {self.simple_roots}")

    def is_positive(self, r: Root) -> bool:
        return all(x >= 0 for x in self.expansions[r])

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in all_roots(self.aid) if self.is_positive(r))

    def positive(self, parity: Parity | None = None) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if parity is None or r.parity is parity)

    @property
    def even_simple(self) -> tuple[Root, ...]:
        return tuple(r for r in self.simple_roots if not r.is_odd)

    @property
    def odd_simple(self) -> tuple[Root, ...]:
        return tuple(r for r in self.simple_roots if r.is_odd)

    def to_json(self) -> dict:
        return {
            "simple_roots": [r.to_json() for r in self.simple_roots],
            "parities": [r.parity.value for r in self.simple_roots],
            "reflection_chain": [r.to_json() for r in self.reflection_chain],
        }


def distinguished_borel(aid: AlgebraId) -> BorelChoice:
    w = aid.width
    simple = []
    if aid.family is Family.SL:
        for i in range(aid.m + aid.n - 1):
            c = [0] * w
            c[i], c[i + 1] = 1, -1
            simple.append(root(aid, c))
    else:
        n = aid.n
        c = [0] * w
        c[0], c[1] = 1, -1
        simple.append(root(aid, c))
        for i in range(1, n):
            c = [0] * w
            c[i], c[i + 1] = 1, -1
            simple.append(root(aid, c))
        simple.append(root(aid, _unit(w, n, 2)))
    b = BorelChoice(aid, tuple(simple))
    b.validate()
    return b


def odd_reflection(delta: BorelChoice, alpha: Root) -> BorelChoice:
    aid = delta.aid
    if alpha not in delta.simple_roots:
        raise PreconditionError(f"{alpha!r} is not simple in {delta.simple_roots}")
    if not alpha.is_odd:
        raise PreconditionError(f"{alpha!r} is not odd")
    if pairing(alpha, alpha, aid) != 0:
        raise PreconditionError(f"{alpha!r} is not isotropic")
    new = []
    for beta in delta.simple_roots:
        if beta == alpha:
            new.append(-alpha)
        elif pairing(alpha, beta, aid) != 0 or pairing(beta, alpha, aid) != 0:
            new.append(root(aid, (beta + alpha).coords))
        else:
            new.append(beta)
    out = BorelChoice(aid, tuple(new), delta.reflection_chain + (alpha,))
    out.validate()
    return out


def apply_chain(delta: BorelChoice, chain) -> BorelChoice:
    for a in chain:
        delta = odd_reflection(delta, a)
    return delta


def reachable_borels(aid: AlgebraId, depth: int = 2) -> list[BorelChoice]:
    """Simple-root sets reachable from the distinguished one by at most ``depth`` odd reflections."""
    seen = {}
    frontier = [distinguished_borel(aid)]
    for b in frontier:
        seen[frozenset(b.simple_roots)] = b
    for _ in range(depth):
        nxt = []
        for b in frontier:
            for a in b.odd_simple:
                if pairing(a, a, aid) != 0:
                    continue
                c = odd_reflection(b, a)
                key = frozenset(c.simple_roots)
                if key not in seen:
                    seen[key] = c
                    nxt.append(c)
        frontier = nxt
    return list(seen.values())


# Cartan data ------------------------------------------------------------------

@lru_cache(maxsize=None)
def cartan_basis(aid: AlgebraId) -> tuple[tuple[str, tuple[Fraction, ...]], ...]:
    """Basis of h: Chevalley coroots of the even simple roots, then z."""
    b = distinguished_borel(aid)
    out = [(f"h{k}", coroot_vector(r, aid)) for k, r in enumerate(b.even_simple)]
    out.append(("z", z_vector(aid)))
    return tuple(out)


def hprime_rank(aid: AlgebraId) -> int:
    return len(distinguished_borel(aid).even_simple)


def z_decomposition(beta: Root, aid: AlgebraId) -> tuple[Fraction, list[Fraction]]:
    """Coefficients with z = c_beta h_beta + sum_i c_i h_i."""
    b = distinguished_borel(aid)
    if not (beta.is_odd and b.is_positive(beta)):
        raise PreconditionError(f"{beta!r} is not a positive odd root")
    cols = [list(coroot_vector(beta, aid))] + [list(coroot_vector(r, aid)) for r in b.even_simple]
    sol = solve_unique(cols, list(z_vector(aid)))
    if sol is None or sol[0] == 0:
        raise InternalInconsistency(f"z is not of the required form for {beta!r}")
    return sol[0], sol[1:]


def cartan_matrix(roots: tuple[Root, ...], aid: AlgebraId) -> list[list[int]]:
    return [[int(pairing(aj, ai, aid)) for aj in roots] for ai in roots]


# weights ------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Weight:
    """A functional on h: values on the even simple coroots, then on z."""

    hprime: tuple[Fraction, ...]
    z: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "hprime", tuple(Fraction(x) for x in self.hprime))
        object.__setattr__(self, "z", Fraction(self.z))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.hprime, other.hprime)), self.z + other.z)

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.hprime), -self.z)

    def __mul__(self, k) -> "Weight":
        return Weight(tuple(k * a for a in self.hprime), k * self.z)

    __rmul__ = __mul__

    @classmethod
    def zero(cls, aid: AlgebraId) -> "Weight":
        return cls((Fraction(0),) * hprime_rank(aid), Fraction(0))

    def is_zero(self) -> bool:
        return self.z == 0 and all(a == 0 for a in self.hprime)

    def values(self) -> tuple[Fraction, ...]:
        return self.hprime + (self.z,)

    def to_json(self) -> dict:
        return {"hprime": [_rat(a) for a in self.hprime], "z": _rat(self.z)}

    @classmethod
    def from_json(cls, d) -> "Weight":
        try:
            return cls(tuple(parse_rational(a) for a in d["hprime"]), parse_rational(d.get("z", "0")))
        except (KeyError, TypeError, AttributeError) as exc:
            raise MalformedInput(f"malformed weight: {exc}") from exc


def _rat(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise DomainError(f"not a rational: {s!r}")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {s!r}") from exc
    raise DomainError(f"not a rational: {s!r}")


def coords_weight(coords, aid: AlgebraId) -> Weight:
    vals = [evaluate(coords, d) for _, d in cartan_basis(aid)]
    return Weight(tuple(vals[:-1]), vals[-1])


def root_weight(r: Root, aid: AlgebraId) -> Weight:
    return coords_weight(r.coords, aid)


def weight_coords(wt: Weight, aid: AlgebraId) -> tuple[Fraction, ...]:
    """Some epsilon/delta coordinate vector restricting to ``wt`` on h."""
    basis = cartan_basis(aid)
    w = aid.width
    # unknown coordinate vector c with sum_k c_k d_k = value for each basis element
    cols = [[d[k] for _, d in basis] for k in range(w)]
    sol = solve_unique(cols, list(wt.values()))
    if sol is None:
        raise InternalInconsistency("weight has no coordinate representative")
    return tuple(sol)


def rho(aid: AlgebraId) -> tuple[Fraction, ...]:
    """rho = rho_0 - rho_1 for the distinguished Borel, in coordinates."""
    b = distinguished_borel(aid)
    w = aid.width
    acc = [Fraction(0)] * w
    for r in b.positive_roots:
        s = Fraction(-1, 2) if r.is_odd else Fraction(1, 2)
        for k in range(w):
            acc[k] += s * r.coords[k]
    return tuple(acc)


def is_typical(wt: Weight, aid: AlgebraId) -> bool:
    """(lambda + rho, alpha) != 0 for every positive odd root alpha."""
    c = weight_coords(wt, aid)
    r = rho(aid)
    lr = tuple(a + b for a, b in zip(c, r))
    return all(form(aid, lr, a) != 0 for a in distinguished_borel(aid).positive(Parity.ODD))
