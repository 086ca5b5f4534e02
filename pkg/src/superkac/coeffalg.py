"""Truncated local algebras C[t_1..t_r]/m^n, central functionals and k_Theta.

Monomials T^i (T_k = t_k - a_k) are exponent tuples.  The monomial basis of
A/m^n is ordered by total degree, then reverse-lexicographically, so the
constant monomial always has index 0.  A quotient A/I (with m^n in I) is
described by a basis of I/m^n; its standard monomials are the non-pivot
monomials after eliminating towards the highest index, so 1 survives
whenever I is proper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable

from .errors import DegenerateFunctional, DomainError, MalformedInput, ParameterError, PreconditionError
from .linalg import ONE, Echelon, frac, q
from .rootdata import Root, parse_rational, _rat

Exp = tuple[int, ...]


def monomials(r: int, n: int) -> list[Exp]:
    out = [e for e in product(range(n), repeat=r) if sum(e) < n]
    out.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return out


def leq(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True, order=True)
class Point:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) < 1:
            raise ParameterError("a point needs at least one coordinate")
        object.__setattr__(self, "coords", tuple(parse_rational(c) for c in self.coords))

    @property
    def r(self) -> int:
        return len(self.coords)

    def to_json(self) -> list[str]:
        return [_rat(c) for c in self.coords]

    @classmethod
    def from_json(cls, d) -> "Point":
        if not isinstance(d, list):
            raise DomainError("a point is a list of rationals")
        return cls(tuple(d))

    def __str__(self):
        return "(" + ", ".join(_rat(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class TruncatedAlgebra:
    """A/I for m^n inside I, presented on monomials of degree < n."""

    r: int
    order: int
    quotient_ideal: tuple[tuple[tuple[int, Fraction], ...], ...] = ()

    def __post_init__(self):
        if self.r < 1 or self.order < 1:
            raise ParameterError("need r >= 1 and n >= 1")
        # canonical, hashable ideal data: rows of (monomial index, value)
        rows = []
        for row in self.quotient_ideal:
            items = row.items() if isinstance(row, dict) else row
            clean = tuple(sorted((int(k), Fraction(v)) for k, v in items if v != 0))
            if clean:
                rows.append(clean)
        object.__setattr__(self, "quotient_ideal", tuple(rows))

    @classmethod
    def with_ideal(cls, r: int, n: int, vectors: Iterable[dict]) -> "TruncatedAlgebra":
        """Quotient by the ideal spanned (as a vector space) by ``vectors``,
        given as maps monomial-index -> scalar.  The span is closed up first."""
        base = cls(r, n)
        return cls(r, n, base._ideal_rows(base.ideal_closure(vectors)))

    @classmethod
    def from_monomials(cls, r: int, n: int, exps: Iterable[Exp]) -> "TruncatedAlgebra":
        base = cls(r, n)
        return cls.with_ideal(r, n, [{base.index[tuple(e)]: 1} for e in exps])

    # monomial structure ----------------------------------------------------

    @cached_property
    def basis(self) -> list[Exp]:
        return monomials(self.r, self.order)

    @cached_property
    def index(self) -> dict[Exp, int]:
        return {e: i for i, e in enumerate(self.basis)}

    def mono_mul(self, i: int, j: int) -> int | None:
        e = tuple(a + b for a, b in zip(self.basis[i], self.basis[j]))
        return self.index.get(e)

    def mul_full(self, u: dict, v: dict) -> dict:
        """Product in A/m^n of two vectors in monomial coordinates."""
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                k = self.mono_mul(i, j)
                if k is not None:
                    y = out.get(k, 0) + a * b
                    if y == 0:
                        out.pop(k, None)
                    else:
                        out[k] = y
        return out

    # ideal handling ----------------------------------------------------------

    def ideal_closure(self, vectors: Iterable[dict]) -> list[dict]:
        """Basis of the ideal of A/m^n generated by ``vectors``."""
        e = Echelon()
        todo = [{k: q(v) for k, v in vec.items() if v != 0} for vec in vectors]
        out = []
        while todo:
            v = todo.pop()
            key = self._rev(v)
            if e.add(key):
                out.append(v)
                for j in range(1, len(self.basis)):
                    w = self.mul_full(v, {j: ONE})
                    if w:
                        todo.append(w)
        return out

    def _rev(self, v: dict) -> dict:
        # flip indices so that Echelon's minimal pivot is the highest monomial
        top = len(self.basis) - 1
        return {top - k: q(x) for k, x in v.items() if x != 0}

    def _ideal_rows(self, vectors: list[dict]):
        e = Echelon()
        for v in vectors:
            e.add(self._rev(v))
        top = len(self.basis) - 1
        rows = []
        for p, row in e.fully_reduced().items():
            rows.append(tuple(sorted((top - k, frac(x)) for k, x in row.items())))
        return tuple(rows)

    @cached_property
    def _pivots(self) -> dict[int, dict[int, Fraction]]:
        """pivot monomial -> the rest of its ideal row (negated), i.e. a rewrite rule."""
        out = {}
        for row in self.quotient_ideal:
            d = dict(row)
            p = max(d)
            c = d.pop(p)
            out[p] = {k: -x / c for k, x in d.items()}
        return out

    @cached_property
    def std(self) -> list[int]:
        """Indices (into ``basis``) of the standard monomials spanning A/I."""
        return [i for i in range(len(self.basis)) if i not in self._pivots]

    @property
    def std_exps(self) -> list[Exp]:
        return [self.basis[i] for i in self.std]

    @property
    def dim(self) -> int:
        return len(self.std)

    @cached_property
    def _std_pos(self) -> dict[int, int]:
        return {i: k for k, i in enumerate(self.std)}

    def reduce(self, v: dict) -> dict[int, Fraction]:
        """Coordinates on the standard basis of the image of a full vector."""
        out: dict[int, Fraction] = {}
        for i, x in v.items():
            x = Fraction(x)
            if i in self._pivots:
                for k, y in self._pivots[i].items():
                    out[k] = out.get(k, Fraction(0)) + x * y
            else:
                out[i] = out.get(i, Fraction(0)) + x
        return {self._std_pos[i]: x for i, x in out.items() if x != 0}

    def lift(self, a: int) -> dict[int, Fraction]:
        return {self.std[a]: Fraction(1)}

    @cached_property
    def mult_table(self) -> list[list[dict[int, Fraction]]]:
        """mult_table[a][b]: product of standard basis elements a, b of A/I."""
        d = self.dim
        tab = [[{} for _ in range(d)] for _ in range(d)]
        for a in range(d):
            for b in range(a, d):
                k = self.mono_mul(self.std[a], self.std[b])
                prod = self.reduce({k: 1}) if k is not None else {}
                tab[a][b] = tab[b][a] = prod
        return tab

    def mul(self, u: dict, v: dict) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in self.mult_table[a][b].items():
                    out[c] = out.get(c, Fraction(0)) + x * y * z
        return {k: v for k, v in out.items() if v != 0}

    def ev(self, u: dict) -> Fraction:
        """Evaluation at the point: the constant coordinate (I lies in m)."""
        if not self.std or self.std[0] != 0:
            raise DomainError("the ideal is not proper")
        return Fraction(u.get(0, 0))

    def is_ideal(self) -> bool:
        rows = [dict(r) for r in self.quotient_ideal]
        full = Echelon()
        for r in rows:
            full.add(self._rev(r))
        for r in rows:
            for j in range(len(self.basis)):
                if not full.contains(self._rev(self.mul_full(r, {j: 1}))):
                    return False
        return True

    def ideal_dim(self) -> int:
        """dim I/m^n."""
        return len(self.quotient_ideal)

    def contains_ideal_of(self, other: "TruncatedAlgebra") -> bool:
        """True when other's ideal is inside this one's (same r, n)."""
        e = Echelon()
        for r in self.quotient_ideal:
            e.add(self._rev(dict(r)))
        return all(e.contains(self._rev(dict(r))) for r in other.quotient_ideal)

    def same_ideal(self, other: "TruncatedAlgebra") -> bool:
        return (self.r, self.order) == (other.r, other.order) and \
            self.contains_ideal_of(other) and other.contains_ideal_of(self)

    def full(self) -> "TruncatedAlgebra":
        return TruncatedAlgebra(self.r, self.order)

    def at_order(self, n: int) -> "TruncatedAlgebra":
        """The image of the same ideal I (+ m^n) presented at truncation order n."""
        if n == self.order:
            return self
        base = TruncatedAlgebra(self.r, n)
        vecs = []
        for row in self.quotient_ideal:
            v = {base.index[self.basis[k]]: x for k, x in row if sum(self.basis[k]) < n}
            if v:
                vecs.append(v)
        for e in base.basis:
            if sum(e) >= self.order:
                vecs.append({base.index[e]: 1})
        return TruncatedAlgebra.with_ideal(self.r, n, vecs)

    def cotangent_dim(self) -> int:
        """dim I/mI for the ideal I of A (computed one order higher)."""
        big = self.at_order(self.order + 1)
        rows = [dict(r) for r in big.quotient_ideal]
        gens = [big.mul_full(v, {big.index[e]: 1}) for v in rows for e in big.basis if sum(e) == 1]
        mI = big.ideal_closure([g for g in gens if g])
        return len(rows) - len(mI)

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.order,
                "ideal": [[{"exp": list(self.basis[k]), "val": _rat(x)} for k, x in row]
                          for row in self.quotient_ideal]}

    @classmethod
    def from_json(cls, d) -> "TruncatedAlgebra":
        try:
            r, n = int(d["r"]), int(d["n"])
            base = cls(r, n)
            vecs = [{base.index[tuple(it["exp"])]: parse_rational(it["val"]) for it in row}
                    for row in d.get("ideal", [])]
        except (KeyError, TypeError, AttributeError, IndexError) as exc:
            raise MalformedInput(f"malformed truncated algebra: {exc}") from exc
        return cls.with_ideal(r, n, vecs)

    def ideal_json(self) -> list[dict]:
        return [{"|".join(map(str, self.basis[k])): _rat(x) for k, x in row} for row in self.quotient_ideal]

    def __repr__(self):
        return f"TruncatedAlgebra(r={self.r}, n={self.order}, dim={self.dim})"


# functionals --------------------------------------------------------------

@dataclass(frozen=True)
class ZFunctional:
    """Theta(z (x) T^i) on the monomial basis of A/m^n."""

    r: int
    n: int
    values: tuple[tuple[Exp, Fraction], ...] = field(default=())

    def __post_init__(self):
        if self.r < 1 or self.n < 1:
            raise ParameterError("need r >= 1 and n >= 1")
        items = self.values.items() if isinstance(self.values, dict) else self.values
        clean = {}
        for e, v in items:
            e = tuple(int(x) for x in e)
            if len(e) != self.r or any(x < 0 for x in e):
                raise ParameterError(f"bad exponent {e} for r={self.r}")
            if sum(e) >= self.n:
                raise ParameterError(f"exponent {e} has degree >= n={self.n}")
            v = parse_rational(v)
            if v != 0:
                clean[e] = v
        object.__setattr__(self, "values", tuple(sorted(clean.items())))

    @classmethod
    def make(cls, r: int, n: int, values: dict) -> "ZFunctional":
        return cls(r, n, tuple(values.items()))

    def __call__(self, e: Exp) -> Fraction:
        return dict(self.values).get(tuple(e), Fraction(0))

    def on(self, alg: TruncatedAlgebra, v: dict) -> Fraction:
        """Theta on a vector of A/m^n in monomial coordinates."""
        vals = dict(self.values)
        return sum((Fraction(x) * vals.get(alg.basis[k], Fraction(0)) for k, x in v.items()), Fraction(0))

    def at_order(self, n: int) -> "ZFunctional":
        """Same functional on A/m^n (it must vanish on m^n)."""
        return ZFunctional(self.r, n, self.values)

    def algebra(self) -> TruncatedAlgebra:
        return TruncatedAlgebra(self.r, self.n)

    @property
    def constant(self) -> Fraction:
        """Theta(z (x) 1)."""
        return self((0,) * self.r)

    def is_zero(self) -> bool:
        return not self.values

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n,
                "values": [{"exp": list(e), "val": _rat(v)} for e, v in self.values]}

    @classmethod
    def from_json(cls, d) -> "ZFunctional":
        try:
            vals = {tuple(item["exp"]): item["val"] for item in d.get("values", [])}
            return cls(int(d["r"]), int(d["n"]), tuple(vals.items()))
        except (KeyError, TypeError, AttributeError, IndexError) as exc:
            raise MalformedInput(f"malformed functional: {exc}") from exc


def support_set(theta: ZFunctional) -> set[Exp]:
    return {e for e, _ in theta.values}


def maximal_support(theta: ZFunctional) -> set[Exp]:
    s = support_set(theta)
    if not s:
        raise DomainError("the functional has empty support")
    return {e for e in s if not any(f != e and leq(e, f) for f in s)}


def annihilator_ideal(theta: ZFunctional, alg: TruncatedAlgebra | None = None) -> TruncatedAlgebra:
    """A/k_Theta with k_Theta the kernel of (a, b) -> Theta(z (x) ab)."""
    if theta.is_zero():
        raise DegenerateFunctional("Theta vanishes identically; k_Theta is not unique")
    alg = alg or theta.algebra()
    if (alg.r, alg.order) != (theta.r, theta.n):
        raise ParameterError("functional and algebra have different shapes")
    base = alg.full()
    nb = len(base.basis)
    gram = [[theta(tuple(a + b for a, b in zip(base.basis[i], base.basis[j])))
             if sum(base.basis[i]) + sum(base.basis[j]) < base.order else Fraction(0)
             for j in range(nb)] for i in range(nb)]
    # kernel of the symmetric Gram matrix
    from .linalg import dense, nullspace
    ker = nullspace(dense(gram))
    vecs = [{k: frac(x) for k, x in enumerate(v) if x != 0} for v in ker]
    return TruncatedAlgebra(base.r, base.order, base._ideal_rows(vecs))


def vanishes_on_ideal(theta: ZFunctional, alg: TruncatedAlgebra) -> bool:
    """Theta(z (x) I) = 0 for the ideal of ``alg``."""
    return all(theta.on(alg, dict(row)) == 0 for row in alg.quotient_ideal)


def minimal_order(theta: ZFunctional) -> int:
    """min{l > 0 : Theta(z (x) m^l) = 0}."""
    s = support_set(theta)
    return 1 + max((sum(e) for e in s), default=-1) if s else 1


# the star pairing ---------------------------------------------------------

@dataclass(frozen=True)
class StarPartner:
    nhat: Exp

    def check(self, theta: ZFunctional) -> None:
        if tuple(self.nhat) not in maximal_support(theta):
            raise PreconditionError(f"{self.nhat} is not a maximal element of the support")


def star(mono: Exp, alpha: Root, partner: StarPartner) -> tuple[Root, Exp]:
    """(y_alpha (x) T^i)^star = x_alpha (x) T^(nhat - i)."""
    mono = tuple(mono)
    if len(mono) != len(partner.nhat) or not leq(mono, partner.nhat):
        raise PreconditionError(f"{mono} is not below {partner.nhat}")
    if not alpha.is_odd:
        raise PreconditionError(f"{alpha!r} is not odd")
    return alpha, tuple(a - b for a, b in zip(partner.nhat, mono))
