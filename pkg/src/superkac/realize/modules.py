"""Explicit g[B]-modules with exact action matrices.

B is a finite-dimensional commutative coefficient algebra given by a
structure table (a ``TruncatedAlgebra`` or a ``ProductAlgebra`` of several).
Matrices are column maps ``{col: {row: fmpq}}`` and are built on demand.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from ..coeffalg import TruncatedAlgebra, ZFunctional
from ..config import limits
from ..errors import DomainError, PreconditionError
from ..linalg import ONE, ZERO, Echelon, q, vaxpy
from ..rootdata import Weight, root_weight
from .g0irreps import G0PrimeModule
from .matrices import MatrixSuperalgebra


class ProductAlgebra:
    """B_1 x ... x B_k with the block-diagonal product (one block per point)."""

    def __init__(self, parts: Sequence[TruncatedAlgebra]):
        self.parts = list(parts)
        self.offsets = []
        off = 0
        for p in self.parts:
            self.offsets.append(off)
            off += p.dim
        self.dim = off

    def locate(self, b: int) -> tuple[int, int]:
        for k in range(len(self.parts) - 1, -1, -1):
            if b >= self.offsets[k]:
                return k, b - self.offsets[k]
        raise IndexError(b)

    @cached_property
    def mult_table(self):
        tab = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
        for k, p in enumerate(self.parts):
            o = self.offsets[k]
            for a in range(p.dim):
                for b in range(p.dim):
                    tab[o + a][o + b] = {o + c: x for c, x in p.mult_table[a][b].items()}
        return tab

    def one(self) -> dict:
        return {o: Fraction(1) for o in self.offsets}


def unit_vector(B) -> dict:
    if isinstance(B, ProductAlgebra):
        return B.one()
    return {0: Fraction(1)}


class ExplicitModule:
    """A module over g[B] (or over g_0[B] when ``acts`` is the even part)."""

    def __init__(self, g: MatrixSuperalgebra, B, dim: int, parity: list[int],
                 weights: list[Weight], action: Callable[[int, int], dict],
                 acts: Sequence[int] | None = None, degree: list[int] | None = None,
                 name: str = "", meta: dict | None = None):
        self.g = g
        self.B = B
        self.dim = dim
        self.parity = parity
        self.weights = weights
        self._action = action
        self.acts = list(range(len(g))) if acts is None else list(acts)
        self.degree = degree
        self.name = name
        self.meta = meta or {}
        self._cache: dict = {}

    def __repr__(self):
        return f"ExplicitModule({self.name or '?'}, dim={self.dim})"

    def rho(self, i: int, b: int) -> dict:
        key = (i, b)
        if key not in self._cache:
            if i not in self.acts:
                raise DomainError(f"{self.g.elements[i].label} does not act on {self.name}")
            limits().check_module(self.dim)
            self._cache[key] = {c: col for c, col in self._action(i, b).items() if col}
        return self._cache[key]

    def op(self, gvec: dict, bvec: dict) -> dict:
        """Action of (sum gvec) (x) (sum bvec)."""
        out: dict = {}
        for i, x in gvec.items():
            for b, y in bvec.items():
                c = q(x) * q(y)
                if c == 0:
                    continue
                for col, v in self.rho(i, b).items():
                    vaxpy(out.setdefault(col, {}), v, c)
        return {k: v for k, v in out.items() if v}

    def apply(self, i: int, b: int, vec: dict) -> dict:
        out: dict = {}
        mat = self.rho(i, b)
        for j, c in vec.items():
            col = mat.get(j)
            if col:
                vaxpy(out, col, c)
        return out

    def apply_elem(self, gvec: dict, bvec: dict, vec: dict) -> dict:
        out: dict = {}
        for i, x in gvec.items():
            for b, y in bvec.items():
                c = q(x) * q(y)
                if c:
                    vaxpy(out, self.apply(i, b, vec), c)
        return out

    def generators(self, over: str = "gA") -> list[tuple[int, int]]:
        g = self.g
        if over == "g0A":
            idx = [i for i in g.even if i in self.acts]
        elif over == "gA":
            idx = [i for i in self.acts]
        else:
            raise ValueError(over)
        return [(i, b) for i in idx for b in range(self.B.dim)]

    def weight_index(self) -> dict[Weight, list[int]]:
        out: dict = {}
        for i, w in enumerate(self.weights):
            out.setdefault(w, []).append(i)
        return out


# Kac-like modules ---------------------------------------------------------

def theta_on(theta: ZFunctional, B: TruncatedAlgebra, b: int) -> Fraction:
    e = B.std_exps[b]
    return theta(e) if sum(e) < theta.n else Fraction(0)


def check_theta_vanishes(theta: ZFunctional, B: TruncatedAlgebra) -> None:
    for row in B.quotient_ideal:
        val = sum((x * (theta(B.basis[k]) if sum(B.basis[k]) < theta.n else 0)
                   for k, x in row), Fraction(0))
        if val != 0:
            raise PreconditionError("Theta does not vanish on the ideal; the Kac-like module is not defined")
    # monomials of degree >= B.order are zero in B, so Theta must vanish there too
    for e, v in theta.values:
        if sum(e) >= B.order:
            raise PreconditionError("Theta does not vanish on m^n for the truncation order")


def _popcount(x: int) -> int:
    return bin(x).count("1")


class KacLikeData:
    """Carrier bookkeeping for Lambda(g_{-1} (x) B) (x) (Theta [x] V)."""

    def __init__(self, g: MatrixSuperalgebra, B: TruncatedAlgebra, theta: ZFunctional, hprime):
        self.g, self.B, self.theta = g, B, theta
        check_theta_vanishes(theta, B)
        self.V = G0PrimeModule(g.aid, tuple(hprime))
        self.dV = self.V.dim
        # Grassmann generators, lexicographic on (root, monomial)
        self.ylist = [(g.y(r), a) for r in g.pos_odd for a in range(B.dim)]
        self.ypos = {y: t for t, y in enumerate(self.ylist)}
        self.L = len(self.ylist)
        self.dim = (1 << self.L) * self.dV
        self.theta_b = [q(theta_on(theta, B, b)) for b in range(B.dim)]
        self.const = 0 if B.std and B.std[0] == 0 else None
        self._vmat: dict = {}
        self._g0y: dict = {}
        self._xy: dict = {}
        self._g0cache: dict = {}

    # small tables ------------------------------------------------------------

    def vmat(self, u: int) -> dict:
        if u not in self._vmat:
            self._vmat[u] = self.V.matrix(self.g.elements[u].mat)
        return self._vmat[u]

    def _prod(self, a: int, b: int) -> dict:
        return self.B.mult_table[a][b]

    def g0y(self, u: int, t: int, c: int) -> dict:
        """[u, Y_t] (x) c as {t': coef}."""
        key = (u, t, c)
        if key not in self._g0y:
            yi, a = self.ylist[t]
            out: dict = {}
            br = self.g.bracket(u, yi)
            prod = self._prod(c, a)
            for k, x in br.items():
                for a2, y in prod.items():
                    t2 = self.ypos[(k, a2)]
                    out[t2] = out.get(t2, ZERO) + q(x) * q(y)
            self._g0y[key] = {k: v for k, v in out.items() if v}
        return self._g0y[key]

    def xy(self, x: int, t: int, b: int) -> dict:
        """[x, Y_t] (x) b as {(g0 index, c): coef}."""
        key = (x, t, b)
        if key not in self._xy:
            yi, a = self.ylist[t]
            out: dict = {}
            br = self.g.bracket(x, yi)
            prod = self._prod(b, a)
            for k, c1 in br.items():
                for c, c2 in prod.items():
                    out[(k, c)] = out.get((k, c), ZERO) + q(c1) * q(c2)
            self._xy[key] = {k: v for k, v in out.items() if v}
        return self._xy[key]

    # actions on basis vectors ----------------------------------------------------

    def act_g0(self, u: int, c: int, S: int, v: int) -> dict:
        key = (u, c, S, v)
        hit = self._g0cache.get(key)
        if hit is not None:
            return hit
        dV = self.dV
        out: dict = {}
        bits = [t for t in range(self.L) if S >> t & 1]
        for j, t in enumerate(bits):
            rest = S & ~(1 << t)
            for t2, coef in self.g0y(u, t, c).items():
                if rest >> t2 & 1:
                    continue
                sign = -1 if (j + _popcount(rest & ((1 << t2) - 1))) & 1 else 1
                idx = (rest | (1 << t2)) * dV + v
                y = out.get(idx, ZERO) + sign * coef
                if y == 0:
                    out.pop(idx, None)
                else:
                    out[idx] = y
        if u == self.g.z_index:
            th = self.theta_b[c]
            if th:
                idx = S * dV + v
                y = out.get(idx, ZERO) + th
                if y == 0:
                    out.pop(idx, None)
                else:
                    out[idx] = y
        elif c == self.const:
            col = self.vmat(u).get(v, {})
            base = S * dV
            for r, x in col.items():
                idx = base + r
                y = out.get(idx, ZERO) + x
                if y == 0:
                    out.pop(idx, None)
                else:
                    out[idx] = y
        self._g0cache[key] = out
        return out

    def act_y(self, yi: int, b: int, S: int, v: int) -> dict:
        t = self.ypos[(yi, b)]
        if S >> t & 1:
            return {}
        sign = -1 if _popcount(S & ((1 << t) - 1)) & 1 else 1
        return {(S | (1 << t)) * self.dV + v: q(sign)}

    def act_x(self, x: int, b: int, S: int, v: int) -> dict:
        dV = self.dV
        out: dict = {}
        bits = [t for t in range(self.L) if S >> t & 1]
        for j, t in enumerate(bits):
            prefix = S & ((1 << t) - 1)
            suffix = S & ~((1 << (t + 1)) - 1)
            sj = -1 if j & 1 else 1
            for (u, c), coef in self.xy(x, t, b).items():
                for idx, val in self.act_g0(u, c, suffix, v).items():
                    S2, v2 = divmod(idx, dV)
                    if S2 & prefix:
                        continue
                    inv = 0
                    for p in range(self.L):
                        if prefix >> p & 1:
                            inv += _popcount(S2 & ((1 << p) - 1))
                    s = -sj if inv & 1 else sj
                    key = (prefix | S2) * dV + v2
                    y = out.get(key, ZERO) + s * coef * val
                    if y == 0:
                        out.pop(key, None)
                    else:
                        out[key] = y
        return out

    def action(self, i: int, b: int) -> dict:
        grade = self.g.elements[i].grade
        mat = {}
        for S in range(1 << self.L):
            for v in range(self.dV):
                if grade == -1:
                    col = self.act_y(i, b, S, v)
                elif grade == 0:
                    col = self.act_g0(i, b, S, v)
                else:
                    col = self.act_x(i, b, S, v)
                if col:
                    mat[S * self.dV + v] = col
        return mat

    def parity(self) -> list[int]:
        return [_popcount(S) & 1 for S in range(1 << self.L) for _ in range(self.dV)]

    def degree(self) -> list[int]:
        return [_popcount(S) for S in range(1 << self.L) for _ in range(self.dV)]

    def weights(self) -> list[Weight]:
        g = self.g
        hvecs = [dict(g.elements[i].matrix) for i in g.hprime]
        vw = self.V.weights([[h.get((k, k), 0) for k in range(g.size)] for h in hvecs])
        z0 = Fraction(self.theta((0,) * self.theta.r))
        base = [Weight(tuple(Fraction(int(x.p), int(x.q)) for x in w), z0) for w in vw]
        yw = [g.weight(yi) for yi, _ in self.ylist]
        out = []
        for S in range(1 << self.L):
            shift = Weight.zero(g.aid)
            for t in range(self.L):
                if S >> t & 1:
                    shift = shift + yw[t]
            for v in range(self.dV):
                out.append(base[v] + shift)
        return out


def build_kac_like(g: MatrixSuperalgebra, B: TruncatedAlgebra, theta: ZFunctional,
                   hprime=None, name: str = "") -> ExplicitModule:
    """K_B(Theta [x] V) = Lambda(g_{-1}[B]) (x) (Theta [x] V) with the induced action."""
    if hprime is None:
        hprime = (0,) * len(g.hprime)
    hprime = tuple(int(x) for x in (hprime.hw.hprime if hasattr(hprime, "hw") else hprime))
    data = KacLikeData(g, B, theta, hprime)
    mod = ExplicitModule(g, B, data.dim, data.parity(), data.weights(), data.action,
                         degree=data.degree(), name=name or f"K[{g.aid}]",
                         meta={"kind": "kac", "theta": theta, "hprime": hprime, "data": data})
    return mod


def top_vector(mod: ExplicitModule) -> dict:
    """p (x) v+ : the top Grassmann element on the highest-weight vector of V."""
    data: KacLikeData = mod.meta["data"]
    return {((1 << data.L) - 1) * data.dV: ONE}


# g_0[B]-modules -----------------------------------------------------------

def build_g0_module(g: MatrixSuperalgebra, B: TruncatedAlgebra, theta: ZFunctional,
                    hprime) -> ExplicitModule:
    """Theta [x] V^m: z (x) b acts by Theta(z (x) b), g_0' (x) b by ev(b) rho_V."""
    data = KacLikeData(g, B, theta, hprime)
    dV = data.dV

    def action(i, b):
        return {v: data.act_g0(i, b, 0, v) for v in range(dV)}

    w = data.weights()[:dV]
    return ExplicitModule(g, B, dV, [0] * dV, w, action, acts=g.even,
                          name=f"L[{tuple(hprime)}]", meta={"kind": "g0", "theta": theta})


def ideal_basis(B: TruncatedAlgebra, ideal: TruncatedAlgebra) -> list[dict]:
    """Basis of ideal/m^N as vectors in B's standard coordinates (B = A/m^N)."""
    return [B.reduce(dict(row)) for row in ideal.quotient_ideal]


def build_gminus_ideal_module(g: MatrixSuperalgebra, B: TruncatedAlgebra,
                              ideal_vectors: list[dict]) -> ExplicitModule:
    """g_{-1} (x) K for an ideal K of B (given by a basis), as a g_0[B]-module."""
    ech = Echelon()
    rows = []
    for v in ideal_vectors:
        if ech.add({k: q(x) for k, x in v.items()}):
            rows.append(v)
    red = ech.fully_reduced()
    piv = sorted(red)
    kb = [red[p] for p in piv]
    pos = {p: n for n, p in enumerate(piv)}
    nk = len(kb)
    ys = [g.y(r) for r in g.pos_odd]
    yidx = {yi: n for n, yi in enumerate(ys)}

    def coords(vec: dict) -> dict:
        return {pos[p]: vec[p] for p in piv if vec.get(p)}

    def action(i, b):
        mat = {}
        for n, yi in enumerate(ys):
            br = g.bracket(i, yi)
            for kk in range(nk):
                prod: dict = {}
                for a, x in kb[kk].items():
                    for c, y in B.mult_table[b][a].items():
                        prod[c] = prod.get(c, ZERO) + x * q(y)
                prod = {k: v for k, v in prod.items() if v}
                kc = coords(prod)
                col: dict = {}
                for k, x in br.items():
                    for m, y in kc.items():
                        idx = yidx[k] * nk + m
                        col[idx] = col.get(idx, ZERO) + q(x) * y
                col = {k: v for k, v in col.items() if v}
                if col:
                    mat[n * nk + kk] = col
        return mat

    weights = [g.weight(yi) for yi in ys for _ in range(nk)]
    dim = len(ys) * nk
    return ExplicitModule(g, B, dim, [1] * dim, weights, action, acts=g.even,
                          name="g_-1[K]", meta={"kind": "gminus"})


def build_adjoint(g: MatrixSuperalgebra, B=None) -> ExplicitModule:
    """The adjoint g-module (over B = C, i.e. a one-dimensional algebra)."""
    B = B or TruncatedAlgebra(1, 1)
    n = len(g)

    def action(i, b):
        if b != 0 or B.dim != 1:
            raise DomainError("adjoint module is built over C only")
        mat = {}
        for j in range(n):
            col = {k: q(x) for k, x in g.bracket(i, j).items() if x}
            if col:
                mat[j] = col
        return mat

    return ExplicitModule(g, B, n, [g.parity(i) for i in range(n)],
                          [g.weight(i) for i in range(n)], action, name="adjoint")


# functorial constructions ---------------------------------------------------

def tensor(M: ExplicitModule, N: ExplicitModule, product: bool = False) -> ExplicitModule:
    """M (x) N.  With ``product`` the coefficient algebra becomes B_M x B_N and
    each factor only sees its own block; otherwise both share B."""
    g = M.g
    dN = N.dim
    if product:
        parts = (M.B.parts if isinstance(M.B, ProductAlgebra) else [M.B]) + \
                (N.B.parts if isinstance(N.B, ProductAlgebra) else [N.B])
        B = ProductAlgebra(parts)
        split = M.B.dim
    else:
        if M.B.dim != N.B.dim:
            raise DomainError("tensor factors must share the coefficient algebra")
        B = M.B
        split = None
    acts = [i for i in M.acts if i in N.acts]

    def left(i, b):
        out = {}
        for c, col in M.rho(i, b).items():
            for n in range(dN):
                out[c * dN + n] = {r * dN + n: x for r, x in col.items()}
        return out

    def right(i, b):
        out = {}
        odd = g.parity(i)
        for c, col in N.rho(i, b).items():
            for m in range(M.dim):
                s = -1 if (odd and M.parity[m]) else 1
                out[m * dN + c] = {m * dN + r: s * x for r, x in col.items()}
        return out

    def action(i, b):
        if split is not None:
            return left(i, b) if b < split else right(i, b - split)
        out = left(i, b)
        for c, col in right(i, b).items():
            acc = out.setdefault(c, {})
            vaxpy(acc, col, ONE)
        return out

    parity = [(p + r) & 1 for p in M.parity for r in N.parity]
    weights = [a + b for a in M.weights for b in N.weights]
    return ExplicitModule(g, B, M.dim * dN, parity, weights, action, acts=acts,
                          name=f"({M.name})x({N.name})")


def dual_module(M: ExplicitModule) -> ExplicitModule:
    """(x f)(m) = f(tau(x) m): the transpose of the action of tau(x)."""
    g = M.g

    def action(i, b):
        out: dict = {}
        for c, col in M.rho(g.transpose_index(i), b).items():
            for r, x in col.items():
                out.setdefault(r, {})[c] = x
        return out

    return ExplicitModule(g, M.B, M.dim, list(M.parity), list(M.weights), action,
                          acts=M.acts, degree=M.degree, name=f"({M.name})^v",
                          meta={"kind": "dual", "of": M})


def projection(src: TruncatedAlgebra, dst: TruncatedAlgebra) -> list[dict]:
    """Matrix of the algebra map src -> dst on standard bases (dst's ideal must
    contain src's, and both live at the same point)."""
    out = []
    for e in src.std_exps:
        if sum(e) >= dst.order:
            out.append({})
        else:
            out.append(dst.reduce({dst.index[e]: 1}))
    return out


def pullback(M: ExplicitModule, B: TruncatedAlgebra) -> ExplicitModule:
    """Inflate a g[B_M]-module to g[B] along B -> B_M."""
    P = projection(B, M.B)

    def action(i, b):
        out: dict = {}
        for c, x in P[b].items():
            for col, v in M.rho(i, c).items():
                vaxpy(out.setdefault(col, {}), v, q(x))
        return out

    return ExplicitModule(M.g, B, M.dim, list(M.parity), list(M.weights), action,
                          acts=M.acts, degree=M.degree, name=f"{M.name}^B",
                          meta=dict(M.meta, pulled_from=M))


def quotient(M: ExplicitModule, sub: Echelon) -> ExplicitModule:
    """M / W for a submodule W given by an echelon basis of weight vectors."""
    red = sub.fully_reduced()
    keep = [i for i in range(M.dim) if i not in red]
    pos = {i: n for n, i in enumerate(keep)}

    def action(i, b):
        mat = M.rho(i, b)
        out = {}
        for n, c in enumerate(keep):
            col = mat.get(c)
            if not col:
                continue
            col = dict(col)
            for p in [k for k in col if k in red]:
                x = col.pop(p)
                for k, y in red[p].items():
                    if k != p:
                        v = col.get(k, ZERO) - x * y
                        if v == 0:
                            col.pop(k, None)
                        else:
                            col[k] = v
            col = {pos[k]: v for k, v in col.items() if v}
            if col:
                out[n] = col
        return out

    deg = [M.degree[i] for i in keep] if M.degree else None
    return ExplicitModule(M.g, M.B, len(keep), [M.parity[i] for i in keep],
                          [M.weights[i] for i in keep], action, acts=M.acts, degree=deg,
                          name=f"{M.name}/W", meta=dict(M.meta, kind="quotient", quotient_of=M, keep=keep))


def trivial_module(g: MatrixSuperalgebra, B) -> ExplicitModule:
    return ExplicitModule(g, B, 1, [0], [Weight.zero(g.aid)], lambda i, b: {},
                          name="C", meta={"kind": "trivial"})


def embed(M: ExplicitModule, P: ProductAlgebra, k: int) -> ExplicitModule:
    """M over the k-th block of P, with the other blocks acting by zero."""
    part = P.parts[k]
    if part.dim != M.B.dim:
        raise DomainError("block and module coefficient algebras differ")
    lo, hi = P.offsets[k], P.offsets[k] + part.dim

    def action(i, b):
        return M.rho(i, b - lo) if lo <= b < hi else {}

    return ExplicitModule(M.g, P, M.dim, list(M.parity), list(M.weights), action,
                          acts=M.acts, degree=M.degree, name=f"{M.name}@{k}",
                          meta=dict(M.meta, embedded=k))
