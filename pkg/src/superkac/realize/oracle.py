"""Brute-force checks on explicit modules: submodules, Hom, Ext^1, highest weights."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ..coeffalg import StarPartner, TruncatedAlgebra, leq, monomials
from ..config import limits
from ..errors import InternalInconsistency, PreconditionError, SearchFailure
from ..linalg import ONE, ZERO, Echelon, apply, certified_quotient_dim, compose, frac, madd, max_abs, q, vaxpy
from ..rootdata import BorelChoice, Parity, Weight, distinguished_borel
from .modules import ExplicitModule, KacLikeData, build_kac_like, top_vector


# generators ----------------------------------------------------------------

def generators(mod: ExplicitModule, over: str = "gA", borel: BorelChoice | None = None) -> list[tuple[int, int]]:
    """A generating set of g[B] (or g_0[B]): simple root vectors of both signs
    and the Cartan subalgebra, each tensored with every basis element of B."""
    g = mod.g
    b = borel or distinguished_borel(g.aid)
    simple = list(b.even_simple) if over == "g0A" else list(b.even_simple) + list(b.odd_simple)
    idx = []
    for r in simple:
        idx += [g.by_root[r.coords], g.by_root[tuple(-c for c in r.coords)]]
    idx += g.cartan
    idx = [i for i in idx if i in mod.acts]
    return [(i, c) for i in idx for c in range(mod.B.dim)]


def closure(mod: ExplicitModule, seeds, gens=None, transpose: bool = False) -> Echelon:
    """Smallest subspace containing ``seeds`` and stable under ``gens``.

    With ``transpose`` the transposed operators are used, which computes the
    annihilator-dual picture needed for maximal submodules."""
    gens = gens if gens is not None else generators(mod)
    mats = []
    for i, b in gens:
        m = mod.rho(i, b)
        if transpose:
            t: dict = {}
            for c, col in m.items():
                for r, x in col.items():
                    t.setdefault(r, {})[c] = x
            m = t
        mats.append(m)
    ech = Echelon()
    todo = []
    for s in seeds:
        if ech.add({k: q(x) for k, x in s.items()}):
            todo.append(s)
    while todo:
        v = todo.pop()
        for m in mats:
            w = apply(m, v)
            if w and ech.add(w):
                todo.append(w)
    return ech


# maximal submodule ---------------------------------------------------------

def _component_key(mod: ExplicitModule, i: int):
    # Kac-like carriers and their quotients have graded submodules
    if mod.degree is not None and mod.meta.get("kind") != "dual":
        return (mod.weights[i], mod.degree[i])
    return (mod.weights[i], None)


def maximal_submodule(mod: ExplicitModule, cyclic: int = 0) -> Echelon:
    """Maximal proper submodule of a module generated by the basis vector
    ``cyclic`` whose homogeneous component is one-dimensional.

    It is the common kernel of e*_cyclic(u .) over all u, i.e. the
    annihilator of the transposed closure of e*_cyclic."""
    key = _component_key(mod, cyclic)
    same = [i for i in range(mod.dim) if _component_key(mod, i) == key]
    if len(same) != 1:
        raise PreconditionError("cyclic vector does not span its homogeneous component")
    gens = generators(mod)
    dual = closure(mod, [{cyclic: ONE}], gens, transpose=True)
    red = dual.fully_reduced()
    # annihilator of span(red rows): null space of the rows
    ann = Echelon()
    piv = set(red)
    for f in range(mod.dim):
        if f in piv:
            continue
        v = {f: ONE}
        for p, row in red.items():
            c = row.get(f)
            if c is not None:
                v[p] = -c
        ann.add(v)
    return ann


@dataclass(frozen=True)
class SubmoduleReport:
    is_irreducible: bool
    maximal_submodule_dim: int
    omega_dim: int | None = None
    z_part_dim: int | None = None
    cyclic: bool = True

    def to_json(self) -> dict:
        return {"is_irreducible": self.is_irreducible,
                "maximal_submodule_dim": self.maximal_submodule_dim,
                "omega_dim": self.omega_dim, "z_part_dim": self.z_part_dim}


def submodule_search(mod: ExplicitModule) -> SubmoduleReport:
    gens = generators(mod)
    span = closure(mod, [{0: ONE}], gens)
    cyclic = len(span) == mod.dim
    if not cyclic:
        # the cyclic submodule itself is proper
        return SubmoduleReport(False, -1, cyclic=False)
    W = maximal_submodule(mod, 0)
    omega = zpart = None
    if mod.meta.get("kind") == "kac":
        omega, zpart = _omega_z(mod)
    return SubmoduleReport(len(W) == 0, len(W), omega, zpart)


def _omega_z(mod: ExplicitModule) -> tuple[int, int]:
    from ..coeffalg import annihilator_ideal, ZFunctional
    data: KacLikeData = mod.meta["data"]
    theta = data.theta
    k = annihilator_ideal(theta)
    small = (1 << (len(data.g.pos_odd) * k.dim)) * data.dV
    omega = mod.dim - small
    zpart = 0
    if k.dim == 1:
        C = TruncatedAlgebra(theta.r, 1)
        th0 = ZFunctional.make(theta.r, 1, {(0,) * theta.r: theta.constant})
        K0 = build_kac_like(data.g, C, th0, data.V.hprime)
        zpart = len(maximal_submodule(K0, 0))
    return omega, zpart


def irreducible_quotient(mod: ExplicitModule) -> ExplicitModule:
    from .modules import quotient
    return quotient(mod, maximal_submodule(mod, 0))


# highest-weight vectors ------------------------------------------------------

@dataclass
class HighestWeightVector:
    vector: dict
    weight: Weight
    psi: dict = field(default_factory=dict)   # (cartan label, b) -> eigenvalue


def highest_weight_vector(mod: ExplicitModule, borel: BorelChoice) -> HighestWeightVector:
    """Line killed by n+(borel)[B]; its h[B] eigenvalues."""
    g = mod.g
    simple = list(borel.even_simple) + list(borel.odd_simple)
    rows = Echelon()
    for r in simple:
        i = g.by_root[r.coords]
        for b in range(mod.B.dim):
            m = mod.rho(i, b)
            byrow: dict = {}
            for c, col in m.items():
                for rr, x in col.items():
                    byrow.setdefault(rr, {})[c] = x
            for row in byrow.values():
                rows.add(row)
    red = rows.fully_reduced()
    free = [f for f in range(mod.dim) if f not in red]
    if len(free) != 1:
        raise SearchFailure(f"expected a single highest-weight line, found dimension {len(free)}")
    f = free[0]
    v = {f: ONE}
    for p, row in red.items():
        c = row.get(f)
        if c is not None:
            v[p] = -c
    wts = {mod.weights[k] for k in v}
    if len(wts) != 1:
        raise InternalInconsistency("highest-weight line is not a weight vector")
    psi = {}
    k0 = min(v)
    for h in g.cartan:
        for b in range(mod.B.dim):
            w = apply(mod.rho(h, b), v)
            lam = w.get(k0, ZERO) / v[k0]
            if any(w.get(k, ZERO) != lam * v.get(k, ZERO) for k in set(w) | set(v)):
                raise InternalInconsistency("h[B] does not act by scalars on the highest-weight line")
            psi[(g.elements[h].label, b)] = frac(lam)
    return HighestWeightVector({k: frac(x) for k, x in v.items()}, wts.pop(), psi)


# Hom ----------------------------------------------------------------------

def _matched_pairs(mod2: ExplicitModule, mod1: ExplicitModule, shift: Weight):
    """Entries (r, c) with weight(r) = weight(c) + shift."""
    by_w = mod2.weight_index()
    pairs = []
    for c, w in enumerate(mod1.weights):
        for r in by_w.get(w + shift, ()):
            pairs.append((r, c))
    return pairs


def _rows_of(m: dict) -> dict:
    out: dict = {}
    for c, col in m.items():
        for r, x in col.items():
            out.setdefault(r, {})[c] = x
    return out


def hom_space(mod1: ExplicitModule, mod2: ExplicitModule, over: str = "gA") -> list[dict]:
    """Basis of {phi : phi rho1(X) = rho2(X) phi} as column maps (plain maps)."""
    if mod1.B.dim != mod2.B.dim:
        raise PreconditionError("modules must share the coefficient algebra")
    zero = Weight.zero(mod1.g.aid)
    pairs = _matched_pairs(mod2, mod1, zero)
    if not pairs:
        return []
    uid = {p: n for n, p in enumerate(pairs)}
    by_col: dict = {}
    by_row: dict = {}
    for (r, c), n in uid.items():
        by_col.setdefault(c, []).append((r, n))
        by_row.setdefault(r, []).append((c, n))
    gens = [x for x in generators(mod1, over) if x[0] in mod2.acts]
    ech = Echelon()
    N = len(pairs)
    for i, b in gens:
        r1 = mod1.rho(i, b)
        r2 = mod2.rho(i, b)
        eqs: dict = {}
        # (rho2 phi)[r, c] = sum_k rho2[r, k] phi[k, c]
        for (k, c), n in uid.items():
            for r, x in r2.get(k, {}).items():
                e = eqs.setdefault((r, c), {})
                e[n] = e.get(n, ZERO) + x
        # (phi rho1)[r, c] = sum_k phi[r, k] rho1[k, c]
        for c, col in r1.items():
            for k, x in col.items():
                for r, n in by_col.get(k, ()):
                    e = eqs.setdefault((r, c), {})
                    e[n] = e.get(n, ZERO) - x
        for e in eqs.values():
            e = {k: v for k, v in e.items() if v}
            if e:
                ech.add(e)
        if len(ech) == N:
            return []
    red = ech.fully_reduced()
    basis = []
    for f in range(N):
        if f in red:
            continue
        v = {f: ONE}
        for p, row in red.items():
            c = row.get(f)
            if c is not None:
                v[p] = -c
        phi: dict = {}
        for n, x in v.items():
            r, c = pairs[n]
            phi.setdefault(c, {})[r] = x
        basis.append(phi)
    return basis


# Ext^1 via degree-one cochains --------------------------------------------------

def _bracket_vec(g, Bm, nB: int, u: dict, v: dict) -> dict:
    out: dict = {}
    for x, cx in u.items():
        i, a = divmod(x, nB)
        for y, cy in v.items():
            j, b = divmod(y, nB)
            for k, c1 in g.bracket(i, j).items():
                for cc, c2 in Bm[a][b].items():
                    key = k * nB + cc
                    val = out.get(key, ZERO) + cx * cy * q(c1) * q(c2)
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
    return out


def lie_generating_set(g, B) -> list[tuple[int, int]]:
    """A small set of basis elements u (x) b generating g[B] as a Lie superalgebra.

    Candidates are tried greedily (simple root vectors on the first basis
    element of B, then cartan elements, then everything) and kept only when
    they are not already in the subalgebra generated so far."""
    nB = B.dim
    Bm = B.mult_table
    simple = []
    for r in distinguished_borel(g.aid).simple_roots:
        simple += [g.x(r), g.y(r)]
    cand = [(i, 0) for i in simple]
    cand += [(i, b) for b in range(nB) for i in g.cartan]
    cand += [(i, b) for b in range(nB) for i in simple]
    cand += [(i, b) for i in range(len(g)) for b in range(nB)]
    S: list = []
    span = Echelon()
    vecs: list = []
    total = len(g) * nB
    for i, b in cand:
        if len(span) == total:
            break
        e = {i * nB + b: ONE}
        if span.contains(e):
            continue
        S.append((i, b))
        queue = [e]
        span.add(e)
        vecs.append(e)
        while queue:
            v = queue.pop()
            for s in S:
                w = _bracket_vec(g, Bm, nB, {s[0] * nB + s[1]: ONE}, v)
                if w and span.add(w):
                    vecs.append(w)
                    queue.append(w)
            # the new generator also acts on everything spanned before it
            if v is e:
                for w0 in list(vecs):
                    w = _bracket_vec(g, Bm, nB, e, w0)
                    if w and span.add(w):
                        vecs.append(w)
                        queue.append(w)
    return S


def ext1_koszul(mod1: ExplicitModule, mod2: ExplicitModule) -> int:
    """dim H^1(g[B], Hom(M1, M2)) in the weight-zero part.

    Cochains c(u (x) b) are plain linear maps M1 -> M2 of both parities, so
    the answer counts extensions by M2 and by its parity shift together.
    Elements X with dc(X, .) = 0 form a subalgebra, so the cocycle equations
    are imposed only for X in a generating set."""
    g = mod1.g
    if mod1.B.dim != mod2.B.dim:
        raise PreconditionError("modules must share the coefficient algebra")
    Bm = mod1.B.mult_table
    nB = mod1.B.dim
    elems = [(i, b) for i in range(len(g)) for b in range(nB)]
    blocks = {}
    off = 0
    for i, b in elems:
        prs = _matched_pairs(mod2, mod1, g.weight(i))
        blocks[(i, b)] = (off, prs, {p: off + n for n, p in enumerate(prs)})
        off += len(prs)
    ncoch = off
    limits().check_cochains(ncoch)
    if ncoch == 0:
        return 0
    phi_pairs = _matched_pairs(mod2, mod1, Weight.zero(g.aid))
    homdim = len(hom_space(mod1, mod2, "gA"))

    rows1 = {}

    def R1(X):
        if X not in rows1:
            rows1[X] = _rows_of(mod1.rho(*X))
        return rows1[X]

    equations = []
    for X in lie_generating_set(g, mod1.B):
        for Y in elems:
            (i, a), (j, b) = X, Y
            s = -1 if (g.parity(i) and g.parity(j)) else 1
            eqs: dict = {}

            def add(key, n, x):
                e = eqs.setdefault(key, {})
                y = e.get(n, ZERO) + x
                if y == 0:
                    e.pop(n, None)
                else:
                    e[n] = y

            # -c([X, Y])
            for k, c1 in g.bracket(i, j).items():
                for cc, c2 in Bm[a][b].items():
                    coef = -q(c1) * q(c2)
                    _, prs, uid = blocks[(k, cc)]
                    for (r, col) in prs:
                        add((r, col), uid[(r, col)], coef)
            # rho2(X) c(Y) - s rho2(Y) c(X)
            for (P, Q, sg) in ((X, Y, ONE), (Y, X, q(-s))):
                m2 = mod2.rho(*P)
                _, prs, uid = blocks[Q]
                for (k, col) in prs:
                    for r, x in m2.get(k, {}).items():
                        add((r, col), uid[(k, col)], sg * x)
            # c(X) rho1(Y) - s c(Y) rho1(X)
            for (P, Q, sg) in ((X, Y, ONE), (Y, X, q(-s))):
                rows = R1(Q)
                _, prs, uid = blocks[P]
                for (r, k) in prs:
                    for col, x in rows.get(k, {}).items():
                        add((r, col), uid[(r, k)], sg * x)
            equations += [e for e in eqs.values() if e]

    # coboundaries of the elementary weight-zero maps
    cob = []
    for (r, c) in phi_pairs:
        v: dict = {}
        for Y in elems:
            _, _, uid = blocks[Y]
            for r2, x in mod2.rho(*Y).get(r, {}).items():
                n = uid[(r2, c)]
                v[n] = v.get(n, ZERO) + x
            for c2, x in R1(Y).get(c, {}).items():
                n = uid[(r, c2)]
                v[n] = v.get(n, ZERO) - x
        cob.append({n: x for n, x in v.items() if x})
    return certified_quotient_dim(equations, ncoch, cob, len(phi_pairs) - homdim)


# commutation identities ----------------------------------------------------------

def verify_comm_rels(mod: ExplicitModule, k: int) -> Fraction:
    """Largest entry of (lhs - rhs) over all three identities, all odd roots,
    all positive even roots and all k+1 tuples of basis elements of B."""
    if k < 1 or k > 4:
        raise PreconditionError("k must be between 1 and 4")
    g = mod.g
    B = mod.B
    nB = B.dim
    ident = {i: {i: ONE} for i in range(mod.dim)}
    worst = Fraction(0)
    pos_even = [r for r in distinguished_borel(g.aid).positive(Parity.EVEN)]
    odd = list(g.pos_odd)

    def op(i, bvec):
        return mod.op({i: ONE}, bvec)

    def bvec(*idx):
        out = {idx[0]: ONE}
        for t in idx[1:]:
            nxt: dict = {}
            for c, x in out.items():
                for d, y in B.mult_table[c][t].items():
                    nxt[d] = nxt.get(d, ZERO) + x * q(y)
            out = {c: x for c, x in nxt.items() if x}
        return out

    def prod(ops):
        m = ident
        for o in reversed(ops):
            m = compose(o, m)
        return m

    def bracket_op(i, j, bv):
        out: dict = {}
        for kk, c in g.bracket(i, j).items():
            out = madd(out, op(kk, bv), q(c))
        return out

    for a in itertools.product(range(nB), repeat=k + 1):
        a0, rest = a[0], a[1:]
        # identities (1) and (2)
        for alpha in odd:
            xa = g.x(alpha)
            for beta in odd:
                yb = g.y(beta)
                ys = [op(yb, {t: ONE}) for t in rest]
                X = op(xa, {a0: ONE})
                lhs = prod([X] + ys)
                rhs = madd({}, prod(ys + [X]), q((-1) ** k))
                for j in range(1, k + 1):
                    br = bracket_op(xa, yb, bvec(a0, rest[j - 1]))
                    term = prod(ys[: j - 1] + [br] + ys[j:])
                    rhs = madd(rhs, term, q((-1) ** (j - 1)))
                worst = max(worst, max_abs(madd(lhs, rhs, -ONE)))
                if alpha == beta:
                    # identity (1): h_alpha moved to the right end
                    rhs1 = madd({}, prod(ys + [X]), q((-1) ** k))
                    for j in range(1, k + 1):
                        h = bracket_op(xa, yb, bvec(a0, rest[j - 1]))
                        term = prod(ys[: j - 1] + ys[j:] + [h])
                        rhs1 = madd(rhs1, term, q((-1) ** (j - 1)))
                    worst = max(worst, max_abs(madd(lhs, rhs1, -ONE)))
        # identity (3)
        for gamma in pos_even:
            xg = g.x(gamma)
            for beta in odd:
                yb = g.y(beta)
                ys = [op(yb, {t: ONE}) for t in rest]
                X = op(xg, {a0: ONE})
                lhs = prod([X] + ys)
                rhs = prod(ys + [X])
                for j in range(1, k + 1):
                    br = bracket_op(xg, yb, bvec(a0, rest[j - 1]))
                    term = prod(ys[: j - 1] + ys[j:] + [br])
                    rhs = madd(rhs, term, q((-1) ** (k - j)))
                worst = max(worst, max_abs(madd(lhs, rhs, -ONE)))
    return worst


def bracket_residual(mod: ExplicitModule) -> Fraction:
    """Largest entry of rho([X,Y]) - [rho X, rho Y] over all basis pairs."""
    g = mod.g
    Bm = mod.B.mult_table
    worst = Fraction(0)
    elems = [(i, b) for i in mod.acts for b in range(mod.B.dim)]
    for (i, a) in elems:
        for (j, b) in elems:
            s = -1 if (g.parity(i) and g.parity(j)) else 1
            lhs: dict = {}
            for kk, c in g.bracket(i, j).items():
                for cc, y in Bm[a][b].items():
                    lhs = madd(lhs, mod.rho(kk, cc), q(c) * q(y))
            rhs = madd(compose(mod.rho(i, a), mod.rho(j, b)),
                       compose(mod.rho(j, b), mod.rho(i, a)), q(-s))
            worst = max(worst, max_abs(madd(lhs, rhs, -ONE)))
    return worst


# the star certificate -------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    scalar: Fraction
    nhat: tuple
    mode: str          # "adapted" or "clipped"
    basis: tuple       # exponents used for A/I


def _adapted_basis(B: TruncatedAlgebra, nhat) -> tuple[list, str]:
    ech = Echelon()
    chosen = []
    for e in monomials(B.r, B.order):
        if not leq(e, nhat):
            continue
        v = B.reduce({B.index[e]: 1})
        if v and ech.add({k: q(x) for k, x in v.items()}):
            chosen.append(e)
    if len(chosen) == B.dim:
        return chosen, "adapted"
    return list(B.std_exps), "clipped"


def irreducibility_certificate(mod: ExplicitModule, partner: StarPartner) -> Certificate:
    """p^star p (x) v+ = c v+ with p the top Grassmann element built from a
    monomial basis of A/I below nhat; returns c."""
    data: KacLikeData = mod.meta.get("data")
    if data is None:
        raise PreconditionError("certificate needs a Kac-like module")
    partner.check(data.theta)
    B = data.B
    nhat = tuple(partner.nhat)
    basis, mode = _adapted_basis(B, nhat)
    g = mod.g

    def mono_vec(e):
        if sum(e) >= B.order:
            return {}
        return B.reduce({B.index[e]: 1})

    ys, xs = [], []
    for beta in g.pos_odd:
        for e in basis:
            ys.append(mod.op({g.y(beta): ONE}, mono_vec(e)))
            dual = tuple(max(n - i, 0) for n, i in zip(nhat, e))
            xs.append(mod.op({g.x(beta): ONE}, mono_vec(dual)))
    v = {0: ONE}
    for Y in reversed(ys):
        v = apply(Y, v)
    for X in xs:
        v = apply(X, v)
    if any(k != 0 for k in v):
        raise InternalInconsistency("p^star p v+ left the highest-weight line")
    return Certificate(frac(v.get(0, ZERO)), nhat, mode, tuple(basis))


def character_of(mod: ExplicitModule, super: bool = False):
    from ..charring import FormalCharacter
    terms = [(w, (-1) ** p if super else 1) for w, p in zip(mod.weights, mod.parity)]
    return FormalCharacter(tuple(terms))
