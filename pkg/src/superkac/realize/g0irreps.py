"""Irreducible sl(k)-modules inside tensor products of exterior powers of C^k,
and the g_0'-modules V_m (x) V_n built from them."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..linalg import ONE, Echelon, ZERO, q, vaxpy
from ..rootdata import AlgebraId, Family, Weight


def _wedge_apply(i: int, j: int, state: tuple[int, ...]):
    """E_ij on a basis wedge e_{s1}^...^e_{sp} (sorted); returns (sign, new) or None."""
    if j not in state:
        return None
    if i == j:
        return 1, state
    if i in state:
        return None
    lst = [i if s == j else s for s in state]
    # sort with sign
    sign = 1
    arr = lst[:]
    for a in range(len(arr)):
        for b in range(len(arr) - 1 - a):
            if arr[b] > arr[b + 1]:
                arr[b], arr[b + 1] = arr[b + 1], arr[b]
                sign = -sign
    return sign, tuple(arr)


def _tensor_apply(i: int, j: int, vec: dict) -> dict:
    out: dict = {}
    for key, c in vec.items():
        for f, st in enumerate(key):
            r = _wedge_apply(i, j, st)
            if r is None:
                continue
            s, new = r
            nk = key[:f] + (new,) + key[f + 1:]
            y = out.get(nk, ZERO) + c * s
            if y == 0:
                out.pop(nk, None)
            else:
                out[nk] = y
    return out


class SlIrrep:
    """sl(k) irrep with Dynkin label ``label``; basis is a reduced echelon basis of
    weight vectors, so coordinates of a vector are its pivot entries."""

    def __init__(self, k: int, label: tuple[int, ...]):
        self.k = k
        self.label = tuple(int(a) for a in label)
        factors = []
        for p, a in enumerate(self.label, start=1):
            factors += [tuple(range(p))] * a
        hw = {tuple(factors): ONE}
        keys: dict = {}

        def idx(key):
            if key not in keys:
                keys[key] = len(keys)
            return keys[key]

        ech = Echelon()
        vecs = []
        todo = [hw]
        while todo:
            v = todo.pop()
            iv = {idx(key): c for key, c in v.items()}
            if ech.add(iv):
                vecs.append(v)
                for i in range(k - 1):
                    w = _tensor_apply(i + 1, i, v)
                    if w:
                        todo.append(w)
        red = ech.fully_reduced()
        self._keys = {i: key for key, i in keys.items()}
        self._idx = idx
        self.pivots = sorted(red)
        self.rows = [red[p] for p in self.pivots]
        self.dim = len(self.rows)
        self._pos = {p: n for n, p in enumerate(self.pivots)}
        self._cache: dict = {}

    def _as_tensor(self, n: int) -> dict:
        return {self._keys[i]: c for i, c in self.rows[n].items()}

    def coords(self, vec: dict) -> dict[int, object]:
        iv = {self._idx(key): c for key, c in vec.items()}
        return {self._pos[p]: iv[p] for p in self.pivots if p in iv and iv[p] != 0}

    def op(self, i: int, j: int) -> dict:
        """Matrix of E_ij (i != j) or E_ii as a column map."""
        if (i, j) not in self._cache:
            mat = {}
            for n in range(self.dim):
                col = self.coords(_tensor_apply(i, j, self._as_tensor(n)))
                if col:
                    mat[n] = col
            self._cache[(i, j)] = mat
        return self._cache[(i, j)]

    def diag(self, d) -> dict:
        """Matrix of sum_i d_i E_ii."""
        out: dict = {}
        for i, x in enumerate(d):
            if x:
                for n, col in self.op(i, i).items():
                    acc = out.setdefault(n, {})
                    vaxpy(acc, col, x)
        return {n: c for n, c in out.items() if c}


@lru_cache(maxsize=None)
def sl_irrep(k: int, label: tuple[int, ...]) -> SlIrrep:
    return SlIrrep(k, label)


class G0PrimeModule:
    """V = V_eps (x) V_delta for g_0' of sl(m|n) (V_eps trivial when m = 1)."""

    def __init__(self, aid: AlgebraId, hprime: tuple):
        if aid.family is not Family.SL:
            from ..errors import UnsupportedAlgebra
            raise UnsupportedAlgebra("explicit g_0' modules exist for sl(m|n) only")
        m, n = aid.m, aid.n
        lab = tuple(int(a) for a in hprime)
        self.aid = aid
        self.hprime = lab
        self.left = sl_irrep(m, lab[: m - 1]) if m > 1 else None
        self.right = sl_irrep(n, lab[m - 1:])
        self.dl = self.left.dim if self.left else 1
        self.dim = self.dl * self.right.dim

    def _embed(self, mat: dict, side: int) -> dict:
        out = {}
        dl, dr = self.dl, self.right.dim
        if side == 0:
            for a, col in mat.items():
                for b in range(dr):
                    out[a * dr + b] = {r * dr + b: x for r, x in col.items()}
        else:
            for b, col in mat.items():
                for a in range(dl):
                    out[a * dr + b] = {a * dr + r: x for r, x in col.items()}
        return out

    def matrix(self, mat: dict) -> dict:
        """Action of a g_0' element given as a supermatrix {(i,j): value}."""
        m = self.aid.m
        out: dict = {}
        diag_l = [0] * m
        diag_r = [0] * self.aid.n
        for (i, j), x in mat.items():
            x = q(x)
            if i == j:
                if i < m:
                    diag_l[i] = x
                else:
                    diag_r[i - m] = x
                continue
            if (i < m) != (j < m):
                raise ValueError("odd matrix does not act on a g_0' module")
            if i < m:
                part = self._embed(self.left.op(i, j), 0)
            else:
                part = self._embed(self.right.op(i - m, j - m), 1)
            _acc(out, part, x)
        if any(diag_l) and self.left is not None:
            _acc(out, self._embed(self.left.diag(diag_l), 0), 1)
        if any(diag_r):
            _acc(out, self._embed(self.right.diag(diag_r), 1), 1)
        return {k: v for k, v in out.items() if v}

    def weights(self, hvecs) -> list[tuple]:
        """Eigenvalues of the given diagonal g_0' elements on each basis vector."""
        out = []
        mats = [self.matrix({(i, i): x for i, x in enumerate(d) if x}) for d in hvecs]
        for v in range(self.dim):
            vals = []
            for mm in mats:
                col = mm.get(v, {})
                vals.append(col.get(v, ZERO))
                if any(k != v for k in col):
                    raise ValueError("basis is not a weight basis")
            out.append(tuple(vals))
        return out

    def highest_index(self) -> int:
        return 0


def _acc(out: dict, part: dict, x) -> None:
    from ..linalg import q
    x = q(x)
    for c, col in part.items():
        acc = out.setdefault(c, {})
        vaxpy(acc, col, x)
