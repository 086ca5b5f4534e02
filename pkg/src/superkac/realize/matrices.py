"""Supermatrix realization of sl(m|n) with elementary-matrix root vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from ..errors import InternalInconsistency, UnsupportedAlgebra
from ..linalg import solve_unique
from ..rootdata import (AlgebraId, Family, Root, all_roots, cartan_basis, distinguished_borel,
                        root_weight, Parity)

Mat = dict  # {(row, col): Fraction}


@dataclass(frozen=True)
class Element:
    label: str
    matrix: tuple[tuple[tuple[int, int], Fraction], ...]
    odd: bool
    root: Root | None  # None for Cartan elements
    grade: int  # -1, 0, 1 for g_{-1}, g_0, g_1

    @property
    def mat(self) -> Mat:
        return dict(self.matrix)


def _mul(a: Mat, b: Mat) -> Mat:
    out: Mat = {}
    for (i, k), x in a.items():
        for (k2, j), y in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), Fraction(0)) + x * y
    return {k: v for k, v in out.items() if v != 0}


def supercommutator(a: Mat, b: Mat, sign: int) -> Mat:
    ab, ba = _mul(a, b), _mul(b, a)
    out = dict(ab)
    for k, v in ba.items():
        out[k] = out.get(k, Fraction(0)) - sign * v
    return {k: v for k, v in out.items() if v != 0}


class MatrixSuperalgebra:
    """Basis: y's of g_{-1}, then g_0 (even root vectors and Cartan), then x's of g_1."""

    def __init__(self, aid: AlgebraId):
        if aid.family is not Family.SL:
            raise UnsupportedAlgebra("the matrix oracle supports sl(m|n) only")
        self.aid = aid
        self.size = aid.m + aid.n
        m = aid.m
        b = distinguished_borel(aid)
        pos_odd = b.positive(Parity.ODD)
        pos_even = b.positive(Parity.EVEN)
        elems: list[Element] = []
        for r in pos_odd:
            elems.append(self._root_element(-r, f"y{list(r.coords)}", -1))
        for r in pos_even:
            elems.append(self._root_element(r, f"x{list(r.coords)}", 0))
            elems.append(self._root_element(-r, f"y{list(r.coords)}", 0))
        for name, d in cartan_basis(aid):
            mat = tuple(((i, i), Fraction(x)) for i, x in enumerate(d) if x != 0)
            elems.append(Element(name, mat, False, None, 0))
        for r in pos_odd:
            elems.append(self._root_element(r, f"x{list(r.coords)}", 1))
        self.elements = elems
        self.index = {e.label: i for i, e in enumerate(elems)}
        self.by_root = {e.root.coords: i for i, e in enumerate(elems) if e.root is not None}
        self.cartan = [i for i, e in enumerate(elems) if e.root is None]
        self.z_index = self.index["z"]
        self.hprime = [i for i in self.cartan if i != self.z_index]
        self.g_minus = [i for i, e in enumerate(elems) if e.grade == -1]
        self.g_plus = [i for i, e in enumerate(elems) if e.grade == 1]
        self.even = [i for i, e in enumerate(elems) if not e.odd]
        self.g0prime = [i for i in self.even if i != self.z_index]
        self.pos_odd = pos_odd
        self._cartan_vecs = [d for _, d in cartan_basis(aid)]
        del m

    def _root_element(self, r: Root, label: str, grade: int) -> Element:
        p = r.coords.index(1)
        q = r.coords.index(-1)
        return Element(label, (((p, q), Fraction(1)),), r.is_odd, r, grade)

    def __len__(self):
        return len(self.elements)

    def parity(self, i: int) -> int:
        return 1 if self.elements[i].odd else 0

    def root_index(self, coords) -> int:
        return self.by_root[tuple(coords)]

    def x(self, r: Root) -> int:
        return self.by_root[r.coords]

    def y(self, r: Root) -> int:
        return self.by_root[tuple(-c for c in r.coords)]

    def weight(self, i: int):
        e = self.elements[i]
        if e.root is None:
            from ..rootdata import Weight
            return Weight.zero(self.aid)
        return root_weight(e.root, self.aid)

    def decompose(self, mat: Mat) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        diag = [Fraction(0)] * self.size
        for (i, j), v in mat.items():
            if i == j:
                diag[i] += v
            else:
                coords = [0] * self.size
                coords[i], coords[j] = 1, -1
                out[self.by_root[tuple(coords)]] = v
        if any(diag):
            sol = solve_unique([list(d) for d in self._cartan_vecs], diag)
            if sol is None:
                raise InternalInconsistency("diagonal part is not in the Cartan subalgebra")
            for k, c in zip(self.cartan, sol):
                if c:
                    out[k] = c
        return out

    @cached_property
    def brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """[e_i, e_j] in the basis, for all ordered pairs with nonzero result."""
        out = {}
        n = len(self.elements)
        mats = [e.mat for e in self.elements]
        for i in range(n):
            for j in range(n):
                s = -1 if (self.elements[i].odd and self.elements[j].odd) else 1
                c = supercommutator(mats[i], mats[j], s)
                if c:
                    out[(i, j)] = self.decompose(c)
        return out

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return self.brackets.get((i, j), {})

    def transpose_index(self, i: int) -> int:
        """tau: x_alpha <-> y_alpha, Cartan fixed (matrix transpose)."""
        e = self.elements[i]
        if e.root is None:
            return i
        return self.by_root[tuple(-c for c in e.root.coords)]


@lru_cache(maxsize=None)
def build_superalgebra(aid: AlgebraId) -> MatrixSuperalgebra:
    return MatrixSuperalgebra(aid)
