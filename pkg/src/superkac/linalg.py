"""Exact rational linear algebra.

Dense work goes through ``flint.fmpq_mat``; sparse vectors are plain dicts
``{index: fmpq}`` with zero entries never stored.
"""

from __future__ import annotations

import heapq
from collections import Counter
from math import gcd, isqrt
from fractions import Fraction
from typing import Iterable

from flint import fmpq, fmpq_mat, fmpz

ZERO = fmpq(0)
ONE = fmpq(1)


def q(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return fmpq(x)
    return q(Fraction(x))


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, fmpq):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


# sparse vectors ---------------------------------------------------------

def vadd(u: dict, v: dict, c=ONE) -> dict:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, ZERO) + c * x
        if y == 0:
            out.pop(k, None)
        else:
            out[k] = y
    return out


def vaxpy(acc: dict, v: dict, c) -> None:
    """acc += c*v in place."""
    if c == 0:
        return
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y == 0:
            acc.pop(k, None)
        else:
            acc[k] = y


def vscale(v: dict, c) -> dict:
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


# sparse matrices as column maps: {col: {row: value}} ----------------------

def apply(mat: dict, vec: dict) -> dict:
    out: dict = {}
    for j, c in vec.items():
        col = mat.get(j)
        if col:
            vaxpy(out, col, c)
    return out


def compose(a: dict, b: dict) -> dict:
    """Matrix product a*b for column-map matrices."""
    out = {}
    for j, col in b.items():
        r = apply(a, col)
        if r:
            out[j] = r
    return out


def madd(a: dict, b: dict, c=ONE) -> dict:
    out = {j: dict(col) for j, col in a.items()}
    for j, col in b.items():
        r = vadd(out.get(j, {}), col, c)
        if r:
            out[j] = r
        else:
            out.pop(j, None)
    return out


def mscale(a: dict, c) -> dict:
    if c == 0:
        return {}
    return {j: vscale(col, c) for j, col in a.items()}


def transpose(a: dict) -> dict:
    out: dict = {}
    for j, col in a.items():
        for i, x in col.items():
            out.setdefault(i, {})[j] = x
    return out


def is_zero(a: dict) -> bool:
    return all(not col for col in a.values())


def max_abs(a: dict) -> Fraction:
    best = ZERO
    for col in a.values():
        for x in col.values():
            if abs(x) > best:
                best = abs(x)
    return frac(best)


# dense helpers ----------------------------------------------------------

def dense(rows: list[list], ncols: int | None = None) -> fmpq_mat:
    if not rows:
        return fmpq_mat(0, ncols or 0)
    return fmpq_mat([[q(x) for x in r] for r in rows])


def nullspace(mat: fmpq_mat) -> list[list[fmpq]]:
    """Basis of {x : mat x = 0}."""
    m, n = mat.nrows(), mat.ncols()
    if m == 0:
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    r, rank = mat.rref()
    pivots = []
    for i in range(rank):
        for j in range(n):
            if r[i, j] != 0:
                pivots.append(j)
                break
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(v)
    return basis


def rank(mat: fmpq_mat) -> int:
    if mat.nrows() == 0 or mat.ncols() == 0:
        return 0
    return mat.rref()[1]


def solve_unique(cols: list[list], target: list) -> list[Fraction] | None:
    """Solve sum_j x_j cols[j] = target; None if inconsistent."""
    n = len(cols)
    m = len(target)
    aug = fmpq_mat([[q(cols[j][i]) for j in range(n)] + [q(target[i])] for i in range(m)])
    r, rk = aug.rref()
    x = [ZERO] * n
    for i in range(rk):
        piv = next(j for j in range(n + 1) if r[i, j] != 0)
        if piv == n:
            return None
        x[piv] = r[i, n]
    return [frac(v) for v in x]


# sparse elimination -----------------------------------------------------

class Echelon:
    """Incremental sparse row echelon form.

    Each stored row has its minimal column as pivot and a unit pivot entry,
    so reducing by pivots in increasing column order terminates.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = {k: q(x) for k, x in v.items() if x}
        heap = [k for k in v if k in self.rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            c = v.get(k)
            if c is None:
                continue
            row = self.rows[k]
            for j, x in row.items():
                y = v.get(j, ZERO) - c * x
                if y == 0:
                    v.pop(j, None)
                else:
                    v[j] = y
                    if j in self.rows and j not in seen:
                        heapq.heappush(heap, j)
        return v

    def add(self, v: dict) -> bool:
        """Insert v; return True when it was independent."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = ONE / v[p]
        self.rows[p] = {j: x * inv for j, x in v.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def fully_reduced(self) -> dict:
        """Return rows in reduced row echelon form (pivot -> row)."""
        out = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for j in sorted(k for k in row if k != p and k in out):
                c = row.get(j)
                if c is not None:
                    for jj, x in out[j].items():
                        y = row.get(jj, ZERO) - c * x
                        if y == 0:
                            row.pop(jj, None)
                        else:
                            row[jj] = y
            out[p] = row
        return out


def sparse_rank(rows: Iterable[dict]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return len(e)


def sparse_nullspace(rows: Iterable[dict], ncols: int) -> list[dict]:
    """Basis of the solution space of the homogeneous system ``rows``."""
    e = Echelon()
    for r in rows:
        e.add(r)
    red = e.fully_reduced()
    basis = []
    for f in range(ncols):
        if f in red:
            continue
        v = {f: ONE}
        for p, row in red.items():
            c = row.get(f)
            if c is not None:
                v[p] = -c
        basis.append(v)
    return basis


def span_basis(vectors: Iterable[dict]) -> list[dict]:
    e = Echelon()
    out = []
    for v in vectors:
        r = e.reduce(v)
        if r:
            e.add(r)
            out.append(v)
    return out


# modular elimination with exact certification ----------------------------

def _primes(count: int, start: int = 1 << 62) -> list[int]:
    out = []
    n = start - 1
    while len(out) < count:
        if fmpz(n).is_prime():
            out.append(n)
        n -= 2
    return out


PRIMES = _primes(8)


def to_mod(x, p: int) -> int:
    x = q(x)
    d = int(x.q) % p
    if d == 0:
        raise ZeroDivisionError
    return int(x.p) * pow(d, -1, p) % p


def rational_reconstruct(a: int, m: int) -> Fraction | None:
    """r/s with r = s a mod m and |r|, s <= sqrt(m/2), if it exists."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        s0, s1 = s1, s0 - k * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


class ModEchelon:
    """Echelon over Z/p, same pivot conventions as Echelon."""

    def __init__(self, p: int):
        self.p = p
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        p = self.p
        v = dict(v)
        heap = [k for k in v if k in self.rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if c is None:
                continue
            for j, x in self.rows[k].items():
                y = (v.get(j, 0) - c * x) % p
                if y:
                    if j not in v and j in self.rows:
                        heapq.heappush(heap, j)
                    v[j] = y
                else:
                    v.pop(j, None)
        return v

    def add(self, v: dict) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        piv = min(v)
        inv = pow(v[piv], -1, self.p)
        self.rows[piv] = {j: x * inv % self.p for j, x in v.items()}
        return True

    def fully_reduced(self) -> dict:
        p = self.p
        out = {}
        for piv in sorted(self.rows, reverse=True):
            row = dict(self.rows[piv])
            for j in sorted(k for k in row if k != piv and k in out):
                c = row.get(j)
                if c is not None:
                    for jj, x in out[j].items():
                        y = (row.get(jj, 0) - c * x) % p
                        if y:
                            row[jj] = y
                        else:
                            row.pop(jj, None)
            out[piv] = row
        return out


def _mod_rows(rows: list[dict], p: int) -> list[dict]:
    out = []
    for r in rows:
        m = {}
        for j, x in r.items():
            y = to_mod(x, p)
            if y:
                m[j] = y
        out.append(m)
    return out


def certified_quotient_dim(rows: list[dict], ncols: int, sub: list[dict], sub_dim: int) -> int:
    """Exact dim of ker(rows) / span(sub) over Q, where sub lies in the kernel
    and spans a space of known dimension sub_dim.

    The kernel mod p is an upper bound. When the bound exceeds sub_dim the
    missing kernel vectors are lifted by rational reconstruction and checked
    exactly; independence from span(sub) follows from independence mod p
    because sub has the same rank mod p as over Q."""
    # sparse columns first keeps fill-in low
    count = Counter(j for r in rows for j in r)
    perm = {j: k for k, j in enumerate(sorted(range(ncols), key=lambda j: count[j]))}
    rows = [{perm[j]: x for j, x in r.items()} for r in rows]
    sub = [{perm[j]: x for j, x in v.items()} for v in sub]
    residues: list = []
    modulus = 1
    ref = None
    for p in PRIMES:
        try:
            mrows = _mod_rows(rows, p)
            msub = _mod_rows(sub, p)
        except ZeroDivisionError:
            continue
        ech = ModEchelon(p)
        for r in mrows:
            if r:
                ech.add(r)
        h = ncols - len(ech) - sub_dim
        if h <= 0:
            return 0
        red = ech.fully_reduced()
        free = [f for f in range(ncols) if f not in red]
        fpos = {f: n for n, f in enumerate(free)}
        sech = ModEchelon(p)
        for v in msub:
            sech.add({fpos[j]: x for j, x in v.items() if j in fpos})
        if len(sech) != sub_dim:
            continue
        chosen = [free[n] for n in range(len(free)) if n not in sech.rows]
        key = (tuple(sorted(red)), tuple(chosen))
        if ref is not None and key != ref:
            if len(red) < len(ref[0]):
                continue
            residues, modulus = [], 1
        ref = key
        vecs = []
        for f in chosen:
            v = {f: 1}
            for piv, row in red.items():
                c = row.get(f)
                if c:
                    v[piv] = (-c) % p
            vecs.append(v)
        residues.append((p, vecs))
        modulus *= p
        lifted = _lift(residues, modulus)
        if lifted is not None and all(_annihilates(rows, v) for v in lifted):
            return len(chosen)
    ech = Echelon()
    for r in rows:
        if r:
            ech.add(r)
    return ncols - len(ech) - sub_dim


def _crt(residues: list[int], primes: list[int]) -> int:
    a, m = 0, 1
    for r, p in zip(residues, primes):
        t = (r - a) * pow(m, -1, p) % p
        a, m = a + m * t, m * p
    return a


def _lift(residues, modulus) -> list[dict] | None:
    primes = [p for p, _ in residues]
    out = []
    for n in range(len(residues[0][1])):
        keys = set()
        for _, vecs in residues:
            keys |= set(vecs[n])
        v = {}
        for j in keys:
            a = _crt([vecs[n].get(j, 0) for _, vecs in residues], primes)
            x = rational_reconstruct(a, modulus)
            if x is None:
                return None
            if x:
                v[j] = q(x)
        out.append(v)
    return out


def _annihilates(rows: list[dict], v: dict) -> bool:
    for r in rows:
        s = ZERO
        for j, x in r.items():
            y = v.get(j)
            if y is not None:
                s += q(x) * y
        if s != 0:
            return False
    return True
