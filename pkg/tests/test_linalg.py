from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from superkac.linalg import (PRIMES, Echelon, ModEchelon, certified_quotient_dim, frac, rational_reconstruct,
                             sparse_nullspace, sparse_rank, to_mod)

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def test_primes_are_large_and_distinct():
    assert len(set(PRIMES)) == len(PRIMES) == 8
    assert all(p > 2 ** 61 for p in PRIMES)


@given(small)
def test_rational_reconstruction_inverts_reduction(x):
    p = PRIMES[0]
    assert rational_reconstruct(to_mod(x, p), p) == x


def test_to_mod_rejects_bad_denominator():
    with pytest.raises(ZeroDivisionError):
        to_mod(F(1, 7), 7)


def test_sparse_rank_and_nullspace():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]
    assert sparse_rank(rows) == 2
    ns = sparse_nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    for r in rows:
        assert sum(F(c) * frac(v.get(k, 0)) for k, c in r.items()) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.dictionaries(st.integers(0, 6), small, max_size=4), max_size=8))
def test_mod_rank_matches_rational_rank(rows):
    p = PRIMES[1]
    ech = ModEchelon(p)
    for r in rows:
        ech.add({k: to_mod(v, p) for k, v in r.items() if v})
    assert len(ech) == sparse_rank(rows)


def _exact_quotient(rows, ncols, sub):
    ker = sparse_nullspace(rows, ncols)
    return len(ker) - sparse_rank(sub)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.dictionaries(st.integers(0, 5), small, max_size=3), max_size=5),
       st.lists(st.dictionaries(st.integers(0, 5), small, max_size=3), max_size=3))
def test_certified_quotient_matches_exact(rows, extra):
    ncols = 6
    # build the subspace inside the kernel so the quotient is well defined
    ker = sparse_nullspace(rows, ncols)
    sub = ker[: len(ker) // 2]
    got = certified_quotient_dim(rows, ncols, sub, sparse_rank(sub))
    assert got == _exact_quotient(rows, ncols, sub)


def test_certified_quotient_simple():
    rows = [{0: 1, 1: -1}]
    assert certified_quotient_dim(rows, 3, [], 0) == 2
    assert certified_quotient_dim(rows, 3, [{0: 1, 1: 1}], 1) == 1
    assert certified_quotient_dim(rows, 3, [{0: 1, 1: 1}, {2: F(1, 3)}], 2) == 0


def test_echelon_membership():
    e = Echelon()
    assert e.add({0: F(1, 2), 1: 1})
    assert not e.add({0: 1, 1: 2})
    assert e.add({2: 1})
    assert len(e) == 2
