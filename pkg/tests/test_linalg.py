from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from branchsat.linalg import (
    det,
    hermite_basis,
    inverse,
    matmul,
    nullspace,
    primitive,
    primitive_rational,
    rank,
    rank_mod,
    smith_normal_form,
)

small = st.integers(-6, 6)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def test_primitive_examples():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((0, 0)) == (0, 0)
    assert primitive_rational((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_snf_is_unimodular_factorisation(m):
    u, d, v = smith_normal_form(m)
    assert matmul(matmul(u, m), v) == d
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)
    off = [d[i][j] for i in range(len(d)) for j in range(len(d[0])) if i != j]
    assert not any(off)
    assert sum(1 for x in diag if x) == rank(m)


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_mod_p_rank_never_exceeds_exact(m):
    assert rank_mod(m) <= rank(m)


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_nullspace_is_orthogonal(m):
    ns = nullspace(m, len(m[0]))
    assert len(ns) == len(m[0]) - rank(m)
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_hermite_basis_spans_same_lattice(m):
    hb = hermite_basis(m)
    assert len(hb) == rank(m)
    # each original row is an integer combination of the basis
    for row in m:
        sol = _solve_int(hb, row)
        assert sol is not None


def _solve_int(basis, v):
    if not basis:
        return [] if not any(v) else None
    from branchsat.linalg import solve_left

    x = solve_left(v, basis)
    if x is None or any(Fraction(t).denominator != 1 for t in x):
        return None
    return x


def test_inverse_roundtrip():
    m = [[2, 1], [7, 4]]
    assert matmul(inverse(m), m) == [[1, 0], [0, 1]]
    with pytest.raises(Exception):
        inverse([[1, 2], [2, 4]])
