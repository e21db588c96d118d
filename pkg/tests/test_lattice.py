import math

import pytest
from hypothesis import given, settings, strategies as st

from eulertoric.errors import DimMismatch, NotABasis, ZeroVector
from eulertoric.lattice import (
    coords_in_basis,
    det,
    dual_basis,
    hnf,
    identity,
    is_lattice_basis,
    matmul,
    pairing,
    primitive,
    snf,
)


@pytest.mark.parametrize(
    "v, expected",
    [((2, 4), (1, 2)), ((0, -3), (0, -1)), ((-2, -3), (-2, -3)), ((6,), (1,))],
)
def test_primitive(v, expected):
    assert primitive(v) == expected


def test_primitive_zero():
    with pytest.raises(ZeroVector):
        primitive((0, 0))


def test_pairing():
    assert pairing((1, 0), (-1, 2)) == -1
    assert pairing((0, 0), (5, 7)) == 0
    for s in range(-4, 5):
        assert pairing((-1, s), (1, 0)) == -1
    with pytest.raises(DimMismatch):
        pairing((1, 0), (1, 2, 3))


def test_hnf_examples():
    assert hnf(identity(3)) == (identity(3), identity(3))
    assert hnf(((2, 0), (0, 3))) == (((2, 0), (0, 3)), identity(2))


def test_hnf_shape():
    A = ((4, 2, -9), (8, 8, 1), (5, -9, -2), (-4, 8, 9))
    H, U = hnf(A)
    assert matmul(U, A) == H
    assert abs(det(U)) == 1
    # echelon with positive pivots and reduced entries above them
    last = -1
    for r, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            assert all(not any(rr) for rr in H[r:])
            break
        j = nz[0]
        assert j > last and row[j] > 0
        assert all(0 <= H[i][j] < row[j] for i in range(r))
        last = j


def test_snf_examples():
    assert snf(identity(3)).invariants == (1, 1, 1)
    zero = snf(((0, 0), (0, 0)))
    assert zero.invariants == ()
    assert zero.S == ((0, 0), (0, 0))


def test_snf_diag_2_3_against_determinantal_divisors():
    A = ((2, 0), (0, 3))
    d1 = math.gcd(*[x for row in A for x in row])
    d2 = abs(det(A)) // d1
    assert snf(A).invariants == (d1, d2) == (1, 6)


matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m
        )
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_snf_and_hnf_round_trip(A):
    A = tuple(tuple(r) for r in A)
    d = snf(A)
    assert matmul(matmul(d.U, A), d.V) == d.S
    assert abs(det(d.U)) == 1 and abs(det(d.V)) == 1
    inv = d.invariants
    assert all(x > 0 for x in inv)
    assert all(inv[i + 1] % inv[i] == 0 for i in range(len(inv) - 1))
    H, U = hnf(A)
    assert matmul(U, A) == H and abs(det(U)) == 1
    if len(A) == len(A[0]) and det(A) != 0:
        assert math.prod(inv) == abs(det(A))


@pytest.mark.parametrize(
    "vs, expected",
    [(((1, 0), (0, 1)), True), (((1, 0), (1, 2)), False), (((1, 0), (-1, -1)), True),
     (((1, 0),), False)],
)
def test_is_lattice_basis(vs, expected):
    assert is_lattice_basis(vs) is expected


def test_coords_in_basis():
    B = ((1, 0), (0, -1))
    assert coords_in_basis(B, (0, 1)) == (0, -1)
    for s in range(-3, 4):
        c = coords_in_basis(B, (-1, s))
        assert c == (-1, -s)
        assert tuple(c[0] * B[0][k] + c[1] * B[1][k] for k in range(2)) == (-1, s)
    assert coords_in_basis(identity(3), (4, -5, 6)) == (4, -5, 6)
    with pytest.raises(NotABasis):
        coords_in_basis(((1, 0), (1, 2)), (1, 1))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3), st.integers(-5, 5), st.integers(-5, 5))
def test_coords_reconstruct(v, a, b):
    # unimodular basis built from elementary operations
    B = ((1, a, 0), (0, 1, b), (0, 0, 1))
    c = coords_in_basis(B, v)
    assert tuple(sum(c[i] * B[i][k] for i in range(3)) for k in range(3)) == tuple(v)


@pytest.mark.parametrize(
    "basis, expected",
    [
        (((1, 0), (0, 1)), ((1, 0), (0, 1))),
        (((1, 0), (1, 1)), ((1, -1), (0, 1))),
        (((0, 1), (-1, 0)), ((0, 1), (-1, 0))),
    ],
)
def test_dual_basis(basis, expected):
    m = dual_basis(basis)
    assert m == expected
    for i, b in enumerate(basis):
        for j, mj in enumerate(m):
            assert pairing(b, mj) == (1 if i == j else 0)
