from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from clusteralg.linalg import (DimensionMismatch, Matrix, Singular, Tensor3,
                               format_rational, parse_rational,
                               permute_tensor3, row_echelon_pivots,
                               solve_consistent)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


@given(rationals)
def test_rational_string_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_rational_parsing_rejects_junk():
    for bad in ("1.5", "x", "1/0", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_identity_multiplication():
    m = Matrix([[1, 2], [Fraction(1, 3), 4]])
    assert Matrix.identity(2) @ m == m
    assert m @ Matrix.identity(2) == m


def test_nilpotent_square_is_zero():
    n = Matrix([[0, 0], [1, 0]])
    assert (n @ n).is_zero()


@given(st.lists(rationals, min_size=4, max_size=4),
       st.lists(rationals, min_size=4, max_size=4))
def test_matmul_matches_sum_of_products(xs, ys):
    a = Matrix([xs[:2], xs[2:]])
    b = Matrix([ys[:2], ys[2:]])
    got = a @ b
    for i in range(2):
        for j in range(2):
            assert got[i, j] == sum(a[i, k] * b[k, j] for k in range(2))


def test_inverse_identity_and_rotation():
    assert Matrix.identity(3).inverse() == Matrix.identity(3)
    rot = Matrix([[0, 1], [-1, 0]])
    assert rot.inverse() == Matrix([[0, -1], [1, 0]])


def test_inverse_block_skew():
    d = 3
    rows = [[0] * d + [1 if i == j else 0 for j in range(d)] for i in range(d)]
    rows += [[-1 if i == j else 0 for j in range(d)] + [0] * d for i in range(d)]
    m = Matrix(rows)
    inv = m.inverse()
    assert m @ inv == Matrix.identity(2 * d)
    assert inv @ m == Matrix.identity(2 * d)
    assert inv == -m  # [[0,I],[-I,0]]^-1 = [[0,-I],[I,0]]


def test_inverse_exactness_on_awkward_fractions():
    m = Matrix([[Fraction(1, 3), Fraction(2, 7), 1],
                [Fraction(5, 2), Fraction(-1, 4), 0],
                [2, 3, Fraction(1, 6)]])
    inv = m.inverse()
    assert m @ inv == Matrix.identity(3)
    assert inv @ m == Matrix.identity(3)


def test_singular_raises():
    with pytest.raises(Singular):
        Matrix([[1, 2], [2, 4]]).inverse()
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2, 3]]).inverse()


def test_solve_consistent_and_pivots():
    a = Matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert row_echelon_pivots(a) == (0, 1)
    x = solve_consistent(a, (Fraction(1), Fraction(2), Fraction(3)))
    assert a.apply(x) == (Fraction(1), Fraction(2), Fraction(3))
    with pytest.raises(Singular):
        solve_consistent(a, (Fraction(1), Fraction(3), Fraction(0)))


def _coordinate_tensor(d, p, q, t):
    return Tensor3.from_entries((d, d, d), [(p, q, t, Fraction(1))])


def test_permute_identity_and_inverse_pair():
    t = Tensor3.from_entries((2, 2, 2), [(0, 1, 1, Fraction(3)), (1, 0, 0, Fraction(-2))])
    assert permute_tensor3(t, (1, 2, 3)) == t
    cycled = permute_tensor3(t, (2, 3, 1))
    assert permute_tensor3(cycled, (3, 1, 2)) == t


def test_permute_moves_slot_contents():
    # the cycle sending slot 1 -> 2 -> 3 -> 1 maps e0 x e1 x e2 to e2 x e0 x e1
    t = _coordinate_tensor(3, 0, 1, 2)
    assert permute_tensor3(t, (2, 3, 1)) == _coordinate_tensor(3, 2, 0, 1)


@given(st.permutations([1, 2, 3]), st.permutations([1, 2, 3]),
       st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_permute_composes_contravariantly(p, q, i, j, k):
    p, q = tuple(p), tuple(q)
    t = _coordinate_tensor(3, i, j, k)
    twice = permute_tensor3(permute_tensor3(t, p), q)
    composed = tuple(q[p[s] - 1] for s in range(3))  # apply p, then q
    assert twice == permute_tensor3(t, composed)


def test_permute_requires_cubic():
    with pytest.raises(DimensionMismatch):
        permute_tensor3(Tensor3.zeros(2, 2, 3), (2, 3, 1))
    with pytest.raises(ValueError):
        permute_tensor3(Tensor3.zeros(2, 2, 2), (1, 1, 3))


def test_tensor3_fibre_and_arithmetic():
    t = Tensor3.from_entries((2, 2, 2), [(0, 1, 0, Fraction(1, 2)),
                                         (0, 1, 1, Fraction(2))])
    assert t.fibre(0, 1) == (Fraction(1, 2), Fraction(2))
    assert (t - t).is_zero()
    assert (t + (-t)).is_zero()
    assert t.scale(2).get(0, 1, 0) == Fraction(1)
