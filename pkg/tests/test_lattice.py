import itertools
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from stackycovers.errors import EmptySystem, MembershipError
from stackycovers.lattice import (
    INFINITE,
    IntMatrix,
    LinearForm,
    contains,
    coordinates,
    hermite_basis,
    kernel_basis,
    lattice_index,
    smith_normal_form,
    solve_linear_congruences,
)
from stackycovers.oracle import oracle_congruence_search

small = st.integers(-9, 9)


@st.composite
def matrices(draw, max_dim=5):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    return IntMatrix(rows, cols, tuple(draw(st.lists(small, min_size=rows * cols, max_size=rows * cols))))


def test_intmatrix_shape_checked():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(TypeError):
        IntMatrix(1, 1, (1.5,))


def test_intmatrix_basics():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert a[1, 0] == 3
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]
    assert (a @ IntMatrix.identity(2)) == a
    assert a.det() == -2
    assert IntMatrix.from_columns([(1, 3), (2, 4)]) == a


def test_det_is_exact_for_big_entries():
    big = 10 ** 40
    assert IntMatrix.from_rows([[big, 1], [1, big]]).det() == big * big - 1


@pytest.mark.parametrize("rows, diagonal", [
    ([[1, 0], [0, 1]], (1, 1)),
    ([[2, -1], [-1, 2]], (1, 3)),
    ([[2, 0], [0, 4]], (2, 4)),
    ([[2, 0], [0, 3]], (1, 6)),
    ([[0, 0], [0, 0]], (0, 0)),
    ([[6, 4, 2]], (2,)),
])
def test_smith_examples(rows, diagonal):
    assert smith_normal_form(IntMatrix.from_rows(rows)).diagonal == diagonal


def test_smith_empty_matrix_rejected():
    with pytest.raises(ValueError):
        smith_normal_form(IntMatrix(0, 0, ()))


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_smith_invariants(a):
    snf = smith_normal_form(a)
    assert snf.left @ a @ snf.right == snf.matrix()
    assert abs(snf.left.det()) == 1 and abs(snf.right.det()) == 1
    nonzero = [x for x in snf.diagonal if x]
    assert all(x >= 0 for x in snf.diagonal)
    assert all(b % a_ == 0 for a_, b in zip(nonzero, nonzero[1:]))
    assert snf.diagonal[len(nonzero):] == (0,) * (len(snf.diagonal) - len(nonzero))


@settings(max_examples=150, deadline=None)
@given(matrices(max_dim=4))
def test_smith_matches_sympy(a):
    ours = [x for x in smith_normal_form(a).diagonal if x]
    theirs = [abs(int(x)) for x in invariant_factors(Matrix(a.to_rows()), domain=ZZ) if x]
    assert ours == theirs


def test_index_examples():
    std = IntMatrix.identity(2)
    assert lattice_index(std, std) == 1
    assert lattice_index(IntMatrix.diagonal([2, 2], 2, 2), std) == 4
    assert lattice_index(IntMatrix.from_columns([(2, -1), (-1, 2)]), std) == 3
    assert lattice_index(IntMatrix.from_columns([(2, 0), (0, 0)]), std) == INFINITE


def test_index_membership_error():
    ambient = IntMatrix.diagonal([2, 2], 2, 2)
    with pytest.raises(MembershipError):
        lattice_index(IntMatrix.identity(2), ambient)


@pytest.mark.parametrize("m", [
    m for m in itertools.product(range(-6, 7, 2), range(-5, 6, 3), range(-6, 7, 3), range(-5, 6, 2))
])
def test_index_equals_determinant(m):
    a, b, c, d = m
    mat = IntMatrix.from_rows([[a, b], [c, d]])
    det = a * d - b * c
    if det == 0:
        assert lattice_index(mat, IntMatrix.identity(2)) == INFINITE
    else:
        assert lattice_index(mat, IntMatrix.identity(2)) == abs(det) == math.prod(smith_normal_form(mat).diagonal)


def test_hermite_basis_canonical():
    gens = IntMatrix.from_columns([(4, 12), (0, 5)])
    assert hermite_basis(gens).columns() == [(4, 2), (0, 5)]
    # same lattice from different generators
    alt = IntMatrix.from_columns([(4, 17), (0, 5), (8, 4)])
    assert hermite_basis(alt) == hermite_basis(gens)


def test_kernel_and_coordinates():
    a = IntMatrix.from_rows([[1, 2, 3]])
    for vec in kernel_basis(a):
        assert sum(x * y for x, y in zip(a.row(0), vec)) == 0
    basis = IntMatrix.from_columns([(4, 2), (0, 2)])
    assert coordinates(basis, (8, 2)) == [2, -1]
    assert contains(basis, (0, 2)) and not contains(basis, (1, 0))
    with pytest.raises(MembershipError):
        coordinates(basis, (2, 1))


def test_congruence_examples():
    assert solve_linear_congruences([(LinearForm({"k": 2}, 3), 6)]) is None
    assert solve_linear_congruences([(LinearForm({"k": 2}, 4), 8)])["k"] == 2
    assert solve_linear_congruences([(LinearForm({"x": 1}), 1)])["x"] == 0


def test_congruence_errors():
    with pytest.raises(EmptySystem):
        solve_linear_congruences([])
    with pytest.raises(ValueError):
        solve_linear_congruences([(LinearForm({"x": 1}), 0)])


def test_witness_records_checks():
    w = solve_linear_congruences([(LinearForm({"k": 3}, 1), 5), (LinearForm({"k": 1}, 1), 2)])
    assert all(v % m == 0 for v, m in w.checks)
    assert w["k"] == 3


NAMES = ("a", "b", "c", "e")


@st.composite
def congruence_systems(draw):
    nvars = draw(st.integers(1, 4))
    names = NAMES[:nvars]
    system = []
    for _ in range(draw(st.integers(1, 3))):
        coeffs = {n: draw(st.integers(-6, 6)) for n in names}
        system.append((LinearForm(coeffs, draw(st.integers(-12, 12))), draw(st.integers(1, 12))))
    return system, names


@settings(max_examples=200, deadline=None)
@given(congruence_systems())
def test_congruence_solver_matches_enumeration(args):
    system, names = args
    # keep the exhaustive box small enough to enumerate
    assume(math.lcm(*(m for _, m in system)) ** len(names) <= 200_000)
    got = solve_linear_congruences(system, names)
    expected = oracle_congruence_search(system, names)
    assert (None if got is None else dict(got.assignments)) == expected


def test_congruence_four_variables_against_enumeration():
    system = [
        (LinearForm({"a": 2, "b": -1}, 5), 6),
        (LinearForm({"c": 2, "e": -1}, 4), 6),
        (LinearForm({"b": 1}), 3),
        (LinearForm({"e": 1}), 3),
    ]
    names = ("b", "a", "e", "c")
    assert dict(solve_linear_congruences(system, names).assignments) == oracle_congruence_search(system, names)
