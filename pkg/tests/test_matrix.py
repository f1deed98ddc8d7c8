# tests/test_matrix.py
import pytest

from app.core import matrix as mx
from app.core.scalar import ONE, ZERO, ghost, tangible
from app.core.vector import Vector
from app.models.enums import Engine
from app.utils.errors import CapacityError, DomainError, ShapeError
from tests.conftest import mat


# ✅ determinants
@pytest.mark.parametrize("engine", list(Engine))
def test_det_examples(engine):
    assert mx.determinant(mat("0 1; 2 0"), engine).value == tangible(3)
    assert mx.determinant(mat("1 2; 3 4"), engine).value == ghost(5)
    assert mx.determinant(mx.identity(4), engine).value == ONE


def test_det_witnesses():
    tie = mx.det(mat("1 2; 3 4"))
    assert tie.is_tie
    assert tie.witnesses == frozenset({(0, 1), (1, 0)})
    unique = mx.det(mat("0 1; 2 0"))
    assert unique.witnesses == frozenset({(1, 0)})
    assert not unique.is_tie


def test_det_ghost_entry_on_unique_optimum():
    assert mx.det(mat("3g 0; 0 0")).value == ghost(3)
    assert mx.det_assignment(mat("3g 0; 0 0")).value == ghost(3)


def test_det_no_full_matching_is_zero():
    A = mat("1 2; -inf -inf")
    assert mx.det(A).value == ZERO
    assert mx.det_assignment(A).value == ZERO


def test_det_shape_and_capacity():
    with pytest.raises(ShapeError):
        mx.det(mat("1 2"))
    with pytest.raises(CapacityError):
        mx.det(mx.identity(9))
    assert mx.determinant(mx.identity(9)).value == ONE


def test_engines_agree_on_larger_sparse_matrix():
    A = mat("0 3 -inf 1 2; 1 0g 4 -inf 0; 2 2 2 2 2; -inf 1 0 5 3g; 4 -1 2 0 1")
    assert mx.det(A).value == mx.det_assignment(A).value


# ✅ adjoint and quasi-inverse
def test_adjoint_of_example(example):
    assert mx.adjoint(example) == example
    assert mx.adjoint(mat("7")) == mat("0")


def test_pseudo_inverse(example):
    assert mx.pseudo_inverse(example) == mat("-3 -2; -1 -3")


def test_pseudo_inverse_singular():
    with pytest.raises(DomainError, match=r"singular matrix: \|A\| = 5g"):
        mx.pseudo_inverse(mat("1 2; 3 4"))


def test_quasi_identities(example):
    left, right = mx.quasi_identities(example)
    assert left == mat("0 -2g; -1g 0")
    assert mx.is_quasi_identity(left)
    assert mx.is_quasi_identity(right)
    assert not mx.is_quasi_identity(mat("0 1; 0 0"))


def test_double_pseudo(example):
    assert mx.double_pseudo(example) == mat("-3g -2; -1 -3g")


def test_close(example):
    closed = mx.close(example)
    assert closed == mat("0g 1; 2 0g")
    assert mx.is_nonsingular(closed)
    assert mx.is_closed_base(closed)
    assert not mx.is_closed_base(example)


# ✅ rank and independence
def test_rank():
    assert mx.rank(mx.identity(3)) == 3
    assert mx.rank(mat("1 2; 3 4")) == 1
    assert mx.rank(mat("0g 1g; -inf 2g")) == 0
    assert mx.rank(mat("0 1 2")) == 1


def test_rank_cap():
    with pytest.raises(CapacityError):
        mx.rank(mx.identity(11))


def test_independent():
    assert mx.independent(mx.columns(mx.identity(3)))
    assert not mx.independent(mx.columns(mat("1 2; 3 4")))
    assert not mx.independent([Vector([ONE]), Vector([tangible(1)])])


# ✅ products and helpers
def test_products(example):
    assert example @ mx.identity(2) == example
    assert mx.mat_vec(example, Vector([ONE, ZERO])) == Vector([ONE, tangible(2)])
    with pytest.raises(ShapeError):
        mx.mat_mul(example, mat("1 2 3"))


def test_helpers(example):
    assert mx.transpose(example) == mat("0 2; 1 0")
    assert mx.minor(mat("1 2 3; 4 5 6; 7 8 9"), 0, 1) == mat("4 6; 7 9")
    assert mx.nu_matrix(example) == mat("0g 1g; 2g 0g")
    assert mx.from_columns(mx.columns(example)) == example
    assert mx.mat_ghost_surpasses(mat("0g 1g; 2g 0g"), example)
    assert not mx.mat_ghost_surpasses(example, mat("0g 1g; 2g 0g"))
