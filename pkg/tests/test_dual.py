# tests/test_dual.py
import pytest

from app.core import dual
from app.core import matrix as mx
from app.core.scalar import ONE, ZERO, tangible
from app.core.vector import Vector
from app.models.enums import Verdict
from app.utils.errors import PreconditionError
from tests.conftest import mat, vec


@pytest.fixture
def closed(example):
    return mx.close(example)   # [[0g,1],[2,0g]]


def test_functional():
    f = dual.functional_from_row(vec("0 1"))
    assert f(vec("2 -inf")) == tangible(2)
    assert dual.double_dual_eval(vec("2 -inf"), f) == f(vec("2 -inf"))


def test_dual_base_needs_closed_base(example):
    with pytest.raises(PreconditionError, match="closed base"):
        dual.dual_base(example)


def test_dual_base_of_closed_example(closed):
    D = dual.dual_base(closed)
    assert D.as_matrix() == mat("-3g -2; -1 -3g")
    assert dual.dual_eval_matrix(D) == mat("0 -2g; -1g 0")
    assert dual.dual_rank(D) == 2
    assert dual.phi_matrix(D) == mat("0 -1g; -2g 0")


def test_dual_grids_agree_on_closed_base(closed):
    grid, I_A = dual.dual_grids(closed)
    assert grid == I_A


def test_projection_fixes_closed_columns(closed):
    for b in mx.columns(closed):
        assert dual.project_closed(closed, b) == b


def test_lower_after_projection(closed):
    v = vec("5 -1")
    assert dual.lower(closed, dual.project_closed(closed, v)) == dual.lower(closed, v)


def test_standard_base_double_dual_is_identity():
    I = mx.identity(3)
    assert dual.phi_matrix(dual.dual_base(I)) == I


def test_ghost_kernel():
    assert dual.ghost_kernel_contains(mat("0 1; 2 0"), vec("0g -inf"))
    assert not dual.ghost_kernel_contains(mat("0 1; 2 0"), vec("0 -inf"))


def test_ghost_monic():
    proved = dual.is_ghost_monic(mx.identity(2), 5, 7)
    assert proved.verdict is Verdict.proved and proved
    refuted = dual.is_ghost_monic(mat("0 0; 0 0"), 5, 7)
    assert refuted.verdict is Verdict.counterexample
    assert refuted.witness == Vector([ONE, ONE])
    assert not refuted


def test_tropically_onto():
    assert dual.is_tropically_onto(mx.identity(2))
    assert not dual.is_tropically_onto(mat("0 0; 0 0"))


def test_map_axioms(example):
    assert dual.check_map_axioms(example, 20, 7).passed
    assert dual.check_map_axioms(mat("0 -inf; 1g 2"), 20, 7).passed


def test_zero_functional():
    assert dual.apply(dual.Functional(vec("-inf -inf")), vec("1 2")) == ZERO
