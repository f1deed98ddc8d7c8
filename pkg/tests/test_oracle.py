# tests/test_oracle.py
from fractions import Fraction

import pytest

from app.core import matrix as mx
from app.core.oracle import brute_force_det, dependence_search, sample, sample_pair_gram, trial_rng
from app.core.scalar import ONE, ghost, tangible
from app.core.vector import is_ghost_vector, lin_comb, standard_base
from app.models.enums import SampleKind
from app.utils.config import get_settings
from app.utils.errors import CapacityError
from tests.conftest import mat, vec


def test_brute_force_det():
    assert brute_force_det(mat("0 1; 2 0")).value == tangible(3)
    assert brute_force_det(mat("1 2; 3 4")).value == ghost(5)
    assert brute_force_det(mx.identity(4)).value == ONE
    with pytest.raises(CapacityError):
        brute_force_det(mx.identity(9))


def test_dependence_search_equal_vectors():
    witness = dependence_search([vec("0 0"), vec("0 0")], [Fraction(0)])
    assert witness == [ONE, ONE]


def test_dependence_search_standard_base():
    assert dependence_search(standard_base(3), [Fraction(k) for k in range(-2, 3)]) is None


def test_dependence_witness_agrees_with_rank():
    vs = [vec("1 3"), vec("2 4")]
    witness = dependence_search(vs, [Fraction(k) for k in range(-2, 3)])
    assert witness is not None
    assert is_ghost_vector(lin_comb(witness, vs))
    assert not mx.independent(vs)


def test_samples_are_deterministic():
    assert sample(SampleKind.tangible_scalar, None, 7, 3) == sample(SampleKind.tangible_scalar, None, 7, 3)
    assert sample(SampleKind.matrix, (2, 3), 7, 0) == sample(SampleKind.matrix, (2, 3), 7, 0)


def test_sampled_kinds_meet_their_postconditions():
    A = sample(SampleKind.nonsingular_matrix, 3, 7, 0)
    assert mx.determinant(A).value.is_tangible
    G = sample(SampleKind.symmetric_gram, 2, 7, 0)
    assert G[0, 1] == G[1, 0]
    C = sample(SampleKind.closed_base, 3, 7, 0)
    assert mx.is_closed_base(C)


def test_sample_dimension_cap():
    with pytest.raises(CapacityError):
        sample(SampleKind.vector, 11, 7, 0)


def test_pair_gram_has_a_tangible_diagonal():
    settings = get_settings()
    for index in range(40):
        G = sample_pair_gram(trial_rng(7, index, "cs-gram"), settings)
        assert G[0, 0].is_tangible and G[1, 1].is_tangible
        assert G[0, 1] == G[1, 0]
