# tests/test_bilinear.py
from fractions import Fraction

import pytest

from app.core import bilinear as bl
from app.core import matrix as mx
from app.core.scalar import ONE, ZERO, ghost, ghost_surpasses, tangible
from app.core.vector import standard_base, vec_add, vec_scale
from app.models.enums import Orthogonality, StripKind
from app.utils.errors import DomainError, PreconditionError, ShapeError
from tests.conftest import mat, vec

IDENTITY = bl.BilinearForm(mx.identity(2))
HYPERBOLIC = bl.BilinearForm(mat("-inf 0; 0 -inf"))
E1, E2 = standard_base(2)


def test_evaluate():
    assert bl.evaluate(IDENTITY, E1, E2) == ZERO
    assert bl.evaluate(IDENTITY, vec("1 2"), vec("1 2")) == tangible(4)
    assert IDENTITY(vec("1 2"), vec("0 0")) == tangible(2)
    with pytest.raises(ShapeError):
        bl.evaluate(IDENTITY, vec("0 0 0"), E1)


def test_linearity_is_exact():
    F = bl.BilinearForm(mat("0 1g; 1 -2"))
    v, w, u = vec("1 -inf"), vec("0g 3"), vec("2 1")
    a = tangible(Fraction(-1, 2))
    lhs = bl.evaluate(F, vec_add(v, vec_scale(a, w)), u)
    rhs = bl.evaluate(F, v, u) + a * bl.evaluate(F, w, u)
    assert lhs == rhs


def test_classify_vector():
    assert bl.classify_vector(HYPERBOLIC, E1) == bl.VectorClass(ZERO, isotropic=True, normal=False)
    assert bl.classify_vector(IDENTITY, E1) == bl.VectorClass(ONE, isotropic=False, normal=True)


def test_normalize():
    assert bl.normalize(IDENTITY, vec("1g 2")) == vec("-1g 0")
    with pytest.raises(DomainError, match="g-isotropic"):
        bl.normalize(HYPERBOLIC, E1)


def test_supertropical_symmetry():
    assert not bl.is_supertropically_symmetric(bl.BilinearForm(mat("0 1; 2 0")))
    assert bl.is_supertropically_symmetric(bl.BilinearForm(mat("0 1g; 2g 0")))
    assert bl.is_supertropically_symmetric(bl.BilinearForm(mat("0 1; 1 0")))


def test_g_orthogonality_sides():
    F = bl.BilinearForm(mat("0 1g; 2 0"))
    assert bl.is_g_orthogonal(F, E1, E2, Orthogonality.left)
    assert not bl.is_g_orthogonal(F, E1, E2, Orthogonality.right)
    assert not bl.is_g_orthogonal(F, E1, E2)


def test_pair_class_standard_base():
    pc = bl.pair_class(IDENTITY, E1, E2)
    assert pc.left_orthogonal and pc.right_orthogonal
    assert pc.compatible and pc.strictly_compatible
    assert pc.weakly_cauchy_schwartz and pc.cauchy_schwartz
    assert not pc.corner_singular


def test_pair_class_corner_singular():
    pc = bl.pair_class(bl.BilinearForm(mat("0 1; 1 2")), E1, E2)
    assert pc.corner_singular
    assert pc.weakly_cauchy_schwartz
    assert not pc.cauchy_schwartz


def test_compatible_sum():
    F = bl.BilinearForm(mat("0 -1; -1 0"))
    assert bl.pair_class(F, E1, E2).strictly_compatible
    whole, parts = bl.compatible_sum_check(F, E1, E2)
    assert whole == parts == ghost(0)


def test_compatible_sum_only_surpasses_without_strict_compatibility():
    F = bl.BilinearForm(mat("2 2; 2 0"))
    pc = bl.pair_class(F, E1, E2)
    assert pc.compatible and not pc.strictly_compatible
    whole, parts = bl.compatible_sum_check(F, E1, E2)
    assert whole == ghost(2) and parts == tangible(2)
    assert ghost_surpasses(whole, parts)


def test_radical():
    F = bl.BilinearForm(mat("0g -inf; -inf 0"))
    assert bl.radical_of_base(F, [E1, E2]) == [0]
    assert not bl.is_nondegenerate(F, [E1, E2])
    assert bl.is_nondegenerate(IDENTITY, [E1, E2])


def test_gram_dependent():
    assert not bl.gram_dependent(IDENTITY, [E1, E2])
    flat = bl.gram_dependent(bl.BilinearForm(mat("0 0; 0 0")), [E1, E2])
    assert flat.dependent and flat.independent
    assert len(flat.warnings) == 1
    degenerate = bl.gram_dependent(bl.BilinearForm(mat("0g -inf; -inf 0")), [E1, E2])
    assert degenerate.degenerate


# ✅ Gram-Schmidt
def test_gs_step():
    result = bl.gs_step(IDENTITY, [E1], vec("0 0"))
    assert result.corrected == vec("0g 0")
    assert result.projected == vec("0 -inf")
    assert result.dominant == frozenset({0})
    assert bl.evaluate(IDENTITY, result.corrected, E1).in_ghost_ideal
    assert bl.evaluate(IDENTITY, result.corrected, result.corrected) == result.predicted


def test_gs_step_preconditions():
    with pytest.raises(PreconditionError, match="symmetric"):
        bl.gs_step(bl.BilinearForm(mat("0 1; 2 0")), [E1], E2)
    with pytest.raises(DomainError):
        bl.gs_step(HYPERBOLIC, [E1], E2)
    with pytest.raises(PreconditionError, match="g-orthogonal"):
        bl.gs_step(bl.BilinearForm(mat("0 -1; -1 0")), [E1, E2], E1)


def test_gram_schmidt():
    orthogonal, leftover = bl.gram_schmidt(IDENTITY, [vec("1g 2"), E1])
    assert orthogonal == [vec("-1g 0"), vec("0 -1g")]
    assert leftover == []
    orthogonal, leftover = bl.gram_schmidt(HYPERBOLIC, [E1, E2])
    assert orthogonal == [] and leftover == [E1, E2]


# ✅ isotropic strip
def test_strip_all_on_hyperbolic_plane():
    res = bl.isotropic_strip(HYPERBOLIC, E1, E2)
    assert res.kind is StripKind.interval and res.is_all and res.verified


def test_strip_point():
    res = bl.isotropic_strip(IDENTITY, E1, E2)
    assert res.kind is StripKind.point
    assert res.at == 0
    assert res.verified


def test_strip_interval():
    res = bl.isotropic_strip(bl.BilinearForm(mat("0 3; 3 2")), E1, E2)
    assert (res.kind, res.lo, res.hi) == (StripKind.interval, -3, 1)
    assert res.first == E1 and res.verified
    w = bl.strip_witness(res.first, res.second, Fraction(-1))
    assert bl.classify_vector(bl.BilinearForm(mat("0 3; 3 2")), w).isotropic


def test_strip_orders_by_norm():
    res = bl.isotropic_strip(bl.BilinearForm(mat("2 3; 3 0")), E1, E2)
    assert res.first == E2
    assert (res.lo, res.hi) == (-3, 1)


def test_strip_empty():
    res = bl.isotropic_strip(bl.BilinearForm(mat("0 -inf; -inf -inf")), E1, E2)
    assert res.kind is StripKind.empty
    assert not res.nonempty
    assert res.note
    assert res.verified
    for q in (Fraction(-7), Fraction(0), Fraction(5, 2)):
        w = bl.strip_witness(res.first, res.second, q)
        assert not bl.classify_vector(bl.BilinearForm(mat("0 -inf; -inf -inf")), w).isotropic


def test_strip_all_when_only_a_ghost_norm_is_left():
    F = bl.BilinearForm(mat("-inf -inf; -inf 2g"))
    res = bl.isotropic_strip(F, E1, E2)
    assert res.kind is StripKind.interval and res.is_all
    assert res.verified
    assert bl.classify_vector(F, bl.strip_witness(res.first, res.second, Fraction(-40))).isotropic


def test_strip_of_a_degenerate_span_is_empty():
    F = bl.BilinearForm(mat("-inf -inf; -inf -inf"))
    res = bl.isotropic_strip(F, E1, E2)
    assert res.kind is StripKind.empty
    assert "degenerate" in res.note
    assert res.verified


def test_strip_half_bounded():
    F = bl.BilinearForm(mat("0 -inf; -inf 2g"))
    res = bl.isotropic_strip(F, E1, E2)
    assert (res.kind, res.lo, res.hi) == (StripKind.interval, -1, None)
    assert res.verified
    assert not bl.classify_vector(F, bl.strip_witness(res.first, res.second, Fraction(-2))).isotropic


# ✅ decomposition
def test_rescue_vector_is_corner_singular_with_its_partner():
    v = bl.rescue_vector(IDENTITY, E1, E2)
    assert v == vec("1 0")
    pc = bl.pair_class(IDENTITY, v, E1)
    assert pc.corner_singular
    assert not pc.cauchy_schwartz


def test_isotropic_replacement_inside_the_strip():
    F = bl.BilinearForm(mat("0 0g; 0g 0"))
    assert not bl.pair_class(F, E1, E2).cauchy_schwartz
    w = bl._isotropic_replacement(F, [E1], E2, 1)
    assert w == vec("0 0")
    assert bl.classify_vector(F, w).isotropic
    assert bl.is_g_orthogonal(F, E1, w)


def test_gs_step_without_any_pairing_has_no_dominant_index():
    result = bl.gs_step(IDENTITY, [E1], E2)
    assert result.dominant == frozenset()
    assert result.corrected == E2


def test_decompose_identity():
    base = standard_base(3)
    F = bl.BilinearForm(mx.identity(3))
    D = bl.decompose(F, base)
    assert D.aniso == tuple(base) and D.alternate == ()
    assert bl.decomposition_violations(F, base, D) == []


def test_decompose_hyperbolic():
    D = bl.decompose(HYPERBOLIC, [E1, E2])
    assert D.aniso == () and D.alternate == (E1, E2)
    assert bl.decomposition_violations(HYPERBOLIC, [E1, E2], D) == []


def test_decompose_mixed():
    F = bl.BilinearForm(mat("0 -inf -inf; -inf -inf 0; -inf 0 -inf"))
    base = standard_base(3)
    D = bl.decompose(F, base)
    assert D.aniso == (base[0],)
    assert D.alternate == (base[1], base[2])
    assert D.aniso_sources == (0,) and D.alternate_sources == (1, 2)
    assert bl.decomposition_violations(F, base, D) == []


CLASH = bl.BilinearForm(mat("10g 4g; 4g 1"))
CLASH_BASE = [vec("-8 -4"), vec("-9 2")]


def test_violations_flag_cauchy_schwartz_cross_pairs():
    D = bl.Decomposition(
        aniso=(vec("-9 2"),),
        alternate=(vec("-8 -4g"),),
        aniso_sources=(1,),
        alternate_sources=(0,),
    )
    assert bl.decomposition_violations(CLASH, CLASH_BASE, D) == ["aniso 0 and alternate 0 are Cauchy-Schwartz"]


def test_decompose_demotes_a_vector_clashing_with_an_alternate_one():
    D = bl.decompose(CLASH, CLASH_BASE)
    assert D.aniso == ()
    assert D.alternate == (vec("-8 -4g"), vec("-8 -7/2"))
    assert D.alternate_sources == (0, 1)
    assert D.demoted == (1,)
    assert mx.independent(list(D.alternate))
    assert bl.decomposition_violations(CLASH, CLASH_BASE, D) == []


def test_decompose_preconditions():
    with pytest.raises(PreconditionError, match="independent"):
        bl.decompose(IDENTITY, [E1, E1])
    with pytest.raises(PreconditionError, match="symmetric"):
        bl.decompose(bl.BilinearForm(mat("0 1; 2 0")), [E1, E2])


def test_is_alternate():
    assert bl.is_alternate(HYPERBOLIC, [E1, E2])
    assert not bl.is_alternate(IDENTITY, [E1, E2])
