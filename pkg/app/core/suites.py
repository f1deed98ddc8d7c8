"""
Seeded property suites. Each suite draws its inputs from (seed, index) only
and returns a TrialReport; failures are listed by trial index.
"""
import logging
from fractions import Fraction
from typing import Callable, Iterable, Optional

from app.core import bilinear as bl
from app.core import dual
from app.core import matrix as mx
from app.core import quadratic as qd
from app.core.matrix import Matrix
from app.core.oracle import (
    brute_force_det,
    describe,
    sample_closed_base,
    sample_cs_gram,
    sample_pair_gram,
    sample_gs_instance,
    sample_independent_base,
    sample_matrix,
    sample_nonsingular,
    sample_scalar,
    sample_strip_gram,
    sample_symmetric_gram,
    sample_vector,
    trial_rng,
)
from app.core.scalar import (
    GHOST_ONE,
    ONE,
    add,
    ghost_surpasses,
    ghost,
    mul,
    nu,
    parse_scalar,
    power,
    tangible,
)
from app.core.vector import Vector, is_tangible_vector, standard_base, unit_vector, vec_add, vec_nu, vec_scale
from app.models.enums import Quasilinearity, Verdict
from app.schemas.report import Failure, TrialReport
from app.utils.config import Settings, get_settings
from app.utils.errors import DomainError

logger = logging.getLogger(__name__)


class Trial:
    """Failure collector for one trial."""

    def __init__(self, index: int, *inputs):
        self.index = index
        self.inputs = inputs
        self.failures: list[Failure] = []

    def expect(self, ok: bool, relation: str, got) -> None:
        if not ok:
            self.failures.append(
                Failure(index=self.index, input=describe(list(self.inputs)), expected=relation, got=str(got))
            )


TrialFn = Callable[[int, int, Settings], Iterable[Failure]]

SUITES: dict[str, TrialFn] = {}

DEFAULT_TRIALS = {
    "frobenius": 1000,
    "surpass-order": 1000,
    "det-engines": 500,
    "quasi-identity": 200,
    "dual-base": 200,
    "double-dual": 200,
    "gram-schmidt": 200,
    "cs-gram": 500,
    "cs1": 200,
    "degen": 300,
    "decompose": 100,
    "quadlin": 200,
    "worked-examples": 1,
}


def suite(name: str):
    def register(fn: TrialFn) -> TrialFn:
        SUITES[name] = fn
        return fn
    return register


def _is_quasi_identity_pattern(M: Matrix) -> bool:
    return all(
        (M[i, j] == ONE) if i == j else M[i, j].in_ghost_ideal
        for i in range(M.rows) for j in range(M.cols)
    )


# ---- scalar-core ----

@suite("frobenius")
def frobenius(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "frobenius")
    a, b = sample_scalar(rng, settings), sample_scalar(rng, settings)
    t = Trial(index, a, b)
    for m in range(1, 6):
        lhs, rhs = power(add(a, b), m), add(power(a, m), power(b, m))
        t.expect(lhs == rhs, f"(a+b)^{m} = a^{m} + b^{m}", f"{lhs} vs {rhs}")
    return t.failures


@suite("surpass-order")
def surpass_order(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "surpass-order")
    a = sample_scalar(rng, settings)
    x, y = nu(sample_scalar(rng, settings)), nu(sample_scalar(rng, settings))
    b = add(a, x)   # b |= a
    c = add(b, y)   # c |= b
    t = Trial(index, a, x, y)
    t.expect(ghost_surpasses(a, a), "a |= a", a)
    t.expect(ghost_surpasses(b, a), "a + x |= a for x in G0", b)
    t.expect(ghost_surpasses(c, a), "c |= b |= a implies c |= a", c)
    if ghost_surpasses(a, b):
        t.expect(a == b, "a |= b |= a implies a = b", f"{a} vs {b}")
    t.expect(add(a, a) == nu(a), "a + a = nu(a)", add(a, a))
    t.expect(mul(GHOST_ONE, a) == nu(a), "0g a = nu(a)", mul(GHOST_ONE, a))
    t.expect(nu(add(a, b)) == add(nu(a), nu(b)), "nu(a+b) = nu(a)+nu(b)", nu(add(a, b)))
    t.expect(nu(mul(a, c)) == mul(nu(a), nu(c)), "nu(ac) = nu(a)nu(c)", nu(mul(a, c)))
    if not a.is_zero:
        root = power(a, Fraction(1, 2))
        t.expect(power(root, 2) == a, "(a^(1/2))^2 = a", power(root, 2))
    return t.failures


# ---- matrix ----

@suite("det-engines")
def det_engines(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "det-engines")
    n = 2 + index % 5
    A = sample_matrix(rng, settings, n, n)
    B = sample_matrix(rng, settings, n, n)
    t = Trial(index, A, B)
    expanded, assigned, brute = mx.det(A), mx.det_assignment(A), brute_force_det(A)
    t.expect(expanded.value == assigned.value == brute.value, "det = det_assignment = brute_force_det",
             f"{expanded.value} / {assigned.value} / {brute.value}")
    t.expect(expanded.witnesses == brute.witnesses, "expansion witnesses = brute-force witnesses",
             f"{sorted(expanded.witnesses)} vs {sorted(brute.witnesses)}")
    t.expect(expanded.is_tie == assigned.is_tie, "both engines agree on ties",
             f"{expanded.is_tie} vs {assigned.is_tie}")
    product = mx.determinant(A @ B).value
    t.expect(ghost_surpasses(product, mul(expanded.value, mx.determinant(B).value)),
             "|AB| |= |A||B|", product)
    return t.failures


@suite("quasi-identity")
def quasi_identity(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "quasi-identity")
    n = 1 + index % 5
    A = sample_nonsingular(rng, settings, n, tangible_only=True)
    t = Trial(index, A)
    I_A, I_A_right = mx.quasi_identities(A)
    t.expect(mx.is_quasi_identity(I_A), "A A^∇ is a quasi-identity", I_A)
    t.expect(mx.is_quasi_identity(I_A_right), "A^∇ A is a quasi-identity", I_A_right)
    t.expect(I_A @ I_A == I_A, "I_A^2 = I_A", I_A @ I_A)
    t.expect(mx.determinant(I_A).value == ONE, "|I_A| = 1", mx.determinant(I_A).value)
    t.expect(mx.mat_ghost_surpasses(I_A, mx.identity(n)), "I_A |= Id", I_A)
    closed = mx.close(A)
    t.expect(I_A @ closed == closed, "I_A close(A) = close(A)", I_A @ closed)
    t.expect(mx.is_nonsingular(closed), "close(A) is nonsingular", mx.determinant(closed).value)
    t.expect(mx.independent(mx.columns(A)), "columns of a nonsingular matrix are independent", mx.rank(A))
    return t.failures


# ---- dual ----

@suite("dual-base")
def dual_base(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "dual-base")
    n = 1 + index % 5
    A = sample_closed_base(rng, settings, n)
    v = sample_vector(rng, settings, n)
    t = Trial(index, A, v)
    D = dual.dual_base(A)
    grid = dual.dual_eval_matrix(D)
    t.expect(_is_quasi_identity_pattern(grid), "eps_i(b_j): 1 on the diagonal, G0 elsewhere", grid)
    t.expect(dual.dual_rank(D) == n, f"dual rank = {n}", dual.dual_rank(D))
    projected = dual.project_closed(A, v)
    t.expect(dual.project_closed(A, projected) == projected, "project_closed is idempotent", projected)
    t.expect(dual.lower(A, projected) == dual.lower(A, v), "lower(project_closed(v)) = lower(v)",
             dual.lower(A, projected))
    ghostly = vec_nu(v)
    t.expect(dual.ghost_kernel_contains(A, ghostly), "ghost vectors lie in the ghost kernel", ghostly)
    return t.failures


@suite("double-dual")
def double_dual(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "dual-base")
    n = 1 + index % 5
    A = sample_closed_base(rng, settings, n)
    t = Trial(index, A)
    D = dual.dual_base(A)
    phi = dual.phi_matrix(D)
    t.expect(phi == mx.transpose(dual.dual_eval_matrix(D)), "b_j**(eps_i) = eps_i(b_j)", phi)
    t.expect(_is_quasi_identity_pattern(phi), "Phi grid: 1 on the diagonal, G0 elsewhere", phi)
    t.expect(mx.rank(phi) == n, f"rank of Phi = {n}", mx.rank(phi))
    monic = dual.is_ghost_monic(phi, 4, seed)
    t.expect(monic.verdict is Verdict.proved, "Phi is ghost monic (proved)", monic.verdict.value)
    t.expect(dual.is_tropically_onto(phi), "Phi is tropically onto", mx.rank(phi))
    return t.failures


# ---- bilinear ----

@suite("gram-schmidt")
def gram_schmidt(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "gram-schmidt")
    n = 2 + index % 4
    m = 1 + index % (n - 1)
    F = bl.BilinearForm(sample_gs_instance(rng, settings, n, m))
    B = standard_base(n)[:m]
    v = sample_vector(rng, settings, n)
    t = Trial(index, F.gram, v)
    result = bl.gs_step(F, B, v)
    for i, b in enumerate(B):
        pairing = bl.evaluate(F, result.corrected, b)
        t.expect(pairing.in_ghost_ideal, f"<v', b_{i}> in G0", pairing)
    actual = bl.evaluate(F, result.corrected, result.corrected)
    t.expect(actual == result.predicted, "<v',v'> = <v,v> + sum <v,b_j>(<v,b_j>+<b_j,v>)/beta_j",
             f"{actual} vs {result.predicted}")
    return t.failures


@suite("cs-gram")
def cs_gram(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "cs-gram")
    F = bl.BilinearForm(sample_pair_gram(rng, settings))
    e1, e2 = standard_base(2)
    v, w = sample_vector(rng, settings, 2), sample_vector(rng, settings, 2)
    t = Trial(index, F.gram, v, w)

    # <e_i, e_i> = g_ii is tangible, so every trial checks the equivalence
    vv, ww = bl.evaluate(F, e1, e1), bl.evaluate(F, e2, e2)
    vw, wv = bl.evaluate(F, e1, e2), bl.evaluate(F, e2, e1)
    surpass = ghost_surpasses(mul(vw, wv), mul(vv, ww))
    d = mx.determinant(bl.gram_of(F, [e1, e2])).value
    t.expect(surpass == d.in_ghost_ideal, "<v,w><w,v> |= <v,v><w,w> iff Gram determinant in G0",
             f"{surpass} vs |G| = {d}")

    for x, y in ((e1, e2), (v, w)):
        pc = bl.pair_class(F, x, y)
        if pc.cauchy_schwartz:
            t.expect(pc.strictly_compatible, "Cauchy-Schwartz implies strictly compatible", pc)
        if pc.weakly_cauchy_schwartz:
            t.expect(pc.compatible, "weakly Cauchy-Schwartz implies compatible", pc)
        whole, parts = bl.compatible_sum_check(F, x, y)
        if pc.strictly_compatible:
            t.expect(whole == parts, "<v+w,v+w> = <v,v>+<w,w> for strictly compatible pairs",
                     f"{whole} vs {parts}")
        if pc.compatible:
            t.expect(ghost_surpasses(whole, parts), "<v+w,v+w> |= <v,v>+<w,w> for compatible pairs", whole)
    return t.failures


def _diagonal_argmax(F: bl.BilinearForm, v: Vector) -> frozenset:
    """Indices i where nu(v_i^2 g_ii) is largest."""
    if not is_tangible_vector(v):
        raise DomainError(f"diagonal domination needs a tangible vector, got {v}")
    terms = [2 * x.value + F.gram[i, i].value for i, x in enumerate(v)]
    top = max(terms)
    return frozenset(i for i, q in enumerate(terms) if q == top)


@suite("cs1")
def cs1(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "cs1")
    n = 2 + index % 4
    F = bl.BilinearForm(sample_cs_gram(rng, settings, n))
    v = sample_vector(rng, settings, n, tangible_only=True)
    w = sample_vector(rng, settings, n, tangible_only=True)
    t = Trial(index, F.gram, v, w)
    pc = bl.pair_class(F, v, w)
    t.expect(pc.weakly_cauchy_schwartz, "tangible combinations of a CS base are weakly CS", pc)
    # off-diagonal terms sit strictly below the diagonal ones, so the
    # pair is CS exactly when v and w peak on different diagonal terms
    apart = _diagonal_argmax(F, v).isdisjoint(_diagonal_argmax(F, w))
    t.expect(pc.cauchy_schwartz == apart, "CS iff the dominant diagonal terms of v and w are disjoint",
             f"cauchy_schwartz {pc.cauchy_schwartz}, disjoint {apart}")
    return t.failures


@suite("degen")
def degen(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "degen")
    F = bl.BilinearForm(sample_strip_gram(rng, settings))
    base = standard_base(2)
    t = Trial(index, F.gram)
    if not bl.is_nondegenerate(F, base):
        return t.failures
    strip = bl.isotropic_strip(F, *base)
    t.expect(strip.nonempty, "a nondegenerate rank-2 form has an isotropic strip", strip.kind.value)
    t.expect(strip.verified, "strip endpoints and midpoint are g-isotropic", strip)
    return t.failures


@suite("decompose")
def decompose(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "decompose")
    n = 1 + index % 5
    F = bl.BilinearForm(sample_symmetric_gram(rng, settings, n))
    base = sample_independent_base(rng, settings, n)
    coeffs = sample_vector(rng, settings, n, tangible_only=True)
    t = Trial(index, F.gram, mx.from_columns(base))
    diagonal, D = qd.aniso_quadratic(F, base)
    for problem in bl.decomposition_violations(F, base, D):
        t.expect(False, "decomposition postconditions", problem)
    if diagonal is not None:
        alpha = Vector(coeffs[k] for k in range(diagonal.dim))
        lhs = qd.q_eval(qd.q_of_form(F), diagonal.vector(alpha))
        rhs = qd.q_eval(diagonal, alpha)
        t.expect(lhs == rhs, "Q_F on the anisotropic part = diagonal evaluation", f"{lhs} vs {rhs}")
    return t.failures


# ---- quadratic ----

@suite("quadlin")
def quadlin(index: int, seed: int, settings: Settings):
    rng = trial_rng(seed, index, "quadlin")
    n = 1 + index % 5
    Q = qd.Diagonal(tuple(sample_scalar(rng, settings) for _ in range(n)))
    t = Trial(index, Vector(Q.q))
    F = qd.form_from_q(Q)
    t.expect(bl.is_supertropically_symmetric(F), "B_Q is supertropically symmetric", F.gram)
    for _ in range(20):
        v, w = sample_vector(rng, settings, n), sample_vector(rng, settings, n)
        b = bl.evaluate(F, v, w)
        t.expect(power(b, 2) == mul(qd.q_eval(Q, v), qd.q_eval(Q, w)), "B_Q(v,w)^2 = Q(v)Q(w)", b)
        t.expect(bl.evaluate(F, v, v) == qd.q_eval(Q, v), "B_Q(v,v) = Q(v)", bl.evaluate(F, v, v))
        t.expect(bl.pair_class(F, v, w).weakly_cauchy_schwartz, "B_Q pairs are weakly CS", b)

    alpha = sample_scalar(rng, settings, tangible_only=True)
    v = sample_vector(rng, settings, n)
    for rep in (Q, qd.q_of_form(F)):
        scaled = qd.q_eval(rep, vec_scale(alpha, v))
        t.expect(scaled == mul(power(alpha, 2), qd.q_eval(rep, v)), "Q(alpha v) = alpha^2 Q(v)", scaled)

    a = sample_scalar(rng, settings, tangible_only=True)
    plane = qd.hyperbolic_plane(a)
    t.expect(qd.is_hyperbolic_plane(plane, *standard_base(2)), "hyperbolic_plane(a) is a hyperbolic plane",
             plane.gram)

    other = qd.Diagonal(tuple(sample_scalar(rng, settings) for _ in range(2)))
    w = sample_vector(rng, settings, 2)
    for left, right in ((Q, other), (qd.q_of_form(F), qd.q_of_form(plane))):
        total = qd.orthogonal_sum(left, right)
        joined = Vector(list(v) + list(w))
        lhs = qd.q_eval(total, joined)
        rhs = add(qd.q_eval(left, v), qd.q_eval(right, w))
        t.expect(lhs == rhs, "Q1+Q2 (v1, v2) = Q1(v1) + Q2(v2)", f"{lhs} vs {rhs}")
    t.expect(qd.orthogonal_sum(*qd.singletons(Q)) == Q, "sum of singletons = Q", Q)
    return t.failures


# ---- fixed examples ----

def _m(text: str) -> Matrix:
    return Matrix([[parse_scalar(tok) for tok in row.split()] for row in text.split(";")])


def _worked_examples() -> list[tuple[str, Callable[[], object], object]]:
    e1, e2 = standard_base(2)
    asym = bl.BilinearForm(_m("-inf 0; -inf -inf"))
    identity3 = mx.identity(3)
    return [
        ("hyperbolic plane: Q(e1+e2) = 0g",
         lambda: qd.q_eval(qd.q_of_form(qd.hyperbolic_plane(ONE)), vec_add(e1, e2)), GHOST_ONE),
        ("non-symmetric form: Q(e1+e2) = 0",
         lambda: qd.q_eval(qd.q_of_form(asym), vec_add(e1, e2)), ONE),
        ("non-symmetric form is not quasilinear",
         lambda: qd.quasilinearity_check(qd.q_of_form(asym), 8, 0).verdict, Quasilinearity.neither),
        ("standard base: Phi grid is the identity",
         lambda: dual.phi_matrix(dual.dual_base(identity3)), identity3),
        ("det [[0,1],[2,0]] = 3", lambda: mx.det(_m("0 1; 2 0")).value, tangible(3)),
        ("det [[1,2],[3,4]] = 5g", lambda: mx.det(_m("1 2; 3 4")).value, ghost(5)),
        ("pinv [[0,1],[2,0]]", lambda: mx.pseudo_inverse(_m("0 1; 2 0")), _m("-3 -2; -1 -3")),
        ("close [[0,1],[2,0]]", lambda: mx.close(_m("0 1; 2 0")), _m("0g 1; 2 0g")),
        ("B_Q of diagonal (0, 2)", lambda: qd.form_from_q(qd.Diagonal((ONE, tangible(2)))).gram, _m("0 1; 1 2")),
        ("B_Q of diagonal (0g, 2)",
         lambda: qd.form_from_q(qd.Diagonal((GHOST_ONE, tangible(2)))).gram, _m("0g 1g; 1g 2")),
        ("normalize (1g, 2) under the identity form",
         lambda: bl.normalize(bl.BilinearForm(mx.identity(2)), Vector([ghost(1), tangible(2)])),
         Vector([ghost(-1), ONE])),
        ("e2 under diagonal (0, 2)", lambda: qd.q_eval(qd.Diagonal((ONE, tangible(2))), unit_vector(2, 1)),
         tangible(2)),
    ]


def worked_examples(trials: int, seed: int) -> TrialReport:
    failures = []
    checks = _worked_examples()
    for index, (relation, compute, expected) in enumerate(checks):
        got = compute()
        if got != expected:
            failures.append(Failure(index=index, input=relation, expected=str(expected), got=str(got)))
    verdict = Verdict.counterexample if failures else Verdict.passed
    return TrialReport(suite="worked-examples", trials=len(checks), seed=seed, verdict=verdict, failures=failures)


# ---- runners ----

def suite_names() -> list[str]:
    return list(SUITES) + ["worked-examples"]


def run_suite(name: str, trials: Optional[int] = None, seed: Optional[int] = None) -> TrialReport:
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    trials = DEFAULT_TRIALS[name] if trials is None and name in DEFAULT_TRIALS else trials
    if name == "worked-examples":
        return worked_examples(trials or 1, seed)
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; known: {', '.join(suite_names())}")
    trial = SUITES[name]
    failures: list[Failure] = []
    for index in range(trials):
        failures.extend(trial(index, seed, settings))
    failures.sort(key=lambda f: f.index)
    verdict = Verdict.counterexample if failures else Verdict.passed
    logger.info("suite %s: %d trials, seed %d, %d failures", name, trials, seed, len(failures))
    return TrialReport(suite=name, trials=trials, seed=seed, verdict=verdict, failures=failures)


def run_all(trials: Optional[int] = None, seed: Optional[int] = None) -> list[TrialReport]:
    return [run_suite(name, trials, seed) for name in suite_names()]
