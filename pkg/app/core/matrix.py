"""
Supertropical matrix algebra: products, determinants (permanents) by two
engines, adjoints, the quasi-inverse A^∇, quasi-identities, tropical rank
and closed bases.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from app.core.assignment import forbid, solve_assignment
from app.core.scalar import (
    ONE,
    ZERO,
    Scalar,
    add,
    format_scalar,
    ghost_surpasses,
    inv,
    mul,
    nu,
)
from app.core.vector import Vector
from app.models.enums import Engine, Tag
from app.utils.config import get_settings
from app.utils.errors import CapacityError, DomainError, ShapeError

logger = logging.getLogger(__name__)

Permutation = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Matrix:
    grid: tuple

    def __post_init__(self):
        grid = tuple(tuple(row) for row in self.grid)
        if not grid or not grid[0]:
            raise ShapeError("matrix must have at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ShapeError("matrix rows have different lengths")
        object.__setattr__(self, "grid", grid)

    @property
    def rows(self) -> int:
        return len(self.grid)

    @property
    def cols(self) -> int:
        return len(self.grid[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.grid[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.grid[i])

    def col(self, j: int) -> Vector:
        return Vector(row[j] for row in self.grid)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.grid)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(format_scalar(x) for x in row) for row in self.grid)


@dataclass(frozen=True, slots=True)
class DetResult:
    value: Scalar
    witnesses: frozenset

    @property
    def is_tie(self) -> bool:
        return len(self.witnesses) >= 2


# ---- construction ----

def identity(n: int) -> Matrix:
    return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def from_columns(vectors: Sequence[Vector]) -> Matrix:
    if not vectors:
        raise ShapeError("need at least one column")
    n = vectors[0].dim
    if any(v.dim != n for v in vectors):
        raise ShapeError("columns have different dimensions")
    return Matrix([[v[i] for v in vectors] for i in range(n)])


def from_rows(vectors: Sequence[Vector]) -> Matrix:
    return Matrix([list(v) for v in vectors])


def columns(A: Matrix) -> list[Vector]:
    return [A.col(j) for j in range(A.cols)]


def transpose(A: Matrix) -> Matrix:
    return Matrix([[A[i, j] for i in range(A.rows)] for j in range(A.cols)])


def minor(A: Matrix, drop_row: int, drop_col: int) -> Matrix:
    return Matrix([
        [x for j, x in enumerate(row) if j != drop_col]
        for i, row in enumerate(A.grid) if i != drop_row
    ])


def submatrix(A: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return Matrix([[A[i, j] for j in cols] for i in rows])


def nu_matrix(A: Matrix) -> Matrix:
    return Matrix([[nu(x) for x in row] for row in A.grid])


# ---- products ----

def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise ShapeError(f"shape mismatch: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    out = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = ZERO
            for k in range(A.cols):
                acc = add(acc, mul(A[i, k], B[k, j]))
            row.append(acc)
        out.append(row)
    return Matrix(out)


def mat_vec(A: Matrix, v: Vector) -> Vector:
    if A.cols != v.dim:
        raise ShapeError(f"shape mismatch: {A.rows}x{A.cols} times vector of dimension {v.dim}")
    out = []
    for i in range(A.rows):
        acc = ZERO
        for k in range(A.cols):
            acc = add(acc, mul(A[i, k], v[k]))
        out.append(acc)
    return Vector(out)


def mat_scale(a: Scalar, A: Matrix) -> Matrix:
    return Matrix([[mul(a, x) for x in row] for row in A.grid])


def mat_ghost_surpasses(M: Matrix, N: Matrix) -> bool:
    if (M.rows, M.cols) != (N.rows, N.cols):
        raise ShapeError("shape mismatch")
    return all(ghost_surpasses(M[i, j], N[i, j]) for i in range(M.rows) for j in range(M.cols))


# ---- determinants ----

def _require_square(A: Matrix, what: str) -> None:
    if not A.is_square:
        raise ShapeError(f"{what} needs a square matrix, got {A.rows}x{A.cols}")


def _det_result(best: Optional[Fraction], witnesses: set, ghost_on_unique: bool) -> DetResult:
    if best is None:
        return DetResult(ZERO, frozenset())
    tag = Tag.ghost if (len(witnesses) >= 2 or ghost_on_unique) else Tag.tangible
    return DetResult(Scalar(tag, best), frozenset(witnesses))


def det(A: Matrix) -> DetResult:
    """Permanent by expansion over the permutations with all-nonzero products."""
    _require_square(A, "determinant")
    n = A.rows
    cap = get_settings().expand_cap
    if n > cap:
        raise CapacityError(f"expansion determinant is capped at n = {cap}, got n = {n}")

    support = [[j for j in range(n) if not A[i, j].is_zero] for i in range(n)]
    best: Optional[Fraction] = None
    witnesses: set = set()
    ghost_on_best = False

    chosen: list[int] = []
    used = [False] * n

    def walk(i: int, total: Fraction, has_ghost: bool) -> None:
        nonlocal best, ghost_on_best
        if i == n:
            perm = tuple(chosen)
            if best is None or total > best:
                best, ghost_on_best = total, has_ghost
                witnesses.clear()
                witnesses.add(perm)
            elif total == best:
                witnesses.add(perm)
            return
        for j in support[i]:
            if used[j]:
                continue
            used[j] = True
            chosen.append(j)
            entry = A[i, j]
            walk(i + 1, total + entry.value, has_ghost or entry.is_ghost)
            chosen.pop()
            used[j] = False

    walk(0, Fraction(0), False)
    return _det_result(best, witnesses, ghost_on_best)


def det_assignment(A: Matrix) -> DetResult:
    """Permanent via optimal assignment; ties found by forbidding each optimal edge in turn."""
    _require_square(A, "determinant")
    n = A.rows
    weights = [[None if x.is_zero else x.value for x in row] for row in A.grid]
    solved = solve_assignment(weights)
    if solved is None:
        return DetResult(ZERO, frozenset())
    best, perm = solved
    witnesses = {perm}
    for i in range(n):
        probe = solve_assignment(forbid(weights, i, perm[i]))
        if probe is not None and probe[0] == best:
            logger.debug("assignment probe: edge (%d, %d) is not needed for the optimum", i, perm[i])
            witnesses.add(probe[1])
    ghost_on_best = any(A[i, perm[i]].is_ghost for i in range(n))
    return _det_result(best, witnesses, ghost_on_best)


def default_engine(A: Matrix) -> Engine:
    return Engine.expand if A.rows <= min(5, get_settings().expand_cap) else Engine.assign


def determinant(A: Matrix, engine: Optional[Engine] = None) -> DetResult:
    if engine is None:
        engine = default_engine(A)
    logger.debug("determinant of %dx%d via %s", A.rows, A.cols, engine.value)
    if engine is Engine.expand:
        return det(A)
    return det_assignment(A)


def is_nonsingular(A: Matrix) -> bool:
    return A.is_square and determinant(A).value.is_tangible


# ---- adjoint and quasi-inverse ----

def adjoint(A: Matrix) -> Matrix:
    """adj(A)[i][j] = |minor of A without row j and column i|."""
    _require_square(A, "adjoint")
    n = A.rows
    if n == 1:
        return Matrix([[ONE]])
    return Matrix([[determinant(minor(A, j, i)).value for j in range(n)] for i in range(n)])


def _require_nonsingular(A: Matrix) -> Scalar:
    _require_square(A, "quasi-inverse")
    d = determinant(A).value
    if not d.is_tangible:
        raise DomainError(f"singular matrix: |A| = {format_scalar(d)}")
    return d


def pseudo_inverse(A: Matrix) -> Matrix:
    """A^∇ = adj(A) / |A|."""
    d = _require_nonsingular(A)
    return mat_scale(inv(d), adjoint(A))


def quasi_identities(A: Matrix) -> tuple[Matrix, Matrix]:
    """(I_A, I'_A) = (A A^∇, A^∇ A)."""
    P = pseudo_inverse(A)
    return mat_mul(A, P), mat_mul(P, A)


def is_quasi_identity(M: Matrix) -> bool:
    _require_square(M, "quasi-identity test")
    if mat_mul(M, M) != M:
        return False
    if determinant(M).value != ONE:
        return False
    return mat_ghost_surpasses(M, identity(M.rows))


def double_pseudo(A: Matrix) -> Matrix:
    """A^∇∇ = A^∇ A A^∇."""
    P = pseudo_inverse(A)
    return mat_mul(P, mat_mul(A, P))


# ---- rank and independence ----

def rank(A: Matrix) -> int:
    """Largest k with a k x k submatrix of tangible determinant."""
    cap = get_settings().rank_cap
    if A.rows > cap or A.cols > cap:
        raise CapacityError(f"rank is capped at {cap}x{cap}, got {A.rows}x{A.cols}")
    for k in range(min(A.rows, A.cols), 0, -1):
        for rows in combinations(range(A.rows), k):
            for cols in combinations(range(A.cols), k):
                if determinant(submatrix(A, rows, cols)).value.is_tangible:
                    return k
    return 0


def independent(vectors: Sequence[Vector]) -> bool:
    if not vectors:
        return True
    k, n = len(vectors), vectors[0].dim
    if k > n:
        return False
    return rank(from_columns(vectors)) == k


# ---- closed bases ----

def close(A: Matrix) -> Matrix:
    """Ā = I_A A."""
    I_A, _ = quasi_identities(A)
    return mat_mul(I_A, A)


def is_closed_base(A: Matrix) -> bool:
    I_A, _ = quasi_identities(A)
    return mat_mul(I_A, A) == A
