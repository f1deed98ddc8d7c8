from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from app.core.scalar import ONE, ZERO, Scalar, add, format_scalar, ghost_surpasses, mul, nu
from app.utils.errors import ShapeError


@dataclass(frozen=True, slots=True)
class Vector:
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ShapeError("vector must have positive dimension")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __add__(self, other: "Vector") -> "Vector":
        return vec_add(self, other)

    def __str__(self) -> str:
        return " ".join(format_scalar(x) for x in self.entries)

    def __repr__(self) -> str:
        return f"Vector('{self}')"


def _same_dim(v: Vector, w: Vector) -> None:
    if v.dim != w.dim:
        raise ShapeError(f"dimension mismatch: {v.dim} vs {w.dim}")


def zero_vector(n: int) -> Vector:
    return Vector((ZERO,) * n)


def unit_vector(n: int, i: int) -> Vector:
    return Vector(ONE if j == i else ZERO for j in range(n))


def standard_base(n: int) -> list[Vector]:
    return [unit_vector(n, i) for i in range(n)]


def vec_add(v: Vector, w: Vector) -> Vector:
    _same_dim(v, w)
    return Vector(add(a, b) for a, b in zip(v, w))


def vec_scale(a: Scalar, v: Vector) -> Vector:
    return Vector(mul(a, x) for x in v)


def vec_nu(v: Vector) -> Vector:
    return Vector(nu(x) for x in v)


def lin_comb(coeffs: Sequence[Scalar], vectors: Sequence[Vector], dim: Optional[int] = None) -> Vector:
    """Entrywise sum of coeffs[i] * vectors[i]."""
    if len(coeffs) != len(vectors):
        raise ShapeError(f"{len(coeffs)} coefficients for {len(vectors)} vectors")
    if not vectors:
        if dim is None:
            raise ShapeError("empty combination needs an explicit dimension")
        return zero_vector(dim)
    n = vectors[0].dim
    if dim is not None and dim != n:
        raise ShapeError(f"dimension mismatch: {dim} vs {n}")
    out = [ZERO] * n
    for a, v in zip(coeffs, vectors):
        if v.dim != n:
            raise ShapeError(f"dimension mismatch: {v.dim} vs {n}")
        for j, x in enumerate(v):
            out[j] = add(out[j], mul(a, x))
    return Vector(out)


def is_ghost_vector(v: Vector) -> bool:
    return all(x.in_ghost_ideal for x in v)


def is_tangible_vector(v: Vector) -> bool:
    return all(x.is_tangible for x in v)


def vec_ghost_surpasses(v: Vector, w: Vector) -> bool:
    _same_dim(v, w)
    return all(ghost_surpasses(a, b) for a, b in zip(v, w))
