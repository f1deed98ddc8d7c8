"""
Exact supertropical semifield over (Q, +, <=) with zero adjoined.

Addition is max with the ghost rule, multiplication adds values. Every
scalar is immutable and compares structurally (tag + reduced Fraction).
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from app.models.enums import NuOrder, Tag
from app.utils.errors import DomainError, ParseError

RationalLike = Union[int, str, Fraction]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True, slots=True)
class Scalar:
    tag: Tag
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.tag is Tag.zero:
            if self.value is not None:
                raise ValueError("zero carries no value")
        else:
            if self.value is None:
                raise ValueError(f"{self.tag.value} scalar needs a value")
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_zero(self) -> bool:
        return self.tag is Tag.zero

    @property
    def is_tangible(self) -> bool:
        return self.tag is Tag.tangible

    @property
    def is_ghost(self) -> bool:
        return self.tag is Tag.ghost

    @property
    def in_ghost_ideal(self) -> bool:
        """Membership in G0 = ghosts together with zero."""
        return self.tag is not Tag.tangible

    def __add__(self, other: "Scalar") -> "Scalar":
        return add(self, other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return mul(self, other)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return mul(self, inv(other))

    def __pow__(self, r: RationalLike) -> "Scalar":
        return power(self, r)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar('{format_scalar(self)}')"


def tangible(q: RationalLike) -> Scalar:
    return Scalar(Tag.tangible, Fraction(q))


def ghost(q: RationalLike) -> Scalar:
    return Scalar(Tag.ghost, Fraction(q))


ZERO = Scalar(Tag.zero)
ONE = tangible(0)
GHOST_ONE = ghost(0)


# ---- arithmetic ----

def add(a: Scalar, b: Scalar) -> Scalar:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.value > b.value:
        return a
    if b.value > a.value:
        return b
    return Scalar(Tag.ghost, a.value)


def mul(a: Scalar, b: Scalar) -> Scalar:
    if a.is_zero or b.is_zero:
        return ZERO
    tag = Tag.ghost if (a.is_ghost or b.is_ghost) else Tag.tangible
    return Scalar(tag, a.value + b.value)


def nu(a: Scalar) -> Scalar:
    if a.is_zero:
        return ZERO
    return Scalar(Tag.ghost, a.value)


def inv(a: Scalar) -> Scalar:
    if a.is_zero:
        raise DomainError("division by zero")
    return Scalar(a.tag, -a.value)


def power(a: Scalar, r: RationalLike) -> Scalar:
    r = Fraction(r)
    if a.is_zero:
        if r <= 0:
            raise DomainError(f"division by zero: -inf raised to the power {r}")
        return ZERO
    return Scalar(a.tag, a.value * r)


def scalar_sum(xs: Iterable[Scalar]) -> Scalar:
    y = ZERO
    for x in xs:
        y = add(y, x)
    return y


def scalar_product(xs: Iterable[Scalar]) -> Scalar:
    y = ONE
    for x in xs:
        y = mul(y, x)
    return y


# ---- order and lifting ----

def nu_cmp(a: Scalar, b: Scalar) -> NuOrder:
    if a.is_zero and b.is_zero:
        return NuOrder.match
    if a.is_zero:
        return NuOrder.lt
    if b.is_zero:
        return NuOrder.gt
    if a.value < b.value:
        return NuOrder.lt
    if a.value > b.value:
        return NuOrder.gt
    return NuOrder.match


def nu_le(a: Scalar, b: Scalar) -> bool:
    return nu_cmp(a, b) is not NuOrder.gt


def nu_lt(a: Scalar, b: Scalar) -> bool:
    return nu_cmp(a, b) is NuOrder.lt


def tangible_lift(a: Scalar) -> Scalar:
    if a.is_zero:
        raise DomainError("tangible lift of -inf is undefined")
    return Scalar(Tag.tangible, a.value)


def ghost_surpasses(b: Scalar, a: Scalar) -> bool:
    """b |= a, i.e. b = a + c for some c in G0."""
    if b == a:
        return True
    return b.is_ghost and nu_le(a, b)


# ---- text grammar ----

def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ParseError(f"bad rational {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def parse_scalar(text: str) -> Scalar:
    token = text.strip()
    if token == "-inf":
        return ZERO
    if token.endswith("g"):
        return ghost(parse_rational(token[:-1]))
    return tangible(parse_rational(token))


def format_scalar(a: Scalar) -> str:
    if a.is_zero:
        return "-inf"
    suffix = "g" if a.is_ghost else ""
    return f"{format_rational(a.value)}{suffix}"
