"""Unramified characters of the maximal torus and their coroot compositions.

Exponents are exact: a complex scalar is a pair of rationals.  Two modes:

* number mode: the exponent lattice is all of C, nothing is reduced;
* function-field mode over a constant field of size q: imaginary parts
  are stored as rational multiples of 2*pi/log(q) and are reduced modulo
  the unramified-triviality lattice (multiples of 1 for the ground field,
  of 1/degree for a constant-field extension of that degree).

``pair`` and ``compose_with_coroot`` share one pairing vector, so the
unramified-twist compatibility (twisting the character by a point on a
ray shifts the local variable) holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .roots import SL2, SU21, RelativeRoot, RelativeRootSystem, RootSystemError


class CharacterError(ValueError):
    """Malformed character or ray datum."""


NUMBER_MODE = "number"
FUNCTION_MODE = "function"


@dataclass(frozen=True)
class RationalComplex:
    """Exact complex scalar re + i*im (in function-field mode the imaginary
    unit carries the factor 2*pi/log q)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re, im=0) -> "RationalComplex":
        return RationalComplex(Fraction(re), Fraction(im))

    def __add__(self, other: "RationalComplex") -> "RationalComplex":
        return RationalComplex(self.re + other.re, self.im + other.im)

    def scale(self, c: Fraction) -> "RationalComplex":
        return RationalComplex(self.re * c, self.im * c)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def numeric(self, q: int | None = None) -> complex:
        import math

        im = float(self.im)
        if q is not None:
            im *= 2 * math.pi / math.log(q)
        return complex(float(self.re), im)


@dataclass(frozen=True)
class AffineForm:
    """a*s + b with exact rational coefficients."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    @staticmethod
    def of(a, b=0) -> "AffineForm":
        return AffineForm(Fraction(a), Fraction(b))

    def __add__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.a + other.a, self.b + other.b)

    def scale(self, c: Fraction) -> "AffineForm":
        return AffineForm(self.a * c, self.b * c)

    def shift(self, c) -> "AffineForm":
        return AffineForm(self.a, self.b + Fraction(c))

    def __call__(self, s: complex) -> complex:
        return float(self.a) * s + float(self.b)

    def render(self, var: str = "s") -> str:
        if self.a == 0:
            return str(self.b)
        coef = "" if self.a == 1 else f"{self.a}*"
        if self.b == 0:
            return f"{coef}{var}"
        sign = "+" if self.b > 0 else "-"
        return f"{coef}{var} {sign} {abs(self.b)}"


IDENTITY_FORM = AffineForm(Fraction(1), Fraction(0))


@dataclass(frozen=True)
class UnramifiedCharacter:
    """Exponent vector over the relative character space, one coordinate per
    relative simple root."""

    exponents: tuple[RationalComplex, ...]
    mode: str = NUMBER_MODE
    q: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in (NUMBER_MODE, FUNCTION_MODE):
            raise CharacterError(f"unknown mode {self.mode!r}")
        if self.mode == FUNCTION_MODE:
            if not isinstance(self.q, int) or self.q < 2:
                raise CharacterError("function-field mode needs a prime power q >= 2")
            canon = tuple(
                RationalComplex(z.re, z.im % 1) for z in self.exponents
            )
            object.__setattr__(self, "exponents", canon)

    @staticmethod
    def trivial(rank: int, mode: str = NUMBER_MODE, q: int | None = None):
        return UnramifiedCharacter((RationalComplex(),) * rank, mode, q)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def is_unitary(self) -> bool:
        return all(z.re == 0 for z in self.exponents)

    @property
    def is_trivial(self) -> bool:
        return all(z.is_zero for z in self.exponents)

    def twist(self, direction: Sequence[Fraction], s0: RationalComplex):
        """Multiply by the unramified character attached to s0 * direction."""
        if len(direction) != self.rank:
            raise CharacterError("direction has wrong rank")
        new = tuple(
            z + s0.scale(Fraction(c)) for z, c in zip(self.exponents, direction)
        )
        return UnramifiedCharacter(new, self.mode, self.q)


@dataclass(frozen=True)
class HeckeCharacterDescriptor:
    """An unramified idele-class character of a field of given degree over
    the ground field, with an optional quadratic twist by the character of
    a relative quadratic extension."""

    field_label: str
    degree: int
    exponent: RationalComplex
    quad_twist: bool = False
    mode: str = NUMBER_MODE
    q: int | None = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise CharacterError("field degree must be positive")
        if self.mode == FUNCTION_MODE:
            lattice = Fraction(1, self.degree)
            canon = RationalComplex(self.exponent.re, self.exponent.im % lattice)
            object.__setattr__(self, "exponent", canon)

    @property
    def is_trivial(self) -> bool:
        return self.exponent.is_zero and not self.quad_twist

    @property
    def is_unitary(self) -> bool:
        return self.exponent.re == 0

    def shifted(self, delta: RationalComplex) -> "HeckeCharacterDescriptor":
        return replace(self, exponent=self.exponent + delta)

    def sort_key(self) -> tuple:
        return (
            self.field_label,
            self.degree,
            self.quad_twist,
            self.exponent.re,
            self.exponent.im,
        )


# ---------------------------------------------------------------------------
# pairing


def pair(
    system: RelativeRootSystem,
    direction: Sequence,
    alpha: RelativeRoot,
    base: Sequence | None = None,
) -> AffineForm:
    """<lambda, alpha^vee> as an affine form in the ray parameter s, for the
    ray lambda = base + s * direction.

    Along the principal ray of a rank-one system this takes the value
    d_alpha * s (SL2-type) and 4 d_alpha * s (SU21-type).
    """
    vec = system.coroot_pairing_vector(alpha)
    if len(direction) != len(vec):
        raise CharacterError("ray direction has wrong rank")
    a = sum(Fraction(c) * v for c, v in zip(direction, vec)) or Fraction(0)
    b = Fraction(0)
    if base is not None:
        if len(base) != len(vec):
            raise CharacterError("ray base point has wrong rank")
        b = sum(Fraction(c) * v for c, v in zip(base, vec)) or Fraction(0)
    return AffineForm(a, b)


def local_scale(alpha: RelativeRoot) -> int:
    """Denominator turning the pairing into the rank-one local variable."""
    return alpha.d_alpha if alpha.rank_one_type == SL2 else 4 * alpha.d_alpha


def compose_with_coroot(
    system: RelativeRootSystem,
    chi: UnramifiedCharacter,
    alpha: RelativeRoot,
) -> HeckeCharacterDescriptor:
    """chi composed with the coroot of alpha.

    The resulting descriptor lives over the field of definition of the
    rank-one group: the degree-d_alpha field for SL2-type, its quadratic
    extension (degree 2 d_alpha) for SU21-type.  The exponent is in the
    normalization of the descriptor's own field, i.e. the rank-one local
    variable: pairing exponent divided by d_alpha resp. 4 d_alpha.
    """
    if chi.rank != system.rank:
        raise CharacterError("character has wrong rank")
    vec = system.coroot_pairing_vector(alpha)
    scale = local_scale(alpha)
    acc = RationalComplex()
    for z, c in zip(chi.exponents, vec):
        acc = acc + z.scale(Fraction(c))
    exponent = acc.scale(Fraction(1, scale))
    if alpha.rank_one_type == SU21:
        label, degree = "E_alpha", 2 * alpha.d_alpha
    else:
        label, degree = ("F" if alpha.d_alpha == 1 else "F_alpha"), alpha.d_alpha
    return HeckeCharacterDescriptor(
        field_label=label,
        degree=degree,
        exponent=exponent,
        quad_twist=False,
        mode=chi.mode,
        q=chi.q,
    )


def restrict_descriptor(eta: HeckeCharacterDescriptor) -> HeckeCharacterDescriptor:
    """Restriction of a character of a quadratic extension to the base.

    The exponent doubles (the modulus of the extension restricts to the
    square of the base modulus).  A quadratic twist that is itself the
    base change of the extension's class character restricts trivially,
    so the twist flag is dropped; the twist of the restricted factor is
    supplied separately by the factor construction.
    """
    if eta.degree % 2 != 0:
        raise CharacterError("can only restrict along a quadratic layer")
    return HeckeCharacterDescriptor(
        field_label="F" if eta.degree == 2 else "F_alpha",
        degree=eta.degree // 2,
        exponent=eta.exponent.scale(Fraction(2)),
        quad_twist=False,
        mode=eta.mode,
        q=eta.q,
    )
