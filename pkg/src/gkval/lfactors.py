"""Formal products of completed Hecke L-factors and epsilon factors.

A product is a multiset of atoms ``L_K(a*s + b, eta)^n`` and
``eps_K(a*s + b, eta)^n`` in normal form (sorted, merged, zero exponents
dropped).  Products stay symbolic; evaluation specializes an atom either
at a finite place (an Euler factor) or at an archimedean place (Gamma
factors).

Positive-pole bookkeeping rests on the standard analytic facts about
completed Hecke L-functions over a number field or a function field:

* ``L(x, 1)`` (trivial character) has simple poles exactly at x = 0, 1
  and no zeros with Re(x) >= 1;
* ``L(x, eta)`` for a nontrivial unitary unramified character is entire
  and has no zeros with Re(x) >= 1;
* epsilon factors are entire and nowhere vanishing.

Hence the only unconditional poles of a normalized product on the
positive real axis come from numerator ``L`` atoms with trivial
character, through a*s + b = 1.  Numerator atoms with a nontrivial
unitary character are reported, on request, as conditional candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import mpmath

from .characters import (
    AffineForm,
    HeckeCharacterDescriptor,
    RationalComplex,
    restrict_descriptor,
)
from .roots import SL2, SU21


class LFactorError(ValueError):
    pass


class PoleAtEvaluation(ArithmeticError):
    """An evaluation hit a pole of a Gamma or Euler factor."""


KIND_L = "L"
KIND_EPS = "eps"

PLACE_FINITE = "finite"
PLACE_REAL = "real"
PLACE_COMPLEX = "complex"
PLACE_GLOBAL = "global"


@dataclass(frozen=True)
class FieldDescriptor:
    label: str
    degree: int = 1
    place_kind: str = PLACE_GLOBAL

    def sort_key(self) -> tuple:
        return (self.label, self.degree, self.place_kind)


@dataclass(frozen=True)
class LFactorAtom:
    kind: str  # KIND_L or KIND_EPS
    field: FieldDescriptor
    arg: AffineForm
    character: HeckeCharacterDescriptor

    def __post_init__(self) -> None:
        if self.kind not in (KIND_L, KIND_EPS):
            raise LFactorError(f"unknown atom kind {self.kind!r}")

    def sort_key(self) -> tuple:
        return (
            self.kind,
            self.field.sort_key(),
            self.character.sort_key(),
            self.arg.a,
            self.arg.b,
        )

    def render(self, var: str = "s") -> str:
        name = "L" if self.kind == KIND_L else "eps"
        chi = "1"
        if self.character.quad_twist or not self.character.exponent.is_zero:
            parts = []
            if not self.character.exponent.is_zero:
                parts.append(f"|.|^({self.character.exponent.re},{self.character.exponent.im})")
            if self.character.quad_twist:
                parts.append("eta_[E:F]")
            chi = "*".join(parts)
        return f"{name}_{self.field.label}({self.arg.render(var)}, {chi})"


class MeromorphicProduct:
    """Normal-form product of L/eps atoms with integer exponents."""

    def __init__(self, pairs: Iterable[tuple[LFactorAtom, int]] = ()) -> None:
        merged: dict[LFactorAtom, int] = {}
        for atom, n in pairs:
            if not isinstance(n, int):
                raise LFactorError("exponents must be integers")
            merged[atom] = merged.get(atom, 0) + n
        self._pairs: tuple[tuple[LFactorAtom, int], ...] = tuple(
            sorted(
                ((a, n) for a, n in merged.items() if n != 0),
                key=lambda p: p[0].sort_key(),
            )
        )

    def __iter__(self) -> Iterator[tuple[LFactorAtom, int]]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MeromorphicProduct) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __mul__(self, other: "MeromorphicProduct") -> "MeromorphicProduct":
        return MeromorphicProduct(tuple(self) + tuple(other))

    def inverse(self) -> "MeromorphicProduct":
        return MeromorphicProduct((a, -n) for a, n in self)

    def __repr__(self) -> str:
        if not self._pairs:
            return "MeromorphicProduct(1)"
        body = " * ".join(
            f"{a.render()}^{n}" if n != 1 else a.render() for a, n in self
        )
        return f"MeromorphicProduct({body})"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list[dict]:
        out = []
        for atom, n in self:
            out.append(
                {
                    "kind": atom.kind,
                    "field": {
                        "label": atom.field.label,
                        "degree": atom.field.degree,
                        "place_kind": atom.field.place_kind,
                    },
                    "a": str(atom.arg.a),
                    "b": str(atom.arg.b),
                    "character": {
                        "exponent": [
                            str(atom.character.exponent.re),
                            str(atom.character.exponent.im),
                        ],
                        "twist": atom.character.quad_twist,
                    },
                    "exponent": n,
                }
            )
        return out

    @staticmethod
    def from_json(data: list[dict]) -> "MeromorphicProduct":
        pairs = []
        for entry in data:
            atom = LFactorAtom(
                kind=entry["kind"],
                field=FieldDescriptor(
                    label=entry["field"]["label"],
                    degree=int(entry["field"]["degree"]),
                    place_kind=entry["field"]["place_kind"],
                ),
                arg=AffineForm(Fraction(entry["a"]), Fraction(entry["b"])),
                character=HeckeCharacterDescriptor(
                    field_label=entry["field"]["label"],
                    degree=int(entry["field"]["degree"]),
                    exponent=RationalComplex(
                        Fraction(entry["character"]["exponent"][0]),
                        Fraction(entry["character"]["exponent"][1]),
                    ),
                    quad_twist=bool(entry["character"]["twist"]),
                ),
            )
            pairs.append((atom, int(entry["exponent"])))
        return MeromorphicProduct(pairs)


ONE = MeromorphicProduct()


def normalize(product: MeromorphicProduct | Iterable[tuple[LFactorAtom, int]]):
    if isinstance(product, MeromorphicProduct):
        return MeromorphicProduct(tuple(product))
    return MeromorphicProduct(product)


# ---------------------------------------------------------------------------
# the rank-one factor


def r_alpha(
    pairing: AffineForm,
    d_alpha: int,
    rank_one_type: str,
    eta: HeckeCharacterDescriptor,
) -> MeromorphicProduct:
    """The rank-one quotient of completed L- and eps-factors.

    SL2-type (SL2 over a degree-d_alpha field K):

        L_K(x, eta) / (eps_K(x, eta) L_K(1 + x, eta)),   x = pairing / d_alpha.

    SU21-type (special unitary group in three variables, E/K the
    quadratic layer inside the degree-2*d_alpha field E):

        L_E(x, eta) / (eps_E L_E(1 + x, eta))
          * L_K(y, eta' tw) / (eps_K L_K(1 + y, eta' tw)),

    with x = pairing / (4 d_alpha), y = pairing / (2 d_alpha), eta' the
    restriction of eta to K and tw the quadratic class character of E/K.
    """
    if d_alpha < 1:
        raise LFactorError("d_alpha must be positive")
    if rank_one_type == SL2:
        if eta.degree != d_alpha:
            raise LFactorError("character lives over the wrong field")
        field = FieldDescriptor(eta.field_label, d_alpha, PLACE_FINITE)
        x = pairing.scale(Fraction(1, d_alpha))
        return MeromorphicProduct(
            [
                (LFactorAtom(KIND_L, field, x, eta), 1),
                (LFactorAtom(KIND_EPS, field, x, eta), -1),
                (LFactorAtom(KIND_L, field, x.shift(1), eta), -1),
            ]
        )
    if rank_one_type == SU21:
        if eta.degree != 2 * d_alpha:
            raise LFactorError("character lives over the wrong field")
        field_e = FieldDescriptor(eta.field_label, 2 * d_alpha, PLACE_FINITE)
        eta_f = restrict_descriptor(eta)
        eta_f = HeckeCharacterDescriptor(
            field_label=eta_f.field_label,
            degree=eta_f.degree,
            exponent=eta_f.exponent,
            quad_twist=not eta_f.quad_twist,  # twist by the class character of E/K
            mode=eta_f.mode,
            q=eta_f.q,
        )
        field_f = FieldDescriptor(eta_f.field_label, d_alpha, PLACE_FINITE)
        x = pairing.scale(Fraction(1, 4 * d_alpha))
        y = pairing.scale(Fraction(1, 2 * d_alpha))
        return MeromorphicProduct(
            [
                (LFactorAtom(KIND_L, field_e, x, eta), 1),
                (LFactorAtom(KIND_EPS, field_e, x, eta), -1),
                (LFactorAtom(KIND_L, field_e, x.shift(1), eta), -1),
                (LFactorAtom(KIND_L, field_f, y, eta_f), 1),
                (LFactorAtom(KIND_EPS, field_f, y, eta_f), -1),
                (LFactorAtom(KIND_L, field_f, y.shift(1), eta_f), -1),
            ]
        )
    raise LFactorError(f"unknown rank-one type {rank_one_type!r}")


# ---------------------------------------------------------------------------
# poles


@dataclass(frozen=True)
class PoleEntry:
    location: Fraction
    order: int
    conditional: bool
    atom: LFactorAtom


@dataclass(frozen=True)
class PoleProfile:
    entries: tuple[PoleEntry, ...]

    @property
    def unconditional(self) -> tuple[PoleEntry, ...]:
        return tuple(e for e in self.entries if not e.conditional)

    def locations(self) -> tuple[Fraction, ...]:
        return tuple(sorted({e.location for e in self.unconditional}))


def poles_positive(
    product: MeromorphicProduct, include_conditional: bool = False
) -> PoleProfile:
    """Poles of a normalized product on the positive real s-axis.

    Locations are reported in the variable s of the atoms' affine forms
    (the caller fixed that variable when building the arguments).
    """
    entries = []
    for atom, n in product:
        if atom.kind != KIND_L or n <= 0:
            continue
        if atom.arg.a == 0:
            continue
        loc = (1 - atom.arg.b) / atom.arg.a
        if loc <= 0:
            continue
        if atom.character.is_trivial:
            entries.append(PoleEntry(loc, n, False, atom))
        elif include_conditional and atom.character.is_unitary:
            entries.append(PoleEntry(loc, n, True, atom))
    entries.sort(key=lambda e: (e.location, e.conditional))
    return PoleProfile(tuple(entries))


# ---------------------------------------------------------------------------
# evaluation


def _character_value_exponent(atom: LFactorAtom) -> complex:
    z = atom.character.exponent
    q = atom.character.q if atom.character.mode == "function" else None
    return z.numeric(q)


def local_euler_value(atom: LFactorAtom, q: int, s: complex) -> complex:
    """Value of one atom at a finite place with residue size q of the
    ground field; the atom's field is taken inert (residue size
    q^degree), and a quadratic twist contributes the sign -1 there."""
    if atom.kind == KIND_EPS:
        return 1.0  # unramified epsilon factors are 1
    q_k = q ** atom.field.degree
    c = -1.0 if atom.character.quad_twist else 1.0
    x = atom.arg(s) + _character_value_exponent(atom)
    denom = 1.0 - c * q_k ** (-x)
    if abs(denom) < 1e-14:
        raise PoleAtEvaluation(f"Euler factor pole at s={s}")
    return 1.0 / denom


def arch_value(atom: LFactorAtom, s: complex) -> complex:
    """Completed archimedean factor:

    * complex place:          2 (2 pi)^(-x) Gamma(x)
    * real place, sign char:  pi^(-(x+1)/2) Gamma((x+1)/2)
    * real place, trivial:    pi^(-x/2) Gamma(x/2)
    """
    if atom.kind == KIND_EPS:
        return 1.0
    x = atom.arg(s) + _character_value_exponent(atom)
    if atom.field.place_kind == PLACE_COMPLEX:
        g = _gamma(x)
        return 2.0 * mpmath.power(2 * mpmath.pi, -x) * g
    if atom.field.place_kind == PLACE_REAL:
        y = (x + 1) / 2 if atom.character.quad_twist else x / 2
        return mpmath.power(mpmath.pi, -y) * _gamma(y)
    raise LFactorError("archimedean evaluation needs a real or complex place")


def _gamma(x: complex) -> complex:
    if (
        abs(complex(x).imag) < 1e-12
        and complex(x).real <= 0
        and abs(complex(x).real - round(complex(x).real)) < 1e-12
    ):
        raise PoleAtEvaluation(f"Gamma pole at {x}")
    return complex(mpmath.gamma(x))


def evaluate_finite(product: MeromorphicProduct, q: int, s: complex) -> complex:
    val = complex(1.0)
    for atom, n in product:
        val *= local_euler_value(atom, q, s) ** n
    return val


def evaluate_arch(product: MeromorphicProduct, s: complex) -> complex:
    val = complex(1.0)
    for atom, n in product:
        val *= complex(arch_value(atom, s)) ** n
    return val
