"""Independent numerical checks of the symbolic factors.

Everything here is computed by a route that does not pass through the
symbolic algebra: truncated valuation-shell sums for the rank-one p-adic
integrals, direct Gamma-function evaluation for the archimedean ratios,
and the duplication identity.  The test suite compares these against the
symbolic pipeline.

Measures are self-dual with unramified additive character, so the
integer ring of every unramified local field has volume 1 and all local
lambda-constants are 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .characters import AffineForm, RationalComplex, HeckeCharacterDescriptor
from .lfactors import (
    FieldDescriptor,
    KIND_L,
    LFactorAtom,
    PLACE_COMPLEX,
    PLACE_REAL,
    arch_value,
    PoleAtEvaluation,
)


class OracleError(ValueError):
    pass


class DivergentIntegral(OracleError):
    """Re(s) <= 0: the shell series does not converge."""


class NotConverged(ArithmeticError):
    """The truncation depth does not meet the requested tolerance."""


PADIC_MODE = "p-adic"
FF_MODE = "function-field"

SL2_R = "SL2_R"
RES_CR = "ResC/R_SL2"
SU21_R = "SU21_R"
ARCH_CASES = (SL2_R, RES_CR, SU21_R)


@dataclass(frozen=True)
class LocalPlace:
    """Finite place of the ground field with residue size residue_q; the
    rank-one group may live over an unramified extension of residue
    degree ``extension``."""

    residue_q: int
    extension: int = 1
    mode: str = PADIC_MODE

    def __post_init__(self) -> None:
        if self.residue_q < 2:
            raise OracleError("residue cardinality must be at least 2")
        if self.extension < 1:
            raise OracleError("residue degree must be at least 1")
        if self.mode not in (PADIC_MODE, FF_MODE):
            raise OracleError(f"unknown place mode {self.mode!r}")

    @property
    def q_ext(self) -> int:
        return self.residue_q ** self.extension


@dataclass(frozen=True)
class OracleConfig:
    depth: int = 60
    tolerance: float = 1e-10
    samples: tuple = (1, Fraction(3, 2), 2, 3)

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise OracleError("depth must be at least 1")
        if self.tolerance <= 0:
            raise OracleError("tolerance must be positive")


DEFAULT_CONFIG = OracleConfig()


def _tail_bound(q: float, re_s: float, depth: int) -> float:
    return q ** (-depth * re_s) / (1.0 - q ** (-re_s))


# ---------------------------------------------------------------------------
# p-adic shell integrals


def gk_integral_sl2(
    place: LocalPlace, s: complex, cfg: OracleConfig = DEFAULT_CONFIG
) -> complex:
    """Rank-one intertwining integral on the spherical vector, over the
    field with residue size place.q_ext, by valuation shells:

        1 + (1 - 1/q_K) * sum_{k>=1} q_K^{-k s}.

    Converges to (1 - q_K^(-(1+s))) / (1 - q_K^(-s)) for Re(s) > 0.
    """
    s = complex(s)
    if s.real <= 0:
        raise DivergentIntegral("shell series needs Re(s) > 0")
    q_k = place.q_ext
    if _tail_bound(q_k, s.real, cfg.depth) > cfg.tolerance:
        raise NotConverged("increase depth or tolerance")
    total = complex(1.0)
    unit_shell = 1.0 - 1.0 / q_k
    for k in range(1, cfg.depth + 1):
        # shell of valuation -k: volume q_K^k (1 - 1/q_K), height q_K^k
        total += unit_shell * q_k ** (-k * s)
    return total


def sl2_closed_form(q_k: int, s: complex) -> complex:
    return (1.0 - q_k ** (-(1.0 + s))) / (1.0 - q_k ** (-s))


def gk_integral_su21_inert(
    place: LocalPlace, s: complex, cfg: OracleConfig = DEFAULT_CONFIG
) -> complex:
    """Rank-one integral for the quasi-split unitary group in three
    variables at an inert place, by brute-force strata.

    The unipotent radical is {(b, c) in E^2 : c + conj(c) = -b*conj(b)};
    strata are indexed by the depth k of b in the half-integral filtration
    and the depth m of the free antihermitian part of c, with volumes
    q^{2k}(1 - q^{-2}) resp. q^m(1 - q^{-1}); the Iwasawa height of a
    stratum is max(1, q^{2m}, q^{4k}) and the spherical section
    contributes height^{-(s+1)}.

    Converges to
        [(1 - q^(-2(1+s))) / (1 - q^(-2s))] * [(1 + q^(-(1+2s))) / (1 + q^(-2s))].
    """
    s = complex(s)
    if s.real <= 0:
        raise DivergentIntegral("shell series needs Re(s) > 0")
    q = place.residue_q
    if _tail_bound(q, 2.0 * s.real, cfg.depth) > cfg.tolerance:
        raise NotConverged("increase depth or tolerance")

    total = complex(0.0)
    for k in range(cfg.depth + 1):
        ck = 1.0 if k == 0 else 1.0 - q ** (-2)
        for m in range(cfg.depth + 1):
            cm = 1.0 if m == 0 else 1.0 - 1.0 / q
            # volume exponent 2k + m, height exponent max(0, 2m, 4k);
            # combined in one power of q to avoid overflow at depth
            h = max(0, 2 * m, 4 * k)
            total += ck * cm * q ** (2 * k + m - h * (s + 1.0))
    return total


def su21_inert_closed_form(q: int, s: complex) -> complex:
    a = (1.0 - q ** (-2.0 * (1.0 + s))) / (1.0 - q ** (-2.0 * s))
    b = (1.0 + q ** (-(1.0 + 2.0 * s))) / (1.0 + q ** (-2.0 * s))
    return a * b


def gk_integral_sl3(
    place: LocalPlace, s: complex, cfg: OracleConfig = DEFAULT_CONFIG
) -> complex:
    """Longest-element integral for the split rank-two special linear
    group: composition of rank-one integrals at arguments s, s and 2s."""
    return (
        gk_integral_sl2(place, s, cfg)
        * gk_integral_sl2(place, s, cfg)
        * gk_integral_sl2(place, 2 * s, cfg)
    )


# ---------------------------------------------------------------------------
# archimedean ratios


def arch_gk(case: str, s: complex) -> complex:
    """Real-place rank-one integral values, as explicit Gamma ratios:

    * SL2 over R:            (Gamma(1)/Gamma(1/2)) Gamma(s/2) / Gamma((s+1)/2)
    * SL2 over C, seen over R: (Gamma(2)/Gamma(1)) Gamma(s) / Gamma(s+1)
    * SU(2,1) over R:        (Gamma(3)/Gamma(3/2))
                               * Gamma(2s) Gamma(s+1/2) / (Gamma(2s+1) Gamma(s+1))
    """
    g = _safe_gamma
    if case == SL2_R:
        return g(1) / g(0.5) * g(s / 2) / g((s + 1) / 2)
    if case == RES_CR:
        return g(2) / g(1) * g(s) / g(s + 1)
    if case == SU21_R:
        return g(3) / g(1.5) * g(2 * s) * g(s + 0.5) / (g(2 * s + 1) * g(s + 1))
    raise OracleError(f"unknown archimedean case {case!r}")


def _safe_gamma(x: complex) -> complex:
    x = complex(x)
    if abs(x.imag) < 1e-12 and x.real <= 0 and abs(x.real - round(x.real)) < 1e-12:
        raise PoleAtEvaluation(f"Gamma pole at {x}")
    return complex(mpmath.gamma(x))


def _real_field(sign: bool) -> tuple[FieldDescriptor, HeckeCharacterDescriptor]:
    fd = FieldDescriptor("R", 1, PLACE_REAL)
    ch = HeckeCharacterDescriptor("R", 1, RationalComplex(), quad_twist=sign)
    return fd, ch


def _complex_field() -> tuple[FieldDescriptor, HeckeCharacterDescriptor]:
    fd = FieldDescriptor("C", 2, PLACE_COMPLEX)
    ch = HeckeCharacterDescriptor("C", 2, RationalComplex())
    return fd, ch


def normalizing_factor_arch(case: str, s: complex) -> complex:
    """The local normalizer L(1+x)/L(x) assembled from completed
    archimedean factors (epsilon factors are 1 here):

    * SL2 over R:    L_R(1+s) / L_R(s)
    * SL2 over C:    L_C(1+s) / L_C(s)
    * SU(2,1) over R: [L_C(1+s)/L_C(s)] * [L_R(1+2s, sgn)/L_R(2s, sgn)]
    """

    def lval(field, ch, form: AffineForm) -> complex:
        return complex(arch_value(LFactorAtom(KIND_L, field, form, ch), s))

    one_s = AffineForm.of(1, 1)
    just_s = AffineForm.of(1, 0)
    if case == SL2_R:
        fd, ch = _real_field(sign=False)
        return lval(fd, ch, one_s) / lval(fd, ch, just_s)
    if case == RES_CR:
        fd, ch = _complex_field()
        return lval(fd, ch, one_s) / lval(fd, ch, just_s)
    if case == SU21_R:
        fc, cc = _complex_field()
        fr, cr = _real_field(sign=True)
        return (
            lval(fc, cc, one_s)
            / lval(fc, cc, just_s)
            * lval(fr, cr, AffineForm.of(2, 1))
            / lval(fr, cr, AffineForm.of(2, 0))
        )
    raise OracleError(f"unknown archimedean case {case!r}")


def legendre_check(samples, tol: float = 1e-10) -> bool:
    """Duplication identities for Gamma(2s) and Gamma(2s+1)."""
    g = _safe_gamma
    rt_pi = complex(mpmath.sqrt(mpmath.pi))
    for s in samples:
        s = complex(s)
        lhs1 = g(2 * s)
        rhs1 = complex(mpmath.power(2, 2 * s - 1)) / rt_pi * g(s) * g(s + 0.5)
        lhs2 = g(2 * s + 1)
        rhs2 = complex(mpmath.power(2, 2 * s)) / rt_pi * g(s + 0.5) * g(s + 1)
        if abs(lhs1 - rhs1) > tol * max(1.0, abs(lhs1)):
            return False
        if abs(lhs2 - rhs2) > tol * max(1.0, abs(lhs2)):
            return False
    return True


# ---------------------------------------------------------------------------
# s-independence of the normalized operator


def s_independence_check(
    case: str,
    place: LocalPlace | None = None,
    samples=None,
    cfg: OracleConfig = DEFAULT_CONFIG,
    tol: float | None = None,
) -> tuple[bool, complex]:
    """The normalized spherical value is s-constant.

    Finite places ("SL2", "SU21"): shell integral divided by the closed
    form assembled from the symbolic local factors; the constant is 1.
    Archimedean cases: arch_gk * normalizing_factor_arch; the constant is
    whatever the measure normalization makes it.

    Returns (passed, observed constant at the first sample).
    """
    if samples is None:
        samples = cfg.samples
    if tol is None:
        tol = 1e-9
    values = []
    for s in samples:
        if case == "SL2":
            if place is None:
                raise OracleError("finite case needs a place")
            values.append(
                gk_integral_sl2(place, s, cfg) / sl2_closed_form(place.q_ext, complex(s))
            )
        elif case == "SU21":
            if place is None:
                raise OracleError("finite case needs a place")
            values.append(
                gk_integral_su21_inert(place, s, cfg)
                / su21_inert_closed_form(place.residue_q, complex(s))
            )
        elif case in ARCH_CASES:
            values.append(arch_gk(case, s) * normalizing_factor_arch(case, s))
        else:
            raise OracleError(f"unknown case {case!r}")
    ref = values[0]
    scale = max(1e-30, abs(ref))
    passed = all(abs(v - ref) <= tol * scale for v in values)
    return passed, ref


def lambda_product_check(
    qs, s: complex, cfg: OracleConfig = DEFAULT_CONFIG, tol: float = 1e-9
) -> bool:
    """With self-dual measures every finite-place constant is 1, so the
    product of the per-place constants over any finite set is 1."""
    prod = complex(1.0)
    for q in qs:
        _, const = s_independence_check("SL2", LocalPlace(q), (s,), cfg)
        prod *= const
    return abs(prod - 1.0) <= tol
