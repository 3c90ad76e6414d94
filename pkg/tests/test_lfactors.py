import json
import math
from fractions import Fraction

import pytest

from gkval import (
    AffineForm,
    HeckeCharacterDescriptor,
    LFactorAtom,
    MeromorphicProduct,
    PoleAtEvaluation,
    RationalComplex,
    SL2,
    SU21,
    arch_value,
    evaluate_finite,
    local_euler_value,
    normalize,
    poles_positive,
    r_alpha,
)
from gkval.lfactors import (
    FieldDescriptor,
    KIND_EPS,
    KIND_L,
    LFactorError,
    PLACE_COMPLEX,
    PLACE_FINITE,
    PLACE_REAL,
)


def trivial_eta(degree=1, label="F", quad=False):
    return HeckeCharacterDescriptor(label, degree, RationalComplex(),
                                    quad_twist=quad)


def atom(kind=KIND_L, a=1, b=0, degree=1, place=PLACE_FINITE, quad=False,
         label="F"):
    return LFactorAtom(
        kind=kind,
        field=FieldDescriptor(label, degree, place),
        arg=AffineForm.of(a, b),
        character=trivial_eta(degree, label, quad),
    )


def test_normalize_cancels_inverses():
    p = MeromorphicProduct([(atom(), 1), (atom(), -1)])
    assert len(p) == 0
    assert p == MeromorphicProduct()


def test_normalize_merges_duplicates():
    p = MeromorphicProduct([(atom(), 1), (atom(), 1)])
    assert list(p) == [(atom(), 2)]


def test_normalize_idempotent_and_multiplicative():
    p = MeromorphicProduct([(atom(), 1), (atom(b=1), -1)])
    q = MeromorphicProduct([(atom(b=1), 1), (atom(a=2), 3)])
    assert normalize(p) == p
    assert normalize(p * q) == normalize(normalize(p) * normalize(q))


def test_r_alpha_sl2_shape():
    p = r_alpha(AffineForm.of(1), 1, SL2, trivial_eta())
    pairs = {(a.kind, a.arg.a, a.arg.b): n for a, n in p}
    assert pairs == {
        (KIND_L, 1, 0): 1,
        (KIND_L, 1, 1): -1,
        (KIND_EPS, 1, 0): -1,
    }


def test_r_alpha_sl2_rescales_argument():
    # pairing 2s with d_alpha = 2 gives arguments in s directly
    p = r_alpha(AffineForm.of(2), 2, SL2, trivial_eta(2, "F_alpha"))
    for a, _ in p:
        assert a.field.degree == 2
        assert a.arg.a == 1


def test_r_alpha_su21_shape():
    eta = trivial_eta(2, "E_alpha")
    p = r_alpha(AffineForm.of(4), 1, SU21, eta)
    by_field = {}
    for a, n in p:
        by_field.setdefault(a.field.label, []).append((a.kind, a.arg.a, a.arg.b, n))
    e_args = sorted(by_field["E_alpha"])
    f_args = sorted(by_field["F"])
    assert e_args == [
        (KIND_L, 1, 0, 1), (KIND_L, 1, 1, -1), (KIND_EPS, 1, 0, -1),
    ]
    assert f_args == [
        (KIND_L, 2, 0, 1), (KIND_L, 2, 1, -1), (KIND_EPS, 2, 0, -1),
    ]
    # the degree-one factor carries the quadratic class character
    for a, _ in p:
        if a.field.label == "F":
            assert a.character.quad_twist


def test_r_alpha_denominator_arguments_shifted_by_one():
    for typ, deg in ((SL2, 1), (SU21, 2)):
        eta = trivial_eta(deg, "E_alpha" if typ == SU21 else "F")
        p = r_alpha(AffineForm.of(4), 1, typ, eta)
        nums = sorted(
            (a.field.label, a.arg.a, a.arg.b) for a, n in p
            if n > 0 and a.kind == KIND_L
        )
        dens = sorted(
            (a.field.label, a.arg.a, a.arg.b - 1) for a, n in p
            if n < 0 and a.kind == KIND_L
        )
        assert nums == dens


def test_r_alpha_rejects_wrong_field_degree():
    with pytest.raises(LFactorError):
        r_alpha(AffineForm.of(1), 2, SL2, trivial_eta(1))
    with pytest.raises(LFactorError):
        r_alpha(AffineForm.of(1), 1, SU21, trivial_eta(1))


def test_poles_sl2_trivial():
    prof = poles_positive(r_alpha(AffineForm.of(1), 1, SL2, trivial_eta()))
    assert [(e.location, e.order) for e in prof.unconditional] == [(1, 1)]


def test_poles_scale_linearly_with_argument():
    for d in (1, 2, 3):
        eta = trivial_eta(d, "F_alpha" if d > 1 else "F")
        prof = poles_positive(r_alpha(AffineForm.of(1), d, SL2, eta))
        assert prof.locations() == (Fraction(d),)


def test_poles_quad_twist_has_no_unconditional_pole():
    eta = trivial_eta(1, "F", quad=True)
    prof = poles_positive(r_alpha(AffineForm.of(1), 1, SL2, eta))
    assert prof.unconditional == ()
    prof2 = poles_positive(
        r_alpha(AffineForm.of(1), 1, SL2, eta), include_conditional=True
    )
    assert len(prof2.entries) == 1 and prof2.entries[0].conditional


def test_poles_nontrivial_unitary_conditional_only():
    eta = HeckeCharacterDescriptor("F", 1, RationalComplex.of(0, Fraction(1, 2)))
    prof = poles_positive(
        r_alpha(AffineForm.of(1), 1, SL2, eta), include_conditional=True
    )
    assert prof.unconditional == ()
    assert all(e.conditional for e in prof.entries)


def test_euler_values():
    assert local_euler_value(atom(), 3, 1) == pytest.approx(1.5)
    assert local_euler_value(atom(quad=True), 3, 1) == pytest.approx(0.75)
    assert local_euler_value(atom(degree=2, label="E_alpha"), 3, 1) == (
        pytest.approx(9 / 8)
    )
    assert local_euler_value(atom(kind=KIND_EPS), 3, 1) == 1.0


def test_euler_value_signals_pole():
    with pytest.raises(PoleAtEvaluation):
        local_euler_value(atom(), 3, 0)


def test_evaluate_finite_sl2_closed_form():
    p = r_alpha(AffineForm.of(1), 1, SL2, trivial_eta())
    for q in (2, 3, 5):
        for s in (1.0, 2.0, 2.5):
            want = (1 - q ** (-1 - s)) / (1 - q ** (-s))
            assert evaluate_finite(p, q, s) == pytest.approx(want, abs=1e-12)


def test_arch_values_explicit():
    c_atom = atom(degree=2, place=PLACE_COMPLEX, label="C")
    assert complex(arch_value(c_atom, 1)) == pytest.approx(1 / math.pi)
    r_sgn = atom(place=PLACE_REAL, quad=True, label="R")
    assert complex(arch_value(r_sgn, 1)) == pytest.approx(1 / math.pi)
    r_triv = atom(place=PLACE_REAL, label="R")
    assert complex(arch_value(r_triv, 2)) == pytest.approx(1 / math.pi)


def test_arch_value_signals_gamma_pole():
    r_triv = atom(place=PLACE_REAL, label="R")
    with pytest.raises(PoleAtEvaluation):
        arch_value(r_triv, 0)


def test_json_round_trip():
    eta = trivial_eta(2, "E_alpha")
    p = r_alpha(AffineForm.of(4, Fraction(1, 3)), 1, SU21, eta)
    blob = json.dumps(p.to_json(), sort_keys=True)
    back = MeromorphicProduct.from_json(json.loads(blob))
    assert back == p
    assert json.dumps(back.to_json(), sort_keys=True) == blob
