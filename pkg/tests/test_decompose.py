from fractions import Fraction

import pytest

from tensorcomplex.decompose import (
    DECOMPOSITION_NAMES,
    decompose,
    regdec_cc,
    regdec_dd,
    regdec_short,
    verify_all_decompositions,
    verify_decomposition,
)
from tensorcomplex.fields import FieldKind, KindError, TypedField, field_from_text
from tensorcomplex.operators import (
    components_equal,
    deff,
    derived_rng,
    hess,
    random_field,
    sym_curl,
    t_dev_grad,
)
from tensorcomplex.poly import Poly3, X1, X2, X3


def test_all_decompositions_reconstruct_exactly():
    results = verify_all_decompositions(samples=4, degree=2, seed=7)
    assert len(results) == 6
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_cc_on_hessian_field():
    g = hess(TypedField.scalar(X1 * X2 * X3))
    dec = regdec_cc(g)
    assert dec.parts[0].potential.is_zero  # inc g = 0 so the leading part vanishes
    assert dec.is_exact


def test_cc_on_zero():
    dec = regdec_cc(TypedField.zero(FieldKind.SYMMETRIC))
    assert all(p.potential.is_zero for p in dec.parts)


def test_dd_leading_projector_on_unit_witness():
    sigma = TypedField.matrix(
        [[(Poly3.variable(i) * Poly3.variable(j)).scale(Fraction(1, 12)) for j in range(1, 4)] for i in range(1, 4)],
        FieldKind.SYMMETRIC,
    )
    dec = regdec_dd(sigma)
    assert components_equal(dec.parts[0].potential, sigma)
    assert dec.parts[1].potential.is_zero and dec.parts[2].potential.is_zero


def test_dd_on_inc_image_hits_zero_branch():
    from tensorcomplex.operators import inc

    sigma = inc(random_field(FieldKind.SYMMETRIC, 2, derived_rng(5, "incimg")))
    dec = regdec_dd(sigma)
    assert dec.parts[0].potential.is_zero  # div div sigma = 0
    assert dec.is_exact


def test_dd_idempotent_on_own_leading_part():
    rng = derived_rng(7, "idem")
    sigma = random_field(FieldKind.SYMMETRIC, 2, rng)
    s0 = regdec_dd(sigma).parts[0].potential
    again = regdec_dd(s0)
    assert components_equal(again.parts[0].potential, s0)
    assert again.parts[1].potential.is_zero and again.parts[2].potential.is_zero


def test_cd_zero_branch_on_t_dev_grad_image():
    rng = derived_rng(3, "cdzero")
    tau = t_dev_grad(random_field(FieldKind.VECTOR, 3, rng))
    dec = decompose("cd", tau)
    assert dec.parts[0].potential.is_zero  # curl div tau = 0
    assert dec.is_exact


def test_part_kinds():
    rng = derived_rng(11, "kinds")
    dec = decompose("cc", random_field(FieldKind.SYMMETRIC, 2, rng))
    assert [p.potential.kind for p in dec.parts] == [FieldKind.SYMMETRIC, FieldKind.VECTOR, FieldKind.SCALAR]
    dec = decompose("dd", random_field(FieldKind.SYMMETRIC, 2, rng))
    assert [p.potential.kind for p in dec.parts] == [FieldKind.SYMMETRIC, FieldKind.TRACEFREE, FieldKind.SYMMETRIC]
    dec = decompose("cd", random_field(FieldKind.TRACEFREE, 2, rng))
    assert [p.potential.kind for p in dec.parts] == [
        FieldKind.TRACEFREE,
        FieldKind.SYMMETRIC,
        FieldKind.VECTOR,
        FieldKind.VECTOR,
    ]


def test_short_cc_on_deff_image():
    rng = derived_rng(13, "short")
    g = deff(random_field(FieldKind.VECTOR, 3, rng))
    dec = regdec_short(g, "cc")
    assert dec.parts[0].potential.is_zero
    assert components_equal(deff(dec.parts[1].potential), g)


def test_short_dd_on_sym_curl_image():
    rng = derived_rng(17, "short")
    sigma = sym_curl(random_field(FieldKind.TRACEFREE, 3, rng))
    dec = regdec_short(sigma, "dd")
    assert dec.parts[0].potential.is_zero
    assert dec.is_exact


def test_short_cd_zero_input():
    dec = regdec_short(TypedField.zero(FieldKind.TRACEFREE), "cd")
    assert all(p.potential.is_zero for p in dec.parts)


def test_degree_growth_bounded_by_two():
    rng = derived_rng(19, "deg")
    for name in DECOMPOSITION_NAMES:
        from tensorcomplex.decompose import _DECOMPOSERS

        kind = _DECOMPOSERS[name][1]
        f = random_field(kind, 2, rng)
        dec = decompose(name, f)
        for p in dec.parts:
            if not p.potential.is_zero:
                assert p.potential.degree() <= f.degree() + 2, (name, p.label)


def test_decompositions_are_deterministic():
    rng = derived_rng(23, "det")
    f = random_field(FieldKind.SYMMETRIC, 2, rng)
    assert regdec_cc(f).to_text() == regdec_cc(f).to_text()


def test_serialization_round_trips_parts():
    rng = derived_rng(29, "ser")
    dec = regdec_dd(random_field(FieldKind.SYMMETRIC, 2, rng))
    text = dec.to_text()
    blocks = text.split("\n\n")
    assert blocks[0].startswith("input:")
    # each part block carries its reassembly operator and parses back
    for block, part in zip(blocks[1:], dec.parts):
        header, _, body = block.partition("\n")
        assert part.reassembly.name in header
        assert components_equal(field_from_text(body), part.potential)


def test_kind_preconditions():
    with pytest.raises(KindError):
        regdec_cc(TypedField.zero(FieldKind.TRACEFREE))
    with pytest.raises(KindError):
        decompose("cd", TypedField.zero(FieldKind.SYMMETRIC))
    with pytest.raises(ValueError):
        regdec_short(TypedField.zero(FieldKind.SYMMETRIC), "nope")


def test_wrong_kind_report():
    r = verify_decomposition("cc", samples=1, degree=1, seed=5)
    assert r.passed
