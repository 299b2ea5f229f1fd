"""Exact ball quadrature against a spherical-coordinates sympy oracle,
moment spaces, and the duality-pairing identities."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from tensorcomplex.ball import (
    CONSTANTS_SCALAR,
    ND_SPACE,
    P1_SPACE,
    PAIRING_NAMES,
    RT_SPACE,
    ball_monomial_integral,
    bump,
    integrate_ball,
    l2_pair,
    moment_orthogonal,
    project_moment_orthogonal,
    verify_all_ibp,
    verify_ibp,
    verify_membership_steps,
)
from tensorcomplex.fields import E1, FieldKind, TypedField, X_FIELD
from tensorcomplex.operators import derived_rng, random_field
from tensorcomplex.poly import P_ONE, X1, X2

from conftest import polys


def spherical_oracle(a: int, b: int, c: int):
    """Independent quadrature of x1^a x2^b x3^c over the unit ball."""
    r, th, ph = sympy.symbols("r th ph", positive=True)
    x = r * sympy.sin(th) * sympy.cos(ph)
    y = r * sympy.sin(th) * sympy.sin(ph)
    z = r * sympy.cos(th)
    integrand = x**a * y**b * z**c * r**2 * sympy.sin(th)
    return sympy.integrate(
        sympy.integrate(sympy.integrate(integrand, (ph, 0, 2 * sympy.pi)), (th, 0, sympy.pi)),
        (r, 0, 1),
    )


@pytest.mark.parametrize(
    "mono",
    [(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 1, 0), (2, 2, 0), (4, 0, 0), (2, 2, 2), (1, 0, 0), (3, 1, 2)],
)
def test_monomial_integrals_match_spherical_oracle(mono):
    coeff = ball_monomial_integral(*mono)
    expected = spherical_oracle(*mono)
    assert sympy.Rational(coeff.numerator, coeff.denominator) * sympy.pi == sympy.nsimplify(expected)


def test_unit_ball_volume():
    assert str(integrate_ball(P_ONE)) == "4/3*pi"


def test_x1_squared():
    assert str(integrate_ball(X1 * X1)) == "4/15*pi"


def test_odd_monomial_vanishes():
    assert integrate_ball(X1 * X2).is_zero


@given(polys(), polys())
def test_integration_is_linear(p, q):
    assert (integrate_ball(p + q) - integrate_ball(p) - integrate_ball(q)).is_zero


@given(polys())
def test_master_ibp_identity(p):
    # the single lemma behind every pairing: boundary terms vanish exactly
    for k in (1, 2):
        for i in (1, 2, 3):
            assert integrate_ball((bump(k) * p).partial(i)).is_zero


def test_l2_pair_examples():
    one = TypedField.scalar(P_ONE)
    assert str(l2_pair(one, one)) == "4/3*pi"
    assert str(l2_pair(X_FIELD, X_FIELD)) == "4/5*pi"
    from tensorcomplex.fields import ID_FIELD

    rng = derived_rng(3, "devpair")
    tau = random_field(FieldKind.MATRIX, 3, rng).dev()
    assert l2_pair(ID_FIELD, tau).is_zero  # pointwise trace-free


def test_bump_orders():
    assert bump(0) == P_ONE
    b1 = bump(1)
    assert b1.coeff((0, 0, 0)) == 1 and b1.coeff((2, 0, 0)) == -1
    assert bump(2) == b1 * b1
    with pytest.raises(ValueError):
        bump(-1)


def test_bump_weight_record():
    from tensorcomplex.ball import BumpWeight

    w = BumpWeight(2)
    assert w.polynomial == bump(2)
    assert w.weight(TypedField.scalar(X1)).comp(1) == bump(2) * X1
    with pytest.raises(ValueError):
        BumpWeight(-1)


def test_moment_space_dimensions():
    assert len(P1_SPACE.basis) == 4
    assert len(RT_SPACE.basis) == 4
    assert len(ND_SPACE.basis) == 6
    assert len(CONSTANTS_SCALAR.basis) == 1


def test_moment_orthogonal_odd_scalar():
    ok, _, _ = moment_orthogonal(TypedField.scalar(X1), CONSTANTS_SCALAR)
    assert ok


def test_moment_orthogonal_failure_reports_witness():
    ok, basis, pairing = moment_orthogonal(TypedField.scalar(P_ONE), P1_SPACE)
    assert not ok
    assert str(pairing) == "4/3*pi"
    assert basis.comp(1) == P_ONE


def test_moment_kind_mismatch():
    with pytest.raises(Exception):
        moment_orthogonal(E1, P1_SPACE)


def test_projection_kills_all_moments():
    rng = derived_rng(5, "proj")
    v = random_field(FieldKind.VECTOR, 3, rng).mul_scalar_poly(bump(1))
    out = project_moment_orthogonal(v, ND_SPACE)
    ok, _, _ = moment_orthogonal(out, ND_SPACE)
    assert ok


@pytest.mark.parametrize("name", PAIRING_NAMES)
def test_pairing_identities(name):
    r = verify_ibp(name, samples=4, degree=2, bump_order=2, seed=7)
    assert r.passed, r.witness


def test_pairing_count_is_eight():
    assert len(PAIRING_NAMES) == 8
    assert len(verify_all_ibp(1, 1, 2, 0)) == 8


def test_insufficient_bump_order_rejected():
    with pytest.raises(ValueError, match="bump order"):
        verify_ibp("sigma-hess", samples=1, degree=1, bump_order=1, seed=0)


def test_q_grad_pairing_spec_example():
    # q = e1, test fn bump(1) * x1: both sides equal and here both vanish
    w = TypedField.scalar(bump(1) * X1)
    from tensorcomplex.operators import div, grad

    lhs = l2_pair(E1, grad(w))
    rhs = l2_pair(div(E1), w) * Fraction(-1)
    assert (lhs - rhs).is_zero and lhs.is_zero


def test_sigma_hess_id_spec_example():
    # sigma = id, w~ = bump(2): div div id = 0 forces the laplacian integral to 0
    from tensorcomplex.fields import ID_FIELD
    from tensorcomplex.operators import hess

    w = TypedField.scalar(bump(2))
    lhs = l2_pair(ID_FIELD, hess(w))
    assert lhs.is_zero


def test_membership_steps():
    results = verify_membership_steps(samples=3, degree=2, seed=7)
    assert len(results) == 6
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]
