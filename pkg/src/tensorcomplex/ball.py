"""Exact integration over the unit ball, L2 pairings, moment spaces.

The domain is the open unit ball: star-shaped about the origin (so the
degree-raising homotopy operators apply), with every monomial integral a
rational multiple of pi.  Compact support is modeled by bump weights
(1 - |x|^2)^k, which vanish to order k on the boundary sphere and keep all
integration-by-parts boundary terms exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import (
    E1,
    E2,
    E3,
    FieldKind,
    KindError,
    TypedField,
    X_FIELD,
    cross,
    field_to_text,
    pairing_product,
)
from .operators import CheckResult, OPS, curl, derived_rng, div, grad, random_field
from .poly import P_ONE, Poly3
from .rational import PiScalar, RatMatrix


def _gamma_half(m: int) -> tuple[Fraction, int]:
    """Gamma(m + 1/2) as (rational, power of sqrt(pi)); the power is always 1."""
    return Fraction(math.factorial(2 * m), 4**m * math.factorial(m)), 1


def ball_monomial_integral(a: int, b: int, c: int) -> Fraction:
    """Coefficient q in  integral over the unit ball of x1^a x2^b x3^c = q*pi."""
    if a % 2 or b % 2 or c % 2:
        return Fraction(0)
    num = Fraction(1)
    sqrt_pi_power = 0
    for e in (a, b, c):
        g, p = _gamma_half(e // 2)
        num *= g
        sqrt_pi_power += p
    den, dp = _gamma_half((a + b + c) // 2 + 1)
    sqrt_pi_power -= dp
    if sqrt_pi_power != 2:
        raise AssertionError("sqrt(pi) factors did not cancel to a single pi")
    return Fraction(2, a + b + c + 3) * num / den


def integrate_ball(p: Poly3) -> PiScalar:
    total = Fraction(0)
    for (a, b, c), coeff in p.terms.items():
        total += coeff * ball_monomial_integral(a, b, c)
    return PiScalar(total)


def l2_pair(a: TypedField, b: TypedField) -> PiScalar:
    """Integral over the unit ball of the pointwise product (uv, u.v or u:v)."""
    return integrate_ball(pairing_product(a, b))


def bump(k: int) -> Poly3:
    """(1 - |x|^2)^k; k = 0 is the constant 1."""
    if k < 0:
        raise ValueError("bump order must be >= 0")
    base = Poly3(
        {
            (0, 0, 0): Fraction(1),
            (2, 0, 0): Fraction(-1),
            (0, 2, 0): Fraction(-1),
            (0, 0, 2): Fraction(-1),
        }
    )
    out = P_ONE
    for _ in range(k):
        out = out * base
    return out


@dataclass(frozen=True)
class BumpWeight:
    """(1 - |x|^2)^k, vanishing to order k on the unit sphere."""

    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("bump order must be >= 0")

    @property
    def polynomial(self) -> Poly3:
        return bump(self.order)

    def weight(self, f: TypedField) -> TypedField:
        return f.mul_scalar_poly(self.polynomial)


@dataclass(frozen=True)
class MomentSpace:
    """A finite-dimensional test space with an explicit polynomial basis."""

    name: str
    kind: FieldKind
    basis: tuple[TypedField, ...]


def _scalar(p: Poly3) -> TypedField:
    return TypedField.scalar(p)


CONSTANTS_SCALAR = MomentSpace("constants", FieldKind.SCALAR, (_scalar(P_ONE),))
CONSTANTS_VECTOR = MomentSpace("constants", FieldKind.VECTOR, (E1, E2, E3))
P1_SPACE = MomentSpace(
    "P1",
    FieldKind.SCALAR,
    (_scalar(P_ONE), _scalar(Poly3.variable(1)), _scalar(Poly3.variable(2)), _scalar(Poly3.variable(3))),
)
RT_SPACE = MomentSpace("RT", FieldKind.VECTOR, (E1, E2, E3, X_FIELD))
ND_SPACE = MomentSpace(
    "ND",
    FieldKind.VECTOR,
    (E1, E2, E3, cross(E1, X_FIELD), cross(E2, X_FIELD), cross(E3, X_FIELD)),
)

MOMENT_SPACES = {
    "constants-scalar": CONSTANTS_SCALAR,
    "constants-vector": CONSTANTS_VECTOR,
    "P1": P1_SPACE,
    "RT": RT_SPACE,
    "ND": ND_SPACE,
}


def moment_orthogonal(f: TypedField, space: MomentSpace) -> tuple[bool, TypedField | None, PiScalar | None]:
    """True iff (f, b) = 0 exactly for every basis element of the space.

    On failure, returns the offending basis element and the nonzero pairing.
    """
    if f.kind is not space.kind:
        raise KindError(f"{space.name} tests {space.kind.value} fields, got {f.kind.value}")
    for b in space.basis:
        v = l2_pair(f, b)
        if not v.is_zero:
            return False, b, v
    return True, None, None


def project_moment_orthogonal(f: TypedField, space: MomentSpace, weight_order: int = 1) -> TypedField:
    """Subtract a bump-weighted combination of basis fields to kill all moments.

    Returns f - sum_i c_i * bump(weight_order) * b_i with the c_i solved from
    the exact Gram system, so the result is orthogonal to the whole space.
    """
    w = bump(weight_order)
    weighted = [b.mul_scalar_poly(w) for b in space.basis]
    n = len(space.basis)
    gram = RatMatrix.from_rows(
        [[l2_pair(weighted[j], space.basis[i]).coeff for j in range(n)] for i in range(n)]
    )
    rhs = [l2_pair(f, b).coeff for b in space.basis]
    coeffs = _solve(gram, rhs)
    out = f
    for c, wb in zip(coeffs, weighted):
        out = out - wb.scale(c)
    return out


def _solve(m: RatMatrix, rhs: list[Fraction]) -> list[Fraction]:
    aug = RatMatrix.from_rows([m.row(i) + [rhs[i]] for i in range(m.rows)])
    rows, pivots = aug.rref()
    if any(p == m.cols for p in pivots):
        raise ValueError("inconsistent system")
    sol = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        sol[p] = rows[r][m.cols]
    return sol


# -- pairing identities --------------------------------------------------
#
# Each entry verifies one extension identity: with phi a bump-weighted test
# field, the pairing of `field` against op(phi) equals the stated multiple of
# the pairing of adj_op(field) against phi.  Requirements on the bump order
# guarantee the boundary terms vanish identically.

_PAIRINGS: dict[str, dict] = {
    "q-grad": dict(
        field_kind=FieldKind.VECTOR,
        test_kind=FieldKind.SCALAR,
        op="grad",
        adj="div",
        factor=Fraction(-1),
        min_bump=1,
        anchor="Sec. 6 extension lemma (q∘grad)",
    ),
    "sigma-deff": dict(
        field_kind=FieldKind.SYMMETRIC,
        test_kind=FieldKind.VECTOR,
        op="deff",
        adj="div",
        factor=Fraction(-1),
        min_bump=1,
        anchor="Sec. 6 extension lemma (σ∘deff)",
    ),
    "sigma-hess": dict(
        field_kind=FieldKind.SYMMETRIC,
        test_kind=FieldKind.SCALAR,
        op="hess",
        adj="div_div",
        factor=Fraction(1),
        min_bump=2,
        anchor="Sec. 6 extension lemma (σ∘hess)",
    ),
    "g-sym-curl": dict(
        field_kind=FieldKind.SYMMETRIC,
        test_kind=FieldKind.TRACEFREE,
        op="sym_curl",
        adj="curl",
        factor=Fraction(1),
        min_bump=1,
        anchor="Sec. 6 extension lemma (g∘sym curl)",
    ),
    "g-inc": dict(
        field_kind=FieldKind.SYMMETRIC,
        test_kind=FieldKind.SYMMETRIC,
        op="inc",
        adj="inc",
        factor=Fraction(1),
        min_bump=2,
        anchor="Sec. 6 extension lemma (g∘inc)",
    ),
    "tau-curl": dict(
        field_kind=FieldKind.TRACEFREE,
        test_kind=FieldKind.SYMMETRIC,
        op="curl",
        adj="sym_curl",
        factor=Fraction(1),
        min_bump=1,
        anchor="Sec. 6 extension lemma (τ∘curl)",
    ),
    "tau-dev-grad": dict(
        field_kind=FieldKind.TRACEFREE,
        test_kind=FieldKind.VECTOR,
        op="dev_grad",
        adj="div",
        factor=Fraction(-1),
        min_bump=1,
        anchor="Sec. 6 extension lemma (τ∘dev grad)",
    ),
    "tau-curl-deff": dict(
        # Adjoint chain: curl div T tau = div T curl tau (identity eq2),
        # then one div adjoint (a minus) and the eq3/eq5 trades give
        # (tau ∘ curl deff)(u) = -1/2 (curl div T tau)(u).
        field_kind=FieldKind.TRACEFREE,
        test_kind=FieldKind.VECTOR,
        op="curl_deff",
        adj="curl_div_t",
        factor=Fraction(-1, 2),
        min_bump=2,
        anchor="Sec. 6 extension lemma (τ∘curl deff)",
    ),
}

PAIRING_NAMES = tuple(_PAIRINGS)


def verify_ibp(which: str, samples: int, degree: int, bump_order: int, seed: int) -> CheckResult:
    """Both sides of the named pairing agree as exact pi-multiples."""
    spec = _PAIRINGS[which]
    if bump_order < spec["min_bump"]:
        raise ValueError(
            f"{which} needs bump order >= {spec['min_bump']} for boundary terms to vanish"
        )
    w = bump(bump_order)
    op = OPS[spec["op"]]
    adj = OPS[spec["adj"]]
    factor: Fraction = spec["factor"]
    for s in range(samples):
        rng = derived_rng(seed, "ibp", which, s)
        f = random_field(spec["field_kind"], degree, rng)
        raw = random_field(spec["test_kind"], degree, rng)
        phi = raw.mul_scalar_poly(w)
        lhs = l2_pair(f, op(phi))
        rhs = l2_pair(adj(f), phi) * factor
        if not (lhs - rhs).is_zero:
            return CheckResult(which, spec["anchor"], False, field_to_text(f))
    return CheckResult(which, spec["anchor"], True)


def verify_all_ibp(samples: int, degree: int, bump_order: int, seed: int) -> list[CheckResult]:
    return [verify_ibp(name, samples, degree, bump_order, seed) for name in _PAIRINGS]


def verify_membership_steps(samples: int, degree: int, seed: int) -> list[CheckResult]:
    """Moment-membership steps: images of bump-weighted fields land in the
    annihilators of the expected test spaces, exactly."""
    results = []

    def run(name: str, anchor: str, produce, space: MomentSpace):
        ok = True
        witness = None
        for s in range(samples):
            rng = derived_rng(seed, "membership", name, s)
            img = produce(rng)
            good, bad_basis, pairing = moment_orthogonal(img, space)
            if not good:
                ok = False
                witness = f"pairing with {field_to_text(bad_basis)} = {pairing}"
                break
        results.append(CheckResult(name, anchor, ok, witness))

    w1 = bump(1)

    run(
        "div of bumped trace-free field ⊥ RT",
        "Thm 2.3 proof (τ : id vanishes)",
        lambda rng: div(random_field(FieldKind.MATRIX, degree, rng).dev().mul_scalar_poly(w1)),
        RT_SPACE,
    )
    run(
        "div of bumped symmetric field ⊥ ND",
        "Thm 2.3 proof (symmetry)",
        lambda rng: div(random_field(FieldKind.MATRIX, degree, rng).sym().mul_scalar_poly(w1)),
        ND_SPACE,
    )
    run(
        "div of bumped ND-orthogonal vector ⊥ P1",
        "Thm 2.3 proof (grad p ∈ ND)",
        lambda rng: div(
            project_moment_orthogonal(
                random_field(FieldKind.VECTOR, degree, rng).mul_scalar_poly(w1), ND_SPACE
            )
        ),
        P1_SPACE,
    )
    run(
        "curl of bumped RT-orthogonal vector ⊥ ND",
        "Thm 2.3 proof (curl r = 2b)",
        lambda rng: curl(
            project_moment_orthogonal(
                random_field(FieldKind.VECTOR, degree, rng).mul_scalar_poly(w1), RT_SPACE
            )
        ),
        ND_SPACE,
    )
    run(
        "grad of bumped mean-zero scalar ⊥ RT",
        "Thm 2.3 proof (zero mean)",
        lambda rng: grad(
            project_moment_orthogonal(
                random_field(FieldKind.SCALAR, degree, rng).mul_scalar_poly(w1), CONSTANTS_SCALAR
            )
        ),
        RT_SPACE,
    )

    # negative control: a constant field is not orthogonal to a space containing it
    good, bad_basis, pairing = moment_orthogonal(TypedField.scalar(P_ONE), P1_SPACE)
    results.append(
        CheckResult(
            "negative control: constant vs P1 detected",
            "Thm 2.3 proof",
            not good and not pairing.is_zero,
            None if not good else "orthogonality unexpectedly held",
        )
    )
    return results
