"""First- and second-order differential operators on typed polynomial fields.

Conventions, fixed once here:
  * grad u of a vector field is the Jacobian, (i, j) entry d(u_i)/d(x_j);
  * div and curl act row-wise on matrix fields;
  * an operator name of the form "a_b" composes right to left, so
    t_curl(f) = transpose(curl(f)) and div_t(f) = div(transpose(f)).

The identity suite at the bottom compares canonical polynomial forms, never
point samples; a pass means the two sides agree exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .fields import (
    FieldKind,
    KindError,
    TypedField,
    levi_civita,
    mskw,
    vskw,
)
from .poly import P_ZERO, Poly3, monomials_up_to


# -- first-order operators ----------------------------------------------


def grad(f: TypedField) -> TypedField:
    if f.kind is FieldKind.SCALAR:
        p = f.comp(1)
        return TypedField.vector([p.partial(1), p.partial(2), p.partial(3)])
    if f.kind is FieldKind.VECTOR:
        rows = [[f.comp(i).partial(j) for j in range(1, 4)] for i in range(1, 4)]
        return TypedField.matrix(rows)
    raise KindError("grad needs a scalar or vector field")


def _vector_curl(c1: Poly3, c2: Poly3, c3: Poly3) -> list[Poly3]:
    comps = [c1, c2, c3]
    return [
        sum(
            (comps[k - 1].partial(j).scale(levi_civita(i, j, k)) for j in range(1, 4) for k in range(1, 4)),
            P_ZERO,
        )
        for i in range(1, 4)
    ]


def curl(f: TypedField) -> TypedField:
    if f.kind is FieldKind.VECTOR:
        return TypedField.vector(_vector_curl(f.comp(1), f.comp(2), f.comp(3)))
    if f.is_matrix_kind:
        rows = [_vector_curl(*[f.entry(i, j) for j in range(1, 4)]) for i in range(1, 4)]
        # tr(curl tau) = 2 div vskw tau, so curl of a symmetric field is trace-free.
        kind = FieldKind.TRACEFREE if f.kind is FieldKind.SYMMETRIC else FieldKind.MATRIX
        return TypedField.matrix(rows, kind)
    raise KindError("curl needs a vector or matrix field")


def div(f: TypedField) -> TypedField:
    if f.kind is FieldKind.VECTOR:
        return TypedField.scalar(sum((f.comp(i).partial(i) for i in range(1, 4)), P_ZERO))
    if f.is_matrix_kind:
        return TypedField.vector(
            [sum((f.entry(i, j).partial(j) for j in range(1, 4)), P_ZERO) for i in range(1, 4)]
        )
    raise KindError("div needs a vector or matrix field")


def deff(u: TypedField) -> TypedField:
    """Deformation operator sym grad u."""
    return grad(u).sym()


def dev_grad(u: TypedField) -> TypedField:
    return grad(u).dev()


def t_dev_grad(u: TypedField) -> TypedField:
    return grad(u).dev().transpose()


def sym_curl(f: TypedField) -> TypedField:
    return curl(f).sym()


def sym_curl_t(f: TypedField) -> TypedField:
    return curl(f.transpose()).sym()


def t_curl(f: TypedField) -> TypedField:
    return curl(f).transpose()


def div_t(f: TypedField) -> TypedField:
    return div(f.transpose())


# -- second-order operators -----------------------------------------------


def hess(w: TypedField) -> TypedField:
    if w.kind is not FieldKind.SCALAR:
        raise KindError("hess needs a scalar field")
    return deff(grad(w)).retag(FieldKind.SYMMETRIC)


def inc(g: TypedField) -> TypedField:
    """Incompatibility operator curl transpose curl, on symmetric fields."""
    if g.kind is not FieldKind.SYMMETRIC:
        raise KindError("inc needs a symmetric matrix field")
    return curl(t_curl(g)).retag(FieldKind.SYMMETRIC)


def grad_div(v: TypedField) -> TypedField:
    return grad(div(v))


def curl_div(f: TypedField) -> TypedField:
    return curl(div(f))


def div_div(f: TypedField) -> TypedField:
    return div(div(f))


def curl_deff(u: TypedField) -> TypedField:
    return curl(deff(u)).retag(FieldKind.TRACEFREE)


def t_curl_deff(u: TypedField) -> TypedField:
    return curl_deff(u).transpose()


def curl_div_t(f: TypedField) -> TypedField:
    return curl(div(f.transpose()))


# -- operator registry ------------------------------------------------------


@dataclass(frozen=True)
class OperatorId:
    """A named diagram operator together with its edge scale factor."""

    name: str
    scale: Fraction = Fraction(1)

    def apply(self, f: TypedField) -> TypedField:
        out = OPS[self.name](f)
        return out if self.scale == 1 else out.scale(self.scale)

    def label(self) -> str:
        return self.name if self.scale == 1 else f"{self.scale} {self.name}"


OPS: dict[str, Callable[[TypedField], TypedField]] = {
    "grad": grad,
    "curl": curl,
    "div": div,
    "deff": deff,
    "dev_grad": dev_grad,
    "t_dev_grad": t_dev_grad,
    "sym_curl": sym_curl,
    "sym_curl_t": sym_curl_t,
    "t_curl": t_curl,
    "div_t": div_t,
    "hess": hess,
    "inc": inc,
    "grad_div": grad_div,
    "curl_div": curl_div,
    "div_div": div_div,
    "curl_deff": curl_deff,
    "t_curl_deff": t_curl_deff,
    "curl_div_t": curl_div_t,
}


def apply_op(name: str, f: TypedField) -> TypedField:
    return OPS[name](f)


# -- seeded random fields ----------------------------------------------------


def derived_rng(seed: int, *stream: object) -> random.Random:
    """Deterministic per-sample RNG; parallel and serial runs agree."""
    tag = ":".join(str(s) for s in stream)
    return random.Random(f"{seed}:{tag}")


def random_poly(rng: random.Random, degree: int) -> Poly3:
    """Uniform integer coefficients in [-9, 9] over all monomials of degree <= degree."""
    return Poly3({m: Fraction(rng.randint(-9, 9)) for m in monomials_up_to(degree)})


def random_field(kind: FieldKind, degree: int, rng: random.Random) -> TypedField:
    if kind is FieldKind.SCALAR:
        return TypedField.scalar(random_poly(rng, degree))
    if kind is FieldKind.VECTOR:
        return TypedField.vector([random_poly(rng, degree) for _ in range(3)])
    m = TypedField.matrix([[random_poly(rng, degree) for _ in range(3)] for _ in range(3)])
    if kind is FieldKind.SYMMETRIC:
        return m.sym()
    if kind is FieldKind.TRACEFREE:
        return m.dev()
    if kind is FieldKind.SKEW:
        return m.skw()
    return m


# -- identity suite -----------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    """One algebraic identity: all expressions in `sides` must agree exactly."""

    name: str
    statement: str
    anchor: str
    input_kind: FieldKind
    sides: tuple[Callable[[TypedField], TypedField], ...]


def _half(f: TypedField) -> TypedField:
    return f.scale(Fraction(1, 2))


IDENTITIES: dict[str, Identity] = {
    ident.name: ident
    for ident in [
        Identity(
            "div-mskw",
            "div mskw v = -curl v",
            "Sec. 2 identity (a)",
            FieldKind.VECTOR,
            (lambda v: div(mskw(v)), lambda v: -curl(v)),
        ),
        Identity(
            "mskw-grad",
            "mskw grad w = -curl(w id)",
            "Sec. 2 identity (b)",
            FieldKind.SCALAR,
            (
                lambda w: mskw(grad(w)),
                lambda w: -curl(TypedField.identity_scaled(w.comp(1))),
            ),
        ),
        Identity(
            "mskw-curl",
            "mskw curl v = 2 skw grad v",
            "Sec. 2 identity (c)",
            FieldKind.VECTOR,
            (lambda v: mskw(curl(v)), lambda v: grad(v).skw().scale(2)),
        ),
        Identity(
            "skw-curl",
            "2 skw curl tau = mskw div S tau",
            "Sec. 2 identity (d)",
            FieldKind.MATRIX,
            (lambda t: curl(t).skw().scale(2), lambda t: mskw(div(t.s_op()))),
        ),
        Identity(
            "S-grad",
            "S grad v = -curl mskw v",
            "Sec. 2 identity (e)",
            FieldKind.VECTOR,
            (lambda v: grad(v).s_op(), lambda v: -curl(mskw(v))),
        ),
        Identity(
            # The sign is forced by identity (e): curl mskw v = -S grad v has
            # trace -div v + 3 div v = +2 div v.  On symmetric fields (the only
            # place downstream chains use this) both sides vanish either way.
            "tr-curl",
            "tr curl tau = 2 div vskw tau",
            "Sec. 2 identity (f)",
            FieldKind.MATRIX,
            (lambda t: curl(t).trace(), lambda t: div(vskw(t)).scale(2)),
        ),
        Identity(
            "eq2",
            "div T curl tau = curl div T tau",
            "Lemma 2.1 Eq. (2)",
            FieldKind.MATRIX,
            (lambda t: div(t_curl(t)), lambda t: curl(div_t(t))),
        ),
        Identity(
            "eq3",
            "curl T grad u = T grad curl u = T dev grad curl u",
            "Lemma 2.1 Eq. (3)",
            FieldKind.VECTOR,
            (
                lambda u: curl(grad(u).transpose()),
                lambda u: grad(curl(u)).transpose(),
                lambda u: t_dev_grad(curl(u)),
            ),
        ),
        Identity(
            "eq4",
            "div sym curl T tau = 1/2 curl div tau",
            "Lemma 2.1 Eq. (4)",
            FieldKind.MATRIX,
            (lambda t: div(sym_curl_t(t)), lambda t: _half(curl_div(t))),
        ),
        Identity(
            "eq5",
            "curl deff u = 1/2 T grad curl u = 1/2 T dev grad curl u",
            "Lemma 2.1 Eq. (5)",
            FieldKind.VECTOR,
            (
                lambda u: curl(deff(u)),
                lambda u: _half(grad(curl(u)).transpose()),
                lambda u: _half(t_dev_grad(curl(u))),
            ),
        ),
        Identity(
            "eq6",
            "1/2 div T dev grad u = 1/3 grad div u",
            "Lemma 2.1 Eq. (6)",
            FieldKind.VECTOR,
            (
                lambda u: _half(div(t_dev_grad(u))),
                lambda u: grad_div(u).scale(Fraction(1, 3)),
            ),
        ),
    ]
}


def components_equal(a: TypedField, b: TypedField) -> bool:
    """Exact equality of component polynomials, ignoring the kind tags."""
    if len(a.components) != len(b.components):
        return False
    return all((x - y).is_zero for x, y in zip(a.components, b.components))


@dataclass
class CheckResult:
    """Outcome of one exact check; witness carries the offending input.

    `error` marks precondition violations (as opposed to a nonzero residual).
    """

    name: str
    anchor: str
    passed: bool
    witness: str | None = None
    error: bool = False

    @property
    def status(self) -> str:
        return "pass" if self.passed else ("error" if self.error else "fail")


def verify_identity(name: str, samples: int, degree: int, seed: int) -> CheckResult:
    ident = IDENTITIES[name]
    for s in range(samples):
        rng = derived_rng(seed, "identity", name, s)
        f = random_field(ident.input_kind, degree, rng)
        values = [side(f) for side in ident.sides]
        if any(not components_equal(values[0], other) for other in values[1:]):
            from .fields import field_to_text

            return CheckResult(name, ident.anchor, False, field_to_text(f))
    return CheckResult(name, ident.anchor, True)


def verify_all_identities(samples: int, degree: int, seed: int) -> list[CheckResult]:
    return [verify_identity(name, samples, degree, seed) for name in IDENTITIES]
