"""Degree-raising homotopy operators and the right-inverse constructions.

On a homogeneous degree-k component, with x the coordinate field:

    tg(v) = (v . x) / (k + 1)      potential for grad
    tc(q) = (q x x) / (k + 2)      potential for curl
    td(u) = (x u)   / (k + 3)      potential for div

These satisfy, exactly and unconditionally on polynomials,

    tg(grad w)          = w - w(0)
    grad(tg v) + tc(curl v) = v
    curl(tc q) + td(div q)  = q
    div(td u)           = u

so tg / tc / td are right inverses of grad / curl / div on curl-free /
divergence-free / arbitrary inputs respectively.  Every matrix-space right
inverse below is an executable chain of these, with its defining identity
checked exactly by the test suite.  Compact-support or boundary-condition
semantics are not modeled; moment-orthogonality preconditions are optional
("strict" mode) because the homogeneous operators do not need them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .ball import MomentSpace, ND_SPACE, P1_SPACE, RT_SPACE, moment_orthogonal
from .fields import FieldKind, KindError, TypedField, cross, field_to_text, vskw, X_FIELD
from .operators import (
    CheckResult,
    OPS,
    components_equal,
    curl,
    curl_deff,
    curl_div,
    deff,
    derived_rng,
    dev_grad,
    div,
    div_div,
    div_t,
    grad,
    grad_div,
    hess,
    inc,
    random_field,
    sym_curl,
    sym_curl_t,
    t_curl,
    t_dev_grad,
)
from .poly import P_ZERO, Poly3, monomials_up_to
from .rational import RatMatrix


class PreconditionError(ValueError):
    """A kernel or moment precondition failed; carries the witness field."""

    def __init__(self, message: str, witness: str):
        super().__init__(message)
        self.witness = witness


# -- the three homotopy operators -----------------------------------------


def tg(v: TypedField) -> TypedField:
    """Scalar potential of a vector field: per degree k, (v . x)/(k+1)."""
    if v.kind is not FieldKind.VECTOR:
        raise KindError("tg needs a vector field")
    out = P_ZERO
    for i in range(1, 4):
        for k, part in v.comp(i).homogeneous_parts().items():
            out = out + (part * Poly3.variable(i)).scale(Fraction(1, k + 1))
    return TypedField.scalar(out)


def tc(q: TypedField) -> TypedField:
    """Vector potential of a divergence-free field: per degree k, (q x x)/(k+2)."""
    if q.kind is not FieldKind.VECTOR:
        raise KindError("tc needs a vector field")
    comps = [P_ZERO, P_ZERO, P_ZERO]
    for i in range(1, 4):
        for k, part in q.comp(i).homogeneous_parts().items():
            piece = cross(
                TypedField.vector([part if j == i else P_ZERO for j in range(1, 4)]), X_FIELD
            )
            for j in range(3):
                comps[j] = comps[j] + piece.comp(j + 1).scale(Fraction(1, k + 2))
    return TypedField.vector(comps)


def td(u: TypedField) -> TypedField:
    """Vector potential of a scalar field: per degree k, (x u)/(k+3)."""
    if u.kind is not FieldKind.SCALAR:
        raise KindError("td needs a scalar field")
    comps = [P_ZERO, P_ZERO, P_ZERO]
    for k, part in u.comp(1).homogeneous_parts().items():
        for j in range(1, 4):
            comps[j - 1] = comps[j - 1] + (part * Poly3.variable(j)).scale(Fraction(1, k + 3))
    return TypedField.vector(comps)


def tg_rows(m: TypedField) -> TypedField:
    """Apply tg to each row of a matrix field; grad of the result is m when
    every row is curl-free."""
    return TypedField.vector([tg(m.row(i)).comp(1) for i in range(1, 4)])


def tc_rows(m: TypedField) -> TypedField:
    """Apply tc to each row; row-wise curl of the result is m when every row
    is divergence-free."""
    return TypedField.matrix([[p for p in tc(m.row(i)).components] for i in range(1, 4)])


def td_component_rows(v: TypedField) -> TypedField:
    """Matrix whose row i is td(v_i); its row-wise divergence is v."""
    return TypedField.matrix([[p for p in td(TypedField.scalar(v.comp(i))).components] for i in range(1, 4)])


KOSZUL_OPS = {"Tg": tg, "Tc": tc, "Td": td}


def koszul_apply(which: str, f: TypedField) -> TypedField:
    """Apply Tg / Tc / Td; matrix inputs are handled row-wise."""
    if f.is_matrix_kind:
        if which == "Tg":
            return tg_rows(f)
        if which == "Tc":
            return tc_rows(f)
        raise KindError("row-wise Td acts on vectors (one row per component)")
    return KOSZUL_OPS[which](f)


def homotopy_check(samples: int, degree: int, seed: int) -> list[CheckResult]:
    """The four exact homotopy identities on random fields."""
    checks = [
        (
            "tg(grad w) = w - w(0)",
            FieldKind.SCALAR,
            lambda w: components_equal(
                tg(grad(w)), TypedField.scalar(w.comp(1) - Poly3.const(w.comp(1).constant_term()))
            ),
        ),
        (
            "grad(tg v) + tc(curl v) = v",
            FieldKind.VECTOR,
            lambda v: components_equal(grad(tg(v)) + tc(curl(v)), v),
        ),
        (
            "curl(tc q) + td(div q) = q",
            FieldKind.VECTOR,
            lambda q: components_equal(curl(tc(q)) + td(div(q)), q),
        ),
        (
            "div(td u) = u",
            FieldKind.SCALAR,
            lambda u: components_equal(div(td(u)), u),
        ),
    ]
    results = []
    for name, kind, check in checks:
        ok = True
        witness = None
        for s in range(samples):
            rng = derived_rng(seed, "homotopy", name, s)
            f = random_field(kind, degree, rng)
            if not check(f):
                ok, witness = False, field_to_text(f)
                break
        results.append(CheckResult(name, "Eq. (17) realization", ok, witness))
    return results


def constant_curl_correction(u: TypedField) -> TypedField:
    """Remove the rigid rotation behind a constant curl: u - (1/2) b x x.

    Requires curl u to be a constant vector b; the output is curl-free and
    has the same deformation (deff) as u.
    """
    cu = curl(u)
    b = []
    for i in range(1, 4):
        p = cu.comp(i)
        if p.degree() > 0:
            raise PreconditionError("curl u is not constant", field_to_text(u))
        b.append(p.constant_term())
    bx = cross(TypedField.vector([Poly3.const(c) for c in b]), X_FIELD)
    return u - bx.scale(Fraction(1, 2))


# -- kernel sampling --------------------------------------------------------


def kind_basis(kind: FieldKind, degree: int) -> list[TypedField]:
    """Monomial basis of the kind-constrained polynomial space of degree <= degree."""
    monos = monomials_up_to(degree)
    if kind is FieldKind.SCALAR:
        return [TypedField.scalar(Poly3.monomial(m)) for m in monos]
    if kind is FieldKind.VECTOR:
        return [
            TypedField.vector([Poly3.monomial(m) if i == j else P_ZERO for j in range(3)])
            for i in range(3)
            for m in monos
        ]
    if kind is FieldKind.MATRIX:
        slots = [(i, j) for i in range(1, 4) for j in range(1, 4)]
    elif kind is FieldKind.SYMMETRIC:
        slots = [(i, j) for i in range(1, 4) for j in range(i, 4)]
    elif kind is FieldKind.SKEW:
        slots = [(i, j) for i in range(1, 4) for j in range(i + 1, 4)]
    else:  # trace-free: off-diagonal entries plus two traceless diagonal modes
        slots = [(i, j) for i in range(1, 4) for j in range(1, 4) if i != j] + [(1, 1), (2, 2)]
    out = []
    for slot in slots:
        for m in monos:
            p = Poly3.monomial(m)
            rows = [[P_ZERO, P_ZERO, P_ZERO] for _ in range(3)]
            i, j = slot
            rows[i - 1][j - 1] = p
            if kind is FieldKind.SYMMETRIC and i != j:
                rows[j - 1][i - 1] = p
            elif kind is FieldKind.SKEW:
                rows[j - 1][i - 1] = -p
            elif kind is FieldKind.TRACEFREE and i == j:
                rows[2][2] = -p
            out.append(TypedField.matrix(rows, kind))
    return out


def _field_coords(f: TypedField, degree: int) -> list[Fraction]:
    monos = monomials_up_to(degree)
    index = {m: i for i, m in enumerate(monos)}
    coords = [Fraction(0)] * (len(monos) * len(f.components))
    for ci, p in enumerate(f.components):
        for m, c in p.terms.items():
            coords[ci * len(monos) + index[m]] = c
    return coords


_KERNEL_CACHE: dict[tuple, list] = {}


def kernel_basis(op_names: Sequence[str], kind: FieldKind, degree: int) -> list[TypedField]:
    """Exact basis of the joint kernel of the named operators on the
    kind-constrained degree-bounded space, via nullspace of the stacked
    coefficient matrix."""
    key = (tuple(op_names), kind, degree)
    if key in _KERNEL_CACHE:
        return _KERNEL_CACHE[key]
    basis = kind_basis(kind, degree)
    out_degree = degree  # differential operators never raise polynomial degree
    columns = []
    for b in basis:
        col: list[Fraction] = []
        for name in op_names:
            col.extend(_field_coords(OPS[name](b), out_degree))
        columns.append(col)
    m = RatMatrix.from_rows([[columns[j][i] for j in range(len(columns))] for i in range(len(columns[0]))])
    vectors = m.nullspace()
    fields = []
    for v in vectors:
        f = None
        for c, b in zip(v, basis):
            if c == 0:
                continue
            t = b.scale(c)
            f = t if f is None else f + t
        fields.append(f if f is not None else TypedField.zero(kind))
    _KERNEL_CACHE[key] = fields
    return fields


def sample_kernel(op_names: Sequence[str] | str, kind: FieldKind, degree: int, seed: int, index: int = 0) -> TypedField:
    """A random exact kernel element: a rational combination of nullspace
    basis vectors with integer weights in [-9, 9]."""
    if isinstance(op_names, str):
        op_names = (op_names,)
    fields = kernel_basis(op_names, kind, degree)
    if not fields:
        raise ValueError(f"kernel is trivial at this degree: {op_names} on {kind.value}")
    rng = derived_rng(seed, "kernel", *op_names, kind.value, degree, index)
    out = TypedField.zero(kind)
    while out.is_zero:
        out = TypedField.zero(kind)
        for f in fields:
            w = rng.randint(-9, 9)
            if w:
                out = out + f.scale(w)
    return out


# -- right-inverse chains -----------------------------------------------------


def _check_zero(f: TypedField, what: str, original: TypedField):
    if not f.is_zero:
        raise PreconditionError(f"kernel constraint failed: {what} is nonzero", field_to_text(original))


def _check_moment(f: TypedField, space: MomentSpace, original: TypedField):
    ok, basis, pairing = moment_orthogonal(f, space)
    if not ok:
        raise PreconditionError(
            f"moment precondition failed: pairing with {space.name} element is {pairing}",
            field_to_text(basis),
        )


def _dcc(sigma: TypedField) -> TypedField:
    """Symmetric potential g with inc g = sigma, for symmetric div-free sigma."""
    eta = tc_rows(sigma)             # curl eta = sigma
    s_eta = eta.s_op()
    _check_zero(div(s_eta), "div(S eta) inside the chain", sigma)
    gamma = tc_rows(s_eta)           # curl gamma = S eta
    return gamma.sym()


def _rgg_tilde(g: TypedField) -> TypedField:
    """Vector u with curl deff u = curl g, for symmetric g with inc g = 0."""
    q = tg_rows(t_curl(g))           # grad q = T curl g
    _check_zero(div(q), "div q (= tr T curl g) inside the chain", g)
    return tc(q).scale(2)            # q = 1/2 curl u


def _dgg(g: TypedField) -> TypedField:
    """Scalar w with hess w = g, for symmetric g with curl g = 0."""
    u = tg_rows(g)                   # grad u = g
    u = constant_curl_correction(u)  # curl u is already 0 here; keeps the contract explicit
    return tg(u)                     # grad (tg u) = u


def _ddd(w: TypedField) -> TypedField:
    """Symmetric sigma with div div sigma = w."""
    q = td(w)                        # div q = w
    tau = td_component_rows(q)       # div tau = q
    return tau.sym()


def _rcc_tilde(sigma: TypedField) -> TypedField:
    """Trace-free eta with div sym curl eta = div sigma, for div div sigma = 0."""
    u = tc(div(sigma))               # curl u = div sigma
    tau = td_component_rows(u.scale(2))  # div tau = 2u
    return tau.dev().transpose()


def _dcd(v: TypedField) -> TypedField:
    """Trace-free tau with curl div tau = v, for divergence-free v."""
    u = tc(v)                        # curl u = v
    tau = td_component_rows(u)       # div tau = u
    return tau.dev()


def _rgc_tilde_dgc_tilde(tau: TypedField) -> tuple[TypedField, TypedField]:
    """(g, u) with tau = curl(g + deff u), for trace-free div-free tau."""
    gamma = tc_rows(tau)             # curl gamma = tau
    g = gamma.sym()
    v = vskw(gamma)
    _check_zero(div(v), "div vskw gamma (= tr tau / 2) inside the chain", tau)
    u = tc(v).scale(-2)              # v = -1/2 curl u
    return g, u


def _rgc(tau: TypedField) -> TypedField:
    g, u = _rgc_tilde_dgc_tilde(tau)
    return (g.as_matrix() + deff(u).as_matrix()).retag(FieldKind.SYMMETRIC)


def _dgc(tau: TypedField) -> TypedField:
    """Vector with curl deff of it = tau, for div tau = 0 and sym curl T tau = 0."""
    g, u = _rgc_tilde_dgc_tilde(tau)
    _check_zero(inc(g), "inc of the symmetric potential inside the chain", tau)
    return _rgg_tilde(g) + u


def _dgd(v: TypedField) -> TypedField:
    """Vector q with (1/3) grad div q = v, for curl-free v."""
    w = tg(v)                        # grad w = v
    return td(w.scale(3))            # div q = 3w


def _rgg(g: TypedField) -> TypedField:
    """Vector with deff of it = g, for symmetric g with inc g = 0."""
    u = _rgg_tilde(g)                # curl(g - deff u) = 0
    rest = (g.as_matrix() - deff(u).as_matrix())
    v = tg_rows(rest)                # grad v = g - deff u
    _check_zero(curl(v), "curl of the gradient potential inside the chain", g)
    return u + v


def _rgd(v: TypedField) -> TypedField:
    """Trace-free field whose divergence is v (unconditional)."""
    tau = td_component_rows(v)       # div tau = v
    t = tau.trace()
    q = td(t)                        # div q = tr tau
    return (tau.dev().as_matrix() + t_dev_grad(q).scale(Fraction(1, 2)).as_matrix()).retag(
        FieldKind.TRACEFREE
    )


def _rgcT(tau: TypedField) -> TypedField:
    """Vector q with (1/2) dev grad q = tau, for trace-free tau with sym curl tau = 0."""
    w = tg(div_t(tau)).comp(1)       # grad w = div T tau
    half_w_id = TypedField.identity_scaled(w.scale(Fraction(1, 2)))
    m = (tau.as_matrix() + half_w_id.as_matrix())
    q = tg_rows(m).scale(2)          # tau + w/2 id = 1/2 grad q
    residual = div(q) - TypedField.scalar(w.scale(3))
    _check_zero(residual, "div q - 3w inside the chain", tau)
    return q


def _rcc(sigma: TypedField) -> TypedField:
    """Trace-free field whose sym curl is sigma, for div div sigma = 0."""
    s1 = _rcc_tilde(sigma)
    rest = (sigma.as_matrix() - sym_curl(s1).as_matrix())
    rho = tc_rows(rest)              # curl rho = sigma - sym curl s1
    return (s1.as_matrix() + rho.dev().as_matrix()).retag(FieldKind.TRACEFREE)


def _rcd(q: TypedField) -> TypedField:
    """Symmetric field whose divergence is q (unconditional)."""
    gamma = td_component_rows(q)     # div gamma = q
    u = vskw(gamma)
    tau = td_component_rows(u.scale(-2))  # div tau = -2u
    return (gamma.sym().as_matrix() + sym_curl_t(tau.dev()).as_matrix()).retag(FieldKind.SYMMETRIC)


def _rg(v: TypedField) -> TypedField:
    """Scalar with (1/3) grad of it = v, for curl-free v."""
    return tg(v).scale(3)


def _rc_plain(q: TypedField) -> TypedField:
    """Vector with (1/2) curl of it = q, for divergence-free q."""
    return tc(q).scale(2)


def _rd_plain(w: TypedField) -> TypedField:
    """Vector whose divergence is w (unconditional)."""
    return td(w)


@dataclass(frozen=True)
class RightInverseSpec:
    """One right-inverse operator: its domain, preconditions, chain and
    defining identity."""

    name: str
    anchor: str
    input_kind: FieldKind
    kernel_ops: tuple[str, ...]             # exact kernel constraints on the input
    moment_space: MomentSpace | None        # enforced only in strict mode
    chain: Callable[[TypedField], TypedField]
    output_kind: FieldKind
    identity: Callable[[TypedField, TypedField], bool]  # (input, output) -> holds?
    statement: str


def _eq(a: TypedField, b: TypedField) -> bool:
    return components_equal(a, b)


RIGHT_INVERSES: dict[str, RightInverseSpec] = {
    spec.name: spec
    for spec in [
        RightInverseSpec(
            "Dcc", "Lemma 3.1", FieldKind.SYMMETRIC, ("div",), None, _dcc, FieldKind.SYMMETRIC,
            lambda f, out: _eq(inc(out), f), "inc(Dcc s) = s",
        ),
        RightInverseSpec(
            "Rgg_tilde", "Lemma 3.2", FieldKind.SYMMETRIC, ("inc",), None, _rgg_tilde, FieldKind.VECTOR,
            lambda f, out: _eq(curl_deff(out), curl(f)), "curl deff(R~gg g) = curl g",
        ),
        RightInverseSpec(
            "Dgg", "Lemma 3.3", FieldKind.SYMMETRIC, ("curl",), None, _dgg, FieldKind.SCALAR,
            lambda f, out: _eq(hess(out), f), "hess(Dgg g) = g",
        ),
        RightInverseSpec(
            "Ddd", "Lemma 3.5", FieldKind.SCALAR, (), P1_SPACE, _ddd, FieldKind.SYMMETRIC,
            lambda f, out: _eq(div_div(out), f), "div div(Ddd w) = w",
        ),
        RightInverseSpec(
            "Rcc_tilde", "Lemma 3.6", FieldKind.SYMMETRIC, ("div_div",), None, _rcc_tilde, FieldKind.TRACEFREE,
            lambda f, out: _eq(div(sym_curl(out)), div(f)), "div sym curl(R~cc s) = div s",
        ),
        RightInverseSpec(
            "Dcd", "Lemma 3.9", FieldKind.VECTOR, ("div",), ND_SPACE, _dcd, FieldKind.TRACEFREE,
            lambda f, out: _eq(curl_div(out), f), "curl div(Dcd v) = v",
        ),
        RightInverseSpec(
            # paired with Dgc_tilde below: the two halves of one construction,
            # verified through the same joint identity
            "Rgc_tilde", "Lemma 3.11", FieldKind.TRACEFREE, ("div",), None,
            lambda tau: _rgc_tilde_dgc_tilde(tau)[0], FieldKind.SYMMETRIC,
            lambda f, out: _eq(
                curl(out.as_matrix() + deff(_rgc_tilde_dgc_tilde(f)[1]).as_matrix()), f
            ),
            "tau = curl(R~gc tau + deff D~gc tau)",
        ),
        RightInverseSpec(
            "Dgc_tilde", "Lemma 3.11", FieldKind.TRACEFREE, ("div",), None,
            lambda tau: _rgc_tilde_dgc_tilde(tau)[1], FieldKind.VECTOR,
            lambda f, out: _eq(
                curl(_rgc_tilde_dgc_tilde(f)[0].as_matrix() + deff(out).as_matrix()), f
            ),
            "tau = curl(R~gc tau + deff D~gc tau)",
        ),
        RightInverseSpec(
            "Rgc", "Lemma 3.12", FieldKind.TRACEFREE, ("div",), None, _rgc, FieldKind.SYMMETRIC,
            lambda f, out: _eq(curl(out), f), "curl(Rgc tau) = tau",
        ),
        RightInverseSpec(
            "Dgc", "Lemma 3.13", FieldKind.TRACEFREE, ("div", "sym_curl_t"), None, _dgc, FieldKind.VECTOR,
            lambda f, out: _eq(curl_deff(out), f), "curl deff(Dgc tau) = tau",
        ),
        RightInverseSpec(
            "Dgd", "Lemma 3.14", FieldKind.VECTOR, ("curl",), RT_SPACE, _dgd, FieldKind.VECTOR,
            lambda f, out: _eq(grad_div(out).scale(Fraction(1, 3)), f), "(1/3) grad div(Dgd v) = v",
        ),
        RightInverseSpec(
            "Rgg", "Lemma 3.15", FieldKind.SYMMETRIC, ("inc",), None, _rgg, FieldKind.VECTOR,
            lambda f, out: _eq(deff(out), f), "deff(Rgg g) = g",
        ),
        RightInverseSpec(
            "Rgd", "Lemma 3.16", FieldKind.VECTOR, (), RT_SPACE, _rgd, FieldKind.TRACEFREE,
            lambda f, out: _eq(div(out), f), "div(Rgd v) = v",
        ),
        RightInverseSpec(
            "RgcT", "Lemma 3.17", FieldKind.TRACEFREE, ("sym_curl",), None, _rgcT, FieldKind.VECTOR,
            lambda f, out: _eq(dev_grad(out).scale(Fraction(1, 2)), f), "(1/2) dev grad(RgcT tau) = tau",
        ),
        RightInverseSpec(
            "Rcc", "Lemma 3.18", FieldKind.SYMMETRIC, ("div_div",), None, _rcc, FieldKind.TRACEFREE,
            lambda f, out: _eq(sym_curl(out), f), "sym curl(Rcc s) = s",
        ),
        RightInverseSpec(
            "Rcd", "Lemma 3.19", FieldKind.VECTOR, (), ND_SPACE, _rcd, FieldKind.SYMMETRIC,
            lambda f, out: _eq(div(out), f), "div(Rcd q) = q",
        ),
        RightInverseSpec(
            "Rg", "Lemma 3.20", FieldKind.VECTOR, ("curl",), RT_SPACE, _rg, FieldKind.SCALAR,
            lambda f, out: _eq(grad(out).scale(Fraction(1, 3)), f), "(1/3) grad(Rg v) = v",
        ),
        RightInverseSpec(
            "Rc_plain", "Lemma 3.20", FieldKind.VECTOR, ("div",), ND_SPACE, _rc_plain, FieldKind.VECTOR,
            lambda f, out: _eq(curl(out).scale(Fraction(1, 2)), f), "(1/2) curl(Rc q) = q",
        ),
        RightInverseSpec(
            "Rd_plain", "Lemma 3.20", FieldKind.SCALAR, (), P1_SPACE, _rd_plain, FieldKind.VECTOR,
            lambda f, out: _eq(div(out), f), "div(Rd w) = w",
        ),
    ]
}

RIGHT_INVERSE_NAMES = tuple(RIGHT_INVERSES)


def right_inverse(name: str, f: TypedField, strict_preconditions: bool = False) -> TypedField:
    """Run the named chain after verifying its preconditions exactly."""
    spec = RIGHT_INVERSES[name]
    if f.kind is not spec.input_kind:
        raise KindError(f"{name} needs a {spec.input_kind.value} field, got {f.kind.value}")
    for op_name in spec.kernel_ops:
        out = OPS[op_name](f)
        if not out.is_zero:
            raise PreconditionError(
                f"kernel constraint failed: {op_name}(input) is nonzero", field_to_text(out)
            )
    if strict_preconditions and spec.moment_space is not None:
        _check_moment(f, spec.moment_space, f)
    result = spec.chain(f)
    if spec.output_kind in (FieldKind.SYMMETRIC, FieldKind.TRACEFREE):
        result = result.retag(spec.output_kind) if result.kind is not spec.output_kind else result
    return result


def sample_right_inverse_input(name: str, degree: int, seed: int, index: int) -> TypedField:
    """A genuine domain element for the named operator: kernel-sampled when
    there are kernel constraints, otherwise a random field."""
    spec = RIGHT_INVERSES[name]
    if spec.kernel_ops:
        return sample_kernel(spec.kernel_ops, spec.input_kind, degree, seed, index)
    rng = derived_rng(seed, "ri-input", name, index)
    return random_field(spec.input_kind, degree, rng)


def verify_right_inverse(name: str, samples: int, degree: int, seed: int, strict_preconditions: bool = False) -> CheckResult:
    spec = RIGHT_INVERSES[name]
    label = f"{name}: {spec.statement}"
    for s in range(samples):
        f = sample_right_inverse_input(name, degree, seed, s)
        try:
            out = right_inverse(name, f, strict_preconditions)
        except PreconditionError as err:
            return CheckResult(label, spec.anchor, False, f"{err} | witness:\n{err.witness}", error=True)
        if not spec.identity(f, out):
            return CheckResult(label, spec.anchor, False, field_to_text(f))
    return CheckResult(label, spec.anchor, True)
