"""Regular decompositions: split a field into potentials of higher-order
operators so that the reassembled sum reproduces the input exactly.

Each decomposition is a deterministic function of its input (no randomness
inside the chains), so results are reproducible byte for byte.  Only the
algebraic reconstruction identities are asserted; norm continuity of the
component maps is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import FieldKind, KindError, TypedField, field_to_text
from .koszul import _dcc, _dcd, _ddd, _dgg, _rcc_tilde, _rgg_tilde, tc, td, tg, tg_rows
from .operators import (
    CheckResult,
    OperatorId,
    OPS,
    components_equal,
    curl_div,
    derived_rng,
    div,
    div_div,
    grad,
    inc,
    random_field,
    sym_curl,
    sym_curl_t,
    t_curl,
)

@dataclass(frozen=True)
class DecompositionPart:
    label: str
    potential: TypedField
    reassembly: OperatorId  # "identity" leaves the potential as is

    def contribution(self) -> TypedField:
        if self.reassembly.name == "identity":
            return self.potential.scale(self.reassembly.scale)
        out = OPS[self.reassembly.name](self.potential)
        return out if self.reassembly.scale == 1 else out.scale(self.reassembly.scale)


@dataclass(frozen=True)
class Decomposition:
    input: TypedField
    parts: tuple[DecompositionPart, ...]

    @property
    def reassembled(self) -> TypedField:
        out = None
        for part in self.parts:
            c = part.contribution()
            if c.is_matrix_kind:
                c = c.as_matrix()
            out = c if out is None else out + c
        return out

    @property
    def is_exact(self) -> bool:
        return components_equal(self.reassembled, self.input)

    def to_text(self) -> str:
        blocks = [f"input:\n{field_to_text(self.input)}"]
        for p in self.parts:
            blocks.append(f"part {p.label} (reassemble via {p.reassembly.label()}):\n{field_to_text(p.potential)}")
        return "\n\n".join(blocks)


def _ident(scale=1) -> OperatorId:
    return OperatorId("identity", Fraction(scale))


def regdec_cc(g: TypedField) -> Decomposition:
    """g = S0 + deff S1 + hess S2 for symmetric g."""
    if g.kind is not FieldKind.SYMMETRIC:
        raise KindError("regdec_cc needs a symmetric field")
    s0 = _dcc(inc(g))
    r1 = (g.as_matrix() - s0.as_matrix()).retag(FieldKind.SYMMETRIC)
    s1 = _rgg_tilde(r1)
    r2 = (r1.as_matrix() - OPS["deff"](s1).as_matrix()).retag(FieldKind.SYMMETRIC)
    s2 = _dgg(r2)
    return Decomposition(
        g,
        (
            DecompositionPart("S0", s0, _ident()),
            DecompositionPart("S1", s1, OperatorId("deff")),
            DecompositionPart("S2", s2, OperatorId("hess")),
        ),
    )


def regdec_dd(sigma: TypedField) -> Decomposition:
    """sigma = S0 + sym curl S1 + inc S2 for symmetric sigma."""
    if sigma.kind is not FieldKind.SYMMETRIC:
        raise KindError("regdec_dd needs a symmetric field")
    s0 = _ddd(div_div(sigma))
    r1 = (sigma.as_matrix() - s0.as_matrix()).retag(FieldKind.SYMMETRIC)
    s1 = _rcc_tilde(r1)
    r2 = (r1.as_matrix() - sym_curl(s1).as_matrix()).retag(FieldKind.SYMMETRIC)
    s2 = _dcc(r2)
    return Decomposition(
        sigma,
        (
            DecompositionPart("S0", s0, _ident()),
            DecompositionPart("S1", s1, OperatorId("sym_curl")),
            DecompositionPart("S2", s2, OperatorId("inc")),
        ),
    )


def _cd_core(rho: TypedField) -> tuple[TypedField, TypedField, TypedField]:
    """For trace-free rho with curl div rho = 0, produce (g, q, w) with

        rho = curl g + (dev grad q)^T,  3w = div q,  g symmetric.
    """
    w = tg(div(rho)).comp(1)                       # grad w = div rho
    sigma = sym_curl_t(rho)                        # div sigma = 0 by the cell identity
    g = _dcc(sigma)                                # inc g = sigma
    half_w_id = TypedField.identity_scaled(w.scale(Fraction(1, 2)))
    m = rho.transpose().as_matrix() - t_curl(g).as_matrix() + half_w_id.as_matrix()
    q = tg_rows(m)                                 # grad q = T rho - T curl g + w/2 id
    return g, q, w


def regdec_cd(tau: TypedField) -> Decomposition:
    """tau = S0 + curl S1 + T dev grad S2 + curl deff S3 for trace-free tau."""
    if tau.kind is not FieldKind.TRACEFREE:
        raise KindError("regdec_cd needs a trace-free field")
    s0 = _dcd(curl_div(tau))
    rho = (tau.as_matrix() - s0.as_matrix()).retag(FieldKind.TRACEFREE)
    g, q, _w = _cd_core(rho)
    r = td(div(q))                                 # div r = div q, so q - r is div-free
    u = tc(q - r).scale(2)                         # q - r = 1/2 curl u
    return Decomposition(
        tau,
        (
            DecompositionPart("S0", s0, _ident()),
            DecompositionPart("S1", g, OperatorId("curl")),
            DecompositionPart("S2", r, OperatorId("t_dev_grad")),
            DecompositionPart("S3", u, OperatorId("curl_deff")),
        ),
    )


def regdec_short(f: TypedField, which: str) -> Decomposition:
    """Two- or three-part variants for the slightly more regular spaces:

        cc: g     = S0 + deff(S1 + grad S2)
        dd: sigma = S0 + sym curl(S1 + T curl S2)
        cd: tau   = S0 + curl S1 + T dev grad S2   (the two-term tail)
    """
    if which == "cc":
        full = regdec_cc(f)
        s0, s1, s2 = (p.potential for p in full.parts)
        merged = s1 + grad(s2)
        return Decomposition(
            f,
            (
                DecompositionPart("S0", s0, _ident()),
                DecompositionPart("S1~", merged, OperatorId("deff")),
            ),
        )
    if which == "dd":
        full = regdec_dd(f)
        s0, s1, s2 = (p.potential for p in full.parts)
        merged = (s1.as_matrix() + t_curl(s2).as_matrix()).retag(FieldKind.TRACEFREE)
        return Decomposition(
            f,
            (
                DecompositionPart("S0", s0, _ident()),
                DecompositionPart("S1~", merged, OperatorId("sym_curl")),
            ),
        )
    if which == "cd":
        if f.kind is not FieldKind.TRACEFREE:
            raise KindError("regdec_short('cd') needs a trace-free field")
        s0 = _dcd(curl_div(f))
        rho = (f.as_matrix() - s0.as_matrix()).retag(FieldKind.TRACEFREE)
        g, q, _w = _cd_core(rho)
        return Decomposition(
            f,
            (
                DecompositionPart("S0", s0, _ident()),
                DecompositionPart("S1", g, OperatorId("curl")),
                DecompositionPart("S2~", q, OperatorId("t_dev_grad")),
            ),
        )
    raise ValueError(f"unknown short decomposition {which!r}")


_DECOMPOSERS = {
    "cc": (regdec_cc, FieldKind.SYMMETRIC, "Thm 3.4"),
    "dd": (regdec_dd, FieldKind.SYMMETRIC, "Thm 3.7"),
    "cd": (regdec_cd, FieldKind.TRACEFREE, "Thm 3.10"),
    "short-cc": (lambda f: regdec_short(f, "cc"), FieldKind.SYMMETRIC, "Sec. 4 Thm (cc)"),
    "short-dd": (lambda f: regdec_short(f, "dd"), FieldKind.SYMMETRIC, "Sec. 4 Thm (dd)"),
    "short-cd": (lambda f: regdec_short(f, "cd"), FieldKind.TRACEFREE, "Sec. 4 Thm (cd)"),
}

DECOMPOSITION_NAMES = tuple(_DECOMPOSERS)

_PART_KINDS = {
    "cc": (FieldKind.SYMMETRIC, FieldKind.VECTOR, FieldKind.SCALAR),
    "dd": (FieldKind.SYMMETRIC, FieldKind.TRACEFREE, FieldKind.SYMMETRIC),
    "cd": (FieldKind.TRACEFREE, FieldKind.SYMMETRIC, FieldKind.VECTOR, FieldKind.VECTOR),
    "short-cc": (FieldKind.SYMMETRIC, FieldKind.VECTOR),
    "short-dd": (FieldKind.SYMMETRIC, FieldKind.TRACEFREE),
    "short-cd": (FieldKind.TRACEFREE, FieldKind.SYMMETRIC, FieldKind.VECTOR),
}


def decompose(name: str, f: TypedField) -> Decomposition:
    return _DECOMPOSERS[name][0](f)


def verify_decomposition(name: str, samples: int, degree: int, seed: int) -> CheckResult:
    fn, kind, anchor = _DECOMPOSERS[name]
    expected_kinds = _PART_KINDS[name]
    for s in range(samples):
        rng = derived_rng(seed, "decompose", name, s)
        f = random_field(kind, degree, rng)
        dec = fn(f)
        kinds = tuple(p.potential.kind for p in dec.parts)
        if kinds != expected_kinds:
            return CheckResult(
                f"regdec {name}", anchor, False,
                f"part kinds {tuple(k.value for k in kinds)} != expected {tuple(k.value for k in expected_kinds)}",
            )
        if not dec.is_exact:
            return CheckResult(f"regdec {name}", anchor, False, field_to_text(f))
    return CheckResult(f"regdec {name}", anchor, True)


def verify_all_decompositions(samples: int, degree: int, seed: int) -> list[CheckResult]:
    return [verify_decomposition(name, samples, degree, seed) for name in DECOMPOSITION_NAMES]
