"""Kind-tagged scalar / vector / matrix polynomial fields.

Matrix fields are stored row-major; the Jacobian convention is that
grad u has (i, j) entry d(u_i)/d(x_j).  Kind tags (symmetric, trace-free,
skew) are validated on construction, so a tagged field always satisfies its
predicate identically as polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .poly import P_ONE, P_ZERO, Poly3


class FieldKind(Enum):
    SCALAR = "scalar"
    VECTOR = "vector"
    MATRIX = "matrix"
    SYMMETRIC = "symmetric"
    TRACEFREE = "trace-free"
    SKEW = "skew"


MATRIX_KINDS = (FieldKind.MATRIX, FieldKind.SYMMETRIC, FieldKind.TRACEFREE, FieldKind.SKEW)

_COMPONENT_COUNT = {
    FieldKind.SCALAR: 1,
    FieldKind.VECTOR: 3,
    FieldKind.MATRIX: 9,
    FieldKind.SYMMETRIC: 9,
    FieldKind.TRACEFREE: 9,
    FieldKind.SKEW: 9,
}


class KindError(TypeError):
    """Operation applied to a field of the wrong kind."""


def levi_civita(i: int, j: int, k: int) -> int:
    """epsilon_{ijk} on 1-based indices; total function returning -1, 0 or 1."""
    return ((i - j) * (j - k) * (k - i)) // 2 if {i, j, k} == {1, 2, 3} else 0


@dataclass(frozen=True)
class TypedField:
    kind: FieldKind
    components: tuple[Poly3, ...]

    def __post_init__(self):
        n = _COMPONENT_COUNT[self.kind]
        if len(self.components) != n:
            raise KindError(f"{self.kind.value} field needs {n} components, got {len(self.components)}")
        if self.kind is FieldKind.SYMMETRIC:
            if any(not (self.entry(i, j) - self.entry(j, i)).is_zero for i in range(1, 4) for j in range(i + 1, 4)):
                raise KindError("components are not symmetric")
        elif self.kind is FieldKind.TRACEFREE:
            if not (self.entry(1, 1) + self.entry(2, 2) + self.entry(3, 3)).is_zero:
                raise KindError("components have nonzero trace")
        elif self.kind is FieldKind.SKEW:
            if any(not (self.entry(i, j) + self.entry(j, i)).is_zero for i in range(1, 4) for j in range(i, 4)):
                raise KindError("components are not skew")

    # -- constructors -------------------------------------------------

    @classmethod
    def scalar(cls, p: Poly3) -> "TypedField":
        return cls(FieldKind.SCALAR, (p,))

    @classmethod
    def vector(cls, ps: Sequence[Poly3]) -> "TypedField":
        return cls(FieldKind.VECTOR, tuple(ps))

    @classmethod
    def matrix(cls, rows: Sequence[Sequence[Poly3]], kind: FieldKind = FieldKind.MATRIX) -> "TypedField":
        return cls(kind, tuple(p for row in rows for p in row))

    @classmethod
    def zero(cls, kind: FieldKind) -> "TypedField":
        return cls(kind, (P_ZERO,) * _COMPONENT_COUNT[kind])

    @classmethod
    def identity_scaled(cls, p: Poly3) -> "TypedField":
        """p * id, tagged symmetric."""
        z = P_ZERO
        return cls.matrix([[p, z, z], [z, p, z], [z, z, p]], FieldKind.SYMMETRIC)

    # -- access -------------------------------------------------------

    @property
    def is_matrix_kind(self) -> bool:
        return self.kind in MATRIX_KINDS

    def comp(self, i: int) -> Poly3:
        """1-based component of a scalar (i=1) or vector field."""
        return self.components[i - 1]

    def entry(self, i: int, j: int) -> Poly3:
        """1-based (i, j) entry of a matrix field."""
        return self.components[3 * (i - 1) + (j - 1)]

    def rows(self) -> list[list[Poly3]]:
        return [[self.entry(i, j) for j in range(1, 4)] for i in range(1, 4)]

    def row(self, i: int) -> "TypedField":
        return TypedField.vector([self.entry(i, j) for j in range(1, 4)])

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.components)

    def degree(self) -> int:
        return max(p.degree() for p in self.components)

    # -- linear structure ----------------------------------------------

    def _require_same_kind(self, other: "TypedField"):
        if self.kind is not other.kind:
            raise KindError(f"kind mismatch: {self.kind.value} vs {other.kind.value}")

    def __add__(self, other: "TypedField") -> "TypedField":
        self._require_same_kind(other)
        return TypedField(self.kind, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "TypedField") -> "TypedField":
        self._require_same_kind(other)
        return TypedField(self.kind, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "TypedField":
        return TypedField(self.kind, tuple(-p for p in self.components))

    def scale(self, c) -> "TypedField":
        return TypedField(self.kind, tuple(p.scale(c) for p in self.components))

    def mul_scalar_poly(self, w: Poly3) -> "TypedField":
        """Pointwise multiplication by a scalar polynomial; keeps the tag."""
        return TypedField(self.kind, tuple(p * w for p in self.components))

    def as_matrix(self) -> "TypedField":
        """Forget a special matrix tag (symmetric / trace-free / skew)."""
        if not self.is_matrix_kind:
            raise KindError("not a matrix field")
        return TypedField(FieldKind.MATRIX, self.components)

    def retag(self, kind: FieldKind) -> "TypedField":
        """Re-tag with `kind`; the kind predicate is re-validated."""
        if _COMPONENT_COUNT[kind] != len(self.components):
            raise KindError(f"cannot retag {self.kind.value} as {kind.value}")
        return TypedField(kind, self.components)

    # -- pointwise algebra ---------------------------------------------

    def transpose(self) -> "TypedField":
        if not self.is_matrix_kind:
            raise KindError("transpose needs a matrix field")
        rows = [[self.entry(j, i) for j in range(1, 4)] for i in range(1, 4)]
        return TypedField.matrix(rows, self.kind)

    def sym(self) -> "TypedField":
        if not self.is_matrix_kind:
            raise KindError("sym needs a matrix field")
        rows = [[(self.entry(i, j) + self.entry(j, i)).scale(Fraction(1, 2)) for j in range(1, 4)] for i in range(1, 4)]
        return TypedField.matrix(rows, FieldKind.SYMMETRIC)

    def skw(self) -> "TypedField":
        if not self.is_matrix_kind:
            raise KindError("skw needs a matrix field")
        rows = [[(self.entry(i, j) - self.entry(j, i)).scale(Fraction(1, 2)) for j in range(1, 4)] for i in range(1, 4)]
        return TypedField.matrix(rows, FieldKind.SKEW)

    def trace(self) -> "TypedField":
        if not self.is_matrix_kind:
            raise KindError("tr needs a matrix field")
        return TypedField.scalar(self.entry(1, 1) + self.entry(2, 2) + self.entry(3, 3))

    def dev(self) -> "TypedField":
        t = self.trace().comp(1).scale(Fraction(1, 3))
        rows = [[self.entry(i, j) - t if i == j else self.entry(i, j) for j in range(1, 4)] for i in range(1, 4)]
        return TypedField.matrix(rows, FieldKind.TRACEFREE)

    def s_op(self) -> "TypedField":
        """tau -> tau^T - tr(tau) id."""
        t = self.trace().comp(1)
        tt = self.transpose()
        rows = [[tt.entry(i, j) - t if i == j else tt.entry(i, j) for j in range(1, 4)] for i in range(1, 4)]
        return TypedField.matrix(rows, _s_result_kind(self.kind))

    def s_inv(self) -> "TypedField":
        """tau -> tau^T - (1/2) tr(tau) id; inverse of s_op."""
        t = self.trace().comp(1).scale(Fraction(1, 2))
        tt = self.transpose()
        rows = [[tt.entry(i, j) - t if i == j else tt.entry(i, j) for j in range(1, 4)] for i in range(1, 4)]
        return TypedField.matrix(rows, _s_result_kind(self.kind))


def _s_result_kind(kind: FieldKind) -> FieldKind:
    # S preserves symmetry (S g = g - tr(g) id), trace-freeness and skewness
    # (S tau = tau^T on trace-free input).
    if kind in (FieldKind.SYMMETRIC, FieldKind.TRACEFREE, FieldKind.SKEW):
        return kind
    return FieldKind.MATRIX


# -- axial-vector correspondence ---------------------------------------


def mskw(v: TypedField) -> TypedField:
    """Skew matrix of a vector field: (mskw v)_ij = -epsilon_ijk v_k."""
    if v.kind is not FieldKind.VECTOR:
        raise KindError("mskw needs a vector field")
    rows = [
        [
            sum((v.comp(k).scale(-levi_civita(i, j, k)) for k in range(1, 4)), P_ZERO)
            for j in range(1, 4)
        ]
        for i in range(1, 4)
    ]
    return TypedField.matrix(rows, FieldKind.SKEW)


def vskw(m: TypedField) -> TypedField:
    """Axial vector of the skew part: vskw = mskw^{-1} ∘ skw."""
    if not m.is_matrix_kind:
        raise KindError("vskw needs a matrix field")
    s = m.skw()
    comps = [
        sum(
            (s.entry(i, j).scale(Fraction(-levi_civita(i, j, k), 2)) for i in range(1, 4) for j in range(1, 4)),
            P_ZERO,
        )
        for k in range(1, 4)
    ]
    return TypedField.vector(comps)


# -- products ----------------------------------------------------------


def dot(a: TypedField, b: TypedField) -> TypedField:
    if a.kind is not FieldKind.VECTOR or b.kind is not FieldKind.VECTOR:
        raise KindError("dot needs two vector fields")
    return TypedField.scalar(sum((a.comp(i) * b.comp(i) for i in range(1, 4)), P_ZERO))


def cross(a: TypedField, b: TypedField) -> TypedField:
    if a.kind is not FieldKind.VECTOR or b.kind is not FieldKind.VECTOR:
        raise KindError("cross needs two vector fields")
    comps = [
        sum(
            (
                (a.comp(j) * b.comp(k)).scale(levi_civita(i, j, k))
                for j in range(1, 4)
                for k in range(1, 4)
            ),
            P_ZERO,
        )
        for i in range(1, 4)
    ]
    return TypedField.vector(comps)


def frobenius(a: TypedField, b: TypedField) -> TypedField:
    if not (a.is_matrix_kind and b.is_matrix_kind):
        raise KindError("frobenius needs two matrix fields")
    return TypedField.scalar(sum((x * y for x, y in zip(a.components, b.components)), P_ZERO))


def matvec(m: TypedField, v: TypedField) -> TypedField:
    if not m.is_matrix_kind or v.kind is not FieldKind.VECTOR:
        raise KindError("matvec needs a matrix and a vector field")
    comps = [sum((m.entry(i, j) * v.comp(j) for j in range(1, 4)), P_ZERO) for i in range(1, 4)]
    return TypedField.vector(comps)


def matmul(a: TypedField, b: TypedField) -> TypedField:
    if not (a.is_matrix_kind and b.is_matrix_kind):
        raise KindError("matmul needs two matrix fields")
    rows = [
        [sum((a.entry(i, k) * b.entry(k, j) for k in range(1, 4)), P_ZERO) for j in range(1, 4)]
        for i in range(1, 4)
    ]
    return TypedField.matrix(rows)


def pairing_product(a: TypedField, b: TypedField) -> Poly3:
    """Pointwise scalar product matching the kinds: uv, u.v or u:v."""
    if a.kind is FieldKind.SCALAR and b.kind is FieldKind.SCALAR:
        return a.comp(1) * b.comp(1)
    if a.kind is FieldKind.VECTOR and b.kind is FieldKind.VECTOR:
        return dot(a, b).comp(1)
    if a.is_matrix_kind and b.is_matrix_kind:
        return frobenius(a, b).comp(1)
    raise KindError(f"no pairing between {a.kind.value} and {b.kind.value}")


# -- basis fields -------------------------------------------------------

E1 = TypedField.vector([P_ONE, P_ZERO, P_ZERO])
E2 = TypedField.vector([P_ZERO, P_ONE, P_ZERO])
E3 = TypedField.vector([P_ZERO, P_ZERO, P_ONE])
X_FIELD = TypedField.vector([Poly3.variable(1), Poly3.variable(2), Poly3.variable(3)])
ID_FIELD = TypedField.identity_scaled(P_ONE)


# -- plain-text field format --------------------------------------------
#
# kind header, then one component per line:
#     i j : coeff * x1^a x2^b x3^c + ...
# Scalars use index "1 1", vectors "i 1", matrices "i j".  Exact fractions
# print as p/q.  The round-trip text -> field -> text is bit-exact.


def field_to_text(f: TypedField) -> str:
    lines = [f"kind: {f.kind.value}"]
    if f.kind is FieldKind.SCALAR:
        lines.append(f"1 1 : {f.comp(1)}")
    elif f.kind is FieldKind.VECTOR:
        lines.extend(f"{i} 1 : {f.comp(i)}" for i in range(1, 4))
    else:
        lines.extend(f"{i} {j} : {f.entry(i, j)}" for i in range(1, 4) for j in range(1, 4))
    return "\n".join(lines)


def field_from_text(text: str) -> TypedField:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("kind:"):
        raise ValueError("missing kind header")
    kind = FieldKind(lines[0].split(":", 1)[1].strip())
    entries: dict[tuple[int, int], Poly3] = {}
    for ln in lines[1:]:
        idx, _, poly = ln.partition(":")
        i, j = (int(t) for t in idx.split())
        entries[(i, j)] = Poly3.parse(poly.strip())
    if kind is FieldKind.SCALAR:
        return TypedField.scalar(entries[(1, 1)])
    if kind is FieldKind.VECTOR:
        return TypedField.vector([entries[(i, 1)] for i in range(1, 4)])
    rows = [[entries[(i, j)] for j in range(1, 4)] for i in range(1, 4)]
    return TypedField.matrix(rows, kind)
