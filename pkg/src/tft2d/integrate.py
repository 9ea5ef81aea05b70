"""Integration maps over spaces of structures.

* ``spins_to_or``: a spin trivialization phi on A gives B = A + A* with
  ``(a + alpha)(b + beta) = (ab + phi(alpha (x) beta)) + (a.beta + alpha.b)``
  and ``tr(a + alpha) = alpha(1)``.
* ``spinstats_to_or``: a spin-statistics datum on A gives Forget(A x| Z/2)
  with the induced trace extended by zero on the eps-component.
* ``supervect_to_or``: a symmetric Frobenius superalgebra gives
  Forget(A x| Z/2) with the trace read off the eps-component.
* ``integrate_or`` / ``integrate_complex``: from a state space with a pairing
  to the real symmetric form that reflection positivity asks about.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidTrivialization, KindMismatch, UntaggedReality
from .frobenius import FrobeniusAlgebra, validate_frobenius
from .scalars import I, ONE, ZERO, GaussianRational, GMatrix, block_matrix, gr, realify_form
from .superalg import (
    StarStructure, SuperAlgebra, direct_sum, opposite, parity_semidirect,
    underlying_algebra, validate_star,
)
from .theories import (
    SpinStatTrivialization, SpinTrivialization, dual_involution_matrix,
    validate_spin, validate_spinstat,
)

# ----------------------------------------------------------------------------
# groupoid cardinality


@dataclass(frozen=True)
class FiniteGroupoid:
    """Isomorphism classes given as (label, automorphism order, weight)."""

    objects: tuple = ()

    @classmethod
    def of(cls, *objects) -> "FiniteGroupoid":
        norm = []
        for obj in objects:
            label, order, *rest = obj
            if order < 1:
                raise ValueError("automorphism group orders must be at least 1")
            weight = gr(rest[0]) if rest else ONE
            norm.append((label, int(order), weight))
        return cls(tuple(norm))

    def disjoint_union(self, other: "FiniteGroupoid") -> "FiniteGroupoid":
        return FiniteGroupoid(self.objects + other.objects)


def groupoid_integral(g: FiniteGroupoid) -> GaussianRational:
    total = ZERO
    for _, order, weight in g.objects:
        total = total + weight * GaussianRational(Fraction(1, order))
    return total


def spin_circles() -> FiniteGroupoid:
    """Spin structures on the circle: two classes, each with automorphisms Z/2."""
    return FiniteGroupoid.of(("periodic", 2), ("antiperiodic", 2))


# ----------------------------------------------------------------------------
# HilbertData


TAGS = ("real-symmetric", "hermitian", "complex-symmetric", "oriented-pair", "super-hermitian")


@dataclass
class HilbertData:
    gram: GMatrix
    tag: str
    parity: Optional[tuple] = None
    basis: list = field(default_factory=list)  # representatives, when known
    notes: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.gram.rows


def hyperbolic(n: int) -> GMatrix:
    z = GMatrix.zeros(n, n)
    e = GMatrix.identity(n)
    return block_matrix([[z, e], [e, z]]) if n else GMatrix.zeros(0, 0)


def integrate_or(h: HilbertData) -> HilbertData:
    """Oriented input V gives V + V* with the hyperbolic form; Hermitian input
    gives the underlying real space with twice the real part."""
    if h.tag == "oriented-pair":
        return HilbertData(hyperbolic(h.dim), "real-symmetric", notes=list(h.notes))
    if h.tag == "hermitian":
        return HilbertData(realify_form(h.gram, "hermitian"), "real-symmetric", notes=list(h.notes))
    raise UntaggedReality(f"integrate_or needs an oriented or hermitian input, got {h.tag!r}")


def integrate_or_algebra(b: SuperAlgebra) -> SuperAlgebra:
    return direct_sum(b, opposite(b))


def integrate_complex(h: HilbertData) -> HilbertData:
    """Complex-linear input is realified by 2 Re; super-Hermitian input keeps its
    Hermitian form (with per-vector parities recorded) and realifies it."""
    if h.tag == "complex-symmetric":
        return HilbertData(realify_form(h.gram, "complex-symmetric"), "real-symmetric", notes=list(h.notes))
    if h.tag == "super-hermitian":
        parity = None if h.parity is None else tuple(h.parity) * 2
        return HilbertData(realify_form(h.gram, "hermitian"), "real-symmetric", parity, notes=list(h.notes))
    raise KindMismatch(f"integrate_complex needs a complex-symmetric or super-hermitian input, got {h.tag!r}")


def integrate_complex_scalar(c) -> GaussianRational:
    """Value of a closed manifold after integrating over Spec C: 2 Re(c)."""
    c = gr(c)
    return GaussianRational(2 * c.re)


# ----------------------------------------------------------------------------
# spins / Or


@dataclass
class IntegratedAlgebra:
    frobenius: FrobeniusAlgebra
    star: Optional[StarStructure] = None
    notes: list = field(default_factory=list)


def spins_to_or(phi: SpinTrivialization, star: Optional[StarStructure] = None,
                reality: str = "none") -> IntegratedAlgebra:
    """B = A + A* with the multiplication twisted by phi and tr(a + alpha) = alpha(1).

    Basis of B: ``e_i`` at index i and ``e^j`` at index dim + j. When a star
    is given, B carries ``(a + alpha)^+ = a* + c alpha^v`` with c = 1 for real
    phi and c = i for imaginary phi.
    """
    report = validate_spin(phi, reality, star)
    if not report.ok:
        raise InvalidTrivialization(report)
    a = phi.algebra
    d = a.dim
    acts = phi.quotient.actions
    amb = phi.ambient_matrix()
    table: dict = {}
    for (i, j), row in a.table.items():
        table[(i, j)] = dict(row)
    for i in range(d):
        for j in range(d):
            left = acts.left[i][j]  # e_i . e^j
            if left:
                table[(i, d + j)] = {d + c: v for c, v in left.items()}
            right = acts.right[i][j]  # e^i . e_j
            if right:
                table[(d + i, j)] = {d + c: v for c, v in right.items()}
            prod = {k: x for k, x in enumerate(amb.column(i * d + j)) if x}
            if prod:
                table[(d + i, d + j)] = prod
    b = SuperAlgebra(2 * d, (0,) * (2 * d), table, a.unit + (ZERO,) * d,
                     f"{a.name}+{a.name}*" if a.name else "")
    trace = (ZERO,) * d + a.unit
    frob = FrobeniusAlgebra(b, trace, "symmetric-super")
    out = IntegratedAlgebra(frob)
    if star is not None:
        c = I if reality == "imaginary" else ONE
        n = dual_involution_matrix(star)
        rows = [[ZERO] * (2 * d) for _ in range(2 * d)]
        for r in range(d):
            for s in range(d):
                rows[r][s] = star.matrix[r, s]
                rows[d + r][d + s] = c * n[r, s]
        out.star = StarStructure(b, GMatrix.from_rows(rows, 2 * d), "ordinary")
    return out


# ----------------------------------------------------------------------------
# spin-statistics / Or and SuperVect / Or


def forget_semidirect(a: SuperAlgebra) -> SuperAlgebra:
    return underlying_algebra(parity_semidirect(a))


def forget_semidirect_star(star: StarStructure, b: SuperAlgebra) -> StarStructure:
    """Star on Forget(A x| Z/2) induced from a star on A.

    On A it is ``x^+ = w^{|x|} x*`` with w = -i for an ordinary star and
    w = 1 for a twisted one, so that it reverses products without Koszul
    signs. It fixes eps, hence ``(x eps)^+ = eps x^+ = (-1)^{|x|} x^+ eps``.
    """
    a = star.algebra
    d = a.dim
    w = -I if star.flavor == "ordinary" else ONE
    rows = [[ZERO] * (2 * d) for _ in range(2 * d)]
    for j in range(d):
        scale = w if a.parity[j] else ONE
        eps_sign = -ONE if a.parity[j] else ONE
        for k in range(d):
            x = star.matrix[k, j]
            if x:
                rows[k][j] = scale * x
                rows[d + k][d + j] = eps_sign * scale * x
    return StarStructure(b, GMatrix.from_rows(rows, 2 * d), "ordinary")


def spinstats_to_or(Phi: SpinStatTrivialization, star: Optional[StarStructure] = None,
                    reality: str = "none") -> IntegratedAlgebra:
    report = validate_spinstat(Phi, reality, star)
    if not report.ok:
        raise InvalidTrivialization(report)
    a = Phi.algebra
    b = forget_semidirect(a)
    trace = tuple(Phi.tau) + (ZERO,) * a.dim
    out = IntegratedAlgebra(FrobeniusAlgebra(b, trace, "symmetric-super"))
    if star is not None:
        out.star = forget_semidirect_star(star, b)
        star_report = validate_star(out.star)
        if not star_report.ok:
            raise InvalidTrivialization(star_report)
    return out


def supervect_to_or(f: FrobeniusAlgebra, star: Optional[StarStructure] = None) -> IntegratedAlgebra:
    """Symmetric Frobenius superalgebra to an even one: Forget(A x| Z/2) with
    trace ``t(a + a' eps) = tr(a')``."""
    report = validate_frobenius(f)
    if not report.ok or f.symmetry != "symmetric-super":
        raise InvalidTrivialization(report if not report.ok else "a symmetric-super trace is required")
    a = f.algebra
    b = forget_semidirect(a)
    trace = (ZERO,) * a.dim + tuple(f.trace)
    out = IntegratedAlgebra(FrobeniusAlgebra(b, trace, "symmetric-super"))
    if star is not None:
        out.star = forget_semidirect_star(star, b)
        star_report = validate_star(out.star)
        if not star_report.ok:
            raise InvalidTrivialization(star_report)
    return out


def eps_parity(b_dim: int, v: Sequence) -> Optional[int]:
    """0 if v lies in A, 1 if it lies in A eps, None if it has both parts."""
    d = b_dim // 2
    lo = any(v[:d])
    hi = any(v[d:])
    if lo and hi:
        return None
    return 1 if hi else 0

