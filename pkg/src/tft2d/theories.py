"""Theory descriptors and validators for spin and spin-statistics trivializations.

Dual-module conventions. ``A*`` has the dual basis ``e^i`` with ``|e^i| = |e_i|``
and actions

    (a . alpha)(c) = (-1)^{|a|(|alpha| + |c|)} alpha(c a)
    (alpha . b)(c) = alpha(b c)

so that ``A*`` is an A-A superbimodule. ``A* (x)_A A*`` is modelled as the
quotient of the ambient space ``A* (x) A*`` (index ``i*dim + j`` for
``e^i (x) e^j``) by the span of ``(alpha . a) (x) beta - alpha (x) (a . beta)``.

A spin trivialization is a matrix ``phi`` from quotient coordinates to A.
Its associativity condition compares the two maps
``A* (x) A* (x) A* -> A*`` given by ``phi(alpha (x) beta) . gamma`` and
``alpha . phi(beta (x) gamma)``; this is the same identity as comparing
``phi (x) id`` and ``id (x) phi`` on the triple quotient, checked on ambient
triples because both sides already kill the middle relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import KindPayloadMismatch, UnsupportedKind, ValidationFailed
from .frobenius import FrobeniusAlgebra, validate_frobenius
from .scalars import (
    ONE, ZERO, GMatrix, SparseEchelon, determinant, gr, inverse,
)
from .superalg import (
    Report, StarStructure, SuperAlgebra, cached_report, is_semisimple,
    require_valid, validate_star,
)

# ----------------------------------------------------------------------------
# dual bimodule


class DualActions:
    """Sparse matrices of the left and right actions of A on A*."""

    def __init__(self, a: SuperAlgebra):
        self.algebra = a
        d = a.dim
        p = a.parity
        # left[a_idx][i] = e_a . e^i, right[i][b] = e^i . e_b, as {c: coeff}
        self.left = [[{} for _ in range(d)] for _ in range(d)]
        self.right = [[{} for _ in range(d)] for _ in range(d)]
        for (c, aa), row in a.table.items():
            # (e_aa . e^i)(e_c) = sign * coeff of e_i in e_c e_aa
            for i, x in row.items():
                sign = -1 if (p[aa] * (p[i] + p[c])) % 2 else 1
                self.left[aa][i][c] = x * sign
        for (b, c), row in a.table.items():
            for i, x in row.items():
                self.right[i][b][c] = x

    def left_act(self, x: Sequence, alpha: dict) -> dict:
        """x . alpha for x in A (dense) and alpha in A* (sparse)."""
        out: dict = {}
        for aa, xa in enumerate(x):
            if not xa:
                continue
            for i, ai in alpha.items():
                for c, v in self.left[aa][i].items():
                    z = out.get(c, ZERO) + xa * ai * v
                    if z:
                        out[c] = z
                    else:
                        out.pop(c, None)
        return out

    def right_act(self, alpha: dict, x: Sequence) -> dict:
        out: dict = {}
        for b, xb in enumerate(x):
            if not xb:
                continue
            for i, ai in alpha.items():
                for c, v in self.right[i][b].items():
                    z = out.get(c, ZERO) + ai * xb * v
                    if z:
                        out[c] = z
                    else:
                        out.pop(c, None)
        return out


@dataclass
class BimoduleQuotient:
    algebra: SuperAlgebra
    actions: DualActions
    relations: SparseEchelon
    basis: tuple  # ambient indices kept as the quotient basis
    projection: GMatrix  # q x dim^2

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return self.algebra.dim ** 2

    def project(self, vec: dict) -> tuple:
        """Quotient coordinates of a sparse ambient vector."""
        out = []
        for r in range(self.projection.rows):
            acc = ZERO
            for k, x in vec.items():
                y = self.projection[r, k]
                if y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)


def _tensor(alpha: dict, beta: dict, d: int) -> dict:
    out: dict = {}
    for i, x in alpha.items():
        for j, y in beta.items():
            out[i * d + j] = out.get(i * d + j, ZERO) + x * y
    return {k: v for k, v in out.items() if v}


def build_bimodule_quotient(a: SuperAlgebra) -> BimoduleQuotient:
    require_valid(a)
    d = a.dim
    acts = DualActions(a)
    ech = SparseEchelon(d * d)
    for aa in range(d):
        for i in range(d):
            left_part = acts.right[i][aa]  # e^i . e_aa
            for j in range(d):
                right_part = acts.left[aa][j]  # e_aa . e^j
                rel = _tensor(left_part, {j: ONE}, d)
                for k, v in _tensor({i: ONE}, right_part, d).items():
                    z = rel.get(k, ZERO) - v
                    if z:
                        rel[k] = z
                    else:
                        rel.pop(k, None)
                if rel:
                    ech.add(rel)
    free, proj = ech.quotient_projection()
    return BimoduleQuotient(a, acts, ech, tuple(free), proj)


# ----------------------------------------------------------------------------
# antilinear involution on A* induced by a star


def dual_involution_matrix(star: StarStructure) -> GMatrix:
    """N with alpha^v = N . conj(alpha), where alpha^v(c) = conj(alpha(c*))."""
    return star.matrix.conjugate_transpose()


def _antilinear_apply(m: GMatrix, vec: dict) -> dict:
    out: dict = {}
    for i, x in vec.items():
        xc = x.conjugate()
        for r in range(m.rows):
            y = m[r, i]
            if y:
                z = out.get(r, ZERO) + y * xc
                if z:
                    out[r] = z
                else:
                    out.pop(r, None)
    return out


# ----------------------------------------------------------------------------
# spin trivializations

REALITIES = ("real", "imaginary", "none")


@dataclass
class SpinTrivialization:
    quotient: BimoduleQuotient
    phi: GMatrix  # dim A x dim quotient

    @property
    def algebra(self) -> SuperAlgebra:
        return self.quotient.algebra

    def ambient_matrix(self) -> GMatrix:
        return self.phi @ self.quotient.projection

    def on_ambient(self, vec: dict) -> tuple:
        return self.phi.apply(self.quotient.project(vec))


def phi_from_ambient(quotient: BimoduleQuotient, assign) -> GMatrix:
    """phi determined by its values ``assign(i, j)`` on representatives e^i (x) e^j."""
    d = quotient.algebra.dim
    cols = [tuple(gr(x) for x in assign(k // d, k % d)) for k in quotient.basis]
    return GMatrix.from_columns(cols, d) if cols else GMatrix.zeros(d, 0)


def phi_from_symmetric_trace(frob: FrobeniusAlgebra, quotient: BimoduleQuotient, scale=1) -> GMatrix:
    """phi(alpha (x) beta) = scale * theta(alpha) theta(beta), with theta: A* -> A
    the bimodule isomorphism inverse to x -> tr(- x)."""
    a = frob.algebra
    d = frob.dual_matrix
    theta = [d.column(i) for i in range(a.dim)]
    s = gr(scale)
    return phi_from_ambient(quotient, lambda i, j: tuple(s * x for x in a.mul(theta[i], theta[j])))


def validate_spin(phi: SpinTrivialization, reality: str = "none",
                  star: Optional[StarStructure] = None) -> Report:
    report = Report()
    q = phi.quotient
    a = q.algebra
    d = a.dim
    alg = cached_report(a)
    if not alg.ok:
        report.extend(alg)
        return report
    if not a.is_even():
        report.add("not-even", "spin trivializations are taken on purely even algebras")
        return report
    if phi.phi.shape != (d, q.dim):
        report.add("shape", f"phi has shape {phi.phi.shape}, expected {(d, q.dim)}")
        return report
    if q.dim != d or (d and determinant(phi.phi) == ZERO):
        report.add("not-invertible", "phi is not invertible")
    amb = phi.ambient_matrix()
    cols = [amb.column(k) for k in range(d * d)]
    acts = q.actions

    def amb_apply(vec: dict) -> tuple:
        out = [ZERO] * d
        for k, x in vec.items():
            for r, y in enumerate(cols[k]):
                if y:
                    out[r] = out[r] + x * y
        return tuple(out)

    for aa in range(d):
        ea = a.basis(aa)
        for i in range(d):
            for j in range(d):
                base = cols[i * d + j]
                lhs = amb_apply(_tensor(acts.left[aa][i], {j: ONE}, d))
                if lhs != a.mul(ea, base):
                    report.add("bimodule-left", f"phi(e_{aa} . (e^{i} (x) e^{j})) != e_{aa} phi(e^{i} (x) e^{j})",
                               (aa, i, j))
                rhs = amb_apply(_tensor({i: ONE}, acts.right[j][aa], d))
                if rhs != a.mul(base, ea):
                    report.add("bimodule-right", f"phi((e^{i} (x) e^{j}) . e_{aa}) != phi(e^{i} (x) e^{j}) e_{aa}",
                               (i, j, aa))
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = acts.left_act(cols[i * d + j], {k: ONE})
                rhs = acts.right_act({i: ONE}, cols[j * d + k])
                if lhs != rhs:
                    report.add("associativity", f"phi(e^{i} (x) e^{j}) . e^{k} != e^{i} . phi(e^{j} (x) e^{k})",
                               (i, j, k))
    if reality in ("real", "imaginary"):
        report.extend(_check_spin_reality(phi, reality, star))
    elif reality not in REALITIES:
        report.add("reality", f"unknown reality flag {reality!r}")
    return report


def swap_involution(q: BimoduleQuotient, star: StarStructure) -> Optional[GMatrix]:
    """Matrix T with tau(x) = T . conj(x) on quotient coordinates, where
    tau[alpha (x) beta] = [beta^v (x) alpha^v]; None if tau does not preserve relations."""
    d = q.algebra.dim
    n = dual_involution_matrix(star)
    dual_imgs = [_antilinear_apply(n, {i: ONE}) for i in range(d)]

    def tau_basis(k: int) -> dict:
        i, j = divmod(k, d)
        return _tensor(dual_imgs[j], dual_imgs[i], d)

    for p, row in q.relations.rows.items():
        img: dict = {}
        for k, x in row.items():
            for m, y in tau_basis(k).items():
                z = img.get(m, ZERO) + x.conjugate() * y
                if z:
                    img[m] = z
                else:
                    img.pop(m, None)
        if not q.relations.contains(img):
            return None
    cols = [q.project(tau_basis(k)) for k in q.basis]
    return GMatrix.from_columns(cols, q.dim) if cols else GMatrix.zeros(0, 0)


def _check_spin_reality(phi: SpinTrivialization, reality: str, star: Optional[StarStructure]) -> Report:
    report = Report()
    q = phi.quotient
    a = q.algebra
    if star is None:
        from .superalg import identity_conjugation_star
        star = identity_conjugation_star(a)
        if not validate_star(star).ok:
            report.add("reality", "no star supplied and coordinate conjugation is not a star on this algebra")
            return report
    t = swap_involution(q, star)
    if t is None:
        report.add("reality", "the induced involution does not preserve the relations of the quotient")
        return report
    sign = ONE if reality == "real" else -ONE
    for k in range(q.dim):
        lhs = phi.phi.apply(t.column(k))  # phi(tau(q_k))
        rhs = tuple(sign * x for x in star.apply(phi.phi.column(k)))
        if lhs != rhs:
            report.add("reality", f"phi is not {reality} on quotient basis vector {k}", (k,))
    return report


# ----------------------------------------------------------------------------
# spin-statistics trivializations


@dataclass
class SpinStatTrivialization:
    algebra: SuperAlgebra
    Phi: GMatrix  # A* coordinates -> A coordinates

    @property
    def tau(self) -> tuple:
        """Phi^{-1}(1) as a covector on A: the induced trace."""
        return inverse(self.Phi).apply(self.algebra.unit)

    def frobenius(self) -> FrobeniusAlgebra:
        return FrobeniusAlgebra(self.algebra, self.tau, "twisted-symmetric")


def Phi_from_trace(a: SuperAlgebra, trace: Sequence) -> GMatrix:
    """Phi with Phi^{-1}(x) = x . tau for the given trace tau."""
    f = FrobeniusAlgebra(a, trace, "twisted-symmetric")
    g = f.gram
    p = a.parity
    d = a.dim
    # (e_x . tau)(e_c) = (-1)^{|x||c|} tr(e_c e_x)
    psi = GMatrix.from_rows([[g[c, x] * (-1 if p[x] and p[c] else 1) for x in range(d)] for c in range(d)], d)
    return inverse(psi)


def validate_spinstat(Phi: SpinStatTrivialization, reality: str = "none",
                      star: Optional[StarStructure] = None) -> Report:
    report = Report()
    a = Phi.algebra
    d = a.dim
    alg = cached_report(a)
    if not alg.ok:
        report.extend(alg)
        return report
    m = Phi.Phi
    if m.shape != (d, d):
        report.add("shape", f"Phi has shape {m.shape}, expected {(d, d)}")
        return report
    if d and determinant(m) == ZERO:
        report.add("not-invertible", "Phi is not invertible")
        return report
    for k in range(d):
        for i in range(d):
            if m[k, i] and a.parity[k] != a.parity[i]:
                report.add("parity", f"Phi(e^{i}) has a component on e_{k} of the other parity", (i, k))
    acts = DualActions(a)
    cols = [m.column(i) for i in range(d)]

    def apply_sparse(alpha: dict) -> tuple:
        out = [ZERO] * d
        for i, x in alpha.items():
            for r, y in enumerate(cols[i]):
                if y:
                    out[r] = out[r] + x * y
        return tuple(out)

    for aa in range(d):
        ea = a.basis(aa)
        sign = -1 if a.parity[aa] else 1
        for i in range(d):
            if apply_sparse(acts.left[aa][i]) != a.mul(ea, cols[i]):
                report.add("bimodule-left", f"Phi(e_{aa} . e^{i}) != e_{aa} Phi(e^{i})", (aa, i))
            rhs = tuple(sign * x for x in a.mul(cols[i], ea))
            if apply_sparse(acts.right[i][aa]) != rhs:
                report.add("bimodule-twisted-right", f"Phi(e^{i} . e_{aa}) != (-1)^|e_{aa}| Phi(e^{i}) e_{aa}",
                           (i, aa))
    report.extend(validate_frobenius(Phi.frobenius()))
    if reality in ("real", "imaginary"):
        tau = Phi.tau
        if star is None:
            from .superalg import identity_conjugation_star
            star = identity_conjugation_star(a)
        sign = ONE if reality == "real" else -ONE
        for b in range(d):
            image = star.of_basis(b)
            lhs = sum((t * x for t, x in zip(tau, image) if t and x), ZERO)
            if lhs != sign * tau[b].conjugate():
                report.add("reality", f"tr(e_{b}*) != {'' if reality == 'real' else '-'}conj(tr(e_{b}))", (b,))
    elif reality not in REALITIES:
        report.add("reality", f"unknown reality flag {reality!r}")
    return report


# ----------------------------------------------------------------------------
# theory descriptors


@dataclass(frozen=True)
class KindInfo:
    payload: str  # "frobenius", "spin", "spinstat"
    star: Optional[str]  # None: no star; "ordinary"/"twisted"/"any": required flavor
    reality: str
    super_ok: bool
    symmetry: Optional[str] = None
    etale_class: Optional[tuple] = None
    supported: bool = True


KINDS: dict[str, KindInfo] = {
    "unoriented": KindInfo("frobenius", None, "none", False, "symmetric-super"),
    "oriented": KindInfo("frobenius", None, "none", False, "symmetric-super"),
    "complex": KindInfo("frobenius", None, "none", False, "symmetric-super"),
    "hermitian": KindInfo("frobenius", "any", "none", False, "symmetric-super"),
    "oriented-spin": KindInfo("spin", None, "real", False, etale_class=(0, 0, 0)),
    "twisted-oriented-spin": KindInfo("spin", None, "imaginary", False, etale_class=(0, 0, 1)),
    "hermitian-spin": KindInfo("spin", "any", "real", False, etale_class=(1, 0, 0)),
    "twisted-hermitian-spin": KindInfo("spin", "any", "imaginary", False, etale_class=(1, 0, 1)),
    "real-spin-statistics": KindInfo("spinstat", None, "real", True, etale_class=(0, 1, 0)),
    "twisted-real-spin-statistics": KindInfo("spinstat", None, "real", True, etale_class=(0, 1, 1),
                                             supported=False),
    "hermitian-spin-statistics": KindInfo("spinstat", "ordinary", "real", True, etale_class=(1, 1, 0)),
    "twisted-hermitian-spin-statistics": KindInfo("spinstat", "twisted", "real", True, etale_class=(1, 1, 1)),
    "hermitian-super": KindInfo("frobenius", "ordinary", "none", True, "symmetric-super"),
    "twisted-hermitian-super": KindInfo("frobenius", "twisted", "none", True, "symmetric-super"),
}

UNEXTENDED_KINDS = ("unoriented", "oriented", "complex", "hermitian")


@dataclass
class TheorySpec:
    kind: str
    algebra: SuperAlgebra
    frobenius: Optional[FrobeniusAlgebra] = None
    spin: Optional[SpinTrivialization] = None
    spinstat: Optional[SpinStatTrivialization] = None
    star: Optional[StarStructure] = None
    reality: str = "none"
    notes: list = field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return self.algebra.dim == 0


@dataclass
class Payload:
    """Raw theory data prior to validation (what a description file carries)."""

    algebra: SuperAlgebra
    trace: Optional[tuple] = None
    symmetry: Optional[str] = None
    star: Optional[StarStructure] = None
    phi: Optional[GMatrix] = None
    Phi: Optional[GMatrix] = None
    reality: Optional[str] = None


def build_theory(kind: str, payload: Payload) -> TheorySpec:
    """Validate ``payload`` against ``kind``; raise on shape or validation failure."""
    info = KINDS.get(kind)
    if info is None:
        raise KindPayloadMismatch(f"unknown kind {kind!r}")
    if not info.supported:
        raise UnsupportedKind(f"{kind} theories are carried as a label only")
    a = payload.algebra
    present = {"frobenius": payload.trace is not None, "spin": payload.phi is not None,
               "spinstat": payload.Phi is not None}
    if a.dim and not present[info.payload]:
        raise KindPayloadMismatch(f"{kind} requires a {info.payload} datum")
    extras = [p for p, there in present.items() if there and p != info.payload]
    if extras:
        raise KindPayloadMismatch(f"{kind} does not take {', '.join(extras)} data")
    if info.star is None and payload.star is not None:
        raise KindPayloadMismatch(f"{kind} does not take a star structure")
    if info.star is not None and payload.star is None and a.dim:
        raise KindPayloadMismatch(f"{kind} requires a star structure")
    reality = payload.reality or info.reality
    if reality != info.reality:
        raise KindPayloadMismatch(f"{kind} requires reality {info.reality!r}, got {reality!r}")

    result = TheorySpec(kind, a, star=payload.star, reality=reality)
    if a.dim == 0:
        result.notes.append("zero theory")
        return result

    report = Report()
    report.extend(cached_report(a))
    if not report.ok:
        raise ValidationFailed(report)
    if not info.super_ok and not a.is_even():
        report.add("not-even", f"{kind} theories use purely even algebras")
    if not is_semisimple(a):
        report.add("not-semisimple", "the algebra is not semisimple")
    star = payload.star
    if star is not None:
        if star.algebra is not a and star.algebra != a:
            report.add("star", "star structure belongs to another algebra")
        if info.star in ("ordinary", "twisted") and star.flavor != info.star and not a.is_even():
            report.add("star-flavor", f"{kind} needs a star of flavor {info.star!r}, got {star.flavor!r}")
        report.extend(validate_star(star))
    if info.payload == "frobenius":
        symmetry = payload.symmetry or info.symmetry
        if symmetry != info.symmetry and not a.is_even():
            report.add("symmetry", f"{kind} needs a {info.symmetry} trace")
        result.frobenius = FrobeniusAlgebra(a, payload.trace, symmetry)
        report.extend(validate_frobenius(result.frobenius))
    elif info.payload == "spin":
        q = build_bimodule_quotient(a)
        result.spin = SpinTrivialization(q, payload.phi)
        report.extend(validate_spin(result.spin, reality, star))
    else:
        result.spinstat = SpinStatTrivialization(a, payload.Phi)
        report.extend(validate_spinstat(result.spinstat, reality, star))
        if report.ok:
            result.frobenius = result.spinstat.frobenius()
    if not report.ok:
        raise ValidationFailed(report)
    return result
