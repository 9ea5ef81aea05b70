"""Circle state spaces and the reflection-positivity verdict.

Closed-surface values live here too, since they share the handle element.

Reflection positivity is decided on the circle alone. Every closed 1-manifold
is a disjoint union of circles, and a tensor product of positive-definite
forms is positive-definite, so the circle form decides the question.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import IllDefinedOnCocenter, KindMismatch, NotEven, UnsupportedKind, UntaggedReality
from .frobenius import FrobeniusAlgebra, handle_element, require_frobenius
from .integrate import (
    HilbertData, IntegratedAlgebra, eps_parity, integrate_complex, integrate_or,
    spins_to_or, spinstats_to_or, supervect_to_or,
)
from .scalars import (
    ONE, ZERO, GaussianRational, GMatrix, hermitian_part, is_positive_definite_hermitian,
    rank, solve,
)
from .superalg import StarStructure, SuperAlgebra, _center_unchecked, commutator_span
from .theories import KINDS, TheorySpec


# ----------------------------------------------------------------------------
# circle state space


def central_basis(f: FrobeniusAlgebra) -> list[tuple]:
    """Central representatives of a basis of the cocenter.

    Raises IllDefinedOnCocenter unless the trace kills commutators and the
    center maps isomorphically onto the cocenter.
    """
    a = f.algebra
    comm = commutator_span(a)
    for p, row in comm.rows.items():
        if f.tr_sparse(row):
            raise IllDefinedOnCocenter(f"trace is nonzero on the commutator with pivot e_{p}")
    _, proj = comm.quotient_projection()
    z = _center_unchecked(a)
    if len(z) != proj.rows:
        raise IllDefinedOnCocenter(
            f"center has dimension {len(z)} but the cocenter has dimension {proj.rows}")
    if z and rank(GMatrix.from_columns([proj.apply(v) for v in z], proj.rows)) != len(z):
        raise IllDefinedOnCocenter("the center does not map isomorphically onto the cocenter")
    return z


def circle_state_space(f: FrobeniusAlgebra, star: Optional[StarStructure] = None) -> HilbertData:
    """Cocenter of a purely even Frobenius algebra with its pairing.

    Without a star the pairing is tr(ab) (tag real-symmetric when real,
    complex-symmetric otherwise); with a star it is tr(a* b) (tag hermitian).
    """
    require_frobenius(f)
    a = f.algebra
    if not a.is_even():
        raise NotEven("circle state spaces are computed for purely even algebras")
    z = central_basis(f)
    n = len(z)
    if star is None:
        rows = [[f.tr(a.mul(z[k], z[l])) for l in range(n)] for k in range(n)]
        gram = GMatrix.from_rows(rows, n)
        tag = "real-symmetric" if gram.is_real() else "complex-symmetric"
    else:
        zs = [star.apply(v) for v in z]
        rows = [[f.tr(a.mul(zs[k], z[l])) for l in range(n)] for k in range(n)]
        gram = GMatrix.from_rows(rows, n)
        tag = "hermitian"
    return HilbertData(gram, tag, basis=z)


# ----------------------------------------------------------------------------
# closed surfaces


def center_frobenius(f: FrobeniusAlgebra) -> FrobeniusAlgebra:
    """The center as a commutative algebra, with the trace restricted to it."""
    a = f.algebra
    z = central_basis(f)
    n = len(z)
    basis_matrix = GMatrix.from_columns(z, a.dim)
    table = {}
    for k in range(n):
        for l in range(n):
            coords = solve(basis_matrix, a.mul(z[k], z[l]))
            if coords is None:
                raise IllDefinedOnCocenter("center is not closed under multiplication")
            row = {m: x for m, x in enumerate(coords) if x}
            if row:
                table[(k, l)] = row
    unit = solve(basis_matrix, a.unit)
    alg = SuperAlgebra(n, (0,) * n, table, unit, f"Z({a.name})" if a.name else "")
    return FrobeniusAlgebra(alg, [f.tr(v) for v in z], f.symmetry)


def partition_genus(f: FrobeniusAlgebra, g: int) -> GaussianRational:
    """epsilon(h^g) for the handle element h.

    Noncommutative inputs are first replaced by their center with the
    restricted trace (see ``genus_is_restricted``).
    """
    if g < 0:
        raise ValueError("genus must be nonnegative")
    require_frobenius(f)
    if not f.algebra.is_even():
        raise NotEven("closed-surface values are computed for purely even algebras")
    if not f.algebra.is_commutative:
        f = center_frobenius(f)
    a = f.algebra
    h = handle_element(f)
    power = a.unit
    for _ in range(g):
        power = a.mul(power, h)
    return f.tr(power)


def genus_is_restricted(f: FrobeniusAlgebra) -> bool:
    return not f.algebra.is_commutative


# ----------------------------------------------------------------------------
# definiteness witness


def ldl_witness(s: GMatrix) -> Optional[tuple]:
    """LDL^T without pivoting on a Hermitian form; at the first nonpositive
    pivot d_k return v = L^{-H} e_k (so v^H S v = d_k <= 0), else None."""
    n = s.rows
    lower = [[ZERO] * n for _ in range(n)]
    diag: list[GaussianRational] = []
    for k in range(n):
        lower[k][k] = ONE
        dk = s[k, k]
        for j in range(k):
            if lower[k][j]:
                dk = dk - lower[k][j] * lower[k][j].conjugate() * diag[j]
        if dk.re <= 0:
            # solve L^H v = e_k on the leading (k+1) block
            v = [ZERO] * n
            v[k] = ONE
            for i in range(k - 1, -1, -1):
                acc = ZERO
                for j in range(i + 1, k + 1):
                    if lower[j][i]:
                        acc = acc + lower[j][i].conjugate() * v[j]
                v[i] = -acc
            return tuple(v)
        diag.append(dk)
        inv = dk.inverse()
        for i in range(k + 1, n):
            acc = s[i, k]
            for j in range(k):
                if lower[i][j] and lower[k][j]:
                    acc = acc - lower[i][j] * lower[k][j].conjugate() * diag[j]
            lower[i][k] = acc * inv
    return None


def quadratic_value(s: GMatrix, v: Sequence) -> GaussianRational:
    w = s.apply(v)
    return sum((x.conjugate() * y for x, y in zip(v, w)), ZERO)


# ----------------------------------------------------------------------------
# verdict


@dataclass
class Verdict:
    kind: str
    route: str
    verdict: str  # positive | not-positive | vacuous-zero
    gram: Optional[GMatrix] = None  # circle form before realification
    real_gram: Optional[GMatrix] = None
    witness: Optional[tuple] = None
    notes: list = field(default_factory=list)
    state_parity: Optional[tuple] = None

    @property
    def positive(self) -> bool:
        return self.verdict in ("positive", "vacuous-zero")


ROUTES = ("auto", "oriented", "hermitian")


def _integrated(t: TheorySpec) -> tuple[IntegratedAlgebra, str]:
    info = KINDS[t.kind]
    if info.payload == "spin":
        return spins_to_or(t.spin, t.star, t.reality), "spins/or"
    if info.payload == "spinstat":
        return spinstats_to_or(t.spinstat, t.star, t.reality), "spinstats/or"
    if t.kind in ("hermitian-super", "twisted-hermitian-super"):
        return supervect_to_or(t.frobenius, t.star), "supervect/or"
    return IntegratedAlgebra(t.frobenius, t.star), "none"


def integrated_state_space(t: TheorySpec, hermitian: bool) -> tuple[HilbertData, IntegratedAlgebra, str]:
    integ, stage = _integrated(t)
    star = integ.star if hermitian else None
    if hermitian and star is None:
        raise UntaggedReality(f"{t.kind} carries no star structure, so no Hermitian route exists")
    h = circle_state_space(integ.frobenius, star)
    return h, integ, stage


def is_reflection_positive(t: TheorySpec, route: str = "auto") -> Verdict:
    info = KINDS.get(t.kind)
    if info is None or not info.supported:
        raise UnsupportedKind(t.kind)
    if route not in ROUTES:
        raise KindMismatch(f"unknown route {route!r}")
    if t.is_zero:
        return Verdict(t.kind, "zero", "vacuous-zero", GMatrix.zeros(0, 0), GMatrix.zeros(0, 0),
                       notes=["zero theory"])

    if route == "auto":
        if t.kind == "unoriented":
            route = "direct"
        elif t.kind == "complex":
            route = "complex"
        elif t.kind in ("hermitian-super", "twisted-hermitian-super"):
            route = "super"
        elif info.star is not None:
            route = "hermitian"
        else:
            route = "oriented"

    h, integ, stage = integrated_state_space(t, hermitian=route in ("hermitian", "super"))
    notes: list = []
    parity = None
    if route == "direct":
        if h.tag != "real-symmetric" or not h.gram.is_symmetric():
            raise KindMismatch("an unoriented theory needs a real symmetric circle pairing")
        real = h
    elif route == "oriented":
        real = integrate_or(HilbertData(h.gram, "oriented-pair"))
    elif route == "complex":
        if not h.gram.is_symmetric():
            raise KindMismatch("complex-linear circle pairing is not symmetric")
        real = integrate_complex(HilbertData(h.gram, "complex-symmetric"))
    else:
        gram = h.gram
        if not gram.is_hermitian():
            gram = hermitian_part(gram)
            notes.append("hermitian-part")
        if route == "super":
            b = integ.frobenius.algebra
            parity = tuple(eps_parity(b.dim, v) for v in h.basis)
            real = integrate_complex(HilbertData(gram, "super-hermitian", parity))
        else:
            real = integrate_or(HilbertData(gram, "hermitian"))

    route_name = route if stage == "none" else f"{stage}+{route}"
    s = real.gram
    positive = is_positive_definite_hermitian(s)
    witness = None if positive else ldl_witness(s)
    if witness is not None:
        assert quadratic_value(s, witness).re <= 0
    return Verdict(t.kind, route_name, "positive" if positive else "not-positive",
                   h.gram, s, witness, notes, parity)
