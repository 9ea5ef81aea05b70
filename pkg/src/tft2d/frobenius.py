"""Frobenius structures: a trace covector on a superalgebra plus a symmetry flavor."""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .errors import InvalidFrobenius, NotEven
from .scalars import ZERO, GaussianRational, GMatrix, determinant, gr, inverse
from .superalg import Report, SuperAlgebra, cached_report, require_valid

SYMMETRIES = ("symmetric-super", "twisted-symmetric")


class FrobeniusAlgebra:
    """An algebra with a trace covector and its declared symmetry flavor.

    ``symmetric-super`` asks for tr(ab) = (-1)^{|a||b|} tr(ba) and
    ``twisted-symmetric`` for tr(ab) = tr(ba). On a purely even algebra the
    two flavors coincide.
    """

    def __init__(self, algebra: SuperAlgebra, trace: Sequence, symmetry: str = "symmetric-super"):
        if len(trace) != algebra.dim:
            raise ValueError("trace length differs from algebra dimension")
        self.algebra = algebra
        self.trace = tuple(gr(t) for t in trace)
        self.symmetry = symmetry

    def __repr__(self):
        return f"<FrobeniusAlgebra {self.algebra!r} {self.symmetry}>"

    def tr(self, x: Sequence) -> GaussianRational:
        acc = ZERO
        for t, c in zip(self.trace, x):
            if t and c:
                acc = acc + t * c
        return acc

    def tr_sparse(self, x: dict) -> GaussianRational:
        acc = ZERO
        for k, c in x.items():
            t = self.trace[k]
            if t:
                acc = acc + t * c
        return acc

    @cached_property
    def gram(self) -> GMatrix:
        """G[i][j] = tr(e_i e_j)."""
        a = self.algebra
        rows = [[self.tr_sparse(a.basis_product(i, j)) for j in range(a.dim)] for i in range(a.dim)]
        return GMatrix.from_rows(rows, a.dim)

    @cached_property
    def dual_matrix(self) -> GMatrix:
        """D = G^{-1}; the dual basis is e^i = sum_k D[k][i] e_k."""
        return inverse(self.gram)

    def dual_basis(self) -> list[tuple]:
        d = self.dual_matrix
        return [d.column(i) for i in range(self.algebra.dim)]


def validate_frobenius(f: FrobeniusAlgebra) -> Report:
    report = Report()
    a = f.algebra
    alg_report = cached_report(a)
    if not alg_report.ok:
        report.extend(alg_report)
        return report
    if f.symmetry not in SYMMETRIES:
        report.add("symmetry", f"unknown symmetry flavor {f.symmetry!r}")
        return report
    for k, t in enumerate(f.trace):
        if t and a.parity[k]:
            report.add("odd-trace", f"trace is nonzero on the odd basis vector e_{k}", (k,))
    g = f.gram
    if a.dim and determinant(g) == ZERO:
        report.add("degenerate", "Gram matrix tr(e_i e_j) is singular")
    for i in range(a.dim):
        for j in range(i, a.dim):
            sign = -1 if (f.symmetry == "symmetric-super" and a.parity[i] and a.parity[j]) else 1
            if g[i, j] != g[j, i] * sign:
                report.add("symmetry", f"tr(e_{i} e_{j}) violates the {f.symmetry} rule", (i, j))
    return report


def require_frobenius(f: FrobeniusAlgebra):
    report = validate_frobenius(f)
    if not report.ok:
        raise InvalidFrobenius(report)


def handle_element(f: FrobeniusAlgebra) -> tuple:
    """h = sum_i e_i e^i for the Gram-dual basis; defined for purely even algebras."""
    require_frobenius(f)
    a = f.algebra
    if not a.is_even():
        raise NotEven("handle element is only defined on purely even algebras")
    d = f.dual_matrix
    acc: dict = {}
    for i in range(a.dim):
        for k in range(a.dim):
            coeff = d[k, i]
            if not coeff:
                continue
            for m, x in a.basis_product(i, k).items():
                z = acc.get(m, ZERO) + coeff * x
                if z:
                    acc[m] = z
                else:
                    acc.pop(m, None)
    return tuple(acc.get(m, ZERO) for m in range(a.dim))


def frobenius_from_algebra_checked(algebra: SuperAlgebra, trace: Sequence, symmetry: str) -> FrobeniusAlgebra:
    require_valid(algebra)
    f = FrobeniusAlgebra(algebra, trace, symmetry)
    require_frobenius(f)
    return f
