"""Named example theories, addressable on the command line as ``catalog:NAME``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .frobenius import FrobeniusAlgebra
from .scalars import I, ONE, ZERO, GMatrix, gr
from .superalg import (
    StarStructure, SuperAlgebra, clifford, clifford_star, conjugate_transpose_star,
    group_algebra_cyclic, identity_conjugation_star, matrix_algebra, quadratic_algebra,
    scalars_algebra, zero_algebra,
)
from .theories import Payload, Phi_from_trace, build_bimodule_quotient, phi_from_ambient, phi_from_symmetric_trace
from .fileformat import Document


def _unit_trace(a: SuperAlgebra) -> tuple:
    """Trace taking the value 1 on the first basis vector and 0 elsewhere."""
    return (ONE,) + (ZERO,) * (a.dim - 1)


def _split_spin(kind: str, scalars: list, star: bool = True) -> Document:
    """Q(i)^n with phi(e^j (x) e^j) = scalars[j] e_j and cross terms zero."""
    n = len(scalars)
    a = scalars_algebra(n)
    q = build_bimodule_quotient(a)
    vals = [gr(s) for s in scalars]

    def assign(i, j):
        return tuple(vals[i] if (i == j == k) else ZERO for k in range(n))

    phi = phi_from_ambient(q, assign)
    return Document(Payload(a, phi=phi, star=identity_conjugation_star(a) if star else None), kind)


def _trace_spin(kind: str, a: SuperAlgebra, trace, star: StarStructure, scale=1) -> Document:
    f = FrobeniusAlgebra(a, trace)
    q = build_bimodule_quotient(a)
    return Document(Payload(a, phi=phi_from_symmetric_trace(f, q, scale), star=star), kind)


def clifford_spinstat_trace(n: int) -> tuple:
    """tr(1) = 2^{(n+1)/2} for odd n and 2^{n/2} for even n; zero on other monomials."""
    a = clifford(n)
    top = 2 ** ((n + 1) // 2) if n % 2 else 2 ** (n // 2)
    return (gr(top),) + (ZERO,) * (a.dim - 1)


def _cliff_spinstat(n: int, flavor: str, kind: str) -> Document:
    a = clifford(n)
    star = clifford_star(n, flavor)
    star = StarStructure(a, star.matrix, flavor)
    return Document(Payload(a, Phi=Phi_from_trace(a, clifford_spinstat_trace(n)), star=star), kind)


def _frob(kind: str, a: SuperAlgebra, trace, star: StarStructure | None = None, symmetry=None) -> Document:
    return Document(Payload(a, trace=tuple(gr(t) for t in trace), star=star, symmetry=symmetry), kind)


def _cyclic_star(n: int) -> StarStructure:
    """e_g* = e_{-g} on Q(i)[Z/n]."""
    a = group_algebra_cyclic(n)
    rows = [[ONE if r == (-c) % n else ZERO for c in range(n)] for r in range(n)]
    return StarStructure(a, GMatrix.from_rows(rows, n), "ordinary")


def _cliff2_super() -> Document:
    a = clifford(2)
    star = StarStructure(a, clifford_star(2, "ordinary").matrix, "ordinary")
    return _frob("hermitian-super", a, [0, 0, 0, I], star, "symmetric-super")


def _spin_mat2(kind: str) -> Document:
    star = conjugate_transpose_star(2)
    return _trace_spin(kind, star.algebra, [1, 0, 0, 1], star)


def _spin_z3() -> Document:
    star = _cyclic_star(3)
    return _trace_spin("hermitian-spin", star.algebra, [1, 0, 0], star)


def _zero(kind: str) -> Document:
    return Document(Payload(zero_algebra()), kind)


@dataclass(frozen=True)
class Entry:
    description: str
    build: Callable[[], Document]


def _cliff_entries() -> dict:
    out = {}
    for n in range(1, 6):
        out[f"cliff{n}-spinstats"] = Entry(
            f"Cliff({n}) with x_j* = i x_j and the twisted-symmetric trace tr(1) = "
            f"{clifford_spinstat_trace(n)[0]}",
            (lambda n=n: _cliff_spinstat(n, "ordinary", "hermitian-spin-statistics")))
    for n in range(1, 4):
        out[f"cliff{n}-twisted-spinstats"] = Entry(
            f"Cliff({n}) with the twisted star x_j* = x_j and the same trace",
            (lambda n=n: _cliff_spinstat(n, "twisted", "twisted-hermitian-spin-statistics")))
    return out


CATALOG: dict[str, Entry] = {
    # spin but not super
    "spin-phi-plus-one": Entry("Q(i) with phi = +1 (real)", lambda: _split_spin("hermitian-spin", [1])),
    "spin-phi-minus-one": Entry("Q(i) with phi = -1 (real)", lambda: _split_spin("hermitian-spin", [-1])),
    "spin-c2": Entry("Q(i)^2 with phi = (+1, -1)", lambda: _split_spin("hermitian-spin", [1, -1])),
    "spin-c3": Entry("Q(i)^3 with phi = (1, -1, 2)", lambda: _split_spin("hermitian-spin", [1, -1, 2])),
    "spin-mat2": Entry("Mat_2 with E_ab* = E_ba and phi from the matrix trace",
                       lambda: _spin_mat2("hermitian-spin")),
    "spin-z3": Entry("Q(i)[Z/3] with e_g* = e_-g and phi from tr(e_0) = 1", _spin_z3),
    "twisted-spin-phi-i": Entry("Q(i) with phi = i (imaginary)",
                                lambda: _split_spin("twisted-hermitian-spin", [I])),
    "twisted-spin-c2": Entry("Q(i)^2 with phi = (i, -i)",
                             lambda: _split_spin("twisted-hermitian-spin", [I, -I])),
    "twisted-spin-c3": Entry("Q(i)^3 with phi = (i, 2i, -i)",
                             lambda: _split_spin("twisted-hermitian-spin", [I, 2 * I, -I])),
    "oriented-spin-phi-one": Entry("Q(i) with phi = 1 and no Hermitian structure",
                                   lambda: _split_spin("oriented-spin", [1], star=False)),
    "zero": Entry("the zero theory (dimension 0)", lambda: _zero("hermitian-spin")),
    # spin-statistics
    **_cliff_entries(),
    "boson-spinstats": Entry("Q(i) as a purely even spin-statistics theory with tr(1) = 1",
                             lambda: Document(Payload(scalars_algebra(1), Phi=GMatrix.identity(1),
                                                      star=identity_conjugation_star(scalars_algebra(1))),
                                              "hermitian-spin-statistics")),
    "real-cliff1-spinstats": Entry("Cliff(1) with tr(1) = 2 and no Hermitian structure",
                                   lambda: Document(Payload(clifford(1), Phi=Phi_from_trace(
                                       clifford(1), clifford_spinstat_trace(1))), "real-spin-statistics")),
    # super but not spin
    "cliff2-super": Entry("Cliff(2) with x* = ix, y* = iy and tr(xy) = i", _cliff2_super),
    # unextended classes
    "oriented-c1": Entry("Q(i) with tr(1) = 1", lambda: _frob("oriented", scalars_algebra(1), [1])),
    "oriented-c2": Entry("Q(i)^2 with tr = (1, 1)", lambda: _frob("oriented", scalars_algebra(2), [1, 1])),
    "oriented-quadratic": Entry("Q(i)[x]/(x^2=1) with tr(a+bx) = b",
                                lambda: _frob("oriented", quadratic_algebra(1), [0, 1])),
    "oriented-mat2": Entry("Mat_2 with the matrix trace", lambda: _frob("oriented", matrix_algebra(2), [1, 0, 0, 1])),
    "oriented-z3": Entry("Q(i)[Z/3] with tr(e_0) = 1",
                         lambda: _frob("oriented", group_algebra_cyclic(3), [1, 0, 0])),
    "complex-c1": Entry("Q(i) with tr(1) = 1", lambda: _frob("complex", scalars_algebra(1), [1])),
    "complex-c2": Entry("Q(i)^2 with tr = (1, i)", lambda: _frob("complex", scalars_algebra(2), [1, I])),
    "complex-mat2": Entry("Mat_2 with the matrix trace", lambda: _frob("complex", matrix_algebra(2), [1, 0, 0, 1])),
    "complex-z4": Entry("Q(i)[Z/4] with tr(e_0) = 2",
                        lambda: _frob("complex", group_algebra_cyclic(4), [2, 0, 0, 0])),
    "hermitian-c1-plus": Entry("Q(i) with tr(1) = 1 and complex conjugation",
                               lambda: _frob("hermitian", scalars_algebra(1), [1],
                                             identity_conjugation_star(scalars_algebra(1)))),
    "hermitian-c1-minus": Entry("Q(i) with tr(1) = -1 and complex conjugation",
                                lambda: _frob("hermitian", scalars_algebra(1), [-1],
                                              identity_conjugation_star(scalars_algebra(1)))),
    "hermitian-mat2": Entry("Mat_2 with the matrix trace and E_ab* = E_ba",
                            lambda: _frob("hermitian", matrix_algebra(2), [1, 0, 0, 1],
                                          conjugate_transpose_star(2))),
    "hermitian-z3": Entry("Q(i)[Z/3] with tr(e_0) = 1 and e_g* = e_-g",
                          lambda: _frob("hermitian", group_algebra_cyclic(3), [1, 0, 0], _cyclic_star(3))),
    "unoriented-c2": Entry("Q(i)^2 with tr = (1, 2)", lambda: _frob("unoriented", scalars_algebra(2), [1, 2])),
    "unoriented-quadratic": Entry("Q(i)[x]/(x^2=1) with tr(a+bx) = b",
                                  lambda: _frob("unoriented", quadratic_algebra(1), [0, 1])),
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def load(name: str) -> Document:
    try:
        entry = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}") from None
    doc = entry.build()
    doc.name = name
    return doc


def names_of_kind(*kinds: str) -> list[str]:
    return [n for n in CATALOG if load(n).kind in kinds]
