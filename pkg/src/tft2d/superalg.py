"""Finite-dimensional superalgebras over Q(i) given by structure constants.

Elements are dense coefficient tuples in the homogeneous basis. Structure
constants are stored sparsely: ``table[(i, j)]`` maps ``k`` to the coefficient
of ``e_k`` in ``e_i e_j``. Dense nested lists are produced only on demand
(for files and for small tests).

Conventions
-----------
* Parity is a tuple of 0/1 per basis vector.
* The graded opposite uses the Koszul sign ``c_op[i][j][k] = (-1)^{|i||j|} c[j][i][k]``.
* Centers and cocenters are those of the underlying ungraded algebra.
* A star structure is antilinear: ``x* = M . conj(x)`` where ``conj`` acts on
  coordinates. Composing two such maps gives the linear map ``M . conj(M')``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import InvalidAlgebra
from .scalars import (
    I, ONE, ZERO, GaussianRational, GMatrix, SparseEchelon, gr, rank,
)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    witness: tuple = ()

    def __str__(self):
        wit = f" witness={self.witness}" if self.witness else ""
        return f"{self.code}: {self.message}{wit}"


@dataclass
class Report:
    """Outcome of a validator: empty means valid."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, witness: tuple = ()):
        self.violations.append(Violation(code, message, tuple(witness)))

    def extend(self, other: "Report"):
        self.violations.extend(other.violations)

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(str(v) for v in self.violations)


def _sparse_add(acc: dict, vec: dict, coeff: GaussianRational):
    for k, x in vec.items():
        z = acc.get(k, ZERO) + coeff * x
        if z:
            acc[k] = z
        else:
            acc.pop(k, None)


class SuperAlgebra:
    """A superalgebra given by structure constants on a homogeneous basis.

    ``parity[k]`` is the degree of ``e_k`` and ``unit`` holds the coordinates of 1.
    """

    __slots__ = ("dim", "parity", "table", "unit", "name", "__dict__")

    def __init__(self, dim: int, parity: Sequence[int], table: dict, unit: Sequence, name: str = ""):
        if len(parity) != dim:
            raise ValueError("parity length differs from dim")
        if len(unit) != dim:
            raise ValueError("unit length differs from dim")
        self.dim = dim
        self.parity = tuple(int(p) for p in parity)
        clean = {}
        for key, row in table.items():
            r = {k: gr(v) for k, v in row.items() if gr(v)}
            if r:
                clean[key] = r
        self.table = clean
        self.unit = tuple(gr(u) for u in unit)
        self.name = name

    # construction from / to dense tensors

    @classmethod
    def from_dense(cls, dim: int, parity: Sequence[int], structure, unit: Sequence, name: str = "") -> "SuperAlgebra":
        if len(structure) != dim or any(len(r) != dim for r in structure) \
                or any(len(s) != dim for r in structure for s in r):
            raise ValueError("structure tensor has the wrong shape")
        table = {}
        for i in range(dim):
            for j in range(dim):
                row = {k: gr(x) for k, x in enumerate(structure[i][j]) if gr(x)}
                if row:
                    table[(i, j)] = row
        return cls(dim, parity, table, unit, name)

    def structure(self) -> list[list[list[GaussianRational]]]:
        d = self.dim
        out = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
        for (i, j), row in self.table.items():
            for k, x in row.items():
                out[i][j][k] = x
        return out

    def coeff(self, i: int, j: int, k: int) -> GaussianRational:
        return self.table.get((i, j), {}).get(k, ZERO)

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.dim, self.parity, self.table, self.unit) == (other.dim, other.parity, other.table, other.unit)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<SuperAlgebra{label} dim={self.dim}>"

    # arithmetic on elements

    def basis(self, i: int) -> tuple:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def zero(self) -> tuple:
        return (ZERO,) * self.dim

    def basis_product(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def mul_sparse(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                row = self.table.get((i, j))
                if row:
                    _sparse_add(acc, row, a * b)
        return acc

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        xs = {i: a for i, a in enumerate(x) if a}
        ys = {j: b for j, b in enumerate(y) if b}
        out = [ZERO] * self.dim
        for k, v in self.mul_sparse(xs, ys).items():
            out[k] = v
        return tuple(out)

    def left_matrix(self, i: int) -> GMatrix:
        """Matrix of left multiplication by e_i."""
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for m in range(self.dim):
            for k, x in self.table.get((i, m), {}).items():
                rows[k][m] = x
        return GMatrix.from_rows(rows, self.dim)

    def is_even(self) -> bool:
        return not any(self.parity)

    @cached_property
    def is_commutative(self) -> bool:
        return all(self.table.get((i, j), {}) == self.table.get((j, i), {})
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def homogeneous_parity(self, v: Sequence) -> int | None:
        """Parity of a homogeneous element, 0 for zero, None if mixed."""
        ps = {self.parity[k] for k, x in enumerate(v) if x}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0


# ----------------------------------------------------------------------------
# validation


def validate_algebra(a: SuperAlgebra) -> Report:
    """Check the grading and the unit laws, then associativity."""
    report = Report()
    d = a.dim
    for (i, j), row in a.table.items():
        for k in row:
            if a.parity[k] != (a.parity[i] + a.parity[j]) % 2:
                report.add("grading", f"e_{i} e_{j} has a component on e_{k} of the wrong parity", (i, j, k))
    for k, u in enumerate(a.unit):
        if u and a.parity[k]:
            report.add("unit-parity", f"unit has an odd component e_{k}", (k,))
    unit_sparse = {k: u for k, u in enumerate(a.unit) if u}
    for j in range(d):
        ej = {j: ONE}
        if a.mul_sparse(unit_sparse, ej) != ej:
            report.add("unit", f"1 e_{j} != e_{j}", (j,))
        if a.mul_sparse(ej, unit_sparse) != ej:
            report.add("unit", f"e_{j} 1 != e_{j}", (j,))
    # (e_i e_j) e_k == e_i (e_j e_k)
    for i in range(d):
        for j in range(d):
            ij = a.table.get((i, j), {})
            for k in range(d):
                left: dict = {}
                for m, x in ij.items():
                    row = a.table.get((m, k))
                    if row:
                        _sparse_add(left, row, x)
                right: dict = {}
                for m, x in a.table.get((j, k), {}).items():
                    row = a.table.get((i, m))
                    if row:
                        _sparse_add(right, row, x)
                if left != right:
                    report.add("associativity", f"(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})", (i, j, k))
    return report


def cached_report(a: SuperAlgebra) -> Report:
    """validate_algebra(a), computed once per algebra object."""
    report = a.__dict__.get("_report")
    if report is None:
        report = Report() if a.__dict__.get("_valid") else validate_algebra(a)
        a.__dict__["_report"] = report
        a.__dict__["_valid"] = report.ok
    return report


def require_valid(a: SuperAlgebra):
    report = cached_report(a)
    if not report.ok:
        raise InvalidAlgebra(report)


def _mark_valid(a: SuperAlgebra) -> SuperAlgebra:
    # used by constructors whose output is valid whenever their input is
    a.__dict__["_valid"] = True
    return a


def regular_trace_form(a: SuperAlgebra) -> GMatrix:
    """Gram matrix of ``(x, y) -> trace(L_x L_y)`` on the ungraded algebra."""
    d = a.dim
    # L_i[k][m] = c[i][m][k]; trace(L_i L_j) = sum_{m,k} c[i][m][k] c[j][k][m]
    cols = [[(m, k, x) for m in range(d) for k, x in a.table.get((i, m), {}).items()] for i in range(d)]
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = ZERO
            for m, k, x in cols[i]:
                y = a.table.get((j, k), {}).get(m)
                if y:
                    acc = acc + x * y
            row.append(acc)
        rows.append(row)
    return GMatrix.from_rows(rows, d)


def is_semisimple(a: SuperAlgebra) -> bool:
    """Semisimple iff the regular trace form is nondegenerate (characteristic zero)."""
    require_valid(a)
    return rank(regular_trace_form(a)) == a.dim


def center(a: SuperAlgebra) -> list[tuple]:
    """Echelon-normalized basis of the ungraded center."""
    require_valid(a)
    return _center_unchecked(a)


def _center_unchecked(a: SuperAlgebra) -> list[tuple]:
    d = a.dim
    ech = SparseEchelon(d)
    # sum_i z_i (c[i][j][k] - c[j][i][k]) = 0 for all j, k
    for j in range(d):
        eqs: dict[int, dict] = {}
        for i in range(d):
            for k, x in a.table.get((i, j), {}).items():
                eqs.setdefault(k, {})
                eqs[k][i] = eqs[k].get(i, ZERO) + x
            for k, x in a.table.get((j, i), {}).items():
                eqs.setdefault(k, {})
                eqs[k][i] = eqs[k].get(i, ZERO) - x
        for k in sorted(eqs):
            ech.add(eqs[k])
    return ech.kernel()


@dataclass(frozen=True)
class Cocenter:
    """The quotient A/[A,A]: ``basis`` lists the standard vectors kept, and
    ``projection`` sends coordinates in A to coordinates in the quotient."""

    basis: tuple[int, ...]
    projection: GMatrix
    commutator_rank: int

    @property
    def dim(self) -> int:
        return len(self.basis)


def commutator_span(a: SuperAlgebra) -> SparseEchelon:
    d = a.dim
    ech = SparseEchelon(d)
    for i in range(d):
        for j in range(i + 1, d):
            v = dict(a.table.get((i, j), {}))
            _sparse_add(v, a.table.get((j, i), {}), -ONE)
            if v:
                ech.add(v)
    return ech


def cocenter(a: SuperAlgebra) -> Cocenter:
    require_valid(a)
    ech = commutator_span(a)
    free, proj = ech.quotient_projection()
    return Cocenter(tuple(free), proj, len(ech))


# ----------------------------------------------------------------------------
# constructors


def opposite(a: SuperAlgebra) -> SuperAlgebra:
    require_valid(a)
    table = {}
    for (i, j), row in a.table.items():
        sign = -1 if a.parity[i] and a.parity[j] else 1
        table[(j, i)] = {k: x * sign for k, x in row.items()}
    return _mark_valid(SuperAlgebra(a.dim, a.parity, table, a.unit, f"{a.name}^op" if a.name else ""))


def direct_sum(a: SuperAlgebra, b: SuperAlgebra) -> SuperAlgebra:
    require_valid(a)
    require_valid(b)
    n = a.dim
    table = dict(a.table)
    for (i, j), row in b.table.items():
        table[(i + n, j + n)] = {k + n: x for k, x in row.items()}
    name = f"{a.name}+{b.name}" if a.name and b.name else ""
    return _mark_valid(SuperAlgebra(n + b.dim, a.parity + b.parity, table, a.unit + b.unit, name))


def underlying_algebra(a: SuperAlgebra) -> SuperAlgebra:
    out = SuperAlgebra(a.dim, (0,) * a.dim, a.table, a.unit, f"Forget({a.name})" if a.name else "")
    if a.__dict__.get("_valid"):
        _mark_valid(out)
    return out


def parity_semidirect(a: SuperAlgebra) -> SuperAlgebra:
    """A semidirect Z/2 with basis ``e_i`` (index i) and ``e_i eps`` (index dim+i).

    ``eps`` is even with ``eps^2 = 1`` and ``eps b = (-1)^{|b|} b eps``, so
    ``(a eps^s)(b eps^t) = (-1)^{s|b|} ab eps^{s+t}``.
    """
    require_valid(a)
    d = a.dim
    table = {}
    for (i, j), row in a.table.items():
        sign = -1 if a.parity[j] else 1
        for s in (0, 1):
            for t in (0, 1):
                sg = sign if s else 1
                shift = d * ((s + t) % 2)
                table[(i + d * s, j + d * t)] = {k + shift: x * sg for k, x in row.items()}
    return _mark_valid(SuperAlgebra(2 * d, a.parity + a.parity, table, a.unit + (ZERO,) * d,
                                     f"{a.name}xZ/2" if a.name else ""))


def epsilon(a_semidirect: SuperAlgebra) -> tuple:
    """The element eps of a parity semidirect product built by parity_semidirect."""
    d = a_semidirect.dim // 2
    unit = a_semidirect.unit[:d]
    return (ZERO,) * d + unit


# catalog algebras


def clifford(n: int) -> SuperAlgebra:
    """Cliff(n): odd generators x_1..x_n with x_j^2 = 1 and x_j x_k = -x_k x_j.

    Basis index is a bitmask S standing for the ordered monomial prod_{s in S} x_s.
    """
    if n < 0 or n > 6:
        raise ValueError("Cliff(n) is provided for 0 <= n <= 6")
    d = 1 << n
    table = {}
    for s in range(d):
        for t in range(d):
            swaps = 0
            for bit in range(n):
                if t >> bit & 1:
                    swaps += bin(s >> (bit + 1)).count("1")
            table[(s, t)] = {s ^ t: ONE if swaps % 2 == 0 else -ONE}
    parity = tuple(bin(s).count("1") % 2 for s in range(d))
    unit = (ONE,) + (ZERO,) * (d - 1)
    return SuperAlgebra(d, parity, table, unit, f"Cliff({n})")


def matrix_algebra(k: int) -> SuperAlgebra:
    """Mat_k, purely even, basis E_ab at index a*k + b."""
    if k < 1 or k > 4:
        raise ValueError("Mat_k is provided for 1 <= k <= 4")
    table = {}
    for a in range(k):
        for b in range(k):
            for c in range(k):
                table[(a * k + b, b * k + c)] = {a * k + c: ONE}
    unit = tuple(ONE if a == b else ZERO for a in range(k) for b in range(k))
    return SuperAlgebra(k * k, (0,) * (k * k), table, unit, f"Mat_{k}")


def group_algebra_cyclic(n: int) -> SuperAlgebra:
    if n < 1 or n > 6:
        raise ValueError("Q(i)[Z/n] is provided for 1 <= n <= 6")
    table = {(g, h): {(g + h) % n: ONE} for g in range(n) for h in range(n)}
    unit = (ONE,) + (ZERO,) * (n - 1)
    return SuperAlgebra(n, (0,) * n, table, unit, f"Q(i)[Z/{n}]")


def quadratic_algebra(square) -> SuperAlgebra:
    """Q(i)[x]/(x^2 = square) on the basis {1, x}, purely even."""
    square = gr(square)
    table = {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE}}
    if square:
        table[(1, 1)] = {0: square}
    return SuperAlgebra(2, (0, 0), table, (ONE, ZERO), f"Q(i)[x]/(x^2={square})")


def scalars_algebra(n: int = 1) -> SuperAlgebra:
    """Q(i)^n with componentwise multiplication."""
    table = {(i, i): {i: ONE} for i in range(n)}
    return SuperAlgebra(n, (0,) * n, table, (ONE,) * n, "Q(i)" if n == 1 else f"Q(i)^{n}")


def zero_algebra() -> SuperAlgebra:
    return SuperAlgebra(0, (), {}, (), "0")


# ----------------------------------------------------------------------------
# star structures


FLAVORS = ("ordinary", "twisted")


@dataclass(frozen=True)
class StarStructure:
    """Antilinear map ``x -> matrix . conj(x)`` with a sign flavor."""

    algebra: SuperAlgebra
    matrix: GMatrix
    flavor: str = "ordinary"

    def apply(self, x: Sequence) -> tuple:
        return self.matrix.apply(tuple(c.conjugate() for c in x))

    def of_basis(self, j: int) -> tuple:
        return self.matrix.column(j)


def validate_star(s: StarStructure) -> Report:
    report = Report()
    a, m = s.algebra, s.matrix
    d = a.dim
    if s.flavor not in FLAVORS:
        report.add("flavor", f"unknown flavor {s.flavor!r}")
        return report
    if m.shape != (d, d):
        report.add("shape", f"star matrix has shape {m.shape}, expected {(d, d)}")
        return report
    if m @ m.conjugate() != GMatrix.identity(d):
        report.add("involution", "(x*)* != x")
    for k in range(d):
        for j in range(d):
            if m[k, j] and a.parity[k] != a.parity[j]:
                report.add("parity", f"e_{j}* has a component on e_{k} of the other parity", (j, k))
    cols = [{k: m[k, j] for k in range(d) if m[k, j]} for j in range(d)]

    def star_sparse(x: dict) -> dict:
        out: dict = {}
        for j, c in x.items():
            _sparse_add(out, cols[j], c.conjugate())
        return out

    for i in range(d):
        for j in range(d):
            lhs = star_sparse(a.table.get((i, j), {}))
            rhs = a.mul_sparse(cols[j], cols[i])
            if s.flavor == "ordinary" and a.parity[i] and a.parity[j]:
                rhs = {k: -x for k, x in rhs.items()}
            if lhs != rhs:
                report.add("sign-rule", f"(e_{i} e_{j})* violates the {s.flavor} rule", (i, j))
    return report


def conjugate_transpose_star(k: int) -> StarStructure:
    """Star on Mat_k sending E_ab to E_ba (with conjugated coefficients)."""
    alg = matrix_algebra(k)
    rows = [[ZERO] * (k * k) for _ in range(k * k)]
    for a in range(k):
        for b in range(k):
            rows[b * k + a][a * k + b] = ONE
    return StarStructure(alg, GMatrix.from_rows(rows, k * k), "ordinary")


def clifford_star(n: int, flavor: str) -> StarStructure:
    """Star on Cliff(n) with x_j* = i x_j (ordinary) or x_j* = x_j (twisted).

    The image of a monomial is computed from the flavor's sign rule, so the
    result satisfies the rule by construction; validate_star re-checks it.
    """
    alg = clifford(n)
    d = alg.dim
    gen_image = I if flavor == "ordinary" else ONE
    rows = [[ZERO] * d for _ in range(d)]
    for s in range(d):
        gens = [b for b in range(n) if s >> b & 1]
        # (x_{g1} ... x_{gk})* = sign * x_{gk}* ... x_{g1}*
        img = {0: ONE}
        for g in gens:
            img = alg.mul_sparse({1 << g: gen_image}, img)
        k = len(gens)
        if flavor == "ordinary":
            # each reordering of two odd factors contributes a Koszul sign
            if (k * (k - 1) // 2) % 2:
                img = {key: -v for key, v in img.items()}
        for key, v in img.items():
            rows[key][s] = v
    return StarStructure(alg, GMatrix.from_rows(rows, d), flavor)


def identity_conjugation_star(a: SuperAlgebra, flavor: str = "ordinary") -> StarStructure:
    """The star that conjugates coordinates and fixes every basis vector."""
    return StarStructure(a, GMatrix.identity(a.dim), flavor)

