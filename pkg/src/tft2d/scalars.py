"""Exact arithmetic over the Gaussian rationals Q(i) and dense linear algebra.

Scalars are pairs of :class:`fractions.Fraction` and matrices are row-major
tuples of scalars. Elimination always picks the lowest-index nonzero pivot
so results are reproducible bit for bit.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import KindMismatch, NotHermitian, ScalarFormatError


class GaussianRational:
    """A number ``re + im*i`` with rational ``re`` and ``im``.

    Instances are treated as immutable. Equality is structural, and compares
    equal to ints/Fractions when the imaginary part vanishes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Rational | int | str = 0, im: Rational | int | str = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational._raw(Fraction(x), _F0)
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    # arithmetic

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, _F0)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational._raw(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


_F0 = Fraction(0)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

G = GaussianRational


def gr(x) -> GaussianRational:
    """Coerce ints and Fractions, or parse a canonical scalar string."""
    if isinstance(x, str):
        return parse_scalar(x)
    return GaussianRational.coerce(x)


_RAT = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^(?P<re>{_RAT})(?:\+(?P<im>{_RAT})\*i)?$")


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``a``, ``a/b``, or ``a/b+c/d*i`` (no spaces; ``c`` may carry a sign)."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ScalarFormatError(text)
    try:
        re_part = Fraction(m.group("re"))
        im_part = Fraction(m.group("im")) if m.group("im") is not None else _F0
    except ZeroDivisionError:
        raise ScalarFormatError(text) from None
    return GaussianRational._raw(re_part, im_part)


def format_scalar(z: GaussianRational) -> str:
    """Canonical rendering: ``a/b`` when real, otherwise ``a/b+c/d*i``."""
    if not z.im:
        return str(z.re)
    return f"{z.re}+{z.im}*i"


# ----------------------------------------------------------------------------
# dense matrices


class GMatrix:
    """Dense matrix over Q(i), stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(gr(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "GMatrix":
        obj = object.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj.entries = entries
        return obj

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "GMatrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "GMatrix":
        columns = list(columns)
        return cls.from_rows([[columns[j][i] for j in range(len(columns))] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GMatrix":
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "GMatrix":
        return cls._raw(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "GMatrix":
        n = len(values)
        vals = [gr(v) for v in values]
        return cls._raw(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> GaussianRational:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"GMatrix({format_matrix(self)})"

    def __add__(self, other: "GMatrix") -> "GMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return GMatrix._raw(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "GMatrix") -> "GMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return GMatrix._raw(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "GMatrix":
        return GMatrix._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "GMatrix":
        c = gr(c)
        return GMatrix._raw(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            row = a[i * m:(i + 1) * m]
            acc = [ZERO] * p
            for k, x in enumerate(row):
                if not x:
                    continue
                base = k * p
                for j in range(p):
                    y = b[base + j]
                    if y:
                        acc[j] = acc[j] + x * y
            out.extend(acc)
        return GMatrix._raw(n, p, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        support = [(j, y) for j, y in enumerate(v) if y]
        out = []
        e, c = self.entries, self.cols
        for i in range(self.rows):
            acc = ZERO
            base = i * c
            for j, y in support:
                x = e[base + j]
                if x:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "GMatrix":
        return GMatrix._raw(self.cols, self.rows,
                            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def conjugate(self) -> "GMatrix":
        return GMatrix._raw(self.rows, self.cols, tuple(a.conjugate() for a in self.entries))

    def conjugate_transpose(self) -> "GMatrix":
        return self.transpose().conjugate()

    H = property(conjugate_transpose)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.conjugate_transpose()

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def is_real(self) -> bool:
        return all(not a.im for a in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "GMatrix":
        return GMatrix._raw(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def leading(self, k: int) -> "GMatrix":
        return self.submatrix(range(k), range(k))

    def kron(self, other: "GMatrix") -> "GMatrix":
        r, c = self.rows * other.rows, self.cols * other.cols
        out = []
        for i1 in range(self.rows):
            for i2 in range(other.rows):
                for j1 in range(self.cols):
                    a = self[i1, j1]
                    for j2 in range(other.cols):
                        out.append(a * other[i2, j2])
        return GMatrix._raw(r, c, tuple(out))


def block_matrix(blocks: Sequence[Sequence[GMatrix]]) -> GMatrix:
    """Assemble a matrix from a grid of blocks with compatible shapes."""
    rows = []
    for brow in blocks:
        height = brow[0].rows
        for i in range(height):
            row = []
            for b in brow:
                if b.rows != height:
                    raise ValueError("block heights differ")
                row.extend(b.row(i))
            rows.append(row)
    cols = len(rows[0]) if rows else 0
    return GMatrix._raw(len(rows), cols, tuple(x for r in rows for x in r))


def format_vector(v: Sequence[GaussianRational]) -> str:
    return "[" + ",".join(format_scalar(x) for x in v) + "]"


def format_matrix(m: GMatrix) -> str:
    return "[" + ",".join(format_vector(m.row(i)) for i in range(m.rows)) + "]"


# ----------------------------------------------------------------------------
# elimination


def rref(m: GMatrix) -> tuple[GMatrix, list[int]]:
    """Reduced row echelon form and pivot columns (lowest-index pivots)."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r >= len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else ZERO for x in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return GMatrix._raw(m.rows, m.cols, tuple(x for row in rows for x in row)), pivots


def rank(m: GMatrix) -> int:
    return len(rref(m)[1])


def _normalize_leading(v: list[GaussianRational]) -> tuple:
    lead = next((x for x in v if x), None)
    if lead is None or lead == ONE:
        return tuple(v)
    inv = lead.inverse()
    return tuple(x * inv for x in v)


def kernel_basis(m: GMatrix) -> list[tuple]:
    """Basis of the right null space of ``m``.

    One vector per free column in increasing order; each vector is scaled so
    its first nonzero entry is 1.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            x = reduced[r, f]
            if x:
                v[p] = -x
        basis.append(_normalize_leading(v))
    return basis


def determinant(m: GMatrix) -> GaussianRational:
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [list(m.row(i)) for i in range(n)]
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        pivot = a[c][c]
        det = det * pivot
        inv = pivot.inverse()
        for i in range(c + 1, n):
            f = a[i][c]
            if f:
                f = f * inv
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[c])]
    return det


def inverse(m: GMatrix) -> GMatrix:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = GMatrix.from_rows([list(m.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)], 2 * n)
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return reduced.submatrix(range(n), range(n, 2 * n))


def solve(m: GMatrix, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` (free variables zero), or None."""
    aug = GMatrix.from_rows([list(m.row(i)) + [gr(b[i])] for i in range(m.rows)], m.cols + 1)
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced[r, m.cols]
    return tuple(x)


class SparseEchelon:
    """Incrementally maintained echelon basis of a span of sparse vectors.

    Vectors are dicts ``{index: GaussianRational}``. Each stored row is
    normalized with a leading 1 at its pivot and reduced against every other
    row, so membership tests and projections are single passes.
    """

    def __init__(self, length: int):
        self.length = length
        self.rows: dict[int, dict[int, GaussianRational]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = {k: x for k, x in vec.items() if x}
        for p in sorted(set(v) & set(self.rows)):
            f = v.get(p)
            if not f:
                continue
            for k, y in self.rows[p].items():
                z = v.get(k, ZERO) - f * y
                if z:
                    v[k] = z
                else:
                    v.pop(k, None)
        return v

    def _reduce_full(self, vec: dict) -> dict:
        # rows are fully reduced, so a pivot can only reappear via another pivot's row
        v = {k: x for k, x in vec.items() if x}
        while True:
            hits = [p for p in v if p in self.rows]
            if not hits:
                return v
            p = min(hits)
            f = v[p]
            for k, y in self.rows[p].items():
                z = v.get(k, ZERO) - f * y
                if z:
                    v[k] = z
                else:
                    v.pop(k, None)

    def add(self, vec: dict) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        v = self._reduce_full(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        v = {k: x * inv for k, x in v.items()}
        for q, row in self.rows.items():
            f = row.get(p)
            if f:
                for k, y in v.items():
                    z = row.get(k, ZERO) - f * y
                    if z:
                        row[k] = z
                    else:
                        row.pop(k, None)
        self.rows[p] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce_full(vec)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def free(self) -> list[int]:
        piv = self.rows
        return [k for k in range(self.length) if k not in piv]

    def quotient_projection(self) -> tuple[list[int], GMatrix]:
        """Basis of ``F^length / span`` given by the non-pivot coordinates.

        Returns the non-pivot indices and the projection matrix sending a
        vector to its coordinates in that quotient basis.
        """
        free = self.free()
        pos = {k: n for n, k in enumerate(free)}
        out = [[ZERO] * self.length for _ in free]
        for k in free:
            out[pos[k]][k] = ONE
        for p, row in self.rows.items():
            for k, y in row.items():
                if k != p:
                    out[pos[k]][p] = -y
        return free, GMatrix.from_rows(out, self.length)

    def kernel(self) -> list[tuple]:
        """Null space of the matrix whose rows span this echelon (see kernel_basis)."""
        basis = []
        for f in self.free():
            v = [ZERO] * self.length
            v[f] = ONE
            for p, row in self.rows.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            basis.append(_normalize_leading(v))
        return basis


def dense_to_sparse(v: Sequence) -> dict:
    return {k: x for k, x in enumerate(v) if x}


def sparse_to_dense(v: dict, length: int) -> tuple:
    out = [ZERO] * length
    for k, x in v.items():
        out[k] = x
    return tuple(out)


# ----------------------------------------------------------------------------
# forms


def is_positive_definite_hermitian(g: GMatrix) -> bool:
    """Sylvester's criterion: every leading principal minor is a positive rational.

    The empty form is positive-definite. Degenerate forms are not.
    """
    if not g.is_hermitian():
        raise NotHermitian(format_matrix(g))
    for k in range(1, g.rows + 1):
        minor = determinant(g.leading(k))
        if minor.im:
            raise NotHermitian("leading minor with nonzero imaginary part")
        if minor.re <= 0:
            return False
    return True


def realify_form(g: GMatrix, kind: str) -> GMatrix:
    """Gram matrix of ``2 Re`` of a form on the underlying real space.

    The real basis is ``e_1..e_n, i e_1..i e_n``. ``kind`` is ``"hermitian"``
    (antilinear in the first slot) or ``"complex-symmetric"`` (bilinear).
    """
    if not g.is_square():
        raise KindMismatch("form must be square")
    n = g.rows
    re_part = GMatrix._raw(n, n, tuple(G._raw(2 * x.re, _F0) for x in g.entries))
    im_part = GMatrix._raw(n, n, tuple(G._raw(2 * x.im, _F0) for x in g.entries))
    if kind == "hermitian":
        if not g.is_hermitian():
            raise KindMismatch("form is not Hermitian")
        return block_matrix([[re_part, -im_part], [im_part, re_part]]) if n else GMatrix.zeros(0, 0)
    if kind == "complex-symmetric":
        if not g.is_symmetric():
            raise KindMismatch("form is not complex-symmetric")
        return block_matrix([[re_part, -im_part], [-im_part, -re_part]]) if n else GMatrix.zeros(0, 0)
    raise KindMismatch(f"unknown form kind {kind!r}")


def hermitian_part(g: GMatrix) -> GMatrix:
    """(g + g^H) / 2."""
    return (g + g.conjugate_transpose()).scale(Fraction(1, 2))


def signature(g: GMatrix) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a Hermitian form, by congruence."""
    if not g.is_hermitian():
        raise NotHermitian(format_matrix(g))
    a = [list(g.row(i)) for i in range(g.rows)]
    n = g.rows
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            # all remaining diagonal entries vanish: use an off-diagonal entry
            pair = next(((i, j) for i in active for j in active if j != i and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + c e_j so the new diagonal entry 2 Re(c a_ij) is nonzero
            c = a[i][j].conjugate()
            for t in range(n):
                a[i][t] = a[i][t] + c.conjugate() * a[j][t]
            for t in range(n):
                a[t][i] = a[t][i] + c * a[t][j]
            k = i
        d = a[k][k]
        inv = d.inverse()
        for i in active:
            if i == k:
                continue
            f = a[i][k] * inv
            if f:
                for t in range(n):
                    a[i][t] = a[i][t] - f * a[k][t]
                fc = f.conjugate()
                for t in range(n):
                    a[t][i] = a[t][i] - fc * a[t][k]
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
    return pos, neg, n - pos - neg
