"""Counting the étale-locally-spin structure classes by group cohomology.

Finite abelian groups are lists of invariant factors, e.g. ``[2]`` for Z/2
and ``[]`` for the trivial group. Cohomology of B(Z/n) with trivial
coefficients M comes from the periodic resolution

    ... -> Z[Z/n] --N--> Z[Z/n] --(t-1)--> Z[Z/n] -> Z

whose cochain complex with trivial action is M --0--> M --n--> M --0--> M ...
so H^0 = M, H^odd = M[n] (the n-torsion) and H^even>0 = M/nM.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, prod

from .errors import OutOfRange, UnsupportedTwoGroup


def normalize_group(factors) -> tuple[int, ...]:
    """Drop trivial factors; the order of the rest is kept."""
    out = tuple(int(m) for m in factors if int(m) != 1)
    if any(m < 1 for m in out):
        raise ValueError("invariant factors must be positive integers")
    return out


def group_order(factors) -> int:
    return prod(normalize_group(factors)) if factors else 1


def _differential(n: int, j: int) -> int:
    """Multiplier of d^j: C^j -> C^{j+1} in the cochain complex of B(Z/n)."""
    return n if j >= 0 and j % 2 == 1 else 0


def cohomology_cyclic(k: int, n: int, coeffs) -> tuple[int, ...]:
    """H^k(B(Z/n); M) for trivial coefficients M, as invariant factors.

    Computed by enumerating kernel and image of the cochain maps on each
    cyclic factor of M.
    """
    if not (0 <= k <= 4) or not (1 <= n <= 12):
        raise OutOfRange(f"cohomology_cyclic supports 0 <= k <= 4 and 1 <= n <= 12, got k={k}, n={n}")
    out = []
    for m in normalize_group(coeffs):
        into, out_of = _differential(n, k - 1), _differential(n, k)
        kernel = [x for x in range(m) if (out_of * x) % m == 0]
        image = {(into * x) % m for x in range(m)}
        order = len(kernel) // len(image)
        if order > 1:
            out.append(order)
    return tuple(out)


def cohomology_b2_z2(k: int, coeffs) -> tuple[int, ...]:
    """H^k(B^2(Z/2); M) for k <= 2: M, 0, and Hom(Z/2, M) = M[2]."""
    if k == 0:
        return normalize_group(coeffs)
    if k == 1:
        return ()
    if k == 2:
        return tuple(g for g in (gcd(2, m) for m in normalize_group(coeffs)) if g > 1)
    raise OutOfRange("the table for B^2(Z/2) covers degrees 0, 1, 2")


@dataclass(frozen=True)
class PicardTwoGroup:
    pi0: tuple = ()
    pi1: tuple = ()
    trivial_k_invariant: bool = True


def count_torsor_classes(g: PicardTwoGroup) -> int:
    """|H^1(BZ/2; pi0)| |H^2(BZ/2; pi1)| |H^1(B^2Z/2; pi0)| |H^2(B^2Z/2; pi1)|."""
    if not g.trivial_k_invariant:
        raise UnsupportedTwoGroup("only split 2-groups with trivial k-invariant are supported")
    factors = (
        cohomology_cyclic(1, 2, g.pi0),
        cohomology_cyclic(2, 2, g.pi1),
        cohomology_b2_z2(1, g.pi0),
        cohomology_b2_z2(2, g.pi1),
    )
    return prod(group_order(f) for f in factors)


@dataclass(frozen=True)
class EtaleSpinClass:
    coords: tuple[int, int, int]
    name: str
    kind: str


# coordinates: (conjugation <-> orientation reversal, (-1)^f <-> twist, mixing class)
_CLASS_NAMES = {
    (0, 0, 0): "oriented-spin",
    (0, 0, 1): "twisted-oriented-spin",
    (1, 0, 0): "hermitian-spin",
    (1, 0, 1): "twisted-hermitian-spin",
    (0, 1, 0): "real-spin-statistics",
    (0, 1, 1): "twisted-real-spin-statistics",
    (1, 1, 0): "hermitian-spin-statistics",
    (1, 1, 1): "twisted-hermitian-spin-statistics",
}

DISTINGUISHED = (1, 1, 0)


def enumerate_etale_spin_classes() -> list[EtaleSpinClass]:
    return [EtaleSpinClass(c, _CLASS_NAMES[c], _CLASS_NAMES[c]) for c in product((0, 1), repeat=3)]
