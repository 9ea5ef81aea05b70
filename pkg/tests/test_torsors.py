import pytest
from hypothesis import given, strategies as st

from tft2d.errors import OutOfRange, UnsupportedTwoGroup
from tft2d.torsors import (
    DISTINGUISHED, PicardTwoGroup, cohomology_b2_z2, cohomology_cyclic, count_torsor_classes,
    enumerate_etale_spin_classes, group_order,
)

from oracles import brute_cohomology_order, enumerate_torsor_classes


def test_first_factor():
    assert cohomology_cyclic(1, 2, (2,)) == (2,)


def test_b2_factors():
    assert cohomology_b2_z2(2, (2,)) == (2,)
    assert cohomology_b2_z2(1, (2,)) == ()
    assert cohomology_b2_z2(0, (2, 3)) == (2, 3)


SMALL_COEFFS = [(2,), (3,), (4,), (2, 2)]
# degree-2 brute force enumerates m^((n-1)^2) cochains, so n = 4 is limited to small M
BAR_CASES = ([(k, n, c) for k in (0, 1) for n in (1, 2, 3, 4) for c in SMALL_COEFFS]
             + [(2, n, c) for n in (1, 2, 3) for c in SMALL_COEFFS]
             + [(2, 4, (2,)), (2, 4, (3,))])


@pytest.mark.parametrize("k, n, coeffs", BAR_CASES)
def test_cyclic_cohomology_matches_bar_complex(k, n, coeffs):
    assert group_order(cohomology_cyclic(k, n, coeffs)) == brute_cohomology_order(k, n, coeffs)


@given(st.integers(1, 12), st.integers(1, 12), st.integers(1, 4))
def test_periodicity(n, m, j):
    if 2 * j + 2 <= 4:
        assert cohomology_cyclic(2 * j, n, (m,)) == cohomology_cyclic(2 * j + 2, n, (m,))
    assert cohomology_cyclic(1, n, (m,)) == cohomology_cyclic(3, n, (m,))


def test_out_of_range():
    with pytest.raises(OutOfRange):
        cohomology_cyclic(5, 2, (2,))
    with pytest.raises(OutOfRange):
        cohomology_cyclic(1, 13, (2,))
    with pytest.raises(OutOfRange):
        cohomology_b2_z2(3, (2,))


def test_eight_classes():
    assert count_torsor_classes(PicardTwoGroup((2,), (2,))) == 8


@pytest.mark.parametrize("pi0, pi1", [((2,), (2,)), ((2,), ()), ((), (2,)), ((4,), (2,)), ((3,), (3,)), ((), ())])
def test_count_matches_enumeration(pi0, pi1):
    assert count_torsor_classes(PicardTwoGroup(pi0, pi1)) == enumerate_torsor_classes(pi0, pi1)


def test_specific_counts():
    assert count_torsor_classes(PicardTwoGroup((2,), ())) == 2
    assert count_torsor_classes(PicardTwoGroup((), (2,))) == 4
    assert count_torsor_classes(PicardTwoGroup((3,), (3,))) == 1


def test_nontrivial_k_invariant():
    with pytest.raises(UnsupportedTwoGroup):
        count_torsor_classes(PicardTwoGroup((2,), (2,), trivial_k_invariant=False))


def test_enumeration():
    classes = enumerate_etale_spin_classes()
    assert len(classes) == 8 == len({c.coords for c in classes})
    assert classes[0].coords == (0, 0, 0) and classes[0].name == "oriented-spin"
    assert next(c for c in classes if c.coords == DISTINGUISHED).name == "hermitian-spin-statistics"
