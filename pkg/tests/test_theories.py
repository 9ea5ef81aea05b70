import pytest

from tft2d import catalog
from tft2d.errors import KindPayloadMismatch, UnsupportedKind, ValidationFailed
from tft2d.frobenius import FrobeniusAlgebra
from tft2d.scalars import I, ONE, ZERO, GMatrix, gr
from tft2d.superalg import (
    StarStructure, clifford, clifford_star, group_algebra_cyclic, identity_conjugation_star,
    is_semisimple, matrix_algebra, quadratic_algebra, scalars_algebra,
)
from tft2d.theories import (
    KINDS, Payload, Phi_from_trace, SpinStatTrivialization, SpinTrivialization, build_bimodule_quotient,
    build_theory, phi_from_ambient, validate_spin, validate_spinstat,
)
from tft2d.torsors import enumerate_etale_spin_classes


def split_phi(values):
    a = scalars_algebra(len(values))
    q = build_bimodule_quotient(a)
    vals = [gr(v) for v in values]
    phi = phi_from_ambient(q, lambda i, j: tuple(vals[i] if i == j == k else ZERO for k in range(len(vals))))
    return SpinTrivialization(q, phi)


class TestQuotient:
    @pytest.mark.parametrize("a, dim", [
        (scalars_algebra(1), 1), (scalars_algebra(2), 2), (scalars_algebra(3), 3),
        (matrix_algebra(2), 4), (group_algebra_cyclic(3), 3),
    ])
    def test_dimension(self, a, dim):
        q = build_bimodule_quotient(a)
        assert q.dim == dim
        assert q.dim == a.dim ** 2 - len(q.relations.pivots())

    def test_projection_kills_relations(self):
        q = build_bimodule_quotient(matrix_algebra(2))
        for row in q.relations.rows.values():
            assert all(x == 0 for x in q.project(row))

    def test_semisimple_catalog_quotients_match_dimension(self):
        for name in catalog.catalog_names():
            a = catalog.load(name).algebra
            if a.is_even() and a.dim and is_semisimple(a):
                assert build_bimodule_quotient(a).dim == a.dim, name


class TestSpin:
    def test_minus_one_is_real(self):
        assert validate_spin(split_phi([-1]), "real").ok

    def test_i_is_imaginary(self):
        assert validate_spin(split_phi([I]), "imaginary").ok

    def test_zero_not_invertible(self):
        assert "not-invertible" in validate_spin(split_phi([0]), "none").codes()

    def test_i_is_not_real(self):
        assert "reality" in validate_spin(split_phi([I]), "real").codes()

    def test_one_is_not_imaginary(self):
        assert "reality" in validate_spin(split_phi([1]), "imaginary").codes()

    def test_mat2_trace_phi_real_under_conjugate_transpose(self):
        doc = catalog.load("spin-mat2")
        q = build_bimodule_quotient(doc.algebra)
        report = validate_spin(SpinTrivialization(q, doc.payload.phi), "real", doc.payload.star)
        assert report.ok

    def test_permuting_summands_is_invalid(self):
        a = scalars_algebra(2)
        q = build_bimodule_quotient(a)
        # phi(e^0 (x) e^0) = e_1 and phi(e^1 (x) e^1) = e_0 swaps the summands
        phi = phi_from_ambient(q, lambda i, j: (ZERO, ONE) if i == j == 0 else ((ONE, ZERO) if i == j == 1 else (ZERO, ZERO)))
        report = validate_spin(SpinTrivialization(q, phi))
        assert not report.ok
        assert {"bimodule-left", "bimodule-right", "associativity"} <= report.codes()

    def test_valid_split_phis_preserve_summands(self):
        for name in ("spin-phi-plus-one", "spin-c2", "spin-c3", "twisted-spin-c2", "twisted-spin-c3"):
            doc = catalog.load(name)
            a = doc.algebra
            q = build_bimodule_quotient(a)
            spin = SpinTrivialization(q, doc.payload.phi)
            d = a.dim
            for i in range(d):
                for j in range(d):
                    image = spin.on_ambient({i * d + j: ONE})
                    support = {k for k, x in enumerate(image) if x}
                    assert support == ({i} if i == j else set()), (name, i, j)

    def test_corrupted_mat2_phi(self):
        doc = catalog.load("spin-mat2")
        q = build_bimodule_quotient(doc.algebra)
        rows = doc.payload.phi.to_rows()
        rows[0][0] = rows[0][0] + ONE
        report = validate_spin(SpinTrivialization(q, GMatrix.from_rows(rows)), "none")
        assert not report.ok
        assert report.codes() & {"bimodule-left", "bimodule-right"}

    def test_spin_requires_even_algebra(self):
        a = clifford(1)
        q = build_bimodule_quotient(a)
        report = validate_spin(SpinTrivialization(q, GMatrix.zeros(a.dim, q.dim)))
        assert "not-even" in report.codes()


class TestSpinStat:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("flavor", ["ordinary", "twisted"])
    def test_clifford_phi_from_trace(self, n, flavor):
        doc = catalog.load(f"cliff{n}-spinstats")
        a = doc.algebra
        Phi = SpinStatTrivialization(a, doc.payload.Phi)
        assert validate_spinstat(Phi, "real", clifford_star(n, flavor)).ok
        assert Phi.tau == catalog.clifford_spinstat_trace(n)

    def test_cliff1_even_trace_convention(self):
        a = clifford(1)
        Phi = SpinStatTrivialization(a, Phi_from_trace(a, (ONE, ZERO)))
        report = validate_spinstat(Phi, "real", clifford_star(1, "twisted"))
        assert report.ok

    def test_untwisted_phi_fails_with_witness(self):
        a = clifford(1)
        report = validate_spinstat(SpinStatTrivialization(a, GMatrix.identity(2)))
        assert not report.ok
        assert "bimodule-twisted-right" in report.codes()
        v = next(v for v in report.violations if v.code == "bimodule-twisted-right")
        assert a.parity[v.witness[1]] == 1

    def test_parity_mixing_rejected(self):
        a = clifford(1)
        report = validate_spinstat(SpinStatTrivialization(a, GMatrix.from_rows([[ZERO, ONE], [ONE, ZERO]])))
        assert "parity" in report.codes()

    def test_singular(self):
        report = validate_spinstat(SpinStatTrivialization(clifford(1), GMatrix.zeros(2, 2)))
        assert report.codes() == {"not-invertible"}

    def test_imaginary_trace_is_not_real(self):
        a = clifford(1)
        Phi = SpinStatTrivialization(a, Phi_from_trace(a, (I, ZERO)))
        assert "reality" in validate_spinstat(Phi, "real", clifford_star(1, "twisted")).codes()


class TestBuildTheory:
    def test_hermitian_super_cliff2(self):
        t = build_theory("hermitian-super", catalog.load("cliff2-super").payload)
        assert t.frobenius.symmetry == "symmetric-super"

    def test_spinstat_with_twisted_star_is_the_twisted_kind(self):
        a = clifford(1)
        payload = Payload(a, Phi=Phi_from_trace(a, catalog.clifford_spinstat_trace(1)),
                          star=clifford_star(1, "twisted"))
        assert build_theory("twisted-hermitian-spin-statistics", payload).kind == "twisted-hermitian-spin-statistics"
        with pytest.raises(ValidationFailed) as exc:
            build_theory("hermitian-spin-statistics", payload)
        assert "star-flavor" in exc.value.report.codes()

    def test_spin_kind_rejects_spinstat_payload(self):
        payload = catalog.load("cliff1-spinstats").payload
        with pytest.raises(KindPayloadMismatch):
            build_theory("hermitian-spin", payload)

    def test_missing_star(self):
        payload = catalog.load("oriented-spin-phi-one").payload
        with pytest.raises(KindPayloadMismatch):
            build_theory("hermitian-spin", payload)

    def test_wrong_reality_flag(self):
        payload = catalog.load("spin-phi-plus-one").payload
        payload.reality = "imaginary"
        with pytest.raises(KindPayloadMismatch):
            build_theory("hermitian-spin", payload)

    def test_non_semisimple_rejected(self):
        payload = Payload(quadratic_algebra(0), trace=(ZERO, ONE))
        with pytest.raises(ValidationFailed) as exc:
            build_theory("oriented", payload)
        assert "not-semisimple" in exc.value.report.codes()

    def test_odd_algebra_rejected_for_even_kinds(self):
        payload = Payload(clifford(2), trace=(ZERO, ZERO, ZERO, I))
        with pytest.raises(ValidationFailed) as exc:
            build_theory("oriented", payload)
        assert "not-even" in exc.value.report.codes()

    def test_twisted_real_is_label_only(self):
        with pytest.raises(UnsupportedKind):
            build_theory("twisted-real-spin-statistics", catalog.load("real-cliff1-spinstats").payload)

    def test_zero_theory(self):
        t = build_theory("hermitian-spin", catalog.load("zero").payload)
        assert t.is_zero

    def test_every_catalog_entry_builds(self):
        for name in catalog.catalog_names():
            doc = catalog.load(name)
            assert build_theory(doc.kind, doc.payload).kind == doc.kind

    def test_etale_kinds_match_torsor_classes(self):
        etale = {info.etale_class: k for k, info in KINDS.items() if info.etale_class is not None}
        classes = enumerate_etale_spin_classes()
        assert len(etale) == 8
        assert {c.coords: c.kind for c in classes} == etale
