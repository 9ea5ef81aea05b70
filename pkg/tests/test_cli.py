import io
import json
import subprocess
import sys

import pytest

from tft2d import catalog
from tft2d.cli import main
from tft2d.errors import InputSyntaxError, ScalarFormatError, SchemaError
from tft2d.fileformat import documents_equal, parse_document, parse_theory_file, print_document

CLIFF1 = {
    "dim": 2, "parity": [0, 1],
    "structure": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]],
    "unit": ["1", "0"],
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, obj, name="input.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj), encoding="utf-8")
    return str(path)


class TestFileFormat:
    def test_cliff2_super_file(self):
        text = print_document(catalog.load("cliff2-super"))
        spec = parse_theory_file(text)
        assert spec.kind == "hermitian-super" and spec.frobenius is not None

    def test_parity_length_mismatch(self):
        bad = dict(CLIFF1, parity=[0, 1, 0])
        with pytest.raises(SchemaError) as exc:
            parse_document(json.dumps(bad))
        assert exc.value.field == "parity"

    def test_unknown_key(self):
        with pytest.raises(SchemaError) as exc:
            parse_document(json.dumps(dict(CLIFF1, colour="red")))
        assert exc.value.field == "colour"

    def test_duplicate_key(self):
        text = json.dumps(CLIFF1)[:-1] + ', "dim": 2}'
        with pytest.raises(SchemaError):
            parse_document(text)

    def test_float_rejected(self):
        with pytest.raises(SchemaError):
            parse_document(json.dumps(CLIFF1).replace('"dim": 2', '"dim": 2.0'))

    def test_syntax_error_location(self):
        with pytest.raises(InputSyntaxError) as exc:
            parse_document('{\n  "dim": 1,\n  "parity": [0,,]\n}')
        assert exc.value.line == 3 and exc.value.col > 1

    def test_bad_scalar(self):
        with pytest.raises(ScalarFormatError):
            parse_document(json.dumps(dict(CLIFF1, unit=["1.0", "0"])))

    def test_scalar_grammar_example(self):
        doc = parse_document(json.dumps(dict(CLIFF1, trace=["1/2+-1/3*i", "0"])))
        assert str(doc.payload.trace[0].im) == "-1/3"

    def test_missing_field(self):
        with pytest.raises(SchemaError) as exc:
            parse_document(json.dumps({k: v for k, v in CLIFF1.items() if k != "unit"}))
        assert exc.value.field == "unit"

    def test_theory_needs_kind(self):
        with pytest.raises(SchemaError):
            parse_theory_file(json.dumps(CLIFF1))

    @pytest.mark.parametrize("name", catalog.catalog_names())
    def test_print_parse_roundtrip(self, name):
        doc = catalog.load(name)
        text = print_document(doc)
        again = parse_document(text)
        assert documents_equal(doc, again)
        assert print_document(again) == text


class TestCommands:
    def test_check_rp_cliff1(self):
        code, out, _ = run("check-rp", "catalog:cliff1-spinstats", "--format", "machine")
        assert code == 0
        assert "verdict=positive gram=[[2]]" in out
        assert out.count("\n") == 1

    def test_check_rp_spin_minus_one(self):
        code, out, _ = run("check-rp", "catalog:spin-phi-minus-one", "--format", "machine")
        assert code == 1
        assert "verdict=not-positive witness=" in out

    def test_check_rp_zero(self):
        code, out, _ = run("check-rp", "catalog:zero", "--format", "machine")
        assert code == 0 and "verdict=vacuous-zero" in out

    def test_classify(self):
        code, out, _ = run("classify-structures")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 8
        assert lines[0] == "class=(0,0,0) name=oriented-spin kind=oriented-spin"

    def test_catalog_listing_and_entry(self):
        code, out, _ = run("catalog", "--format", "machine")
        assert code == 0 and len(out.splitlines()) == len(catalog.catalog_names())
        code, out, _ = run("catalog", "cliff1-spinstats")
        assert code == 0 and parse_document(out).kind == "hermitian-spin-statistics"

    def test_validate_catalog_and_file(self, tmp_path):
        assert run("validate", "catalog:spin-mat2")[0] == 0
        code, out, _ = run("validate", write(tmp_path, CLIFF1), "--format", "machine")
        assert code == 0 and "valid=yes" in out

    def test_validate_failure(self, tmp_path):
        broken = dict(CLIFF1, structure=[[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "1"]]])
        code, out, _ = run("validate", write(tmp_path, broken), "--format", "machine")
        assert code == 1 and "valid=no" in out and "grading" in out

    def test_validate_theory_failure(self, tmp_path):
        doc = json.loads(print_document(catalog.load("spin-phi-plus-one")))
        doc["phi"] = [["0"]]
        code, out, _ = run("validate", write(tmp_path, doc), "--format", "machine")
        assert code == 1 and "not-invertible" in out

    def test_integrate(self):
        code, out, _ = run("integrate", "catalog:cliff3-spinstats", "--format", "machine")
        assert code == 0
        assert "integrated_dim=16" in out and "semisimple=yes" in out and "center_dim=1" in out

    def test_hilbert(self):
        code, out, _ = run("hilbert", "catalog:cliff2-spinstats", "--format", "machine")
        assert code == 0 and "dim=2" in out and "gram=[[2,0],[0,2]]" in out

    def test_partition(self):
        code, out, _ = run("partition", "catalog:oriented-quadratic", "--genus", "1", "--format", "machine")
        assert code == 0 and "value=2" in out

    def test_route_flag(self):
        code, out, _ = run("check-rp", "catalog:cliff1-spinstats", "--route", "oriented", "--format", "machine")
        assert code == 1 and "route=spinstats/or+oriented" in out

    @pytest.mark.parametrize("argv", [
        ("check-rp", "catalog:cliff1-spinstats", "--format", "machine"),
        ("check-rp", "catalog:spin-c3", "--format", "machine"),
        ("hilbert", "catalog:hermitian-mat2", "--format", "machine"),
        ("classify-structures", "--format", "machine"),
        ("partition", "catalog:complex-z4", "--genus", "3", "--format", "machine"),
    ])
    def test_machine_output_is_deterministic(self, argv):
        first = run(*argv)
        assert run(*argv) == first


class TestExitCodes:
    def test_missing_file(self, tmp_path):
        code, _, err = run("validate", str(tmp_path / "absent.json"))
        assert code == 2 and "input error" in err

    def test_syntax_error(self, tmp_path):
        code, _, err = run("validate", write(tmp_path, "{ nope"))
        assert code == 2 and "line 1" in err

    def test_schema_error(self, tmp_path):
        code, _, _ = run("validate", write(tmp_path, dict(CLIFF1, parity=[0])))
        assert code == 2

    def test_unknown_catalog_entry(self):
        assert run("check-rp", "catalog:nonesuch")[0] == 2

    def test_missing_genus(self):
        assert run("partition", "catalog:oriented-c1")[0] == 2

    def test_negative_genus(self):
        assert run("partition", "catalog:oriented-c1", "--genus", "-1")[0] == 2

    def test_bad_route(self):
        assert run("check-rp", "catalog:oriented-c1", "--route", "sideways")[0] == 2

    def test_no_kind_for_theory_verb(self, tmp_path):
        assert run("check-rp", write(tmp_path, CLIFF1))[0] == 2

    def test_payload_mismatch(self, tmp_path):
        doc = json.loads(print_document(catalog.load("cliff1-spinstats")))
        doc["kind"] = "hermitian-spin"
        assert run("check-rp", write(tmp_path, doc))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tft2d", "check-rp", "catalog:cliff1-spinstats",
                           "--format", "machine"], capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert "verdict=positive gram=[[2]]" in proc.stdout
