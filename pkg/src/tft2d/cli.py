"""Command-line interface.

Exit codes::

    0  success, including positive or vacuous verdicts
    1  failed validation or a not-positive verdict
    2  unreadable or malformed input
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import catalog
from .errors import (
    InputSyntaxError, KindMismatch, KindPayloadMismatch, SchemaError, ScalarFormatError,
    Tft2dError, UnsupportedKind, UntaggedReality, ValidationFailed,
)
from .evaluation import (
    ROUTES, _integrated, circle_state_space, genus_is_restricted, is_reflection_positive,
    partition_genus,
)
from .fileformat import Document, parse_document, print_document
from .frobenius import FrobeniusAlgebra, validate_frobenius
from .scalars import format_matrix, format_scalar, format_vector
from .superalg import _center_unchecked, cached_report, is_semisimple, validate_star
from .theories import build_theory
from .torsors import DISTINGUISHED, PicardTwoGroup, count_torsor_classes, enumerate_etale_spin_classes

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(source: str) -> Document:
    if source.startswith("catalog:"):
        try:
            return catalog.load(source[len("catalog:"):])
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{source} is not UTF-8") from None
    return parse_document(text)


def _emit(fields: list[tuple[str, str]], fmt: str, out) -> None:
    if fmt == "machine":
        out.write(" ".join(f"{k}={v}" for k, v in fields) + "\n")
    else:
        width = max((len(k) for k, _ in fields), default=0)
        for k, v in fields:
            out.write(f"{k.ljust(width)} : {v}\n")


def _theory(doc: Document):
    if doc.kind is None:
        raise InputError("this command needs a theory file with a 'kind' field")
    return build_theory(doc.kind, doc.payload)


# ----------------------------------------------------------------------------
# verbs


def cmd_validate(doc: Document, args, out) -> int:
    fields = [("input", doc.name or args.input)]
    a = doc.algebra
    report = cached_report(a)
    fields.append(("dim", str(a.dim)))
    if not report.ok:
        fields += [("valid", "no"), ("report", str(report))]
        _emit(fields, args.format, out)
        return EXIT_FAIL
    if doc.kind is None:
        problems = []
        fields.append(("semisimple", "yes" if is_semisimple(a) else "no"))
        if doc.payload.trace is not None:
            frob = FrobeniusAlgebra(a, doc.payload.trace, doc.payload.symmetry or "symmetric-super")
            fr = validate_frobenius(frob)
            if not fr.ok:
                problems.append(str(fr))
        if doc.payload.star is not None:
            sr = validate_star(doc.payload.star)
            if not sr.ok:
                problems.append(str(sr))
        fields.append(("valid", "no" if problems else "yes"))
        if problems:
            fields.append(("report", "; ".join(problems)))
        _emit(fields, args.format, out)
        return EXIT_FAIL if problems else EXIT_OK
    try:
        theory = _theory(doc)
    except ValidationFailed as exc:
        fields += [("kind", doc.kind), ("valid", "no"), ("report", str(exc.report))]
        _emit(fields, args.format, out)
        return EXIT_FAIL
    fields += [("kind", theory.kind), ("valid", "yes")]
    if theory.spin is not None:
        fields.append(("quotient_dim", str(theory.spin.quotient.dim)))
    _emit(fields, args.format, out)
    return EXIT_OK


def cmd_integrate(doc: Document, args, out) -> int:
    theory = _theory(doc)
    fields = [("kind", theory.kind)]
    if theory.is_zero:
        fields += [("integrated_dim", "0"), ("note", "zero-theory")]
        _emit(fields, args.format, out)
        return EXIT_OK
    integ, stage = _integrated(theory)
    b = integ.frobenius.algebra
    fields += [
        ("stage", stage),
        ("integrated_dim", str(b.dim)),
        ("semisimple", "yes" if is_semisimple(b) else "no"),
        ("center_dim", str(len(_center_unchecked(b)))),
        ("trace", format_vector(integ.frobenius.trace)),
        ("star", "yes" if integ.star is not None else "no"),
    ]
    _emit(fields, args.format, out)
    return EXIT_OK


def cmd_hilbert(doc: Document, args, out) -> int:
    theory = _theory(doc)
    fields = [("kind", theory.kind)]
    if theory.is_zero:
        fields += [("dim", "0"), ("gram", "[]")]
        _emit(fields, args.format, out)
        return EXIT_OK
    integ, _ = _integrated(theory)
    h = circle_state_space(integ.frobenius, integ.star)
    fields += [("dim", str(h.dim)), ("tag", h.tag), ("gram", format_matrix(h.gram))]
    _emit(fields, args.format, out)
    return EXIT_OK


def cmd_partition(doc: Document, args, out) -> int:
    if doc.kind is None:
        if doc.payload.trace is None:
            raise InputError("partition needs a trace or a theory kind")
        frob = FrobeniusAlgebra(doc.algebra, doc.payload.trace, doc.payload.symmetry or "symmetric-super")
        fields = []
    else:
        theory = _theory(doc)
        fields = [("kind", theory.kind)]
        if theory.is_zero:
            fields += [("genus", str(args.genus)), ("value", "0"), ("note", "zero-theory")]
            _emit(fields, args.format, out)
            return EXIT_OK
        frob = _integrated(theory)[0].frobenius
    value = partition_genus(frob, args.genus)
    fields += [("genus", str(args.genus)), ("value", format_scalar(value)),
               ("restricted", "yes" if genus_is_restricted(frob) else "no")]
    _emit(fields, args.format, out)
    return EXIT_OK


def cmd_check_rp(doc: Document, args, out) -> int:
    theory = _theory(doc)
    v = is_reflection_positive(theory, args.route)
    fields = [("kind", v.kind), ("route", v.route), ("verdict", v.verdict)]
    if v.witness is not None:
        fields.append(("witness", format_vector(v.witness)))
    fields.append(("gram", format_matrix(v.gram)))
    fields.append(("real_gram", format_matrix(v.real_gram)))
    if v.notes:
        fields.append(("note", ",".join(v.notes)))
    _emit(fields, args.format, out)
    return EXIT_OK if v.positive else EXIT_FAIL


def cmd_classify(args, out) -> int:
    classes = enumerate_etale_spin_classes()
    for c in classes:
        a, b, m = c.coords
        fields = [("class", f"({a},{b},{m})"), ("name", c.name), ("kind", c.kind)]
        if c.coords == DISTINGUISHED:
            fields.append(("distinguished", "yes"))
        if args.format == "machine":
            _emit(fields, "machine", out)
        else:
            out.write(" ".join(f"{k}={v}" for k, v in fields) + "\n")
    total = count_torsor_classes(PicardTwoGroup((2,), (2,)))
    if total != len(classes):
        sys.stderr.write(f"torsor count {total} disagrees with {len(classes)} listed classes\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    if args.name is None:
        for name in catalog.catalog_names():
            entry = catalog.CATALOG[name]
            if args.format == "machine":
                out.write(f"name={name}\n")
            else:
                out.write(f"{name:30s} {entry.description}\n")
        return EXIT_OK
    try:
        doc = catalog.load(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    out.write(print_document(doc))
    return EXIT_OK


VERBS = {
    "validate": cmd_validate,
    "integrate": cmd_integrate,
    "hilbert": cmd_hilbert,
    "partition": cmd_partition,
    "check-rp": cmd_check_rp,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tft2d", description="Exact 2d TQFT classification data and reflection positivity.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        p = sub.add_parser(verb, parents=[common])
        p.add_argument("input", help="path to a description file, or catalog:NAME")
        if verb == "partition":
            p.add_argument("--genus", type=int, required=True)
        if verb == "check-rp":
            p.add_argument("--route", choices=ROUTES, default="auto")
    sub.add_parser("classify-structures", parents=[common])
    p = sub.add_parser("catalog", parents=[common])
    p.add_argument("name", nargs="?")
    return parser


def main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "genus", 0) is not None and getattr(args, "genus", 0) < 0:
        err.write("error: --genus must be nonnegative\n")
        return EXIT_INPUT
    try:
        if args.verb == "classify-structures":
            return cmd_classify(args, out)
        if args.verb == "catalog":
            return cmd_catalog(args, out)
        doc = _load(args.input)
        return VERBS[args.verb](doc, args, out)
    except (InputError, InputSyntaxError, SchemaError, ScalarFormatError) as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (KindPayloadMismatch, UnsupportedKind, UntaggedReality, KindMismatch) as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except ValidationFailed as exc:
        err.write(f"validation failed: {exc.report}\n")
        return EXIT_FAIL
    except Tft2dError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
