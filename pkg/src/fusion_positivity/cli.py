"""Command-line front end.

Verbs: cw, fuse, rank, degree, class, intersect, trivial, scan, certificate,
lambda, pairing, verify.  Labels are written M[i,j]@k (sl2 parafermion),
S[a1,...,ar]@r,k (residue tuple), A[lam]@k (affine sl2), Z[a]@m (cyclic).
Exit codes: 0 computed / all checks passed, 1 a positivity or verification
check found a counterexample, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv as _csv
import os
import io
import json
import sys
import time
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from .errors import FusionError, LabelDomainError
from .fusion_core import (
    FCurve,
    FusionDatum,
    degree_04,
    divisor_class,
    expand_fusion,
    fcurve_intersect,
    is_trivial,
    lambda_threshold,
    positivity_certificate,
    rank_n,
    scan_f_positivity,
)
from . import affine_instances as affine
from . import parafermion_sl2 as sl2
from . import parafermion_slr as slr
from .suites import SUITES, run_suite


def parse_label(text: str):
    text = text.strip()
    if text.startswith("M["):
        return sl2.parse_sl2_label(text)
    if text.startswith("S["):
        return slr.parse_slr_label(text)
    if text.startswith("A["):
        return affine.parse_affine_label(text)
    if text.startswith("Z["):
        return affine.parse_cyclic_label(text)
    raise LabelDomainError(f"unrecognized label syntax {text!r}")


def datum_for_labels(labels: Sequence[Any]) -> FusionDatum:
    first = labels[0]
    if isinstance(first, sl2.Sl2Label):
        if any(not isinstance(m, sl2.Sl2Label) or m.k != first.k for m in labels):
            raise LabelDomainError("labels mix algebras or levels")
        return sl2.datum_sl2(first.k)
    if isinstance(first, slr.TupleLabel):
        if any(not isinstance(m, slr.TupleLabel) or (m.k, m.r) != (first.k, first.r) for m in labels):
            raise LabelDomainError("labels mix algebras or parameters")
        return slr.datum_slr(first.r, first.k)
    if isinstance(first, affine.AffineSl2Label):
        if any(not isinstance(m, affine.AffineSl2Label) or m.k != first.k for m in labels):
            raise LabelDomainError("labels mix algebras or levels")
        return affine.datum_affine_sl2(first.k)
    if isinstance(first, affine.CyclicLabel):
        if any(not isinstance(m, affine.CyclicLabel) or m.m != first.m for m in labels):
            raise LabelDomainError("labels mix algebras or orders")
        return affine.datum_cyclic(first.m)
    raise LabelDomainError(f"no datum for label {first!r}")


def _check_context(args, labels: Sequence[Any]) -> None:
    """Cross-check optional --algebra/--level/--rank flags against the labels."""
    first = labels[0]
    algebra = getattr(args, "algebra", None)
    kinds = {
        "sl2": sl2.Sl2Label,
        "slr": slr.TupleLabel,
        "affine": affine.AffineSl2Label,
        "cyclic": affine.CyclicLabel,
    }
    if algebra and not isinstance(first, kinds[algebra]):
        raise LabelDomainError(f"label {first} does not belong to --algebra {algebra}")
    level = getattr(args, "level", None)
    if level is not None:
        actual = first.m if isinstance(first, affine.CyclicLabel) else first.k
        if actual != level:
            raise LabelDomainError(f"label {first} is not at level {level}")
    rank = getattr(args, "rank", None)
    if rank is not None and isinstance(first, slr.TupleLabel) and first.r != rank:
        raise LabelDomainError(f"label {first} is not at rank {rank}")


def _select_datum_subring(args) -> Tuple[FusionDatum, tuple]:
    algebra = args.algebra
    if algebra == "sl2":
        datum = sl2.datum_sl2(args.level)
        subring = {
            "full": datum.labels,
            "T": sl2.subring_T(args.level),
            "S1": sl2.subring_S1(args.level),
        }[args.subring]
        return datum, tuple(subring)
    if algebra == "slr":
        if args.rank is None:
            raise LabelDomainError("--algebra slr needs --rank")
        datum = slr.datum_slr(args.rank, args.level)
        return datum, datum.labels
    if algebra == "affine":
        datum = affine.datum_affine_sl2(args.level)
        return datum, datum.labels
    datum = affine.datum_cyclic(args.level)
    return datum, datum.labels


# -- serialization --------------------------------------------------------------


def to_jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, bool) or isinstance(value, int) or value is None:
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {_key_str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if is_dataclass(value) and not isinstance(value, type):
        return {k: to_jsonable(v) for k, v in asdict(value).items()}
    return str(value)


def _key_str(key: Any) -> str:
    if isinstance(key, tuple):
        return "{" + ",".join(str(x) for x in key) + "}"
    return str(key)


def _format_value(value: Any) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return "(" + ", ".join(_format_value(v) for v in value) + ")"
    return str(value)


def _emit(args, command: str, inputs: dict, result: Any, lines: List[str], rows: List[Sequence[Any]], elapsed: float) -> None:
    if args.format == "json":
        payload = {
            "command": command,
            "inputs": to_jsonable(inputs),
            "result": to_jsonable(result),
            "elapsed_ms": round(elapsed * 1000, 3),
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = _csv.writer(buffer)
        for row in rows:
            writer.writerow([_format_value(x) for x in row])
        sys.stdout.write(buffer.getvalue())
    else:
        for line in lines:
            print(line)


# -- verb implementations ---------------------------------------------------------


def _cmd_cw(args) -> int:
    start = time.perf_counter()
    labels = [parse_label(t) for t in args.modules]
    datum = datum_for_labels(labels)
    _check_context(args, labels)
    values = [(str(m), datum.cw(m)) for m in labels]
    _emit(
        args,
        "cw",
        {"modules": [str(m) for m in labels]},
        {"cw": dict(values)},
        [f"{m} {v}" for m, v in values],
        [("label", "cw")] + [(m, v) for m, v in values],
        time.perf_counter() - start,
    )
    return 0


def _cmd_fuse(args) -> int:
    start = time.perf_counter()
    a, b = (parse_label(t) for t in args.modules)
    datum = datum_for_labels([a, b])
    _check_context(args, [a, b])
    expansion = expand_fusion(datum, a, b)
    terms = [(str(m), mult) for m, mult in expansion]
    _emit(
        args,
        "fuse",
        {"modules": [str(a), str(b)]},
        {"terms": dict(terms)},
        [f"{m} x{mult}" for m, mult in terms],
        [("label", "multiplicity")] + terms,
        time.perf_counter() - start,
    )
    return 0


def _scalar_command(args, command: str, value: Any, extra_inputs: dict) -> int:
    _emit(
        args,
        command,
        extra_inputs,
        {"value": value},
        [_format_value(value)],
        [("result",), (value,)],
        getattr(args, "_elapsed", 0.0),
    )
    return 0


def _cmd_rank(args) -> int:
    start = time.perf_counter()
    labels = [parse_label(t) for t in args.modules]
    datum = datum_for_labels(labels)
    _check_context(args, labels)
    value = rank_n(datum, labels)
    args._elapsed = time.perf_counter() - start
    return _scalar_command(args, "rank", value, {"modules": [str(m) for m in labels]})


def _cmd_degree(args) -> int:
    start = time.perf_counter()
    labels = [parse_label(t) for t in args.modules]
    datum = datum_for_labels(labels)
    _check_context(args, labels)
    value = degree_04(datum, labels)
    args._elapsed = time.perf_counter() - start
    return _scalar_command(args, "degree", value, {"modules": [str(m) for m in labels]})


def _cmd_class(args) -> int:
    start = time.perf_counter()
    labels = [parse_label(t) for t in args.modules]
    datum = datum_for_labels(labels)
    _check_context(args, labels)
    cls = divisor_class(datum, labels)
    lines = [f"mu {cls.mu}"]
    rows: List[Sequence[Any]] = [("kind", "key", "value"), ("mu", "", cls.mu)]
    for i, coeff in enumerate(cls.psi_coeffs, start=1):
        lines.append(f"psi[{i}] {coeff}")
        rows.append(("psi", i, coeff))
    for key in sorted(cls.boundary_coeffs, key=lambda s: (len(s), s)):
        pretty = "{" + ",".join(str(x) for x in key) + "}"
        lines.append(f"boundary[{pretty}] {cls.boundary_coeffs[key]}")
        rows.append(("boundary", pretty, cls.boundary_coeffs[key]))
    result = {
        "mu": cls.mu,
        "psi": list(cls.psi_coeffs),
        "boundary": {key: val for key, val in cls.boundary_coeffs.items()},
    }
    _emit(args, "class", {"modules": [str(m) for m in labels]}, result, lines, rows, time.perf_counter() - start)
    return 0


def _cmd_intersect(args) -> int:
    start = time.perf_counter()
    labels = [parse_label(t) for t in args.modules]
    datum = datum_for_labels(labels)
    _check_context(args, labels)
    curve = FCurve.parse(args.fcurve, len(labels))
    value = fcurve_intersect(datum, labels, curve)
    args._elapsed = time.perf_counter() - start
    return _scalar_command(
        args, "intersect", value, {"modules": [str(m) for m in labels], "fcurve": str(curve)}
    )


def _cmd_trivial(args) -> int:
    start = time.perf_counter()
    labels = [parse_label(t) for t in args.modules]
    datum = datum_for_labels(labels)
    _check_context(args, labels)
    value = is_trivial(datum, labels)
    args._elapsed = time.perf_counter() - start
    return _scalar_command(args, "trivial", value, {"modules": [str(m) for m in labels]})


def _cmd_scan(args) -> int:
    start = time.perf_counter()
    datum, subring = _select_datum_subring(args)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    report = scan_f_positivity(datum, subring, jobs=jobs)
    lines = [
        f"examined {report.tuples_examined} multisets over {len(subring)} labels",
        f"min degree {report.min_degree}",
    ]
    rows: List[Sequence[Any]] = [("kind", "modules", "degree")]
    for tup, deg in report.counterexamples:
        text = " ".join(str(m) for m in tup)
        lines.append(f"NEGATIVE {text} degree {deg}")
        rows.append(("negative", text, deg))
    rows.append(("summary", f"examined={report.tuples_examined}", report.min_degree))
    result = {
        "tuples_examined": report.tuples_examined,
        "min_degree": report.min_degree,
        "counterexamples": [
            {"modules": [str(m) for m in tup], "degree": deg} for tup, deg in report.counterexamples
        ],
    }
    inputs = {"algebra": args.algebra, "level": args.level, "rank": args.rank, "subring": args.subring}
    _emit(args, "scan", inputs, result, lines, rows, time.perf_counter() - start)
    return 1 if report.counterexamples else 0


def _cmd_certificate(args) -> int:
    start = time.perf_counter()
    datum, subring = _select_datum_subring(args)
    cert = positivity_certificate(datum, subring)
    lines = [
        f"abelian {cert.abelian}",
        f"f_min {cert.f_min}",
        f"f_max {cert.f_max}",
        f"interval {cert.c_interval if cert.c_interval else 'none'}",
    ]
    rows = [
        ("field", "value"),
        ("abelian", cert.abelian),
        ("f_min", cert.f_min),
        ("f_max", cert.f_max),
        ("interval", cert.c_interval if cert.c_interval else ""),
    ]
    inputs = {"algebra": args.algebra, "level": args.level, "rank": args.rank, "subring": args.subring}
    _emit(args, "certificate", inputs, cert, lines, rows, time.perf_counter() - start)
    return 0


def _cmd_lambda(args) -> int:
    start = time.perf_counter()
    datum, subring = _select_datum_subring(args)
    value = lambda_threshold(datum, subring)
    args._elapsed = time.perf_counter() - start
    return _scalar_command(
        args,
        "lambda",
        value,
        {"algebra": args.algebra, "level": args.level, "rank": args.rank, "subring": args.subring},
    )


def _cmd_pairing(args) -> int:
    start = time.perf_counter()
    bundle = (
        affine.pairing_T_to_affine(args.level)
        if args.which == "T-affine"
        else affine.pairing_S1_to_cyclic(args.level)
    )
    source, subring, target, mapping = bundle
    report = affine.verify_pairing(source, subring, target, mapping)
    lines = [
        f"fusion injection {report.is_fusion_injection}",
        f"eta {report.eta if report.eta is not None else 'undefined'}",
    ]
    if report.failure_witness:
        labels, message = report.failure_witness
        lines.append(f"witness {' '.join(str(m) for m in labels)}: {message}")
    rows = [
        ("field", "value"),
        ("fusion_injection", report.is_fusion_injection),
        ("eta", report.eta if report.eta is not None else ""),
        ("witness", report.failure_witness[1] if report.failure_witness else ""),
    ]
    inputs = {"pairing": args.which, "level": args.level}
    _emit(args, "pairing", inputs, report, lines, rows, time.perf_counter() - start)
    ok = report.is_fusion_injection and report.failure_witness is None
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    start = time.perf_counter()
    checks = run_suite(args.suite, max_level=args.max_level, jobs=args.jobs)
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in checks]
    rows: List[Sequence[Any]] = [("check", "passed", "detail")]
    rows.extend((c.name, c.passed, c.detail) for c in checks)
    result = {"suite": args.suite, "checks": [to_jsonable(c) for c in checks]}
    inputs = {"suite": args.suite, "max_level": args.max_level}
    _emit(args, "verify", inputs, result, lines, rows, time.perf_counter() - start)
    return 0 if all(c.passed for c in checks) else 1


# -- parser ------------------------------------------------------------------------


def _add_common(sub, modules: str = "") -> None:
    sub.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sub.add_argument("--algebra", choices=("sl2", "slr", "affine", "cyclic"))
    sub.add_argument("--level", type=int)
    sub.add_argument("--rank", type=int)
    if modules:
        sub.add_argument("modules", nargs=modules, metavar="MODULE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusion-positivity",
        description="Exact fusion-ring positivity computations on moduli of pointed rational curves.",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    p = subs.add_parser("cw", help="conformal weights of modules")
    _add_common(p, "+")
    p.set_defaults(func=_cmd_cw)

    p = subs.add_parser("fuse", help="fusion product of two modules")
    _add_common(p, "+")
    p.set_defaults(func=_cmd_fuse)

    p = subs.add_parser("rank", help="n-point bundle rank")
    _add_common(p, "+")
    p.set_defaults(func=_cmd_rank)

    p = subs.add_parser("degree", help="degree of the 4-point divisor")
    _add_common(p, "+")
    p.set_defaults(func=_cmd_degree)

    p = subs.add_parser("class", help="divisor class in the psi/boundary basis")
    _add_common(p, "+")
    p.set_defaults(func=_cmd_class)

    p = subs.add_parser("intersect", help="intersection with an F-curve")
    _add_common(p, "+")
    p.add_argument("--fcurve", required=True, help='partition, e.g. "{1,2}|{3}|{4}|{5}"')
    p.set_defaults(func=_cmd_intersect)

    p = subs.add_parser("trivial", help="does the divisor vanish on every F-curve")
    _add_common(p, "+")
    p.set_defaults(func=_cmd_trivial)

    for name, fn, needs_subring in (
        ("scan", _cmd_scan, True),
        ("certificate", _cmd_certificate, True),
        ("lambda", _cmd_lambda, True),
    ):
        p = subs.add_parser(name)
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--algebra", choices=("sl2", "slr", "affine", "cyclic"), required=True)
        p.add_argument("--level", type=int, required=True)
        p.add_argument("--rank", type=int)
        if needs_subring:
            p.add_argument("--subring", choices=("full", "T", "S1"), default="full")
        if name == "scan":
            p.add_argument("--jobs", type=int, default=None)
        p.set_defaults(func=fn)

    p = subs.add_parser("pairing", help="verify a proportional subring pairing")
    p.add_argument("which", choices=("T-affine", "S1-cyclic"))
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=_cmd_pairing)

    p = subs.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FusionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
