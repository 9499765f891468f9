"""Command-line interface.

Subcommands: ``list``, ``comul``, ``apply``, ``matrix``, ``classify``,
``gram``, ``verify``.  Output goes to stdout (or ``--output``) in
``text``, ``json``, or ``csv`` format and is byte-identical across runs
for the same invocation.  Exit codes: 0 success, 1 domain error (with a
JSON diagnostic on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .core import ProjectionPair, comul_extend
from .engine import (
    OperatorHandle,
    classify_shift,
    co_toeplitz_apply,
    gram_matrix,
    is_positive_definite,
    make_window,
    operator_matrix,
)
from .errors import CotoeplitzError, NotHermitian, ParseError
from .instances import make_form
from .parsing import (
    parse_coalgebra,
    parse_element,
    parse_form,
    render_element,
    render_tensor,
)
from .verification import SCOPES, run_suite


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cotoeplitz",
        description="Exact operators from coalgebra symbols: comultiplication, "
        "operator application, matrices, classification, and diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--format",
            choices=("text", "json", "csv"),
            default="text",
            help="output format (default: text)",
        )
        p.add_argument("--output", help="write output to this path instead of stdout")

    p = sub.add_parser("list", help="list available specs")
    add_common(p)

    p = sub.add_parser("comul", help="comultiply an element")
    p.add_argument("--coalgebra", required=True, help="coalgebra spec, e.g. divpow")
    p.add_argument("--element", required=True, help="element text, e.g. x_2")
    add_common(p)

    p = sub.add_parser("apply", help="apply the operator of a symbol to an element")
    p.add_argument("--coalgebra", required=True)
    p.add_argument("--form", required=True, help="form spec, e.g. diag?w=factorial")
    p.add_argument("--symbol", required=True, help="symbol element text")
    p.add_argument("--element", required=True, help="argument element text")
    p.add_argument(
        "--subset",
        help="comma-separated basis keys spanning the projection subspace "
        "(default: full basis)",
    )
    add_common(p)

    p = sub.add_parser("matrix", help="matrix of an operator on a basis window")
    p.add_argument("--coalgebra", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--symbol", required=True)
    p.add_argument("--window", required=True, help="'deg<=D' or 'full'")
    add_common(p)

    p = sub.add_parser("classify", help="classify an operator by degree shift")
    p.add_argument("--coalgebra", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--symbol", required=True)
    p.add_argument("--window", required=True)
    add_common(p)

    p = sub.add_parser("gram", help="Gram matrix of a form on a basis window")
    p.add_argument("--coalgebra", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--window", required=True)
    add_common(p)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--seed", type=int, default=0)
    add_common(p)

    return parser


def _parse_window_arg(text: str, coalgebra):
    t = text.strip()
    if t == "full":
        if not coalgebra.finite:
            raise UsageError(
                f"--window full needs a finite coalgebra; {coalgebra.spec} is "
                "infinite, use --window 'deg<=D'"
            )
        return make_window(coalgebra, None)
    if t.startswith("deg<="):
        try:
            bound = int(t[len("deg<="):])
        except ValueError:
            raise UsageError(f"invalid window bound in '{text}'") from None
        return make_window(coalgebra, bound)
    raise UsageError(f"invalid window '{text}': expected 'deg<=D' or 'full'")


# ---------------------------------------------------------------------------
# rendering helpers
# ---------------------------------------------------------------------------

def _csv_scalar(value) -> str:
    sign = "+" if value.im >= 0 else "-"
    return f"{value.re}{sign}{abs(value.im)}i"


def _csv_text(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _grid_text(window, entries) -> str:
    labels = window.key_texts()
    cells = [[""] + labels]
    for r, label in enumerate(labels):
        cells.append([label] + [str(v) for v in entries[r]])
    widths = [max(len(row[c]) for row in cells) for c in range(len(cells[0]))]
    lines = [
        "  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip()
        for row in cells
    ]
    return "\n".join(lines)


def _matrix_csv(result) -> str:
    labels = result.window.key_texts()
    rows = [[""] + labels]
    for r, label in enumerate(labels):
        rows.append([label] + [_csv_scalar(v) for v in result.entries[r]])
    for source, escaped in result.leakage:
        rows.append([f"leakage:{source.text()}", render_element(escaped)])
    return _csv_text(rows)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_list(args) -> str:
    listing = {
        "coalgebras": [
            ["manin?q=<scalar>", "quantum plane monomials a^i c^j (default q=2/3)"],
            ["divpow", "divided-power basis x_0, x_1, ..."],
            ["negdeg?M=<int>", "bounded-degree basis x_-M .. x_M"],
            ["matrix?n=<int>", "matrix units E_i_j with 1 <= i,j <= n"],
        ],
        "forms": [
            ["manin-orth?w=<weight>", "orthogonal monomials, <a^i c^j, a^i c^j> = w(i)w(j)"],
            ["manin-skew?mu=<weight>", "pairs monomials with equal i-j"],
            ["diag?w=<weight>", "diagonal pairing <x_n, x_n> = w(n)"],
            ["matrix-orth", "orthonormal matrix units"],
            ["matrix-weighted?w=<weight>", "pairs units with equal i-j, value w(i+s)"],
        ],
        "weights": [
            ["one", "constant 1"],
            ["factorial", "n! (nonnegative indices only)"],
            ["absfactorial", "|n|!"],
            ["geom:<rational>", "r^n for a positive rational r"],
            ["poly:<int>", "(1+|n|)^k"],
        ],
        "windows": [
            ["deg<=<D>", "all basis keys of degree at most D"],
            ["full", "the whole basis (finite coalgebras only)"],
        ],
    }
    if args.format == "json":
        return json.dumps(
            {
                section: [{"spec": spec, "about": about} for spec, about in rows]
                for section, rows in listing.items()
            },
            indent=2,
        )
    if args.format == "csv":
        rows = [["section", "spec", "about"]]
        for section, entries in listing.items():
            rows.extend([section, spec, about] for spec, about in entries)
        return _csv_text(rows)
    lines = []
    for section, entries in listing.items():
        lines.append(f"{section}:")
        width = max(len(spec) for spec, _ in entries)
        lines.extend(f"  {spec.ljust(width)}  {about}" for spec, about in entries)
    return "\n".join(lines)


def _cmd_comul(args) -> str:
    coalgebra = parse_coalgebra(args.coalgebra)
    element = parse_element(args.element, coalgebra)
    tensor = comul_extend(coalgebra, element)
    if args.format == "json":
        return json.dumps(tensor.to_json(), indent=2)
    if args.format == "csv":
        rows = [["key1", "key2", "coeff"]]
        rows.extend(
            [k1.text(), k2.text(), _csv_scalar(coeff)]
            for (k1, k2), coeff in tensor.sorted_terms()
        )
        return _csv_text(rows)
    return render_tensor(tensor)


def _make_handle(args, coalgebra):
    form_spec = parse_form(args.form)
    form = make_form(form_spec, coalgebra)
    symbol = parse_element(args.symbol, coalgebra)
    projection = None
    if getattr(args, "subset", None) is not None:
        keys = []
        for chunk in args.subset.split(","):
            keyed = parse_element(chunk, coalgebra)
            if len(keyed) != 1 or any(c != 1 for _, c in keyed.items()):
                raise UsageError(f"--subset entries must be bare basis keys, got '{chunk}'")
            keys.extend(keyed.support())
        projection = ProjectionPair(coalgebra, keys)
    return OperatorHandle(symbol, form, projection)


def _cmd_apply(args) -> str:
    coalgebra = parse_coalgebra(args.coalgebra)
    handle = _make_handle(args, coalgebra)
    element = parse_element(args.element, coalgebra)
    image = co_toeplitz_apply(handle, element)
    if args.format == "json":
        return json.dumps(image.to_json(), indent=2)
    if args.format == "csv":
        rows = [["key", "coeff"]]
        rows.extend([key.text(), _csv_scalar(coeff)] for key, coeff in image.sorted_terms())
        return _csv_text(rows)
    return render_element(image)


def _cmd_matrix(args) -> str:
    coalgebra = parse_coalgebra(args.coalgebra)
    handle = _make_handle(args, coalgebra)
    window = _parse_window_arg(args.window, coalgebra)
    result = operator_matrix(handle, window)
    if args.format == "json":
        return json.dumps(result.to_json(), indent=2)
    if args.format == "csv":
        return _matrix_csv(result)
    lines = [_grid_text(result.window, result.entries)]
    for source, escaped in result.leakage:
        lines.append(f"leakage from {source.text()}: {render_element(escaped)}")
    return "\n".join(lines)


def _cmd_classify(args) -> str:
    coalgebra = parse_coalgebra(args.coalgebra)
    handle = _make_handle(args, coalgebra)
    window = _parse_window_arg(args.window, coalgebra)
    classification = classify_shift(handle, window)
    if args.format == "json":
        return json.dumps(classification.to_json(), indent=2)
    if args.format == "csv":
        shifts = ";".join(str(s) for s in classification.shifts)
        return _csv_text(
            [["kind", "shift", "shifts"], [classification.kind, classification.shift, shifts]]
        )
    return classification.text()


def _cmd_gram(args) -> str:
    coalgebra = parse_coalgebra(args.coalgebra)
    form = make_form(parse_form(args.form), coalgebra)
    window = _parse_window_arg(args.window, coalgebra)
    gram = gram_matrix(form, window)
    positive_definite = None
    if gram.hermitian:
        positive_definite = is_positive_definite(gram.entries)
    if args.format == "json":
        payload = gram.to_json()
        payload["positive_definite"] = positive_definite
        return json.dumps(payload, indent=2)
    if args.format == "csv":
        labels = gram.window.key_texts()
        rows = [[""] + labels]
        for r, label in enumerate(labels):
            rows.append([label] + [_csv_scalar(v) for v in gram.entries[r]])
        rows.append(["hermitian", str(gram.hermitian).lower()])
        rows.append(["positive-definite", _verdict_text(positive_definite)])
        return _csv_text(rows)
    lines = [_grid_text(gram.window, gram.entries)]
    lines.append(f"hermitian: {str(gram.hermitian).lower()}")
    lines.append(f"positive-definite: {_verdict_text(positive_definite)}")
    return "\n".join(lines)


def _verdict_text(verdict) -> str:
    if verdict is None:
        return "undefined (matrix not hermitian)"
    return str(verdict).lower()


def _cmd_verify(args) -> tuple:
    report = run_suite(scope=args.scope, seed=args.seed)
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2)
    elif args.format == "csv":
        rows = [["check", "coalgebra", "form", "parameters", "status", "witness"]]
        rows.extend(
            [
                record.check,
                record.coalgebra,
                record.form,
                record.params_text(),
                record.status,
                record.witness or "",
            ]
            for record in report.records
        )
        text = _csv_text(rows)
    else:
        text = report.to_text()
    return text, 0 if report.ok else 1


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

_COMMANDS = {
    "list": _cmd_list,
    "comul": _cmd_comul,
    "apply": _cmd_apply,
    "matrix": _cmd_matrix,
    "classify": _cmd_classify,
    "gram": _cmd_gram,
}


def _emit(text: str, output_path):
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            text, code = _cmd_verify(args)
        else:
            text, code = _COMMANDS[args.command](args), 0
        _emit(text, args.output)
        return code
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except ParseError as exc:
        _emit_error({"error": exc.code, "message": str(exc), "position": exc.position})
        return 1
    except NotHermitian as exc:
        _emit_error({"error": exc.code, "message": str(exc)})
        return 1
    except CotoeplitzError as exc:
        payload = {"error": exc.code, "message": str(exc)}
        keys = getattr(exc, "keys", None)
        if keys:
            payload["keys"] = list(keys)
        _emit_error(payload)
        return 1
    except ZeroDivisionError as exc:
        _emit_error({"error": "division-by-zero", "message": str(exc)})
        return 1


def _emit_error(payload: dict):
    sys.stderr.write(json.dumps(payload) + "\n")


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
