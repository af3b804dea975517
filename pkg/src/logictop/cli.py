"""Command line front end.

Every subcommand reads one JSON document (``--input`` or stdin) and
writes text, JSON, or DOT (``--output`` or stdout).  Exit codes: 0 on
success, 1 when a requested verification flag comes back false or a
precondition fails with a witness, 2 on usage or document errors.

Verification flags are the booleans a command exists to check: the
map analysis fields for ``check-map``, ``iso_ok``/``square_ok`` for
``roundtrip``, and per-criterion results for ``corpus``.  Descriptive
output (``classify``, ``spectrum``, witnesses) never fails by itself.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from collections.abc import Sequence

from .builders import godel_witness, heyting_from_upsets
from .connectives import verify_connectives
from .core import AbstractLogic, set_key, sorted_sets, theory_spectrum
from .corpus import run_all
from .documents import Document, emit_document, parse_document
from .dot import export_dot
from .duality import (
    analyze_logic_map,
    is_spectral_map,
    logic_space,
    roundtrip_logic,
    roundtrip_space,
    space_logic,
    stable_iff_disjunction,
)
from .errors import ParseError, SchemaError, WorkbenchError


class _UsageError(Exception):
    pass


def _read_document(args) -> Document:
    if args.input is None:
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    return parse_document(text)


def _write(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _jsonable(x):
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: _jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, (set, frozenset)):
        if all(isinstance(e, frozenset) for e in x):
            return [_jsonable(e) for e in sorted_sets(x)]
        return sorted(x, key=repr) if not all(isinstance(e, int) for e in x) else sorted(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(e) for e in x]
    return x


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _show(witness) -> str:
    if isinstance(witness, (set, frozenset)):
        return "{" + ",".join(_show(e) for e in sorted(witness, key=repr)) + "}"
    if isinstance(witness, tuple):
        return "(" + ", ".join(_show(e) for e in witness) + ")"
    return str(witness)


def _expect(doc: Document, command: str, *kinds: str):
    if doc.kind not in kinds:
        raise _UsageError(f"{command} expects a {' or '.join(kinds)} document, got {doc.kind}")
    return doc.value


def _theory_names(logic: AbstractLogic, theories) -> str:
    rendered = [
        "{" + ",".join(logic.expr_names[i] for i in sorted(t)) + "}"
        for t in sorted_sets(theories)
    ]
    return " ".join(rendered) if rendered else "(none)"


def _emit_report(args, report, text_lines) -> None:
    if args.format == "json":
        _write(args, json.dumps(_jsonable(report), indent=2))
    else:
        _write(args, "\n".join(text_lines))


def _cmd_classify(args) -> int:
    logic = _expect(_read_document(args), "classify", "logic")
    report = verify_connectives(logic)
    lines = [f"class: {report.classification}"]
    for check in report.conditions:
        status = "absent" if check.status is None else _flag(check.status)
        lines.append(f"{check.connective}: {status}")
        if check.status is False:
            lines.append(f"{check.connective} witness: {_show(check.witness)}")
    lines.append(f"maximals_equal_totally_primes: {_flag(report.maximals_equal_totally_primes)}")
    lines.append(f"has_valid_formula: {_flag(report.has_valid_formula)}")
    lines.append(f"has_inconsistent_formula: {_flag(report.has_inconsistent_formula)}")
    _emit_report(args, report, lines)
    return 0


def _cmd_spectrum(args) -> int:
    logic = _expect(_read_document(args), "spectrum", "logic")
    spectrum = theory_spectrum(logic)
    lines = [
        f"primes: {_theory_names(logic, spectrum.primes)}",
        f"totally_primes: {_theory_names(logic, spectrum.totally_primes)}",
        f"maximals: {_theory_names(logic, spectrum.maximals)}",
        f"minimal_generators: {_theory_names(logic, spectrum.minimal_generators)}",
    ]
    _emit_report(args, spectrum, lines)
    return 0


def _cmd_space(args) -> int:
    logic = _expect(_read_document(args), "space", "logic")
    _write(args, emit_document(Document("space", logic_space(logic).space)))
    return 0


def _cmd_dualize(args) -> int:
    doc = _read_document(args)
    value = _expect(doc, "dualize", "logic", "space")
    if doc.kind == "logic":
        _write(args, emit_document(Document("space", logic_space(value).space)))
    else:
        _write(args, emit_document(Document("logic", space_logic(value))))
    return 0


def _cmd_roundtrip(args) -> int:
    doc = _read_document(args)
    value = _expect(doc, "roundtrip", "logic", "space", "logic_map", "point_map")
    if doc.kind == "logic":
        report = roundtrip_logic(value)
    elif doc.kind == "space":
        report = roundtrip_space(value)
    elif doc.kind == "logic_map":
        report = roundtrip_logic(value.source, value)
    else:
        report = roundtrip_space(value.source, value)
    lines = [
        f"direction: {report.direction}",
        f"iso_ok: {_flag(report.iso_ok)}",
        f"square_ok: {_flag(report.square_ok)}",
        f"squares: {len(report.squares)} checked",
    ]
    for label, ok, witness in report.squares:
        if not ok:
            lines.append(f"failed square {label}: {_show(witness)}")
    for label, witness in report.witnesses:
        lines.append(f"witness {label}: {_show(witness)}")
    _emit_report(args, report, lines)
    return 0 if report.iso_ok and report.square_ok else 1


def _cmd_check_map(args) -> int:
    doc = _read_document(args)
    value = _expect(doc, "check-map", "logic_map", "point_map")
    if doc.kind == "point_map":
        spectral, witness = is_spectral_map(value)
        lines = [f"is_spectral_map: {_flag(spectral)}"]
        if witness is not None:
            lines.append(f"witness: basic open with non-open preimage {set_key(witness)}")
        _emit_report(args, {"is_spectral_map": spectral, "witness": witness}, lines)
        return 0 if spectral else 1

    analysis = analyze_logic_map(value)
    lines = [
        f"is_logic_map: {_flag(analysis.is_logic_map)}",
        f"is_stable: {_flag(analysis.is_stable)}",
        f"is_normal: {_flag(analysis.is_normal)}",
        f"is_L_surjective: {_flag(analysis.is_L_surjective)}",
        f"is_isomorphism: {_flag(analysis.is_isomorphism)}",
    ]
    for label, witness in analysis.witnesses:
        lines.append(f"witness {label}: {_show(witness)}")
    payload: object = analysis
    src, tgt = value.source.connectives, value.target.connectives
    if src is not None and src.join is not None and tgt is not None and tgt.join is not None:
        check = stable_iff_disjunction(value)
        lines.append(f"preserves_join: {_flag(check.preserves_join)}")
        lines.append(f"stable_iff_disjunction: {_flag(check.agree)}")
        if check.witness is not None:
            lines.append(f"disjunction witness: {_show(check.witness)}")
        payload = {"analysis": analysis, "disjunction": check}
    _emit_report(args, payload, lines)
    flags = (
        analysis.is_logic_map,
        analysis.is_stable,
        analysis.is_normal,
        analysis.is_L_surjective,
        analysis.is_isomorphism,
    )
    return 0 if all(flags) else 1


def _cmd_corpus(args) -> int:
    jobs = args.jobs if args.jobs is not None else int(os.environ.get("WORKBENCH_JOBS", "1"))
    results = run_all(max_points=args.max_points, seed=args.seed, jobs=jobs)
    lines = [
        f"criterion {r.number} {r.name}: {'pass' if r.passed else 'FAIL'} ({r.detail})"
        for r in results
    ]
    lines.append(f"passed {sum(r.passed for r in results)}/{len(results)}")
    _emit_report(args, results, lines)
    return 0 if all(r.passed for r in results) else 1


def _cmd_godel_witness(args) -> int:
    doc = _read_document(args)
    value = _expect(doc, "godel-witness", "poset", "lattice")
    algebra = heyting_from_upsets(value) if doc.kind == "poset" else value
    found = godel_witness(algebra)
    if found is None:
        _emit_report(args, {"witness": None}, ["witness: none"])
        return 0
    p, q, lhs, rhs = (algebra.element_names[i] for i in found)
    lines = [f"witness: p={p} q={q} lhs={lhs} rhs={rhs}"]
    _emit_report(args, {"witness": list(found)}, lines)
    return 0


def _cmd_export_dot(args) -> int:
    doc = _read_document(args)
    value = _expect(doc, "export-dot", "poset", "space")
    _write(args, export_dot(value))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="document to read (default: stdin)")
    common.add_argument("--output", metavar="PATH", help="where to write (default: stdout)")
    common.add_argument("--format", choices=("json", "text", "dot"), default="text")

    parser = argparse.ArgumentParser(
        prog="logictop",
        description="Finite workbench for abstract logics and their dual spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    handlers = {
        "classify": (_cmd_classify, "connective conditions and classification of a logic"),
        "spectrum": (_cmd_spectrum, "prime, totally prime and maximal theories"),
        "space": (_cmd_space, "emit the prime spectrum of a logic as a space document"),
        "dualize": (_cmd_dualize, "map a logic to its spectrum or a space to its dual logic"),
        "roundtrip": (_cmd_roundtrip, "double-dualize and verify the comparison maps"),
        "check-map": (_cmd_check_map, "analyze a logic map or point map"),
        "corpus": (_cmd_corpus, "run the built-in acceptance corpus"),
        "godel-witness": (_cmd_godel_witness, "search a Heyting algebra for the classical-translation obstruction"),
        "export-dot": (_cmd_export_dot, "render a poset or space order diagram as DOT"),
    }
    for name, (handler, help_text) in handlers.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)

    corpus = sub.choices["corpus"]
    corpus.add_argument("--max-points", type=int, default=4, metavar="N",
                        help="largest poset size feeding the corpus (default 4)")
    corpus.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    corpus.add_argument("--jobs", type=int, default=None,
                        help="parallel workers (default: WORKBENCH_JOBS or 1)")
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.handler(args)
    except (ParseError, SchemaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except WorkbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.witness is not None:
            print(f"witness: {e.witness}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
