"""Command line front end: describe, graph, invariants, verify.

Exit codes: 0 success (and, for verify, zero violations); 1 violations;
2 usage/parse error; 3 size-cap error; 4 unwritable output path;
5 inconclusive results (unless --allow-inconclusive).

Stable output contracts are json, csv, and dot; text output is for humans
and may change.  Identical inputs produce byte-identical stable outputs;
run metadata is added only under --meta.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .graph import (
    DEFAULT_WORK_CAP,
    ExactSearchAborted,
    build_graph,
    compute_invariants,
    graph_json_dict,
    invariants_json_dict,
    to_dot,
)
from .harness import (
    THEOREM_IDS,
    THEOREM_STATEMENTS,
    CorpusSpec,
    catalog_report_json_dict,
    counterexample_catalog,
    run_suite,
    suite_report_csv,
    suite_report_json_dict,
)
from .modules import Caps, DEFAULT_CAPS, SizeCapError, build_module, parse_module_spec
from .predicates import predicate_report

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_WRITE = 4
EXIT_INCONCLUSIVE = 5

ENV_CAPS = "LSG_LAB_CAPS"


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsg",
        description="Large sum graphs of finite modules: describe modules, "
        "export graphs, compute exact invariants, verify the claim catalog.",
    )
    parser.add_argument("--version", action="version", version=f"lsg-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, corpus=False):
        p.add_argument("--module", help="module spec string, e.g. Z:2,4 or Z/12:2,4")
        if corpus:
            p.add_argument(
                "--corpus",
                help="corpus selector: cyclic | two_factor | file:<path>",
            )
            p.add_argument(
                "--max",
                type=int,
                default=None,
                help="corpus bound: max n for cyclic, max d for two_factor",
            )
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--cap-elements", type=int, default=None)
        p.add_argument("--cap-submodules", type=int, default=None)

    p = sub.add_parser("describe", help="module structure and predicates")
    add_common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("graph", help="export the large sum graph")
    add_common(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")

    p = sub.add_parser("invariants", help="exact graph invariants")
    add_common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--allow-inconclusive", action="store_true")

    p = sub.add_parser("verify", help="evaluate the claim catalog")
    add_common(p, corpus=True)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--theorems", help="comma-separated claim ids (default: all)")
    p.add_argument(
        "--catalog",
        action="store_true",
        help="counterexample catalog for non-comultiplication modules",
    )
    p.add_argument("--allow-inconclusive", action="store_true")
    p.add_argument("--meta", action="store_true", help="include run metadata")
    return parser


def _caps_from(args) -> Caps:
    max_elements = DEFAULT_CAPS.max_elements
    max_submodules = DEFAULT_CAPS.max_submodules
    env = os.environ.get(ENV_CAPS)
    if env:
        parts = env.split(",")
        if len(parts) != 2:
            raise _UsageError(
                f"{ENV_CAPS} must be '<elements>,<submodules>', got {env!r}"
            )
        try:
            max_elements, max_submodules = int(parts[0]), int(parts[1])
        except ValueError:
            raise _UsageError(f"{ENV_CAPS} must hold two integers, got {env!r}")
    if getattr(args, "cap_elements", None) is not None:
        max_elements = args.cap_elements
    if getattr(args, "cap_submodules", None) is not None:
        max_submodules = args.cap_submodules
    return Caps(max_elements=max_elements, max_submodules=max_submodules)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _single_module(args, caps: Caps):
    if not getattr(args, "module", None):
        raise _UsageError("this command requires --module")
    ring, orders = parse_module_spec(args.module)
    return build_module(ring, orders, caps)


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _brief_str(sub) -> str:
    gens = ",".join("(" + ",".join(map(str, g)) + ")" for g in sub.generators)
    return f"order {sub.order}  gens {gens or '0'}"


def _cmd_describe(args) -> int:
    caps = _caps_from(args)
    module = _single_module(args, caps)
    report = predicate_report(module)
    subs = module.submodules()
    if args.format == "json":
        doc = {
            "module": module.spec_string,
            "ring": str(module.ring),
            "order": module.order,
            "exponent": module.exponent,
            "submodule_count": len(subs),
            "minimal_submodules": [a.brief() for a in report.minimal_submodules],
            "socle": report.socle.brief(),
            "comultiplication": report.is_comultiplication,
            "comultiplication_witness": (
                report.comultiplication_witness.brief()
                if report.comultiplication_witness is not None
                else None
            ),
            "cocyclic": report.is_cocyclic,
            "uniform": report.is_uniform,
            "finitely_cogenerated": report.is_finitely_cogenerated,
        }
        _emit(_dump_json(doc), args.out)
        return EXIT_OK
    lines = [
        f"module:             {module.spec_string}",
        f"ring:               {module.ring}",
        f"order:              {module.order}",
        f"exponent:           {module.exponent}",
        f"submodules:         {len(subs)}",
        f"minimal submodules: {len(report.minimal_submodules)}",
    ]
    for a in report.minimal_submodules:
        lines.append(f"  {_brief_str(a)}")
    lines.append(f"socle:              {_brief_str(report.socle)}")
    lines.append(f"comultiplication:   {report.is_comultiplication}")
    if report.comultiplication_witness is not None:
        lines.append(f"  witness:          {_brief_str(report.comultiplication_witness)}")
    lines.append(f"cocyclic:           {report.is_cocyclic}")
    lines.append(f"uniform:            {report.is_uniform}")
    lines.append(f"finitely cogenerated: {report.is_finitely_cogenerated}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_graph(args) -> int:
    caps = _caps_from(args)
    module = _single_module(args, caps)
    lsg = build_graph(module)
    if args.format == "dot":
        _emit(to_dot(lsg), args.out)
    else:
        _emit(_dump_json(graph_json_dict(lsg)), args.out)
    return EXIT_OK


def _cmd_invariants(args) -> int:
    caps = _caps_from(args)
    module = _single_module(args, caps)
    lsg = build_graph(module)
    mode = "mark" if args.allow_inconclusive else "raise"
    try:
        inv = compute_invariants(lsg.graph, DEFAULT_WORK_CAP, abort_mode=mode)
    except ExactSearchAborted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    doc = {"module": module.spec_string, "invariants": invariants_json_dict(inv)}
    if args.format == "json":
        _emit(_dump_json(doc), args.out)
    else:
        lines = [f"module: {module.spec_string}"]
        for key, value in doc["invariants"].items():
            lines.append(f"  {key}: {value}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _parse_corpus(args) -> CorpusSpec:
    module = getattr(args, "module", None)
    corpus = getattr(args, "corpus", None)
    if (module is None) == (corpus is None):
        raise _UsageError("verify requires exactly one of --module / --corpus")
    if module is not None:
        parse_module_spec(module)  # validate early
        return CorpusSpec(family="explicit", specs=(module,))
    if corpus == "cyclic":
        return CorpusSpec(family="cyclic", max_n=args.max or 500)
    if corpus == "two_factor":
        return CorpusSpec(family="two_factor", max_d=args.max or 12)
    if corpus.startswith("file:"):
        path = corpus[5:]
        try:
            with open(path, encoding="utf-8") as fh:
                specs = [
                    line.strip()
                    for line in fh
                    if line.strip() and not line.lstrip().startswith("#")
                ]
        except OSError as exc:
            raise _UsageError(f"cannot read corpus file {path}: {exc}")
        for spec in specs:
            parse_module_spec(spec)
        return CorpusSpec(family="explicit", specs=tuple(specs))
    raise _UsageError(f"unknown corpus {corpus!r}")


def _meta_dict() -> dict:
    import datetime

    return {
        "version": __version__,
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def _cmd_verify(args) -> int:
    caps = _caps_from(args)
    corpus = _parse_corpus(args)
    ids = None
    if args.theorems:
        ids = [tok.strip() for tok in args.theorems.split(",") if tok.strip()]
        unknown = [t for t in ids if t not in THEOREM_IDS]
        if unknown:
            raise _UsageError(f"unknown theorem ids: {', '.join(unknown)}")
    meta = _meta_dict() if args.meta else None

    if args.catalog:
        report = counterexample_catalog(corpus, ids, caps)
        if args.format == "json":
            _emit(_dump_json(catalog_report_json_dict(report, meta)), args.out)
        elif args.format == "text":
            lines = [f"non-comultiplication modules: {report.summary['non_comultiplication']}"]
            for e in report.entries:
                lines.append(
                    f"  {e.module_spec}: witness order {e.witness['submodule']['order']}, "
                    f"failing conclusions: {', '.join(e.failed) or 'none'}"
                )
            _emit("\n".join(lines) + "\n", args.out)
        else:
            raise _UsageError("--catalog reports support json or text format")
        if report.summary["module_errors"] and not args.allow_inconclusive:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    report = run_suite(corpus, ids, caps)
    if args.format == "json":
        _emit(_dump_json(suite_report_json_dict(report, meta)), args.out)
    elif args.format == "csv":
        _emit(suite_report_csv(report), args.out)
    else:
        s = report.summary
        lines = [
            f"modules: {s['modules']}  checks: {s['checks']}  "
            f"applicable: {s['applicable']}  holds: {s['holds']}  "
            f"violations: {s['violations']}  inconclusive: {s['inconclusive']}  "
            f"errors: {s['module_errors']}"
        ]
        for v in report.verdicts:
            if v.holds is False:
                lines.append(f"  VIOLATION {v.theorem_id} on {v.module_spec}: {v.witness}")
            elif v.inconclusive:
                lines.append(f"  INCONCLUSIVE {v.theorem_id} on {v.module_spec}")
        for err in report.errors:
            lines.append(f"  ERROR {err['module']}: {err['error']}")
        _emit("\n".join(lines) + "\n", args.out)
    if report.summary["violations"] > 0:
        return EXIT_VIOLATIONS
    if report.summary["inconclusive"] > 0 or report.summary["module_errors"] > 0:
        if not args.allow_inconclusive:
            return EXIT_INCONCLUSIVE
    return EXIT_OK


_HANDLERS = {
    "describe": _cmd_describe,
    "graph": _cmd_graph,
    "invariants": _cmd_invariants,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WRITE


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
