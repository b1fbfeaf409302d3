"""The ncotor command line.

Verbs: nc, check, mutate, enumerate, verify, render, quiver, serve.
Exit status: 0 success, 2 input rejected, 3 budget exceeded, 4 verification
failed.  Configuration documents travel through --in/--out (default stdin/
stdout, "-" explicit); NCOTOR_BUDGET bounds exhaustive scans.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closure, mutation, oracle, render
from .errors import BudgetExceeded, InputError, NcotorError, VerificationFailure
from .formats import (
    ConfigDocument,
    document_from_set,
    document_to_dict,
    parse_document,
    serialize_document,
)
from .polygon import DiagSet, PolygonSpec
from .quiver import ar_quiver

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _parse_spec(text: str) -> PolygonSpec:
    try:
        n, m = (int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"--spec expects 'n,m', got {text!r}") from None
    return PolygonSpec(n, m)


def _parse_cut(items: list[str], spec: PolygonSpec) -> DiagSet:
    pairs = []
    for item in items:
        try:
            a, b = (int(part) for part in item.replace("(", "").replace(")", "").split(","))
        except ValueError:
            raise InputError(f"--cut expects 'a,b', got {item!r}") from None
        pairs.append((a, b))
    return DiagSet.from_diagonals(spec, pairs)


def _read_document(path: str) -> ConfigDocument:
    if path == "-":
        return parse_document(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_set(s: DiagSet, fmt: str, out: str, name: str | None = None) -> None:
    if fmt == "text":
        _write(out, s.text() + "\n")
    else:
        _write(out, serialize_document(document_from_set(s, name=name)))


# ------------------------------------------------------------------- verbs


def cmd_nc(args) -> int:
    doc = _read_document(args.infile)
    result = closure.non_crossing(doc.diag_set())
    _emit_set(result, args.format, args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    doc = _read_document(args.infile)
    s = doc.diag_set()
    added = closure.nc_closure(s) - s
    report = {
        "spec": {"n": s.spec.n, "m": s.spec.m},
        "members": [[d.a, d.b] for d in s],
        "closed": closure.is_closed(s),
        "ptolemy": closure.is_ptolemy(s),
        "frame": [[d.a, d.b] for d in closure.frame(s)],
        "partner": [[d.a, d.b] for d in closure.non_crossing(s)],
        "closureAdds": [[d.a, d.b] for d in added],
    }
    if args.format == "text":
        lines = [
            f"spec:    {s.spec}",
            f"members: {s.text()}",
            f"closed:  {'yes' if report['closed'] else 'no'}",
            f"ptolemy: {'yes' if report['ptolemy'] else 'no'}",
            f"frame:   {closure.frame(s).text()}",
            f"partner: {closure.non_crossing(s).text()}",
        ]
        if not report["closed"]:
            lines.append(f"closure adds: {added.text()}")
        _write(args.out, "\n".join(lines) + "\n")
    else:
        _write(args.out, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def cmd_mutate(args) -> int:
    doc = _read_document(args.infile)
    s = doc.diag_set()
    cut = _parse_cut(args.cut, s.spec)
    record = mutation.mutate(
        closure.Configuration(s),
        mutation.MutationStep(cut=cut, direction=args.direction),
    )
    _emit_set(record.after.members, args.format, args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = _parse_spec(args.spec)
    stream = (
        closure.cluster_tilting_sets(spec)
        if args.cluster_tilting
        else closure.closed_sets(spec)
    )
    if args.count_only:
        count = 0
        for _ in stream:
            count += 1
        _write(args.out, f"{count}\n")
        return EXIT_OK
    lines = []
    for i, s in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            break
        if args.format == "text":
            lines.append(s.text())
        else:
            lines.append(json.dumps(document_to_dict(document_from_set(s))))
    _write(args.out, "\n".join(lines) + ("\n" if lines else ""))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _parse_spec(args.spec)
    budget = args.budget
    if args.check == "galois":
        report = oracle.verify_galois(spec, trials=args.trials, seed=args.seed)
    elif args.check == "mutation":
        report = oracle.verify_mutation_theorem(spec)
    elif args.check == "oracle":
        report = oracle.verify_closed_enumeration(spec, budget=budget)
    elif args.check == "subfactor":
        if not args.cut:
            raise InputError("verify subfactor requires at least one --cut a,b")
        report = oracle.verify_subfactor(spec, _parse_cut(args.cut, spec))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown check {args.check!r}")
    _write(args.out, report.to_json() + "\n" if args.format == "json" else report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_render(args) -> int:
    doc = _read_document(args.infile)
    s = doc.diag_set()
    if args.format == "tikz":
        _write(args.out, render.render_tikz(s, highlight=args.highlight))
    elif args.format == "dot":
        # graph export of the translation quiver for the document's spec
        _write(args.out, render.quiver_dot(ar_quiver(doc.spec)))
    else:
        _write(args.out, render.render_svg(s, highlight=args.highlight))
    return EXIT_OK


def cmd_quiver(args) -> int:
    spec = _parse_spec(args.spec)
    q = ar_quiver(spec)
    if args.format == "json":
        payload = {
            "spec": {"n": spec.n, "m": spec.m},
            "vertices": [
                {"diagonal": [v.diagonal.a, v.diagonal.b], "row": v.row, "column": v.column}
                for v in q.vertices
            ],
            "arrows": [[[s.a, s.b], [t.a, t.b]] for (s, t) in q.arrows],
            "tau": [[[s.a, s.b], [t.a, t.b]] for (s, t) in q.tau_edges],
        }
        _write(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        _write(args.out, render.quiver_dot(q))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


# ------------------------------------------------------------------ parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncotor",
        description="workbench for non-crossing n-diagonal configurations",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_io(p, needs_in=True):
        if needs_in:
            p.add_argument("--in", dest="infile", default="-", metavar="FILE",
                           help="input document (default stdin)")
        p.add_argument("--out", default="-", metavar="FILE",
                       help="output target (default stdout)")

    p = sub.add_parser("nc", help="non-crossing complement of a configuration")
    add_io(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_nc)

    p = sub.add_parser("check", help="closedness, Ptolemy condition, frame, partner")
    add_io(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mutate", help="rotate a closed configuration along a cut")
    add_io(p)
    p.add_argument("--cut", action="append", default=[], metavar="A,B",
                   help="cut member (repeatable)")
    p.add_argument("--direction", choices=("backward", "forward"), default="backward")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("enumerate", help="stream closed or cluster-tilting sets")
    p.add_argument("--spec", required=True, metavar="N,M")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--closed", action="store_true", default=True)
    group.add_argument("--cluster-tilting", dest="cluster_tilting", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    add_io(p, needs_in=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run an oracle certification")
    p.add_argument("check", choices=("galois", "mutation", "oracle", "subfactor"))
    p.add_argument("--spec", required=True, metavar="N,M")
    p.add_argument("--cut", action="append", default=[], metavar="A,B")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=None,
                   help="subset budget override (default NCOTOR_BUDGET or 2^24)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    add_io(p, needs_in=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a configuration")
    add_io(p)
    p.add_argument("--format", choices=("svg", "tikz", "dot"), default="svg")
    p.add_argument("--highlight", choices=render.HIGHLIGHTS, default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("quiver", help="export the translation quiver")
    p.add_argument("--spec", required=True, metavar="N,M")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    add_io(p, needs_in=False)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("serve", help="run the session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8777)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationFailure as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (InputError, NcotorError, IndexError) as e:
        print(f"rejected: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
