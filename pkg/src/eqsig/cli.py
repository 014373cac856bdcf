"""Command-line interface.

Exit codes: 0 success, 1 domain error (invalid document, singular form,
inapplicable move), 2 usage error, 3 bound violation in ``verify``,
4 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import corpus
from .bounds import BoundReport, apply_sequence, verify_sequence
from .diagram import DiagramError, goeritz, validate
from .documents import (
    DIAGRAM, GOERITZ, REPORT, Document, DocumentError, MoveScriptError, format_move,
    goeritz_document, parse_document, parse_moves, serialize,
)
from .goeritz import EquivariantGoeritz, det_identity
from .moves import MoveError
from .selftest import run_all
from .signature import SingularFormError, equivariant_parts

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_BOUND, EXIT_SELFTEST = 0, 1, 2, 3, 4


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _load_form(path: str) -> tuple[EquivariantGoeritz, Document]:
    doc = parse_document(_read(path))
    if doc.kind == GOERITZ:
        return doc.payload, doc
    if doc.kind == DIAGRAM:
        report = validate(doc.payload)
        if not report.ok:
            raise DomainError("invalid diagram:\n  " + "\n  ".join(map(str, report.violations)))
        return goeritz(doc.payload), doc
    raise DomainError(f"expected a Goeritz or diagram document, got {doc.kind}")


def _jline(rec: dict) -> str:
    return json.dumps(rec, ensure_ascii=False)


def cmd_compute(args, out) -> int:
    G, doc = _load_form(args.file)
    parts = equivariant_parts(G)
    chk = det_identity(G)
    rec = {
        "label": doc.label,
        "n": G.n,
        "sigma_plus": parts.sigma_plus,
        "sigma_minus": parts.sigma_minus,
        "e": parts.e,
        "sigma_tilde": parts.value,
        "det_plus": chk.det_plus,
        "det_minus": chk.det_minus,
        "det_full": chk.det_full,
        "det_identity": chk.identity_holds,
        "det_odd": chk.knot_like,
    }
    if doc.notes:
        rec["notes"] = doc.notes
    if args.json:
        print(_jline(rec), file=out)
        return EXIT_OK
    if doc.label:
        print(f"knot: {doc.label}", file=out)
    print(f"sigma(M+) = {parts.sigma_plus}", file=out)
    print(f"sigma(M-) = {parts.sigma_minus}", file=out)
    print(f"e = {parts.e}", file=out)
    print(f"equivariant signature = {parts.value}", file=out)
    print(f"det(M+) = {chk.det_plus}, det(M-) = {chk.det_minus}, det(M) = {chk.det_full}",
          file=out)
    print(f"det(M+)*det(M-) == 4^n*det(M): {'yes' if chk.identity_holds else 'NO'}", file=out)
    print(f"|det(M)| odd: {'yes' if chk.knot_like else 'no'}", file=out)
    if doc.notes:
        print(f"notes: {doc.notes}", file=out)
    return EXIT_OK


def cmd_apply(args, out) -> int:
    G, doc = _load_form(args.file)
    moves = parse_moves(args.moves)
    H = apply_sequence(G, moves)
    text = serialize(goeritz_document(H, notes=f"after: {'; '.join(map(format_move, moves))}"))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def _report_lines(report: BoundReport, as_json: bool) -> list[str]:
    lines = []
    for k, s in enumerate(report.steps, 1):
        rec = {"step": k, "move": format_move(s.move), "sigma_before": s.sigma_before,
               "sigma_after": s.sigma_after, "delta": s.delta, "bound": s.bound,
               "compliant": s.compliant}
        if as_json:
            lines.append(_jline(rec))
        else:
            mark = "ok" if s.compliant else "VIOLATION"
            lines.append(f"{k}. {rec['move']}: {s.sigma_before} -> {s.sigma_after} "
                         f"(delta {s.delta:+d}, bound {s.bound}) {mark}")
    lb = report.lower_bounds
    summary = {"label": report.label, "trajectory": report.trajectory,
               "final_sigma": report.final_sigma, "compliant": report.compliant,
               "uA_min": lb.uA_min, "uB_min": lb.uB_min, "uC_min": lb.uC_min,
               "homotopy_selfintersections_min": lb.homotopy_selfintersections_min}
    if as_json:
        lines.append(_jline(summary))
    else:
        lines.append("trajectory: " + " -> ".join(map(str, report.trajectory)))
        lines.append(f"compliant: {'yes' if report.compliant else 'NO'}")
        lines.append(f"lower bounds from |sigma~|={abs(report.initial_sigma)}:")
        for key in ("uA_min", "uB_min", "uC_min", "homotopy_selfintersections_min"):
            lines.append(f"  {key} = {getattr(lb, key)}  ({lb.caveats[key]})")
    return lines


def cmd_verify(args, out) -> int:
    G, doc = _load_form(args.file)
    moves = parse_moves(args.moves)
    report = verify_sequence(G, moves, max_delta=args.max_delta)
    for line in _report_lines(report, args.json):
        print(line, file=out)
    if args.report:
        Path(args.report).write_text(serialize(Document(REPORT, report, report.label)),
                                     encoding="utf-8")
    return EXIT_OK if report.compliant else EXIT_BOUND


def cmd_corpus(args, out) -> int:
    if args.action == "list":
        for name in corpus.names():
            e = corpus.get(name)
            flag = "  [discrepancy]" if e.has_discrepancy else ""
            print(f"{name}\tn={e.goeritz.n}\tsigma~={e.expected['sigma_tilde']}{flag}", file=out)
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise UsageError("corpus show needs a NAME")
        try:
            e = corpus.get(args.name)
        except KeyError as exc:
            raise DomainError(exc.args[0]) from None
        out.write(serialize(goeritz_document(e.goeritz, e.notes_text())))
        return EXIT_OK
    if not args.name:
        raise UsageError("corpus export needs a DIR")
    target = Path(args.name)
    target.mkdir(parents=True, exist_ok=True)
    for name in corpus.names():
        e = corpus.get(name)
        (target / f"{name}.json").write_text(
            serialize(goeritz_document(e.goeritz, e.notes_text())), encoding="utf-8")
    for name, build in corpus.DIAGRAMS.items():
        (target / f"{name}.diagram.json").write_text(
            serialize(Document(DIAGRAM, build(), name)), encoding="utf-8")
    print(f"wrote {len(corpus.names()) + len(corpus.DIAGRAMS)} documents to {target}", file=out)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    if args.trials < 1 or args.max_n < 1:
        raise UsageError("--trials and --max-n must be positive")
    results = run_all(args.trials, args.seed, args.max_n)
    for r in results:
        if args.json:
            print(_jline({"suite": r.name, "trials": r.trials, "failures": len(r.failures),
                          "ok": r.ok, "first_failure": r.failures[0] if r.failures else None}),
                  file=out)
        else:
            status = "ok" if r.ok else f"FAILED ({len(r.failures)})"
            print(f"{r.name}: {r.trials} trials {status}", file=out)
            for f in r.failures[:5]:
                print(f"  {f}", file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_SELFTEST


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eqsig", description="Equivariant signatures of strongly invertible knots.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="signatures, correction term and determinant checks")
    c.add_argument("file", help="Goeritz or diagram document ('-' for stdin)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    a = sub.add_parser("apply", help="apply a move script and write the new Goeritz document")
    a.add_argument("file")
    a.add_argument("--moves", required=True, help='e.g. "B k=1 sign=+1; C sign=+1 color=bicolored"')
    a.add_argument("--out")
    a.set_defaults(func=cmd_apply)

    v = sub.add_parser("verify", help="check per-move signature bounds along a move script")
    v.add_argument("file")
    v.add_argument("--moves", required=True)
    v.add_argument("--json", action="store_true")
    v.add_argument("--max-delta", type=int, default=None,
                   help="tighten every per-move bound to this value")
    v.add_argument("--report", help="also write a bound-report document here")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("corpus", help="embedded worked examples")
    k.add_argument("action", choices=["list", "show", "export"])
    k.add_argument("name", nargs="?", help="entry name (show) or directory (export)")
    k.set_defaults(func=cmd_corpus)

    s = sub.add_parser("selftest", help="randomised property suites")
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=err)
        print(f"eqsig: usage error: {exc}", file=err)
        return EXIT_USAGE
    except MoveScriptError as exc:
        print(f"eqsig: bad move script: {exc}", file=err)
        return EXIT_USAGE
    except (DomainError, DocumentError, DiagramError, MoveError, SingularFormError) as exc:
        print(f"eqsig: error: {exc}", file=err)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
