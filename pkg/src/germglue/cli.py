"""Command-line front end.

Verbs: invariants, betti, poincare, glue, classify, criteria, verify.
Exit codes: 0 success, 1 formula failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import mora
from .criteria import structure_report
from .errors import GermAlgebraError, ResourceLimitError
from .germio import format_germ, load_workspace
from .germs import origin_subspace
from .gluing import GluingDatum, fiber_product_presentation, glued_dim
from .largeness import GluingData, classify_gluing
from .resolution import betti_numbers
from .series import format_series
from .verify import verify_gluing

SCHEMA_VERSION = 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="germglue",
        description="Exact invariants and gluings of analytic space germs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, trunc=False):
        p.add_argument("-i", "--input", action="append", required=True,
                       metavar="FILE", help="germ description file (repeatable)")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--out", metavar="FILE",
                       help="write the report here instead of stdout")
        p.add_argument("--step-cap", type=int, default=mora.DEFAULT_STEP_CAP,
                       help="reduction step cap (resource guard)")
        if trunc:
            p.add_argument("--trunc", type=int, default=6,
                           help="series truncation order (>= 3)")

    p = sub.add_parser("invariants", help="direct invariants of one germ")
    common(p)
    p.add_argument("germ")

    for verb in ("betti", "poincare"):
        p = sub.add_parser(verb, help=f"{verb} of a subspace over its germ")
        common(p, trunc=True)
        p.add_argument("germ")
        p.add_argument("--subspace", help="workspace subspace (default: origin)")

    for verb in ("glue", "classify", "criteria", "verify"):
        p = sub.add_parser(verb)
        common(p, trunc=True)
        p.add_argument("X")
        p.add_argument("Y")
        p.add_argument("Z")
        p.add_argument("alpha", help="map X -> Z")
        p.add_argument("beta", help="map Y -> Z")
        if verb == "glue":
            p.add_argument("--name", help="name of the glued germ")
        if verb == "verify":
            p.add_argument("--jmax", type=int, default=4,
                           help="largest convolution index (<= trunc)")
    return parser


def _emit(args, text, payload):
    if args.format == "json":
        text = json.dumps({"schema": SCHEMA_VERSION, "verb": args.verb,
                           **payload}, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _datum(ws, args):
    X, Y, Z = ws.germ(args.X), ws.germ(args.Y), ws.germ(args.Z)
    alpha, beta = ws.map(args.alpha), ws.map(args.beta)
    self_glue = args.X == args.Y and args.alpha == args.beta
    return GluingDatum(X, Y, Z, alpha, beta, is_self_glue=self_glue)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trunc", None) is not None and args.trunc < 3:
        parser.error("--trunc must be at least 3")
    if getattr(args, "jmax", None) is not None and args.jmax > args.trunc:
        parser.error("--jmax must not exceed --trunc")
    mora.DEFAULT_STEP_CAP = args.step_cap
    try:
        ws = load_workspace(args.input)
        return _dispatch(args, ws)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (GermAlgebraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, ws):
    if args.verb == "invariants":
        report = structure_report(ws.germ(args.germ))
        d = report.as_dict()
        lines = [f"germ {d['germ']}",
                 f"edim {d['edim']}  dim {d['dim']}  depth {d['depth']}  "
                 f"type {d['type']}"]
        flags = ", ".join(k for k, v in d["flags"].items() if v)
        lines.append(f"flags: {flags}")
        _emit(args, "\n".join(lines), {"report": d})
        return 0

    if args.verb in ("betti", "poincare"):
        germ = ws.germ(args.germ)
        sub = ws.subspace(args.subspace) if args.subspace \
            else origin_subspace(germ)
        table = betti_numbers(germ, sub, args.trunc)
        if args.verb == "betti":
            _emit(args, str(table),
                  {"germ": germ.name, "subspace": sub.name,
                   "betti": list(table.betas), "truncation": table.truncation})
        else:
            series = table.poincare()
            _emit(args, format_series(series),
                  {"germ": germ.name, "subspace": sub.name,
                   "coefficients": [str(c) for c in series.coeffs],
                   "truncation": series.truncation})
        return 0

    datum = _datum(ws, args)
    glued = fiber_product_presentation(datum, name=getattr(args, "name", None))

    if args.verb == "glue":
        value, ok = glued_dim(glued)
        report = classify_gluing(glued, truncation=args.trunc)
        text = format_germ(glued.presentation)
        summary = (f"# dim {value} "
                   f"({'matches' if ok else 'VIOLATES'} max(dim X, dim Y))\n"
                   f"# weakly large: {report.weakly_large}  "
                   f"large: {report.large}  "
                   f"strongly large: {report.strongly_large}\n")
        _emit(args, summary + text,
              {"germ_file": text, "dim": value, "dim_law": ok,
               "classification": report.as_dict()})
        return 0 if ok else 1

    if args.verb == "classify":
        report = classify_gluing(glued, truncation=args.trunc)
        lines = [f"weakly large:   {report.weakly_large}",
                 f"large:          {report.large}",
                 f"strongly large: {report.strongly_large}"]
        lines += [f"  note: {n}" for n in report.notes]
        _emit(args, "\n".join(lines), {"classification": report.as_dict()})
        return 0

    if args.verb == "criteria":
        data = GluingData(glued, args.trunc)
        report = structure_report(glued.presentation, data.counter)
        d = report.as_dict()
        lines = [f"glued germ {d['germ']}",
                 f"edim {d['edim']}  dim {d['dim']}  depth {d['depth']}  "
                 f"type {d['type']}"]
        flags = ", ".join(k for k, v in d["flags"].items() if v)
        lines.append(f"flags: {flags}")
        _emit(args, "\n".join(lines), {"report": d})
        return 0

    if args.verb == "verify":
        lines, ok = verify_gluing(glued, truncation=args.trunc, jmax=args.jmax)
        text = "\n".join(str(line) for line in lines)
        text += f"\n{'all applicable formulas PASS' if ok else 'FAILURES present'}"
        _emit(args, text,
              {"lines": [{"name": l.name, "status": l.status,
                          "detail": l.detail} for l in lines],
               "ok": ok})
        return 0 if ok else 1

    raise AssertionError(f"unhandled verb {args.verb!r}")


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
