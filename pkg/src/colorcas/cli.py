"""Command-line front end.

Exit status: 0 success (degenerate forms are a flagged success), 1 a
mathematical check failed, 2 the input could not be read or understood.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_mod
from .casimir import DegenerateFormError
from .grading import GradingError
from .pipeline import (DEFAULT_MODES, all_passed, casimir_section, commutant_section, full_report,
                       loop_section, validation_section)
from .scalars import ScalarError, parse_scalar
from .specfile import SpecError, dump_spec, load_spec, problem_from_entry

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def resolve(source: str, m=None, n=None):
    """A spec file path or ``catalog:<name>``."""
    if source.startswith("catalog:"):
        name = source.split(":", 1)[1]
        try:
            entry = catalog_mod.build(name, m=m, n=n)
        except (KeyError, ValueError) as err:
            raise InputError(str(err).strip("'\"")) from None
        return problem_from_entry(entry)
    try:
        return load_spec(source)
    except SpecError as err:
        raise InputError(str(err)) from None


def parse_modes(text: str):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InputError(f"--modes expects lo..hi, got {text!r}") from None
    if lo > hi:
        raise InputError("--modes: empty window")
    return range(lo, hi + 1)


def emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _degree(p, text):
    try:
        return p.ctx.parse(text)
    except GradingError as err:
        raise InputError(str(err)) from None


def _validated(p):
    doc = validation_section(p)
    return doc, all_passed(doc) and "jacobi" in doc


def cmd_validate(args) -> int:
    p = resolve(args.source, args.m, args.n)
    doc, ok = _validated(p)
    doc = {"validation": doc, "ok": ok}
    emit(to_json(doc), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_commutant(args) -> int:
    p = resolve(args.source, args.m, args.n)
    val, ok = _validated(p)
    if not ok:
        emit(to_json({"validation": val, "ok": False}), args.out)
        return EXIT_FAIL
    if args.all or args.degree is None:
        degs = list(p.ctx.order)
    else:
        degs = [_degree(p, args.degree)]
    doc = {"commutants": [commutant_section(p, mu) for mu in degs]}
    emit(to_json(doc), args.out)
    return EXIT_OK


def cmd_casimir(args) -> int:
    p = resolve(args.source, args.m, args.n)
    if args.degree is None and not args.all:
        raise InputError("casimir needs --degree or --all")
    norm = None
    if args.normalization is not None:
        try:
            norm = parse_scalar(args.normalization, p.ctx.conductor)
        except ScalarError as err:
            raise InputError(f"--normalization: {err}") from None
        if norm.is_zero():
            raise InputError("--normalization must be nonzero")
    val, ok = _validated(p)
    if not ok:
        emit(to_json({"validation": val, "ok": False}), args.out)
        return EXIT_FAIL
    degs = list(p.ctx.order) if args.all else [_degree(p, args.degree)]
    sections = [casimir_section(p, mu, norm) for mu in degs]
    for s in sections:
        if s["commutant_dimension"] == 0:
            s["outcome"] = "no commutant of the opposite degree"
        elif all("degenerate" in f for f in s["forms"]):
            s["outcome"] = "degenerate form, no Casimir at this degree"
        else:
            s["outcome"] = "casimir"
    doc = {"casimirs": sections}
    doc["ok"] = all_passed(doc)
    emit(to_json(doc), args.out)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def cmd_loop_check(args) -> int:
    p = resolve(args.source, args.m, args.n)
    modes = parse_modes(args.modes) if args.modes else DEFAULT_MODES
    val, ok = _validated(p)
    if not ok:
        emit(to_json({"validation": val, "ok": False}), args.out)
        return EXIT_FAIL
    rep = loop_section(p, list(modes))
    emit(to_json({"loop_extension": rep, "ok": rep["ok"]}), args.out)
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def cmd_catalog(args) -> int:
    try:
        entry = catalog_mod.build(args.name, m=args.m, n=args.n)
    except (KeyError, ValueError) as err:
        raise InputError(str(err).strip("'\"")) from None
    emit(dump_spec(problem_from_entry(entry)), args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    p = resolve(args.source, args.m, args.n)
    modes = parse_modes(args.modes) if args.modes else DEFAULT_MODES
    doc = full_report(p, modes)
    emit(to_json(doc), args.out)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="colorcas", description="Graded Casimir elements and central extensions of color Lie algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, source=True):
        if source:
            sp.add_argument("source", help="spec file path or catalog:qn | catalog:z32-sl2 | catalog:osp")
        sp.add_argument("--m", type=int, default=None, help="osp parameter m")
        sp.add_argument("--n", type=int, default=None, help="q(n) size or osp parameter n")
        sp.add_argument("--out", default=None, help="write output to this file")

    sp = sub.add_parser("validate", help="factor laws, closure, antisymmetry, Jacobi")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("commutant", help="commutant kernels per degree")
    common(sp)
    sp.add_argument("--degree", default=None)
    sp.add_argument("--all", action="store_true")
    sp.set_defaults(func=cmd_commutant)

    sp = sub.add_parser("casimir", help="invariant form, inverse and Casimir of a degree")
    common(sp)
    sp.add_argument("--degree", default=None)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--normalization", default=None, help="scalar multiplying the color trace")
    sp.set_defaults(func=cmd_casimir)

    sp = sub.add_parser("loop-check", help="Jacobi identity of the centrally extended loop algebra")
    common(sp)
    sp.add_argument("--modes", default=None, help="mode window lo..hi (default -2..2)")
    sp.set_defaults(func=cmd_loop_check)

    sp = sub.add_parser("catalog", help="emit a built-in algebra as a spec file")
    sp.add_argument("name", choices=catalog_mod.CATALOG_NAMES)
    common(sp, source=False)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("report", help="full analysis document")
    common(sp)
    sp.add_argument("--modes", default=None, help="mode window lo..hi (default -2..2)")
    sp.set_defaults(func=cmd_report)
    return ap


def _glue_modes(argv):
    # "--modes -2..2" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--modes":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--modes={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = _glue_modes(sys.argv[1:] if argv is None else list(argv))
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as err:
        sys.stderr.write(f"colorcas: {err}\n")
        return EXIT_INPUT
    except DegenerateFormError as err:  # should not escape the pipeline, but keep the contract
        sys.stderr.write(f"colorcas: {err}\n")
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
