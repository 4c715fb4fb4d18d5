"""Command-line interface.

Exit codes: 0 success (``compare``: equivalent), 1 inequivalent, 2 resource
cap reached, 64 usage error, 65 unreadable or invalid input document.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import datasets, zvk
from .groups import DEFAULT_CAP, ResourceCapExceeded, centralizer, closure
from .hurwitz import (EQUIVALENT, INEQUIVALENT, OrbitConfig, apply_rep_tuple,
                      compare_tuples, orbit_size, pseudo_coxeter)
from .representations import hurwitz_rep

EXIT_EQUIVALENT, EXIT_INEQUIVALENT, EXIT_CAP = 0, 1, 2
EXIT_USAGE, EXIT_DATA = 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hurwitzmon", description="Braid monodromy invariants via Hurwitz orbits.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def common(sp, rep_required=True):
        sp.add_argument("--rep", required=rep_required,
                        help="sl2mod:<m>, sym:<d>, or a representation JSON file")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="resource cap on enumerated elements (default %(default)s)")
        sp.add_argument("--threads", type=int, default=1,
                        help="parallelism hint (enumeration currently runs single-threaded)")

    sp = sub.add_parser("compare", help="decide (in)equivalence of two monodromies")
    common(sp)
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--json", metavar="OUT", help="also write the report as JSON")
    sp.add_argument("--no-early-exit", action="store_true",
                    help="enumerate the whole orbit even after a match")

    sp = sub.add_parser("orbit", help="size of the Hurwitz orbit of a monodromy")
    common(sp, rep_required=False)
    sp.add_argument("doc")
    sp.add_argument("--conj", choices=["centralizer", "none"], default="centralizer")

    sp = sub.add_parser("coxeter", help="print the pseudo-Coxeter element")
    common(sp, rep_required=False)
    sp.add_argument("doc")

    sp = sub.add_parser("present", help="fundamental group presentation")
    sp.add_argument("doc")
    sp.add_argument("--variant", choices=sorted(zvk.PRESENTATIONS), default="affine")
    sp.add_argument("--format", choices=["plain", "gap"], default="plain")
    sp.add_argument("--abelianize", action="store_true", help="also print the abelianization")
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("rep-info", help="describe a representation or a Hurwitz representation")
    common(sp, rep_required=False)
    sp.add_argument("--hurwitz", metavar="TUPLE", help="tuple document (file or @name)")
    sp.add_argument("--quotient", action="store_true",
                    help="act on tuples up to simultaneous conjugation")

    sp = sub.add_parser("dataset", help="print a built-in dataset")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("-o", "--output")
    return p


def _tuple_for(doc_ref: str, rep_spec: str | None):
    """Labeled tuple of a tuple document, or the image of a monodromy."""
    doc = datasets.load(doc_ref)
    if doc.get("kind") == "tuple":
        return datasets.to_tuple(doc), None
    if rep_spec is None:
        raise UsageError("--rep is required for monodromy documents")
    rep = datasets.parse_rep(rep_spec)
    M = datasets.to_factorization(doc)
    if M.strands != rep.strands:
        raise UsageError(f"{doc_ref} has {M.strands} strands, representation has {rep.strands}")
    return apply_rep_tuple(rep, M), rep


def _ambient_group(t, rep, cap):
    if rep is not None:
        return rep.image_group(cap=cap)
    return closure(t.elements, cap=cap)


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compare(args) -> int:
    t1, rep = _tuple_for(args.first, args.rep)
    t2, _ = _tuple_for(args.second, args.rep)
    if t1.r != t2.r:
        raise UsageError(f"tuples have different lengths ({t1.r} and {t2.r})")
    G = _ambient_group(t1, rep, args.cap)
    config = OrbitConfig(cap=args.cap, early_exit=not args.no_early_exit)
    report = compare_tuples(t1, t2, G, config)
    print(report)
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    return {EQUIVALENT: EXIT_EQUIVALENT, INEQUIVALENT: EXIT_INEQUIVALENT}.get(report.verdict, EXIT_CAP)


def cmd_orbit(args) -> int:
    t, rep = _tuple_for(args.doc, args.rep)
    G = _ambient_group(t, rep, args.cap)
    H = centralizer(G, pseudo_coxeter(t)) if args.conj == "centralizer" else None
    try:
        tuples, classes = orbit_size(t, H, G, cap=args.cap)
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}")
        return EXIT_CAP
    if H is None:
        print(f"orbit size {tuples}")
    else:
        print(f"orbit size {tuples} (conjugation by centralizer of order {len(H)}: {classes} classes)")
    return 0


def cmd_coxeter(args) -> int:
    t, _ = _tuple_for(args.doc, args.rep)
    c = pseudo_coxeter(t)
    print(c)
    return 0


def cmd_present(args) -> int:
    M = datasets.to_factorization(datasets.load(args.doc, "monodromy"))
    try:
        P = zvk.PRESENTATIONS[args.variant](M)
    except NotImplementedError as exc:
        raise UsageError(str(exc)) from None
    text = zvk.export_presentation(P, args.format)
    if args.abelianize:
        text += f"# abelianization: {zvk.abelianization(P)}\n"
    _write(text, args.output)
    return 0


def cmd_rep_info(args) -> int:
    if args.hurwitz:
        doc = datasets.load(args.hurwitz, "tuple")
        t = datasets.to_tuple(doc)
        res = hurwitz_rep(t.elements, quotient=args.quotient, cap=args.cap)
        print(f"orbit {res.orbit_size}, group order {res.group_order}")
        return 0
    if not args.rep:
        raise UsageError("rep-info needs --rep or --hurwitz")
    rep = datasets.parse_rep(args.rep)
    print(f"strands: {rep.strands}")
    for i, g in enumerate(rep.images, 1):
        print(f"sigma_{i} -> {g}")
    print(f"image group order: {len(rep.image_group(cap=args.cap))}")
    return 0


def cmd_dataset(args) -> int:
    if args.list or not args.name:
        print("\n".join(datasets.dataset_names()))
        return 0
    name = args.name.lstrip("@")
    try:
        doc = datasets.dataset(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    _write(datasets.serialize(doc), args.output)
    return 0


COMMANDS = {
    "compare": cmd_compare,
    "orbit": cmd_orbit,
    "coxeter": cmd_coxeter,
    "present": cmd_present,
    "rep-info": cmd_rep_info,
    "dataset": cmd_dataset,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hurwitzmon: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except datasets.DocumentError as exc:
        print(f"hurwitzmon: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ResourceCapExceeded as exc:
        print(f"hurwitzmon: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
