"""Command line front end: ``mcat <command> ...`` or ``python -m mcat``.

Exit codes: 0 pass within budget, 1 counterexample, 2 input error or
unknown theorem id, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import itertools
import sys
from collections import Counter

from . import analysis, homs, models, reporting
from .core import (COUNTEREXAMPLE, EXHAUSTED, PASS, Budget, BudgetError, InputError, McatError,
                   ValidationReport, hom, signatures)
from .descriptions import load_backend
from .fixtures import catalog
from .laws import validate_all, validate_cartesian, validate_multicat, validate_symmetric
from .theorems import SUITES, backend, category, run_theorem

EXIT = {PASS: 0, COUNTEREXAMPLE: 1, EXHAUSTED: 3}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcat", description="Finite multicategories, checked within a budget.")
    p.add_argument("--budget-arity", type=int, default=None, help="maximum arity (default 3)")
    p.add_argument("--budget-depth", type=int, default=None, help="maximum nesting depth (default 2)")
    p.add_argument("--budget-enum", type=int, default=None, help="maximum hom-set enumeration (default 10000)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--fixtures", action="store_true", help="list the built-in fixture catalog")
    sub = p.add_subparsers(dest="command")

    v = sub.add_parser("validate", help="run the axiom suites on a backend")
    v.add_argument("input", help="catalog key or description path")
    v.add_argument("--suite", choices=("all", "multicat", "symmetric", "cartesian"), default="all")
    v.add_argument("--view", choices=("seq", "unary"), default=None,
                   help="how to read a category description (default seq)")
    v.add_argument("--check-witness", metavar="REPORT",
                   help="replay the counterexample of a structured report instead of sweeping")

    t = sub.add_parser("theorem", help="run a named theorem suite")
    t.add_argument("id", help=", ".join([*SUITES, "all"]))
    t.add_argument("inputs", nargs="*", help="instances; 'A:B' for two-argument suites")

    c = sub.add_parser("construct", help="build a backend and tabulate hom-set sizes")
    c.add_argument("input")
    c.add_argument("--view", choices=("seq", "unary"), default=None)

    h = sub.add_parser("hom", help="internal hom [M, N] or sequential exponent")
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--exp", choices=("seq",), default=None, help="N^(C_seq) for a category C")
    h.add_argument("--fp", action="store_true", help="fp-functors only")

    m = sub.add_parser("monoids", help="commutative monoids in a backend")
    m.add_argument("input")

    r = sub.add_parser("products", help="product witnesses in a cartesian backend")
    r.add_argument("input")
    r.add_argument("--family", default=None, help="comma separated objects (default: all binary families)")

    o = sub.add_parser("models", help="models of a theory in finite sets")
    o.add_argument("input")
    o.add_argument("--size", type=int, default=2)
    o.add_argument("--classes", action="store_true", help="also group models up to isomorphism")
    return p


# -- commands -----------------------------------------------------------------------------

def cmd_validate(args, b):
    M = load_backend(args.input, args.view)
    if args.check_witness:
        block = reporting.load_replay(args.check_witness)
        report = ValidationReport(f"replay {block['law']}", b, details={"backend": M.name})
        report.checked = 1
        if reporting.replay_witness(M, block):
            report.outcome = COUNTEREXAMPLE
            report.witness = {"law": block["law"], "reproduced": True}
        return report, None
    suites = {"multicat": validate_multicat, "symmetric": validate_symmetric,
              "cartesian": validate_cartesian, "all": validate_all}
    report = suites[args.suite](M, b)
    return report, M


def cmd_theorem(args, b):
    if args.id != "all" and args.id not in SUITES:
        raise InputError(f"unknown theorem id {args.id!r}; known: {', '.join(SUITES)}")
    return run_theorem(args.id, args.inputs, b), None


def _count_table(M, b, max_arity: int) -> tuple[dict, bool]:
    table, truncated = {}, False
    for sig in signatures(M, max_arity):
        hs = hom(M, sig, b)
        truncated |= hs.truncated
        table[str(sig)] = f"{len(hs)}+" if hs.truncated else len(hs)
    return table, truncated


def cmd_construct(args, b):
    M = load_backend(args.input, args.view)
    report = ValidationReport("construct", b, details={
        "backend": M.name, "objects": [str(x) for x in M.objects],
        "symmetric": M.symmetric, "cartesian": M.cartesian})
    table, truncated = _count_table(M, b, b.max_arity)
    report.details["hom cardinalities"] = table
    report.checked = len(table)
    if truncated:
        report.outcome = EXHAUSTED
    return report, None


def cmd_hom(args, b):
    N = backend(args.target)
    if args.exp == "seq":
        H = homs.seq_exponent(category(args.source), N, b)
    elif args.fp:
        H = homs.fp_hom(backend(args.source), N, b)
    else:
        H = homs.internal_hom(backend(args.source), N, b)
    report = ValidationReport("hom", b, details={"backend": H.name, "objects": [str(F) for F in H.objects]})
    by_arity = {}
    unary = {}
    for n in range(b.max_arity + 1):
        total = 0
        for dom in itertools.product(H.objects, repeat=n):
            for G in H.objects:
                k = sum(1 for _ in H.iter_hom(dom, G))
                total += k
                if n == 1:
                    unary[f"{dom[0]} -> {G}"] = k
        by_arity[str(n)] = total
        report.checked += len(H.objects) ** (n + 1)
    report.details["arrows by arity"] = by_arity
    report.details["unary hom cardinalities"] = unary
    return report, None


def cmd_monoids(args, b):
    M = backend(args.input)
    H = homs.monoid_mcat(M, b)
    listing = []
    for F in H.objects:
        m2, m0, carrier = homs.monoid_structure(F)
        listing.append({"monoid": F.label, "carrier": str(carrier), "unit": str(m0.value),
                        "multiplication": str(m2.value)})
    report = ValidationReport("commutative monoids", b,
                              details={"backend": M.name, "count": len(listing), "monoids": listing})
    report.checked = len(listing)
    return report, None


def _parse_family(M, text: str) -> tuple:
    names = {str(x): x for x in M.objects}
    fam = []
    for tok in (t.strip() for t in text.split(",")) if text.strip() else ():
        if tok not in names:
            raise InputError(f"unknown object {tok!r}; objects are {', '.join(names)}")
        fam.append(names[tok])
    return tuple(fam)


def cmd_products(args, b):
    M = backend(args.input)
    fams = [_parse_family(M, args.family)] if args.family is not None else \
        [f for f in analysis.families(M, 2) if len(f) == 2]
    report = ValidationReport("products", b, details={"backend": M.name})
    found = {}
    for fam in fams:
        report.checked += 1
        w = analysis.algebraic_product_search(M, fam, b)
        key = "(" + ", ".join(map(str, fam)) + ")"
        if w is None:
            found[key] = None
        else:
            found[key] = {"C": str(w.C), "projections": [str(p) for p in w.projections], "u": str(w.u)}
    report.details["witnesses"] = found
    return report, None


def cmd_models(args, b):
    T = backend(args.input)
    ms = models.enumerate_models(T, args.size, b)
    report = ValidationReport("models", b, details={"theory": T.name, "size cap": args.size, "models": len(ms)})
    report.checked = len(ms)
    report.details["by carriers"] = {
        str(k): v for k, v in sorted(Counter(tuple(sorted(m.carriers.items(), key=repr)) for m in ms).items(),
                                     key=lambda kv: repr(kv[0]))}
    if args.classes:
        classes = models.iso_classes(ms, b)
        report.details["iso classes"] = len(classes)
        report.details["class sizes"] = [len(c) for c in classes]
    return report, None


COMMANDS = {"validate": cmd_validate, "theorem": cmd_theorem, "construct": cmd_construct,
            "hom": cmd_hom, "monoids": cmd_monoids, "products": cmd_products, "models": cmd_models}


def _inputs(args) -> list:
    out = []
    for key in ("input", "id", "source", "target"):
        if getattr(args, key, None) is not None:
            out.append(getattr(args, key))
    return out + list(getattr(args, "inputs", []) or [])


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    if args.fixtures:
        for k, text in catalog().items():
            print(f"{k:6} {text}")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        b = Budget.from_env(max_arity=args.budget_arity, max_depth=args.budget_depth,
                            max_enum=args.budget_enum)
        report, M = COMMANDS[args.command](args, b)
        code = EXIT[report.outcome]
    except BudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (McatError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    if args.format == "structured":
        block = reporting.replay_block(M, report) if code == 1 else None
        sys.stdout.write(reporting.dumps(reporting.document(args.command, _inputs(args), report, code, block)))
    else:
        print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
