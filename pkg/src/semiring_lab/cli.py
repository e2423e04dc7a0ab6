"""Command-line interface: ``semiring-lab {check,verify,lattice,enumerate,witness}``.

Exit codes:
    0  success
    1  verification found a failing theorem check
    2  input is not a well-formed semiring document (position reported)
    3  tables are well formed but violate a semiring axiom
    4  a resource guard or precondition refused the request
    64 command-line usage error
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import catalog, classify, enumeration, serialize, symbolic, theorems
from .core import AxiomError, FiniteSemiring
from .enumeration import OrderGuardError
from .ideals import ResourceLimitError, all_ideals, hasse_dot, prime_ideals
from .verdict import PreconditionError, Verdict

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_SCHEMA = 2
EXIT_AXIOM = 3
EXIT_LIMIT = 4
EXIT_USAGE = 64

FILTERS = {
    "semidomain": lambda S: classify.FINITE_CHECKS["semidomain"](S).holds,
    "local": lambda S: classify.FINITE_CHECKS["local"](S).holds,
    "uniserial": lambda S: classify.FINITE_CHECKS["uniserial"](S).holds,
}

SYMBOLIC_ALIASES = {
    "lop-cond5": "lop_cond5",
    "valuation": "valuation",
    "gcd": "gcd",
    "divided-cond4": "divided_cond4",
    "strongly-prime-m": "strongly_prime_m",
    "pvs": "pvs",
    "pvs-char1": "strongly_prime_m",
    "subsetlocal": "subsetlocal",
    "thmlop": "thmlop",
    "xinverse": "xinverse",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep exit code 2 for schema errors only
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _bound(n: int | None) -> symbolic.Bound:
    return symbolic.DEFAULT_BOUND if n is None else symbolic.Bound(n, n)


def _is_symbolic(target: str) -> bool:
    return target in symbolic.INSTANCES and not Path(target).exists()


def _load(target: str) -> FiniteSemiring:
    if not Path(target).exists() and target in catalog.CATALOG_FILES:
        return catalog.load(target)
    try:
        S = serialize.load(target)
    except OSError as e:
        raise serialize.SchemaError(f"cannot read {target}: {e.strerror}") from e
    if not S.name:
        S = S.relabel(tuple(S.elements), name=Path(target).stem)
    return S


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _compact(table) -> str:
    return json.dumps([list(r) for r in table], separators=(",", ":"))


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ------------------------------------------------------------------ commands


def cmd_check(args: argparse.Namespace) -> int:
    if _is_symbolic(args.target):
        D = symbolic.instance(args.target)
        verdicts = symbolic.symbolic_profile(D, _bound(args.bound))
        if args.format == "json":
            text = _dump({"name": D.name, **{k: classify.verdict_json(v) for k, v in verdicts.items()}})
        else:
            lines = [f"{D.name} (symbolic, {_bound(args.bound).describe()})"]
            lines += [f"  {k:<16} {classify.verdict_text(v)}" for k, v in verdicts.items()]
            text = "\n".join(lines) + "\n"
        _emit(text, args.out)
        return EXIT_OK
    S = _load(args.target)
    prof = classify.profile(S)
    _emit(_dump(prof.to_json()) if args.format == "json" else prof.to_text(), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    structures: list[FiniteSemiring] = []
    for n in range(2, args.order + 1):
        structures.extend(enumeration.enumerate_semirings(n, workers=args.workers))
    if not args.no_catalog:
        structures.extend(catalog.load_catalog())
    if args.filter:
        structures = [S for S in structures if FILTERS[args.filter](S)]
    sym = [] if args.no_symbolic else [symbolic.instance(k) for k in sorted(symbolic.INSTANCES)]
    report = theorems.run_suite(structures, sym, _bound(args.bound), args.mutate, args.workers)
    if not report.reports:
        print("warning: 0 structures to verify", file=sys.stderr)
    _emit(report.dumps() if args.format == "json" else report.to_text(), args.out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_lattice(args: argparse.Namespace) -> int:
    S = _load(args.target)
    ideals = prime_ideals(S) if args.primes else all_ideals(S)
    if args.format == "dot":
        text = hasse_dot(S, primes_only=args.primes)
    elif args.format == "json":
        text = _dump({"name": S.name, "ideals": [a.label() for a in ideals]})
    else:
        text = "".join(a.label() + "\n" for a in ideals)
    _emit(text, args.out)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    pred = FILTERS[args.filter] if args.filter else None
    found = list(enumeration.enumerate_semirings(args.order, pred, args.strategy, args.workers))
    if args.format == "json":
        text = "".join(serialize.dumps(S, labels=False) + "\n" for S in found)
    else:
        text = "".join(f"{S.name} zero={S.zero} one={S.one} add={_compact(S.add)} mul={_compact(S.mul)}\n"
                       for S in found)
    _emit(text, args.out)
    total = enumeration.count(args.order, args.strategy) if pred else len(found)
    scope = f", {len(found)} pass filter {args.filter}" if pred else ""
    print(f"order {args.order}: {total} semirings up to isomorphism{scope}", file=sys.stderr)
    return EXIT_OK


def witness_line(v: Verdict, S: FiniteSemiring | None = None) -> str:
    if v.holds:
        return "none (Holds)"
    if v.fails:
        return classify.render_text(v.witness, S)
    return f"unknown ({v.bound_note})"


def cmd_witness(args: argparse.Namespace) -> int:
    prop = args.property
    if _is_symbolic(args.target):
        key = SYMBOLIC_ALIASES.get(prop)
        if key is None:
            raise UsageError(f"property {prop!r} has no symbolic check; choose from {', '.join(SYMBOLIC_ALIASES)}")
        D = symbolic.instance(args.target)
        v = symbolic.SYMBOLIC_CHECKS[key](D, _bound(args.bound))
        S = None
    else:
        key = classify.PROPERTY_ALIASES.get(prop)
        if key is None:
            raise UsageError(f"unknown property {prop!r}; choose from {', '.join(classify.PROPERTY_ALIASES)}")
        S = _load(args.target)
        v = classify.FINITE_CHECKS[key](S)
    _emit(witness_line(v, S) + "\n", args.out)
    return EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semiring-lab", description="Finite and symbolic semiring classification.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("json", "text"), default="text"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    c = sub.add_parser("check", help="print the property profile of a semiring")
    c.add_argument("target", help="JSON file, catalog key, or naturals/tropical")
    c.add_argument("--bound", type=_positive, help="search bound for symbolic instances")
    common(c)
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="cross-check the theorem suite over a corpus")
    v.add_argument("--order", type=_positive, default=4, help="enumerate all orders up to this one")
    v.add_argument("--bound", type=_positive, help="search bound for symbolic instances")
    v.add_argument("--filter", choices=sorted(FILTERS))
    v.add_argument("--no-catalog", action="store_true")
    v.add_argument("--no-symbolic", action="store_true")
    v.add_argument("--mutate", metavar="NAME", choices=sorted(theorems.MUTATION_TARGETS),
                   help="negate one named predicate (suite should then fail)")
    v.add_argument("--workers", type=_positive, default=1)
    common(v)
    v.set_defaults(func=cmd_verify)

    la = sub.add_parser("lattice", help="ideal lattice as DOT (or text/json)")
    la.add_argument("target")
    la.add_argument("--primes", action="store_true", help="prime ideals only")
    common(la, ("dot", "json", "text"), "dot")
    la.set_defaults(func=cmd_lattice)

    e = sub.add_parser("enumerate", help="all semirings of one order up to isomorphism")
    e.add_argument("--order", type=_positive, required=True)
    e.add_argument("--filter", choices=sorted(FILTERS))
    e.add_argument("--strategy", choices=enumeration.STRATEGIES, default="backtrack")
    e.add_argument("--workers", type=_positive, default=1)
    common(e, ("json", "text"), "json")
    e.set_defaults(func=cmd_enumerate)

    w = sub.add_parser("witness", help="print the witness for one property")
    w.add_argument("target")
    w.add_argument("property", help="e.g. lop-cond5, valuation, subsetlocal")
    w.add_argument("--bound", type=_positive)
    w.add_argument("--out", metavar="PATH")
    w.set_defaults(func=cmd_witness)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except serialize.SchemaError as e:
        where = f" at {e.position}" if e.position else ""
        print(f"schema error{where}: {e.message}", file=sys.stderr)
        return EXIT_SCHEMA
    except AxiomError as e:
        print("axiom violation:", file=sys.stderr)
        for name, wit in e.report.violations:
            print(f"  {name}: {classify.render_text(wit)}", file=sys.stderr)
        return EXIT_AXIOM
    except (ResourceLimitError, OrderGuardError, PreconditionError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except UsageError as e:
        print(f"semiring-lab: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
