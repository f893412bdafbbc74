"""Command line interface.

Verbs:
  table GROUP           print the complex character table
  classify E            run the classification for e = E
  check-gagola GROUP    run the certificate battery on a group
  verify-brauer GROUP   compare both virtual-character detection routes
                        on seeded class functions
  catalog ORDER         list the catalog entries for one order
  bounds E              print the exact order-bound chain

GROUP is a constructor spec such as frobenius:q=5, symplectic:p=3,w=1,
catalog:54/8, or cayley:/path/to/table.txt.  Exit status is 0 on
success, 1 on usage errors (bad arguments, unsupported parameters) and
2 when a requested check fails.
"""
from __future__ import annotations

import argparse
import json
import sys

from .brauer import random_class_functions, virtuality_agreement
from .chartable import dixon_char_table
from .classify import bound_chain, classify_e, describe_group
from .config import BRAUER_AGREEMENT_COUNT
from .errors import (
    ChardegError,
    InternalInconsistency,
    NotAGroup,
    NotPrime,
    NotPrimePower,
    OrderBoundExceeded,
    PreconditionViolated,
    UnsupportedE,
    UnsupportedOrder,
)
from .families import group_from_spec, small_group_catalog
from .gagola import check_conditions
from .schemas import jsonable

__all__ = ["main"]

_USAGE_ERRORS = (UnsupportedOrder, UnsupportedE, NotPrime, NotPrimePower,
                 OrderBoundExceeded, PreconditionViolated)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad arguments; reserve 2 for failed checks."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(jsonable(payload), indent=2, sort_keys=True))
    else:
        print(text)


def _render_table(table) -> str:
    data = table.classes
    cells = [["class"] + [str(c) for c in range(data.count)],
             ["size"] + [str(s) for s in data.sizes],
             ["order"] + [str(o) for o in data.rep_orders]]
    for i, chi in enumerate(table.irreducibles):
        cells.append([f"X{i}"] + [str(v) for v in chi.values])
    widths = [max(len(row[c]) for row in cells) for c in range(data.count + 1)]
    lines = [f"group {table.group.name}  order {table.group.order}  "
             f"classes {data.count}"]
    for r, row in enumerate(cells):
        lines.append("  ".join(s.rjust(w) for s, w in zip(row, widths)))
        if r == 2:
            lines.append("-" * (sum(widths) + 2 * data.count))
    return "\n".join(lines)


def _cmd_table(args) -> int:
    G = group_from_spec(args.group)
    table = dixon_char_table(G, args.order_bound)
    _emit(args, table.to_json_dict(), _render_table(table))
    return 0


def _cmd_classify(args) -> int:
    rep = classify_e(args.e, args.order_bound)
    _emit(args, rep.to_json_dict(), rep.render_text())
    return 0


def _cmd_check_gagola(args) -> int:
    G = group_from_spec(args.group)
    cert = check_conditions(G, bound=args.order_bound)
    lines = [f"group {cert.group_name}  n={cert.n}  d={cert.d}  e={cert.e}  "
             f"p={cert.p}  k={cert.k}  m={cert.m}"]
    for c in cert.conditions:
        lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.cid}")
    lines.append(f"  [{'pass' if cert.character_degree_check else 'FAIL'}] "
                 "degree-identity")
    lines.append("certificate " + ("PASSED" if cert.passed else "FAILED"))
    _emit(args, cert.to_json_dict(), "\n".join(lines))
    return 0 if cert.passed else 2


def _cmd_verify_brauer(args) -> int:
    G = group_from_spec(args.group)
    table = dixon_char_table(G, args.order_bound)
    kwargs = {"count": args.count}
    if args.seed is not None:
        kwargs["seed"] = args.seed
    thetas = random_class_functions(G, **kwargs)
    virtual = sum(int(virtuality_agreement(theta, table, args.order_bound))
                  for theta in thetas)
    payload = {"group": G.name, "functions": len(thetas),
               "virtual": virtual, "agreement": True}
    _emit(args, payload,
          f"group {G.name}: both routes agree on {len(thetas)} class "
          f"functions ({virtual} virtual)")
    return 0


def _cmd_catalog(args) -> int:
    groups = small_group_catalog(args.order)
    entries = [describe_group(G, args.order_bound) for G in groups]
    lines = [f"{len(groups)} groups of order {args.order}"]
    for entry in entries:
        kind = "abelian" if entry["abelian"] else "nonabelian"
        degs = ",".join(str(d) for d in entry["degrees"])
        lines.append(f"  {entry['name']}  {kind}  exponent "
                     f"{entry['exponent']}  degrees {degs}")
    _emit(args, {"order": args.order, "groups": entries}, "\n".join(lines))
    return 0


def _cmd_bounds(args) -> int:
    chain = bound_chain(args.e)
    if chain["applicable"]:
        text = (f"e = {args.e}: n <= ((2e)!)^2 = {chain['order_bound']} "
                f"<= e^(4e^2) = {chain['crude_bound']}")
    else:
        text = f"e = {args.e}: no bound chain below e = 2"
    _emit(args, chain, text)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="chardeg", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--order-bound", type=int, default=None,
                        help="cap on group orders for heavy enumeration")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", parents=[common],
                       help="character table of one group")
    p.add_argument("group")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("classify", parents=[common],
                       help="classification for one value of e")
    p.add_argument("e", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check-gagola", parents=[common],
                       help="condition battery for one group")
    p.add_argument("group")
    p.set_defaults(func=_cmd_check_gagola)

    p = sub.add_parser("verify-brauer", parents=[common],
                       help="dual-route virtuality comparison")
    p.add_argument("group")
    p.add_argument("--count", type=int, default=BRAUER_AGREEMENT_COUNT)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_verify_brauer)

    p = sub.add_parser("catalog", parents=[common],
                       help="list the groups of one catalog order")
    p.add_argument("order", type=int)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("bounds", parents=[common],
                       help="exact order-bound chain for one e")
    p.add_argument("e", type=int)
    p.set_defaults(func=_cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"chardeg: {exc}", file=sys.stderr)
        return 1
    except (NotAGroup, InternalInconsistency) as exc:
        print(f"chardeg: check failed: {exc}", file=sys.stderr)
        return 2
    except ChardegError as exc:
        print(f"chardeg: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, ValueError) as exc:
        print(f"chardeg: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
