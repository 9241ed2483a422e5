"""Command line interface.

Exit codes: 0 all pass, 1 a check or queried predicate failed,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import derivations, predicates, report as report_mod, sets
from .errors import RinglabError
from .exprs import parse_element, parse_subset
from .harness import Catalog, Report, run_suite
from .checks import REGISTRY
from .lattice import enumerate_additive_subgroups
from .result import CheckResult
from .rings import build_ring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringlab",
                                     description="finite-ring sandwich-condition laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ring = sub.add_parser("ring", help="ring-level queries")
    ring_sub = p_ring.add_subparsers(dest="ring_command", required=True)
    p_info = ring_sub.add_parser("info", help="print structural facts about a ring")
    p_info.add_argument("spec")

    p_set = sub.add_parser("set", help="evaluate a subset expression")
    p_set.add_argument("spec")
    p_set.add_argument("--expr", required=True)
    p_set.add_argument("--list", action="store_true", help="print every member")
    p_set.add_argument("--size", action="store_true", help="print only the size")

    p_check = sub.add_parser("check", help="decide a sandwich predicate")
    p_check.add_argument("kind", choices=["xsemiprime", "xprime"])
    p_check.add_argument("spec")
    p_check.add_argument("--x", required=True, help="subset expression for X")
    p_check.add_argument("--witness", action="store_true")

    p_der = sub.add_parser("derivation", help="inner-derivation criteria and oracle")
    p_der.add_argument("spec")
    p_der.add_argument("--b", required=True, help="element expression for b")
    p_der.add_argument("--criterion", action="store_true")
    p_der.add_argument("--oracle", action="store_true")
    p_der.add_argument("--on", default="R", help="subset expression for the domain of d")

    p_verify = sub.add_parser("verify", help="run registered checks")
    p_verify.add_argument("check_id", help="a check id or 'all'")
    p_verify.add_argument("--catalog", help="JSON file with a ring list")
    p_verify.add_argument("--json", dest="json_path", help="write the JSON report here")
    p_verify.add_argument("--figures", help="write results.tsv and PNG figures here")
    p_verify.add_argument("--parallel", action="store_true")

    p_lat = sub.add_parser("lattice", help="enumerate additive subgroups or Lie ideals")
    p_lat.add_argument("spec")
    p_lat.add_argument("--filter", choices=["all", "lie"], default="all")
    p_lat.add_argument("--classify-x", dest="classify_x",
                       help="subset expression over L evaluated per lattice member")
    return parser


def _cmd_ring_info(args) -> int:
    ring = build_ring(args.spec)
    print(f"spec:            {ring.spec_text}")
    card = ring.cardinality if ring.cardinality is not None else "infinite"
    print(f"cardinality:     {card}")
    print(f"characteristic:  {ring.characteristic}")
    print(f"enumerable:      {ring.is_enumerable}")
    if ring.is_enumerable:
        p = predicates.primeness(ring)
        cls = predicates.classify_ring(ring)
        print(f"primeness:       {p.kind}")
        print(f"reduced:         {cls.reduced}")
        print(f"domain:          {cls.domain}")
        print(f"regular:         {cls.regular}")
        print(f"exceptional:     {cls.exceptional}")
        print(f"nontrivial idempotent: {cls.has_nontrivial_idempotent}")
        for kind in ("Id", "U", "N", "Z", "E"):
            print(f"|{kind}|: {len(sets.special_subset(ring, kind))}")
    return 0


def _cmd_set(args) -> int:
    ring = build_ring(args.spec)
    subset = parse_subset(ring, args.expr)
    if args.size or not args.list:
        print(f"size: {len(subset)}")
        print(f"kind: {subset.closure_kind}")
    if args.list:
        for m in subset:
            print(ring.format_elem(m))
    return 0


def _cmd_check(args) -> int:
    ring = build_ring(args.spec)
    subset = parse_subset(ring, args.x)
    if args.kind == "xsemiprime":
        verdict = predicates.x_semiprime(ring, subset)
    else:
        verdict = predicates.x_prime(ring, subset)
    print(f"holds: {verdict.holds}")
    print(f"checked_pairs: {verdict.checked_pairs}")
    if args.witness and verdict.witness is not None:
        w = verdict.witness
        if isinstance(w, tuple) and args.kind == "xprime":
            print(f"witness: a={ring.format_elem(w[0])} b={ring.format_elem(w[1])}")
        else:
            print(f"witness: {ring.format_elem(w)}")
    return 0 if verdict.holds else 1


def _cmd_derivation(args) -> int:
    ring = build_ring(args.spec)
    b = parse_element(ring, args.b)
    domain = parse_subset(ring, args.on)
    show_criterion = args.criterion or not args.oracle
    show_oracle = args.oracle or not args.criterion
    status = 0
    if show_criterion:
        crit = derivations.thm21_criterion(ring, b)
        print(f"criterion: {crit}")
        try:
            det_crit = derivations.cor2_criterion(ring, b)
            print(f"determinant criterion: {det_crit}")
        except RinglabError:
            pass
        if not crit:
            status = 1
    if show_oracle:
        verdict = derivations.d_semiprime_oracle(ring, b, domain)
        print(f"oracle: {verdict.holds}")
        if verdict.witness is not None:
            print(f"witness: {ring.format_elem(verdict.witness)}")
        if not verdict.holds:
            status = 1
    return status


def _cmd_verify(args) -> int:
    catalog = Catalog.load(args.catalog) if args.catalog else Catalog()
    if args.check_id == "all":
        rep = run_suite(catalog, parallel=args.parallel)
    else:
        if args.check_id not in REGISTRY:
            print(f"unknown check id {args.check_id!r}", file=sys.stderr)
            return 2
        from .harness import __version__, _run_one

        catalog = catalog.validate()
        results: list[CheckResult] = [
            _run_one(args.check_id, text) for text in catalog.rings
        ]
        rep = Report(version=__version__, catalog=catalog.rings, results=results)
    print(report_mod.render_table(rep))
    if args.json_path:
        report_mod.write_json(rep, args.json_path)
        print(f"json report: {args.json_path}")
    if args.figures:
        for path in report_mod.write_figures(rep, args.figures):
            print(f"wrote {path}")
    return 1 if rep.failed else 0


def _cmd_lattice(args) -> int:
    ring = build_ring(args.spec)
    filt = "all" if args.filter == "all" else "lie_ideals"
    members = enumerate_additive_subgroups(ring, filt)
    print(f"{len(members)} subgroups")
    for i, subgroup in enumerate(members):
        flags = sets.set_predicates(ring, subgroup)
        line = f"#{i}: size={len(subgroup)} lie={flags.is_lie_ideal} central={flags.is_central}"
        if args.classify_x:
            x = parse_subset(ring, args.classify_x, env={"L": subgroup})
            sp = predicates.x_semiprime(ring, x)
            xp = predicates.x_prime(ring, x)
            line += f" xsemiprime={sp.holds} xprime={xp.holds}"
        print(line)
        print(f"    gens: {subgroup.describe()}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ring":
            return _cmd_ring_info(args)
        if args.command == "set":
            return _cmd_set(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "derivation":
            return _cmd_derivation(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "lattice":
            return _cmd_lattice(args)
    except RinglabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
