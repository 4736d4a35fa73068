"""Command-line front end: analyze, check, lemmas, campaign, catalog."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from .closure import READINGS, HypothesisSpec
from .errors import GroupError
from .group import Group, Subgroup, center
from .numtheory import prime_factors
from .structure import is_nilpotent, is_p_nilpotent, is_solvable, is_supersolvable
from .subgroups import shape, sylow_subgroup
from .harness.campaign import (
    COPRIME_PREFIX,
    CampaignConfig,
    parse_checks,
    run_campaign,
    unexpected_inconsistencies,
    write_report,
)
from .harness.catalog import builtin_catalog, lookup
from .harness.checks import Verdict, check_lemma, check_theorem, t4_candidates, theorem_parameterizations
from .harness.constructors import construct
from .harness.coprime import coprime_instance
from .harness.groupfile import parse_group_file
from .harness.lemmas import LEMMA_IDS

log = logging.getLogger("strongclosed")

THEOREM_ARGS = {"1": "T1", "2": "T2", "3": "T3", "4": "T4", "p31": "P31"}


def resolve_group(arg: str) -> tuple[str, Group, tuple[Subgroup, Subgroup] | None]:
    """A built-in id, ``coprime:<id>``, a group file, or a constructor expression."""
    if arg.startswith(COPRIME_PREFIX):
        inst = coprime_instance(arg[len(COPRIME_PREFIX):])
        return arg, inst.semidirect, (inst.normal, inst.complement)
    try:
        e = lookup(arg)
        return e.id, e.group, None
    except KeyError:
        pass
    if os.path.exists(arg):
        e = parse_group_file(arg)
        return e.id, e.group, None
    return arg, construct(arg), None


def _fmt_bool(b) -> str:
    return "-" if b is None else ("true" if b else "false")


def format_verdict(v: Verdict) -> str:
    params = " ".join(f"{k}={'-' if val is None else val}" for k, val in v.params.items()
                      if k not in ("E",))
    if v.skipped:
        state = "SKIPPED"
    else:
        state = "consistent" if v.consistent else "INCONSISTENT"
    return (f"{v.group_id} {v.check_id} [{params}] hypothesis={_fmt_bool(v.hypothesis_holds)} "
            f"conclusion={_fmt_bool(v.conclusion_holds)} -> {state}")


def _emit(verdicts: list[Verdict], as_json: bool) -> int:
    if as_json:
        print(json.dumps([v.to_json() for v in verdicts], indent=1))
    else:
        for v in verdicts:
            print(format_verdict(v))
    return 0 if all(v.skipped or v.consistent for v in verdicts) else 1


def cmd_analyze(args) -> int:
    gid, G, _ = resolve_group(args.group)
    W = G.whole
    info = {"id": gid, "degree": G.degree, "order": G.order(), "center_order": center(W).order}
    info["sylow"] = {}
    info["p_nilpotent"] = {}
    for p in prime_factors(G.order()):
        P = sylow_subgroup(W, p)
        info["sylow"][p] = {"order": P.order, "shape": shape(P).value}
        info["p_nilpotent"][p] = bool(is_p_nilpotent(W, p))
    info["nilpotent"] = is_nilpotent(W)
    info["supersolvable"] = bool(is_supersolvable(W))
    info["solvable"] = is_solvable(W)
    if args.json:
        print(json.dumps(info, indent=1))
        return 0
    rows = [("group", gid), ("degree", info["degree"]), ("order", info["order"]),
            ("center", f"order {info['center_order']}")]
    for p, s in info["sylow"].items():
        rows.append((f"sylow {p}", f"order {s['order']}, {s['shape']}, "
                     f"{'' if info['p_nilpotent'][p] else 'not '}{p}-nilpotent"))
    rows += [(k, _fmt_bool(info[k])) for k in ("nilpotent", "supersolvable", "solvable")]
    for label, value in rows:
        print(f"{label:<14}{value}")
    return 0


def cmd_check(args) -> int:
    gid, G, _ = resolve_group(args.group)
    W = G.whole
    tid = THEOREM_ARGS[args.theorem.lower()]
    clause = not args.no_order4_clause
    readings = READINGS if args.reading == "both" else (args.reading,)
    verdicts = []
    for reading in readings:
        if tid == "T3":
            verdicts.append(check_theorem(W, HypothesisSpec("T3", None, clause, reading=reading), gid))
        elif tid == "T4":
            for E in t4_candidates(W, args.t4_cap):
                spec = HypothesisSpec("T4", None, clause, normal_subgroup_E=E, reading=reading)
                verdicts.append(check_theorem(W, spec, gid))
        else:
            orders = [args.order] if args.order is not None else theorem_parameterizations(W, tid)
            for d in orders:
                verdicts.append(check_theorem(W, HypothesisSpec(tid, d, clause, reading=reading), gid))
    if not verdicts:
        print(f"{gid}: no applicable parameterization for {tid}")
        return 0
    return _emit(verdicts, args.json)


def cmd_lemmas(args) -> int:
    gid, G, pair = resolve_group(args.group)
    ids = LEMMA_IDS if args.ids.lower() == "all" else parse_checks(args.ids)
    unknown = [i for i in ids if i not in LEMMA_IDS]
    if unknown:
        raise GroupError(f"unknown lemma ids: {', '.join(unknown)}")
    verdicts = [check_lemma(G.whole, lid, gid, args.reading, pair=pair) for lid in ids]
    return _emit(verdicts, args.json)


def cmd_campaign(args) -> int:
    config = CampaignConfig(
        max_order=args.max_order,
        checks=parse_checks(args.checks),
        weakened=args.weakened,
        reading=args.reading,
        t4_cap=args.t4_cap,
        ids=[s.strip() for s in args.ids.split(",")] if args.ids else None,
        include_distinguished=not args.no_distinguished,
        coprime=args.coprime,
    )
    t0 = time.perf_counter()
    report = run_campaign(config=config, jobs=args.jobs)
    elapsed = time.perf_counter() - t0
    if args.out:
        write_report(report, args.out)
    s = report["summary"]
    print(f"groups={len(report['catalog'])} checked={s['checked']} consistent={s['consistent']} "
          f"inconsistent={s['inconsistent']} skipped={s['skipped']} seconds={elapsed:.1f}")
    expected = [x for item in args.expect_counterexample for x in item.split(",") if x]
    bad = unexpected_inconsistencies(report, expected)
    for v in report["verdicts"]:
        if not v["skipped"] and not v["consistent"]:
            tag = "unexpected" if v in bad else "expected"
            print(f"  {tag}: {format_verdict(Verdict.from_json(v))}")
    return 1 if bad else 0


def cmd_catalog(args) -> int:
    for e in builtin_catalog():
        if args.max_order is None or e.order <= args.max_order:
            print(f"{e.id:<14} {e.order:>6}  {e.construction}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="strongclosed", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = ap.add_subparsers(dest="command", required=True)

    def group_arg(p):
        p.add_argument("group", help="built-in id, coprime:<id>, group file, or constructor expression")
        p.add_argument("--json", action="store_true", help="print JSON instead of text")

    def reading_arg(p):
        p.add_argument("--reading", choices=READINGS + ("both",), default="normalizer",
                       help="subgroup in which strong closure is taken (default: normalizer)")

    p = sub.add_parser("analyze", help="order, Sylow shapes, center, p-nilpotence, supersolvability")
    group_arg(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="evaluate one theorem on one group")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREM_ARGS), type=str.lower)
    p.add_argument("--order", type=int, default=None, help="target order |D| (default: every valid one)")
    p.add_argument("--no-order4-clause", action="store_true", help="drop the order-4 clause when |D| = 2")
    p.add_argument("--t4-cap", type=int, default=50)
    reading_arg(p)
    group_arg(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lemmas", help="evaluate lemma checks on one group")
    p.add_argument("--ids", default="all", help="'all' or a comma list such as L21,L24a,L211")
    reading_arg(p)
    group_arg(p)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("campaign", help="run checks over the built-in catalog")
    p.add_argument("--max-order", type=int, default=400)
    p.add_argument("--checks", default="T1,T2,P31", help="comma list; 'theorems', 'lemmas', 'all' expand")
    p.add_argument("--weakened", action="store_true", help="also run T1/T2 at |D| = 2 without the order-4 clause")
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--expect-counterexample", action="append", default=[], metavar="GROUP_ID",
                   help="group ids whose clause-off inconsistencies are expected (repeatable, comma lists ok)")
    p.add_argument("--ids", default=None, help="restrict to these catalog ids (comma list)")
    p.add_argument("--no-distinguished", action="store_true", help="leave out SL2_17 and PSL2_17")
    p.add_argument("--coprime", action="store_true", help="add the coprime-action instances (L29, L210, L211)")
    p.add_argument("--t4-cap", type=int, default=50)
    reading_arg(p)
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("catalog", help="list the built-in catalog")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
