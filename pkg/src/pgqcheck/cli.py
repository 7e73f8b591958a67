"""Command line interface.

Subcommands:
  lr                   one Littlewood-Richardson coefficient
  check-combinatorics  exhaustive small-size verification of the
                       tableau bound lemmas
  multiplicities       eigenvalue multiplicity quadruples for one
                       candidate against a case's Brauer line
  enumerate            HeLP candidate enumeration for one order
  verify-case          run a case file end to end

Exit codes: 0 success (for verify-case: every exclude-mode target
excluded), 2 undecided target or found counterexample, 1 error.
"""

from __future__ import annotations

import argparse
import random
import sys

from .casefile import CaseError, load_case
from .criterion import (
    DEFAULT_SIZE_CEILING,
    BrauerLineCase,
    EigenvalueProfile,
    cross_validate,
)
from .forma import verify_form_A_bounds
from .helpenum import (
    DEFAULT_BOUND,
    HelpQuery,
    candidate_flat_tuple,
    enumerate_order_pq,
    enumerate_prime_order,
    prime_flat_tuple,
)
from .multiplicities import (
    Infeasible,
    PartialAugmentationVector,
    chi_of_unit,
    is_prime,
    multiplicities_order_pq,
    prime_pair,
)
from .report import render_figures, render_structured, render_text, to_structured
from .runner import RunError, exit_status, run_case
from .tableaux import check_partition, lr_coefficient

import json


def _partition_arg(text):
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated integer list")
    try:
        return check_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list_arg(text):
    try:
        return tuple(int(tok) for tok in text.strip().split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated integer list")


def _id_list_arg(text):
    ids = tuple(tok.strip() for tok in text.split(",") if tok.strip())
    if not ids:
        raise argparse.ArgumentTypeError("empty character list")
    return ids


def _merge_leading_dash(argv, option):
    """Allow `option -4,5,...` by folding the value into option=value."""
    argv = list(argv)
    for i in range(len(argv) - 1):
        if argv[i] == option and argv[i + 1].startswith("-"):
            argv[i] = option + "=" + argv[i + 1]
            del argv[i + 1]
            break
    return argv


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help=f"sup-norm box bound for the enumeration "
                             f"(default {DEFAULT_BOUND})")
    common.add_argument("--chain-ceiling", type=int,
                        default=argparse.SUPPRESS,
                        help=f"partition size ceiling for the chain search "
                             f"(default {DEFAULT_SIZE_CEILING})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for the optional randomized "
                             "cross-validation self-check")

    parser = argparse.ArgumentParser(
        prog="pgqcheck",
        description="Exact verification that no normalized torsion units "
                    "of mixed prime order survive the eigenvalue and "
                    "Brauer line constraints of a case file.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lr = sub.add_parser("lr", parents=[common],
                          help="print one Littlewood-Richardson coefficient")
    p_lr.add_argument("--outer", type=_partition_arg, required=True,
                      help="outer partition, e.g. 2,1")
    p_lr.add_argument("--inner", type=_partition_arg, default=(),
                      help="inner partition (default empty)")
    p_lr.add_argument("--content", type=_partition_arg, required=True,
                      help="content partition")
    p_lr.set_defaults(func=_cmd_lr)

    p_cc = sub.add_parser("check-combinatorics", parents=[common],
                          help="exhaustively verify the tableau bound "
                               "lemmas below a size budget")
    p_cc.add_argument("--p", type=int, required=True, help="odd prime")
    p_cc.add_argument("--max-boxes", type=int, required=True,
                      help="largest diagram size to sweep")
    p_cc.add_argument("--tableau-ceiling", type=int, default=2_000_000,
                      help="abort if more fillings than this would be "
                           "checked")
    p_cc.set_defaults(func=_cmd_check_combinatorics)

    p_mult = sub.add_parser("multiplicities", parents=[common],
                            help="eigenvalue multiplicity quadruples of one "
                                 "candidate on a case's Brauer line")
    p_mult.add_argument("case", help="case file path")
    p_mult.add_argument("--unit-order", type=int, required=True)
    p_mult.add_argument("--candidate", type=_int_list_arg, required=True,
                        help="flat candidate tuple, e.g. \"-4,5,3,12,-14\"")
    p_mult.set_defaults(func=_cmd_multiplicities)

    p_enum = sub.add_parser("enumerate", parents=[common],
                            help="enumerate HeLP candidates for one order")
    p_enum.add_argument("case", help="case file path")
    p_enum.add_argument("--order", type=int, required=True)
    p_enum.add_argument("--characters", type=_id_list_arg, default=None,
                        help="constraint character ids (default: the "
                             "declared target's constraints)")
    p_enum.add_argument("--format", choices=("text", "structured"),
                        default="text")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_ver = sub.add_parser("verify-case", parents=[common],
                           help="run a case file end to end")
    p_ver.add_argument("case", help="case file path")
    p_ver.add_argument("--order", type=int, action="append", default=None,
                       help="restrict to this target order (repeatable)")
    p_ver.add_argument("--format", choices=("text", "structured"),
                       default="text")
    p_ver.add_argument("--figures", metavar="DIR", default=None,
                       help="also render one figure per target into DIR")
    p_ver.set_defaults(func=_cmd_verify_case)

    return parser


def _cmd_lr(args):
    print(lr_coefficient(args.outer, args.inner, args.content))
    return 0


def _cmd_check_combinatorics(args):
    try:
        report = verify_form_A_bounds(args.p, args.max_boxes,
                                      tableau_ceiling=args.tableau_ceiling)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"p={report.p} max-boxes={report.max_boxes}: "
          f"{report.shapes_checked} shapes, "
          f"{report.tableaux_checked} tableaux, "
          f"{len(report.counterexamples)} counterexamples")
    for ce in report.counterexamples:
        print(f"counterexample: {ce}")
    return 2 if report.counterexamples else 0


def _candidate_from_flat(case, target, flat):
    """Rebuild the three partial augmentation vectors of a flat tuple."""
    order = target.unit_order
    p, q = prime_pair(order)
    power_ids = [c.id for c in case.classes_of_order(p)]
    support_ids = [c.id for c in case.support_classes(order)]
    want = len(power_ids) + len(support_ids)
    if len(flat) != want:
        raise ValueError(
            f"candidate has {len(flat)} entries, expected {want} "
            f"({len(power_ids)} for u^{q} on the order-{p} classes, then "
            f"{len(support_ids)} for u on {', '.join(support_ids)})")
    q_ids = [c.id for c in case.classes_of_order(q)]
    if len(q_ids) != 1:
        raise ValueError(
            f"cannot infer the u^{p} augmentations: {len(q_ids)} classes "
            f"of order {q}; this command needs exactly one")
    pa_uq = PartialAugmentationVector(p, dict(zip(power_ids, flat)))
    pa_up = PartialAugmentationVector(q, {q_ids[0]: 1})
    pa_u = PartialAugmentationVector(
        order, dict(zip(support_ids, flat[len(power_ids):])))
    return pa_u, pa_up, pa_uq


def _cmd_multiplicities(args):
    case = load_case(args.case)
    try:
        target = case.target_for_order(args.unit_order)
    except KeyError as exc:
        raise RunError(str(exc)) from None
    if target.line_id is None:
        raise RunError(f"target order {args.unit_order} configures no "
                       f"Brauer line")
    if is_prime(args.unit_order):
        raise RunError("this command reports order p*q quadruples; "
                       f"{args.unit_order} is prime")
    p, q = prime_pair(args.unit_order)
    pa_u, pa_up, pa_uq = _candidate_from_flat(case, target, args.candidate)
    line = case.brauer_lines[target.line_id]
    print(f"case {case.group_name}, order {args.unit_order}, "
          f"line {target.line_id} (p={p}, q={q})")
    print(f"candidate {tuple(args.candidate)}")
    headers = ("character", "mu(1)", f"mu(zeta{p})", f"mu(zeta{q})",
               f"mu(zeta{p * q})")
    rows = []
    for chid in line.line:
        ch = case.character_by_id(chid)
        quad = multiplicities_order_pq(
            ch.degree,
            chi_of_unit(ch, pa_up),
            chi_of_unit(ch, pa_uq),
            chi_of_unit(ch, pa_u),
            p, q)
        if isinstance(quad, Infeasible):
            rows.append((chid, f"infeasible: {quad.reason}", "", "", ""))
        else:
            rows.append((chid, str(quad.mu_1), str(quad.mu_zp),
                         str(quad.mu_zq), str(quad.mu_zpq)))
    widths = [max(len(str(row[i])) for row in rows + [headers])
              for i in range(5)]
    for row in [headers] + rows:
        cells = [str(row[0]).ljust(widths[0])]
        cells += [str(row[i]).rjust(widths[i]) for i in range(1, 5)]
        print("  ".join(cells).rstrip())
    return 0


def _cmd_enumerate(args):
    case = load_case(args.case)
    bound = getattr(args, "bound", DEFAULT_BOUND)
    if args.characters is None:
        try:
            target = case.target_for_order(args.order)
        except KeyError:
            raise RunError(
                f"no target of order {args.order} declared in "
                f"{case.group_name}; pass --characters") from None
        char_ids = target.constraints
    else:
        char_ids = args.characters
    try:
        chars = tuple(case.character_by_id(i) for i in char_ids)
    except KeyError as exc:
        raise RunError(str(exc)) from None

    classes = case.classes
    if is_prime(args.order):
        cset = enumerate_prime_order(
            HelpQuery(args.order, chars, classes, bound))
        flats = [prime_flat_tuple(pa, classes) for pa in cset.candidates]
        layout = [c.id for c in classes if c.element_order == args.order]
        power_block = []
    else:
        p, q = prime_pair(args.order)
        set_p = enumerate_prime_order(HelpQuery(p, chars, classes, bound))
        set_q = enumerate_prime_order(HelpQuery(q, chars, classes, bound))
        cset = enumerate_order_pq(HelpQuery(args.order, chars, classes,
                                            bound),
                                  power_candidates_p=set_q,
                                  power_candidates_q=set_p)
        flats = [candidate_flat_tuple(c, classes) for c in cset.candidates]
        power_block = [c.id for c in case.classes_of_order(p)]
        layout = [c.id for c in case.support_classes(args.order)]

    if args.format == "structured":
        doc = {
            "format": "pgq-candidates",
            "version": 1,
            "group": case.group_name,
            "order": args.order,
            "characters": list(char_ids),
            "power_block_classes": power_block,
            "support_classes": list(layout),
            "candidates": [list(f) for f in flats],
            "warnings": list(cset.warnings),
        }
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return 0
    print(f"case {case.group_name}, order {args.order}, "
          f"constraints {', '.join(char_ids)}")
    for w in cset.warnings:
        print(f"warning: {w}")
    if power_block:
        print(f"flat layout: [u^{args.order // _first_prime(args.order)} on "
              f"{', '.join(power_block)} | u on {', '.join(layout)}]")
    else:
        print(f"flat layout: [u on {', '.join(layout)}]")
    print(f"candidates ({len(flats)}):")
    for f in flats:
        print(f"  {f}")
    return 0


def _first_prime(order):
    p, _ = prime_pair(order)
    return p


def _self_check(seed, samples=25):
    """Randomized consistency probe of the two criteria; raises on any
    disagreement.  Sampling only; verification results never depend on
    this."""
    rng = random.Random(seed)
    case = BrauerLineCase(3, ("e1", "e2", "e3"), True)
    for _ in range(samples):
        s = tuple(rng.randint(0, 4) for _ in range(3))
        r = tuple(rng.randint(0, 4) for _ in range(3))
        joint = cross_validate(EigenvalueProfile(s, r), case,
                               size_ceiling=10 ** 9)
        if joint.consistent is False:
            raise RunError(
                f"self-check failed: inequality and chain search disagree "
                f"on s={s} r={r}")
    return samples


def _cmd_verify_case(args):
    case = load_case(args.case)
    bound = getattr(args, "bound", DEFAULT_BOUND)
    ceiling = getattr(args, "chain_ceiling", DEFAULT_SIZE_CEILING)
    report = run_case(case, orders=args.order, bound=bound,
                      chain_ceiling=ceiling)
    seed = getattr(args, "seed", None)
    if seed is not None:
        n = _self_check(seed)
        print(f"self-check: {n} random profiles cross-validated "
              f"(seed {seed})", file=sys.stderr)
    if args.format == "structured":
        sys.stdout.write(render_structured(to_structured(report)))
    else:
        sys.stdout.write(render_text(report))
    if args.figures is not None:
        for path in render_figures(report, args.figures):
            print(f"figure: {path}", file=sys.stderr)
    return exit_status(report)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = _merge_leading_dash(argv, "--candidate")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CaseError, RunError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
