"""Command-line front end.

Exit codes: 0 success, 1 usage or input error (including exhausted search
budgets), 2 a requested closed-form route is inapplicable, 3 internal
consistency failure such as the two classification routes disagreeing.
"""

from __future__ import annotations

import argparse
import sys
import time

from .budget import resolve_budget
from .catalog import CatalogLimits, run_catalog
from .errors import (
    HypothesisNotMet,
    InternalConsistencyError,
    SearchBudgetExceeded,
    SymqError,
)
from .groups import fixed_two_torsion, is_abelian, validate_group
from .involutions import (
    classify_sq_bruteforce,
    classify_sq_theorem,
    cross_check_sq,
    enumerate_good_involutions,
    good_involutions_closed_form,
)
from .quandles import galex, inner_orbits, kei_witness, validate_quandle
from .report import emit_report, emit_reports, quandle_report, to_json, to_text
from .specs import build_group, parse_aut_spec
from .tableio import format_table, read_table
from .torus import torus_report_data
from .__about__ import __version__


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are code 1
        raise _UsageError(message)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _resolve_pair(args):
    group = build_group(args.group)
    aut = parse_aut_spec(args.aut, group)
    return group, aut


def _quandle_props(q):
    part = inner_orbits(q)
    witness = kei_witness(q)
    return {
        "is_kei": witness is None,
        "kei_witness": None if witness is None else list(witness),
        "is_connected": part.count == 1,
        "orbit_count": part.count,
    }


def _ms(start: float) -> int:
    return int((time.monotonic() - start) * 1000)


def cmd_group_build(args) -> int:
    group = build_group(args.group)
    _write(format_table(group.product), args.out)
    return 0


def cmd_group_check(args) -> int:
    group = validate_group(build_group(args.group).product)
    report = {
        "tool_version": __version__,
        "group_spec": args.group,
        "order": group.order,
        "identity": group.identity,
        "abelian": is_abelian(group),
        "valid": True,
    }
    _write(to_json(report) if args.format == "json" else to_text(report), args.out)
    return 0


def cmd_quandle_galex(args) -> int:
    group, aut = _resolve_pair(args)
    q = galex(group, aut)
    _write(format_table(q.op), args.out)
    return 0


def cmd_quandle_check(args) -> int:
    start = time.monotonic()
    q = validate_quandle(read_table(args.table))
    props = _quandle_props(q)
    report = quandle_report(
        group_spec=None,
        order=q.order,
        automorphism=None,
        good_involutions=None,
        fixed_two_torsion=None,
        sq_classes_bruteforce=None,
        sq_classes_theorem=None,
        agreement=None,
        notes=[],
        elapsed_ms=_ms(start),
        **props,
    )
    _write(emit_report(report, args.format), args.out)
    return 0


def _load_quandle(args):
    """Either a (group, aut) pair or a raw table file; returns (q, spec, aut)."""
    if args.table is not None:
        if args.group is not None or args.aut is not None:
            raise _UsageError("--table excludes --group/--aut")
        return validate_quandle(read_table(args.table)), None, None
    if args.group is None or args.aut is None:
        raise _UsageError("need --group and --aut, or --table")
    group, aut = _resolve_pair(args)
    return galex(group, aut), group, aut


def cmd_sq_enumerate(args) -> int:
    start = time.monotonic()
    budget = resolve_budget(args.budget)
    q, group, aut = _load_quandle(args)
    notes = []
    if args.closed_form:
        if group is None:
            raise _UsageError("--closed-form needs --group/--aut input")
        invs = good_involutions_closed_form(group, aut)
        notes.append("closed form: left translations by fixed self-inverse elements")
    else:
        invs = enumerate_good_involutions(q, budget)
    report = quandle_report(
        group_spec=args.group,
        order=q.order,
        automorphism=None if aut is None else list(aut.perm),
        good_involutions=[list(g.rho) for g in invs],
        fixed_two_torsion=(
            None if group is None else list(fixed_two_torsion(group, aut).members)
        ),
        sq_classes_bruteforce=None,
        sq_classes_theorem=None,
        agreement=None,
        notes=notes,
        elapsed_ms=_ms(start),
        **_quandle_props(q),
    )
    _write(emit_report(report, args.format), args.out)
    return 0


def cmd_sq_classify(args) -> int:
    start = time.monotonic()
    budget = resolve_budget(args.budget)
    q, group, aut = _load_quandle(args)
    if args.theorem:
        if group is None:
            raise _UsageError("--theorem needs --group/--aut input")
        result = classify_sq_theorem(group, aut, budget)
    else:
        result = classify_sq_bruteforce(q, budget)
    report = quandle_report(
        group_spec=args.group,
        order=q.order,
        automorphism=None if aut is None else list(aut.perm),
        good_involutions=[list(p) for p in result.good_involutions],
        fixed_two_torsion=(
            None if group is None else list(fixed_two_torsion(group, aut).members)
        ),
        sq_classes_bruteforce=result.bruteforce_count,
        sq_classes_theorem=result.theorem_count,
        agreement=result.agreement,
        notes=list(result.notes),
        elapsed_ms=_ms(start),
        **_quandle_props(q),
    )
    _write(emit_report(report, args.format), args.out)
    return 0


def cmd_sq_crosscheck(args) -> int:
    start = time.monotonic()
    budget = resolve_budget(args.budget)
    group, aut = _resolve_pair(args)
    result = cross_check_sq(group, aut, budget)
    q = galex(group, aut)
    report = quandle_report(
        group_spec=args.group,
        order=q.order,
        automorphism=list(aut.perm),
        good_involutions=[list(p) for p in result.good_involutions],
        fixed_two_torsion=list(fixed_two_torsion(group, aut).members),
        sq_classes_bruteforce=result.bruteforce_count,
        sq_classes_theorem=result.theorem_count,
        agreement=result.agreement,
        notes=list(result.notes),
        elapsed_ms=_ms(start),
        **_quandle_props(q),
    )
    _write(emit_report(report, args.format), args.out)
    if result.agreement is False:
        sys.stderr.write("classification routes disagree\n")
        return 3
    return 0


def cmd_catalog(args) -> int:
    limits = CatalogLimits(
        oracle_max_order=args.oracle_limit,
        pairwise_max_order=args.pairwise_limit,
    )
    reports, summary = run_catalog(
        args.max_order,
        include_extras=args.extras,
        budget=args.budget,
        limits=limits,
    )
    _write(emit_reports(reports, args.format), args.out)
    sys.stderr.write(
        "catalog: {entries} entries, {hypothesis_met} hypothesis-met, "
        "{agreement_failures} agreement failures, {budget_notes} budget notes\n".format(
            **summary
        )
    )
    return 3 if summary["agreement_failures"] else 0


def cmd_torus(args) -> int:
    data = torus_report_data(args.n)
    report = {"tool_version": __version__, **data}
    _write(emit_report(report, args.format), args.out)
    return 0


def _add_common(parser, *, budget=False, fmt=True, out=True):
    if budget:
        parser.add_argument("--budget", type=int, default=None, metavar="NODES")
    if fmt:
        parser.add_argument("--format", choices=("json", "text"), default="json")
    if out:
        parser.add_argument("--out", default=None, metavar="PATH")


def _add_quandle_inputs(parser):
    parser.add_argument("--group", default=None, metavar="SPEC")
    parser.add_argument("--aut", default=None, metavar="SPEC")
    parser.add_argument("--table", default=None, metavar="PATH")


def build_parser() -> _Parser:
    parser = _Parser(prog="symq", description=__doc__)
    parser.add_argument("--version", action="version", version=f"symq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="build or validate groups")
    gsub = group.add_subparsers(dest="subcommand", required=True)
    g_build = gsub.add_parser("build", help="write a multiplication table")
    g_build.add_argument("--group", required=True, metavar="SPEC")
    _add_common(g_build, fmt=False)
    g_build.set_defaults(func=cmd_group_build)
    g_check = gsub.add_parser("check", help="validate the group axioms")
    g_check.add_argument("--group", required=True, metavar="SPEC")
    _add_common(g_check)
    g_check.set_defaults(func=cmd_group_check)

    quandle = sub.add_parser("quandle", help="build or validate quandles")
    qsub = quandle.add_subparsers(dest="subcommand", required=True)
    q_galex = qsub.add_parser(
        "galex", help="build the twisted-conjugation quandle table"
    )
    q_galex.add_argument("--group", required=True, metavar="SPEC")
    q_galex.add_argument("--aut", required=True, metavar="SPEC")
    _add_common(q_galex, fmt=False)
    q_galex.set_defaults(func=cmd_quandle_galex)
    q_check = qsub.add_parser("check", help="validate the quandle axioms")
    q_check.add_argument("--table", required=True, metavar="PATH")
    _add_common(q_check)
    q_check.set_defaults(func=cmd_quandle_check)

    sq = sub.add_parser("sq", help="good involutions and their classes")
    ssub = sq.add_subparsers(dest="subcommand", required=True)
    s_enum = ssub.add_parser("enumerate", help="list all good involutions")
    _add_quandle_inputs(s_enum)
    s_enum.add_argument(
        "--closed-form",
        action="store_true",
        help="use the translation description (connected keis only)",
    )
    _add_common(s_enum, budget=True)
    s_enum.set_defaults(func=cmd_sq_enumerate)
    s_cls = ssub.add_parser("classify", help="partition involutions into classes")
    _add_quandle_inputs(s_cls)
    s_cls.add_argument(
        "--theorem",
        action="store_true",
        help="use centralizer orbits (connected keis only)",
    )
    _add_common(s_cls, budget=True)
    s_cls.set_defaults(func=cmd_sq_classify)
    s_cross = ssub.add_parser("crosscheck", help="run both routes and compare")
    s_cross.add_argument("--group", required=True, metavar="SPEC")
    s_cross.add_argument("--aut", required=True, metavar="SPEC")
    _add_common(s_cross, budget=True)
    s_cross.set_defaults(func=cmd_sq_crosscheck)

    cat = sub.add_parser("catalog", help="sweep small groups and cross-check")
    cat.add_argument("--max-order", type=int, default=12, metavar="N")
    cat.add_argument(
        "--extras",
        action="store_true",
        help="include the symmetric and alternating groups on four points",
    )
    cat.add_argument("--oracle-limit", type=int, default=64, metavar="N")
    cat.add_argument("--pairwise-limit", type=int, default=16, metavar="N")
    _add_common(cat, budget=True)
    cat.set_defaults(func=cmd_catalog)

    torus = sub.add_parser("torus", help="order-2 torus model for one dimension")
    torus.add_argument("--n", type=int, required=True)
    _add_common(torus)
    torus.set_defaults(func=cmd_torus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except HypothesisNotMet as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InternalConsistencyError as exc:
        sys.stderr.write(f"internal consistency failure: {exc}\n")
        return 3
    except SearchBudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (SymqError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
