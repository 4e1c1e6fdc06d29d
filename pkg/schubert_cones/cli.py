#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.
"""The ``schubert-cones`` command."""

import argparse
import sys
import typing

import daiquiri
import daiquiri.formatter
import daiquiri.output

from schubert_cones import cache
from schubert_cones import config
from schubert_cones import enumeration
from schubert_cones import equations
from schubert_cones import exceptions
from schubert_cones import finite_field
from schubert_cones import formatter
from schubert_cones import output
from schubert_cones import permutation
from schubert_cones import pillars
from schubert_cones import rank
from schubert_cones import rothe
from schubert_cones import transposition
from schubert_cones import types

LOG = daiquiri.getLogger(__name__)

Command = typing.Callable[[argparse.Namespace, config.Limits], formatter.Report]


def _perm(text: str) -> permutation.Permutation:
    return permutation.Permutation.parse(text)


def _pillar_rows(
    w: permutation.Permutation,
) -> typing.List[typing.List[typing.Any]]:
    classes = pillars.linked_classes(rank.pillars(w))
    rows = []
    for index, members in enumerate(classes, start=1):
        for entry in members:
            rows.append([entry.row, entry.col, entry.value, index])
    rows.sort()
    return rows


def cmd_rank(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    w = _perm(args.permutation)
    r = rank.rank_matrix(w)
    data = r.to_json()
    data["permutation"] = str(w)
    data["pillars"] = [str(p) for p in rank.pillars(w)]
    data["essential"] = [str(p) for p in rank.essentials(w)]
    return formatter.Report(
        "rank matrix of {}".format(w),
        headers=[str(j) for j in range(w.n + 1)],
        rows=r.entries.tolist(),
        text=rank.render(r),
        data=data,
    )


def cmd_pillars(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    w = _perm(args.permutation)
    return formatter.Report(
        "pillar entries of {}".format(w),
        headers=["row", "col", "value", "class"],
        rows=_pillar_rows(w),
    )


def cmd_essential(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    w = _perm(args.permutation)
    return formatter.Report(
        "essential entries of {}".format(w),
        headers=["row", "col", "value"],
        rows=[[e.row, e.col, e.value] for e in rank.essentials(w)],
    )


def cmd_rothe(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    w = _perm(args.permutation)
    diagram = rothe.rothe(w, args.flavor)
    frontier = diagram.frontier()
    return formatter.Report(
        "{} Rothe diagram of {}".format(args.flavor, w),
        headers=["row", "col", "value"],
        rows=[[e.row, e.col, e.value] for e in frontier],
        text=diagram.render(),
        data={
            "permutation": str(w),
            "flavor": args.flavor,
            "white": len(diagram.white_cells()),
            "frontier": [str(e) for e in frontier],
        },
    )


def cmd_reconstruct(
    args: argparse.Namespace, limits: config.Limits
) -> formatter.Report:
    ps = pillars.PillarSet.parse(args.pillars)
    steps = pillars.reconstruct_steps(ps)
    rows: typing.List[typing.List[typing.Any]] = [
        [index, str(pillar), k, " ".join(map(str, placed))]
        for index, (pillar, k, placed) in enumerate(
            zip(ps.pillars, steps.increments, steps.placements), start=1
        )
    ]
    fill = steps.placements[-1]
    rows.append([len(rows) + 1, "fill", len(fill), " ".join(map(str, fill))])
    return formatter.Report(
        "reconstruction of {}".format(ps),
        headers=["step", "pillar", "k", "dots"],
        rows=rows,
        text="{}\n".format(steps.permutation)
        + formatter.TEXT_FORMATTER.format(
            formatter.Report("", ["step", "pillar", "k", "dots"], rows)
        ),
        data={
            "permutation": str(steps.permutation),
            "increments": list(steps.increments),
        },
    )


def cmd_codim(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    if "=" in args.target:
        ps = pillars.PillarSet.parse(args.target)
    else:
        ps = pillars.pillar_set(_perm(args.target))
    codim = pillars.codim_from_pillars(ps)
    w = pillars.reconstruct(ps)
    if codim != permutation.colength(w):
        raise exceptions.VerificationMismatch(
            "codimension {} from pillars differs from colength {} of {}".format(
                codim, permutation.colength(w), w
            )
        )
    return formatter.Report(
        "codimension",
        headers=["permutation", "codimension", "length"],
        rows=[[str(w), codim, permutation.length(w)]],
    )


def cmd_truncate(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    w = _perm(args.permutation)
    result = pillars.truncate(w, args.t)
    return formatter.Report(
        "truncation",
        headers=["permutation", "t", "truncation"],
        rows=[[str(w), args.t, str(result)]],
    )


def cmd_transpose(
    args: argparse.Namespace, limits: config.Limits
) -> formatter.Report:
    w = _perm(args.permutation)
    if args.elementary is not None:
        result, stages = transposition.elementary_partial_transpose_trace(
            w, args.elementary
        )
        return formatter.Report(
            "elementary partial transposition",
            headers=["stage", "values"],
            rows=[[index, stage] for index, stage in enumerate(stages)],
            text=" -> ".join(stages),
            data={"permutation": str(w), "result": str(result), "stages": stages},
        )
    classes = [int(c) for c in args.classes.split(",") if c.strip()]
    outcome = transposition.partial_transpose(w, classes)
    return formatter.Report(
        "partial transposition",
        headers=["permutation", "classes", "outcome", "result"],
        rows=[
            [
                str(w),
                args.classes,
                outcome.kind.value,
                "" if outcome.result is None else str(outcome.result),
            ]
        ],
        data=outcome.to_json(),
    )


def cmd_cone_class(
    args: argparse.Namespace, limits: config.Limits
) -> formatter.Report:
    w = _perm(args.permutation)
    members = sorted(transposition.cone_class(w))
    return formatter.Report(
        "cone class of {}".format(w),
        headers=["permutation", "length"],
        rows=[[str(m), permutation.length(m)] for m in members],
    )


def _classification(
    args: argparse.Namespace, limits: config.Limits
) -> transposition.Classification:
    return cache.classify_cached(
        args.n, args.cache, lambda n: transposition.classify_all(n, limits)
    )


def _gap_rows(
    gaps: typing.Iterable[transposition.KnownGap],
) -> typing.List[typing.List[typing.Any]]:
    return [
        [str(g.source), str(g.target), " ".join(map(str, g.transposed))] for g in gaps
    ]


def _class_rows(
    classes: typing.Iterable[typing.Sequence[permutation.Permutation]],
) -> typing.List[typing.List[typing.Any]]:
    return [
        [
            str(members[0]),
            permutation.length(members[0]),
            len(members),
            " ".join(map(str, members)),
        ]
        for members in classes
    ]


def cmd_classify(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    classification = _classification(args, limits)
    if args.by_dim:
        report = formatter.Report(
            "cone classes of S_{} by dimension".format(args.n),
            headers=["dimension", "classes"],
            rows=[[m, c] for m, c in enumerate(classification.by_dimension())],
            key="classes",
        )
    else:
        report = formatter.Report(
            "cone classes of S_{}".format(args.n),
            headers=["representative", "dimension", "size", "members"],
            rows=_class_rows(classification.classes),
            key="classes",
        )
    if args.check_pow2:
        violations = transposition.pow2_violations(classification.classes)
        report.sections.append(
            formatter.Report(
                "classes whose size is not a power of two",
                headers=["representative", "dimension", "size", "members"],
                rows=_class_rows(violations),
                key="pow2_violations",
            )
        )
    if args.known_gaps:
        gaps = transposition.known_gaps(permutation.all_permutations(args.n))
        report.sections.append(
            formatter.Report(
                "non-admissible transpositions keeping the length",
                headers=["source", "target", "transposed"],
                rows=_gap_rows(gaps),
                data=[g.to_json() for g in gaps],
                key="known_gaps",
            )
        )
    return report


def cmd_tables(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    table = enumeration.dimension_table(args.n, limits, _classification(args, limits))
    findings = enumeration.check_table(table)
    data = table.to_json()
    data["findings"] = [str(f) for f in findings]
    rows: typing.List[typing.List[typing.Any]] = [list(row) for row in table.rows()]
    rows.append(["total", sum(table.schubert), table.total])
    return formatter.Report(
        "Schubert varieties and cone classes of S_{}".format(args.n),
        headers=["dimension", "varieties", "cones"],
        rows=rows,
        data=data,
    )


def cmd_equations(
    args: argparse.Namespace, limits: config.Limits
) -> formatter.Report:
    w = _perm(args.permutation)
    system = equations.minor_system(w, args.scope)
    return formatter.Report(
        "{} rank conditions of {}".format(args.scope, w),
        headers=["equation"],
        rows=[[equations.format_polynomial(p)] for p in system.generators()],
        data=system.to_json(),
    )


def cmd_count(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    w = _perm(args.permutation)
    count = finite_field.count_solutions(w, args.q, args.scope, args.semantics, limits)
    return formatter.Report(
        "points over F_{}".format(args.q),
        headers=["permutation", "q", "scope", "semantics", "count"],
        rows=[[str(w), args.q, args.scope, args.semantics, count]],
    )


def cmd_verify(args: argparse.Namespace, limits: config.Limits) -> formatter.Report:
    if args.sample is None:
        perms = list(permutation.all_permutations(args.n))
    else:
        perms = finite_field.sample_permutations(args.n, args.sample, args.seed)
    results = finite_field.verify_pillar_sufficiency(perms, args.q, limits)
    report = formatter.Report(
        "pillar sufficiency over F_{}".format(args.q),
        headers=["permutation", "equal", "points", "first_divergence"],
        rows=[
            [str(c.w), c.equal, c.points, "" if c.equal else c.first_divergence]
            for c in results
        ],
        data=[c.to_json() for c in results],
    )
    failed = [c for c in results if not c.equal]
    if failed:
        args.output_target.write(report)
        raise exceptions.VerificationMismatch(
            "pillar-only and all-entries systems differ for {}".format(
                ", ".join(str(c.w) for c in failed)
            )
        )
    return report


def cmd_check_pow2(
    args: argparse.Namespace, limits: config.Limits
) -> formatter.Report:
    classification = _classification(args, limits)
    violations = transposition.pow2_violations(classification.classes)
    return formatter.Report(
        "cone classes of S_{} whose size is not a power of two".format(args.n),
        headers=["representative", "size", "members"],
        rows=[
            [str(members[0]), len(members), " ".join(map(str, members))]
            for members in violations
        ],
    )


def cmd_known_gaps(
    args: argparse.Namespace, limits: config.Limits
) -> formatter.Report:
    if args.permutations:
        perms: typing.Iterable[permutation.Permutation] = [
            _perm(p) for p in args.permutations
        ]
    elif args.n is not None:
        limits.check_n(args.n)
        perms = permutation.all_permutations(args.n)
    else:
        raise exceptions.InvalidInput("known-gaps needs --n or permutations")
    gaps = transposition.known_gaps(perms)
    return formatter.Report(
        "non-admissible transpositions keeping the length",
        headers=["source", "target", "transposed"],
        rows=_gap_rows(gaps),
        data=[g.to_json() for g in gaps],
    )


def _add_n(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--n", type=int, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-cones",
        description=(
            "Rank matrices, pillar entries and tangent cones of Schubert varieties."
        ),
    )
    parser.add_argument(
        "--format", choices=sorted(formatter.preconfigured), default="text"
    )
    parser.add_argument("--output", help="write the report to this file")
    parser.add_argument("--cache", help="classification cache file")
    parser.add_argument("--jobs", type=int, help="worker processes")
    parser.add_argument("--budget", type=int, help="largest number of F_q points")
    parser.add_argument("--max-n", type=int, help="largest n for S_n enumerations")
    parser.add_argument(
        "--log-level",
        choices=["debug", "info", "warning", "error", "critical"],
        default="warning",
    )
    parser.add_argument("--log-format", choices=["text", "json"], default="text")
    parser.add_argument(
        "--default-log-level",
        action="append",
        default=[],
        metavar="LOGGER=LEVEL",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func: Command, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    for name, func, help in [
        ("rank", cmd_rank, "rank matrix with pillar and essential entries"),
        ("pillars", cmd_pillars, "pillar entries and their linked classes"),
        ("essential", cmd_essential, "essential entries"),
        ("cone-class", cmd_cone_class, "closure under admissible transpositions"),
    ]:
        command(name, func, help).add_argument("permutation")

    p = command("rothe", cmd_rothe, "Rothe diagram")
    p.add_argument("permutation")
    p.add_argument("--flavor", choices=types.FLAVORS, default="standard")

    p = command("reconstruct", cmd_reconstruct, "permutation from pillar entries")
    p.add_argument("pillars", help='e.g. "n=4; 1,2=1; 2,3=2"')

    p = command("codim", cmd_codim, "codimension from pillar entries")
    p.add_argument("target", help="a permutation or a pillar set")

    p = command("truncate", cmd_truncate, "keep the first t linked classes")
    p.add_argument("permutation")
    p.add_argument("t", type=int)

    p = command("transpose", cmd_transpose, "admissible partial transposition")
    p.add_argument("permutation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--classes", help="comma separated class indices")
    group.add_argument("--elementary", type=int, metavar="T")

    p = command("classify", cmd_classify, "partition S_n into cone classes")
    _add_n(p)
    p.add_argument("--by-dim", action="store_true")
    p.add_argument("--check-pow2", action="store_true")
    p.add_argument("--known-gaps", action="store_true")

    p = command("tables", cmd_tables, "varieties and cone classes by dimension")
    _add_n(p)

    p = command("equations", cmd_equations, "minors generating the rank conditions")
    p.add_argument("permutation")
    p.add_argument("--scope", choices=types.SCOPES, default="pillar")

    p = command("count", cmd_count, "count points over F_q")
    p.add_argument("permutation")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--scope", choices=types.SCOPES, default="pillar")
    p.add_argument("--semantics", choices=types.SEMANTICS, default="variety")

    p = command(
        "verify-pillar-sufficiency",
        cmd_verify,
        "compare pillar-only and all-entries solution sets",
    )
    _add_n(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)

    p = command("check-pow2", cmd_check_pow2, "cone classes of size not 2^m")
    _add_n(p)

    p = command(
        "known-gaps", cmd_known_gaps, "non-admissible equal-length transpositions"
    )
    _add_n(p, required=False)
    p.add_argument("permutations", nargs="*")

    return parser


def setup_logging(args: argparse.Namespace) -> None:
    if args.log_format == "json":
        log_formatter: typing.Any = formatter.JSON_LOG_FORMATTER
    else:
        log_formatter = daiquiri.formatter.TEXT_FORMATTER
    daiquiri.setup(
        level=args.log_level.upper(),
        outputs=[daiquiri.output.Stream(sys.stderr, formatter=log_formatter)],
    )
    try:
        daiquiri.parse_and_set_default_log_levels(args.default_log_level)
    except ValueError as e:
        raise exceptions.InvalidInput(str(e))


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    target: typing.Optional[output.Output] = None
    try:
        setup_logging(args)
        limits = config.Limits.from_environ().replace(
            jobs=args.jobs, point_budget=args.budget, max_classify_n=args.max_n
        )
        report_formatter = formatter.preconfigured[args.format]
        if args.output:
            target = output.File(args.output, report_formatter)
        else:
            target = output.Stream(formatter=report_formatter)
        args.output_target = target
        target.write(args.func(args, limits))
    except exceptions.SchubertConesError as e:
        LOG.error(str(e), kind=type(e).__name__, exit_code=e.exit_code)
        return e.exit_code
    finally:
        if isinstance(target, output.File):
            target.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
