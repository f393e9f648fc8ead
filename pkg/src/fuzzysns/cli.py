"""Command-line front end.

Subcommands: ``eval`` runs a scenario file and prints the transformation
trace, ``carry`` forms a common carry from inline literals, ``table`` samples
a triangular membership function into CSV, and ``oracle-check`` runs the
randomized brute-force equivalence suite.  Exit codes: 0 success, 1 validation
or runtime failure, 2 parse failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .carry import common_carry_dfn, common_carry_tri
from .errors import FuzzySnsError, ParseError, ScenarioValidationError, StepExecutionError
from .formats import (
    format_fraction,
    format_scalar,
    parse_discrete,
    parse_triangular,
    scenario_from_json,
)
from .numbers import tfn_membership
from .oracle import equivalence_suite
from .operators import TransformOptions
from .scenario import Scenario, Trace, run

PARSE_FAILURE = 2
VALIDATION_FAILURE = 1


def _trace_text(trace: Trace) -> str:
    lines = []
    for step in trace.steps:
        parts = []
        single_operand = len(step.result.partial_carries) == 1
        for entity_id, carry in step.result.partial_carries.items():
            label = "p" if single_operand else f"p_{entity_id}"
            parts.append(f"{label}={format_scalar(carry)}")
        if step.result.common_carry is not None:
            parts.append(f"p.={format_scalar(step.result.common_carry)}")
        for entity_id, remainder in step.result.remainders.items():
            label = "rem" if single_operand else f"rem_{entity_id}"
            parts.append(f"{label}={format_scalar(remainder)}")
        single_image = len(step.result.transformants) == 1
        for entity_id, transformant in step.result.transformants.items():
            label = "q" if single_image else f"q_{entity_id}"
            parts.append(f"{label}={format_scalar(transformant)}")
        for entity_id, cardinal in step.result.new_image_cardinals.items():
            parts.append(f"N'_{entity_id}={format_scalar(cardinal)}")
        lines.append(f"step {step.index} {step.spec.form.value}: " + " ".join(parts))
    lines.append("final:")
    for entity_id, cardinal in trace.final.items():
        lines.append(f"  {entity_id} = {format_scalar(cardinal)}")
    return "\n".join(lines)


def _trace_json(trace: Trace) -> str:
    doc = {
        "steps": [
            {
                "index": step.index,
                "form": step.spec.form.value,
                "partial_carries": {k: format_scalar(v) for k, v in step.result.partial_carries.items()},
                "common_carry": (
                    None if step.result.common_carry is None
                    else format_scalar(step.result.common_carry)
                ),
                "remainders": {k: format_scalar(v) for k, v in step.result.remainders.items()},
                "transformants": {k: format_scalar(v) for k, v in step.result.transformants.items()},
                "new_image_cardinals": {
                    k: format_scalar(v) for k, v in step.result.new_image_cardinals.items()
                },
                "state": {k: format_scalar(v) for k, v in step.state.items()},
            }
            for step in trace.steps
        ],
        "final": {k: format_scalar(v) for k, v in trace.final.items()},
        "warnings": list(trace.warnings),
    }
    return json.dumps(doc, indent=2)


def _trace_csv(trace: Trace) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["step", "form", "field", "entity", "value"])
    for step in trace.steps:
        form = step.spec.form.value
        for entity_id, value in step.result.partial_carries.items():
            writer.writerow([step.index, form, "partial_carry", entity_id, format_scalar(value)])
        if step.result.common_carry is not None:
            writer.writerow([step.index, form, "common_carry", "", format_scalar(step.result.common_carry)])
        for entity_id, value in step.result.remainders.items():
            writer.writerow([step.index, form, "remainder", entity_id, format_scalar(value)])
        for entity_id, value in step.result.transformants.items():
            writer.writerow([step.index, form, "transformant", entity_id, format_scalar(value)])
        for entity_id, value in step.result.new_image_cardinals.items():
            writer.writerow([step.index, form, "new_image", entity_id, format_scalar(value)])
    for entity_id, value in trace.final.items():
        writer.writerow(["", "", "final", entity_id, format_scalar(value)])
    return buffer.getvalue().rstrip("\n")


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        text = open(args.scenario, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: cannot read {args.scenario}: {exc}", file=sys.stderr)
        return PARSE_FAILURE
    try:
        scenario = scenario_from_json(text)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_FAILURE
    options = scenario.options
    if args.remainder_mode is not None:
        options = TransformOptions(args.remainder_mode, options.clamp_negative)
    if args.clamp_negative:
        options = TransformOptions(options.remainder_mode, True)
    scenario = Scenario(scenario.initial, scenario.steps, options)
    try:
        trace = run(scenario)
    except ScenarioValidationError as exc:
        for diagnostic in exc.diagnostics:
            print(f"invalid: {diagnostic}", file=sys.stderr)
        return VALIDATION_FAILURE
    except (StepExecutionError, FuzzySnsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_FAILURE
    for warning in trace.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if args.format == "json":
        print(_trace_json(trace))
    elif args.format == "csv":
        print(_trace_csv(trace))
    else:
        print(_trace_text(trace))
    return 0


def cmd_carry(args: argparse.Namespace) -> int:
    try:
        if args.family == "tri":
            partials = [parse_triangular(text) for text in args.literals]
            formed = common_carry_tri(partials)
        else:
            partials = [parse_discrete(text) for text in args.literals]
            formed = common_carry_dfn(partials)
    except (ParseError, FuzzySnsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_FAILURE
    print(format_scalar(formed))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.resolution < 2:
        print("error: resolution must be at least 2", file=sys.stderr)
        return VALIDATION_FAILURE
    try:
        number = parse_triangular(args.literal)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_FAILURE
    span = Fraction(number.upper - number.lower)
    print("x,mu")
    for k in range(args.resolution):
        x = Fraction(number.lower) + span * k / (args.resolution - 1)
        print(f"{format_fraction(x)},{format_fraction(tfn_membership(x, number))}")
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    if args.cases < 1:
        print("error: --cases must be at least 1", file=sys.stderr)
        return VALIDATION_FAILURE
    passed, total = equivalence_suite(args.seed, args.cases)
    print(f"{passed}/{total} ok")
    return 0 if passed == total else VALIDATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzysns",
        description="Fuzzy cardinal semantic transformations over crisp, discrete and triangular cardinals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eval_parser = sub.add_parser("eval", help="run a scenario file and print the trace")
    eval_parser.add_argument("scenario", help="path to a scenario JSON document")
    eval_parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    eval_parser.add_argument(
        "--remainder-mode", choices=("correlated", "extension"), default=None,
        help="override the scenario's discrete remainder semantics",
    )
    eval_parser.add_argument(
        "--clamp-negative", action="store_true",
        help="clamp negative remainder values to zero instead of flagging them",
    )
    eval_parser.set_defaults(func=cmd_eval)

    carry_parser = sub.add_parser("carry", help="form a common carry from partial carries")
    carry_parser.add_argument("--family", choices=("tri", "dfn"), required=True)
    carry_parser.add_argument("literals", nargs="+", help='literals like "(1;2;4)" or "{2|1}"')
    carry_parser.set_defaults(func=cmd_carry)

    table_parser = sub.add_parser("table", help="sample a triangular membership function as CSV")
    table_parser.add_argument("literal", help='triangular literal like "(4; 7; 9)"')
    table_parser.add_argument("--resolution", type=int, default=11)
    table_parser.set_defaults(func=cmd_table)

    oracle_parser = sub.add_parser("oracle-check", help="run the brute-force equivalence suite")
    oracle_parser.add_argument("--seed", type=int, default=0)
    oracle_parser.add_argument("--cases", type=int, default=1000)
    oracle_parser.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
