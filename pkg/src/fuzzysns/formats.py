"""Text and JSON round-trip formats for fuzzy values, scenarios and grades.

Literal syntax: crisp values print as bare integers, triangular triples as
"(lower; mode; upper)", discrete numbers as "{value|grade, ...}" sorted by
support value.  Grades print as exact decimals when the denominator allows it
and as "p/q" otherwise, so every printed literal re-parses to an identical
value.  Scenario files are JSON documents; floats inside them are read as
exact fractions, never binary floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .crisp import Form, OperatorSpec
from .errors import ParseError
from .numbers import (
    DiscreteFuzzyNumber,
    FuzzyScalar,
    TriangularFuzzyNumber,
    family,
)
from .operators import TransformOptions
from .scenario import Scenario


def format_fraction(value: Fraction | int) -> str:
    """Exact decimal when the denominator is 2^a * 5^b, else "p/q"."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    reduced = f.denominator
    twos = fives = 0
    while reduced % 2 == 0:
        reduced //= 2
        twos += 1
    while reduced % 5 == 0:
        reduced //= 5
        fives += 1
    if reduced != 1:
        return f"{f.numerator}/{f.denominator}"
    places = max(twos, fives)
    scaled = abs(f.numerator) * 10**places // f.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if f.numerator < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a number: {text!r}") from exc


def format_scalar(value: FuzzyScalar) -> str:
    if isinstance(value, TriangularFuzzyNumber):
        return str(value)
    if isinstance(value, DiscreteFuzzyNumber):
        return str(value)
    return str(value)


def parse_triangular(text: str) -> TriangularFuzzyNumber:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(f"triangular literal must look like (a; m; b): {text!r}")
    parts = body[1:-1].split(";")
    if len(parts) != 3:
        raise ParseError(f"triangular literal needs three components: {text!r}")
    try:
        lower, mode, upper = (int(p.strip()) for p in parts)
    except ValueError as exc:
        raise ParseError(f"triangular components must be integers: {text!r}") from exc
    try:
        return TriangularFuzzyNumber(lower, mode, upper)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def parse_discrete(text: str) -> DiscreteFuzzyNumber:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"discrete literal must look like {{v|grade, ...}}: {text!r}")
    points = {}
    for chunk in body[1:-1].split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty entry in discrete literal: {text!r}")
        value_text, sep, grade_text = chunk.partition("|")
        if not sep:
            raise ParseError(f"discrete entry needs value|grade: {chunk!r}")
        try:
            value = int(value_text.strip())
        except ValueError as exc:
            raise ParseError(f"support value must be an integer: {chunk!r}") from exc
        points[value] = parse_fraction(grade_text)
    try:
        return DiscreteFuzzyNumber(points)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def parse_scalar(text: str) -> FuzzyScalar:
    """Parse a crisp, triangular, or discrete literal by its leading bracket."""
    body = text.strip()
    if body.startswith("("):
        return parse_triangular(body)
    if body.startswith("{"):
        return parse_discrete(body)
    try:
        return int(body)
    except ValueError as exc:
        raise ParseError(f"not a fuzzy-number literal: {text!r}") from exc


# --- scenario files ----------------------------------------------------------

def _scalar_to_json(value: FuzzyScalar) -> Any:
    if isinstance(value, TriangularFuzzyNumber):
        return [value.lower, value.mode, value.upper]
    if isinstance(value, DiscreteFuzzyNumber):
        return [[v, format_fraction(g)] for v, g in value.points]
    return value


def _is_int(node: Any) -> bool:
    return isinstance(node, int) and not isinstance(node, bool)


def _scalar_from_json(node: Any, where: str) -> FuzzyScalar:
    if _is_int(node):
        return node
    if isinstance(node, str):
        return parse_scalar(node)
    if isinstance(node, dict):
        items = []
        for key, grade in node.items():
            try:
                items.append((int(key), grade))
            except (TypeError, ValueError) as exc:
                raise ParseError(f"{where}: support key {key!r} is not an integer") from exc
        try:
            return DiscreteFuzzyNumber(items)
        except Exception as exc:
            raise ParseError(f"{where}: {exc}") from exc
    if isinstance(node, list):
        if len(node) == 3 and all(_is_int(x) for x in node):
            try:
                return TriangularFuzzyNumber(*node)
            except Exception as exc:
                raise ParseError(f"{where}: {exc}") from exc
        if node and all(isinstance(x, list) and len(x) == 2 for x in node):
            try:
                return DiscreteFuzzyNumber([(v, g) for v, g in node])
            except Exception as exc:
                raise ParseError(f"{where}: {exc}") from exc
    raise ParseError(f"{where}: cannot read fuzzy scalar from {node!r}")


def _step_to_json(step: OperatorSpec) -> dict:
    radix: Any
    if len(step.radices) == 1:
        radix = _scalar_to_json(step.radices[0])
    else:
        radix = [_scalar_to_json(n) for n in step.radices]
    return {
        "form": step.form.value,
        "operands": list(step.operands),
        "images": list(step.images),
        "radix": radix,
        "rates": [_scalar_to_json(r) for r in step.rates],
    }


def _step_from_json(node: Any, index: int) -> OperatorSpec:
    where = f"steps[{index}]"
    if not isinstance(node, dict):
        raise ParseError(f"{where}: step must be an object")
    try:
        form = Form(node["form"])
    except KeyError as exc:
        raise ParseError(f"{where}: missing 'form'") from exc
    except ValueError as exc:
        raise ParseError(f"{where}: unknown form {node['form']!r}") from exc
    for key in ("operands", "images", "radix", "rates"):
        if key not in node:
            raise ParseError(f"{where}: missing '{key}'")
    operands = node["operands"]
    images = node["images"]
    if not isinstance(operands, list) or not all(isinstance(e, str) for e in operands):
        raise ParseError(f"{where}: 'operands' must be a list of entity ids")
    if not isinstance(images, list) or not all(isinstance(e, str) for e in images):
        raise ParseError(f"{where}: 'images' must be a list of entity ids")
    raw_radix = node["radix"]
    if len(operands) == 1:
        radices = [_scalar_from_json(raw_radix, f"{where}.radix")]
    else:
        if not isinstance(raw_radix, list) or len(raw_radix) != len(operands):
            raise ParseError(f"{where}: 'radix' must list one radix per operand")
        radices = [
            _scalar_from_json(x, f"{where}.radix[{k}]") for k, x in enumerate(raw_radix)
        ]
    raw_rates = node["rates"]
    if not isinstance(raw_rates, list):
        raw_rates = [raw_rates]
    rates = [_scalar_from_json(x, f"{where}.rates[{k}]") for k, x in enumerate(raw_rates)]
    return OperatorSpec(
        form=form,
        operands=tuple(operands),
        images=tuple(images),
        radices=tuple(radices),
        rates=tuple(rates),
    )


def scenario_to_json(scenario: Scenario) -> str:
    doc = {
        "entities": [
            {"id": entity_id, "kind": family(value), "value": _scalar_to_json(value)}
            for entity_id, value in scenario.initial.items()
        ],
        "steps": [_step_to_json(step) for step in scenario.steps],
        "options": {
            "remainder_mode": scenario.options.remainder_mode,
            "clamp_negative": scenario.options.clamp_negative,
        },
    }
    return json.dumps(doc, indent=2)


def scenario_from_json(text: str) -> Scenario:
    """Parse a scenario document; malformed JSON reports line and column."""
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("scenario document must be a JSON object")
    entities_node = doc.get("entities")
    if not isinstance(entities_node, list):
        raise ParseError("missing or invalid 'entities' list")
    initial: dict[str, FuzzyScalar] = {}
    for k, node in enumerate(entities_node):
        where = f"entities[{k}]"
        if not isinstance(node, dict) or "id" not in node or "value" not in node:
            raise ParseError(f"{where}: entity must be an object with 'id' and 'value'")
        entity_id = node["id"]
        if not isinstance(entity_id, str) or not entity_id:
            raise ParseError(f"{where}: entity id must be a nonempty string")
        if entity_id in initial:
            raise ParseError(f"{where}: duplicate entity id {entity_id!r}")
        value = _scalar_from_json(node["value"], f"{where}.value")
        kind = node.get("kind")
        if kind is not None and kind != family(value):
            raise ParseError(
                f"{where}: declared kind {kind!r} does not match value kind {family(value)!r}"
            )
        initial[entity_id] = value
    steps_node = doc.get("steps", [])
    if not isinstance(steps_node, list):
        raise ParseError("'steps' must be a list")
    steps = tuple(_step_from_json(node, k) for k, node in enumerate(steps_node))
    options_node = doc.get("options", {})
    if not isinstance(options_node, dict):
        raise ParseError("'options' must be an object")
    mode = options_node.get("remainder_mode", "correlated")
    clamp = options_node.get("clamp_negative", False)
    if mode not in ("correlated", "extension"):
        raise ParseError(f"options.remainder_mode must be correlated|extension, got {mode!r}")
    if not isinstance(clamp, bool):
        raise ParseError("options.clamp_negative must be a boolean")
    return Scenario(initial, steps, TransformOptions(remainder_mode=mode, clamp_negative=clamp))
