"""Named entities with fuzzy cardinals plus an ordered list of operator steps.

A scenario holds the initial state of a multeity (entity id -> cardinal), the
operator steps to apply in order, and the transform options.  Running it
yields a trace: per step, the full transform result and a snapshot of the
state after remainders are written back to operand entities and new cardinals
to image entities.  Evaluation is single-pass and strictly sequential;
remainders do not feed back into the same step, and entities a step does not
name are untouched by it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .crisp import Form, OperatorSpec, TransformResult, valence_matches
from .errors import (
    FuzzySnsError,
    MixedFamilyError,
    ScenarioValidationError,
    StepExecutionError,
)
from .numbers import (
    DiscreteFuzzyNumber,
    FuzzyScalar,
    TriangularFuzzyNumber,
    family,
    joint_family,
)
from .operators import TransformOptions, apply_D, apply_F, apply_L, apply_M

Multeity = dict[str, FuzzyScalar]


@dataclass(frozen=True)
class Scenario:
    initial: Multeity
    steps: tuple[OperatorSpec, ...]
    options: TransformOptions = field(default_factory=TransformOptions)

    def __post_init__(self):
        object.__setattr__(self, "initial", dict(self.initial))
        object.__setattr__(self, "steps", tuple(self.steps))


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding; ``step`` is None for multeity-level issues."""

    step: Optional[int]
    message: str

    def __str__(self) -> str:
        if self.step is None:
            return self.message
        return f"step {self.step}: {self.message}"


@dataclass(frozen=True)
class TraceStep:
    index: int
    spec: OperatorSpec
    result: TransformResult
    state: Multeity


@dataclass(frozen=True)
class Trace:
    steps: tuple[TraceStep, ...]
    final: Multeity
    warnings: tuple[str, ...]


def _scalar_ok(value) -> bool:
    try:
        family(value)
    except FuzzySnsError:
        return False
    return True


def _radix_ok(value: FuzzyScalar) -> bool:
    if isinstance(value, TriangularFuzzyNumber):
        return value.lower >= 1
    if isinstance(value, DiscreteFuzzyNumber):
        return value.points[0][0] >= 1
    return value >= 1


def validate(scenario: Scenario) -> list[Diagnostic]:
    """All reasons the scenario cannot run; empty list means runnable.

    Family-mix checks use the initial cardinals; a step can still fail at run
    time if an earlier step moved an entity into a conflicting family.
    """
    out: list[Diagnostic] = []
    for entity_id, cardinal in scenario.initial.items():
        if not isinstance(entity_id, str) or not entity_id:
            out.append(Diagnostic(None, f"entity id {entity_id!r} must be a nonempty string"))
        if not _scalar_ok(cardinal):
            out.append(Diagnostic(None, f"entity {entity_id!r} has an invalid cardinal"))
    for index, step in enumerate(scenario.steps):
        w, v = len(step.operands), len(step.images)
        if not valence_matches(step.form, w, v):
            out.append(
                Diagnostic(index, f"form {step.form.value} cannot take valence ({w}, {v})")
            )
        if len(step.radices) != w:
            out.append(Diagnostic(index, f"{len(step.radices)} radices for {w} operands"))
        if len(step.rates) != v:
            out.append(Diagnostic(index, f"{len(step.rates)} rates for {v} images"))
        for entity_id in (*step.operands, *step.images):
            if entity_id not in scenario.initial:
                out.append(Diagnostic(index, f"unknown entity '{entity_id}'"))
        overlap = set(step.operands) & set(step.images)
        if overlap:
            out.append(
                Diagnostic(index, f"operand and image entities overlap: {sorted(overlap)}")
            )
        for radix in step.radices:
            if _scalar_ok(radix) and not _radix_ok(radix):
                out.append(Diagnostic(index, f"invalid radix {radix}"))
            elif not _scalar_ok(radix):
                out.append(Diagnostic(index, f"radix {radix!r} is not a fuzzy scalar"))
        for rate in step.rates:
            if not _scalar_ok(rate):
                out.append(Diagnostic(index, f"rate {rate!r} is not a fuzzy scalar"))
        known = [e for e in (*step.operands, *step.images) if e in scenario.initial]
        try:
            joint_family(
                [scenario.initial[e] for e in known]
                + [x for x in (*step.radices, *step.rates) if _scalar_ok(x)]
            )
        except MixedFamilyError:
            out.append(Diagnostic(index, "step mixes discrete and triangular values"))
    return out


def _run_step(
    step: OperatorSpec, state: Multeity, options: TransformOptions
) -> TransformResult:
    operands = [state[e] for e in step.operands]
    images = [state[e] for e in step.images]
    if step.form == Form.L:
        return apply_L(
            operands[0], images[0], step.radices[0], step.rates[0],
            options=options, operand_id=step.operands[0], image_id=step.images[0],
        )
    if step.form == Form.D:
        return apply_D(
            operands[0], images, step.radices[0], step.rates,
            options=options, operand_id=step.operands[0], image_ids=step.images,
        )
    if step.form == Form.F:
        return apply_F(
            operands, images[0], step.radices, step.rates[0],
            options=options, operand_ids=step.operands, image_id=step.images[0],
        )
    return apply_M(
        operands, images, step.radices, step.rates,
        options=options, operand_ids=step.operands, image_ids=step.images,
    )


def run(scenario: Scenario) -> Trace:
    """Apply every step in order, threading the multeity state through.

    Raises ScenarioValidationError up front if validation fails, and
    StepExecutionError (with the step index) if an operator rejects its
    inputs mid-run.
    """
    diagnostics = validate(scenario)
    if diagnostics:
        raise ScenarioValidationError(diagnostics)
    state: Multeity = dict(scenario.initial)
    trace_steps: list[TraceStep] = []
    warnings: list[str] = []
    for index, step in enumerate(scenario.steps):
        try:
            result = _run_step(step, state, scenario.options)
        except FuzzySnsError as exc:
            raise StepExecutionError(index, exc) from exc
        for entity_id, remainder in result.remainders.items():
            state[entity_id] = remainder
        for entity_id, cardinal in result.new_image_cardinals.items():
            state[entity_id] = cardinal
        warnings.extend(f"step {index}: {w}" for w in result.warnings)
        trace_steps.append(TraceStep(index, step, result, dict(state)))
    return Trace(tuple(trace_steps), dict(state), tuple(warnings))
