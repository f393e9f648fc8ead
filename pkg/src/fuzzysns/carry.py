"""Common-carry formation for multi-operand operators.

A multi-operand operator does not pick one of its partial carries; it forms a
new carry from all of them.  For triangular partials the formation is the
componentwise minimum of (lower; mode; upper).  For discrete partials the rule
depends on whether the supports intersect: disjoint supports select the
partial with the least mode outright, intersecting supports are recombined on
the support union around the minimum mode.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DomainError, OperatorSpecError
from .numbers import DiscreteFuzzyNumber, TriangularFuzzyNumber


def common_carry_tri(partials: Sequence[TriangularFuzzyNumber]) -> TriangularFuzzyNumber:
    """Componentwise minimum of the partial carries.

    Commutative, associative and idempotent, so the fold order of the
    operands never matters.
    """
    if not partials:
        raise OperatorSpecError("common carry needs at least one partial carry")
    return TriangularFuzzyNumber(
        min(p.lower for p in partials),
        min(p.mode for p in partials),
        min(p.upper for p in partials),
    )


def _form_pair(a: DiscreteFuzzyNumber, b: DiscreteFuzzyNumber) -> DiscreteFuzzyNumber:
    support_a = set(a.support)
    support_b = set(b.support)
    if not (support_a & support_b):
        # Disjoint supports: the partial with the least mode is the carry.
        return a if a.mode <= b.mode else b
    least_mode = min(a.mode, b.mode)
    out: dict[int, Fraction] = {least_mode: Fraction(1)}
    for value in sorted(support_a | support_b):
        if value == least_mode:
            continue
        ga, gb = a.grade(value), b.grade(value)
        grade = max(ga, gb) if value < least_mode else min(ga, gb)
        if grade > 0:
            out[value] = grade
    return DiscreteFuzzyNumber(out)


def common_carry_dfn(partials: Sequence[DiscreteFuzzyNumber]) -> DiscreteFuzzyNumber:
    """Form a discrete common carry, folding pairwise in operand order.

    Pair rule: disjoint supports pick the least-mode partial; intersecting
    supports are merged on the support union, where the minimum of the two
    modes keeps grade 1, values below it keep the larger grade, values above
    it keep the smaller grade, and grade-0 values are dropped.  The pair rule
    is not known to be associative, so the operand order is the contract.
    """
    if not partials:
        raise OperatorSpecError("common carry needs at least one partial carry")
    for p in partials:
        if not isinstance(p, DiscreteFuzzyNumber):
            raise DomainError(f"expected a discrete fuzzy number, got {p!r}")
    acc = partials[0]
    for nxt in partials[1:]:
        acc = _form_pair(acc, nxt)
    return acc
