"""Fuzzy number representations and the arithmetic primitives built on them.

Two representations are supported: triangular fuzzy numbers, stored as an
integer triple (lower; mode; upper), and discrete fuzzy numbers, stored as a
finite map from integer support values to membership grades.  Grades are exact
``fractions.Fraction`` values in (0, 1] so that equality checks and round-trips
never suffer binary-float drift.  A plain ``int`` plays the role of a crisp
value; ``FuzzyScalar`` is the union of the three.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .errors import DomainError, InvalidRadixError, MixedFamilyError

GradeLike = Union[int, float, str, Fraction]


def as_grade(value: GradeLike) -> Fraction:
    """Coerce a membership grade to an exact Fraction in (0, 1].

    Floats are read through their decimal repr, so 0.3 means exactly 3/10.
    """
    if isinstance(value, bool):
        raise DomainError(f"grade must be numeric, got {value!r}")
    if isinstance(value, Fraction):
        grade = value
    elif isinstance(value, int):
        grade = Fraction(value)
    elif isinstance(value, float):
        grade = Fraction(repr(value))
    elif isinstance(value, str):
        grade = Fraction(value)
    else:
        raise DomainError(f"grade must be numeric, got {value!r}")
    if not 0 < grade <= 1:
        raise DomainError(f"grade {grade} outside (0, 1]")
    return grade


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Integer triple (lower; mode; upper) with piecewise-linear membership.

    A degenerate triple lower == mode == upper represents a crisp value.
    Bounds are plain integers: remainder subtraction can push them negative.
    """

    lower: int
    mode: int
    upper: int

    def __post_init__(self):
        for name in ("lower", "mode", "upper"):
            _as_int(getattr(self, name), name)
        if not self.lower <= self.mode <= self.upper:
            raise DomainError(
                f"triangular triple out of order: ({self.lower}; {self.mode}; {self.upper})"
            )

    @property
    def is_crisp(self) -> bool:
        return self.lower == self.mode == self.upper

    @property
    def is_nonnegative(self) -> bool:
        return self.lower >= 0

    def __str__(self) -> str:
        return f"({self.lower}; {self.mode}; {self.upper})"


@dataclass(frozen=True)
class DiscreteFuzzyNumber:
    """Finite, normal fuzzy number: integer support values with exact grades.

    ``points`` is canonicalised at construction into a tuple of (value, grade)
    pairs sorted by support value.  Any mapping or iterable of pairs is
    accepted; grades go through :func:`as_grade`.  At least one grade must be
    exactly 1 (normality), so every number has a mode.
    """

    points: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        raw = self.points
        items: Iterable = raw.items() if isinstance(raw, Mapping) else raw
        seen: dict[int, Fraction] = {}
        for value, grade in items:
            value = _as_int(value, "support value")
            if value in seen:
                raise DomainError(f"duplicate support value {value}")
            seen[value] = as_grade(grade)
        if not seen:
            raise DomainError("support must be nonempty")
        if not any(g == 1 for g in seen.values()):
            raise DomainError("discrete fuzzy number must be normal (some grade == 1)")
        object.__setattr__(self, "points", tuple(sorted(seen.items())))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.points)

    @property
    def mode(self) -> int:
        """Smallest support value carrying grade exactly 1."""
        return next(v for v, g in self.points if g == 1)

    @property
    def is_singleton(self) -> bool:
        return len(self.points) == 1

    @property
    def is_natural(self) -> bool:
        return self.points[0][0] >= 0

    def grade(self, value: int) -> Fraction:
        for v, g in self.points:
            if v == value:
                return g
        return Fraction(0)

    def __str__(self) -> str:
        from .formats import format_fraction  # local import breaks the module cycle

        return "{" + ", ".join(f"{v}|{format_fraction(g)}" for v, g in self.points) + "}"


FuzzyScalar = Union[int, DiscreteFuzzyNumber, TriangularFuzzyNumber]

# Family tags for dispatch over the crisp/discrete/triangular union.
CRISP = "crisp"
DISCRETE = "discrete"
TRIANGULAR = "triangular"


def family(value: FuzzyScalar) -> str:
    if isinstance(value, TriangularFuzzyNumber):
        return TRIANGULAR
    if isinstance(value, DiscreteFuzzyNumber):
        return DISCRETE
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"not a fuzzy scalar: {value!r}")
    return CRISP


def joint_family(values: Iterable[FuzzyScalar]) -> str:
    """Family shared by a group of scalars; crisp mixes with either fuzzy kind.

    Raises MixedFamilyError when discrete and triangular values are combined.
    """
    joint = CRISP
    for value in values:
        fam = family(value)
        if fam == CRISP:
            continue
        if joint == CRISP:
            joint = fam
        elif joint != fam:
            raise MixedFamilyError("cannot mix discrete and triangular values in one operation")
    return joint


def lift_triangular(value: FuzzyScalar) -> TriangularFuzzyNumber:
    if isinstance(value, TriangularFuzzyNumber):
        return value
    if isinstance(value, DiscreteFuzzyNumber):
        raise MixedFamilyError("cannot lift a discrete fuzzy number to triangular")
    v = _as_int(value, "crisp value")
    return TriangularFuzzyNumber(v, v, v)


def lift_discrete(value: FuzzyScalar) -> DiscreteFuzzyNumber:
    if isinstance(value, DiscreteFuzzyNumber):
        return value
    if isinstance(value, TriangularFuzzyNumber):
        raise MixedFamilyError("cannot lift a triangular fuzzy number to discrete")
    v = _as_int(value, "crisp value")
    return DiscreteFuzzyNumber(((v, Fraction(1)),))


def crisp_value(value: FuzzyScalar) -> int | None:
    """The crisp integer a degenerate fuzzy value collapses to, else None."""
    if isinstance(value, TriangularFuzzyNumber):
        return value.mode if value.is_crisp else None
    if isinstance(value, DiscreteFuzzyNumber):
        return value.points[0][0] if value.is_singleton else None
    return _as_int(value, "crisp value")


# --- triangular arithmetic -------------------------------------------------

def tfn_membership(x, a: TriangularFuzzyNumber) -> Fraction:
    """Membership grade of x under the triple's piecewise-linear profile.

    Rising edge on [lower, mode], falling edge on [mode, upper], zero outside;
    a degenerate edge contributes grade 1 at the shared point.  Exact result
    for exact inputs (floats are read via their decimal repr).
    """
    if isinstance(x, float):
        x = Fraction(repr(x))
    else:
        x = Fraction(x)
    if x < a.lower or x > a.upper:
        return Fraction(0)
    if x == a.mode:
        return Fraction(1)
    if x < a.mode:
        return (x - a.lower) / (a.mode - a.lower)
    return (a.upper - x) / (a.upper - a.mode)


def tfn_add(a: TriangularFuzzyNumber, b: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    return TriangularFuzzyNumber(a.lower + b.lower, a.mode + b.mode, a.upper + b.upper)


def tfn_sub(a: TriangularFuzzyNumber, b: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    """Bound-swapping subtraction: (a.lower - b.upper; a.mode - b.mode; a.upper - b.lower)."""
    return TriangularFuzzyNumber(a.lower - b.upper, a.mode - b.mode, a.upper - b.lower)


def tfn_mul(a: TriangularFuzzyNumber, b: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    """Componentwise product; defined only for componentwise-nonnegative triples."""
    if a.lower < 0 or b.lower < 0:
        raise DomainError("componentwise product requires nonnegative triples")
    return TriangularFuzzyNumber(a.lower * b.lower, a.mode * b.mode, a.upper * b.upper)


def tfn_scale(a: TriangularFuzzyNumber, c: int) -> TriangularFuzzyNumber:
    if _as_int(c, "scale factor") < 0:
        raise DomainError("scale factor must be a natural number")
    return TriangularFuzzyNumber(a.lower * c, a.mode * c, a.upper * c)


def tfn_floor_div(num: TriangularFuzzyNumber, div: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    """Carry-style floor division: (num.lower // div.upper; num.mode // div.mode; num.upper // div.lower).

    The divisor components pair in reverse so the result stays ordered.
    """
    if div.lower < 1:
        raise InvalidRadixError(f"divisor components must be >= 1, got {div}")
    if num.lower < 0:
        raise DomainError(f"dividend components must be >= 0, got {num}")
    return TriangularFuzzyNumber(
        num.lower // div.upper, num.mode // div.mode, num.upper // div.lower
    )


# --- discrete arithmetic ---------------------------------------------------

def dfn_zadeh_binary(
    op: Callable[[int, int], int],
    a: DiscreteFuzzyNumber,
    b: DiscreteFuzzyNumber,
) -> DiscreteFuzzyNumber:
    """Sup-min extension of a binary integer function to discrete fuzzy numbers.

    The support is the image of the support cross-product; support values that
    collide keep the maximum of their min-combined grades.
    """
    out: dict[int, Fraction] = {}
    for x, gx in a.points:
        for y, gy in b.points:
            z = op(x, y)
            g = gx if gx < gy else gy
            if g > out.get(z, Fraction(0)):
                out[z] = g
    return DiscreteFuzzyNumber(out)


def dfn_floor_div(
    a: DiscreteFuzzyNumber, n: Union[int, DiscreteFuzzyNumber]
) -> DiscreteFuzzyNumber:
    """Carry of a discrete cardinal over a crisp or discrete radix.

    Crisp radix maps each support value t to t // n keeping its grade;
    a discrete radix extends over support pairs.  Collisions keep max grade.
    """
    if isinstance(n, DiscreteFuzzyNumber):
        if n.points[0][0] < 1:
            raise InvalidRadixError(f"radix support values must be >= 1, got {n}")
        return dfn_zadeh_binary(lambda t, s: t // s, a, n)
    if _as_int(n, "radix") < 1:
        raise InvalidRadixError(f"radix must be >= 1, got {n}")
    out: dict[int, Fraction] = {}
    for t, g in a.points:
        z = t // n
        if g > out.get(z, Fraction(0)):
            out[z] = g
    return DiscreteFuzzyNumber(out)


def dfn_mod(a: DiscreteFuzzyNumber, n: int) -> DiscreteFuzzyNumber:
    """Correlated remainder: each support value t maps to t mod n.

    This is the reading that keeps the remainder paired with the support value
    it came from; the cross-product alternative is a separate, selectable path.
    """
    if _as_int(n, "radix") < 1:
        raise InvalidRadixError(f"radix must be >= 1, got {n}")
    out: dict[int, Fraction] = {}
    for t, g in a.points:
        z = t % n
        if g > out.get(z, Fraction(0)):
            out[z] = g
    return DiscreteFuzzyNumber(out)
