import operator
import random

import pytest

from pinned_cases import DISTRIBUTION_CASES, FUSION_CASES, LINE_CASES, MULTI_CASES
from conftest import dfn, tri
from fuzzysns import (
    DiscreteFuzzyNumber,
    DomainError,
    InvalidRadixError,
    MixedFamilyError,
    TransformOptions,
    TriangularFuzzyNumber,
    apply_D,
    apply_F,
    apply_L,
    apply_M,
    crisp_D,
    crisp_F,
    crisp_L,
    crisp_M,
    crisp_value,
    dfn_zadeh_binary,
    lift_discrete,
    zadeh_oracle,
)

EXTENSION = TransformOptions(remainder_mode="extension")


@pytest.mark.parametrize("name,args,expected", LINE_CASES, ids=[c[0] for c in LINE_CASES])
def test_line_pinned_cases(name, args, expected):
    result = apply_L(**args)
    assert result.carry == expected["carry"]
    assert result.remainder == expected["remainder"]
    assert result.transformant == expected["transformant"]
    assert result.new_image == expected["new_image"]


@pytest.mark.parametrize(
    "name,args,expected", DISTRIBUTION_CASES, ids=[c[0] for c in DISTRIBUTION_CASES]
)
def test_distribution_pinned_cases(name, args, expected):
    result = apply_D(**args)
    assert result.carry == expected["carry"]
    assert result.remainder == expected["remainder"]
    assert list(result.transformants.values()) == expected["transformants"]
    assert list(result.new_image_cardinals.values()) == expected["new_images"]


@pytest.mark.parametrize("name,args,expected", FUSION_CASES, ids=[c[0] for c in FUSION_CASES])
def test_fusion_pinned_cases(name, args, expected):
    result = apply_F(**args)
    assert list(result.partial_carries.values()) == expected["partials"]
    assert result.common_carry == expected["common"]
    assert list(result.remainders.values()) == expected["remainders"]
    assert result.transformant == expected["transformant"]
    assert result.new_image == expected["new_image"]


@pytest.mark.parametrize("name,args,expected", MULTI_CASES, ids=[c[0] for c in MULTI_CASES])
def test_multi_pinned_cases(name, args, expected):
    result = apply_M(**args)
    assert list(result.partial_carries.values()) == expected["partials"]
    assert result.common_carry == expected["common"]
    assert list(result.remainders.values()) == expected["remainders"]
    assert list(result.transformants.values()) == expected["transformants"]
    assert list(result.new_image_cardinals.values()) == expected["new_images"]


class TestDiscreteLine:
    def test_fuzzy_cardinal_crisp_operator(self):
        result = apply_L(dfn({6: "0.5", 7: 1, 8: "0.3"}), 1, 3, 2)
        assert result.carry == dfn({2: 1})
        assert result.transformant == dfn({4: 1})
        assert result.new_image == dfn({5: 1})
        assert result.remainder == dfn({0: "0.5", 1: 1, 2: "0.3"})

    def test_fuzzy_radix_carries_spread(self):
        result = apply_L(7, 0, dfn({2: "0.6", 3: 1}), 1)
        assert result.carry == dfn({2: 1, 3: "0.6"})
        assert result.new_image == dfn({2: 1, 3: "0.6"})
        # Correlated remainder: 7 mod 2 and 7 mod 3 both land on 1; max grade wins.
        assert result.remainder == dfn({1: 1})

    def test_fuzzy_radix_correlated_remainder_spreads(self):
        result = apply_L(8, 0, dfn({3: "0.6", 5: 1}), 1)
        assert result.remainder == dfn({2: "0.6", 3: 1})

    def test_fuzzy_image_cardinal(self):
        result = apply_L(dfn({6: "0.5", 7: 1}), dfn({0: 1, 1: "0.4"}), 3, 2)
        assert result.new_image == dfn_zadeh_binary(
            operator.add, dfn({0: 1, 1: "0.4"}), dfn({4: 1})
        )

    def test_remainder_modes_differ(self):
        cardinal = dfn({5: "0.5", 7: 1})
        correlated = apply_L(cardinal, 0, 3, 1).remainder
        extension = apply_L(cardinal, 0, 3, 1, options=EXTENSION).remainder
        assert correlated == dfn({2: "0.5", 1: 1})
        assert extension == dfn({-1: "0.5", 1: 1, 2: "0.5", 4: "0.5"})

    def test_extension_remainder_matches_oracle_composition(self):
        cardinal = dfn({5: "0.5", 7: 1, 9: "0.2"})
        radix = dfn({2: "0.6", 3: 1})
        result = apply_L(cardinal, 0, radix, 1, options=EXTENSION)
        carry = zadeh_oracle(operator.floordiv, cardinal, radix)
        product = zadeh_oracle(operator.mul, carry, radix)
        assert result.remainder == zadeh_oracle(operator.sub, cardinal, product)

    def test_negative_extension_remainder_flagged(self):
        result = apply_L(dfn({5: "0.5", 7: 1}), 0, 3, 1, options=EXTENSION)
        assert any("negative" in w for w in result.warnings)

    def test_clamp_mode_raises_floor_to_zero(self):
        options = TransformOptions(remainder_mode="extension", clamp_negative=True)
        result = apply_L(dfn({5: "0.5", 7: 1}), 0, 3, 1, options=options)
        assert result.remainder.points[0][0] >= 0
        assert result.warnings == ()


class TestTriangularEdges:
    def test_negative_remainder_warning(self):
        result = apply_L(tri(4, 7, 9), 10, 3, 2)
        assert result.remainder == tri(-5, 1, 6)
        assert any("negative lower bound -5" in w for w in result.warnings)

    def test_clamp_negative(self):
        result = apply_L(tri(4, 7, 9), 10, 3, 2, options=TransformOptions(clamp_negative=True))
        assert result.remainder == tri(0, 1, 6)
        assert result.warnings == ()

    def test_zero_lower_radix_rejected(self):
        with pytest.raises(InvalidRadixError):
            apply_L(tri(4, 7, 9), 0, tri(0, 1, 2), 1)

    def test_negative_operand_rejected(self):
        with pytest.raises(DomainError):
            apply_L(tri(-1, 7, 9), 0, 3, 1)

    def test_family_mix_rejected(self):
        with pytest.raises(MixedFamilyError):
            apply_L(tri(4, 7, 9), 0, dfn({3: 1}), 1)
        with pytest.raises(MixedFamilyError):
            apply_M([tri(1, 2, 3), dfn({2: 1})], [0, 0], [1, 1], [1, 1])

    def test_fuzzy_image_alone_lifts_the_call(self):
        # A fuzzy initial image cardinal makes the whole result triangular.
        result = apply_L(7, tri(1, 2, 3), 3, 2)
        assert result.carry == tri(2, 2, 2)
        assert result.new_image == tri(5, 6, 7)


class TestFusionAndMulti:
    def test_disjoint_partial_carries_form_via_least_mode(self):
        # Radix 1 makes the partial carries equal the operands themselves.
        result = apply_F([dfn({2: 1}), dfn({5: "0.5", 6: 1})], 0, [1, 1], 1)
        assert result.common_carry == dfn({2: 1})

    def test_crisp_operands_reproduce_crisp_fusion(self):
        fuzzy = apply_F([7, 9], 0, [3, 4], 2)
        crisp = crisp_F([7, 9], 0, [3, 4], 2)
        assert fuzzy == crisp

    def test_blocked_carry_zeroes_triangular_transformants(self):
        result = apply_M([0, tri(5, 9, 13)], [0, 0], [3, 4], [2, 5])
        assert result.common_carry.upper == 0
        assert list(result.transformants.values()) == [tri(0, 0, 0), tri(0, 0, 0)]

    def test_discrete_fusion_remainders_use_formed_carry(self):
        cardinals = [dfn({6: "0.5", 7: 1}), dfn({9: 1})]
        result = apply_F(cardinals, 0, [3, 4], 1)
        common = result.common_carry
        for cardinal, radix, remainder in zip(cardinals, [3, 4], result.remainders.values()):
            product = zadeh_oracle(operator.mul, common, lift_discrete(radix))
            assert remainder == zadeh_oracle(operator.sub, cardinal, product)

    def test_triangular_common_carry_dominated_by_partials(self):
        result = apply_F([tri(4, 7, 9), tri(3, 9, 20)], 0, [3, 4], 1)
        for partial in result.partial_carries.values():
            assert result.common_carry.lower <= partial.lower
            assert result.common_carry.mode <= partial.mode
            assert result.common_carry.upper <= partial.upper


class TestValenceDegenerations:
    def test_distribution_with_one_image_equals_line(self):
        d = apply_D(tri(4, 7, 9), [0], 3, [2])
        line = apply_L(tri(4, 7, 9), 0, 3, 2)
        assert d.carry == line.carry
        assert d.remainder == line.remainder
        assert list(d.transformants.values()) == [line.transformant]

    def test_single_image_distribution_with_fuzzy_rate(self):
        result = apply_D(7, [1], 3, [tri(1, 2, 3)])
        assert list(result.transformants.values()) == [tri(2, 4, 6)]
        assert list(result.new_image_cardinals.values()) == [tri(3, 5, 7)]

    def test_multi_degenerations(self):
        m = apply_M([tri(4, 7, 9), tri(5, 9, 13)], [0], [3, 4], [2], image_ids=("k",))
        f = apply_F([tri(4, 7, 9), tri(5, 9, 13)], 0, [3, 4], 2)
        assert m.common_carry == f.common_carry
        assert m.remainders == f.remainders
        assert m.transformants == f.transformants


def _random_scalar(rng, fam, low, high, radix=False):
    lo = 1 if radix else low
    if fam == "crisp":
        return rng.randint(lo, high)
    a = rng.randint(lo, high)
    m = rng.randint(a, high)
    b = rng.randint(m, high)
    return TriangularFuzzyNumber(a, m, b)


def _lift_slot(rng, value, fuzzy, fam):
    """Degenerate lift when this slot is fuzzy under the current pattern."""
    if not fuzzy:
        return value
    if fam == "triangular":
        return TriangularFuzzyNumber(value, value, value)
    return DiscreteFuzzyNumber({value: 1})


PATTERNS = {
    "fuzzy_cardinal": ("N",),
    "fuzzy_radix": ("n",),
    "fuzzy_rate": ("r",),
    "fuzzy_radix_rate": ("n", "r"),
    "whole": ("N", "n", "r", "img"),
}


@pytest.mark.parametrize("fam", ["triangular", "discrete"])
@pytest.mark.parametrize("pattern", sorted(PATTERNS))
@pytest.mark.parametrize("form", ["L", "D", "F", "M"])
def test_crisp_consistency_master_property(form, pattern, fam):
    """Degenerate fuzzy arguments reproduce the crisp operator field by field."""
    rng = random.Random(hash((form, pattern, fam)) & 0xFFFF)
    slots = PATTERNS[pattern]
    for _ in range(150):
        w = 1 if form in "LD" else rng.randint(2, 4)
        v = 1 if form in "LF" else rng.randint(2, 4)
        operands = [rng.randint(0, 400) for _ in range(w)]
        images = [rng.randint(0, 50) for _ in range(v)]
        radices = [rng.randint(1, 9) for _ in range(w)]
        rates = [rng.randint(0, 6) for _ in range(v)]

        f_operands = [_lift_slot(rng, x, "N" in slots, fam) for x in operands]
        f_images = [_lift_slot(rng, x, "img" in slots, fam) for x in images]
        f_radices = [_lift_slot(rng, x, "n" in slots, fam) for x in radices]
        f_rates = [_lift_slot(rng, x, "r" in slots, fam) for x in rates]

        if form == "L":
            got = apply_L(f_operands[0], f_images[0], f_radices[0], f_rates[0])
            want = crisp_L(operands[0], images[0], radices[0], rates[0])
        elif form == "D":
            got = apply_D(f_operands[0], f_images, f_radices[0], f_rates)
            want = crisp_D(operands[0], images, radices[0], rates)
        elif form == "F":
            got = apply_F(f_operands, f_images[0], f_radices, f_rates[0])
            want = crisp_F(operands, images[0], radices, rates[0])
        else:
            got = apply_M(f_operands, f_images, f_radices, f_rates)
            want = crisp_M(operands, images, radices, rates)

        for mapping, crisp_mapping in (
            (got.partial_carries, want.partial_carries),
            (got.remainders, want.remainders),
            (got.transformants, want.transformants),
            (got.new_image_cardinals, want.new_image_cardinals),
        ):
            assert mapping.keys() == crisp_mapping.keys()
            for key in mapping:
                assert crisp_value(mapping[key]) == crisp_mapping[key]
        if want.common_carry is None:
            assert got.common_carry is None
        else:
            assert crisp_value(got.common_carry) == want.common_carry


def test_mode_tracking_follows_crisp_operator():
    """Modes of triangular outputs equal the crisp operator on input modes."""
    rng = random.Random(99)
    for _ in range(300):
        operands = [_random_scalar(rng, rng.choice(("crisp", "tri")), 0, 300) for _ in range(2)]
        radices = [_random_scalar(rng, rng.choice(("crisp", "tri")), 1, 9, radix=True) for _ in range(2)]
        rate = _random_scalar(rng, rng.choice(("crisp", "tri")), 0, 6)
        image = _random_scalar(rng, rng.choice(("crisp", "tri")), 0, 40)

        def mode(x):
            return x.mode if isinstance(x, TriangularFuzzyNumber) else x

        got = apply_F(operands, image, radices, rate)
        if isinstance(got.common_carry, int):
            continue  # all-crisp draw
        want = crisp_F(
            [mode(x) for x in operands], mode(image), [mode(x) for x in radices], mode(rate)
        )
        assert got.common_carry.mode == want.common_carry
        for key in got.remainders:
            assert got.remainders[key].mode == want.remainders[key]
        assert got.transformant.mode == want.transformant
        assert got.new_image.mode == want.new_image


def test_triangular_ordering_invariant_randomized():
    rng = random.Random(4242)
    for _ in range(2000):
        form = rng.choice("LDFM")
        w = 1 if form in "LD" else rng.randint(2, 3)
        v = 1 if form in "LF" else rng.randint(2, 3)
        kinds = ("crisp", "tri")
        operands = [_random_scalar(rng, rng.choice(kinds), 0, 500) for _ in range(w)]
        images = [_random_scalar(rng, rng.choice(kinds), 0, 50) for _ in range(v)]
        radices = [_random_scalar(rng, rng.choice(kinds), 1, 9, radix=True) for _ in range(w)]
        rates = [_random_scalar(rng, rng.choice(kinds), 0, 6) for _ in range(v)]
        if form == "L":
            result = apply_L(operands[0], images[0], radices[0], rates[0])
        elif form == "D":
            result = apply_D(operands[0], images, radices[0], rates)
        elif form == "F":
            result = apply_F(operands, images[0], radices, rates[0])
        else:
            result = apply_M(operands, images, radices, rates)
        fields = [
            *result.partial_carries.values(),
            *result.remainders.values(),
            *result.transformants.values(),
            *result.new_image_cardinals.values(),
        ]
        if result.common_carry is not None:
            fields.append(result.common_carry)
        for value in fields:
            if isinstance(value, TriangularFuzzyNumber):
                assert value.lower <= value.mode <= value.upper
