"""Free-group words, the parser, and the configuration dictionary."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistkit.words import (
    Configuration,
    ConfigurationError,
    GroupWord,
    apply_endomorphism,
    concat,
    config_xy,
    generator_code,
    group_commutator,
    invert,
    parse_group_word,
    power,
    zeta,
)


def gen(g, name, exp=1):
    kind, index = name[0], int(name[1:])
    return power(GroupWord.generator(g, kind, index), exp)


class TestReduction:
    def test_cancellation(self):
        a = gen(1, "a1")
        assert concat(a, invert(a)).is_identity()

    def test_nested_cancellation(self):
        w = GroupWord(1, ((0, 1), (1, 1), (1, -1), (0, -1), (0, 1)))
        assert w == gen(1, "a1")

    def test_commutator_word(self):
        got = group_commutator(gen(1, "a1"), gen(1, "b1"))
        assert got == GroupWord(1, ((0, 1), (1, 1), (0, -1), (1, -1)))

    def test_inverse_antihomomorphism(self):
        words = [gen(2, "a1"), concat(gen(2, "b2"), gen(2, "a1", -1)), zeta(2)]
        for x in words:
            for y in words:
                assert invert(concat(x, y)) == concat(invert(y), invert(x))


@st.composite
def raw_words(draw):
    genus = draw(st.integers(1, 2))
    length = draw(st.integers(0, 8))
    letters = tuple(
        (draw(st.integers(0, 2 * genus - 1)), draw(st.sampled_from((1, -1))))
        for _ in range(length)
    )
    return genus, letters


@settings(max_examples=80, deadline=None)
@given(raw_words())
def test_reduction_idempotent_and_confluent(raw):
    genus, letters = raw
    once = GroupWord(genus, letters)
    again = GroupWord(genus, once.letters)
    assert once == again
    # confluence probe: reducing after a split concatenation agrees
    for cut in range(len(letters) + 1):
        left = GroupWord(genus, letters[:cut])
        right = GroupWord(genus, letters[cut:])
        assert concat(left, right) == once


class TestZeta:
    def test_genus_one(self):
        assert zeta(1).render() == "a1 b1 a1^-1 b1^-1"

    def test_genus_two_reduced_length(self):
        word = zeta(2)
        assert len(word.letters) == 8
        assert word.render() == "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1"

    def test_exponent_sums_vanish(self):
        for g in (1, 2, 3):
            assert zeta(g).exponent_sums() == {}


class TestParser:
    def test_plain(self):
        assert parse_group_word("a1 b1 a1^-1 b1^-1", 1) == zeta(1)

    def test_commutator_shorthand(self):
        assert parse_group_word("[a1,b1]", 1) == zeta(1)
        nested = parse_group_word("[a1,[a2,b2]]", 2)
        assert nested == group_commutator(gen(2, "a1"), group_commutator(gen(2, "a2"), gen(2, "b2")))

    def test_zeta_token(self):
        assert parse_group_word("zeta(2)", 2) == zeta(2)

    def test_exponents(self):
        assert parse_group_word("a1^3", 1) == power(gen(1, "a1"), 3)
        assert parse_group_word("b1^-2", 1) == power(gen(1, "b1"), -2)

    def test_errors(self):
        with pytest.raises(ValueError):
            parse_group_word("a3", 2)
        with pytest.raises(ValueError):
            parse_group_word("[a1,b1", 1)
        with pytest.raises(ValueError):
            parse_group_word("zeta(3)", 2)
        with pytest.raises(ValueError):
            parse_group_word("x1", 1)


class TestConfigurationValidation:
    def test_case_one_needs_genus_two(self):
        Configuration("I", g=2)
        with pytest.raises(ConfigurationError, match="g >= 2"):
            Configuration("I", g=1)

    def test_case_two_range(self):
        Configuration("II-a", g=3, h=1)
        Configuration("II-b", g=3, h=3)
        with pytest.raises(ConfigurationError, match="1 <= h <= g"):
            Configuration("II-a", g=2, h=3)
        with pytest.raises(ConfigurationError, match="1 <= h <= g"):
            Configuration("II-b", g=2, h=0)

    def test_case_three_range(self):
        Configuration("III-a", g=2, h=2)
        with pytest.raises(ConfigurationError, match="2 <= h <= g"):
            Configuration("III-a", g=2, h=1)
        with pytest.raises(ConfigurationError, match="2 <= h <= g"):
            Configuration("III-b", g=3, h=4)

    def test_case_four_partition(self):
        Configuration("IV-a", g=3, k1=1, k2=1, h=1)
        Configuration("IV-b", g=2, k1=1, k2=1, h=0)
        with pytest.raises(ConfigurationError, match="k1, k2 >= 1"):
            Configuration("IV-a", g=2, k1=0, k2=1, h=1)
        with pytest.raises(ConfigurationError, match="k1 \\+ k2 \\+ h = g"):
            Configuration("IV-b", g=4, k1=1, k2=1, h=0)

    def test_unknown_kind(self):
        with pytest.raises(ConfigurationError):
            Configuration("V", g=2)

    def test_special_flag(self):
        assert Configuration("II-a", g=1, h=1).special_h1
        assert not Configuration("II-a", g=2, h=2).special_h1
        assert not Configuration("IV-a", g=2, k1=1, k2=1, h=0).special_h1


class TestConfigWords:
    def test_case_one(self):
        x, y = config_xy(Configuration("I", g=2))
        assert x == gen(2, "a1")
        assert y == gen(2, "a2")

    def test_case_two_a(self):
        x, y = config_xy(Configuration("II-a", g=2, h=2))
        expected_x = concat(
            concat(group_commutator(gen(2, "a1"), gen(2, "b1")),
                   group_commutator(gen(2, "a2"), gen(2, "b2"))),
            gen(2, "b2"),
        )
        assert x == expected_x
        assert y == gen(2, "b2", -1)

    def test_case_two_a_special_reduces_to_conjugate(self):
        x, y = config_xy(Configuration("II-a", g=1, h=1))
        assert x == parse_group_word("a1 b1 a1^-1", 1)
        assert y == gen(1, "b1", -1)

    def test_case_four_b(self):
        c = Configuration("IV-b", g=3, k1=1, k2=2, h=0)
        x, y = config_xy(c)
        z1 = group_commutator(gen(3, "a1"), gen(3, "b1"))
        z2 = group_commutator(gen(3, "a2"), gen(3, "b2"))
        z3 = group_commutator(gen(3, "a3"), gen(3, "b3"))
        assert x == z1
        assert y == invert(concat(concat(z1, z2), z3))

    def test_case_three_b(self):
        x, y = config_xy(Configuration("III-b", g=2, h=2))
        assert y == invert(group_commutator(gen(2, "a1"), gen(2, "b1")))


class TestHomologyHypotheses:
    def test_separating_cases_commute(self):
        configs = [
            Configuration("II-a", g=2, h=2),
            Configuration("II-b", g=2, h=1),
            Configuration("III-a", g=2, h=2),
            Configuration("III-b", g=3, h=2),
            Configuration("IV-a", g=2, k1=1, k2=1, h=0),
            Configuration("IV-b", g=3, k1=2, k2=1, h=0),
        ]
        for c in configs:
            x, y = config_xy(c)
            X = x.abelianization(2)
            Y = y.abelianization(2)
            assert X.commutator(Y).is_zero(), c.label()

    def test_bounding_pairs_are_null_homologous(self):
        for c in (
            Configuration("IV-a", g=2, k1=1, k2=1, h=0),
            Configuration("IV-b", g=3, k1=1, k2=2, h=0),
        ):
            x, y = config_xy(c)
            assert x.abelianization(1).is_zero()
            assert y.abelianization(1).is_zero()

    def test_case_one_does_not_commute(self):
        x, y = config_xy(Configuration("I", g=2))
        X = x.abelianization(2)
        Y = y.abelianization(2)
        assert not X.commutator(Y).is_zero()


class TestEndomorphism:
    def test_homomorphism_property(self):
        g = 2
        mapping = {
            0: parse_group_word("b1 a1", g),
            1: gen(g, "b1"),
            2: gen(g, "a2"),
            3: gen(g, "b2"),
        }
        x = parse_group_word("a1 b2", g)
        y = parse_group_word("b1^-1 a1", g)
        lhs = apply_endomorphism(mapping, concat(x, y))
        rhs = concat(apply_endomorphism(mapping, x), apply_endomorphism(mapping, y))
        assert lhs == rhs

    def test_inverse_letters(self):
        g = 1
        mapping = {0: parse_group_word("b1 a1", g), 1: gen(g, "b1")}
        got = apply_endomorphism(mapping, gen(g, "a1", -1))
        assert got == invert(parse_group_word("b1 a1", g))


def test_generator_codes():
    assert generator_code("a", 1) == 0
    assert generator_code("b", 2) == 3
    with pytest.raises(ValueError):
        generator_code("c", 1)
