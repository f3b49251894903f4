import random

import pytest

from vbraid.words import (
    Letter,
    ParseError,
    Word,
    alphabet,
    concat,
    format_word,
    free_reduce,
    invert,
    parse,
    power,
    random_word,
    unit_letters,
    word_length,
)


def test_parse_simple_tokens():
    w = parse("VB", 3, "s1 r2^-1 s2^3")
    assert w.letters == (
        Letter("s", 1, 1),
        Letter("r", 2, -1),
        Letter("s", 2, 3),
    )


def test_parse_pair_tokens():
    w = parse("VP", 3, "l[1,2] l[3,1]^-2")
    assert w.letters == (Letter("l", (1, 2), 1), Letter("l", (3, 1), -2))


def test_parse_empty_word_spellings():
    assert parse("VB", 3, "e").letters == ()
    assert parse("VB", 3, "   ").letters == ()
    assert parse("VB", 3, "s1 e s2").letters == (Letter("s", 1, 1), Letter("s", 2, 1))


@pytest.mark.parametrize(
    "group,n,text",
    [
        ("VB", 3, "s3"),          # index out of range
        ("VB", 3, "t1"),          # wrong family for the group
        ("B", 4, "r1"),
        ("VB", 3, "s1^0"),
        ("VB", 3, "q1"),
        ("VP", 3, "l[1,1]"),
        ("VP", 3, "l[1,4]"),
        ("VB", 3, "s1s2"),
        ("F", 2, "x3"),
    ],
)
def test_parse_rejects(group, n, text):
    with pytest.raises(ParseError):
        parse(group, n, text)


def test_word_constructor_validates():
    with pytest.raises(ValueError):
        Word("??", 3, ())
    with pytest.raises(ValueError):
        Word("VB", 1, ())
    with pytest.raises(ValueError):
        Word("VB", 3, (Letter("s", 0, 1),))


def test_format_round_trip_fixed():
    for group, n, text in [
        ("VB", 4, "s1 s2^-1 r3 s1^2"),
        ("VP", 3, "l[1,2]^-1 l[2,1]^-1"),
        ("WB", 3, "a1 s1^-1"),
        ("F", 3, "x1 x2^-1 x3"),
        ("UB", 2, "s1 c1 s1"),
        ("SG", 3, "t2 s1"),
    ]:
        assert format_word(parse(group, n, text)) == text
    assert format_word(parse("VB", 3, "e")) == "e"


def test_free_reduce_merges_and_cancels():
    w = parse("VB", 3, "s1 s1 s2 s2^-1 s1^-2")
    assert format_word(free_reduce(w)) == "e"
    w2 = parse("VB", 3, "s1 r1 r1^-1 s1")
    assert format_word(free_reduce(w2)) == "s1^2"


def test_free_reduce_exposes_inner_cancellation():
    w = parse("F", 2, "x1 x2 x2^-1 x1^-1 x2")
    assert format_word(free_reduce(w)) == "x2"


def test_invert_is_reversal_with_negated_exponents():
    # No involution is applied: r2^-1 is kept as-is.
    w = parse("VB", 3, "s1 r2")
    assert format_word(invert(w)) == "r2^-1 s1^-1"


def test_concat_checks_group_and_rank():
    w = parse("VB", 3, "s1")
    v = parse("VB", 4, "s1")
    with pytest.raises(ValueError):
        concat(w, v)
    with pytest.raises(ValueError):
        concat(w, parse("B", 3, "s1"))


def test_power():
    w = parse("VB", 3, "s1 r1")
    assert format_word(free_reduce(power(w, 2))) == "s1 r1 s1 r1"
    assert format_word(free_reduce(concat(power(w, 3), power(w, -3)))) == "e"
    assert power(w, 0).letters == ()


def test_unit_letters_and_length():
    w = parse("VB", 3, "s1^3 r2^-2")
    units = list(unit_letters(w))
    assert len(units) == 5
    assert units[0] == Letter("s", 1, 1)
    assert units[3] == Letter("r", 2, -1)
    assert word_length(w) == 5


def test_alphabet_contents():
    assert [format_word(Word("VB", 3, (lt,))) for lt in alphabet("VB", 3)] == [
        "s1",
        "s2",
        "r1",
        "r2",
    ]
    assert len(alphabet("VP", 4)) == 12
    assert len(alphabet("F", 5)) == 5


def test_random_words_are_reduced_and_deterministic():
    rng = random.Random(7)
    for _ in range(200):
        group = rng.choice(["VB", "WB", "VP", "F", "UB"])
        w = random_word(group, 4, rng.randrange(0, 9), rng)
        assert free_reduce(w) == w
    again = random_word("VB", 4, 6, random.Random(123))
    assert again == random_word("VB", 4, 6, random.Random(123))


def test_invert_round_trip_random():
    rng = random.Random(42)
    for _ in range(100):
        w = random_word("VB", 5, rng.randrange(0, 10), rng)
        assert invert(invert(w)) == w
        assert format_word(free_reduce(concat(w, invert(w)))) == "e"
        assert parse("VB", 5, format_word(w)) == w
