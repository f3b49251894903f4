"""Tests for the free-group action and the conjugating-map machinery."""

from __future__ import annotations

import random

import pytest

from vbraid.autos import (
    GeneratorMap,
    apply_map,
    check_artin_conditions,
    compose_maps,
    eps_map,
    eps_word,
    format_map,
    identity_map,
    letter_map,
    pure_braid_word,
    wb_image,
)
from vbraid.permutations import nu
from vbraid.words import concat, format_word, free_reduce, invert, parse, random_word


def test_letter_map_closed_forms():
    s1 = letter_map(3, "s", 1, 1)
    assert format_map(s1) == "x1 -> x1 x2 x1^-1; x2 -> x1; x3 -> x3"
    s1i = letter_map(3, "s", 1, -1)
    assert format_map(s1i) == "x1 -> x2; x2 -> x2^-1 x1 x2; x3 -> x3"
    assert compose_maps(s1, s1i) == identity_map(3)
    assert compose_maps(s1i, s1) == identity_map(3)
    assert letter_map(3, "r", 2, 1) == letter_map(3, "a", 2, -1)
    with pytest.raises(ValueError):
        letter_map(3, "t", 1, 1)


def test_apply_map():
    s1 = letter_map(2, "s", 1, 1)
    assert format_word(apply_map(s1, parse("F", 2, "x1"))) == "x1 x2 x1^-1"
    assert format_word(apply_map(s1, parse("F", 2, "x2 x1^-1"))) == "x1^2 x2^-1 x1^-1"
    with pytest.raises(ValueError):
        apply_map(s1, parse("VB", 2, "s1"))


def test_wb_image_pinned():
    gm = wb_image(parse("WB", 2, "a1 s1^-1"))
    assert format_map(gm) == "x1 -> x2^-1 x1 x2; x2 -> x2"


def test_wb_image_is_multiplicative():
    rng = random.Random(5)
    for _ in range(30):
        u = random_word("WB", 3, rng.randrange(0, 6), rng)
        v = random_word("WB", 3, rng.randrange(0, 6), rng)
        assert wb_image(concat(u, v)) == compose_maps(wb_image(u), wb_image(v))
        assert compose_maps(wb_image(u), wb_image(invert(u))) == identity_map(3)


def test_eps_word_matches_eps_map():
    for n in range(2, 7):
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if p != q:
                    assert wb_image(eps_word(n, p, q)) == eps_map(n, p, q)


def test_eps_map_validation():
    with pytest.raises(ValueError):
        eps_map(3, 2, 2)
    with pytest.raises(ValueError):
        eps_word(3, 1, 4)


def test_artin_conditions_on_braid_word():
    rep = check_artin_conditions(wb_image(parse("B", 3, "s1 s2^-1")))
    assert rep.conjugating and rep.braid
    assert rep.perm.images == (3, 1, 2)
    assert rep.perm == nu(parse("VB", 3, "r1 r2"))


def test_artin_conditions_on_swap_word():
    # permutation words conjugate trivially but move the product
    rep = check_artin_conditions(wb_image(parse("WB", 3, "a1 a2")))
    assert rep.conjugating and not rep.braid
    assert rep.perm.images == (3, 1, 2)
    assert all(not u.letters for u in rep.conjugators)


def test_artin_conditions_reject_non_conjugating():
    gm = GeneratorMap(2, (parse("F", 2, "x1 x2"), parse("F", 2, "x2")))
    rep = check_artin_conditions(gm)
    assert rep == check_artin_conditions(gm)  # deterministic
    assert not rep.conjugating and not rep.braid
    assert rep.perm is None and rep.conjugators is None


def test_artin_conjugators_reconstruct_images():
    rng = random.Random(23)
    for _ in range(20):
        w = random_word("WB", 4, rng.randrange(1, 7), rng)
        gm = wb_image(w)
        rep = check_artin_conditions(gm)
        assert rep.conjugating
        for i in range(1, 5):
            u = rep.conjugators[i - 1]
            t = rep.perm(i)
            rebuilt = free_reduce(
                concat(invert(u), parse("F", 4, f"x{t}"), u)
            )
            assert rebuilt == free_reduce(gm.images[i - 1])


def test_pure_braid_styles_agree():
    for n, i, j in [(3, 1, 2), (4, 1, 3), (5, 2, 5), (6, 1, 6)]:
        base = wb_image(pure_braid_word(n, i, j, "sigma"))
        assert wb_image(pure_braid_word(n, i, j, "eps_lower")) == base
        assert wb_image(pure_braid_word(n, i, j, "eps_upper")) == base
        rep = check_artin_conditions(base)
        assert rep.conjugating and rep.braid
        assert rep.perm.images == tuple(range(1, n + 1))


def test_pure_braid_word_validation():
    with pytest.raises(ValueError):
        pure_braid_word(3, 2, 2)
    with pytest.raises(ValueError):
        pure_braid_word(4, 1, 3, style="mystery")
