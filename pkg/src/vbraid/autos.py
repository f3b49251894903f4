"""Free-group automorphisms realizing braid-like words.

A ``GeneratorMap`` stores the images of the free generators x1..xn.
Crossing letters act by the classical rule

    s(i):   x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i

and both kinds of involutive letters (``r``, ``a``) act by the plain
swap x_i <-> x_{i+1}.  ``wb_image`` pushes a whole word through these
rules, composing left letter first.  The resulting representation is
faithful on welded words and deliberately blind to the distinction the
layered normal form can see, which is what makes the comparison between
the two interesting.

The basis-conjugating map eps(i, j) sends x_i to x_j^-1 x_i x_j and
fixes every other generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .permutations import Permutation
from .words import Letter, Word, concat, format_word, free_reduce, invert, unit_letters


@dataclass(frozen=True)
class GeneratorMap:
    """An endomorphism of the free group, stored by generator images."""

    n: int
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.n:
            raise ValueError(f"need {self.n} images, got {len(self.images)}")
        for w in self.images:
            if w.group != "F" or w.n != self.n:
                raise ValueError("images must be free-group words of the same rank")


def identity_map(n: int) -> GeneratorMap:
    return GeneratorMap(
        n, tuple(Word("F", n, (Letter("x", i, 1),)) for i in range(1, n + 1))
    )


def apply_map(gm: GeneratorMap, w: Word) -> Word:
    """Image of a free-group word, freely reduced."""
    if w.group != "F" or w.n != gm.n:
        raise ValueError("can only apply a map to free-group words of its rank")
    parts = [Word("F", gm.n, ())]
    for lt in unit_letters(w):
        img = gm.images[lt.idx - 1]  # type: ignore[operator]
        parts.append(img if lt.exp > 0 else invert(img))
    return free_reduce(concat(*parts))


def compose_maps(f: GeneratorMap, g: GeneratorMap) -> GeneratorMap:
    """Apply f, then g — same reading order as for permutations."""
    if f.n != g.n:
        raise ValueError("rank mismatch")
    return GeneratorMap(f.n, tuple(apply_map(g, img) for img in f.images))


def format_map(gm: GeneratorMap) -> str:
    return "; ".join(
        f"x{i} -> {format_word(img)}" for i, img in enumerate(gm.images, start=1)
    )


def _x(n: int, i: int, exp: int = 1) -> Word:
    return Word("F", n, (Letter("x", i, exp),))


@cache
def letter_map(n: int, fam: str, idx: int, sign: int) -> GeneratorMap:
    """The automorphism of one unit letter.

    Inverses are spelled out directly instead of inverting the positive
    map: that keeps every branch a closed form.
    """
    images = list(identity_map(n).images)
    if fam == "s" and sign > 0:
        images[idx - 1] = Word(
            "F", n, (Letter("x", idx, 1), Letter("x", idx + 1, 1), Letter("x", idx, -1))
        )
        images[idx] = _x(n, idx)
    elif fam == "s":
        images[idx - 1] = _x(n, idx + 1)
        images[idx] = Word(
            "F", n, (Letter("x", idx + 1, -1), Letter("x", idx, 1), Letter("x", idx + 1, 1))
        )
    elif fam in ("r", "a"):
        images[idx - 1] = _x(n, idx + 1)
        images[idx] = _x(n, idx)
    else:
        raise ValueError(f"no free-group action for letter family {fam!r}")
    return GeneratorMap(n, tuple(images))


def wb_image(word: Word) -> GeneratorMap:
    """Push a braid, virtual or welded word through the free-group action."""
    acc = identity_map(word.n)
    for lt in unit_letters(word):
        acc = compose_maps(acc, letter_map(word.n, lt.fam, lt.idx, lt.exp))  # type: ignore[arg-type]
    return acc


def eps_map(n: int, i: int, j: int, sign: int = 1) -> GeneratorMap:
    """The basis-conjugating map x_i -> x_j^-sign x_i x_j^sign."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"bad index pair ({i}, {j}) for n={n}")
    images = list(identity_map(n).images)
    images[i - 1] = Word(
        "F", n, (Letter("x", j, -sign), Letter("x", i, 1), Letter("x", j, sign))
    )
    return GeneratorMap(n, tuple(images))


# ---------------------------------------------------------------------------
# Recognizing conjugating maps.


@dataclass(frozen=True)
class ArtinReport:
    conjugating: bool
    braid: bool
    perm: Permutation | None
    conjugators: tuple[Word, ...] | None


def _peel_conjugate(w: Word) -> tuple[int, Word] | None:
    """Split w as u^-1 . x_t . u, returning (t, u); None if not of that shape."""
    units = [lt for lt in unit_letters(free_reduce(w))]
    lo, hi = 0, len(units) - 1
    outer: list[Letter] = []
    while lo < hi:
        first, last = units[lo], units[hi]
        if first.idx == last.idx and first.exp == -last.exp:
            outer.append(last)
            lo += 1
            hi -= 1
        else:
            break
    if lo != hi or units[lo].exp != 1:
        return None
    outer.reverse()
    return units[lo].idx, Word(w.group, w.n, tuple(outer))  # type: ignore[return-value]


def check_artin_conditions(gm: GeneratorMap) -> ArtinReport:
    """Test the two classical conditions for a map to come from a braid.

    The first asks every image to be a conjugate of a single generator,
    with the generator indices forming a permutation; the second asks
    the product x1 x2 .. xn to be fixed.  Braids satisfy both; welded
    words in general satisfy only the first.
    """
    targets: list[int] = []
    conjugators: list[Word] = []
    for img in gm.images:
        peeled = _peel_conjugate(img)
        if peeled is None:
            return ArtinReport(False, False, None, None)
        t, u = peeled
        targets.append(t)
        conjugators.append(u)
    if sorted(targets) != list(range(1, gm.n + 1)):
        return ArtinReport(False, False, None, None)
    perm = Permutation(tuple(targets))
    full = Word("F", gm.n, tuple(Letter("x", i, 1) for i in range(1, gm.n + 1)))
    braid = apply_map(gm, full) == full
    return ArtinReport(True, braid, perm, tuple(conjugators))


# ---------------------------------------------------------------------------
# Named word families used when comparing the representations.


def eps_word(n: int, p: int, q: int) -> Word:
    """A welded word mapping onto eps(p, q) under wb_image.

    Built from the adjacent seeds  a(i) s(i)^-1  (upper) and
    s(i)^-1 a(i)  (lower) wrapped in swaps that carry the far index in.
    """
    if p == q or not (1 <= p <= n and 1 <= q <= n):
        raise ValueError(f"bad index pair ({p}, {q}) for n={n}")
    i, j = min(p, q), max(p, q)
    if p < q:
        core = [Letter("a", i, 1), Letter("s", i, -1)]
    else:
        core = [Letter("s", i, -1), Letter("a", i, 1)]
    wrap = [Letter("a", k, 1) for k in range(j - 1, i, -1)]
    return Word("WB", n, tuple(wrap + core + list(reversed(wrap))))


def pure_braid_word(n: int, i: int, j: int, style: str = "sigma") -> Word:
    """A word for the pure-braid generator with strands i < j.

    style "sigma":      s(j-1) .. s(i+1) s(i)^2 s(i+1)^-1 .. s(j-1)^-1
    style "eps_lower":  conjugate the adjacent core by the eps-row with
                        second index i
    style "eps_upper":  same with second index j, inverted wrap
    The three agree under wb_image.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) for n={n}")
    if style == "sigma":
        wrap = [Letter("s", k, 1) for k in range(j - 1, i, -1)]
        core = [Letter("s", i, 2)]
        unwrap = [Letter("s", k.idx, -1) for k in reversed(wrap)]
        return Word("B", n, tuple(wrap + core + unwrap))
    core_w = free_reduce(concat(invert(eps_word(n, i, j)), invert(eps_word(n, j, i))))
    if style == "eps_lower":
        row = [eps_word(n, k, i) for k in range(j - 1, i, -1)]
    elif style == "eps_upper":
        row = [invert(eps_word(n, k, j)) for k in range(j - 1, i, -1)]
    else:
        raise ValueError(f"unknown style {style!r}")
    parts = row + [core_w] + [invert(w) for w in reversed(row)]
    return free_reduce(concat(Word("WB", n, ()), *parts))
