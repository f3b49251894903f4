"""Words over the generator alphabets of the braid-like groups.

A word is a finite product of generator powers.  Nine groups share this
machinery, distinguished by a short tag and by which letter families their
alphabets admit:

    B    braid group                      s1 .. s(n-1)
    S    symmetric group                  r1 .. r(n-1)
    VB   virtual braid group              s, r
    WB   welded braid group               s, a
    SG   singular braid group             s, t
    UB   universal braid group            s, c
    VP   virtual pure braid group         l[i,j]  (i != j, both in 1..n)
    Cb   basis-conjugating automorphisms  l[i,j]
    F    free group                       x1 .. xn

Words never apply group relations: a word lives in the free group on its
alphabet, and free reduction (cancelling ``s1 s1^-1``) is the only
simplification ever performed, always explicitly.  In particular the
involutive generators (``r``, ``a``) are *not* identified with their
inverses at this level; ``r2^-1`` stays ``r2^-1``.

Text grammar: tokens separated by whitespace, each token a family letter
followed by an index (``s2``), or ``l[i,j]`` for the pair-indexed family,
optionally followed by ``^k`` for a nonzero integer power.  The single
token ``e`` denotes the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from random import Random
from typing import Iterator

# Which letter families each group tag admits.
ALPHABETS = {
    "B": "s",
    "S": "r",
    "VB": "sr",
    "WB": "sa",
    "SG": "st",
    "UB": "sc",
    "VP": "l",
    "Cb": "l",
    "F": "x",
}


class ParseError(ValueError):
    """Raised for text that is not a well-formed word."""


@dataclass(frozen=True)
class Letter:
    """One generator power: family, index, nonzero exponent.

    ``idx`` is an int for the singly-indexed families and an ``(i, j)``
    pair for the ``l`` family.
    """

    fam: str
    idx: int | tuple[int, int]
    exp: int


@dataclass(frozen=True)
class Word:
    group: str
    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if self.group not in ALPHABETS:
            raise ValueError(f"unknown group tag {self.group!r}")
        if self.n < (1 if self.group == "F" else 2):
            raise ValueError(f"n={self.n} is too small for {self.group}")
        for lt in self.letters:
            _check_letter(self.group, self.n, lt)


def _check_letter(group: str, n: int, lt: Letter) -> None:
    if lt.fam not in ALPHABETS[group]:
        raise ValueError(f"family {lt.fam!r} is not in the {group} alphabet")
    if lt.exp == 0:
        raise ValueError("zero exponent")
    if lt.fam == "l":
        if not (isinstance(lt.idx, tuple) and len(lt.idx) == 2):
            raise ValueError(f"family 'l' needs a pair index, got {lt.idx!r}")
        i, j = lt.idx
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"pair index {lt.idx} out of range for n={n}")
    elif lt.fam == "x":
        if not 1 <= lt.idx <= n:
            raise ValueError(f"index {lt.idx} out of range for n={n}")
    else:
        if not 1 <= lt.idx <= n - 1:
            raise ValueError(f"index {lt.idx} out of range for n={n}")


_SIMPLE = re.compile(r"([sratcx])(\d+)(?:\^(-?\d+))?")
_PAIR = re.compile(r"l\[(\d+),(\d+)\](?:\^(-?\d+))?")


def parse(group: str, n: int, text: str) -> Word:
    """Parse a word from its text form.

    >>> format_word(parse("VB", 3, "s1 r2^-1  s1^2"))
    's1 r2^-1 s1^2'
    >>> parse("VB", 3, "e").letters
    ()
    """
    out: list[Letter] = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        if tok == "e":
            continue
        if (sm := _SIMPLE.fullmatch(tok)) is not None:
            fam: str = sm.group(1)
            idx: int | tuple[int, int] = int(sm.group(2))
            raw_exp = sm.group(3)
        elif (pm := _PAIR.fullmatch(tok)) is not None:
            fam = "l"
            idx = (int(pm.group(1)), int(pm.group(2)))
            raw_exp = pm.group(3)
        else:
            raise ParseError(f"bad token {tok!r} at position {m.start()}")
        exp = 1 if raw_exp is None else int(raw_exp)
        if exp == 0:
            raise ParseError(f"zero exponent in {tok!r} at position {m.start()}")
        out.append(Letter(fam, idx, exp))
    try:
        return Word(group, n, tuple(out))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_letter(lt: Letter) -> str:
    if lt.fam == "l":
        i, j = lt.idx  # type: ignore[misc]
        body = f"l[{i},{j}]"
    else:
        body = f"{lt.fam}{lt.idx}"
    return body if lt.exp == 1 else f"{body}^{lt.exp}"


def format_word(word: Word) -> str:
    """Inverse of parse; the empty word prints as ``e``."""
    if not word.letters:
        return "e"
    return " ".join(format_letter(lt) for lt in word.letters)


def free_reduce(word: Word) -> Word:
    """Cancel and merge adjacent powers of the same generator.

    A single stack pass suffices: merging two neighbours can expose at
    most the previous stack entry for further merging.

    >>> format_word(free_reduce(parse("F", 2, "x1 x2 x2^-1 x1 x1^-2")))
    'e'
    """
    stack: list[Letter] = []
    for lt in word.letters:
        if stack and stack[-1].fam == lt.fam and stack[-1].idx == lt.idx:
            merged = stack.pop().exp + lt.exp
            if merged:
                stack.append(Letter(lt.fam, lt.idx, merged))
        else:
            stack.append(lt)
    return Word(word.group, word.n, tuple(stack))


def invert(word: Word) -> Word:
    """Reverse the word and negate every exponent.  No more, no less.

    >>> format_word(invert(parse("VB", 3, "s1 r2")))
    'r2^-1 s1^-1'
    """
    return Word(
        word.group,
        word.n,
        tuple(Letter(lt.fam, lt.idx, -lt.exp) for lt in reversed(word.letters)),
    )


def concat(*parts: Word) -> Word:
    """Concatenate words of the same group and rank.  Does not reduce."""
    if not parts:
        raise ValueError("need at least one word")
    first = parts[0]
    letters: list[Letter] = []
    for w in parts:
        if (w.group, w.n) != (first.group, first.n):
            raise ValueError(
                f"cannot concatenate {w.group}_{w.n} onto {first.group}_{first.n}"
            )
        letters.extend(w.letters)
    return Word(first.group, first.n, tuple(letters))


def power(word: Word, k: int) -> Word:
    if k == 0:
        return Word(word.group, word.n, ())
    base = word if k > 0 else invert(word)
    return concat(*([base] * abs(k)))


def unit_letters(word: Word) -> Iterator[Letter]:
    """Yield the word letter by letter with exponents split into +-1 steps."""
    for lt in word.letters:
        step = 1 if lt.exp > 0 else -1
        for _ in range(abs(lt.exp)):
            yield Letter(lt.fam, lt.idx, step)


def word_length(word: Word) -> int:
    return sum(abs(lt.exp) for lt in word.letters)


def alphabet(group: str, n: int) -> tuple[Letter, ...]:
    """All positive generators of the group at rank n, in a fixed order."""
    out: list[Letter] = []
    for fam in ALPHABETS[group]:
        if fam == "l":
            out.extend(
                Letter("l", (i, j), 1)
                for i in range(1, n + 1)
                for j in range(1, n + 1)
                if i != j
            )
        elif fam == "x":
            out.extend(Letter("x", i, 1) for i in range(1, n + 1))
        else:
            out.extend(Letter(fam, i, 1) for i in range(1, n))
    return tuple(out)


def random_word(group: str, n: int, length: int, rng: Random) -> Word:
    """A freely reduced random word of the given reduced length.

    Successive picks avoid the exact inverse of the previous letter, so
    nothing cancels; equal picks merge into a power instead.
    """
    gens = alphabet(group, n)
    if not gens and length > 0:
        raise ValueError(f"{group}_{n} has no generators")
    out: list[Letter] = []
    for _ in range(length):
        while True:
            base = rng.choice(gens)
            exp = rng.choice((1, -1))
            if out and (out[-1].fam, out[-1].idx) == (base.fam, base.idx):
                if out[-1].exp * exp < 0:
                    continue
            break
        out.append(Letter(base.fam, base.idx, exp))
    return free_reduce(Word(group, n, tuple(out)))
