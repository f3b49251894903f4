"""Rewriting virtual-braid words into the pure subgroup times a transversal.

The pure subgroup is the kernel of the projection onto the symmetric
group.  It is generated by the pair-indexed elements

    l[i,i+1] = r(i) s(i)^-1
    l[i+1,i] = s(i)^-1 r(i)
    l[i,j]   = r(j-1) .. r(i+1) . l[i,i+1] . r(i+1) .. r(j-1)   (i+1 < j)
    l[j,i]   = r(j-1) .. r(i+1) . l[i+1,i] . r(i+1) .. r(j-1)   (i+1 < j)

and conjugation by any word permutes their indices through the
symmetric-group projection (see permutations.act_on_pair).

``rewrite_to_vp`` factors a word w as  flatten(v) . t  where v is a word
in the l-generators and t is the canonical transversal word for the
projection of w.  The algorithm is a single left-to-right sweep: virtual
letters only advance the running projection, while each crossing letter
emits one l-generator whose indices are the current preimages of the
strands it crosses.
"""

from __future__ import annotations

from functools import cache

from .permutations import compose, coset_rep, identity, inverse, transposition
from .words import Letter, Word, concat, free_reduce, invert, unit_letters


@cache
def lambda_word(n: int, pair: tuple[int, int]) -> Word:
    """The defining word of ``l[pair]`` in the crossing/virtual letters.

    >>> from .words import format_word
    >>> format_word(lambda_word(3, (1, 2)))
    'r1 s1^-1'
    >>> format_word(lambda_word(3, (2, 1)))
    's1^-1 r1'
    >>> format_word(lambda_word(3, (1, 3)))
    'r2 r1 s1^-1 r2'
    """
    a, b = pair
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"bad generator pair {pair} for n={n}")
    i, j = min(a, b), max(a, b)
    if a < b:
        core = [Letter("r", i, 1), Letter("s", i, -1)]
    else:
        core = [Letter("s", i, -1), Letter("r", i, 1)]
    wrap = [Letter("r", k, 1) for k in range(j - 1, i, -1)]
    return Word("VB", n, tuple(wrap + core + list(reversed(wrap))))


def flatten_vp(word: Word) -> Word:
    """Spell a word in the l-generators as a crossing/virtual word."""
    parts = [Word("VB", word.n, ())]
    for lt in word.letters:
        base = lambda_word(word.n, lt.idx)  # type: ignore[arg-type]
        piece = base if lt.exp > 0 else invert(base)
        parts.extend([piece] * abs(lt.exp))
    return free_reduce(concat(*parts))


def rewrite_to_vp(word: Word) -> tuple[Word, Word]:
    """Factor a word over the pure subgroup and the canonical transversal.

    Returns (v, t): v a word in the l-generators, t the canonical
    transversal word, with  w == flatten_vp(v) . t  in the group and
    t depending only on the projection of w.

    >>> from .words import format_word, parse
    >>> v, t = rewrite_to_vp(parse("VB", 2, "s1"))
    >>> format_word(v), format_word(t)
    ('l[1,2]^-1', 'r1')
    """
    if word.group not in ("VB", "B"):
        raise ValueError(f"can only rewrite VB or B words, got {word.group}")
    n = word.n
    run = identity(n)
    out: list[Letter] = []
    for lt in unit_letters(word):
        if lt.fam == "r":
            run = compose(run, transposition(n, lt.idx))  # type: ignore[arg-type]
            continue
        i: int = lt.idx  # type: ignore[assignment]
        if lt.exp > 0:
            q = inverse(run)
            out.append(Letter("l", (q(i), q(i + 1)), -1))
            run = compose(run, transposition(n, i))
        else:
            # The emitted generator sits to the left of the crossing it
            # cancels, so the projection advances before reading it off.
            run = compose(run, transposition(n, i))
            q = inverse(run)
            out.append(Letter("l", (q(i), q(i + 1)), 1))
    vp = free_reduce(Word("VP", n, tuple(out)))
    return vp, coset_rep(run)
