"""Permutations of {1..n} and the projection of braid-like words onto them.

Composition convention, fixed once for the whole package: words act on
points from the left letter first, so ``compose(p, q)`` means "apply p,
then q".  Under this convention the projection ``nu`` is a homomorphism,
and conjugation of the pure-subgroup generators by a word w is read off
directly from nu(w):

    w^-1 . l[i,j] . w  ==  l[p(i), p(j)]      where p = nu(w).

That is a right action: acting by uv is acting by u, then by v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Letter, Word


@dataclass(frozen=True)
class Permutation:
    """images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.images)) != tuple(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int) -> Permutation:
    """The adjacent swap (i, i+1)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"transposition index {i} out of range for n={n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p, then q."""
    if p.n != q.n:
        raise ValueError("rank mismatch")
    return Permutation(tuple(q(p(i)) for i in range(1, p.n + 1)))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for i in range(1, p.n + 1):
        images[p(i) - 1] = i
    return Permutation(tuple(images))


def format_perm(p: Permutation) -> str:
    return "(" + " ".join(str(i) for i in p.images) + ")"


def nu(word: Word) -> Permutation:
    """Project a word onto the symmetric group.

    Every singly-indexed generator family maps to the adjacent swap at
    its index; the pair-indexed family lies in the kernel.  Free-group
    words have no such projection.

    >>> nu(Word("VB", 3, (Letter("r", 1, 1), Letter("r", 2, 1)))).images
    (3, 1, 2)
    """
    p = identity(word.n)
    for lt in word.letters:
        if lt.fam == "x":
            raise ValueError("free-group words have no symmetric-group image")
        if lt.fam == "l" or lt.exp % 2 == 0:
            continue
        p = compose(p, transposition(word.n, lt.idx))  # type: ignore[arg-type]
    return p


def act_on_pair(p: Permutation, pair: tuple[int, int]) -> tuple[int, int]:
    """Where conjugation by a word with projection p sends l[pair]."""
    i, j = pair
    return (p(i), p(j))


# ---------------------------------------------------------------------------
# The canonical transversal of the pure subgroup.
#
# For each k in 2..n and 1 <= j <= k there is a descending run of swaps
#     m(k, j) = r(k-1) r(k-2) ... r(j)        (empty when j == k)
# and every permutation factors uniquely as m(2, j2) m(3, j3) ... m(n, jn).
# The block m(k, j) sends k to j and shifts j..k-1 up by one, leaving the
# points above k alone, so jk can be peeled off as p(k) from the top down.


def _block_word_letters(k: int, j: int) -> list[Letter]:
    return [Letter("r", i, 1) for i in range(k - 1, j - 1, -1)]


def _block_perm(n: int, k: int, j: int) -> Permutation:
    p = identity(n)
    for i in range(k - 1, j - 1, -1):
        p = compose(p, transposition(n, i))
    return p


def coset_indices(p: Permutation) -> tuple[int, ...]:
    """The factor indices (j2, ..., jn) of p over the canonical transversal."""
    n = p.n
    out: list[int] = []
    for k in range(n, 1, -1):
        j = p(k)
        out.append(j)
        p = compose(p, inverse(_block_perm(n, k, j)))
    assert p.images == tuple(range(1, n + 1)), "peeling must land on the identity"
    out.reverse()
    return tuple(out)


def coset_rep(p: Permutation) -> Word:
    """The canonical transversal word with projection p.

    >>> from .words import format_word
    >>> format_word(coset_rep(Permutation((2, 1))))
    'r1'
    >>> format_word(coset_rep(identity(3)))
    'e'
    """
    n = p.n
    letters: list[Letter] = []
    for k, j in zip(range(2, n + 1), coset_indices(p)):
        letters.extend(_block_word_letters(k, j))
    return Word("VB", n, tuple(letters))
