"""A bounded search that certifies equality of words in a presented group.

The oracle decides ``w1 == w2`` by driving the difference ``w1 w2^-1``
to the empty word through insertions of relator variants (cyclic
rotations of the defining relators and their inverses).  A verdict of
"equal" comes with a replayed insertion witness and is always sound; a
verdict of "unknown" only means the certificate was not found within
the budget.

States are freely reduced words, explored shortest-first: expanding the
shortest pending state quickly follows any insertion that shortens the
difference, which is how most certificates look.  Ties break in
generation order, so runs are deterministic and a larger budget only
ever extends the explored prefix.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from random import Random

from .presentations import Presentation
from .words import Letter, Word, concat, free_reduce, invert, random_word, unit_letters

# a unit is ((family, index), sign) for one letter of exponent +-1
Unit = tuple[tuple[str, object], int]


@dataclass(frozen=True)
class OracleResult:
    verdict: str  # "equal" or "unknown"
    witness: tuple[tuple[int, Word], ...] | None
    expansions: int
    reason: str = ""


def _word_units(w: Word) -> tuple[Unit, ...]:
    return tuple(((lt.fam, lt.idx), lt.exp) for lt in unit_letters(free_reduce(w)))


def _units_word(group: str, n: int, units: tuple[Unit, ...]) -> Word:
    letters = tuple(Letter(fam, idx, sign) for (fam, idx), sign in units)
    return free_reduce(Word(group, n, letters))


def _cyclic_reduce(units: tuple[Unit, ...]) -> tuple[Unit, ...]:
    while len(units) >= 2 and units[0] == (units[-1][0], -units[-1][1]):
        units = units[1:-1]
    return units


def _invert_units(units: tuple[Unit, ...]) -> tuple[Unit, ...]:
    return tuple((key, -sign) for key, sign in reversed(units))


def _variants(pres: Presentation) -> tuple[tuple[Unit, ...], ...]:
    seen: set[tuple[Unit, ...]] = set()
    for r in pres.relators:
        core = _cyclic_reduce(_word_units(r))
        if not core:
            continue
        for base in (core, _invert_units(core)):
            for k in range(len(base)):
                seen.add(base[k:] + base[:k])
    # rotations of a reduced cyclic word stay reduced, so every variant
    # can be spliced in as-is; sort for a deterministic expansion order
    return tuple(sorted(seen, key=repr))


def _splice(state: tuple[Unit, ...], pos: int, v: tuple[Unit, ...]) -> tuple[Unit, ...]:
    """Insert v at pos and freely reduce, in amortized O(|v| + cancellations)."""
    out = list(state[:pos])
    for unit in v:
        if out and out[-1] == (unit[0], -unit[1]):
            out.pop()
        else:
            out.append(unit)
    right = state[pos:]
    k = 0
    while k < len(right) and out and out[-1] == (right[k][0], -right[k][1]):
        out.pop()
        k += 1
    # the first surviving right unit ends the cascade: the remainder was
    # already reduced against it inside state
    out.extend(right[k:])
    return tuple(out)


def bounded_equal(
    pres: Presentation,
    w1: Word,
    w2: Word,
    budget: int = 100_000,
    seed: int = 0,
    headroom: int = 8,
) -> OracleResult:
    """Search for an insertion certificate that w1 and w2 agree in pres.

    ``budget`` caps the number of expanded states; ``headroom`` caps how
    far intermediate words may grow beyond the longer of the start word
    and the longest relator variant.  ``seed`` is accepted for interface
    stability but the search itself is deterministic and ignores it.
    """
    for w in (w1, w2):
        if w.group != pres.group or w.n != pres.n:
            raise ValueError(
                f"oracle for {pres.group}_{pres.n} got a {w.group}_{w.n} word"
            )
    del seed
    start = _word_units(concat(w1, invert(w2)))
    if not start:
        return OracleResult("equal", (), 0, "words agree after free reduction")
    variants = _variants(pres)
    if not variants:
        return OracleResult("unknown", None, 0, "presentation has no relators")
    vset = set(variants)
    cap = max(len(start), max(len(v) for v in variants)) + headroom
    parents: dict[tuple[Unit, ...], tuple[tuple[Unit, ...], tuple[int, tuple[Unit, ...]]] | None]
    parents = {start: None}
    if start in vset:
        return _certify(pres, start, parents, start, 0, vset)
    heap: list[tuple[int, int, tuple[Unit, ...]]] = [(len(start), 0, start)]
    counter = 0
    expansions = 0
    while heap:
        if expansions >= budget:
            return OracleResult("unknown", None, expansions, "expansion budget exhausted")
        _, _, state = heapq.heappop(heap)
        expansions += 1
        for v in variants:
            for pos in range(len(state) + 1):
                child = _splice(state, pos, v)
                if len(child) > cap or child in parents:
                    continue
                parents[child] = (state, (pos, v))
                if not child or child in vset:
                    return _certify(pres, start, parents, child, expansions, vset)
                counter += 1
                heapq.heappush(heap, (len(child), counter, child))
    return OracleResult(
        "unknown", None, expansions, "state space exhausted under the length cap"
    )


def _certify(pres, start, parents, final, expansions, vset) -> OracleResult:
    steps: list[tuple[int, tuple[Unit, ...]]] = []
    cur = final
    while parents[cur] is not None:
        prev, step = parents[cur]
        steps.append(step)
        cur = prev
    steps.reverse()
    if final:
        # the final state is itself a variant; cancel it in one stroke
        steps.append((len(final), _invert_units(final)))
    # replay the certificate before vouching for it
    state = start
    for pos, v in steps:
        assert v in vset and 0 <= pos <= len(state)
        state = _splice(state, pos, v)
    assert state == ()
    witness = tuple((pos, _units_word(pres.group, pres.n, v)) for pos, v in steps)
    return OracleResult("equal", witness, expansions, "")


def random_relator_product(
    pres: Presentation, seed: int | Random = 0, count: int = 1, conj_len: int = 4
) -> Word:
    """A product of conjugated relator variants: trivial by construction.

    Useful as a supply of words that are equal to the identity for
    exercising the oracle and the normal form from the "equal" side.
    """
    if not pres.relators:
        raise ValueError(f"{pres.group}_{pres.n} has no relators to sample")
    rng = seed if isinstance(seed, Random) else Random(seed)
    parts: list[Word] = []
    for _ in range(count):
        r = pres.relators[rng.randrange(len(pres.relators))]
        if rng.random() < 0.5:
            r = invert(r)
        g = random_word(pres.group, pres.n, rng.randrange(conj_len + 1), rng)
        parts.append(concat(invert(g), r, g))
    return free_reduce(concat(Word(pres.group, pres.n, ()), *parts))
