"""Finite presentations of the braid-like groups and the maps between them.

Relators are stored as explicit words, one per instantiated equation,
spelled  lhs . rhs^-1  with true inverse letters throughout; involutive
generators contribute squares.  One exception: the mixed virtual
relation is kept in its all-positive historical spelling
``s(i+1) r(i) r(i+1) s(i)^-1 r(i+1) r(i)``, the one whose rewriting
through the pure subgroup collapses to the empty word on the nose.

Same-family distant commutations are enumerated over unordered index
pairs, mixed-family ones over ordered pairs (the two orders are
different words, though equivalent as relators).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations as _perms

from .autos import wb_image, identity_map
from .normalform import identity_nf, normalize
from .permutations import identity, nu
from .words import Letter, Word, free_reduce, parse, unit_letters


@dataclass(frozen=True)
class Presentation:
    group: str
    n: int
    relators: tuple[Word, ...]


def _rel(group: str, n: int, text: str) -> Word:
    return parse(group, n, text)


def _braid_family(group: str, n: int, f: str) -> list[Word]:
    return [
        _rel(group, n, f"{f}{i} {f}{i+1} {f}{i} {f}{i+1}^-1 {f}{i}^-1 {f}{i+1}^-1")
        for i in range(1, n - 1)
    ]


def _far_comm_same(group: str, n: int, f: str) -> list[Word]:
    return [
        _rel(group, n, f"{f}{i} {f}{j} {f}{i}^-1 {f}{j}^-1")
        for i in range(1, n - 1)
        for j in range(i + 2, n)
    ]


def _involutions(group: str, n: int, f: str) -> list[Word]:
    return [_rel(group, n, f"{f}{i}^2") for i in range(1, n)]


def _far_comm_mixed(group: str, n: int, f1: str, f2: str) -> list[Word]:
    # ordered: one relator per (i, j) with the f1 letter leading
    return [
        _rel(group, n, f"{f1}{i} {f2}{j} {f1}{i}^-1 {f2}{j}^-1")
        for i in range(1, n)
        for j in range(1, n)
        if abs(i - j) >= 2
    ]


@cache
def presentation(group: str, n: int) -> Presentation:
    rels: list[Word] = []
    if group == "B":
        rels = _braid_family("B", n, "s") + _far_comm_same("B", n, "s")
    elif group == "S":
        rels = (
            _braid_family("S", n, "r")
            + _far_comm_same("S", n, "r")
            + _involutions("S", n, "r")
        )
    elif group == "VB":
        rels = (
            _braid_family("VB", n, "s")
            + _far_comm_same("VB", n, "s")
            + _braid_family("VB", n, "r")
            + _far_comm_same("VB", n, "r")
            + _involutions("VB", n, "r")
            + _far_comm_mixed("VB", n, "s", "r")
            + [
                _rel("VB", n, f"s{i+1} r{i} r{i+1} s{i}^-1 r{i+1} r{i}")
                for i in range(1, n - 1)
            ]
        )
    elif group == "WB":
        rels = (
            _braid_family("WB", n, "s")
            + _far_comm_same("WB", n, "s")
            + _braid_family("WB", n, "a")
            + _far_comm_same("WB", n, "a")
            + _involutions("WB", n, "a")
            + _far_comm_mixed("WB", n, "a", "s")
            + [
                _rel("WB", n, f"s{i} a{i+1} a{i} s{i+1}^-1 a{i}^-1 a{i+1}^-1")
                for i in range(1, n - 1)
            ]
            + [
                _rel("WB", n, f"s{i+1} s{i} a{i+1} s{i}^-1 s{i+1}^-1 a{i}^-1")
                for i in range(1, n - 1)
            ]
        )
    elif group == "SG":
        rels = (
            _braid_family("SG", n, "s")
            + _far_comm_same("SG", n, "s")
            + _far_comm_same("SG", n, "t")
            + _far_comm_mixed("SG", n, "t", "s")
            + [_rel("SG", n, f"t{i} s{i} t{i}^-1 s{i}^-1") for i in range(1, n)]
            + [
                _rel("SG", n, f"s{i} s{i+1} t{i} s{i+1}^-1 s{i}^-1 t{i+1}^-1")
                for i in range(1, n - 1)
            ]
            + [
                _rel("SG", n, f"s{i+1} s{i} t{i+1} s{i}^-1 s{i+1}^-1 t{i}^-1")
                for i in range(1, n - 1)
            ]
        )
    elif group == "UB":
        rels = (
            _braid_family("UB", n, "s")
            + _far_comm_same("UB", n, "s")
            + _far_comm_same("UB", n, "c")
            + _far_comm_mixed("UB", n, "c", "s")
        )
    elif group == "VP":
        rels = [
            _rel(
                "VP",
                n,
                f"l[{k},{i}] l[{k},{j}] l[{i},{j}] "
                f"l[{k},{i}]^-1 l[{k},{j}]^-1 l[{i},{j}]^-1",
            )
            for i, j, k in _perms(range(1, n + 1), 3)
        ] + _pair_comms("VP", n)
    elif group == "Cb":
        rels = (
            _pair_comms("Cb", n)
            + [
                _rel("Cb", n, f"l[{i},{j}] l[{k},{j}] l[{i},{j}]^-1 l[{k},{j}]^-1")
                for j in range(1, n + 1)
                for i in range(1, n + 1)
                for k in range(i + 1, n + 1)
                if i != j and k != j
            ]
            + [
                _rel(
                    "Cb",
                    n,
                    f"l[{i},{j}] l[{k},{j}] l[{i},{k}] "
                    f"l[{k},{j}]^-1 l[{i},{j}]^-1 l[{i},{k}]^-1",
                )
                for i, j, k in _perms(range(1, n + 1), 3)
            ]
        )
    else:
        raise ValueError(f"no presentation for group tag {group!r}")
    return Presentation(group, n, tuple(rels))


def _pair_comms(group: str, n: int) -> list[Word]:
    # commuting pairs with four distinct indices, once per unordered pair
    out: list[Word] = []
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for x in range(len(pairs)):
        for y in range(x + 1, len(pairs)):
            (i, j), (k, l) = pairs[x], pairs[y]
            if {i, j} & {k, l}:
                continue
            out.append(
                _rel(group, n, f"l[{i},{j}] l[{k},{l}] l[{i},{j}]^-1 l[{k},{l}]^-1")
            )
    return out


# ---------------------------------------------------------------------------
# The homomorphism web.


@dataclass(frozen=True)
class HomSpec:
    """A generator-substitution homomorphism between two of the groups.

    ``fam_map`` sends each source letter family to a target family or to
    None, meaning the generator dies (maps to the identity).
    """

    name: str
    source: str
    target: str
    fam_map: tuple[tuple[str, str | None], ...]


HOMS: dict[str, HomSpec] = {
    h.name: h
    for h in (
        HomSpec("phi_VW", "VB", "WB", (("s", "s"), ("r", "a"))),
        HomSpec("phi_UV", "UB", "VB", (("s", "s"), ("c", "r"))),
        HomSpec("phi_US", "UB", "SG", (("s", "s"), ("c", "t"))),
        HomSpec("phi_UB", "UB", "B", (("s", "s"), ("c", None))),
        HomSpec("psi", "UB", "B", (("s", "s"), ("c", None))),
        HomSpec("nu", "VB", "S", (("s", "r"), ("r", "r"))),
    )
}


def map_word(hom: HomSpec, w: Word) -> Word:
    if w.group != hom.source:
        raise ValueError(f"{hom.name} takes {hom.source} words, got {w.group}")
    fm = dict(hom.fam_map)
    letters = []
    for lt in w.letters:
        tgt = fm[lt.fam]
        if tgt is not None:
            letters.append(Letter(tgt, lt.idx, lt.exp))
    return free_reduce(Word(hom.target, w.n, tuple(letters)))


@dataclass(frozen=True)
class VerifyReport:
    hom: str
    n: int
    backend: str
    checks: tuple[tuple[Word, bool], ...]

    @property
    def ok(self) -> bool:
        return all(good for _, good in self.checks)


DEFAULT_BACKENDS = {"B": "aut", "WB": "aut", "VB": "nf", "S": "perm", "SG": "syntactic", "UB": "syntactic"}


def _trivial_syntactically(image: Word, target: Presentation) -> bool:
    w = tuple((lt.fam, lt.idx, lt.exp) for lt in unit_letters(free_reduce(image)))
    if not w:
        return True
    for r in target.relators:
        for base in (r, _invert_units(r)):
            u = tuple((lt.fam, lt.idx, lt.exp) for lt in unit_letters(base))
            if len(u) != len(w):
                continue
            if any(u[k:] + u[:k] == w for k in range(len(u))):
                return True
    return False


def _invert_units(w: Word) -> Word:
    return Word(
        w.group, w.n, tuple(Letter(lt.fam, lt.idx, -lt.exp) for lt in reversed(w.letters))
    )


def verify_homomorphism(hom: HomSpec, n: int, backend: str | None = None) -> VerifyReport:
    """Check that every source relator maps to a trivial target element.

    Backends: "aut" (faithful free-group action — targets B and WB),
    "nf" (normal form — target VB), "perm" (symmetric image — target S),
    "syntactic" (image freely reduces to nothing or to a literal cyclic
    variant of a target relator — the groups with no faithful check).
    """
    if backend is None:
        backend = DEFAULT_BACKENDS[hom.target]
    src = presentation(hom.source, n)
    checks: list[tuple[Word, bool]] = []
    for r in src.relators:
        image = map_word(hom, r)
        if backend == "aut":
            good = wb_image(image) == identity_map(n)
        elif backend == "nf":
            good = normalize(image) == identity_nf(n)
        elif backend == "perm":
            good = nu(image) == identity(n)
        elif backend == "syntactic":
            good = _trivial_syntactically(image, presentation(hom.target, n))
        else:
            raise ValueError(f"unknown backend {backend!r}")
        checks.append((r, good))
    return VerifyReport(hom.name, n, backend, tuple(checks))
