"""Command-line front end.

Exit codes: 0 success (and "true" answers), 1 a clean "false" answer,
2 malformed input, 3 the oracle gave up within its budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .autos import format_map, wb_image
from .normalform import equal, format_nf, normalize
from .oracle import bounded_equal
from .permutations import format_perm, nu
from .presentations import HOMS, map_word, presentation, verify_homomorphism
from .schreier import rewrite_to_vp
from .words import format_word, parse

_ORACLE_GROUPS = (("l", "VP"), ("a", "WB"), ("t", "SG"), ("c", "UB"))


def _infer_group(text: str, pairs=_ORACLE_GROUPS) -> str:
    # family letters are unambiguous in the word grammar, so a raw
    # character scan is enough to pick the widest group that fits
    for ch, group in pairs:
        if ch in text:
            return group
    return "VB"


def _emit(args, payload: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif plain:
        print(plain)


def _cmd_nf(args) -> int:
    w = parse("VB", args.n, args.word)
    shown = format_nf(normalize(w))
    _emit(args, {"input": args.word, "n": args.n, "result": shown, "diagnostics": {}}, shown)
    return 0


def _cmd_eq(args) -> int:
    w1 = parse("VB", args.n, args.word1)
    w2 = parse("VB", args.n, args.word2)
    same = equal(w1, w2)
    _emit(
        args,
        {
            "input": [args.word1, args.word2],
            "n": args.n,
            "result": same,
            "diagnostics": {"nf1": format_nf(normalize(w1)), "nf2": format_nf(normalize(w2))},
        },
        "true" if same else "false",
    )
    return 0 if same else 1


def _cmd_perm(args) -> int:
    p = nu(parse("VB", args.n, args.word))
    _emit(
        args,
        {"input": args.word, "n": args.n, "result": list(p.images), "diagnostics": {}},
        format_perm(p),
    )
    return 0


def _cmd_vp_rewrite(args) -> int:
    vp, coset = rewrite_to_vp(parse("VB", args.n, args.word))
    vp_s, coset_s = format_word(vp), format_word(coset)
    _emit(
        args,
        {
            "input": args.word,
            "n": args.n,
            "result": {"vp": vp_s, "coset": coset_s},
            "diagnostics": {},
        },
        f"{vp_s}\n{coset_s}",
    )
    return 0


def _cmd_image(args) -> int:
    hom = _hom(args.hom)
    w = parse(hom.source, args.n, args.word)
    shown = format_word(map_word(hom, w))
    _emit(
        args,
        {
            "input": args.word,
            "n": args.n,
            "result": shown,
            "diagnostics": {"hom": hom.name, "target": hom.target},
        },
        shown,
    )
    return 0


def _cmd_auto(args) -> int:
    group = _infer_group(args.word, (("a", "WB"),))
    gm = wb_image(parse(group, args.n, args.word))
    shown = format_map(gm)
    _emit(
        args,
        {"input": args.word, "n": args.n, "result": shown, "diagnostics": {"group": group}},
        shown,
    )
    return 0


def _cmd_verify(args) -> int:
    hom = _hom(args.hom)
    rep = verify_homomorphism(hom, args.n, args.backend)
    good = sum(1 for _, ok in rep.checks if ok)
    failed = [format_word(r) for r, ok in rep.checks if not ok]
    line = (
        f"{hom.name} n={args.n} backend={rep.backend}: "
        f"{good}/{len(rep.checks)} relators ok"
    )
    _emit(
        args,
        {
            "input": hom.name,
            "n": args.n,
            "result": rep.ok,
            "diagnostics": {"backend": rep.backend, "failed": failed},
        },
        line,
    )
    return 0 if rep.ok else 1


def _cmd_oracle_eq(args) -> int:
    group = _infer_group(args.word1 + " " + args.word2)
    pres = presentation(group, args.n)
    w1 = parse(group, args.n, args.word1)
    w2 = parse(group, args.n, args.word2)
    res = bounded_equal(pres, w1, w2, budget=args.budget, seed=args.seed)
    witness = [
        {"pos": pos, "word": format_word(v)} for pos, v in (res.witness or ())
    ]
    payload = {
        "input": [args.word1, args.word2],
        "n": args.n,
        "result": res.verdict,
        "diagnostics": {
            "group": group,
            "expansions": res.expansions,
            "reason": res.reason,
            "witness": witness,
        },
    }
    if res.verdict == "equal":
        lines = [f"equal ({res.expansions} expansions)"]
        lines += [f"  insert {step['word']} at {step['pos']}" for step in witness]
        _emit(args, payload, "\n".join(lines))
        return 0
    _emit(args, payload, f"unknown: {res.reason} ({res.expansions} expansions)")
    return 3


def _hom(name: str):
    if name not in HOMS:
        raise ValueError(f"unknown homomorphism {name!r}; pick from {', '.join(sorted(HOMS))}")
    return HOMS[name]


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit one JSON object")

    p = argparse.ArgumentParser(prog="vbraid", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_, words=1, **extra):
        sp = sub.add_parser(name, parents=[shared], help=help_)
        sp.add_argument("n", type=int, help="number of strands")
        if words == 1:
            sp.add_argument("word")
        elif words == 2:
            sp.add_argument("word1")
            sp.add_argument("word2")
        for flag, kw in extra.items():
            sp.add_argument(flag, **kw)
        sp.set_defaults(fn=fn)

    cmd("nf", _cmd_nf, "normal form of a virtual braid word")
    cmd("eq", _cmd_eq, "compare two virtual braid words by normal form", words=2)
    cmd("perm", _cmd_perm, "underlying permutation of a virtual braid word")
    cmd("vp-rewrite", _cmd_vp_rewrite, "pure part and coset word of a virtual braid word")
    cmd(
        "image",
        _cmd_image,
        "push a word through a named homomorphism",
        **{"--hom": {"required": True, "help": "one of " + ", ".join(sorted(HOMS))}},
    )
    cmd("auto", _cmd_auto, "free-group automorphism induced by a word")
    cmd(
        "verify",
        _cmd_verify,
        "check a named homomorphism on every defining relator",
        words=0,
        **{
            "--hom": {"required": True},
            "--backend": {"default": None, "help": "aut, nf, perm or syntactic"},
        },
    )
    cmd(
        "oracle-eq",
        _cmd_oracle_eq,
        "bounded certificate search for equality",
        words=2,
        **{
            "--budget": {"type": int, "default": 100_000},
            "--seed": {"type": int, "default": 0},
        },
    )
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:  # covers ParseError and range errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
