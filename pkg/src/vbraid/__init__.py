"""Virtual braid words, their layered normal form, and the related groups.

The package lives in plain words over small alphabets (see `parse`),
offers a complete normal form for virtual braids (`normalize`, `equal`),
realizes braid-like words as free-group automorphisms (`wb_image`), and
carries a certificate-producing bounded equality oracle
(`bounded_equal`) for the groups given by finite presentations.
"""

from __future__ import annotations

from .autos import (
    ArtinReport,
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
from .normalform import (
    ConjugationLimitError,
    LayerLetter,
    NormalForm,
    conjugate_by_word,
    conjugation_budget,
    equal,
    format_nf,
    identity_nf,
    nf_to_word,
    normalize,
    normalize_vp,
)
from .oracle import OracleResult, bounded_equal, random_relator_product
from .permutations import (
    Permutation,
    act_on_pair,
    compose,
    coset_rep,
    format_perm,
    identity,
    inverse,
    nu,
    transposition,
)
from .presentations import (
    HOMS,
    HomSpec,
    Presentation,
    VerifyReport,
    map_word,
    presentation,
    verify_homomorphism,
)
from .schreier import flatten_vp, lambda_word, rewrite_to_vp
from .words import (
    ALPHABETS,
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

__version__ = "0.1.0"

__all__ = [
    "ALPHABETS",
    "ArtinReport",
    "ConjugationLimitError",
    "GeneratorMap",
    "HOMS",
    "HomSpec",
    "LayerLetter",
    "Letter",
    "NormalForm",
    "OracleResult",
    "ParseError",
    "Permutation",
    "Presentation",
    "VerifyReport",
    "Word",
    "act_on_pair",
    "alphabet",
    "apply_map",
    "bounded_equal",
    "check_artin_conditions",
    "compose",
    "compose_maps",
    "concat",
    "conjugate_by_word",
    "conjugation_budget",
    "coset_rep",
    "eps_map",
    "eps_word",
    "equal",
    "flatten_vp",
    "format_map",
    "format_nf",
    "format_perm",
    "format_word",
    "free_reduce",
    "identity",
    "identity_map",
    "identity_nf",
    "invert",
    "inverse",
    "lambda_word",
    "letter_map",
    "map_word",
    "nf_to_word",
    "normalize",
    "normalize_vp",
    "nu",
    "parse",
    "power",
    "presentation",
    "pure_braid_word",
    "random_relator_product",
    "random_word",
    "rewrite_to_vp",
    "transposition",
    "unit_letters",
    "verify_homomorphism",
    "wb_image",
    "word_length",
]
