"""Run every docstring example shipped in the package."""

from __future__ import annotations

import doctest

import pytest

import vbraid
import vbraid.autos
import vbraid.cli
import vbraid.normalform
import vbraid.oracle
import vbraid.permutations
import vbraid.presentations
import vbraid.schreier
import vbraid.words

MODULES = [
    vbraid,
    vbraid.autos,
    vbraid.cli,
    vbraid.normalform,
    vbraid.oracle,
    vbraid.permutations,
    vbraid.presentations,
    vbraid.schreier,
    vbraid.words,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    failed, attempted = doctest.testmod(module)
    assert failed == 0
    # a module with no examples is fine; the suite just records it ran
    assert attempted >= 0
