import doctest

import pytest

import permdl.bijections
import permdl.cli
import permdl.duploss
import permdl.minimal
import permdl.patterns
import permdl.perm
import permdl.posets

MODULES = [
    permdl.perm,
    permdl.patterns,
    permdl.posets,
    permdl.minimal,
    permdl.duploss,
    permdl.bijections,
    permdl.cli,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
