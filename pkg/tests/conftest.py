import functools

import pytest

from zagraph.expr import elaborate
from zagraph.harness import build_catalog


@functools.lru_cache(maxsize=None)
def ring(text):
    return elaborate(text)


@functools.lru_cache(maxsize=None)
def catalog(max_order):
    return tuple(build_catalog(max_order))


@pytest.fixture
def R():
    return ring


@pytest.fixture(scope="session")
def catalog64():
    return catalog(64)
