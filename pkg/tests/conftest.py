"""Shared fixtures for the dl_cospectral tests."""

import os

import pytest
from factory.random import reseed_random

from dl_cospectral.constructions.families import bk_pair, hamming, shrikhande
from dl_cospectral.core.config import settings
from dl_cospectral.spectra.charpoly import CharPoly

B1_POLYNOMIAL = CharPoly.parse(
    "x^8 - 98x^7 + 4087x^6 - 94020x^5 + 1288463x^4 - 10517842x^3 + 47349497x^2 - 90671880x"
)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive runs that take minutes")
    config.addinivalue_line("markers", "corpus: needs graph6 corpora under DL_CORPUS_DIR")


@pytest.fixture(autouse=True)
def clean_settings():
    """Every test starts from environment/default settings and a fixed random seed."""
    settings.reset()
    reseed_random(20240601)
    yield
    settings.reset()


@pytest.fixture
def b1_pair():
    return bk_pair(1)


@pytest.fixture
def srg_pair():
    return shrikhande(), hamming(2, 4)


@pytest.fixture
def corpus_dir():
    path = os.environ.get("DL_CORPUS_DIR")
    if not path or not os.path.isdir(path):
        pytest.skip("DL_CORPUS_DIR is not set")
    return path
