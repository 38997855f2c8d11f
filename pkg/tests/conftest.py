"""Shared session fixtures: the two corpus runs every suite layer audits."""

import pytest

from relation_lab.checkers import CheckConfig
from relation_lab.harness import run_corpus


@pytest.fixture(scope="session")
def corpus_default():
    """Full corpus at the default resolution 1e-3, seed 0."""
    return run_corpus(CheckConfig(resolution=1e-3, seed=0))


@pytest.fixture(scope="session")
def corpus_fine():
    """Full corpus at one quarter of the default resolution."""
    return run_corpus(CheckConfig(resolution=2.5e-4, seed=0))
