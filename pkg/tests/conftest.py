from __future__ import annotations

import pytest

from pactop import build, induced_family, validate


@pytest.fixture(scope="session")
def family():
    """All induced instances with |G| <= 4 on <= 3 points."""
    return induced_family(max_group=4, max_points=3)


@pytest.fixture(scope="session")
def family3():
    """The |G| <= 3 slice used by the exhaustive transform sweeps."""
    return induced_family(max_group=3, max_points=3)


@pytest.fixture(scope="session")
def valid_family(family):
    return [pa for pa in family if validate(pa).ok]


@pytest.fixture(scope="session")
def valid_globs(valid_family):
    """Globalizations of every valid instance, built once."""
    return [(pa, build(pa)) for pa in valid_family]
