"""Shared, session-scoped group fixtures so expensive tables are built once."""

from __future__ import annotations

from pathlib import Path

import pytest

from sylowcover import (
    alternating_group,
    build_group,
    enumerate_group,
    load_fixture,
    symmetric_group,
)
from sylowcover.perm import Permutation

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def a4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def s8():
    return symmetric_group(8)


@pytest.fixture(scope="session")
def a8():
    return alternating_group(8)


@pytest.fixture(scope="session")
def a9():
    return alternating_group(9)


@pytest.fixture(scope="session")
def s9():
    return symmetric_group(9)


@pytest.fixture(scope="session")
def g108():
    return load_fixture(FIXTURE_DIR / "g108.json")


@pytest.fixture(scope="session")
def frobenius21():
    return load_fixture(FIXTURE_DIR / "frobenius21.json")


@pytest.fixture(scope="session")
def sl28():
    return build_group("SL", 2, 8)


@pytest.fixture(scope="session")
def gl34():
    return build_group("GL", 3, 4)


@pytest.fixture(scope="session")
def gl24():
    return build_group("GL", 2, 4)


@pytest.fixture(scope="session")
def c6():
    """C2 x C3 as a permutation group; a direct product with nontrivial parts."""
    return enumerate_group(
        [Permutation.from_cycles(5, [(1, 2)]), Permutation.from_cycles(5, [(3, 4, 5)])],
        name="C6",
    )
