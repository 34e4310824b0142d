import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from a1weyl import (  # noqa: E402
    ReflectableBase,
    Root,
    baby_semilattice,
    pairwise_semilattice,
    toroidal_semilattice,
)


def root(sign, *coords):
    return Root(sign, tuple(coords))


@pytest.fixture
def baby2():
    return baby_semilattice(2)


@pytest.fixture
def toroidal2():
    return toroidal_semilattice(2)


@pytest.fixture
def baby2_base(baby2):
    return ReflectableBase(baby2)


@pytest.fixture
def toroidal2_base(toroidal2):
    return ReflectableBase(toroidal2)


@pytest.fixture
def baby3_base():
    return ReflectableBase(baby_semilattice(3))


@pytest.fixture
def pairwise3_base():
    return ReflectableBase(pairwise_semilattice(3))
