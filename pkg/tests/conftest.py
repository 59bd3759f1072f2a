"""
Fixtures partagées: idéaux d'exemple lus depuis data/.
"""

import sys
from pathlib import Path

import pytest

# Ajouter le chemin du projet
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.algebra.ideal_format import parse_ideal, read_ideal_file

DATA_DIR = PROJECT_ROOT / "data"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: calculs longs (sdepth à cinq variables, balayages de corpus)")


def ideal(text: str):
    """Raccourci: `ideal("x y z: x*y, y*z")`."""
    names, _, gens = text.partition(":")
    lines = [f"vars {names.strip()}"] + [f"gen {g.strip()}" for g in gens.split(",")]
    return parse_ideal("\n".join(lines))


@pytest.fixture
def triangle():
    return read_ideal_file(DATA_DIR / "triangle.ideal")


@pytest.fixture
def i1():
    return read_ideal_file(DATA_DIR / "i1.ideal")


@pytest.fixture
def i2():
    return read_ideal_file(DATA_DIR / "i2.ideal")


@pytest.fixture
def x2xyy2():
    return read_ideal_file(DATA_DIR / "x2xyy2.ideal")


@pytest.fixture
def x2xyy2z():
    return read_ideal_file(DATA_DIR / "x2xyy2z.ideal")


@pytest.fixture
def maximal_ideal():
    return read_ideal_file(DATA_DIR / "maximal_ideal.ideal")
