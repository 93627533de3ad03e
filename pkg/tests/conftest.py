import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from jacobi_modsym.modsym import read_symbol  # noqa: E402
from jacobi_modsym.table import read_table  # noqa: E402

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "jacobi_modsym" / "fixtures"


def fixture_path(name):
    return FIXTURES / name


@pytest.fixture(scope="session")
def symbols():
    return {name: read_symbol(fixture_path(name + ".sym"))
            for name in ("w2m37", "w10m1", "w2m11", "w2m15", "w2m389", "zero")}


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def load_table(name):
    return read_table(fixture_path(name))
