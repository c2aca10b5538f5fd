import sys
from pathlib import Path

import pytest

from posetderiv import fixtures as fx

sys.path.insert(0, str(Path(__file__).resolve().parent))

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = REPO_ROOT / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def rp2():
    return fx.rp2()


@pytest.fixture
def diamond():
    return fx.diamond()


@pytest.fixture
def s5():
    return fx.s5()
