import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from atanhsum import PrecisionContext


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(30)


@pytest.fixture(scope="session")
def ctx15():
    return PrecisionContext(15)


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionContext(50)
