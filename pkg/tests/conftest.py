import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest


@pytest.fixture
def data_dir():
    return os.path.join(os.path.dirname(__file__), "data")
