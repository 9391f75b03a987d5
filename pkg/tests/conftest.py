import numpy as np
import pytest

# The worked nine-point data set used throughout the examples.
DEMO_VALUES = (3.0, 1.0, 3.0, 2.0, 4.0, 1.0, 3.0, 1.0, 2.0)


@pytest.fixture
def demo_data():
    return np.array(DEMO_VALUES)
