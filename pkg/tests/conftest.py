import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from linearwidth.graph_core import Graph  # noqa: E402

# fixed examples keep the suite's runtime predictable; the first numba call compiles
settings.register_profile("repo", derandomize=True, deadline=None)
settings.load_profile("repo")

# a-b-c-d style labels map to 0-1-2-3
K2 = Graph(2, ((0, 1),))
K3 = Graph(3, ((0, 1), (1, 2), (0, 2)))  # ab, bc, ac
K4 = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
P3 = Graph(3, ((0, 1), (1, 2)))
P4 = Graph(4, ((0, 1), (1, 2), (2, 3)))
C4 = Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
STAR3 = Graph(4, ((0, 1), (0, 2), (0, 3)))  # centre 0


@pytest.fixture
def k3():
    return K3
