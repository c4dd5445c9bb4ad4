import random

import pytest
from helpers import random_subgraph

from cubeturan._kernels import _cycles_py, backend_name
from cubeturan.core import adjacency_lists, full_cube

try:
    from cubeturan._kernels import _cycles as _cycles_c
except ImportError:
    _cycles_c = None

needs_compiled = pytest.mark.skipif(_cycles_c is None, reason="compiled kernel not built")


def test_some_backend_is_active():
    assert backend_name() in ("c", "python")


@needs_compiled
def test_backends_agree_on_full_cubes():
    for n in (2, 3, 4):
        adj = adjacency_lists(full_cube(n))
        for length in (4, 6, 8):
            if length > 1 << n:
                continue
            assert (_cycles_py.count_cycles_kernel(adj, length)
                    == _cycles_c.count_cycles_kernel(adj, length))
            assert (_cycles_py.find_cycle_kernel(adj, length)
                    == _cycles_c.find_cycle_kernel(adj, length))


@needs_compiled
def test_backends_agree_on_random_subgraphs():
    rng = random.Random(808)
    for _ in range(20):
        g = random_subgraph(rng.choice((3, 4, 5)), rng.uniform(0.3, 0.9), rng)
        adj = adjacency_lists(g)
        for length in (4, 6, 8):
            assert (_cycles_py.count_cycles_kernel(adj, length)
                    == _cycles_c.count_cycles_kernel(adj, length))
            assert (_cycles_py.find_cycle_kernel(adj, length)
                    == _cycles_c.find_cycle_kernel(adj, length))


@needs_compiled
def test_backends_agree_with_required_positions():
    rng = random.Random(909)
    for n in (3, 4):
        adj = adjacency_lists(full_cube(n))
        full_mask = (1 << n) - 1
        for length in (6, 8):
            assert (_cycles_py.count_cycles_kernel(adj, length, full_mask)
                    == _cycles_c.count_cycles_kernel(adj, length, full_mask))
    g = random_subgraph(4, 0.8, rng)
    adj = adjacency_lists(g)
    assert (_cycles_py.count_cycles_kernel(adj, 8, 0b1011)
            == _cycles_c.count_cycles_kernel(adj, 8, 0b1011))


def test_start_range_partition_sums_to_total():
    adj = adjacency_lists(full_cube(4))
    total = _cycles_py.count_cycles_kernel(adj, 6)
    split = sum(
        _cycles_py.count_cycles_kernel(adj, 6, 0, lo, lo + 4)
        for lo in range(0, 16, 4)
    )
    assert split == total
