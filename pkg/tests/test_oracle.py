import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, make
from psep.errors import InputError
from psep.generators import cycle, path
from psep.graph import induced_subgraph, maximal_p1_packing
from psep.oracle import (connected_subsets, is_p_size_separator, min_p_separator,
                         min_p_separator_exhaustive)


def k(n):
    return make(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_is_separator_examples():
    assert is_p_size_separator(cycle(5), range(5), 1)
    assert is_p_size_separator(path(3), {1}, 1)
    assert not is_p_size_separator(cycle(6), {0}, 2)


def test_min_separator_examples():
    assert min_p_separator(path(3), 1).separator == {1}
    assert min_p_separator(cycle(6), 2).size == 2
    assert min_p_separator(k(5), 1).size == 4
    assert min_p_separator(make(3, []), 1).size == 0


def test_cap():
    assert min_p_separator(k(5), 1, cap=3) is None
    assert min_p_separator(k(5), 1, cap=4).size == 4


def test_exhaustive_examples():
    assert min_p_separator_exhaustive(cycle(4), 1).size == 2
    assert min_p_separator_exhaustive(make(6, []), 1).size == 0
    assert min_p_separator_exhaustive(cycle(6), 2).separator == {0, 3}
    assert min_p_separator_exhaustive(path(4), 1).size == min_p_separator(path(4), 1).size


def test_exhaustive_size_limit():
    with pytest.raises(InputError):
        min_p_separator_exhaustive(path(26), 1)


def test_connected_subsets_path():
    assert connected_subsets(path(4), 2) == [{0, 1}, {1, 2}, {2, 3}]
    assert len(connected_subsets(k(4), 3)) == 4


@given(graphs(max_n=14), st.integers(1, 3))
def test_oracles_agree(g, p):
    fast = min_p_separator(g, p)
    slow = min_p_separator_exhaustive(g, p)
    assert fast.size == slow.size
    assert is_p_size_separator(g, fast.separator, p)
    assert is_p_size_separator(g, slow.separator, p)


@given(graphs(max_n=14), st.integers(1, 3), st.data())
def test_monotone_under_induced_subgraphs(g, p, data):
    keep = data.draw(st.sets(st.sampled_from(range(g.n)))) if g.n else set()
    sub, _ = induced_subgraph(g, keep)
    assert min_p_separator(sub, p).size <= min_p_separator(g, p).size


@given(graphs(max_n=14), st.integers(1, 3))
def test_packing_lower_bound(g, p):
    assert min_p_separator(g, p).size >= len(maximal_p1_packing(g, p))
