import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import gamma, graphs, make
from psep.crown import crown_violations
from psep.errors import InputError
from psep.generators import cycle, path, spider
from psep.graph import induced_subgraph
from psep.kernel import (LINEAR, NO_INSTANCE, QUADRATIC, REDUCED, Base, BaseSet,
                         associate_subgraph, associate_vertices, base_violations,
                         complete_packing, contract, extension_operation, find_extendable,
                         kernelize, kernelize_quadratic, scc)
from psep.local_adjust import SplitPair
from psep.oracle import is_p_size_separator, min_p_separator


def star(leaves: int):
    return make(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@pytest.fixture
def split_with_single():
    # group {0,1} with attached 2 and 3; single 4 whose star is {2},{3},{5},{6}
    g = make(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (4, 3), (4, 5), (4, 6)])
    bases = BaseSet((Base.group({0, 1}), Base.single(4)))
    witness = {4: (frozenset({2}), frozenset({3}), frozenset({5}), frozenset({6}))}
    return g, bases, witness


def test_associate_subgraph_path():
    g = path(5)
    bases = BaseSet((Base.single(2),))
    sub, ids = associate_subgraph(g, bases, bases.bases[0])
    assert ids == [0, 1, 2, 3, 4] and sub.m == 4


def test_associate_without_attachments():
    g = make(4, [(0, 1), (2, 3)])
    bases = BaseSet((Base.group({0, 1}), Base.group({2, 3})))
    assert associate_vertices(g, bases, bases.bases[0]) == {0, 1}


def test_shared_attachment_in_both():
    g = path(5)
    bases = BaseSet((Base.group({0, 1}), Base.group({3, 4})))
    assert 2 in associate_vertices(g, bases, bases.bases[0])
    assert 2 in associate_vertices(g, bases, bases.bases[1])


def test_contract_examples():
    g = make(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    cg = contract(g, BaseSet((Base.group({0, 1, 2}),)))
    assert (cg.graph.n, cg.graph.m) == (2, 1)
    assert cg.vertex_of == {0: 3} and cg.base_of == {1: 0}
    ident = contract(g, BaseSet((Base.single(0),)))
    assert ident.graph == g
    two = make(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
    cg = contract(two, BaseSet((Base.group({0, 1, 2}), Base.group({3, 4, 5}))))
    assert cg.graph.edges() == [(0, 1)]


def test_first_extension_adds_one_base():
    # K4 minus the edge 2-3: the only base {0,1} is extendable for p=1
    g = make(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    bases = BaseSet((Base.group({0, 1}),))
    idx, split = find_extendable(g, bases, 1)
    assert idx == 0
    assert split == SplitPair(frozenset({0, 2}), frozenset({1, 3}))
    out = extension_operation(g, bases, idx, split, {}, 1)
    assert out.bases == (Base.group({0, 2}), Base.group({1, 3}))
    assert base_violations(g, out, 1) == []


def test_minimal_split_is_kept():
    g = cycle(4)
    bases = BaseSet((Base.group({0, 1}), Base.group({2, 3})))
    split = SplitPair(frozenset({0, 1}), frozenset({2, 3}))
    out = extension_operation(g, bases, 0, split, {}, 1)
    assert out.bases[:2] == (Base.group({0, 1}), Base.group({2, 3}))


def test_extension_grows_single_into_star(split_with_single):
    g, bases, witness = split_with_single
    assert base_violations(g, bases, 1, witness) == []
    idx, split = find_extendable(g, bases, 1)
    out = extension_operation(g, bases, idx, split, witness, 1)
    assert len(out) == len(bases) + 1
    assert out.bases == (Base.group({0, 2}), Base.group({1, 3}), Base.group({4, 5}))
    assert not out.singles
    assert base_violations(g, out, 1) == []


def test_complete_packing_fills_gaps():
    g = path(6)
    out = complete_packing(g, BaseSet((Base.group({0, 1}),)), 1)
    assert out.bases == (Base.group({0, 1}), Base.group({2, 3}), Base.group({4, 5}))


def test_scc_p5():
    res = scc(path(5), 1, debug=True)
    cd = res.decomposition
    assert not cd.c_set and not cd.i_set
    assert res.bases.bases == (Base.group({0, 1}), Base.group({2, 3}))
    assert 5 <= 9 * 1 * gamma(path(5), 1)


def test_scc_star_forces_center():
    res = scc(star(9), 1, debug=True, gamma=1)
    assert res.decomposition.c_set == {0}
    assert res.decomposition.i_set == set(range(1, 10))
    assert res.bases.bases == (Base.single(0),)


def test_scc_small_graph_guard():
    res = scc(path(2), 2)
    assert res.decomposition.j_set == {0, 1} and len(res.bases) == 0


def test_scc_rejects_disconnected():
    with pytest.raises(InputError):
        scc(make(4, [(0, 1), (2, 3)]), 1)


@pytest.mark.parametrize("p", [1, 2])
def test_scc_spider(p):
    g = spider(10, 4)
    gam = gamma(g, p)
    res = scc(g, p, debug=True, gamma=gam)
    cd = res.decomposition
    assert crown_violations(g, cd) == []
    kernel, _ = induced_subgraph(g, cd.j_set)
    assert gam == len(cd.c_set) + gamma(kernel, p)
    assert len(cd.j_set) <= 9 * p * gamma(kernel, p)


def test_kernelize_small_components():
    g = make(6, [(0, 1), (2, 3)])
    out = kernelize(g, 2, 0)
    assert out.verdict == REDUCED and out.kernel_graph.n == 0
    assert out.forced == frozenset() and out.budget_used == 0


def test_kernelize_star():
    out = kernelize(star(9), 1, 1, debug=True)
    assert out.verdict == REDUCED
    assert out.forced == {0} and out.budget_used == 1 and out.kernel_graph.n == 0
    assert gamma(star(9), 1) == 1


def test_kernelize_c4_no_instance():
    out = kernelize(cycle(4), 1, 0)
    assert out.verdict == NO_INSTANCE
    assert out.bound == 0


def test_kernelize_p5():
    out = kernelize(path(5), 1, 2)
    assert out.verdict == REDUCED and out.kernel_graph.n == 5 and out.bound == 18
    assert out.mode == LINEAR


def test_kernelize_rejects_bad_parameters():
    with pytest.raises(InputError):
        kernelize(path(3), 0)
    with pytest.raises(InputError):
        kernelize_quadratic(path(3), 1, -1)


def test_quadratic_p5():
    out = kernelize_quadratic(path(5), 1, 2)
    assert out.kernel_graph == path(5) and out.budget_used == 0
    assert out.stats["rounds"] == 0 and out.mode == QUADRATIC


def test_quadratic_star():
    out = kernelize_quadratic(star(9), 1, 1)
    assert out.forced == {0}
    assert out.kernel_ids == [1]
    assert out.kernel_graph.n <= 2 * 1 * 2 * 1


def test_quadratic_edgeless():
    out = kernelize_quadratic(make(5, []), 2, 0)
    assert out.verdict == REDUCED and out.kernel_graph.n == 0


def test_quadratic_packing_exceeds_k():
    out = kernelize_quadratic(make(6, [(0, 1), (2, 3), (4, 5)]), 1, 2)
    assert out.verdict == NO_INSTANCE


def _check_outcome(g, p, out):
    gam = gamma(g, p)
    assert crown_violations(g, out.decomposition) == []
    assert gam == out.budget_used + gamma(out.kernel_graph, p)
    kernel_sep = min_p_separator(out.kernel_graph, p).separator
    full = set(out.forced) | {out.kernel_ids[v] for v in kernel_sep}
    assert is_p_size_separator(g, full, p) and len(full) == gam


@given(graphs(max_n=14), st.integers(1, 3))
def test_linear_kernel_properties(g, p):
    out = kernelize(g, p, gamma(g, p), debug=True)
    assert out.verdict == REDUCED
    _check_outcome(g, p, out)
    assert out.kernel_graph.n <= 9 * p * gamma(out.kernel_graph, p)


@given(graphs(max_n=14), st.integers(1, 3))
def test_quadratic_kernel_properties(g, p):
    k = gamma(g, p)
    out = kernelize_quadratic(g, p, k, debug=True)
    assert out.verdict == REDUCED
    _check_outcome(g, p, out)
    assert out.kernel_graph.n <= 2 * p * (p + 1) * k


@given(graphs(max_n=14, connected=True, min_n=1), st.integers(1, 3))
def test_scc_base_properties(g, p):
    res = scc(g, p, debug=True, gamma=gamma(g, p))
    assert base_violations(g, res.bases, p) == []
    assert res.step3 <= g.n and res.step45 <= g.n ** 2
    b = res.bases.b_set
    c = res.decomposition.c_set
    assert len(b - c) == res.b_star_minus_c + res.groups * p


@given(graphs(max_n=14), st.integers(1, 2), st.integers(0, 6))
def test_verdict_matches_gamma(g, p, k):
    for run in (kernelize, kernelize_quadratic):
        out = run(g, p, k)
        if gamma(g, p) <= k:
            assert out.verdict == REDUCED


def test_per_component_merge():
    # 9-leaf star on 0..9, C4 on 10..13, isolated 14
    edges = [(0, i) for i in range(1, 10)] + [(10, 11), (11, 12), (12, 13), (13, 10)]
    out = kernelize(make(15, edges), 1)
    assert out.forced == {0}
    assert out.kernel_ids == [10, 11, 12, 13]
    assert out.kernel_graph == cycle(4)
    assert out.stats["components"] == 2 and out.stats["stripped"] == 1
