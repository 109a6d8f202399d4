import math
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import digraphs, has_cycle, left_loads, right_indegrees
from ordo import ArcFamilyKind, Digraph, classify_arc_set, degree_profile, find_cycle, induced_min_outdegree, is_acyclic, topological_order
from ordo.digraph import CycleError, bound_vector, cyclic_arcs, parse_extended, strongly_connected_components
from ordo.errors import IndexOutOfRange, InvalidDigraph, LengthMismatch, NotPermutation, OrdoError

TRI = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_rejects_loops_and_bad_endpoints():
    with pytest.raises(InvalidDigraph):
        Digraph(2, [(0, 0)])
    with pytest.raises(InvalidDigraph):
        Digraph(2, [(0, 2)])
    with pytest.raises(InvalidDigraph):
        Digraph(-1)
    with pytest.raises(OrdoError):
        Digraph(2, [(0, 1, -1)])


def test_parallel_arcs_keep_their_identity():
    D = Digraph(2, [(0, 1), (0, 1, 3)])
    assert D.m == 2
    assert D.weights == (1, 3)
    assert not D.is_simple
    assert D.out_arcs[0] == (0, 1)


def test_profile_examples():
    p = degree_profile(Digraph(2, [(0, 1)]), (1, 0))
    assert p.delta_left[0] == 1 and p.rho_right[1] == 1
    p = degree_profile(Digraph(3), (2, 0, 1))
    assert p.delta_left == (0, 0, 0) and p.rho_right == (0, 0, 0)
    assert degree_profile(TRI, (0, 1, 2)).delta_left == (0, 0, 1)


def test_profile_rejects_non_permutations():
    with pytest.raises(LengthMismatch):
        degree_profile(TRI, (0, 1))
    with pytest.raises(NotPermutation):
        degree_profile(TRI, (0, 1, 1))


def test_weighted_profile_with_infinite_weight():
    D = Digraph(2, [(1, 0, "inf"), (1, 0, 2)])
    p = degree_profile(D, (0, 1))
    assert p.delta_left_w[1] == math.inf
    assert p.delta_left[1] == 2


def test_acyclicity_examples():
    assert not is_acyclic(TRI)
    with pytest.raises(CycleError) as err:
        topological_order(TRI)
    assert sorted(err.value.arcs) == [0, 1, 2]
    chain = Digraph(3, [(0, 1), (1, 2)])
    assert is_acyclic(chain)
    # arcs point right to left in a topological order here: heads come first
    assert degree_profile(chain, topological_order(chain)).delta_left == (0, 0, 0)
    assert is_acyclic(Digraph(2, [(0, 1), (0, 1)]))


def test_classify_examples():
    D = Digraph(4, [(0, 1), (2, 3)])
    assert classify_arc_set(D, [0, 1], ArcFamilyKind.MATCHING)
    assert classify_arc_set(D, [0, 1], "perfect-matching")
    star = Digraph(3, [(0, 1), (0, 2)])
    assert not classify_arc_set(star, [0, 1], ArcFamilyKind.IN_BRANCHING)
    par = Digraph(2, [(0, 1), (0, 1)])
    assert not classify_arc_set(par, [0, 1], ArcFamilyKind.MATCHING)
    assert classify_arc_set(par, [0], ArcFamilyKind.PERFECT_MATCHING)
    with pytest.raises(IndexOutOfRange):
        classify_arc_set(par, [2], ArcFamilyKind.MATCHING)


def test_classify_paths_and_arborescences():
    path = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert classify_arc_set(path, [0, 1, 2], ArcFamilyKind.HAMILTONIAN_DIPATH)
    assert not classify_arc_set(path, [0, 1, 2, 3], ArcFamilyKind.DISJOINT_DIPATHS)
    assert classify_arc_set(path, [0, 2], ArcFamilyKind.DISJOINT_DIPATHS)
    assert not classify_arc_set(path, [0, 2], ArcFamilyKind.DIPATH)
    assert classify_arc_set(path, [], ArcFamilyKind.DIPATH)
    tree = Digraph(4, [(1, 0), (2, 0), (3, 2)])
    assert classify_arc_set(tree, [0, 1, 2], ArcFamilyKind.IN_ARBORESCENCE)
    assert not classify_arc_set(tree, [0, 1], ArcFamilyKind.IN_ARBORESCENCE)


def test_induced_min_outdegree_examples():
    assert induced_min_outdegree(TRI, {0, 1, 2}) == {0: 1, 1: 1, 2: 1}
    assert induced_min_outdegree(TRI, {0, 1}) == {0: 1, 1: 0}
    star = Digraph(3, [(0, 1), (0, 2)])
    assert induced_min_outdegree(star, {1, 2}) == {1: 0, 2: 0}


def test_reverse_and_complement():
    assert TRI.reverse().arcs[0][:2] == (1, 0)
    comp = TRI.complement()
    assert sorted((a.tail, a.head) for a in comp.arcs) == [(0, 2), (1, 0), (2, 1)]
    with pytest.raises(InvalidDigraph):
        Digraph(2, [(0, 1), (0, 1)]).complement()


def test_extended_values():
    assert parse_extended("7/2") == Fraction(7, 2)
    assert parse_extended(0.1) == Fraction(1, 10)
    assert parse_extended("-inf") == -math.inf
    assert parse_extended(4.0) == 4 and isinstance(parse_extended(4.0), int)
    with pytest.raises(OrdoError):
        parse_extended(float("nan"))
    with pytest.raises(OrdoError):
        parse_extended(True)
    assert bound_vector({1: 2}, 3, math.inf) == [math.inf, 2, math.inf]
    assert bound_vector(1, 2, 0) == [1, 1]
    with pytest.raises(IndexOutOfRange):
        bound_vector({5: 1}, 3, 0)


@given(digraphs(weighted=True), st.randoms(use_true_random=False))
def test_profile_invariants(D, rnd):
    order = list(range(D.n))
    rnd.shuffle(order)
    p = degree_profile(D, order)
    for v in range(D.n):
        assert p.delta_left[v] + p.delta_right[v] == D.outdegree[v]
        assert p.rho_left[v] + p.rho_right[v] == D.indegree[v]
    assert sum(p.delta_left) == sum(p.rho_right) == len(p.left_arcs)
    assert list(p.delta_left_w) == left_loads(D, order)
    assert list(p.rho_right) == right_indegrees(D, order)
    rev = degree_profile(D, order[::-1])
    assert rev.delta_left == p.delta_right


@given(digraphs())
def test_acyclicity_matches_networkx(D):
    G = nx.MultiDiGraph()
    G.add_nodes_from(range(D.n))
    G.add_edges_from((a.tail, a.head) for a in D.arcs)
    assert is_acyclic(D) == nx.is_directed_acyclic_graph(G)
    assert is_acyclic(D) == (not has_cycle(D.n, [(a.tail, a.head) for a in D.arcs]))
    cyc = find_cycle(D)
    if cyc is None:
        assert degree_profile(D, topological_order(D)).delta_left == (0,) * D.n
    else:
        heads = [D.arcs[i].head for i in cyc]
        tails = [D.arcs[i].tail for i in cyc]
        assert tails[1:] + tails[:1] == heads
    comp = strongly_connected_components(D)
    nxcomp = {v: i for i, c in enumerate(nx.strongly_connected_components(G)) for v in c}
    for u in range(D.n):
        for v in range(D.n):
            assert (comp[u] == comp[v]) == (nxcomp[u] == nxcomp[v])
    on_cycle = set(cyclic_arcs(D))
    for i, a in enumerate(D.arcs):
        assert (i in on_cycle) == (nxcomp[a.tail] == nxcomp[a.head])


@given(digraphs(max_n=5), st.data())
def test_family_implications(D, data):
    ids = data.draw(st.sets(st.integers(0, max(D.m - 1, 0)), max_size=D.m)) if D.m else set()
    c = {k: classify_arc_set(D, ids, k) for k in ArcFamilyKind}
    if c[ArcFamilyKind.HAMILTONIAN_DIPATH]:
        assert c[ArcFamilyKind.DIPATH]
    if c[ArcFamilyKind.DIPATH]:
        assert c[ArcFamilyKind.DISJOINT_DIPATHS]
    if c[ArcFamilyKind.IN_ARBORESCENCE]:
        assert c[ArcFamilyKind.IN_BRANCHING]
    if c[ArcFamilyKind.PERFECT_MATCHING]:
        assert c[ArcFamilyKind.MATCHING]
    for k in ArcFamilyKind:
        if c[k]:
            assert c[ArcFamilyKind.ACYCLIC] or k in (ArcFamilyKind.MATCHING, ArcFamilyKind.PERFECT_MATCHING)
