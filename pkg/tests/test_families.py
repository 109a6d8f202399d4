import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import brute_force_order, digraphs, has_cycle
from ordo import ArcFamilyKind, CutSet, DegreeDeficit, Digraph, InducedSet, StuckSet
from ordo.errors import FamilyViolation, SpecViolation
from ordo.families import (
    certificate_conditions,
    order_disjoint_dipaths_free_endpoints,
    order_hamiltonian_dipath,
    order_in_arb_out_arb,
    order_in_branching,
    order_k_disjoint_st_dipaths,
    partition_from_order,
    separates,
)
from ordo.oracle import FamilyPredicate, brute_force_partition_exists, oracle_order, oracle_partition

TRI = Digraph(3, [(0, 1), (1, 2), (2, 0)])
PAR = Digraph(2, [(0, 1), (0, 1)])


def left_pairs(D, order):
    pos = {v: i for i, v in enumerate(order)}
    return [(a.tail, a.head) for a in D.arcs if pos[a.head] < pos[a.tail]]


def path_ends(n, pairs):
    """(starts, ends) if the pairs are vertex-disjoint dipaths, else None."""
    out, inc = [0] * n, [0] * n
    for t, h in pairs:
        out[t] += 1
        inc[h] += 1
    if max(out + inc, default=0) > 1 or has_cycle(n, pairs):
        return None
    return {v for v in range(n) if out[v] and not inc[v]}, {v for v in range(n) if inc[v] and not out[v]}


def test_in_branching_examples():
    res = order_in_branching(PAR)
    assert res.order == (0, 1)
    assert res.partition.family_arcs == frozenset()
    res = order_in_branching(TRI)
    assert res.feasible and res.partition.family_arcs | res.partition.acyclic_arcs == {0, 1, 2}
    assert not has_cycle(3, [(TRI.arcs[i].tail, TRI.arcs[i].head) for i in res.partition.acyclic_arcs])
    assert partition_from_order(TRI, (0, 1, 2), "in-branching").family_arcs == {2}
    res = order_in_branching(Digraph(2, [(0, 1), (1, 0)]), roots={0, 1})
    assert isinstance(res.witness, InducedSet) and set(res.witness.vertices) == {0, 1}


def test_partition_from_order_examples():
    p = partition_from_order(TRI, (0, 1, 2), ArcFamilyKind.IN_BRANCHING)
    assert p.family_arcs == {2} and p.acyclic_arcs == {0, 1}
    chain = Digraph(3, [(0, 1), (1, 2)])
    assert partition_from_order(chain, (0, 1, 2), "matching").family_arcs == frozenset()
    assert partition_from_order(TRI, (0, 1, 2), "matching").family_arcs == {2}
    with pytest.raises(FamilyViolation):
        partition_from_order(TRI, (2, 1, 0), "matching")


def test_st_dipath_examples():
    assert order_k_disjoint_st_dipaths(Digraph(2, [(0, 1)]), {0}, {1}).order == (1, 0)
    res = order_k_disjoint_st_dipaths(Digraph(2), {0}, {1})
    assert res.witness == CutSet((), 1)
    two = Digraph(4, [(0, 2), (1, 3)])
    assert order_k_disjoint_st_dipaths(two, {0, 1}, {2, 3}).feasible
    with pytest.raises(SpecViolation):
        order_k_disjoint_st_dipaths(two, {0}, {0})


def test_hamiltonian_examples():
    res = order_hamiltonian_dipath(Digraph(3, [(2, 1), (1, 0)]))
    assert res.order == (0, 1, 2) and (res.extras["s"], res.extras["t"]) == (2, 0)
    assert not order_hamiltonian_dipath(PAR).feasible
    assert not isinstance(oracle_partition(PAR, "hamiltonian-dipath"), type(order_hamiltonian_dipath(PAR)))
    res = order_hamiltonian_dipath(TRI)
    expected = oracle_order(TRI, FamilyPredicate(ArcFamilyKind.HAMILTONIAN_DIPATH))
    assert res.feasible == expected.feasible


def test_free_endpoint_dipaths_examples():
    assert order_disjoint_dipaths_free_endpoints(TRI, 1).feasible
    assert order_disjoint_dipaths_free_endpoints(Digraph(3, [(0, 1), (1, 0)]), 1).feasible
    assert not order_disjoint_dipaths_free_endpoints(Digraph(3, [(0, 1)]), 2).feasible


def test_in_arb_out_arb_examples():
    res = order_in_arb_out_arb(Digraph(2, [(0, 1), (1, 0)]), root=0)
    assert res.order == (0, 1) and res.partition.family_arcs == {1}
    res = order_in_arb_out_arb(Digraph(2, [(0, 1)]), root=0)
    assert not res.feasible
    res = order_in_arb_out_arb(Digraph(2, [(0, 1)]), root=1)
    assert isinstance(res.witness, DegreeDeficit) and res.witness.vertices == (0,)
    sym = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    # the last vertex of any order has two left arcs, so no root works
    for r in range(3):
        assert not order_in_arb_out_arb(sym, root=r).feasible
        assert not oracle_order(sym, FamilyPredicate(ArcFamilyKind.IN_ARBORESCENCE, root=r)).feasible


def test_parallel_arc_divergence():
    for kind in ("perfect-matching", "hamiltonian-dipath", "in-arborescence"):
        assert brute_force_partition_exists(PAR, kind)
        assert oracle_partition(PAR, kind).feasible
    assert not order_hamiltonian_dipath(PAR).feasible
    assert not order_in_arb_out_arb(PAR).feasible
    assert not oracle_order(PAR, FamilyPredicate(ArcFamilyKind.PERFECT_MATCHING)).feasible


@given(digraphs(max_n=5), st.data())
def test_in_branching_matches_brute_force(D, data):
    X = data.draw(st.sets(st.integers(0, D.n - 1), max_size=D.n)) if D.n else set()
    res = order_in_branching(D, X)

    def ok(order):
        pairs = left_pairs(D, order)
        tails = [t for t, _ in pairs]
        return len(tails) == len(set(tails)) and not X & set(tails)

    assert res.feasible == (brute_force_order(D, ok) is not None)
    if res.feasible:
        assert ok(res.order)
        assert not has_cycle(D.n, [(D.arcs[i].tail, D.arcs[i].head) for i in res.partition.acyclic_arcs])
    else:
        Vp = set(res.witness.vertices)
        for v in Vp:
            inner = sum(1 for a in D.arcs if a.tail == v and a.head in Vp and a.head != v)
            assert inner >= (1 if v in X else 2)


@given(digraphs(max_n=5, multi=True))
def test_in_branching_order_iff_partition(D):
    assert order_in_branching(D).feasible == brute_force_partition_exists(D, ArcFamilyKind.IN_BRANCHING)


@given(digraphs(max_n=5, min_n=2), st.data())
def test_st_dipaths_matches_brute_force(D, data):
    k = data.draw(st.integers(1, D.n // 2))
    picked = data.draw(st.permutations(range(D.n)))
    S, T = set(picked[:k]), set(picked[k : 2 * k])
    res = order_k_disjoint_st_dipaths(D, S, T)

    def ok(order):
        ends = path_ends(D.n, left_pairs(D, order))
        if ends is None:
            return False
        pairs = left_pairs(D, order)
        inner = {v for p in pairs for v in p} - S - T
        return ends == (S, T) and all(sum(h == v for _, h in pairs) == 1 for v in inner)

    assert res.feasible == (brute_force_order(D, ok) is not None)
    if res.feasible:
        assert ok(res.order)
    elif isinstance(res.witness, CutSet):
        assert len(res.witness.vertices) < k and separates(D, res.witness.vertices, S, T)
    else:
        assert isinstance(res.witness, StuckSet) and res.witness.validated
        assert all(certificate_conditions(D, res.witness.vertices, S, T))


@given(digraphs(max_n=5, multi=True))
def test_hamiltonian_matches_oracle(D):
    res = order_hamiltonian_dipath(D)
    expected = oracle_order(D, FamilyPredicate(ArcFamilyKind.HAMILTONIAN_DIPATH))
    assert res.feasible == expected.feasible
    if res.feasible:
        pairs = left_pairs(D, res.order)
        assert len(pairs) == max(D.n - 1, 0) and path_ends(D.n, pairs) is not None


@given(digraphs(max_n=5), st.integers(1, 2))
def test_free_endpoint_dipaths_match_oracle(D, k):
    res = order_disjoint_dipaths_free_endpoints(D, k)
    expected = oracle_order(D, FamilyPredicate(ArcFamilyKind.DISJOINT_DIPATHS, count=k))
    assert res.feasible == expected.feasible
    if res.feasible:
        starts, _ = path_ends(D.n, left_pairs(D, res.order))
        assert len(starts) == k


@given(digraphs(max_n=5, multi=True))
def test_in_arb_out_arb_matches_brute_force(D):
    res = order_in_arb_out_arb(D)

    def ok_for(r):
        def ok(order):
            pos = {v: i for i, v in enumerate(order)}
            lo = [0] * D.n
            li = [0] * D.n
            for a in D.arcs:
                if pos[a.head] < pos[a.tail]:
                    lo[a.tail] += 1
                    li[a.head] += 1
            ri = [D.indegree[v] - li[v] for v in range(D.n)]
            return all((lo[v], ri[v]) == ((0, 0) if v == r else (1, 1)) for v in range(D.n))

        return ok

    roots = [r for r in range(D.n) if brute_force_order(D, ok_for(r)) is not None]
    assert res.feasible == bool(roots)
    if res.feasible:
        assert res.extras["root"] == roots[0] and ok_for(roots[0])(res.order)


def test_partition_oracle_agrees_with_subsets():
    for n in range(1, 4):
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        for mask in range(1 << len(pairs)):
            D = Digraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            for kind in ArcFamilyKind:
                assert oracle_partition(D, kind).feasible == brute_force_partition_exists(D, kind), (D, kind)
