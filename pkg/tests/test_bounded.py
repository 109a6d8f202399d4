import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import INF, bound_lists, brute_force_order, digraphs, left_loads
from ordo import (
    ArcFamilyKind,
    Digraph,
    InducedSet,
    StuckSet,
    classify_arc_set,
    induced_min_outdegree,
    solve_d_distance_large,
    solve_k_arc_disjoint_in_arbs,
    solve_lower,
    solve_minmax,
    solve_mixed_per_vertex,
    solve_upper,
    solve_upper_with_precedence,
)
from ordo.errors import CapExceeded, PrecedenceCycle, SpecViolation

TRI = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def upper_ok(D, g, weights=None):
    return lambda order: all(x <= b for x, b in zip(left_loads(D, order, weights), g))


def lower_ok(D, f, weights=None):
    return lambda order: all(x >= b for x, b in zip(left_loads(D, order, weights), f))


def window_loads(D, order, d):
    pos = {v: i for i, v in enumerate(order)}
    out = [0] * D.n
    for a in D.arcs:
        if 0 < pos[a.tail] - pos[a.head] <= d:
            out[a.tail] += a.weight
    return out


def test_upper_examples():
    res = solve_upper(TRI, [1, 1, 1])
    assert res.feasible and max(res.profile.delta_left) == 1
    res = solve_upper(TRI, [0, 0, 0])
    assert not res.feasible
    assert res.witness == InducedSet((0, 1, 2), "upper")
    D = Digraph(2, [(0, 1, 5)])
    assert solve_upper(D, [4, INF]).order == (0, 1)


def test_lower_examples():
    D = Digraph(2, [(1, 0)])
    assert solve_lower(D, [0, 1]).order == (0, 1)
    res = solve_lower(D, [1, 1])
    assert not res.feasible and set(res.witness.vertices) == {0, 1}


def test_minmax_examples():
    assert solve_minmax(TRI)[1] == 1
    assert solve_minmax(Digraph(4))[1] == 0
    # the last vertex of any order has both other vertices to its left
    K3 = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    assert solve_minmax(K3)[1] == 2


def test_precedence_examples():
    assert solve_upper_with_precedence(Digraph(2), None, [(0, 1)]).order == (0, 1)
    res = solve_upper_with_precedence(Digraph(2, [(0, 1)]), [0, INF], [(1, 0)])
    assert not res.feasible and isinstance(res.witness, StuckSet) and res.witness.validated
    res = solve_upper_with_precedence(TRI, [1, 1, 1], [(2, 0)])
    assert res.feasible
    assert res.order.index(2) < res.order.index(0)
    with pytest.raises(PrecedenceCycle):
        solve_upper_with_precedence(TRI, None, [(0, 1), (1, 2), (2, 0)])


def test_mixed_examples():
    # z=0, v=1, w=2 with arcs w->v and v->z
    D = Digraph(3, [(2, 1), (1, 0)])
    res = solve_mixed_per_vertex(D, [None, 1, 1], [0, None, None])
    assert res.order == (0, 1, 2)
    with pytest.raises(SpecViolation):
        solve_mixed_per_vertex(D, [None, 1, 1], [0, 0, None])
    with pytest.raises(SpecViolation):
        solve_mixed_per_vertex(D, [None, None, 1], [0, None, None])
    assert solve_mixed_per_vertex(TRI, None, [1, 1, 1]) == solve_upper(TRI, [1, 1, 1])
    with pytest.raises(CapExceeded):
        solve_mixed_per_vertex(Digraph(5), [0, None, None, None, None], [None, 1, 1, 1, 1], cap=4)


def test_d_distance_examples():
    assert solve_d_distance_large(TRI, [1, 1, 1], 0) == solve_upper(TRI, [1, 1, 1])
    assert not solve_d_distance_large(TRI, [0, 0, 0], 1).feasible
    sym = Digraph(3, [(0, 2), (2, 0)])
    assert not solve_d_distance_large(sym, [0, 0, 0], 1).feasible
    assert brute_force_order(sym, lambda o: max(window_loads(sym, o, 1)) == 0) is not None
    with pytest.raises(CapExceeded):
        solve_d_distance_large(Digraph(6), None, 3)
    with pytest.raises(SpecViolation):
        solve_d_distance_large(TRI, None, 2)


def test_arborescence_examples():
    # r=0, a=1, b=2
    res = solve_k_arc_disjoint_in_arbs(Digraph(3, [(1, 0), (2, 0)]), 0, 1)
    assert res.order == (0, 1, 2)
    assert not solve_k_arc_disjoint_in_arbs(Digraph(2, [(1, 0)]), 0, 2).feasible
    # a=0 is the root, c=2 -> b=1 -> a, c -> a
    D = Digraph(3, [(2, 1), (1, 0), (2, 0)])
    res = solve_k_arc_disjoint_in_arbs(D, 0, 1)
    assert res.feasible
    (arb,) = res.extras["arborescences"]
    assert classify_arc_set(D, arb, ArcFamilyKind.IN_ARBORESCENCE)


@given(digraphs(max_n=5, weighted=True), st.data())
def test_upper_matches_brute_force(D, data):
    g = data.draw(bound_lists(D.n))
    res = solve_upper(D, g)
    expect = brute_force_order(D, upper_ok(D, g))
    assert res.feasible == (expect is not None)
    if res.feasible:
        assert upper_ok(D, g)(res.order)
    else:
        Vp = set(res.witness.vertices)
        inner = induced_min_outdegree(D, Vp)
        assert Vp and all(inner[v] > g[v] for v in Vp)


@given(digraphs(max_n=5, weighted=True), st.data())
def test_lower_matches_brute_force(D, data):
    f = data.draw(bound_lists(D.n, (-INF, 0, 1, 2)))
    res = solve_lower(D, f)
    assert res.feasible == (brute_force_order(D, lower_ok(D, f)) is not None)
    if res.feasible:
        assert lower_ok(D, f)(res.order)
    else:
        Vp = set(res.witness.vertices)
        for v in Vp:
            outside = sum(a.weight for a in D.arcs if a.tail == v and a.head not in Vp)
            assert outside < f[v]


@given(digraphs(max_n=5, weighted=True), st.data())
def test_lower_upper_duality(D, data):
    f = data.draw(bound_lists(D.n, (0, 1, 2, 3)))
    wout = D.weighted_outdegree
    g = [wout[v] - f[v] for v in range(D.n)]
    lo, up = solve_lower(D, f), solve_upper(D, g)
    assert lo.feasible == up.feasible
    if up.feasible:
        assert lower_ok(D, f)(up.order[::-1])


@given(digraphs(max_n=5), st.data(), st.randoms(use_true_random=False))
def test_upper_ignores_tie_breaks(D, data, rnd):
    g = data.draw(bound_lists(D.n))
    res = solve_upper(D, g, choose=lambda cand: rnd.choice(cand))
    assert res.feasible == solve_upper(D, g).feasible
    if res.feasible:
        assert upper_ok(D, g)(res.order)


@given(digraphs(max_n=5, weighted=True))
def test_minmax_matches_brute_force(D):
    import itertools

    order, value = solve_minmax(D)
    best = min((max(left_loads(D, o), default=0) for o in itertools.permutations(range(D.n))), default=0)
    assert value == best
    assert max(left_loads(D, order), default=0) == value


@given(digraphs(max_n=5), st.data())
def test_mixed_matches_brute_force(D, data):
    kinds = data.draw(st.lists(st.booleans(), min_size=D.n, max_size=D.n))
    vals = data.draw(bound_lists(D.n, (0, 1, 2)))
    f = [v if k else None for k, v in zip(kinds, vals)]
    g = [None if k else v for k, v in zip(kinds, vals)]
    res = solve_mixed_per_vertex(D, f, g)

    def ok(order):
        loads = left_loads(D, order)
        return all((f[v] is None or loads[v] >= f[v]) and (g[v] is None or loads[v] <= g[v]) for v in range(D.n))

    assert res.feasible == (brute_force_order(D, ok) is not None)
    if res.feasible:
        assert ok(res.order)


@given(digraphs(max_n=6, min_n=2), st.data())
def test_precedence_matches_brute_force(D, data):
    g = data.draw(bound_lists(D.n))
    n = D.n
    perm = data.draw(st.permutations(range(n)))
    # pairs consistent with a hidden order, so no precedence cycle arises
    pairs = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]), max_size=4))
    prec = [(perm[min(perm.index(u), perm.index(v))], perm[max(perm.index(u), perm.index(v))]) for u, v in pairs]
    res = solve_upper_with_precedence(D, g, prec)

    def ok(order):
        pos = {v: i for i, v in enumerate(order)}
        return upper_ok(D, g)(order) and all(pos[u] < pos[v] for u, v in prec)

    assert res.feasible == (brute_force_order(D, ok) is not None)
    if res.feasible:
        assert ok(res.order)
    else:
        Vp = set(res.witness.vertices)
        inner = induced_min_outdegree(D, Vp)
        assert all(inner[v] > g[v] or any(u in Vp for p, u in prec if p == v) for v in Vp)


@given(digraphs(max_n=6, weighted=True), st.integers(0, 2), st.data())
def test_d_distance_matches_brute_force(D, k, data):
    if 2 * k > D.n:
        k = D.n // 2
    g = data.draw(bound_lists(D.n))
    d = D.n - k
    res = solve_d_distance_large(D, g, k)
    ok = lambda o: all(x <= b for x, b in zip(window_loads(D, o, d), g))
    assert res.feasible == (brute_force_order(D, ok) is not None)
    if res.feasible:
        assert ok(res.order)


@given(digraphs(max_n=6), st.integers(1, 3), st.data())
def test_arborescences_are_disjoint_with_acyclic_union(D, k, data):
    if D.n == 0:
        return
    r = data.draw(st.integers(0, D.n - 1))
    res = solve_k_arc_disjoint_in_arbs(D, r, k)
    f = [0 if v == r else k for v in range(D.n)]
    assert res.feasible == (brute_force_order(D, lower_ok(D, f, [1] * D.m)) is not None)
    if not res.feasible:
        return
    arbs = res.extras["arborescences"]
    assert len(arbs) == k
    used = [i for arb in arbs for i in arb]
    assert len(used) == len(set(used))
    from ordo import is_acyclic

    assert is_acyclic(D, used)
    for arb in arbs:
        assert classify_arc_set(D, arb, ArcFamilyKind.IN_ARBORESCENCE)
        assert all(D.arcs[i].tail != r for i in arb)


def test_infinite_weights_and_bounds():
    D = Digraph(2, [(1, 0, "inf")])
    assert solve_upper(D, [0, 0]).order == (1, 0)
    assert not solve_upper(Digraph(2, [(1, 0, "inf"), (0, 1)]), [0, 10**9]).feasible
    assert solve_lower(D, [0, INF]).order == (0, 1)
    assert not solve_lower(D, [1, 0]).feasible
    assert math.isinf(solve_minmax(Digraph(2, [(1, 0, "inf"), (0, 1, "inf")]))[1])


def test_random_larger_instances_hold_their_bounds():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(10, 40)
        D = Digraph(n, [(u, v, rng.randint(0, 3)) for u in range(n) for v in range(n) if u != v and rng.random() < 0.15])
        g = [rng.randint(0, 6) for _ in range(n)]
        res = solve_upper(D, g)
        if res.feasible:
            assert upper_ok(D, g)(res.order)
        else:
            Vp = set(res.witness.vertices)
            inner = induced_min_outdegree(D, Vp)
            assert all(inner[v] > g[v] for v in Vp)
