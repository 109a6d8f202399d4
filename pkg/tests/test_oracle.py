import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import INF, bound_lists, brute_force_order, digraphs, left_loads
from ordo import ArcFamilyKind, Digraph
from ordo.errors import CapExceeded
from ordo.oracle import (
    BoundsPredicate,
    DDistancePredicate,
    FamilyPredicate,
    LexObjective,
    LexSense,
    LexSide,
    brute_force_min_inbranching_cover,
    lex_optimal_orders,
    oracle_bounded_search,
    oracle_count,
    oracle_decreasing_min,
    oracle_first_rows,
    oracle_lex,
    oracle_min_feedback_arc_set,
    oracle_min_inbranching_cover,
    oracle_minmax,
    oracle_order,
    oracle_partition,
)

TRI = Digraph(3, [(0, 1), (1, 2), (2, 0)])
TWO_TRI = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def test_oracle_order_examples():
    assert not oracle_order(TRI, BoundsPredicate(None, 0)).feasible
    assert oracle_order(TRI, BoundsPredicate(None, 1)).order == (0, 1, 2)
    chain = Digraph(3, [(2, 1), (1, 0)])
    assert oracle_order(chain, FamilyPredicate(ArcFamilyKind.HAMILTONIAN_DIPATH)).order == (0, 1, 2)
    assert oracle_count(TRI, BoundsPredicate(None, 0)) == 0
    assert oracle_count(TRI, BoundsPredicate(None, 1)) == 6


def test_oracle_order_returns_lex_first():
    D = Digraph(3, [(0, 1)])
    assert oracle_order(D, lambda D, o: o[0] == 2).order == (2, 0, 1)


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        oracle_order(Digraph(9), BoundsPredicate(), cap=8)
    with pytest.raises(CapExceeded):
        oracle_order(Digraph(4), BoundsPredicate(), cap=3)


def test_partition_examples():
    par = Digraph(2, [(0, 1), (0, 1)])
    p = oracle_partition(par, "perfect-matching")
    assert len(p.family_arcs) == 1 and len(p.acyclic_arcs) == 1
    assert len(oracle_partition(Digraph(2, [(0, 1), (1, 0)]), "matching").family_arcs) == 1
    sym = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    # three 2-cycles share vertices pairwise, so a matching meets at most one of them
    assert not oracle_partition(sym, "matching").feasible


def test_decreasing_min_examples():
    assert oracle_decreasing_min(Digraph(3, [(0, 1), (1, 2)]), 1)[1] == (0, 0, 0)
    assert oracle_decreasing_min(TRI, 1)[1] == (1, 0, 0)
    assert oracle_decreasing_min(TWO_TRI, 1)[1] == (1, 1, 0, 0, 0, 0)
    assert oracle_decreasing_min(TRI, 0) is None


def test_min_inbranching_cover_examples():
    assert oracle_min_inbranching_cover(Digraph(3, [(0, 1), (1, 2)])) == (0, ())
    assert oracle_min_inbranching_cover(TRI)[0] == 1
    assert oracle_min_inbranching_cover(TWO_TRI)[0] == 2
    # both arcs out of vertex 0 lie on cycles that no single in-branching can cover
    assert oracle_min_inbranching_cover(Digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)])) is None


def test_lex_examples():
    path = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    order, vec = oracle_lex(path, LexObjective(LexSide.FROM_LEFT, LexSense.MIN))
    assert (order, vec) == ((0, 2, 1), (0, 0, 2))
    for side, sense in itertools.product(LexSide, LexSense):
        assert oracle_lex(Digraph(3), LexObjective(side, sense))[1] == (0, 0, 0)


def test_minmax_and_fas_examples():
    assert oracle_minmax(TRI) == ((0, 1, 2), 1)
    sym = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    assert oracle_minmax(sym)[1] == 2
    assert oracle_min_feedback_arc_set(TWO_TRI)[0] == 2


@given(digraphs(max_n=5, multi=True, weighted=True), st.data())
def test_oracle_matches_itertools(D, data):
    g = data.draw(bound_lists(D.n))
    f = data.draw(bound_lists(D.n, (-INF, 0, 1, 2)))

    def ok(order):
        return all(f[v] <= x <= g[v] for v, x in enumerate(left_loads(D, order)))

    assert oracle_order(D, BoundsPredicate(f, g)).order == brute_force_order(D, ok)
    assert oracle_first_rows(D, [BoundsPredicate(f, g), BoundsPredicate(None, g)]) == [
        brute_force_order(D, ok),
        brute_force_order(D, lambda o: all(x <= g[v] for v, x in enumerate(left_loads(D, o)))),
    ]


@given(digraphs(max_n=5, weighted=True), st.integers(1, 3), st.data())
def test_d_distance_predicate(D, d, data):
    g = data.draw(bound_lists(D.n))

    def ok(order):
        pos = {v: i for i, v in enumerate(order)}
        load = [0] * D.n
        for a in D.arcs:
            if 0 < pos[a.tail] - pos[a.head] <= d:
                load[a.tail] += a.weight
        return all(load[v] <= g[v] for v in range(D.n))

    assert oracle_order(D, DDistancePredicate(d, g)).order == brute_force_order(D, ok)


@given(digraphs(max_n=5, multi=True), st.data())
def test_bounded_search_matches_oracle(D, data):
    g = data.draw(bound_lists(D.n))
    f = data.draw(bound_lists(D.n, (-INF, 0, 1, 2)))
    w = data.draw(st.lists(st.integers(-1, 2), min_size=D.m, max_size=D.m))
    assert oracle_bounded_search(D, f, g, w).order == oracle_order(D, BoundsPredicate(f, g, w)).order


@given(digraphs(max_n=5))
def test_min_cover_matches_decreasing_min(D):
    cover = oracle_min_inbranching_cover(D)
    assert cover == brute_force_min_inbranching_cover(D)
    dec = oracle_decreasing_min(D, 1)
    assert (cover is None) == (dec is None)
    if cover is not None:
        assert cover[0] == sum(1 for x in dec[1] if x == 1)


@settings(max_examples=60)
@given(digraphs(max_n=4, multi=False))
def test_complement_duality(D):
    Dc = D.complement()
    for side in LexSide:
        lo = lex_optimal_orders(D, LexObjective(side, LexSense.MIN))
        hi = lex_optimal_orders(Dc, LexObjective(side, LexSense.MAX))
        assert lo == hi


def test_lex_from_right_suffix_matches_clique():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            D = Digraph(n, [(u, v) for u, v in edges] + [(v, u) for u, v in edges])
            _, vec = oracle_lex(D, LexObjective(LexSide.FROM_RIGHT, LexSense.MIN))
            run = 1
            while run < n and vec[n - run - 1] < vec[n - run]:
                run += 1
            deg = [sum(1 for a in D.arcs if a.tail == v) for v in range(n)]
            low = [v for v in range(n) if deg[v] == min(deg)]
            adj = set(edges) | {(v, u) for u, v in edges}
            best = max(
                len(S)
                for r in range(1, len(low) + 1)
                for S in itertools.combinations(low, r)
                if all((u, v) in adj for u, v in itertools.combinations(S, 2))
            )
            assert run == best, (n, edges, vec)
