"""Test-side utilities that avoid the package's own degree arithmetic."""

import itertools
import math
import random

from hypothesis import strategies as st

from ordo import Digraph

INF = math.inf


def all_simple_digraphs(n):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(pairs)):
        yield Digraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def all_simple_graphs(n):
    """Symmetric digraphs, one per undirected simple graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        yield Digraph(n, [(u, v) for u, v in edges] + [(v, u) for u, v in edges])


def random_digraph(rng, n, p, *, multi=False, max_weight=None):
    arcs = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            copies = 1 + (rng.random() < 0.2) if multi else 1
            for _ in range(copies):
                if rng.random() < p:
                    w = 1 if max_weight is None else rng.randint(0, max_weight)
                    arcs.append((u, v, w))
    return Digraph(n, arcs)


def left_loads(D, order, weights=None):
    """Plain recomputation of the weighted left-outdegree of every vertex."""
    pos = {v: i for i, v in enumerate(order)}
    w = [a.weight for a in D.arcs] if weights is None else list(weights)
    out = [0] * D.n
    for i, a in enumerate(D.arcs):
        if pos[a.head] < pos[a.tail]:
            out[a.tail] += w[i]
    return out


def right_indegrees(D, order):
    pos = {v: i for i, v in enumerate(order)}
    out = [0] * D.n
    for a in D.arcs:
        if pos[a.head] < pos[a.tail]:
            out[a.head] += 1
    return out


def brute_force_order(D, ok):
    """First order in lexicographic order accepted by ``ok``, else None."""
    for order in itertools.permutations(range(D.n)):
        if ok(order):
            return order
    return None


def has_cycle(n, arcs):
    """Depth-first cycle test on (tail, head) pairs."""
    adj = [[] for _ in range(n)]
    for t, h in arcs:
        adj[t].append(h)
    colour = [0] * n

    def visit(v):
        colour[v] = 1
        for u in adj[v]:
            if colour[u] == 1 or (colour[u] == 0 and visit(u)):
                return True
        colour[v] = 2
        return False

    return any(colour[v] == 0 and visit(v) for v in range(n))


@st.composite
def digraphs(draw, max_n=6, multi=True, weighted=False, min_n=0):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Digraph(n, [])
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    pairs = draw(st.lists(pair, max_size=3 * n, unique=not multi))
    if weighted:
        ws = draw(st.lists(st.integers(0, 3), min_size=len(pairs), max_size=len(pairs)))
        return Digraph(n, [(t, h, w) for (t, h), w in zip(pairs, ws)])
    return Digraph(n, pairs)


def bound_lists(n, values=(0, 1, 2, INF)):
    return st.lists(st.sampled_from(values), min_size=n, max_size=n)


def seeded(seed):
    return random.Random(seed)
