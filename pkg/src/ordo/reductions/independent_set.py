"""Independent-set gadgets for one exact bound and for negative weights."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

from ..digraph import NEG_INF, Digraph
from ..errors import KTooLarge, SpecViolation
from .base import GadgetBuilder, GadgetInstance


def symmetric_digraph(n: int, edges: Iterable[Sequence[int]]) -> Digraph:
    """Encode an undirected graph as a digraph with both orientations of every edge."""
    arcs = []
    for u, v in edges:
        arcs += [(u, v), (v, u)]
    return Digraph(n, arcs)


def graph_edges(G: Digraph) -> list[tuple[int, int]]:
    """Distinct undirected edges of a symmetric digraph, as sorted pairs."""
    pairs = {(a.tail, a.head) for a in G.arcs}
    for t, h in pairs:
        if (h, t) not in pairs:
            raise SpecViolation(f"arc {t}->{h} has no reverse; the graph must be symmetric")
    return sorted((u, v) for u, v in pairs if u < v)


def _check_k(G: Digraph, k: int) -> None:
    if k < 0:
        raise SpecViolation("k must be non-negative")
    if k > G.n:
        raise KTooLarge(f"k = {k} exceeds the {G.n} vertices of G")


def _skeleton(G: Digraph, k: int, b: GadgetBuilder, *, simple: bool) -> None:
    edges = graph_edges(G)
    b.vertex("s", *(f"v_{v}" for v in range(G.n)))
    for v in range(G.n):
        b.arc("s", f"v_{v}")
    for j, (u, v) in enumerate(edges):
        b.arc(f"e_{j}", f"v_{u}")
        b.arc(f"e_{j}", f"v_{v}")

    def bundle(tail: str, head: str, times: int, tag: str) -> None:
        if not simple:
            b.arc(tail, head, times)
            return
        for r in range(times):
            p = f"p_{tag}_{r}"
            b.arc(tail, p)
            b.arc(p, head)
            b.g[p] = 0

    if edges:
        # one more copy than k so that e_0 can never sit left of s
        bundle("s", "e_0", max(G.n, k + 1), "s")
        for j in range(len(edges) - 1):
            bundle(f"e_{j}", f"e_{j + 1}", 2, f"e{j}")


def gadget_independent_set(G: Digraph, k: int, simple: bool = False) -> GadgetInstance:
    """Ordering instance with ``f(s) = g(s) = k`` and ``g = 1`` elsewhere.

    A feasible order exists exactly when the symmetric digraph ``G`` has an
    independent set of size ``k``. With ``simple=True`` every parallel arc is
    routed through its own vertex of upper bound 0, which removes all parallel
    arcs without changing feasibility.
    """
    _check_k(G, k)
    b = GadgetBuilder()
    _skeleton(G, k, b, simple=simple)
    b.f["s"] = k
    b.g["s"] = k
    return b.build(default_f=NEG_INF, default_g=1, source="independent-set", k=k, simple=simple)


def gadget_independent_set_negweight(G: Digraph, k: int) -> GadgetInstance:
    """Upper bounds only: ``w(s, v) = -1`` for graph vertices, 1 elsewhere, ``g(s) = -k``.

    The negative weights live in ``GadgetInstance.weights``; the digraph itself
    stays unweighted.
    """
    _check_k(G, k)
    b = GadgetBuilder()
    _skeleton(G, k, b, simple=False)
    b.arcs = [(t, h, -1 if t == "s" and h.startswith("v_") else 1) for t, h, _ in b.arcs]
    b.g["s"] = -k
    return b.build(default_g=1, source="independent-set-negweight", k=k)


def has_independent_set(G: Digraph, k: int) -> bool:
    """Brute force over vertex subsets."""
    adj = {(a.tail, a.head) for a in G.arcs}
    return any(
        all((u, v) not in adj and (v, u) not in adj for u, v in combinations(S, 2))
        for S in combinations(range(G.n), k)
    )
