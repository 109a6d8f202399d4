"""Arc and vertex splitting constructions and the distance gadgets."""

from __future__ import annotations

from ..digraph import Digraph
from ..errors import ShapeViolation, SpecViolation


def gadget_split_arcs(Dp: Digraph) -> Digraph:
    """Subdivide every arc ``a = u -> v`` with a new vertex ``n + a``."""
    n = Dp.n
    arcs = []
    for i, a in enumerate(Dp.arcs):
        arcs += [(a.tail, n + i), (n + i, a.head)]
    return Digraph(n + Dp.m, arcs)


def gadget_matching_to_dipaths(D: Digraph) -> Digraph:
    """Add a copy ``n + v`` of every vertex joined to ``v`` by a 2-cycle."""
    n = D.n
    arcs = [(a.tail, a.head) for a in D.arcs]
    for v in range(n):
        arcs += [(v, n + v), (n + v, v)]
    return Digraph(2 * n, arcs)


def gadget_hampath_split(Dp: Digraph) -> Digraph:
    """Vertex ``v`` becomes ``v`` (entry) and ``n + v`` (exit) on a 2-cycle; arc ``u -> v`` becomes ``n + u -> v``."""
    n = Dp.n
    arcs = []
    for v in range(n):
        arcs += [(v, n + v), (n + v, v)]
    arcs += [(n + a.tail, a.head) for a in Dp.arcs]
    return Digraph(2 * n, arcs)


def gadget_1distance(G: Digraph) -> Digraph:
    """Symmetric complement of the symmetric digraph ``G``.

    With ``g = 0`` and ``d = 1`` an order is feasible iff consecutive vertices
    are adjacent in ``G``, i.e. iff it traces a Hamiltonian path of ``G``.
    """
    pairs = {(a.tail, a.head) for a in G.arcs}
    for t, h in pairs:
        if (h, t) not in pairs:
            raise SpecViolation(f"arc {t}->{h} has no reverse; the graph must be symmetric")
    arcs = [(u, v) for u in range(G.n) for v in range(G.n) if u != v and (u, v) not in pairs]
    return Digraph(G.n, arcs)


def gadget_distance_lift(Dp: Digraph, d: int, l: int) -> Digraph:
    """Append ``d - 1`` complete symmetric digraphs on ``l + 1`` vertices to a ``2l``-vertex digraph.

    The result has ``(d + 1)(l + 1) - 2`` vertices, and its ``d``-distance
    problem with ``g = 0`` is feasible iff the 1-distance problem on ``Dp`` is.
    """
    if d < 1 or l < 1:
        raise ShapeViolation("d and l must be positive")
    if Dp.n != 2 * l:
        raise ShapeViolation(f"digraph has {Dp.n} vertices, expected 2l = {2 * l}")
    arcs = [(a.tail, a.head) for a in Dp.arcs]
    base = Dp.n
    for _ in range(d - 1):
        block = range(base, base + l + 1)
        arcs += [(u, v) for u in block for v in block if u != v]
        base += l + 1
    return Digraph(base, arcs)
