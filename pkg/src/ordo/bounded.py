"""Degree-bounded vertex orderings: one-sided greedy solvers and their relatives."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from itertools import permutations

from . import config
from .digraph import (
    NEG_INF,
    POS_INF,
    Digraph,
    Number,
    bound_vector,
    parse_weight,
    tidy,
)
from .errors import CapExceeded, IndexOutOfRange, LengthMismatch, PrecedenceCycle, SpecViolation
from .results import Feasible, Infeasible, InducedSet, SolveResult, StuckSet

Chooser = Callable[[list[int]], int]


def arc_weights(D: Digraph, weights: Sequence[object] | None) -> tuple[Number, ...]:
    """The digraph's own weights, or a validated non-negative override."""
    if weights is None:
        return D.weights
    w = tuple(parse_weight(x) for x in weights)
    if len(w) != D.m:
        raise LengthMismatch(f"{len(w)} weights for {D.m} arcs")
    return w


class _RemainingLoad:
    """``delta_w(v, V' - v)`` for every unfixed ``v`` under vertex deletions.

    Infinite weights are counted separately so that removing an infinite arc
    never computes ``inf - inf``.
    """

    __slots__ = ("fin", "infc", "D", "w", "has_inf")

    def __init__(self, D: Digraph, w: Sequence[Number]) -> None:
        n = D.n
        self.D = D
        self.w = w
        self.fin: list[Number] = [0] * n
        self.infc = [0] * n
        self.has_inf = any(x == POS_INF for x in w)
        for i, a in enumerate(D.arcs):
            if w[i] == POS_INF:
                self.infc[a.tail] += 1
            else:
                self.fin[a.tail] += w[i]

    def value(self, v: int) -> Number:
        return POS_INF if self.infc[v] else self.fin[v]

    def remove(self, u: int, alive: list[bool]) -> None:
        arcs, w = self.D.arcs, self.w
        for i in self.D.in_arcs[u]:
            t = arcs[i].tail
            if alive[t]:
                if w[i] == POS_INF:
                    self.infc[t] -= 1
                else:
                    self.fin[t] -= w[i]

    def restore(self, u: int, alive: list[bool]) -> None:
        arcs, w = self.D.arcs, self.w
        for i in self.D.in_arcs[u]:
            t = arcs[i].tail
            if alive[t]:
                if w[i] == POS_INF:
                    self.infc[t] += 1
                else:
                    self.fin[t] += w[i]


def solve_upper(
    D: Digraph,
    g: object = None,
    weights: Sequence[object] | None = None,
    *,
    choose: Chooser | None = None,
) -> SolveResult:
    """Find an order with ``delta_left_w(v) <= g(v)`` for all ``v``.

    Vertices are fixed from right to left; a vertex qualifies for the rightmost
    free slot when its weight into the other unfixed vertices is within its
    bound. The lowest qualified id is taken unless ``choose`` is given. On
    failure the unfixed set is returned as an upper-side :class:`InducedSet`.
    """
    n = D.n
    gv = bound_vector(g, n, POS_INF)
    w = arc_weights(D, weights)
    loads = _RemainingLoad(D, w)
    fin, infc = loads.fin, loads.infc
    alive = [True] * n
    order = [0] * n
    for pos in range(n - 1, -1, -1):
        cand = [v for v in range(n) if alive[v] and (fin[v] <= gv[v] if not infc[v] else gv[v] == POS_INF)]
        if not cand:
            return Infeasible(InducedSet(tuple(v for v in range(n) if alive[v]), "upper"), "no vertex fits the bound")
        v = cand[0] if choose is None else choose(cand)
        order[pos] = v
        alive[v] = False
        loads.remove(v, alive)
    return Feasible(tuple(order), D, None if weights is None else w)


def solve_lower(
    D: Digraph,
    f: object = None,
    weights: Sequence[object] | None = None,
    *,
    choose: Chooser | None = None,
) -> SolveResult:
    """Find an order with ``delta_left_w(v) >= f(v)`` for all ``v``.

    Mirror of :func:`solve_upper`: vertices are fixed from left to right and
    ``v`` qualifies when its weight into the already fixed prefix reaches
    ``f(v)``. Failure yields a lower-side :class:`InducedSet`.
    """
    n = D.n
    fv = bound_vector(f, n, NEG_INF)
    w = arc_weights(D, weights)
    arcs = D.arcs
    load: list[Number] = [0] * n
    alive = [True] * n
    order = [0] * n
    for pos in range(n):
        cand = [v for v in range(n) if alive[v] and load[v] >= fv[v]]
        if not cand:
            return Infeasible(InducedSet(tuple(v for v in range(n) if alive[v]), "lower"), "no vertex reaches its bound")
        v = cand[0] if choose is None else choose(cand)
        order[pos] = v
        alive[v] = False
        for i in D.in_arcs[v]:
            t = arcs[i].tail
            if alive[t]:
                load[t] += w[i]
    return Feasible(tuple(order), D, None if weights is None else w)


def solve_minmax(D: Digraph, weights: Sequence[object] | None = None) -> tuple[tuple[int, ...], Number]:
    """An order minimising the largest weighted left-outdegree, and that value.

    Right-to-left fixing that always takes the unfixed vertex of least weight
    into the remaining set (lowest id on ties).
    """
    n = D.n
    w = arc_weights(D, weights)
    loads = _RemainingLoad(D, w)
    alive = [True] * n
    order = [0] * n
    best: Number = 0
    for pos in range(n - 1, -1, -1):
        v = min((u for u in range(n) if alive[u]), key=lambda u: (loads.value(u), u))
        best = max(best, loads.value(v))
        order[pos] = v
        alive[v] = False
        loads.remove(v, alive)
    return tuple(order), tidy(best)


def _precedence_successors(n: int, prec: Iterable[Sequence[int]]) -> list[set[int]]:
    succ: list[set[int]] = [set() for _ in range(n)]
    for pair in prec:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"precedence pair ({u}, {v}) names a vertex outside [0, {n})")
        if u == v:
            raise PrecedenceCycle([u, u])
        succ[u].add(v)
    # cycle check by DFS so the error can name the cycle
    colour = [0] * n
    for root in range(n):
        if colour[root]:
            continue
        stack = [(root, iter(sorted(succ[root])))]
        path = [root]
        colour[root] = 1
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[v] = 2
                stack.pop()
                path.pop()
            elif colour[nxt] == 1:
                cyc = path[path.index(nxt):] + [nxt]
                raise PrecedenceCycle(cyc)
            elif colour[nxt] == 0:
                colour[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(sorted(succ[nxt]))))
    return succ


def solve_upper_with_precedence(
    D: Digraph,
    g: object = None,
    prec: Iterable[Sequence[int]] = (),
    weights: Sequence[object] | None = None,
) -> SolveResult:
    """Upper-bounded ordering that also places ``u`` before ``v`` for each ``(u, v)`` in ``prec``.

    A vertex may take the rightmost free slot only when none of its required
    successors is still unfixed. The unfixed set at a dead end is a validated
    :class:`StuckSet`: each member either exceeds its bound inside the set or
    has a required successor inside it.
    """
    n = D.n
    succ = _precedence_successors(n, prec)
    pred: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for v in succ[u]:
            pred[v].append(u)
    waiting = [len(s) for s in succ]
    gv = bound_vector(g, n, POS_INF)
    w = arc_weights(D, weights)
    loads = _RemainingLoad(D, w)
    fin, infc = loads.fin, loads.infc
    alive = [True] * n
    order = [0] * n
    for pos in range(n - 1, -1, -1):
        cand = [
            v
            for v in range(n)
            if alive[v] and waiting[v] == 0 and (fin[v] <= gv[v] if not infc[v] else gv[v] == POS_INF)
        ]
        if not cand:
            return Infeasible(StuckSet(tuple(v for v in range(n) if alive[v]), validated=True), "no vertex can be fixed")
        v = cand[0]
        order[pos] = v
        alive[v] = False
        loads.remove(v, alive)
        for u in pred[v]:
            waiting[u] -= 1
    return Feasible(tuple(order), D, None if weights is None else w)


def _one_sided(spec: object, n: int) -> list[Number | None]:
    if spec is None:
        return [None] * n
    if isinstance(spec, dict):
        out: list[Number | None] = [None] * n
        for k, val in spec.items():
            v = int(k)
            if not 0 <= v < n:
                raise IndexOutOfRange(f"bound given for vertex {v} outside [0, {n})")
            out[v] = None if val is None else bound_vector([val], 1, 0)[0]
        return out
    vals = list(spec)  # type: ignore[arg-type]
    if len(vals) != n:
        raise LengthMismatch(f"{len(vals)} bounds for {n} vertices")
    return [None if x is None else bound_vector([x], 1, 0)[0] for x in vals]


def solve_mixed_per_vertex(
    D: Digraph,
    f: object = None,
    g: object = None,
    weights: Sequence[object] | None = None,
    *,
    cap: int | None = None,
) -> SolveResult:
    """Orderings where each vertex carries exactly one bound, lower or upper.

    ``f`` and ``g`` are mappings (or sequences with ``None`` holes); every
    vertex must appear in exactly one of them. Uniform instances go to the
    one-sided greedies. Mixed instances are decided by exhaustive search over
    right-to-left fixings with memoised dead ends, which is exponential in the
    worst case and capped at ``cap`` vertices. A lower-bounded vertex whose
    weight into the unfixed set already falls short can never be placed, which
    prunes most branches. Infeasible answers carry the first dead-end set as an
    unvalidated :class:`StuckSet`.
    """
    n = D.n
    fv = _one_sided(f, n)
    gv = _one_sided(g, n)
    for v in range(n):
        if (fv[v] is None) == (gv[v] is None):
            which = "both" if fv[v] is not None else "neither"
            raise SpecViolation(f"vertex {v} has {which} of f and g; exactly one is required")
    if all(x is None for x in fv):
        return solve_upper(D, gv, weights)
    if all(x is None for x in gv):
        return solve_lower(D, fv, weights)
    limit = cap if cap is not None else config.DEFAULT_MIXED_CAP
    if n > limit:
        raise CapExceeded("mixed-bound search vertices", n, limit)
    w = arc_weights(D, weights)
    loads = _RemainingLoad(D, w)
    alive = [True] * n
    is_f = [x is not None for x in fv]
    failed: set[int] = set()
    picked: list[int] = []
    first_dead: list[int] = []

    def qualifies(v: int) -> bool:
        val = loads.value(v)
        return val >= fv[v] if is_f[v] else val <= gv[v]  # type: ignore[operator]

    def search(mask: int) -> bool:
        if mask == 0:
            return True
        if mask in failed:
            return False
        live = [v for v in range(n) if alive[v]]
        if not any(is_f[v] and loads.value(v) < fv[v] for v in live):  # type: ignore[operator]
            for v in live:
                if not qualifies(v):
                    continue
                alive[v] = False
                loads.remove(v, alive)
                picked.append(v)
                if search(mask & ~(1 << v)):
                    return True
                picked.pop()
                loads.restore(v, alive)
                alive[v] = True
        failed.add(mask)
        if not first_dead:
            first_dead.extend(live)
        return False

    if search((1 << n) - 1):
        order = tuple(reversed(picked))
        return Feasible(order, D, None if weights is None else w)
    return Infeasible(StuckSet(tuple(first_dead), validated=False), "exhaustive search found no order")


def _pair_weights(D: Digraph) -> list[list[Number]]:
    W: list[list[Number]] = [[0] * D.n for _ in range(D.n)]
    for a in D.arcs:
        W[a.tail][a.head] += a.weight
    return W


def solve_d_distance_large(D: Digraph, g: object, k: int, *, cap: int | None = None) -> SolveResult:
    """Upper bounds that only count arcs into the ``d = n - k`` nearest predecessors.

    All placements of the first ``k`` and last ``k`` vertices are tried in
    lexicographic order. The window of every middle vertex reaches back past
    the whole prefix, so the middle reduces to an ordinary upper-bounded
    problem with bounds lowered by the weight into the fixed prefix.
    """
    n = D.n
    limit = config.DEFAULT_DDIST_K_CAP if cap is None else cap
    if k > limit:
        raise CapExceeded("d-distance k", k, limit)
    if k < 0 or 2 * k > n:
        raise SpecViolation(f"need 0 <= 2k <= n, got k={k}, n={n}")
    gv = bound_vector(g, n, POS_INF)
    if k == 0:
        return solve_upper(D, gv)
    W = _pair_weights(D)

    def fits(load: Number, bound: Number) -> bool:
        return load <= bound

    for first in permutations(range(n), k):
        if not all(fits(sum((W[first[i]][first[j]] for j in range(i)), 0), gv[first[i]]) for i in range(k)):
            continue
        rest = [v for v in range(n) if v not in first]
        for last in permutations(rest, k):
            last_set = set(last)
            middle = [v for v in rest if v not in last_set]
            ok = True
            for j in range(k):
                v = last[j]
                window = list(first[j:]) + middle + list(last[:j])
                if not fits(sum((W[v][u] for u in window), 0), gv[v]):
                    ok = False
                    break
            if not ok:
                continue
            reduced = []
            for v in middle:
                into_first = sum((W[v][u] for u in first), 0)
                if gv[v] == POS_INF:
                    reduced.append(POS_INF)
                elif into_first == POS_INF:
                    reduced.append(NEG_INF)
                else:
                    reduced.append(gv[v] - into_first)
            sub, back = D.induced(middle)
            res = solve_upper(sub, reduced)
            if res.feasible:
                order = tuple(first) + tuple(back[v] for v in res.order) + tuple(last)
                return Feasible(order, D, extras={"d": n - k, "k": k})
    return Infeasible(None, f"no placement of the first and last {k} vertices extends to a feasible order")


def solve_k_arc_disjoint_in_arbs(D: Digraph, r: int, k: int) -> SolveResult:
    """Order with ``delta_left(r) = 0`` and ``delta_left(v) >= k`` elsewhere.

    Its left-going arcs contain ``k`` arc-disjoint in-arborescences rooted at
    ``r`` with acyclic union: the ``j``-th arborescence takes, for every
    ``v != r``, the ``j``-th lowest-index left-going arc leaving ``v``. These
    are returned under ``extras["arborescences"]``.
    """
    n = D.n
    if not 0 <= r < n:
        raise IndexOutOfRange(f"root {r} outside [0, {n})")
    if k < 1:
        raise SpecViolation("k must be at least 1")
    f = [k] * n
    f[r] = 0
    res = solve_lower(D, f, [1] * D.m)
    if not res.feasible:
        return res
    left_by_tail: list[list[int]] = [[] for _ in range(n)]
    for i in res.profile.left_arcs:
        left_by_tail[D.arcs[i].tail].append(i)
    arbs = [tuple(sorted(left_by_tail[v][j] for v in range(n) if v != r)) for j in range(k)]
    return Feasible(res.order, D, extras={"root": r, "k": k, "arborescences": arbs})


__all__ = [
    "arc_weights",
    "solve_upper",
    "solve_lower",
    "solve_minmax",
    "solve_upper_with_precedence",
    "solve_mixed_per_vertex",
    "solve_d_distance_large",
    "solve_k_arc_disjoint_in_arbs",
]

