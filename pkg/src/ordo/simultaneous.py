"""Orders with simultaneous bounds on left-outdegrees and right-indegrees (unweighted)."""

from __future__ import annotations

from collections.abc import Sequence

from .digraph import NEG_INF, POS_INF, Digraph, bound_vector
from .errors import SpecViolation
from .results import Feasible, Infeasible, SolveResult, StuckSet, SumMismatch


def solve_out_upper_in_lower(D: Digraph, g_delta: object = None, f_rho: object = None) -> SolveResult:
    """Order with ``delta_left(v) <= g_delta(v)`` and ``rho_right(v) >= f_rho(v)``.

    Right-to-left fixing. A vertex fits the rightmost free slot when its arcs
    into the unfixed set respect ``g_delta`` and the arcs it receives from the
    fixed suffix reach ``f_rho``; both quantities are exact for that slot.
    """
    n = D.n
    gd = bound_vector(g_delta, n, POS_INF)
    fr = bound_vector(f_rho, n, NEG_INF)
    arcs = D.arcs
    out_left = list(D.outdegree)
    in_fixed = [0] * n
    alive = [True] * n
    order = [0] * n
    for pos in range(n - 1, -1, -1):
        v = next((u for u in range(n) if alive[u] and out_left[u] <= gd[u] and in_fixed[u] >= fr[u]), None)
        if v is None:
            return Infeasible(StuckSet(tuple(u for u in range(n) if alive[u])), "no vertex satisfies both bounds")
        order[pos] = v
        alive[v] = False
        for i in D.in_arcs[v]:
            t = arcs[i].tail
            if alive[t]:
                out_left[t] -= 1
        for i in D.out_arcs[v]:
            h = arcs[i].head
            if alive[h]:
                in_fixed[h] += 1
    return Feasible(tuple(order), D)


def solve_out_lower_in_upper(D: Digraph, f_delta: object = None, g_rho: object = None) -> SolveResult:
    """Order with ``delta_left(v) >= f_delta(v)`` and ``rho_right(v) <= g_rho(v)``.

    Left-to-right fixing; the first free slot sees the fixed prefix on its left
    and the unfixed rest on its right.
    """
    n = D.n
    fd = bound_vector(f_delta, n, NEG_INF)
    gr = bound_vector(g_rho, n, POS_INF)
    arcs = D.arcs
    out_fixed = [0] * n
    in_left = list(D.indegree)
    alive = [True] * n
    order = [0] * n
    for pos in range(n):
        v = next((u for u in range(n) if alive[u] and out_fixed[u] >= fd[u] and in_left[u] <= gr[u]), None)
        if v is None:
            return Infeasible(StuckSet(tuple(u for u in range(n) if alive[u])), "no vertex satisfies both bounds")
        order[pos] = v
        alive[v] = False
        for i in D.in_arcs[v]:
            t = arcs[i].tail
            if alive[t]:
                out_fixed[t] += 1
        for i in D.out_arcs[v]:
            h = arcs[i].head
            if alive[h]:
                in_left[h] -= 1
    return Feasible(tuple(order), D)


def _exact_vector(spec: object, n: int, name: str) -> list[int]:
    vals = bound_vector(spec, n, 0)
    out = []
    for v, x in enumerate(vals):
        if x in (POS_INF, NEG_INF) or x != int(x) or x < 0:
            raise SpecViolation(f"{name}[{v}] must be a finite non-negative integer, got {x}")
        out.append(int(x))
    return out


def solve_exact(D: Digraph, m_delta: object, m_rho: object) -> SolveResult:
    """Order with ``delta_left == m_delta`` and ``rho_right == m_rho`` exactly.

    Both sides count the left-going arcs, so unequal totals are reported as a
    :class:`SumMismatch`. Otherwise the upper/lower relaxation is solved, and
    equal totals force every inequality of a feasible answer to be tight.
    """
    n = D.n
    md = _exact_vector(m_delta, n, "m_delta")
    mr = _exact_vector(m_rho, n, "m_rho")
    if sum(md) != sum(mr):
        return Infeasible(SumMismatch(sum(md), sum(mr)), "prescribed totals differ")
    res = solve_out_upper_in_lower(D, md, mr)
    if res.feasible:
        prof = res.profile
        if list(prof.delta_left) != md or list(prof.rho_right) != mr:
            raise AssertionError("relaxed solution is not tight; this contradicts the counting argument")
    return res


def simultaneous_ok(
    delta_left: Sequence[int],
    rho_right: Sequence[int],
    f_delta: Sequence[object],
    g_delta: Sequence[object],
    f_rho: Sequence[object],
    g_rho: Sequence[object],
) -> bool:
    return all(
        f_delta[v] <= delta_left[v] <= g_delta[v] and f_rho[v] <= rho_right[v] <= g_rho[v]  # type: ignore[operator]
        for v in range(len(delta_left))
    )
