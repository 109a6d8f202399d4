"""Orders whose left-going arcs form a prescribed family, and the arc partitions they induce."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from itertools import combinations

from . import config
from .bounded import solve_upper
from .digraph import ArcFamilyKind, Digraph, classify_arc_set, in_degree_from, left_arcs
from .errors import CapExceeded, FamilyViolation, IndexOutOfRange, SpecViolation
from .results import ArcPartition, CutSet, DegreeDeficit, Feasible, Infeasible, SolveResult, StuckSet
from .simultaneous import solve_exact


def _vertex_set(D: Digraph, vs: Iterable[int], name: str) -> frozenset[int]:
    out = frozenset(vs)
    for v in out:
        if not 0 <= v < D.n:
            raise IndexOutOfRange(f"{name} contains {v}, outside [0, {D.n})")
    return out


def order_in_branching(D: Digraph, roots: Iterable[int] = ()) -> SolveResult:
    """Order whose left-going arcs form an in-branching with every vertex of ``roots`` a root.

    This is the upper-bounded problem with ``g = 0`` on ``roots`` and ``g = 1``
    elsewhere, counting arcs without weights. Infeasible answers carry the
    induced set in which roots have outdegree at least one and all other
    vertices at least two.
    """
    X = _vertex_set(D, roots, "roots")
    g = [0 if v in X else 1 for v in range(D.n)]
    res = solve_upper(D, g, [1] * D.m)
    if not res.feasible:
        return res
    part = partition_from_order(D, res.order, ArcFamilyKind.IN_BRANCHING)
    return Feasible(res.order, D, partition=part, extras={"roots": sorted(X)})


def _violation(D: Digraph, left: list[int], kind: ArcFamilyKind) -> tuple[int | None, int | None, str]:
    n = D.n
    out = [[] for _ in range(n)]  # type: list[list[int]]
    inc = [[] for _ in range(n)]  # type: list[list[int]]
    for i in left:
        a = D.arcs[i]
        out[a.tail].append(i)
        inc[a.head].append(i)
    if kind in (ArcFamilyKind.IN_BRANCHING, ArcFamilyKind.IN_ARBORESCENCE):
        for v in range(n):
            if len(out[v]) > 1:
                return v, out[v][1], f"vertex {v} has {len(out[v])} left-going arcs"
        if kind is ArcFamilyKind.IN_ARBORESCENCE:
            roots = [v for v in range(n) if not out[v]]
            return roots[1] if len(roots) > 1 else None, None, f"{len(roots)} roots, expected exactly one"
    if kind in (ArcFamilyKind.MATCHING, ArcFamilyKind.PERFECT_MATCHING):
        for v in range(n):
            touching = sorted(out[v] + inc[v])
            if len(touching) > 1:
                return v, touching[1], f"vertex {v} meets {len(touching)} left-going arcs"
            if kind is ArcFamilyKind.PERFECT_MATCHING and not touching:
                return v, None, f"vertex {v} is not covered"
    if kind in (ArcFamilyKind.DISJOINT_DIPATHS, ArcFamilyKind.DIPATH, ArcFamilyKind.HAMILTONIAN_DIPATH):
        for v in range(n):
            if len(out[v]) > 1:
                return v, out[v][1], f"vertex {v} has outdegree {len(out[v])} among left-going arcs"
            if len(inc[v]) > 1:
                return v, inc[v][1], f"vertex {v} has indegree {len(inc[v])} among left-going arcs"
        starts = [v for v in range(n) if out[v] and not inc[v]]
        if len(starts) > 1:
            return starts[1], None, f"left-going arcs form {len(starts)} dipaths"
        if kind is ArcFamilyKind.HAMILTONIAN_DIPATH:
            return None, None, f"left-going dipath has {len(left)} arcs, expected {max(n - 1, 0)}"
    return None, None, f"left-going arcs are not a {kind.value}"


def partition_from_order(D: Digraph, order: Sequence[int], kind: ArcFamilyKind | str) -> ArcPartition:
    """Split the arcs into left-going (family side) and right-going (acyclic side).

    Raises :class:`FamilyViolation` naming an offending vertex or arc when the
    left-going arcs are not of the requested kind.
    """
    kind = ArcFamilyKind.parse(kind)
    left = left_arcs(D, order)
    if not classify_arc_set(D, left, kind):
        v, a, msg = _violation(D, left, kind)
        raise FamilyViolation(msg, vertex=v, arc=a)
    return ArcPartition.from_family(D, left, kind)


def _dipath_spec(D: Digraph, S: Iterable[int], T: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    Sf = _vertex_set(D, S, "S")
    Tf = _vertex_set(D, T, "T")
    if Sf & Tf:
        raise SpecViolation(f"S and T overlap in {sorted(Sf & Tf)}")
    if len(Sf) != len(Tf):
        raise SpecViolation(f"|S| = {len(Sf)} differs from |T| = {len(Tf)}")
    return Sf, Tf


def is_st_dipath_system(D: Digraph, arc_ids: Iterable[int], S: Iterable[int], T: Iterable[int]) -> bool:
    """Whether the arcs are exactly ``|S|`` vertex-disjoint dipaths, each from S to T."""
    Sf, Tf = frozenset(S), frozenset(T)
    ids = list(arc_ids)
    if not classify_arc_set(D, ids, ArcFamilyKind.DISJOINT_DIPATHS):
        return False
    out = [0] * D.n
    inc = [0] * D.n
    for i in ids:
        out[D.arcs[i].tail] += 1
        inc[D.arcs[i].head] += 1
    for v in range(D.n):
        if v in Sf:
            if (out[v], inc[v]) != (1, 0):
                return False
        elif v in Tf:
            if (out[v], inc[v]) != (0, 1):
                return False
        elif out[v] != inc[v]:
            return False
    return True


def separates(D: Digraph, C: Iterable[int], S: Iterable[int], T: Iterable[int]) -> bool:
    """Whether deleting the vertices of ``C`` leaves no dipath from S to T."""
    cut = set(C)
    Tf = set(T) - cut
    seen = set(v for v in S if v not in cut)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        if v in Tf:
            return False
        for i in D.out_arcs[v]:
            h = D.arcs[i].head
            if h not in cut and h not in seen:
                seen.add(h)
                queue.append(h)
    return True


def certificate_conditions(D: Digraph, Vp: Iterable[int], S: Iterable[int], T: Iterable[int]) -> list[bool]:
    """The four conditions that make ``Vp`` rule out k disjoint S-T dipaths going left.

    1. each ``s`` in ``Vp & S`` has at least two arcs into ``Vp - s``;
    2. each ``t`` in ``Vp & T`` entered from outside ``Vp`` has an arc into ``Vp - t``;
    3. each other ``v`` in ``Vp`` has an arc into ``Vp - v``;
    4. each such ``v`` entered from outside ``Vp`` has at least two arcs into ``Vp - v``.
    """
    V1 = frozenset(Vp)
    Sf, Tf = frozenset(S), frozenset(T)
    outside = frozenset(range(D.n)) - V1
    inner = {v: sum(1 for i in D.out_arcs[v] if D.arcs[i].head in V1) for v in V1}
    entered = {v: in_degree_from(D, v, outside) >= 1 for v in V1}
    c1 = all(inner[s] >= 2 for s in V1 & Sf)
    c2 = all(inner[t] >= 1 for t in V1 & Tf if entered[t])
    rest = V1 - Sf - Tf
    c3 = all(inner[v] >= 1 for v in rest)
    c4 = all(inner[v] >= 2 for v in rest if entered[v])
    return [c1, c2, c3, c4]


def order_k_disjoint_st_dipaths(D: Digraph, S: Iterable[int], T: Iterable[int]) -> SolveResult:
    """Order whose left-going arcs are ``k = |S| = |T|`` disjoint dipaths from S to T.

    Vertices are fixed right to left. ``X`` holds unfixed vertices that must
    still leave with exactly one left arc (members of S, or non-T vertices
    already entered from the right) and ``Y`` the T-vertices already entered.
    ``X | Y`` meets every S-T dipath throughout, so when it shrinks below
    ``k`` it is returned as a :class:`CutSet`. When nothing can be fixed the
    unfixed set is returned as a validated :class:`StuckSet`.
    """
    Sf, Tf = _dipath_spec(D, S, T)
    n, k = D.n, len(Sf)
    arcs = D.arcs
    out_rem = list(D.outdegree)
    alive = [True] * n
    X = set(Sf)
    Y: set[int] = set()
    order = [0] * n

    def fix(v: int) -> None:
        alive[v] = False
        for i in D.in_arcs[v]:
            t = arcs[i].tail
            if alive[t]:
                out_rem[t] -= 1

    for pos in range(n - 1, -1, -1):
        v = min((x for x in X if out_rem[x] <= 1), default=None)
        if v is not None:
            order[pos] = v
            fix(v)
            X.discard(v)
            if out_rem[v] == 1:
                u = next(arcs[i].head for i in D.out_arcs[v] if alive[arcs[i].head])
                if u in Tf:
                    Y.add(u)
                else:
                    X.add(u)
            if len(X | Y) <= k - 1:
                return Infeasible(CutSet(tuple(sorted(X | Y)), k), "fewer than k vertices cover all S-T dipaths")
            continue
        blocked = (X | Tf) - Y
        v = next((u for u in range(n) if alive[u] and u not in blocked and out_rem[u] == 0), None)
        if v is None:
            stuck = tuple(u for u in range(n) if alive[u])
            return Infeasible(StuckSet(stuck, validated=True), "no vertex can be fixed")
        order[pos] = v
        fix(v)
    result = tuple(order)
    left = left_arcs(D, result)
    if not is_st_dipath_system(D, left, Sf, Tf):
        raise AssertionError("left-going arcs do not form the requested dipath system")
    part = ArcPartition.from_family(D, left, ArcFamilyKind.DISJOINT_DIPATHS)
    return Feasible(result, D, partition=part, extras={"S": sorted(Sf), "T": sorted(Tf)})


def _hamiltonian_st(D: Digraph, s: int, t: int) -> SolveResult:
    n = D.n
    md = [1] * n
    mr = [1] * n
    md[t] = 0
    mr[s] = 0
    res = solve_exact(D, md, mr)
    if not res.feasible:
        return res
    left = res.profile.left_arcs
    if not classify_arc_set(D, left, ArcFamilyKind.HAMILTONIAN_DIPATH):
        raise AssertionError("exact degrees did not produce a Hamiltonian dipath")
    part = ArcPartition.from_family(D, left, ArcFamilyKind.HAMILTONIAN_DIPATH)
    return Feasible(res.order, D, partition=part, extras={"s": s, "t": t})


def order_hamiltonian_dipath(D: Digraph, endpoints: tuple[int, int] | None = None) -> SolveResult:
    """Order whose left-going arcs form a Hamiltonian dipath.

    With ``endpoints = (s, t)`` the dipath runs from ``s`` (placed last) to
    ``t`` (placed first); otherwise all ordered pairs are tried in
    lexicographic order.
    """
    n = D.n
    if endpoints is not None:
        s, t = endpoints
        if not (0 <= s < n and 0 <= t < n):
            raise IndexOutOfRange(f"endpoints ({s}, {t}) outside [0, {n})")
        if s == t:
            raise SpecViolation("s and t must differ")
        return _hamiltonian_st(D, s, t)
    if n <= 1:
        part = ArcPartition.from_family(D, (), ArcFamilyKind.HAMILTONIAN_DIPATH)
        return Feasible(tuple(range(n)), D, partition=part)
    for s in range(n):
        for t in range(n):
            if s != t:
                res = _hamiltonian_st(D, s, t)
                if res.feasible:
                    return res
    return Infeasible(None, "no endpoint pair admits a Hamiltonian dipath of left-going arcs")


def order_disjoint_dipaths_free_endpoints(D: Digraph, k: int, *, cap: int | None = None) -> SolveResult:
    """Order whose left-going arcs form exactly ``k`` disjoint dipaths, each with at least one arc.

    Every choice of start set S and end set T of size ``k`` is handed to
    :func:`order_k_disjoint_st_dipaths`, in lexicographic order of ``(S, T)``.
    ``k = 0`` asks for an order with no left-going arcs at all.
    """
    limit = config.DEFAULT_DIPATH_K_CAP if cap is None else cap
    if k > limit:
        raise CapExceeded("dipath count k", k, limit)
    if k < 0:
        raise SpecViolation("k must be non-negative")
    n = D.n
    if n < 2 * k:
        return Infeasible(None, f"{k} dipaths with an arc each need at least {2 * k} vertices")
    vertices = range(n)
    for S in combinations(vertices, k):
        others = [v for v in vertices if v not in S]
        for T in combinations(others, k):
            res = order_k_disjoint_st_dipaths(D, S, T)
            if res.feasible:
                return res
    return Infeasible(None, f"no choice of endpoints yields {k} disjoint dipaths")


def _in_arb_out_arb_rooted(D: Digraph, r: int) -> SolveResult:
    n = D.n
    rho = D.indegree
    short = tuple(v for v in range(n) if v != r and rho[v] == 0)
    if short:
        return Infeasible(DegreeDeficit(short), "some non-root vertex has no entering arc")
    md = [1] * n
    md[r] = 0
    mr = [rho[v] - 1 for v in range(n)]
    mr[r] = rho[r]
    res = solve_exact(D, md, mr)
    if not res.feasible:
        return res
    left = set(res.profile.left_arcs)
    right = [i for i in range(D.m) if i not in left]
    rev = D.reverse()
    ok_in = classify_arc_set(D, left, ArcFamilyKind.IN_ARBORESCENCE) and res.profile.delta_left[r] == 0
    ok_out = classify_arc_set(rev, right, ArcFamilyKind.IN_ARBORESCENCE) and res.profile.rho_left[r] == 0
    if not (ok_in and ok_out):
        raise AssertionError("exact degrees did not produce an in/out arborescence pair")
    part = ArcPartition.from_family(D, left, ArcFamilyKind.IN_ARBORESCENCE)
    return Feasible(res.order, D, partition=part, extras={"root": r})


def order_in_arb_out_arb(D: Digraph, root: int | None = None) -> SolveResult:
    """Order whose left arcs form an in-arborescence and right arcs an out-arborescence, both rooted at ``root``.

    Without a root every vertex is tried in increasing order.
    """
    if root is not None:
        if not 0 <= root < D.n:
            raise IndexOutOfRange(f"root {root} outside [0, {D.n})")
        return _in_arb_out_arb_rooted(D, root)
    for r in range(D.n):
        res = _in_arb_out_arb_rooted(D, r)
        if res.feasible:
            return res
    return Infeasible(None, "no root admits an in-arborescence/out-arborescence order")
