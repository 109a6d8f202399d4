"""Not-all-equal gadgets for matching and perfect-matching partitions."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from ..digraph import ArcFamilyKind, Digraph, classify_arc_set, is_acyclic, topological_order
from ..errors import AssignmentRejected
from .base import CnfFormula, GadgetBuilder, GadgetInstance, require_three_literals


def _build(F: CnfFormula, perfect: bool) -> GadgetInstance:
    require_three_literals(F)
    b = GadgetBuilder()
    for j in range(1, len(F.clauses) + 1):
        c = [f"c_{j}_{k}" for k in (1, 2, 3)]
        cb = [f"cb_{j}_{k}" for k in (1, 2, 3)]
        u = [f"u_{j}_{k}" for k in (1, 2, 3)]
        b.path(c[0], u[0], c[1], u[1], c[2], u[2], c[0])
        b.path(cb[0], u[2], cb[2], u[1], cb[1], u[0], cb[0])
    for i in range(1, F.num_vars + 1):
        v = [f"v_{i}_{l}" for l in range(1, 6)]
        b.path(v[0], v[1], v[0])
        b.path(v[1], v[2], v[3], v[4], v[1])
        if perfect:
            b.path(v[2], f"s_{i}", v[4])
        for j, k, positive in F.occurrences(i):
            c, cb = f"c_{j}_{k}", f"cb_{j}_{k}"
            first, second = (cb, c) if positive else (c, cb)
            y, z = f"y_{j}_{k}", f"z_{j}_{k}"
            b.path(v[4], first, z, v[3], y, second, v[2])
            if perfect:
                b.path(y, f"t_{j}_{k}", z)
    return b.build(source="nae-perfect" if perfect else "nae-matching", num_vars=F.num_vars)


def gadget_nae3sat_matching(F: CnfFormula) -> GadgetInstance:
    """Digraph whose arcs split into a matching and an acyclic part iff ``F`` is NAE-satisfiable."""
    return _build(F, perfect=False)


def gadget_nae3sat_perfect_matching(F: CnfFormula) -> GadgetInstance:
    """As :func:`gadget_nae3sat_matching`, extended so the matching can be made perfect."""
    return _build(F, perfect=True)


def _witness_labels(F: CnfFormula, a: tuple[bool, ...], perfect: bool) -> list[tuple[str, str]]:
    arcs = []
    for j, clause in enumerate(F.clauses, start=1):
        for k, lit in enumerate(clause, start=1):
            if F.literal_value(lit, a):
                arcs.append((f"c_{j}_{k}", f"u_{j}_{k}"))
            else:
                arcs.append((f"u_{j}_{k}", f"cb_{j}_{k}"))
    for i in range(1, F.num_vars + 1):
        v = [f"v_{i}_{l}" for l in range(1, 6)]
        arcs.append((v[0], v[1]))
        true = a[i - 1]
        arcs.append((v[2], v[3]) if true else (v[3], v[4]))
        if perfect:
            arcs.append((f"s_{i}", v[4]) if true else (v[2], f"s_{i}"))
        for j, k, positive in F.occurrences(i):
            c, cb = f"c_{j}_{k}", f"cb_{j}_{k}"
            y, z, t = f"y_{j}_{k}", f"z_{j}_{k}", f"t_{j}_{k}"
            if true:
                arcs.append((cb if positive else c, z))
                if perfect:
                    arcs.append((y, t))
            else:
                arcs.append((y, c if positive else cb))
                if perfect:
                    arcs.append((t, z))
    return arcs


def _witness(F: CnfFormula, assignment: Sequence[bool], perfect: bool) -> list[int]:
    a = F.check_assignment(assignment)
    if not F.not_all_equal(a):
        raise AssignmentRejected("assignment leaves some clause with all literals equal")
    inst = _build(F, perfect)
    M = sorted(inst.arc_ids(t, h)[0] for t, h in _witness_labels(F, a, perfect))
    D = inst.digraph
    kind = ArcFamilyKind.PERFECT_MATCHING if perfect else ArcFamilyKind.MATCHING
    if not classify_arc_set(D, M, kind):
        raise AssertionError(f"witness is not a {kind.value}")
    if not is_acyclic(D, complement_arcs(D, M)):
        raise AssertionError("witness leaves a directed cycle")
    if perfect and not is_minimal_feedback_arc_set(D, M):
        raise AssertionError("witness is not an inclusion-wise minimal feedback arc set")
    return M


def witness_matching_nae(F: CnfFormula, assignment: Sequence[bool]) -> list[int]:
    """Arc ids of a matching meeting every directed cycle, for a NAE-satisfying assignment."""
    return _witness(F, assignment, perfect=False)


def witness_perfect_matching_nae(F: CnfFormula, assignment: Sequence[bool]) -> list[int]:
    """Arc ids of a perfect matching meeting every directed cycle, for a NAE-satisfying assignment."""
    return _witness(F, assignment, perfect=True)


def assignment_from_matching_nae(F: CnfFormula, family_arcs: Iterable[int], perfect: bool = False) -> tuple[bool, ...]:
    """``x_i`` is true when the arc ``v_i_3 -> v_i_4`` belongs to the matching."""
    inst = _build(F, perfect)
    M = set(family_arcs)
    return tuple(
        any(i in M for i in inst.arc_ids(f"v_{x}_3", f"v_{x}_4")) for x in range(1, F.num_vars + 1)
    )


def complement_arcs(D: Digraph, ids: Iterable[int]) -> list[int]:
    s = set(ids)
    return [i for i in range(D.m) if i not in s]


def _reaches(D: Digraph, active: set[int], src: int, dst: int) -> bool:
    seen = {src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            return True
        for i in D.out_arcs[v]:
            h = D.arcs[i].head
            if i in active and h not in seen:
                seen.add(h)
                queue.append(h)
    return False


def is_minimal_feedback_arc_set(D: Digraph, M: Iterable[int]) -> bool:
    """``D - M`` is acyclic and putting back any single arc of ``M`` closes a cycle."""
    Ms = set(M)
    rest = set(complement_arcs(D, Ms))
    if not is_acyclic(D, rest):
        return False
    return all(_reaches(D, rest, D.arcs[i].head, D.arcs[i].tail) for i in Ms)


def order_from_feedback_set(D: Digraph, M: Iterable[int]) -> tuple[int, ...] | None:
    """Topological order of ``D`` with the arcs of ``M`` reversed, or ``None`` if it has a cycle.

    In such an order the left-going arcs of ``D`` are exactly ``M``.
    """
    Ms = set(M)
    arcs = [(a.head, a.tail) if i in Ms else (a.tail, a.head) for i, a in enumerate(D.arcs)]
    R = Digraph(D.n, arcs)
    if not is_acyclic(R):
        return None
    return topological_order(R)
