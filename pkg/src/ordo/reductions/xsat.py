"""Exactly-one-in-three gadget with tight bounds on every vertex."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

from ..digraph import check_order, degree_profile, positions
from ..errors import AssignmentRejected, ShapeViolation
from .base import CnfFormula, GadgetBuilder, GadgetInstance, require_three_literals


def check_3xsat3_shape(F: CnfFormula) -> None:
    n = F.num_vars
    if n == 0:
        raise ShapeViolation("formula has no variables")
    if len(F.clauses) != n:
        raise ShapeViolation(f"{len(F.clauses)} clauses for {n} variables; the counts must agree")
    require_three_literals(F)
    counts = Counter(abs(x) for c in F.clauses for x in c)
    for i in range(1, n + 1):
        if counts[i] != 3:
            raise ShapeViolation(f"variable {i} occurs {counts[i]} times, expected 3")


def _lit(x: int) -> str:
    return f"x_{x}" if x > 0 else f"xbar_{-x}"


def _spine(n: int) -> list[str]:
    return [f"v_{i}" for i in range(1, n + 1)] + [f"c_{j}" for j in range(1, n + 1)] + [f"vp_{i}" for i in range(1, n + 1)]


def gadget_3xsat3(F: CnfFormula) -> GadgetInstance:
    """Ordering instance with ``f = g = 1`` except ``f(s_1) = g(s_1) = 0``.

    Every vertex other than ``s_1`` and ``t_n`` has outdegree 3, so the upper
    bound ``g = outdegree - 2`` is 1 as well. The instance is feasible exactly
    when ``F`` has an assignment with one true literal per clause.
    """
    check_3xsat3_shape(F)
    n = F.num_vars
    b = GadgetBuilder()
    for i in range(1, n + 1):
        for lit in (_lit(i), _lit(-i)):
            b.arc(lit, f"s_{i}")
            b.arc(lit, f"t_{i}", 2)
            b.arc(f"v_{i}", lit)
            b.arc(f"vp_{i}", lit)
    for j, clause in enumerate(F.clauses, start=1):
        for x in clause:
            b.arc(f"c_{j}", _lit(x))
    line = [f"s_{i}" for i in range(1, n + 1)] + _spine(n) + [f"t_{i}" for i in range(1, n + 1)]
    nxt = dict(zip(line, line[1:]))
    for i in range(1, n + 1):
        b.arc(f"v_{i}", nxt[f"v_{i}"])
        b.arc(f"vp_{i}", nxt[f"vp_{i}"])
        if i > 1:
            b.arc(f"s_{i}", f"s_{i - 1}")
        b.arc(f"s_{i}", nxt[f"s_{i}"], 2)
        if i < n:
            b.arc(f"t_{i}", f"t_{i + 1}", 2)
        b.arc(f"t_{i}", f"vp_{n}" if i == 1 else f"t_{i - 1}")
    spine = _spine(n)
    for k in range(1, 3 * n):
        b.arc(f"p_{k}", spine[k - 1])
        b.arc(f"p_{k}", spine[k], 2)
    b.f["s_1"] = 0
    inst = b.build(default_f=1, source="3xsat3", num_vars=n)
    out = inst.digraph.outdegree
    g = tuple(0 if t == "s_1" else 1 if t == f"t_{n}" else out[v] - 2 for v, t in enumerate(inst.tags))
    return GadgetInstance(inst.digraph, inst.tags, inst.f, g, None, inst.meta)


def witness_order_3xsat3(F: CnfFormula, assignment: Sequence[bool]) -> tuple[int, ...]:
    """Feasible order built from an exactly-one-in-three assignment.

    True literal vertices go right after ``s_n`` and false ones right before
    ``t_1``; the order is checked against the bounds before it is returned.
    """
    inst = gadget_3xsat3(F)
    a = F.check_assignment(assignment)
    if not F.exactly_one(a):
        raise AssignmentRejected("assignment does not make exactly one literal true in every clause")
    n = F.num_vars
    true_lits = [_lit(i if a[i - 1] else -i) for i in range(1, n + 1)]
    false_lits = [_lit(-i if a[i - 1] else i) for i in range(1, n + 1)]
    spine = _spine(n)
    middle = [spine[0]]
    for k in range(1, 3 * n):
        middle += [f"p_{k}", spine[k]]
    labels = [f"s_{i}" for i in range(1, n + 1)] + true_lits + middle + false_lits + [f"t_{i}" for i in range(1, n + 1)]
    order = inst.order_of(labels)
    if not satisfies_bounds(inst, order):
        raise AssertionError("constructed order violates the gadget bounds")
    return order


def satisfies_bounds(inst: GadgetInstance, order: Sequence[int]) -> bool:
    prof = degree_profile(inst.digraph, order, inst.weights)
    f = inst.f or (float("-inf"),) * inst.digraph.n
    g = inst.g or (float("inf"),) * inst.digraph.n
    return all(f[v] <= prof.delta_left_w[v] <= g[v] for v in range(inst.digraph.n))


def assignment_from_order_3xsat3(F: CnfFormula, order: Sequence[int]) -> tuple[bool, ...]:
    """``x_i`` is true when its positive literal vertex precedes ``c_1``."""
    inst = gadget_3xsat3(F)
    pos = positions(check_order(inst.digraph.n, order))
    c1 = pos[inst.vertex("c_1")]
    return tuple(pos[inst.vertex(f"x_{i}")] < c1 for i in range(1, F.num_vars + 1))
