"""Shared pieces for gadget construction: CNF formulas and labelled digraph builders."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from ..digraph import Digraph, Number
from ..errors import AssignmentRejected, ShapeViolation


@dataclass(frozen=True)
class CnfFormula:
    """Clauses of signed 1-based literals, DIMACS style (``-3`` is the negation of x3)."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple(int(x) for x in c) for c in self.clauses))
        if self.num_vars < 0:
            raise ShapeViolation("negative variable count")
        for j, c in enumerate(self.clauses):
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ShapeViolation(f"clause {j + 1} has invalid literal {lit}")

    def occurrences(self, var: int) -> list[tuple[int, int, bool]]:
        """``(clause, position, positive)`` triples for variable ``var`` (all 1-based)."""
        return [
            (j + 1, k + 1, lit > 0)
            for j, c in enumerate(self.clauses)
            for k, lit in enumerate(c)
            if abs(lit) == var
        ]

    def literal_value(self, lit: int, assignment: Sequence[bool]) -> bool:
        return bool(assignment[abs(lit) - 1]) == (lit > 0)

    def exactly_one(self, assignment: Sequence[bool]) -> bool:
        return all(sum(self.literal_value(x, assignment) for x in c) == 1 for c in self.clauses)

    def not_all_equal(self, assignment: Sequence[bool]) -> bool:
        return all(len({self.literal_value(x, assignment) for x in c}) == 2 for c in self.clauses)

    def check_assignment(self, assignment: Sequence[bool]) -> tuple[bool, ...]:
        if len(assignment) != self.num_vars:
            raise AssignmentRejected(f"assignment has {len(assignment)} values for {self.num_vars} variables")
        return tuple(bool(x) for x in assignment)


def require_three_literals(F: CnfFormula) -> None:
    for j, c in enumerate(F.clauses):
        if len(c) != 3:
            raise ShapeViolation(f"clause {j + 1} has {len(c)} literals, expected 3")


@dataclass(frozen=True)
class GadgetInstance:
    """A constructed digraph with its bounds and a label for every vertex.

    Vertex ids follow the sorted order of the labels, so the same source
    instance always serialises identically.
    """

    digraph: Digraph
    tags: tuple[str, ...]
    f: tuple[Number, ...] | None = None
    g: tuple[Number, ...] | None = None
    weights: tuple[Number, ...] | None = None
    meta: Mapping[str, object] = field(default_factory=dict, compare=False)

    @cached_property
    def index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.tags)}

    def vertex(self, label: str) -> int:
        return self.index[label]

    def vertices(self, labels: Iterable[str]) -> list[int]:
        return [self.index[x] for x in labels]

    def order_of(self, labels: Sequence[str]) -> tuple[int, ...]:
        return tuple(self.index[x] for x in labels)

    def arc_ids(self, tail: str, head: str) -> list[int]:
        t, h = self.index[tail], self.index[head]
        return [i for i in self.digraph.out_arcs[t] if self.digraph.arcs[i].head == h]


class GadgetBuilder:
    """Collects labelled vertices and arcs, then numbers vertices by sorted label."""

    def __init__(self) -> None:
        self.labels: set[str] = set()
        self.arcs: list[tuple[str, str, Number | None]] = []
        self.f: dict[str, Number] = {}
        self.g: dict[str, Number] = {}

    def vertex(self, *labels: str) -> None:
        self.labels.update(labels)

    def arc(self, tail: str, head: str, times: int = 1, weight: Number | None = None) -> None:
        self.labels.update((tail, head))
        self.arcs.extend((tail, head, weight) for _ in range(times))

    def path(self, *labels: str) -> None:
        for a, b in zip(labels, labels[1:]):
            self.arc(a, b)

    def build(self, *, default_f: Number | None = None, default_g: Number | None = None, **meta: object) -> GadgetInstance:
        tags = tuple(sorted(self.labels))
        idx = {t: i for i, t in enumerate(tags)}
        weighted = any(w is not None for _, _, w in self.arcs)
        arcs = [(idx[t], idx[h]) for t, h, _ in self.arcs]
        D = Digraph(len(tags), arcs)
        weights = tuple(1 if w is None else w for _, _, w in self.arcs) if weighted else None
        f = g = None
        if self.f or default_f is not None:
            f = tuple(self.f.get(t, default_f) for t in tags)  # type: ignore[misc]
        if self.g or default_g is not None:
            g = tuple(self.g.get(t, default_g) for t in tags)  # type: ignore[misc]
        return GadgetInstance(D, tags, f, g, weights, dict(meta))
