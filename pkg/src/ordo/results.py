"""Solver outcomes: feasible orders, arc partitions and infeasibility witnesses."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, ClassVar, Union

from .digraph import ArcFamilyKind, DegreeProfile, Digraph, Number, degree_profile


@dataclass(frozen=True)
class InducedSet:
    """A vertex set that no order can get past.

    ``side="upper"``: every ``v`` has ``delta_w(v, Vp - v) > g(v)``.
    ``side="lower"``: every ``v`` has ``delta_w(v, V - Vp) < f(v)``.
    """

    vertices: tuple[int, ...]
    side: str = "upper"
    type: ClassVar[str] = "induced-set"


@dataclass(frozen=True)
class CutSet:
    """Fewer than ``k`` vertices meeting every S-T dipath."""

    vertices: tuple[int, ...]
    k: int
    type: ClassVar[str] = "cut-set"


@dataclass(frozen=True)
class StuckSet:
    """The unfixed vertices at the point where a greedy or search got stuck.

    ``validated`` is True when the set satisfies a checkable certificate
    condition for the problem it came from.
    """

    vertices: tuple[int, ...]
    validated: bool = False
    type: ClassVar[str] = "stuck-set"


@dataclass(frozen=True)
class SumMismatch:
    lhs: Number
    rhs: Number
    type: ClassVar[str] = "sum-mismatch"


@dataclass(frozen=True)
class DegreeDeficit:
    """Vertices whose total indegree is too small for the requested structure."""

    vertices: tuple[int, ...]
    type: ClassVar[str] = "degree-deficit"


Witness = Union[InducedSet, CutSet, StuckSet, SumMismatch, DegreeDeficit]


@dataclass(frozen=True)
class ArcPartition:
    family_arcs: frozenset[int]
    acyclic_arcs: frozenset[int]
    kind: ArcFamilyKind
    feasible: ClassVar[bool] = True

    @classmethod
    def from_family(cls, D: Digraph, family: Sequence[int] | frozenset[int], kind: ArcFamilyKind) -> ArcPartition:
        fam = frozenset(family)
        return cls(fam, frozenset(range(D.m)) - fam, kind)


@dataclass(frozen=True, eq=False)
class Feasible:
    """A feasible vertex order; the degree profile is computed on first access."""

    order: tuple[int, ...]
    digraph: Digraph = field(repr=False)
    weights: tuple[Number, ...] | None = field(default=None, repr=False)
    partition: ArcPartition | None = None
    extras: Mapping[str, Any] = field(default_factory=dict)
    feasible: ClassVar[bool] = True
    witness: ClassVar[None] = None

    @cached_property
    def profile(self) -> DegreeProfile:
        return degree_profile(self.digraph, self.order, self.weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Feasible):
            return NotImplemented
        return self.order == other.order and self.digraph == other.digraph and self.partition == other.partition


@dataclass(frozen=True)
class Infeasible:
    witness: Witness | None = None
    reason: str = ""
    extras: Mapping[str, Any] = field(default_factory=dict, compare=False)
    feasible: ClassVar[bool] = False
    order: ClassVar[None] = None
    partition: ClassVar[None] = None


SolveResult = Union[Feasible, Infeasible]
