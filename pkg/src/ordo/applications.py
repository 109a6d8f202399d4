"""Rank aggregation and threshold activation built on the bounded-ordering solvers."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .bounded import solve_lower, solve_minmax, solve_upper
from .digraph import Digraph, Number, check_order
from .errors import OrdoError, SpecViolation
from .results import SolveResult


@dataclass(frozen=True)
class RankingProfile:
    """Complete rankings of candidates ``0..num_candidates-1``, best first, one per judge."""

    num_candidates: int
    rankings: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        rk = tuple(tuple(int(c) for c in r) for r in self.rankings)
        object.__setattr__(self, "rankings", rk)
        if not rk:
            raise SpecViolation("a profile needs at least one judge")
        for r in rk:
            check_order(self.num_candidates, r)
        if self.names is not None and len(self.names) != self.num_candidates:
            raise SpecViolation("one name per candidate is required")

    def prefer_counts(self) -> list[list[int]]:
        """``c[u][v]`` = number of judges ranking ``u`` before ``v``."""
        n = self.num_candidates
        c = [[0] * n for _ in range(n)]
        for r in self.rankings:
            for i, u in enumerate(r):
                for v in r[i + 1 :]:
                    c[u][v] += 1
        return c


def build_penalty_digraph(profile: RankingProfile) -> Digraph:
    """Arc ``u -> v`` when strictly more than half of the judges rank ``u`` before ``v``."""
    n = profile.num_candidates
    c = profile.prefer_counts()
    judges = len(profile.rankings)
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and 2 * c[u][v] > judges])


def unfairness(profile: RankingProfile, order: Sequence[int]) -> list[int]:
    """``phi(v)``: candidates placed above ``v`` although a strict majority ranks ``v`` above them."""
    D = build_penalty_digraph(profile)
    pos = {v: i for i, v in enumerate(check_order(D.n, order))}
    phi = [0] * D.n
    for a in D.arcs:
        if pos[a.head] < pos[a.tail]:
            phi[a.tail] += 1
    return phi


def minmax_unfairness_order(profile: RankingProfile) -> tuple[tuple[int, ...], int]:
    """Consensus order minimising the largest unfairness, with that value."""
    order, value = solve_minmax(build_penalty_digraph(profile))
    return order, int(value)


def build_disappointment_digraph(profile: RankingProfile) -> Digraph:
    """Arc ``v -> u`` weighted by the number of judges ranking ``v`` before ``u``; zero weights omitted."""
    n = profile.num_candidates
    c = profile.prefer_counts()
    return Digraph(n, [(v, u, c[v][u]) for v in range(n) for u in range(n) if u != v and c[v][u] > 0])


def bounded_disappointment_order(profile: RankingProfile, g: object) -> SolveResult:
    """Order in which each candidate's disappointment stays within ``g``."""
    D = build_disappointment_digraph(profile)
    return solve_upper(D, g, D.weights)


@dataclass(frozen=True)
class ThresholdNetwork:
    """Arc ``u -> v`` means ``u`` influences ``v``; ``v`` activates once ``tau[v]`` in-neighbours are active."""

    digraph: Digraph
    tau: tuple[int, ...]
    seed: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        n = self.digraph.n
        object.__setattr__(self, "tau", tuple(int(t) for t in self.tau))
        object.__setattr__(self, "seed", frozenset(self.seed))
        if len(self.tau) != n:
            raise SpecViolation(f"{len(self.tau)} thresholds for {n} vertices")
        if any(t < 0 for t in self.tau):
            raise SpecViolation("thresholds must be non-negative")
        for v in self.seed:
            if not 0 <= v < n:
                raise SpecViolation(f"seed vertex {v} outside [0, {n})")

    @classmethod
    def from_mapping(cls, D: Digraph, tau: Mapping[int, int] | Sequence[int], seed: Iterable[int] = ()) -> ThresholdNetwork:
        if isinstance(tau, Mapping):
            missing = [v for v in range(D.n) if v not in tau]
            if missing:
                raise OrdoError(f"no threshold for vertices {missing}")
            tau = [tau[v] for v in range(D.n)]
        return cls(D, tuple(tau), frozenset(seed))


@dataclass(frozen=True)
class Activation:
    fully_activates: bool
    order: tuple[int, ...] | None
    blocked: tuple[int, ...] | None


def check_activation(net: ThresholdNetwork) -> Activation:
    """Decide whether everything activates one vertex at a time.

    In the reversed digraph a vertex's left-going arcs point to its already
    active influencers, so a one-by-one activation is exactly an order with
    lower bounds ``0`` on seeds and ``tau`` elsewhere. When none exists the
    returned set can never activate: each member has fewer than its threshold
    of influencers outside the set.
    """
    D = net.digraph
    f = [0 if v in net.seed else net.tau[v] for v in range(D.n)]
    res = solve_lower(D.reverse(), f, [1] * D.m)
    if res.feasible:
        return Activation(True, res.order, None)
    return Activation(False, None, tuple(res.witness.vertices))  # type: ignore[union-attr]


def simulate_activation(net: ThresholdNetwork) -> frozenset[int]:
    """Round-based propagation to a fixpoint; returns the active set."""
    D = net.digraph
    active = set(net.seed) | {v for v in range(D.n) if net.tau[v] == 0}
    changed = True
    while changed:
        changed = False
        for v in range(D.n):
            if v in active:
                continue
            hits = sum(1 for i in D.in_arcs[v] if D.arcs[i].tail in active)
            if hits >= net.tau[v]:
                active.add(v)
                changed = True
    return frozenset(active)


def is_activation_sequence(net: ThresholdNetwork, order: Sequence[int]) -> bool:
    D = net.digraph
    seen: set[int] = set()
    for v in check_order(D.n, order):
        if v not in net.seed:
            hits = sum(1 for i in D.in_arcs[v] if D.arcs[i].tail in seen)
            if hits < net.tau[v]:
                return False
        seen.add(v)
    return True


def disappointment(profile: RankingProfile, order: Sequence[int]) -> list[Number]:
    D = build_disappointment_digraph(profile)
    pos = {v: i for i, v in enumerate(check_order(D.n, order))}
    out: list[Number] = [0] * D.n
    for a in D.arcs:
        if pos[a.head] < pos[a.tail]:
            out[a.tail] += a.weight
    return out
