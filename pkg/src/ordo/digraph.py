"""Loop-free multidigraphs, extended weights and degree arithmetic over vertex orders."""

from __future__ import annotations

import enum
import heapq
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Union

from .errors import IndexOutOfRange, InvalidDigraph, LengthMismatch, NotPermutation, OrdoError

POS_INF = math.inf
NEG_INF = -math.inf

Number = Union[int, Fraction, float]


def tidy(x: Number) -> Number:
    """Collapse integral fractions to int; leave infinities alone."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def parse_extended(token: object) -> Number:
    """Turn a bound or weight token into an int, a Fraction or a signed infinity.

    Accepts ints, Fractions, floats and strings such as ``"3"``, ``"2.5"``,
    ``"7/2"``, ``"inf"`` and ``"-inf"``. Finite floats are read through their
    decimal repr so that ``0.1`` means one tenth.
    """
    if isinstance(token, bool):
        raise OrdoError(f"boolean is not a numeric value: {token!r}")
    if isinstance(token, int):
        return token
    if isinstance(token, Fraction):
        return tidy(token)
    if isinstance(token, float):
        if math.isnan(token):
            raise OrdoError("NaN is not an extended value")
        if math.isinf(token):
            return token
        return tidy(Fraction(repr(token)))
    if isinstance(token, str):
        s = token.strip().lower()
        if s in ("inf", "+inf", "infinity", "+infinity"):
            return POS_INF
        if s in ("-inf", "-infinity"):
            return NEG_INF
        try:
            return tidy(Fraction(s))
        except (ValueError, ZeroDivisionError):
            raise OrdoError(f"not a number: {token!r}") from None
    raise OrdoError(f"unsupported numeric value: {token!r}")


def parse_weight(token: object) -> Number:
    w = parse_extended(token)
    if w < 0:
        raise InvalidDigraph(f"arc weight must be non-negative or inf, got {token!r}")
    return w


def format_extended(x: Number) -> object:
    """JSON-friendly form: ints stay ints, infinities and fractions become strings."""
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    x = tidy(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


class Arc(NamedTuple):
    tail: int
    head: int
    weight: Number = 1


@dataclass(frozen=True)
class Digraph:
    """A loop-free multidigraph on vertices ``0..n-1``.

    Arc identity is the position in ``arcs``; parallel arcs are allowed.
    Weights default to 1 and lie in ``[0, inf]``.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __init__(self, n: int, arcs: Iterable[Sequence[object]] = ()) -> None:
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidDigraph(f"vertex count must be a non-negative int, got {n!r}")
        norm = []
        for i, a in enumerate(arcs):
            if len(a) == 2:
                t, h = a
                w: Number = 1
            elif len(a) == 3:
                t, h, w = a
                w = parse_weight(w)
            else:
                raise InvalidDigraph(f"arc #{i} must be (tail, head[, weight]), got {a!r}")
            if not (isinstance(t, int) and isinstance(h, int)) or isinstance(t, bool) or isinstance(h, bool):
                raise InvalidDigraph(f"arc #{i} endpoints must be ints")
            if not (0 <= t < n and 0 <= h < n):
                raise InvalidDigraph(f"arc #{i} ({t}->{h}) has an endpoint outside [0, {n})")
            if t == h:
                raise InvalidDigraph(f"arc #{i} is a loop at {t}")
            norm.append(Arc(t, h, w))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, a in enumerate(self.arcs):
            out[a.tail].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, a in enumerate(self.arcs):
            inc[a.head].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def weights(self) -> tuple[Number, ...]:
        return tuple(a.weight for a in self.arcs)

    @cached_property
    def is_unweighted(self) -> bool:
        return all(a.weight == 1 for a in self.arcs)

    @cached_property
    def outdegree(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.out_arcs)

    @cached_property
    def indegree(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.in_arcs)

    @cached_property
    def weighted_outdegree(self) -> tuple[Number, ...]:
        return tuple(tidy(sum((self.arcs[i].weight for i in arcs), 0)) for arcs in self.out_arcs)

    @cached_property
    def is_simple(self) -> bool:
        pairs = [(a.tail, a.head) for a in self.arcs]
        return len(pairs) == len(set(pairs))

    def reverse(self) -> Digraph:
        return Digraph(self.n, [(a.head, a.tail, a.weight) for a in self.arcs])

    def complement(self) -> Digraph:
        """Simple complement: ``u -> v`` iff ``u != v`` and the arc is absent."""
        if not self.is_simple:
            raise InvalidDigraph("complement is defined for simple digraphs only")
        present = {(a.tail, a.head) for a in self.arcs}
        return Digraph(self.n, [(u, v) for u in range(self.n) for v in range(self.n) if u != v and (u, v) not in present])

    def subgraph_arcs(self, arc_ids: Iterable[int]) -> Digraph:
        """Same vertex set, only the given arcs (in increasing index order)."""
        ids = sorted(set(arc_ids))
        return Digraph(self.n, [self.arcs[i] for i in ids])

    def induced(self, vertices: Iterable[int]) -> tuple[Digraph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the new-to-old map."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[a.tail], index[a.head], a.weight) for a in self.arcs if a.tail in index and a.head in index]
        return Digraph(len(keep), arcs), keep


class ArcFamilyKind(str, enum.Enum):
    IN_BRANCHING = "in-branching"
    IN_ARBORESCENCE = "in-arborescence"
    MATCHING = "matching"
    PERFECT_MATCHING = "perfect-matching"
    DISJOINT_DIPATHS = "disjoint-dipaths"
    DIPATH = "dipath"
    HAMILTONIAN_DIPATH = "hamiltonian-dipath"
    ACYCLIC = "acyclic"

    @classmethod
    def parse(cls, name: str | ArcFamilyKind) -> ArcFamilyKind:
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        aliases = {"ham-dipath": "hamiltonian-dipath", "dipaths": "disjoint-dipaths", "in-arb": "in-arborescence"}
        key = aliases.get(key, key)
        for k in cls:
            if k.value == key or k.name.lower().replace("_", "-") == key:
                return k
        raise OrdoError(f"unknown arc family {name!r}")


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex left/right out- and in-degrees of an order.

    ``rho_right[v]`` counts arcs entering ``v`` from vertices placed after it,
    so it is the indegree of ``v`` among the left-going arcs.
    """

    order: tuple[int, ...]
    delta_left: tuple[int, ...]
    delta_right: tuple[int, ...]
    rho_left: tuple[int, ...]
    rho_right: tuple[int, ...]
    delta_left_w: tuple[Number, ...]
    rho_right_w: tuple[Number, ...]
    left_arcs: tuple[int, ...]

    @property
    def position(self) -> list[int]:
        return positions(self.order)


def positions(order: Sequence[int]) -> list[int]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def check_order(n: int, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    if len(order) != n:
        raise LengthMismatch(f"order has {len(order)} entries, digraph has {n} vertices")
    seen = [False] * n
    for v in order:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
            raise NotPermutation(f"order entry {v!r} is not a vertex id in [0, {n})")
        if seen[v]:
            raise NotPermutation(f"vertex {v} appears twice in the order")
        seen[v] = True
    return order


def degree_profile(D: Digraph, order: Sequence[int], weights: Sequence[Number] | None = None) -> DegreeProfile:
    order = check_order(D.n, order)
    w = D.weights if weights is None else tuple(weights)
    if len(w) != D.m:
        raise LengthMismatch(f"{len(w)} weights for {D.m} arcs")
    pos = positions(order)
    n = D.n
    dl = [0] * n
    rr = [0] * n
    dlw: list[Number] = [0] * n
    rrw: list[Number] = [0] * n
    left = []
    for i, a in enumerate(D.arcs):
        if pos[a.head] < pos[a.tail]:
            dl[a.tail] += 1
            rr[a.head] += 1
            dlw[a.tail] += w[i]
            rrw[a.head] += w[i]
            left.append(i)
    outdeg, indeg = D.outdegree, D.indegree
    return DegreeProfile(
        order=order,
        delta_left=tuple(dl),
        delta_right=tuple(outdeg[v] - dl[v] for v in range(n)),
        rho_left=tuple(indeg[v] - rr[v] for v in range(n)),
        rho_right=tuple(rr),
        delta_left_w=tuple(tidy(x) for x in dlw),
        rho_right_w=tuple(tidy(x) for x in rrw),
        left_arcs=tuple(left),
    )


def left_arcs(D: Digraph, order: Sequence[int]) -> list[int]:
    pos = positions(check_order(D.n, order))
    return [i for i, a in enumerate(D.arcs) if pos[a.head] < pos[a.tail]]


class CycleError(OrdoError):
    """Raised by :func:`topological_order` on a cyclic digraph.

    ``arcs`` holds the arc indices of one directed cycle in traversal order.
    """

    def __init__(self, arcs: list[int]) -> None:
        self.arcs = arcs
        super().__init__(f"digraph contains a directed cycle through arcs {arcs}")


def _peel(n: int, arcs: Sequence[Arc], active: Sequence[int]) -> tuple[list[int], list[int]]:
    """Zero-outdegree peeling over the active arc ids.

    Returns the vertices in removal order (lowest id first among ties) and the
    remaining outdegrees; vertices with positive remaining outdegree lie on or
    lead into a cycle.
    """
    out = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    for i in active:
        a = arcs[i]
        out[a.tail] += 1
        preds[a.head].append(a.tail)
    heap = [v for v in range(n) if out[v] == 0]
    heapq.heapify(heap)
    removed = []
    while heap:
        v = heapq.heappop(heap)
        removed.append(v)
        for u in preds[v]:
            out[u] -= 1
            if out[u] == 0:
                heapq.heappush(heap, u)
    return removed, out


def _cycle_from(n: int, arcs: Sequence[Arc], active: Sequence[int], out: list[int]) -> list[int]:
    stuck = [v for v in range(n) if out[v] > 0]
    alive = set(stuck)
    nxt: dict[int, int] = {}
    for i in active:
        a = arcs[i]
        if a.tail in alive and a.head in alive and a.tail not in nxt:
            nxt[a.tail] = i
    # every stuck vertex keeps an arc to another stuck vertex, so walking
    # forward from any of them must revisit a vertex
    seen: dict[int, int] = {}
    path: list[int] = []
    v = stuck[0]
    while v not in seen:
        seen[v] = len(path)
        i = nxt[v]
        path.append(i)
        v = arcs[i].head
    return path[seen[v]:]


def topological_order(D: Digraph, arc_ids: Iterable[int] | None = None) -> tuple[int, ...]:
    """An order with no left-going arcs, built by repeatedly placing a
    zero-outdegree vertex (lowest id first) at the rightmost free position.

    Raises :class:`CycleError` carrying a directed cycle when none exists.
    """
    active = list(range(D.m)) if arc_ids is None else list(arc_ids)
    removed, out = _peel(D.n, D.arcs, active)
    if len(removed) < D.n:
        raise CycleError(_cycle_from(D.n, D.arcs, active, out))
    return tuple(reversed(removed))


def find_cycle(D: Digraph, arc_ids: Iterable[int] | None = None) -> list[int] | None:
    active = list(range(D.m)) if arc_ids is None else list(arc_ids)
    removed, out = _peel(D.n, D.arcs, active)
    if len(removed) == D.n:
        return None
    return _cycle_from(D.n, D.arcs, active, out)


def is_acyclic(D: Digraph, arc_ids: Iterable[int] | None = None) -> bool:
    active = list(range(D.m)) if arc_ids is None else list(arc_ids)
    removed, _ = _peel(D.n, D.arcs, active)
    return len(removed) == D.n


def strongly_connected_components(D: Digraph) -> list[int]:
    """Component id per vertex (iterative Tarjan)."""
    n = D.n
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    succ = [[D.arcs[i].head for i in D.out_arcs[v]] for v in range(n)]
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, k = work.pop()
            if k == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            while k < len(succ[v]):
                u = succ[v][k]
                k += 1
                if index[u] == -1:
                    work.append((v, k))
                    work.append((u, 0))
                    recurse = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp[u] = ncomp
                    if u == v:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def cyclic_arcs(D: Digraph) -> list[int]:
    """Indices of arcs lying on at least one directed cycle."""
    comp = strongly_connected_components(D)
    return [i for i, a in enumerate(D.arcs) if comp[a.tail] == comp[a.head]]


def _check_arc_ids(D: Digraph, arc_ids: Iterable[int]) -> list[int]:
    ids = sorted(set(arc_ids))
    for i in ids:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < D.m:
            raise IndexOutOfRange(f"arc index {i!r} outside [0, {D.m})")
    return ids


def _path_shape(D: Digraph, ids: list[int]) -> tuple[list[int], list[int], bool] | None:
    """Out/in degrees of the arc set and its acyclicity, or None if some
    vertex has out- or indegree above one."""
    out = [0] * D.n
    inc = [0] * D.n
    for i in ids:
        a = D.arcs[i]
        out[a.tail] += 1
        inc[a.head] += 1
        if out[a.tail] > 1 or inc[a.head] > 1:
            return None
    return out, inc, is_acyclic(D, ids)


def classify_arc_set(D: Digraph, arc_ids: Iterable[int], kind: ArcFamilyKind | str) -> bool:
    """Whether the given arcs, viewed as a spanning subgraph, belong to ``kind``."""
    kind = ArcFamilyKind.parse(kind)
    ids = _check_arc_ids(D, arc_ids)
    n = D.n
    if kind is ArcFamilyKind.ACYCLIC:
        return is_acyclic(D, ids)
    if kind in (ArcFamilyKind.MATCHING, ArcFamilyKind.PERFECT_MATCHING):
        covered = [False] * n
        for i in ids:
            a = D.arcs[i]
            if covered[a.tail] or covered[a.head]:
                return False
            covered[a.tail] = covered[a.head] = True
        return kind is ArcFamilyKind.MATCHING or all(covered)
    if kind in (ArcFamilyKind.IN_BRANCHING, ArcFamilyKind.IN_ARBORESCENCE):
        out = [0] * n
        for i in ids:
            out[D.arcs[i].tail] += 1
        if any(x > 1 for x in out) or not is_acyclic(D, ids):
            return False
        if kind is ArcFamilyKind.IN_BRANCHING:
            return True
        # acyclic with outdegree <= 1 everywhere: a single sink means every
        # vertex drains into it, so the arcs span one tree
        return n > 0 and sum(1 for x in out if x == 0) == 1
    shape = _path_shape(D, ids)
    if shape is None:
        return False
    out, inc, acyclic = shape
    if not acyclic:
        return False
    starts = sum(1 for v in range(n) if out[v] == 1 and inc[v] == 0)
    if kind is ArcFamilyKind.DISJOINT_DIPATHS:
        return True
    if kind is ArcFamilyKind.DIPATH:
        return starts <= 1
    # Hamiltonian: one dipath through all n vertices
    return starts <= 1 and len(ids) == max(n - 1, 0)


def induced_min_outdegree(D: Digraph, vertices: Iterable[int], weights: Sequence[Number] | None = None) -> dict[int, Number]:
    """``delta_w(v, Vp - {v})`` for every ``v`` in ``Vp``."""
    vp = set(vertices)
    for v in vp:
        if not 0 <= v < D.n:
            raise IndexOutOfRange(f"vertex {v} outside [0, {D.n})")
    w = D.weights if weights is None else tuple(weights)
    res: dict[int, Number] = {v: 0 for v in vp}
    for i, a in enumerate(D.arcs):
        if a.tail in vp and a.head in vp:
            res[a.tail] += w[i]
    return {v: tidy(x) for v, x in sorted(res.items())}


def weighted_degree_into(D: Digraph, v: int, targets: set[int] | frozenset[int], weights: Sequence[Number] | None = None) -> Number:
    """``delta_w(v, targets)``."""
    w = D.weights if weights is None else weights
    return tidy(sum((w[i] for i in D.out_arcs[v] if D.arcs[i].head in targets), 0))


def in_degree_from(D: Digraph, v: int, sources: set[int] | frozenset[int]) -> int:
    """``rho(v, sources)``."""
    return sum(1 for i in D.in_arcs[v] if D.arcs[i].tail in sources)


def bound_vector(spec: object, n: int, default: Number) -> list[Number]:
    """Expand a scalar, sequence or mapping of bounds to a per-vertex list."""
    if spec is None:
        return [default] * n
    if isinstance(spec, Mapping):
        out = [default] * n
        for k, val in spec.items():
            v = int(k)
            if not 0 <= v < n:
                raise IndexOutOfRange(f"bound given for vertex {v} outside [0, {n})")
            out[v] = default if val is None else parse_extended(val)
        return out
    if isinstance(spec, (str, bytes)):
        return [parse_extended(spec)] * n
    if isinstance(spec, Iterable):
        vals = list(spec)
        if len(vals) != n:
            raise LengthMismatch(f"{len(vals)} bounds for {n} vertices")
        return [default if x is None else parse_extended(x) for x in vals]
    return [parse_extended(spec)] * n
