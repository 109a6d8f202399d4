"""Exhaustive ground-truth engines.

Orders are enumerated in lexicographic order and every predicate is evaluated
on the whole permutation table at once with numpy, so the first satisfying
row is the lexicographically first answer. Arc partitions are decided by a
branching search over the arcs that lie on directed cycles.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from . import config
from .digraph import (
    NEG_INF,
    POS_INF,
    ArcFamilyKind,
    Digraph,
    Number,
    bound_vector,
    classify_arc_set,
    cyclic_arcs,
    is_acyclic,
    left_arcs,
    parse_extended,
    tidy,
)
from .errors import CapExceeded, IndexOutOfRange, LengthMismatch
from .results import ArcPartition, Feasible, Infeasible, SolveResult

# ---------------------------------------------------------------------------
# permutation tables


def _is_plain(values: Iterable[object]) -> bool:
    """True when every value is an int or an infinity, so float64 is exact."""
    for x in values:
        if isinstance(x, Fraction):
            return False
        if isinstance(x, float) and not math.isinf(x):
            return False
        if isinstance(x, int) and abs(x) > 2**52:
            return False
    return True


def _as_array(values: Sequence[object]) -> np.ndarray:
    if _is_plain(values):
        return np.asarray(values, dtype=np.float64)
    return np.asarray(list(values), dtype=object)


class PermutationTable:
    """All ``n!`` orders of a digraph with their left-going arc data."""

    def __init__(self, D: Digraph) -> None:
        self.D = D
        n, m = D.n, D.m
        if n == 0:
            self.perms = np.zeros((1, 0), dtype=np.int64)
        else:
            self.perms = np.array(list(permutations(range(n))), dtype=np.int64)
        P = self.perms.shape[0]
        self.pos = np.empty_like(self.perms)
        rows = np.arange(P)[:, None]
        self.pos[rows, self.perms] = np.arange(n)[None, :]
        self.tails = np.array([a.tail for a in D.arcs], dtype=np.int64)
        self.heads = np.array([a.head for a in D.arcs], dtype=np.int64)
        if m:
            self.gap = self.pos[:, self.tails] - self.pos[:, self.heads]
        else:
            self.gap = np.zeros((P, 0), dtype=np.int64)
        self.left = self.gap > 0
        self.tail_onehot = np.zeros((m, n), dtype=np.int64)
        self.head_onehot = np.zeros((m, n), dtype=np.int64)
        if m:
            self.tail_onehot[np.arange(m), self.tails] = 1
            self.head_onehot[np.arange(m), self.heads] = 1
        L = self.left.astype(np.int64)
        self.delta_left = L @ self.tail_onehot
        self.rho_right = L @ self.head_onehot
        self.n_left = L.sum(axis=1)
        self._weighted: dict[tuple[object, ...], np.ndarray] = {}

    @property
    def size(self) -> int:
        return int(self.perms.shape[0])

    def order(self, row: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.perms[row])

    def _sum_by_tail(self, mask: np.ndarray, w: tuple[Number, ...]) -> np.ndarray:
        if _is_plain(w) and not any(isinstance(x, float) for x in w):
            return mask.astype(np.int64) @ (self.tail_onehot * np.asarray(w, dtype=np.int64)[:, None])
        warr = np.asarray(list(w), dtype=object)
        picked = np.where(mask, warr[None, :], 0)
        out = np.zeros((mask.shape[0], self.D.n), dtype=object)
        for v in range(self.D.n):
            cols = self.D.out_arcs[v]
            if cols:
                out[:, v] = picked[:, list(cols)].sum(axis=1)
        return out

    def weighted_delta_left(self, weights: Sequence[Number] | None = None) -> np.ndarray:
        w = self.D.weights if weights is None else tuple(weights)
        key = ("all",) + w
        if key not in self._weighted:
            self._weighted[key] = self._sum_by_tail(self.left, w)
        return self._weighted[key]

    def windowed_delta_left(self, d: int, weights: Sequence[Number] | None = None) -> np.ndarray:
        w = self.D.weights if weights is None else tuple(weights)
        key = ("window", d) + w
        if key not in self._weighted:
            self._weighted[key] = self._sum_by_tail((self.gap > 0) & (self.gap <= d), w)
        return self._weighted[key]


@lru_cache(maxsize=256)
def _table(D: Digraph) -> PermutationTable:
    return PermutationTable(D)


def permutation_table(D: Digraph, cap: int | None = None) -> PermutationTable:
    limit = config.order_cap(cap)
    if D.n > limit:
        raise CapExceeded("oracle order size n", D.n, limit)
    return _table(D)


# ---------------------------------------------------------------------------
# predicates


def _weights_or_none(weights: Sequence[object] | None, m: int) -> tuple[Number, ...] | None:
    if weights is None:
        return None
    w = tuple(parse_extended(x) for x in weights)
    if len(w) != m:
        raise LengthMismatch(f"{len(w)} weights for {m} arcs")
    return w


def _cmp_ok(values: np.ndarray, lo: Sequence[Number], hi: Sequence[Number]) -> np.ndarray:
    lo_a = _as_array(lo)
    hi_a = _as_array(hi)
    ok = (values >= lo_a[None, :]) & (values <= hi_a[None, :])
    return np.asarray(ok, dtype=bool).all(axis=1)


@dataclass(frozen=True)
class BoundsPredicate:
    """``f(v) <= delta_left_w(v) <= g(v)``; weights may be negative here."""

    f: object = None
    g: object = None
    weights: Sequence[object] | None = None

    def evaluate(self, t: PermutationTable) -> np.ndarray:
        n = t.D.n
        w = _weights_or_none(self.weights, t.D.m)
        vals = t.weighted_delta_left(w)
        return _cmp_ok(vals, bound_vector(self.f, n, NEG_INF), bound_vector(self.g, n, POS_INF))


@dataclass(frozen=True)
class DDistancePredicate:
    """Upper bounds on the weight into the ``d`` immediate predecessors."""

    d: int
    g: object = None
    weights: Sequence[object] | None = None

    def evaluate(self, t: PermutationTable) -> np.ndarray:
        n = t.D.n
        w = _weights_or_none(self.weights, t.D.m)
        vals = t.windowed_delta_left(self.d, w)
        return _cmp_ok(vals, [NEG_INF] * n, bound_vector(self.g, n, POS_INF))


@dataclass(frozen=True)
class SimultaneousPredicate:
    """Unweighted bounds on both ``delta_left`` and ``rho_right``."""

    f_delta: object = None
    g_delta: object = None
    f_rho: object = None
    g_rho: object = None

    def evaluate(self, t: PermutationTable) -> np.ndarray:
        n = t.D.n
        a = _cmp_ok(t.delta_left, bound_vector(self.f_delta, n, NEG_INF), bound_vector(self.g_delta, n, POS_INF))
        b = _cmp_ok(t.rho_right, bound_vector(self.f_rho, n, NEG_INF), bound_vector(self.g_rho, n, POS_INF))
        return a & b


def ExactPredicate(m_delta: object, m_rho: object) -> SimultaneousPredicate:
    return SimultaneousPredicate(m_delta, m_delta, m_rho, m_rho)


@dataclass(frozen=True)
class FamilyPredicate:
    """Left-going arcs form a member of ``kind``.

    Optional refinements: ``roots`` (in-branching roots), ``root``
    (in-arborescence root), ``endpoints`` (dipath start and end), ``S``/``T``
    (disjoint S-T dipaths) and ``count`` (number of dipaths with an arc).
    """

    kind: ArcFamilyKind
    roots: tuple[int, ...] = ()
    root: int | None = None
    endpoints: tuple[int, int] | None = None
    S: tuple[int, ...] = ()
    T: tuple[int, ...] = ()
    count: int | None = None

    def evaluate(self, t: PermutationTable) -> np.ndarray:
        kind = ArcFamilyKind.parse(self.kind)
        dl, rr = t.delta_left, t.rho_right
        n = t.D.n
        P = t.size
        ok = np.ones(P, dtype=bool)
        if kind is ArcFamilyKind.ACYCLIC:
            return ok
        if kind in (ArcFamilyKind.IN_BRANCHING, ArcFamilyKind.IN_ARBORESCENCE):
            ok &= (dl <= 1).all(axis=1)
            for r in self.roots:
                ok &= dl[:, r] == 0
            if kind is ArcFamilyKind.IN_ARBORESCENCE:
                ok &= (dl == 0).sum(axis=1) == 1
                if self.root is not None:
                    ok &= dl[:, self.root] == 0
            return ok
        if kind in (ArcFamilyKind.MATCHING, ArcFamilyKind.PERFECT_MATCHING):
            touch = dl + rr
            if kind is ArcFamilyKind.MATCHING:
                return ok & (touch <= 1).all(axis=1)
            return ok & (touch == 1).all(axis=1)
        ok &= (dl <= 1).all(axis=1) & (rr <= 1).all(axis=1)
        starts = ((dl == 1) & (rr == 0)).sum(axis=1)
        if self.S or self.T:
            Sset, Tset = set(self.S), set(self.T)
            for v in range(n):
                if v in Sset:
                    ok &= (dl[:, v] == 1) & (rr[:, v] == 0)
                elif v in Tset:
                    ok &= (dl[:, v] == 0) & (rr[:, v] == 1)
                else:
                    ok &= dl[:, v] == rr[:, v]
        if self.count is not None:
            ok &= starts == self.count
        if kind is ArcFamilyKind.DISJOINT_DIPATHS:
            return ok
        ok &= starts <= 1
        if self.endpoints is not None:
            s, e = self.endpoints
            ok &= (dl[:, s] == 1) & (rr[:, s] == 0) & (dl[:, e] == 0) & (rr[:, e] == 1)
        if kind is ArcFamilyKind.HAMILTONIAN_DIPATH:
            ok &= t.n_left == max(n - 1, 0)
        return ok


@dataclass(frozen=True)
class CallablePredicate:
    """Any ``fn(D, order) -> bool``, evaluated order by order."""

    fn: Callable[[Digraph, tuple[int, ...]], bool] = field(compare=False)

    def evaluate(self, t: PermutationTable) -> np.ndarray:
        return np.array([bool(self.fn(t.D, t.order(i))) for i in range(t.size)], dtype=bool)


OrderPredicate = BoundsPredicate | DDistancePredicate | SimultaneousPredicate | FamilyPredicate | CallablePredicate


def _evaluate(t: PermutationTable, pred: object) -> np.ndarray:
    if callable(pred) and not hasattr(pred, "evaluate"):
        pred = CallablePredicate(pred)  # type: ignore[arg-type]
    return pred.evaluate(t)  # type: ignore[union-attr]


def oracle_order(D: Digraph, pred: object, *, cap: int | None = None) -> SolveResult:
    """Lexicographically first order satisfying ``pred``, by exhaustive search."""
    t = permutation_table(D, cap)
    ok = _evaluate(t, pred)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return Infeasible(None, "no order satisfies the predicate")
    return Feasible(t.order(int(hits[0])), D)


def oracle_count(D: Digraph, pred: object, *, cap: int | None = None) -> int:
    """Number of orders satisfying ``pred``."""
    t = permutation_table(D, cap)
    return int(_evaluate(t, pred).sum())


def oracle_first_rows(D: Digraph, preds: Sequence[object], *, cap: int | None = None) -> list[tuple[int, ...] | None]:
    """Batch form of :func:`oracle_order` returning only the first orders.

    Upper/lower bound predicates sharing the digraph's own weights are
    stacked into one array comparison, which keeps large sweeps cheap.
    """
    t = permutation_table(D, cap)
    n = D.n
    out: list[tuple[int, ...] | None] = [None] * len(preds)
    stack_idx = [i for i, p in enumerate(preds) if isinstance(p, BoundsPredicate) and p.weights is None]
    sim_idx = [i for i, p in enumerate(preds) if isinstance(p, SimultaneousPredicate)]
    done = set()
    if stack_idx:
        lo = [bound_vector(preds[i].f, n, NEG_INF) for i in stack_idx]  # type: ignore[union-attr]
        hi = [bound_vector(preds[i].g, n, POS_INF) for i in stack_idx]  # type: ignore[union-attr]
        flat = [x for row in lo + hi for x in row]
        if _is_plain(flat):
            vals = t.weighted_delta_left()
            if vals.dtype != object:
                L = np.asarray(lo, dtype=np.float64)[:, None, :]
                H = np.asarray(hi, dtype=np.float64)[:, None, :]
                ok = ((vals[None] >= L) & (vals[None] <= H)).all(axis=2)
                _fill(out, stack_idx, ok, t)
                done.update(stack_idx)
    if sim_idx:
        rows = []
        for i in sim_idx:
            p = preds[i]
            rows.append(
                (
                    bound_vector(p.f_delta, n, NEG_INF),  # type: ignore[union-attr]
                    bound_vector(p.g_delta, n, POS_INF),  # type: ignore[union-attr]
                    bound_vector(p.f_rho, n, NEG_INF),  # type: ignore[union-attr]
                    bound_vector(p.g_rho, n, POS_INF),  # type: ignore[union-attr]
                )
            )
        if _is_plain(x for r in rows for part in r for x in part):
            A = np.asarray(rows, dtype=np.float64)  # (B, 4, n)
            dl = t.delta_left[None]
            rr = t.rho_right[None]
            ok = (
                (dl >= A[:, 0, None, :])
                & (dl <= A[:, 1, None, :])
                & (rr >= A[:, 2, None, :])
                & (rr <= A[:, 3, None, :])
            ).all(axis=2)
            _fill(out, sim_idx, ok, t)
            done.update(sim_idx)
    for i, p in enumerate(preds):
        if i not in done:
            hits = np.flatnonzero(_evaluate(t, p))
            out[i] = t.order(int(hits[0])) if hits.size else None
    return out


def _fill(out: list[tuple[int, ...] | None], idx: list[int], ok: np.ndarray, t: PermutationTable) -> None:
    any_ok = ok.any(axis=1)
    first = ok.argmax(axis=1)
    for j, i in enumerate(idx):
        out[i] = t.order(int(first[j])) if any_ok[j] else None


# ---------------------------------------------------------------------------
# optimisation oracles over orders


def _lex_first_min(rows: np.ndarray) -> int:
    """Index of the lexicographically smallest row, lowest index on ties."""
    if rows.shape[1] == 0:
        return 0
    keys = [np.arange(rows.shape[0])] + [rows[:, j] for j in range(rows.shape[1] - 1, -1, -1)]
    return int(np.lexsort(keys)[0])


def oracle_minmax(D: Digraph, weights: Sequence[object] | None = None, *, cap: int | None = None) -> tuple[tuple[int, ...], Number]:
    """Order minimising the largest weighted left-outdegree, by enumeration."""
    t = permutation_table(D, cap)
    vals = t.weighted_delta_left(_weights_or_none(weights, D.m))
    if D.n == 0:
        return (), 0
    worst = vals.max(axis=1)
    if worst.dtype == object:
        best = min(worst.tolist())
        row = next(i for i, x in enumerate(worst.tolist()) if x == best)
    else:
        row = int(np.argmin(worst))
        best = worst[row]
    return t.order(row), _num(best)


def _num(x: object) -> Number:
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating, float)):
        f = float(x)
        return f if math.isinf(f) else tidy(Fraction(f))
    return tidy(x)  # type: ignore[arg-type]


def oracle_decreasing_min(
    D: Digraph, g: object = 1, weights: Sequence[object] | None = None, *, cap: int | None = None
) -> tuple[tuple[int, ...], tuple[Number, ...]] | None:
    """Among orders within ``g``, one whose non-increasingly sorted left-outdegree
    vector is lexicographically smallest. ``None`` when no order meets ``g``."""
    t = permutation_table(D, cap)
    w = _weights_or_none(weights, D.m)
    ok = BoundsPredicate(None, g, w).evaluate(t)
    rows = np.flatnonzero(ok)
    if rows.size == 0:
        return None
    vals = t.weighted_delta_left(w)[rows]
    if vals.dtype == object:
        vecs = [tuple(sorted(r, reverse=True)) for r in vals.tolist()]
        best = min(range(len(vecs)), key=lambda i: (vecs[i], i))
        return t.order(int(rows[best])), tuple(_num(x) for x in vecs[best])
    desc = -np.sort(-vals, axis=1)
    best = _lex_first_min(desc)
    return t.order(int(rows[best])), tuple(_num(x) for x in desc[best])


class LexSide(str, enum.Enum):
    FROM_LEFT = "from-left"
    FROM_RIGHT = "from-right"


class LexSense(str, enum.Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class LexObjective:
    side: LexSide = LexSide.FROM_LEFT
    sense: LexSense = LexSense.MIN


def _lex_keys(D: Digraph, obj: LexObjective, cap: int | None) -> tuple[PermutationTable, np.ndarray]:
    t = permutation_table(D, cap)
    vals = t.delta_left[np.arange(t.size)[:, None], t.perms]  # position order
    keys = vals if LexSide(obj.side) is LexSide.FROM_LEFT else vals[:, ::-1]
    if LexSense(obj.sense) is LexSense.MAX:
        keys = -keys
    return t, keys


def oracle_lex(D: Digraph, obj: LexObjective, *, cap: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Optimal order for a lexicographic objective on unweighted left-outdegrees.

    The objective reads the left-outdegrees left to right (``from-left``) or
    right to left (``from-right``). The returned vector is always in position
    order, i.e. entry ``i`` is the left-outdegree of ``order[i]``.
    """
    t, keys = _lex_keys(D, obj, cap)
    row = _lex_first_min(keys)
    order = t.order(row)
    return order, tuple(int(t.delta_left[row, v]) for v in order)


def lex_optimal_orders(D: Digraph, obj: LexObjective, *, cap: int | None = None) -> set[tuple[int, ...]]:
    """Every order attaining the optimum of ``obj``."""
    t, keys = _lex_keys(D, obj, cap)
    if t.size == 0:
        return set()
    best = keys[_lex_first_min(keys)]
    hits = np.flatnonzero((keys == best[None, :]).all(axis=1))
    return {t.order(int(i)) for i in hits}


def oracle_min_feedback_arc_set(D: Digraph, *, cap: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Minimum number of arcs whose removal leaves ``D`` acyclic, with an order attaining it."""
    t = permutation_table(D, cap)
    row = int(np.argmin(t.n_left))
    return int(t.n_left[row]), t.order(row)


def has_hamiltonian_dipath(D: Digraph, *, cap: int | None = None) -> bool:
    """Brute force over vertex sequences."""
    if D.n <= 1:
        return True
    t = permutation_table(D, cap)
    adj = np.zeros((D.n, D.n), dtype=bool)
    for a in D.arcs:
        adj[a.tail, a.head] = True
    steps = adj[t.perms[:, :-1], t.perms[:, 1:]]
    return bool(steps.all(axis=1).any())


# ---------------------------------------------------------------------------
# arc partitions


_PATH_KINDS = (ArcFamilyKind.DISJOINT_DIPATHS, ArcFamilyKind.DIPATH, ArcFamilyKind.HAMILTONIAN_DIPATH)
_BRANCH_KINDS = (ArcFamilyKind.IN_BRANCHING, ArcFamilyKind.IN_ARBORESCENCE)
_MATCH_KINDS = (ArcFamilyKind.MATCHING, ArcFamilyKind.PERFECT_MATCHING)


class _FamilyState:
    """Partial family arc set with the local constraints every member obeys."""

    def __init__(self, D: Digraph, kind: ArcFamilyKind) -> None:
        self.D = D
        self.kind = kind
        self.out = [-1] * D.n  # chosen out-arc per vertex
        self.inc = [-1] * D.n  # chosen in-arc per vertex
        self.chosen: list[int] = []

    def _reaches(self, start: int, target: int) -> bool:
        v = start
        seen = 0
        while v != -1 and seen <= self.D.n:
            if v == target:
                return True
            a = self.out[v]
            v = self.D.arcs[a].head if a != -1 else -1
            seen += 1
        return False

    def addable(self, i: int) -> bool:
        a = self.D.arcs[i]
        k = self.kind
        if k in _MATCH_KINDS:
            return self.out[a.tail] == self.inc[a.tail] == self.out[a.head] == self.inc[a.head] == -1
        if self.out[a.tail] != -1:
            return False
        if k in _PATH_KINDS and self.inc[a.head] != -1:
            return False
        return not self._reaches(a.head, a.tail)

    def add(self, i: int) -> None:
        a = self.D.arcs[i]
        self.out[a.tail] = i
        self.inc[a.head] = i if self.kind in _PATH_KINDS or self.kind in _MATCH_KINDS else self.inc[a.head]
        self.chosen.append(i)

    def pop(self) -> None:
        i = self.chosen.pop()
        a = self.D.arcs[i]
        self.out[a.tail] = -1
        if self.inc[a.head] == i:
            self.inc[a.head] = -1


def _shortest_cycle(D: Digraph, active: Sequence[int]) -> list[int] | None:
    """A shortest directed cycle (as arc ids) among the active arcs."""
    succ: dict[int, list[tuple[int, int]]] = {}
    for i in active:
        a = D.arcs[i]
        succ.setdefault(a.tail, []).append((a.head, i))
    best: list[int] | None = None
    for s in sorted(succ):
        parent: dict[int, tuple[int, int]] = {}
        queue = deque([s])
        dist = {s: 0}
        found = None
        while queue and found is None:
            v = queue.popleft()
            if best is not None and dist[v] + 1 >= len(best):
                break
            for h, i in succ.get(v, ()):
                if h == s:
                    found = (v, i)
                    break
                if h not in dist:
                    dist[h] = dist[v] + 1
                    parent[h] = (v, i)
                    queue.append(h)
        if found is not None:
            v, i = found
            cyc = [i]
            while v != s:
                pv, pi = parent[v]
                cyc.append(pi)
                v = pv
            cyc.reverse()
            if best is None or len(cyc) < len(best):
                best = cyc
                if len(best) <= 2:
                    break
    return best


def _hitting_search(
    D: Digraph,
    kind: ArcFamilyKind,
    candidates: Sequence[int],
    *,
    forced: Sequence[int] = (),
    bound: int | None = None,
    leaf: Callable[[list[int]], list[int] | None] | None = None,
) -> list[int] | None:
    """Search for a family-consistent arc set meeting every directed cycle.

    Starting from ``forced``, each step takes a shortest cycle of the
    remainder and branches on which of its arcs joins the family, excluding
    the arcs tried in earlier branches. Arcs that can no longer join must stay
    acyclic, which prunes dead branches early. ``leaf`` may reject or extend
    a hitting set (returning the completed family); ``bound`` limits its size.
    """
    st = _FamilyState(D, kind)
    allowed = set(candidates)
    for i in forced:
        if not st.addable(i):
            return None
        st.add(i)
    excluded: set[int] = set()
    m = D.m

    def rec() -> list[int] | None:
        in_f = set(st.chosen)
        rest = [i for i in range(m) if i not in in_f]
        dead = [i for i in rest if i in excluded or i not in allowed or not st.addable(i)]
        if not is_acyclic(D, dead):
            return None
        cyc = _shortest_cycle(D, rest)
        if cyc is None:
            if leaf is None:
                return list(st.chosen)
            return leaf(list(st.chosen))
        if bound is not None and len(st.chosen) >= bound:
            return None
        options = [i for i in cyc if i in allowed and i not in excluded and st.addable(i)]
        options.sort()
        newly: list[int] = []
        found = None
        for i in options:
            st.add(i)
            found = rec()
            st.pop()
            if found is not None:
                break
            excluded.add(i)
            newly.append(i)
        for i in newly:
            excluded.discard(i)
        return found

    return rec()


def _complete_perfect_matching(D: Digraph, chosen: list[int]) -> list[int] | None:
    covered = [False] * D.n
    for i in chosen:
        covered[D.arcs[i].tail] = covered[D.arcs[i].head] = True
    incident: list[list[int]] = [[] for _ in range(D.n)]
    for i, a in enumerate(D.arcs):
        incident[a.tail].append(i)
        incident[a.head].append(i)
    picked = list(chosen)

    def rec() -> bool:
        v = next((u for u in range(D.n) if not covered[u]), None)
        if v is None:
            return True
        seen_other: set[int] = set()
        for i in incident[v]:
            a = D.arcs[i]
            other = a.head if a.tail == v else a.tail
            if covered[other] or other in seen_other:
                continue
            seen_other.add(other)
            covered[v] = covered[other] = True
            picked.append(i)
            if rec():
                return True
            picked.pop()
            covered[v] = covered[other] = False
        return False

    return picked if rec() else None


def _complete_in_arborescence(D: Digraph, chosen: list[int]) -> list[int] | None:
    n = D.n
    if n == 0:
        return None
    out = [-1] * n
    for i in chosen:
        out[D.arcs[i].tail] = i

    def root_of(v: int) -> int:
        while out[v] != -1:
            v = D.arcs[out[v]].head
        return v

    roots = sorted({root_of(v) for v in range(n)})
    for R in roots:
        tree = [root_of(v) for v in range(n)]
        joined = {v for v in range(n) if tree[v] == R}
        extra: list[int] = []
        progress = True
        while progress:
            progress = False
            for rho in roots:
                if rho in joined:
                    continue
                arc = next((i for i in D.out_arcs[rho] if D.arcs[i].head in joined), None)
                if arc is not None:
                    extra.append(arc)
                    joined |= {v for v in range(n) if tree[v] == rho}
                    progress = True
        if len(joined) == n:
            return list(chosen) + extra
    return None


def _segments(D: Digraph, chosen: list[int]) -> tuple[list[list[int]], list[int], list[int]]:
    out = [-1] * D.n
    inc = [-1] * D.n
    for i in chosen:
        out[D.arcs[i].tail] = i
        inc[D.arcs[i].head] = i
    segs = []
    for v in range(D.n):
        if inc[v] == -1:
            seg = [v]
            while out[seg[-1]] != -1:
                seg.append(D.arcs[out[seg[-1]]].head)
            segs.append(seg)
    return segs, out, inc


def _complete_hamiltonian(D: Digraph, chosen: list[int]) -> list[int] | None:
    segs, _, _ = _segments(D, chosen)
    r = len(segs)
    if r == 0:
        return list(chosen)
    link: dict[tuple[int, int], int] = {}
    for i, a in enumerate(D.arcs):
        for x in range(r):
            if segs[x][-1] == a.tail:
                for y in range(r):
                    if y != x and segs[y][0] == a.head and (x, y) not in link:
                        link[(x, y)] = i
    full = (1 << r) - 1
    # reach[mask][x]: predecessor segment in a chain over mask ending at x
    reach: list[dict[int, int]] = [dict() for _ in range(1 << r)]
    for x in range(r):
        reach[1 << x][x] = -1
    for mask in range(1, 1 << r):
        for x in list(reach[mask]):
            for y in range(r):
                if not mask >> y & 1 and (x, y) in link:
                    reach[mask | 1 << y].setdefault(y, x)
    if not reach[full]:
        return None
    x = min(reach[full])
    mask = full
    extra = []
    while True:
        p = reach[mask][x]
        if p == -1:
            break
        extra.append(link[(p, x)])
        mask &= ~(1 << x)
        x = p
    return list(chosen) + extra


def _complete_dipath(D: Digraph, chosen: list[int]) -> list[int] | None:
    if not chosen:
        return []
    _, out, inc = _segments(D, chosen)
    need = len(chosen)
    visited = [False] * D.n
    path_arcs: list[int] = []

    def rec(v: int, used: int) -> bool:
        if used == need:
            return True
        if out[v] != -1:
            h = D.arcs[out[v]].head
            if visited[h]:
                return False
            visited[h] = True
            path_arcs.append(out[v])
            if rec(h, used + 1):
                return True
            path_arcs.pop()
            visited[h] = False
            return False
        tried: set[int] = set()
        for i in D.out_arcs[v]:
            h = D.arcs[i].head
            if visited[h] or inc[h] != -1 or h in tried:
                continue
            tried.add(h)
            visited[h] = True
            path_arcs.append(i)
            if rec(h, used):
                return True
            path_arcs.pop()
            visited[h] = False
        return False

    for s in range(D.n):
        if inc[s] != -1:
            continue
        visited[s] = True
        if rec(s, 0):
            return path_arcs
        visited[s] = False
    return None


_COMPLETIONS: dict[ArcFamilyKind, Callable[[Digraph, list[int]], list[int] | None]] = {
    ArcFamilyKind.PERFECT_MATCHING: _complete_perfect_matching,
    ArcFamilyKind.IN_ARBORESCENCE: _complete_in_arborescence,
    ArcFamilyKind.HAMILTONIAN_DIPATH: _complete_hamiltonian,
    ArcFamilyKind.DIPATH: _complete_dipath,
}


def oracle_partition(D: Digraph, kind: ArcFamilyKind | str, *, cap: int | None = None) -> ArcPartition | Infeasible:
    """Split the arcs into a member of ``kind`` and an acyclic rest, if possible.

    Only arcs on directed cycles are branched on; the cap applies to their
    number. For families that are not closed under taking subsets (perfect
    matchings, in-arborescences, dipaths, Hamiltonian dipaths) each cycle-hitting
    set found is checked for a completion to a full member using any arcs,
    which keeps the rest acyclic.
    """
    kind = ArcFamilyKind.parse(kind)
    if kind is ArcFamilyKind.ACYCLIC:
        return ArcPartition.from_family(D, left_arcs(D, range(D.n)), kind)
    cand = cyclic_arcs(D)
    limit = config.arc_cap(cap)
    if len(cand) > limit:
        raise CapExceeded("arcs on directed cycles", len(cand), limit)
    completion = _COMPLETIONS.get(kind)
    leaf = None if completion is None else (lambda ch: completion(D, ch))
    fam = _hitting_search(D, kind, cand, leaf=leaf)
    if fam is None:
        return Infeasible(None, f"no {kind.value} meets every directed cycle")
    if not classify_arc_set(D, fam, kind) or not is_acyclic(D, [i for i in range(D.m) if i not in set(fam)]):
        raise AssertionError("partition search produced an invalid partition")
    return ArcPartition.from_family(D, fam, kind)


def oracle_min_inbranching_cover(D: Digraph, *, cap: int | None = None) -> tuple[int, tuple[int, ...]] | None:
    """Smallest in-branching meeting every directed cycle, lexicographically first among the smallest.

    ``None`` when no in-branching meets every cycle.
    """
    cand = cyclic_arcs(D)
    limit = config.arc_cap(cap)
    if len(cand) > limit:
        raise CapExceeded("arcs on directed cycles", len(cand), limit)
    kind = ArcFamilyKind.IN_BRANCHING
    some = _hitting_search(D, kind, cand)
    if some is None:
        return None
    size = 0
    while size < len(some) and _hitting_search(D, kind, cand, bound=size) is None:
        size += 1
    chosen: list[int] = []
    for _ in range(size):
        for a in cand:
            if chosen and a <= chosen[-1]:
                continue
            allowed = [i for i in cand if i > a]
            if _hitting_search(D, kind, allowed, forced=chosen + [a], bound=size) is not None:
                chosen.append(a)
                break
    return size, tuple(chosen)


def brute_force_min_inbranching_cover(D: Digraph) -> tuple[int, tuple[int, ...]] | None:
    """Plain subset enumeration, for cross-checking on tiny digraphs."""
    cand = cyclic_arcs(D)
    for size in range(len(cand) + 1):
        for combo in combinations(cand, size):
            rest = [i for i in range(D.m) if i not in combo]
            if classify_arc_set(D, combo, ArcFamilyKind.IN_BRANCHING) and is_acyclic(D, rest):
                return size, combo
    return None


def brute_force_partition_exists(D: Digraph, kind: ArcFamilyKind | str) -> bool:
    """Whether some arc subset of kind ``kind`` leaves an acyclic rest (all 2^m subsets)."""
    kind = ArcFamilyKind.parse(kind)
    for mask in range(1 << D.m):
        fam = [i for i in range(D.m) if mask >> i & 1]
        if classify_arc_set(D, fam, kind) and is_acyclic(D, [i for i in range(D.m) if not mask >> i & 1]):
            return True
    return False


def check_vertices(D: Digraph, vs: Iterable[int]) -> None:
    for v in vs:
        if not 0 <= v < D.n:
            raise IndexOutOfRange(f"vertex {v} outside [0, {D.n})")


# ---------------------------------------------------------------------------
# prefix search for larger bounded instances


def oracle_bounded_search(
    D: Digraph,
    f: object = None,
    g: object = None,
    weights: Sequence[object] | None = None,
    *,
    cap: int | None = None,
) -> SolveResult:
    """Exhaustive left-to-right search over prefix sets for ``f <= delta_left_w <= g``.

    Failed prefix sets are memoised, so the work is bounded by the number of
    reachable prefixes rather than ``n!``. A prefix dies as soon as an unplaced
    vertex with non-negative arc weights already exceeds its upper bound, or
    can no longer reach its lower bound. The first order found is the
    lexicographically first feasible one. Negative weights are allowed.
    """
    n = D.n
    limit = config.DEFAULT_SEARCH_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded("prefix search size n", n, limit)
    w = _weights_or_none(weights, D.m) or D.weights
    lo = bound_vector(f, n, NEG_INF)
    hi = bound_vector(g, n, POS_INF)
    # pair[v][u]: total weight of arcs v -> u
    pair = [[0] * n for _ in range(n)]
    for i, a in enumerate(D.arcs):
        pair[a.tail][a.head] += w[i]
    monotone = [all(w[i] >= 0 for i in D.out_arcs[v]) for v in range(n)]
    failed: set[int] = set()
    order: list[int] = []
    full = (1 << n) - 1

    def load(v: int, mask: int) -> Number:
        return sum(pair[v][u] for u in range(n) if mask >> u & 1)

    def alive(mask: int) -> bool:
        for v in range(n):
            if mask >> v & 1:
                continue
            cur = load(v, mask)
            if monotone[v] and cur > hi[v]:
                return False
            best = cur + sum(pair[v][u] for u in range(n) if u != v and not mask >> u & 1 and pair[v][u] > 0)
            if best < lo[v]:
                return False
        return True

    def rec(mask: int) -> bool:
        if mask == full:
            return True
        if mask in failed:
            return False
        for v in range(n):
            if mask >> v & 1:
                continue
            x = load(v, mask)
            if lo[v] <= x <= hi[v]:
                nxt = mask | 1 << v
                if nxt not in failed and alive(nxt):
                    order.append(v)
                    if rec(nxt):
                        return True
                    order.pop()
        failed.add(mask)
        return False

    if alive(0) and rec(0):
        return Feasible(tuple(order), D, weights=None if weights is None else w)
    return Infeasible(None, "no order satisfies the bounds")
