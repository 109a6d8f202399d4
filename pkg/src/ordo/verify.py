"""Independent re-validation of claimed orders, partitions and infeasibility witnesses.

Only the degree arithmetic of :mod:`ordo.digraph` is used here; the solvers are never consulted.
Witness types without a polynomial certificate fall back to the exhaustive
oracle when the instance is small enough.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from . import config
from .digraph import (
    NEG_INF,
    POS_INF,
    ArcFamilyKind,
    Digraph,
    Number,
    bound_vector,
    check_order,
    classify_arc_set,
    degree_profile,
    in_degree_from,
    induced_min_outdegree,
    is_acyclic,
    left_arcs,
    parse_extended,
    positions,
)
from .errors import MalformedClaim, OrdoError
from .families import certificate_conditions, is_st_dipath_system, separates
from .formats import witness_from_json
from .results import CutSet, DegreeDeficit, InducedSet, StuckSet, SumMismatch


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def as_json(self) -> dict[str, object]:
        return {
            "valid": self.valid,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
        }


def _vec(params: Mapping[str, Any], key: str, n: int, default: Number) -> list[Number]:
    return bound_vector(params.get(key), n, default)


def _holes(spec: object, n: int) -> list[Number | None]:
    if spec is None:
        return [None] * n
    if isinstance(spec, Mapping):
        out: list[Number | None] = [None] * n
        for k, v in spec.items():
            out[int(k)] = None if v is None else parse_extended(v)
        return out
    vals = list(spec)  # type: ignore[arg-type]
    if len(vals) != n:
        raise MalformedClaim(f"{len(vals)} bounds for {n} vertices")
    return [None if x is None else parse_extended(x) for x in vals]


def _weights(D: Digraph, params: Mapping[str, Any]) -> tuple[Number, ...]:
    w = params.get("weights")
    if w is None:
        return D.weights
    if len(w) != D.m:
        raise MalformedClaim(f"{len(w)} weights for {D.m} arcs")
    return tuple(parse_extended(x) for x in w)


# ---------------------------------------------------------------------------
# feasible claims


def check_order_bounds(rep: VerifyReport, D: Digraph, order: Sequence[int], problem: str, params: Mapping[str, Any]) -> None:
    n = D.n
    prof = degree_profile(D, order, _weights(D, params))
    dl, dr, rr = prof.delta_left_w, prof.delta_left, prof.rho_right
    if problem in ("upper", "lower", "bounds", "precedence"):
        f = _vec(params, "f", n, NEG_INF)
        g = _vec(params, "g", n, POS_INF)
        bad = [v for v in range(n) if not f[v] <= dl[v] <= g[v]]
        rep.add("left-outdegree bounds", not bad, f"violated at {bad}" if bad else "")
        if problem == "precedence":
            pos = positions(order)
            wrong = [(u, v) for u, v in params.get("prec", []) if pos[u] > pos[v]]
            rep.add("precedence", not wrong, f"violated pairs {wrong}" if wrong else "")
    elif problem == "mixed":
        f = _holes(params.get("f"), n)
        g = _holes(params.get("g"), n)
        bad = [
            v
            for v in range(n)
            if (f[v] is not None and dl[v] < f[v]) or (g[v] is not None and dl[v] > g[v])  # type: ignore[operator]
        ]
        rep.add("per-vertex bounds", not bad, f"violated at {bad}" if bad else "")
    elif problem in ("out-upper-in-lower", "out-lower-in-upper", "exact"):
        if problem == "exact":
            fd = gd = _vec(params, "m_delta", n, 0)
            fr = gr = _vec(params, "m_rho", n, 0)
        else:
            fd = _vec(params, "f_delta", n, NEG_INF)
            gd = _vec(params, "g_delta", n, POS_INF)
            fr = _vec(params, "f_rho", n, NEG_INF)
            gr = _vec(params, "g_rho", n, POS_INF)
        bad = [v for v in range(n) if not (fd[v] <= dr[v] <= gd[v] and fr[v] <= rr[v] <= gr[v])]
        rep.add("left-outdegree and right-indegree bounds", not bad, f"violated at {bad}" if bad else "")
    elif problem == "d-distance":
        d = int(params["d"])
        g = _vec(params, "g", n, POS_INF)
        pos = positions(order)
        w = _weights(D, params)
        load: list[Number] = [0] * n
        for i, a in enumerate(D.arcs):
            if 0 < pos[a.tail] - pos[a.head] <= d:
                load[a.tail] += w[i]
        bad = [v for v in range(n) if not load[v] <= g[v]]
        rep.add(f"{d}-distance bounds", not bad, f"violated at {bad}" if bad else "")
    elif problem == "minmax":
        value = parse_extended(params["value"]) if "value" in params else None
        worst = max(dl, default=0)
        rep.add("reported value", value is None or worst == value, f"order attains {worst}, report says {value}")
        # the prefix ending at the rightmost maximiser must be at least that dense
        p = max((i for i, v in enumerate(order) if dl[v] == worst), default=-1)
        if p >= 0:
            S = set(order[: p + 1])
            mins = induced_min_outdegree(D, S, _weights(D, params))
            rep.add("optimality certificate", all(x >= worst for x in mins.values()), f"prefix {sorted(S)}")
    else:
        raise MalformedClaim(f"no bound check for problem {problem!r}")


def check_order_family(rep: VerifyReport, D: Digraph, order: Sequence[int], problem: str, params: Mapping[str, Any]) -> None:
    n = D.n
    left = left_arcs(D, order)
    prof = degree_profile(D, order)
    if problem == "in-branching":
        ok = classify_arc_set(D, left, ArcFamilyKind.IN_BRANCHING)
        roots = [int(r) for r in params.get("roots", [])]
        bad = [r for r in roots if prof.delta_left[r] != 0]
        rep.add("left arcs form an in-branching", ok)
        rep.add("forced roots", not bad, f"non-roots {bad}" if bad else "")
    elif problem == "st-dipaths":
        rep.add("left arcs are disjoint S-T dipaths", is_st_dipath_system(D, left, params["S"], params["T"]))
    elif problem == "ham-dipath":
        ok = classify_arc_set(D, left, ArcFamilyKind.HAMILTONIAN_DIPATH)
        rep.add("left arcs form a Hamiltonian dipath", ok)
        if params.get("s") is not None and n > 1:
            s, t = int(params["s"]), int(params["t"])
            rep.add("endpoints", order[-1] == s and order[0] == t, f"order runs {order[-1]} .. {order[0]}")
    elif problem == "dipaths":
        k = int(params["k"])
        ok = classify_arc_set(D, left, ArcFamilyKind.DISJOINT_DIPATHS)
        starts = sum(1 for v in range(n) if prof.delta_left[v] == 1 and prof.rho_right[v] == 0)
        rep.add("left arcs are disjoint dipaths", ok)
        rep.add("dipath count", starts == k, f"{starts} dipaths, expected {k}")
    elif problem == "in-arb-out-arb":
        r = int(params["root"])
        right = [i for i in range(D.m) if i not in set(left)]
        ok_in = classify_arc_set(D, left, ArcFamilyKind.IN_ARBORESCENCE) and prof.delta_left[r] == 0
        ok_out = classify_arc_set(D.reverse(), right, ArcFamilyKind.IN_ARBORESCENCE) and prof.rho_left[r] == 0
        rep.add("left arcs form an in-arborescence rooted at r", ok_in)
        rep.add("right arcs form an out-arborescence rooted at r", ok_out)
    elif problem in {k.value for k in ArcFamilyKind}:
        rep.add(f"left arcs form a {problem}", classify_arc_set(D, left, problem))
    else:
        raise MalformedClaim(f"no family check for problem {problem!r}")


def check_partition(rep: VerifyReport, D: Digraph, family: Sequence[int], kind: str) -> None:
    fam = sorted(set(int(i) for i in family))
    bad = [i for i in fam if not 0 <= i < D.m]
    if bad:
        rep.add("arc ids", False, f"unknown arcs {bad}")
        return
    rest = [i for i in range(D.m) if i not in set(fam)]
    rep.add(f"family side is a {kind}", classify_arc_set(D, fam, kind))
    rep.add("remaining arcs are acyclic", is_acyclic(D, rest))


# ---------------------------------------------------------------------------
# infeasibility claims


def _induced_set(rep: VerifyReport, D: Digraph, w: InducedSet, problem: str, params: Mapping[str, Any]) -> None:
    n = D.n
    Vp = set(w.vertices)
    if not Vp or any(not 0 <= v < n for v in Vp):
        rep.add("induced set", False, "empty or out of range")
        return
    weights = _weights(D, params)
    if problem == "in-branching":
        roots = set(int(r) for r in params.get("roots", []))
        g = [0 if v in roots else 1 for v in range(n)]
        weights = (1,) * D.m
    else:
        g = _vec(params, "g", n, POS_INF)
    if w.side == "upper":
        inner = induced_min_outdegree(D, Vp, weights)
        bad = [v for v in sorted(Vp) if not inner[v] > g[v]]
        rep.add("every member exceeds g inside the set", not bad, f"fails at {bad}" if bad else "")
    elif w.side == "lower":
        f = _vec(params, "f", n, NEG_INF)
        outside = frozenset(range(n)) - Vp
        bad = []
        for v in sorted(Vp):
            out = sum((weights[i] for i in D.out_arcs[v] if D.arcs[i].head in outside), 0)
            if not out < f[v]:
                bad.append(v)
        rep.add("every member falls short of f outside the set", not bad, f"fails at {bad}" if bad else "")
    else:
        rep.add("induced set side", False, f"unknown side {w.side!r}")


def _exact_vectors(D: Digraph, problem: str, params: Mapping[str, Any]) -> tuple[list[Number], list[Number]]:
    n = D.n
    if problem == "in-arb-out-arb":
        r = int(params["root"])
        md: list[Number] = [0 if v == r else 1 for v in range(n)]
        mr: list[Number] = [D.indegree[v] - (v != r) for v in range(n)]
        return md, mr
    return _vec(params, "m_delta", n, 0), _vec(params, "m_rho", n, 0)


def _stuck_set(rep: VerifyReport, D: Digraph, w: StuckSet, problem: str, params: Mapping[str, Any]) -> None:
    n = D.n
    Vp = frozenset(w.vertices)
    if not Vp or any(not 0 <= v < n for v in Vp):
        rep.add("stuck set", False, "empty or out of range")
        return
    outside = frozenset(range(n)) - Vp
    if problem == "st-dipaths":
        conds = certificate_conditions(D, Vp, params["S"], params["T"])
        rep.add("certificate conditions", all(conds), f"conditions {conds}")
    elif problem in ("out-upper-in-lower", "exact") or (problem == "in-arb-out-arb" and params.get("root") is not None):
        if problem == "out-upper-in-lower":
            gd = _vec(params, "g_delta", n, POS_INF)
            fr = _vec(params, "f_rho", n, NEG_INF)
        else:
            gd, fr = _exact_vectors(D, problem, params)
        inner = induced_min_outdegree(D, Vp, (1,) * D.m)
        bad = [v for v in sorted(Vp) if not (inner[v] > gd[v] or in_degree_from(D, v, outside) < fr[v])]
        rep.add("no member can be placed last", not bad, f"fails at {bad}" if bad else "")
    elif problem == "out-lower-in-upper":
        fd = _vec(params, "f_delta", n, NEG_INF)
        gr = _vec(params, "g_rho", n, POS_INF)
        bad = []
        for v in sorted(Vp):
            out_outside = sum(1 for i in D.out_arcs[v] if D.arcs[i].head in outside)
            in_inside = in_degree_from(D, v, Vp - {v})
            if not (out_outside < fd[v] or in_inside > gr[v]):
                bad.append(v)
        rep.add("no member can be placed first", not bad, f"fails at {bad}" if bad else "")
    elif problem == "precedence":
        g = _vec(params, "g", n, POS_INF)
        inner = induced_min_outdegree(D, Vp, _weights(D, params))
        succ = {(int(u), int(v)) for u, v in params.get("prec", [])}
        bad = [v for v in sorted(Vp) if not (inner[v] > g[v] or any((v, u) in succ for u in Vp))]
        rep.add("no member can be placed last", not bad, f"fails at {bad}" if bad else "")
    else:
        _oracle_fallback(rep, D, problem, params)


def _oracle_fallback(rep: VerifyReport, D: Digraph, problem: str, params: Mapping[str, Any]) -> None:
    from . import oracle

    if D.n > config.order_cap():
        rep.add("exhaustive confirmation", False, f"n = {D.n} exceeds the oracle cap; witness not checkable")
        return
    pred = _predicate(D, problem, params)
    found = oracle.oracle_order(D, pred).feasible
    rep.add("exhaustive confirmation", not found, "an order exists" if found else "no order exists")


def _predicate(D: Digraph, problem: str, params: Mapping[str, Any]) -> object:
    from . import oracle

    n = D.n
    w = params.get("weights")
    if problem in ("upper", "lower", "bounds"):
        return oracle.BoundsPredicate(params.get("f"), params.get("g"), w)
    if problem == "mixed":
        f = [NEG_INF if x is None else x for x in _holes(params.get("f"), n)]
        g = [POS_INF if x is None else x for x in _holes(params.get("g"), n)]
        return oracle.BoundsPredicate(f, g, w)
    if problem == "precedence":
        prec = [(int(u), int(v)) for u, v in params.get("prec", [])]
        g = _vec(params, "g", n, POS_INF)
        weights = _weights(D, params)

        def ok(D_: Digraph, order: tuple[int, ...]) -> bool:
            pos = positions(order)
            dl = degree_profile(D_, order, weights).delta_left_w
            return all(pos[u] < pos[v] for u, v in prec) and all(dl[x] <= g[x] for x in range(n))

        return ok
    if problem == "out-upper-in-lower":
        return oracle.SimultaneousPredicate(None, params.get("g_delta"), params.get("f_rho"), None)
    if problem == "out-lower-in-upper":
        return oracle.SimultaneousPredicate(params.get("f_delta"), None, None, params.get("g_rho"))
    if problem == "exact":
        return oracle.ExactPredicate(params.get("m_delta"), params.get("m_rho"))
    if problem == "d-distance":
        return oracle.DDistancePredicate(int(params["d"]), params.get("g"), w)
    if problem == "in-branching":
        return oracle.FamilyPredicate(ArcFamilyKind.IN_BRANCHING, roots=tuple(params.get("roots", [])))
    if problem == "st-dipaths":
        return oracle.FamilyPredicate(ArcFamilyKind.DISJOINT_DIPATHS, S=tuple(params["S"]), T=tuple(params["T"]))
    if problem == "ham-dipath":
        ends = None if params.get("s") is None else (int(params["s"]), int(params["t"]))
        return oracle.FamilyPredicate(ArcFamilyKind.HAMILTONIAN_DIPATH, endpoints=ends)
    if problem == "dipaths":
        return oracle.FamilyPredicate(ArcFamilyKind.DISJOINT_DIPATHS, count=int(params["k"]))
    if problem == "in-arb-out-arb":
        root = params.get("root")

        def ok2(D_: Digraph, order: tuple[int, ...]) -> bool:
            roots = range(D_.n) if root is None else [int(root)]
            for r in roots:
                sub = VerifyReport()
                check_order_family(sub, D_, order, "in-arb-out-arb", {"root": r})
                if sub.valid:
                    return True
            return False

        return ok2
    if problem in {k.value for k in ArcFamilyKind}:
        return oracle.FamilyPredicate(ArcFamilyKind.parse(problem))
    raise MalformedClaim(f"no exhaustive check for problem {problem!r}")


def check_witness(rep: VerifyReport, D: Digraph, witness: object, problem: str, params: Mapping[str, Any]) -> None:
    if witness is None:
        if problem == "partition":
            _partition_fallback(rep, D, params)
        else:
            _oracle_fallback(rep, D, problem, params)
    elif isinstance(witness, InducedSet):
        _induced_set(rep, D, witness, problem, params)
    elif isinstance(witness, CutSet):
        C = set(witness.vertices)
        k = len(params["S"])
        rep.add("cut smaller than k", len(C) < k and witness.k == k, f"|C| = {len(C)}, k = {k}")
        rep.add("cut separates S from T", separates(D, C, params["S"], params["T"]))
    elif isinstance(witness, StuckSet):
        _stuck_set(rep, D, witness, problem, params)
    elif isinstance(witness, SumMismatch):
        mdv, mrv = _exact_vectors(D, problem, params)
        md, mr = sum(mdv), sum(mrv)
        rep.add("prescribed totals differ", md != mr and (md, mr) == (witness.lhs, witness.rhs), f"{md} vs {mr}")
    elif isinstance(witness, DegreeDeficit):
        if params.get("root") is None:
            raise MalformedClaim("a degree-deficit witness needs the root")
        r = int(params["root"])
        bad = [v for v in witness.vertices if v == r or D.indegree[v] != 0]
        rep.add("members have no entering arc", bool(witness.vertices) and not bad, f"fails at {bad}" if bad else "")
    else:
        raise MalformedClaim(f"unsupported witness {witness!r}")


def _partition_fallback(rep: VerifyReport, D: Digraph, params: Mapping[str, Any]) -> None:
    from . import oracle

    kind = ArcFamilyKind.parse(params["kind"])
    try:
        found = oracle.oracle_partition(D, kind)
    except OrdoError as exc:
        rep.add("exhaustive confirmation", False, str(exc))
        return
    rep.add("exhaustive confirmation", not found.feasible, "a partition exists" if found.feasible else "no partition exists")


def check_activation_claim(rep: VerifyReport, D: Digraph, claim: Mapping[str, Any], params: Mapping[str, Any]) -> None:
    n = D.n
    tau = [int(t) for t in params["tau"]]
    seed = {int(v) for v in params.get("seed", [])}
    if len(tau) != n:
        raise MalformedClaim(f"{len(tau)} thresholds for {n} vertices")
    if claim.get("feasible"):
        order = check_order(n, [int(v) for v in claim["order"]])
        active: set[int] = set()
        late = []
        for v in order:
            if v not in seed and in_degree_from(D, v, frozenset(active)) < tau[v]:
                late.append(v)
            active.add(v)
        rep.add("each vertex meets its threshold when activated", not late, f"fails at {late}" if late else "")
    else:
        B = frozenset(int(v) for v in claim.get("blocked") or [])
        outside = frozenset(range(n)) - B
        bad = [v for v in sorted(B) if v in seed or in_degree_from(D, v, outside) >= tau[v]]
        rep.add("blocked set can never activate", bool(B) and not bad, f"fails at {bad}" if bad else "")


# ---------------------------------------------------------------------------
# entry point

_BOUND_PROBLEMS = {"bounds", "upper", "lower", "mixed", "out-upper-in-lower", "out-lower-in-upper", "exact", "d-distance", "minmax", "precedence"}


def verify_report(D: Digraph, claim: Mapping[str, Any]) -> VerifyReport:
    """Re-check a solver report (as emitted by the command line tool) against ``D``."""
    if not isinstance(claim, Mapping):
        raise MalformedClaim("claim must be a JSON object")
    params = claim.get("params")
    if not isinstance(params, Mapping) or "problem" not in params:
        raise MalformedClaim("claim carries no 'params.problem'")
    problem = str(params["problem"])
    rep = VerifyReport()
    feasible = claim.get("feasible")
    try:
        if problem == "activate" and isinstance(feasible, bool):
            check_activation_claim(rep, D, claim, params)
        elif feasible is True:
            if claim.get("order") is not None:
                try:
                    order = check_order(D.n, [int(v) for v in claim["order"]])
                except OrdoError as exc:
                    rep.add("order is a permutation", False, str(exc))
                    return rep
                if problem == "minmax" and claim.get("value") is not None:
                    params = {**params, "value": claim["value"]}
                if problem in _BOUND_PROBLEMS:
                    check_order_bounds(rep, D, order, problem, params)
                else:
                    check_order_family(rep, D, order, problem, params)
            part = claim.get("partition")
            if part is not None:
                check_partition(rep, D, part["family"], part["kind"])
            if claim.get("order") is None and part is None:
                raise MalformedClaim("feasible claim has neither an order nor a partition")
        elif feasible is False:
            w = claim.get("witness")
            try:
                witness = None if w is None else witness_from_json(w)
            except OrdoError as exc:
                raise MalformedClaim(str(exc)) from None
            check_witness(rep, D, witness, problem, params)
        else:
            raise MalformedClaim("claim has no boolean 'feasible'")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, OrdoError):
            raise
        raise MalformedClaim(f"claim is missing data: {exc}") from None
    return rep
