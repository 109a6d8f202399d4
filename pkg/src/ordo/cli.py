"""Command line interface: ``ordo <command> ...``.

Every command prints one JSON report (schema ``ordo/1``) and exits with 0 when
the answer is feasible, 1 when it is infeasible and 2 on usage, parse or
validation errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

from . import config, oracle
from .applications import (
    RankingProfile,
    bounded_disappointment_order,
    build_disappointment_digraph,
    build_penalty_digraph,
    check_activation,
    minmax_unfairness_order,
    unfairness,
)
from .bounded import (
    solve_d_distance_large,
    solve_lower,
    solve_minmax,
    solve_mixed_per_vertex,
    solve_upper,
    solve_upper_with_precedence,
)
from .digraph import ArcFamilyKind, Digraph, Number, format_extended, parse_extended
from .errors import MalformedClaim, OrdoError
from .families import (
    order_disjoint_dipaths_free_endpoints,
    order_hamiltonian_dipath,
    order_in_arb_out_arb,
    order_in_branching,
    order_k_disjoint_st_dipaths,
)
from .formats import (
    SCHEMA,
    dumps,
    format_dg,
    gadget_files,
    load_bounds_object,
    parse_bounds,
    parse_dg,
    parse_dimacs_cnf,
    parse_rankings_csv,
    parse_thresholds,
    report,
    write_atomic,
)
from .reductions import (
    GadgetInstance,
    gadget_1distance,
    gadget_3xsat3,
    gadget_distance_lift,
    gadget_hampath_split,
    gadget_independent_set,
    gadget_independent_set_negweight,
    gadget_matching_to_dipaths,
    gadget_nae3sat_matching,
    gadget_nae3sat_perfect_matching,
    gadget_split_arcs,
)
from .results import Feasible, Infeasible
from .simultaneous import solve_exact, solve_out_lower_in_upper, solve_out_upper_in_lower
from .verify import verify_report

SOLVE_PROBLEMS = ("upper", "lower", "minmax", "mixed", "out-upper-in-lower", "out-lower-in-upper", "exact", "d-distance")
FAMILY_PROBLEMS = ("in-branching", "st-dipaths", "ham-dipath", "dipaths", "in-arb-out-arb")
REDUCTIONS = ("is", "is-negw", "3xsat3", "nae-matching", "nae-perfect", "split-arcs", "match-to-dipaths", "hampath-split", "1dist", "dist-lift")


class UsageError(OrdoError):
    """Flag combinations argparse cannot express."""


# ---------------------------------------------------------------------------
# input helpers


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _ints(text: str | None) -> list[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _pairs(text: str | None) -> list[tuple[int, int]]:
    out = []
    for item in (text or "").replace(" ", "").split(","):
        if not item:
            continue
        u, sep, v = item.partition("<")
        if not sep:
            raise UsageError(f"precedence pairs look like 'u<v', got {item!r}")
        out.append((int(u), int(v)))
    return out


def _load_graph(args: argparse.Namespace, bounds_raw: Mapping[str, Any] | None = None) -> Digraph:
    default_w: Number = 1
    if bounds_raw and "w_default" in bounds_raw:
        default_w = parse_bounds({"w_default": bounds_raw["w_default"]}, 0)["w_default"]
    return parse_dg(_read_text(args.graph), default_w)


def _load_bounds(args: argparse.Namespace) -> dict[str, Any]:
    if getattr(args, "bounds", None) is None:
        return {}
    return dict(load_bounds_object(args.bounds))


def _weights(D: Digraph, bounds: Mapping[str, Any]) -> tuple[Number, ...] | None:
    w = bounds.get("weights")
    if w is None:
        return None
    if len(w) != D.m:
        raise UsageError(f"'weights' has {len(w)} entries for {D.m} arcs")
    return tuple(w)


def _fmt(vec: Sequence[Number | None] | None) -> list[object] | None:
    if vec is None:
        return None
    return [None if x is None else format_extended(x) for x in vec]


def _holes(spec: object, n: int) -> list[Number | None]:
    """Per-vertex one-sided bounds where ``null`` or a missing key means no bound."""
    if spec is None:
        return [None] * n
    if isinstance(spec, Mapping):
        out: list[Number | None] = [None] * n
        for k, v in spec.items():
            i = int(k)
            if not 0 <= i < n:
                raise UsageError(f"bound given for vertex {i} outside [0, {n})")
            out[i] = None if v is None else parse_extended(v)
        return out
    if not isinstance(spec, list) or len(spec) != n:
        raise UsageError(f"expected {n} per-vertex bounds")
    return [None if x is None else parse_extended(x) for x in spec]


# ---------------------------------------------------------------------------
# commands


def cmd_solve(args: argparse.Namespace) -> dict[str, object]:
    raw = _load_bounds(args)
    D = _load_graph(args, raw)
    n = D.n
    problem = args.problem
    params: dict[str, object] = {"problem": problem}
    if problem == "mixed":
        extra = set(raw) - {"f", "g", "w_default", "weights"}
        if extra:
            raise UsageError(f"mixed bounds take only f, g and weights, got {sorted(extra)}")
        fv, gv = _holes(raw.get("f"), n), _holes(raw.get("g"), n)
        b = parse_bounds({k: raw[k] for k in ("w_default", "weights") if k in raw}, n)
    else:
        b = parse_bounds(raw, n)
    w = _weights(D, b)
    if w is not None or "w_default" in b:
        params["weights"] = _fmt(w if w is not None else D.weights)
    value = None
    if problem in ("upper", "lower", "minmax"):
        if problem == "upper" and args.prec:
            prec = _pairs(args.prec)
            res = solve_upper_with_precedence(D, b.get("g"), prec, w)
            params.update(problem="precedence", prec=prec)
        elif problem == "upper":
            res = solve_upper(D, b.get("g"), w)
        elif problem == "lower":
            res = solve_lower(D, b.get("f"), w)
        else:
            order, value = solve_minmax(D, w)
            res = Feasible(order, D, w)
        params.update(f=_fmt(b.get("f")), g=_fmt(b.get("g")))
    elif problem == "mixed":
        res = solve_mixed_per_vertex(D, fv, gv, w)
        params.update(f=_fmt(fv), g=_fmt(gv))
    elif problem == "out-upper-in-lower":
        res = solve_out_upper_in_lower(D, b.get("g_delta"), b.get("f_rho"))
        params.update(g_delta=_fmt(b.get("g_delta")), f_rho=_fmt(b.get("f_rho")))
    elif problem == "out-lower-in-upper":
        res = solve_out_lower_in_upper(D, b.get("f_delta"), b.get("g_rho"))
        params.update(f_delta=_fmt(b.get("f_delta")), g_rho=_fmt(b.get("g_rho")))
    elif problem == "exact":
        md = b.get("m_delta", [0] * n)
        mr = b.get("m_rho", [0] * n)
        res = solve_exact(D, md, mr)
        params.update(m_delta=_fmt(md), m_rho=_fmt(mr))
    else:
        if args.d is None:
            raise UsageError("d-distance needs --d")
        res = solve_d_distance_large(D, b.get("g"), n - args.d)
        params.update(g=_fmt(b.get("g")), d=args.d)
    return report(f"solve {problem}", res, value=value, params=params)


def cmd_order_family(args: argparse.Namespace) -> dict[str, object]:
    D = _load_graph(args)
    problem = args.problem
    params: dict[str, object] = {"problem": problem}
    if problem == "in-branching":
        roots = _ints(args.roots)
        res = order_in_branching(D, roots)
        params["roots"] = roots
    elif problem == "st-dipaths":
        S, T = _ints(args.S), _ints(args.T)
        res = order_k_disjoint_st_dipaths(D, S, T)
        params.update(S=S, T=T)
    elif problem == "ham-dipath":
        if (args.s is None) != (args.t is None):
            raise UsageError("--s and --t go together")
        ends = None if args.s is None else (args.s, args.t)
        res = order_hamiltonian_dipath(D, ends)
        if isinstance(res, Feasible) and ends is None and D.n > 1:
            ends = (res.order[-1], res.order[0])
        params.update(s=None if ends is None else ends[0], t=None if ends is None else ends[1])
    elif problem == "dipaths":
        if args.k is None:
            raise UsageError("dipaths needs --k")
        res = order_disjoint_dipaths_free_endpoints(D, args.k)
        params["k"] = args.k
        note = {"convention": "each dipath counted by --k has at least one arc"}
        if isinstance(res, Infeasible):
            note["reason"] = res.reason
        return report(f"order-family {problem}", res, params=params, diagnostics=note)
    else:
        res = order_in_arb_out_arb(D, args.root)
        root = res.extras.get("root", args.root) if isinstance(res, Feasible) else args.root
        params["root"] = root
    return report(f"order-family {problem}", res, params=params)


def cmd_partition(args: argparse.Namespace) -> dict[str, object]:
    D = _load_graph(args)
    kind = ArcFamilyKind.parse(args.kind)
    if kind is ArcFamilyKind.IN_BRANCHING:
        roots = _ints(args.roots)
        res = order_in_branching(D, roots)
        params: dict[str, object] = {"problem": "in-branching", "roots": roots}
    else:
        res = oracle.oracle_partition(D, kind, cap=args.cap)
        params = {"problem": "partition", "kind": kind.value}
    return report(f"partition {kind.value}", res, params=params)


def cmd_oracle(args: argparse.Namespace) -> dict[str, object]:
    if args.query == "caps":
        return {
            "schema": SCHEMA,
            "command": "oracle caps",
            "feasible": True,
            "caps": {
                "order_vertices": config.order_cap(),
                "partition_cyclic_arcs": config.arc_cap(),
                "mixed_search_vertices": config.DEFAULT_MIXED_CAP,
                "prefix_search_vertices": config.DEFAULT_SEARCH_CAP,
                "d_distance_k": config.DEFAULT_DDIST_K_CAP,
                "dipath_k": config.DEFAULT_DIPATH_K_CAP,
            },
            "diagnostics": {"env": "ORDO_ORACLE_CAP overrides order_vertices"},
        }
    raw = _load_bounds(args)
    D = _load_graph(args, raw)
    cap = args.cap
    if args.query == "order":
        b = parse_bounds(raw, D.n)
        w = _weights(D, b)
        res = oracle.oracle_order(D, oracle.BoundsPredicate(b.get("f"), b.get("g"), w), cap=cap)
        params: dict[str, object] = {"problem": "bounds", "f": _fmt(b.get("f")), "g": _fmt(b.get("g"))}
        if w is not None or "w_default" in b:
            params["weights"] = _fmt(w if w is not None else D.weights)
        return report("oracle order", res, params=params)
    if args.query == "partition":
        if args.kind is None:
            raise UsageError("oracle partition needs --kind")
        kind = ArcFamilyKind.parse(args.kind)
        res = oracle.oracle_partition(D, kind, cap=cap)
        return report("oracle partition", res, params={"problem": "partition", "kind": kind.value})
    if args.query == "min-cover":
        found = oracle.oracle_min_inbranching_cover(D, cap=cap)
        if found is None:
            return report("oracle min-cover", Infeasible(None, "no in-branching meets every directed cycle"))
        size, arcs = found
        return report("oracle min-cover", None, feasible=True, order=None, value=size, arcs=list(arcs))
    if args.query == "min-fas":
        size, order = oracle.oracle_min_feedback_arc_set(D, cap=cap)
        return report("oracle min-fas", Feasible(order, D), value=size)
    if args.query == "minmax":
        order, value = oracle.oracle_minmax(D, _weights(D, parse_bounds(raw, D.n)), cap=cap)
        return report("oracle minmax", Feasible(order, D), value=value, params={"problem": "minmax"})
    if args.query == "decreasing-min":
        b = parse_bounds(raw, D.n)
        found = oracle.oracle_decreasing_min(D, b.get("g", 1), _weights(D, b), cap=cap)
        if found is None:
            return report("oracle decreasing-min", Infeasible(None, "no order meets the bounds"))
        order, vec = found
        return report("oracle decreasing-min", Feasible(order, D), value=list(vec))
    obj = oracle.LexObjective(oracle.LexSide(args.side), oracle.LexSense(args.sense))
    order, vec = oracle.oracle_lex(D, obj, cap=cap)
    return report("oracle lex", Feasible(order, D), value=list(vec))


def _gadget_report(name: str, inst: GadgetInstance | Digraph, prefix: str | None) -> dict[str, object]:
    if isinstance(inst, Digraph):
        files = {"dg": format_dg(inst)}
        D = inst
        meta: dict[str, object] = {}
    else:
        files = gadget_files(inst)
        D = inst.digraph
        meta = dict(inst.meta)
    out: dict[str, object] = {
        "schema": SCHEMA,
        "command": f"reduce {name}",
        "feasible": True,
        "vertices": D.n,
        "arcs": D.m,
        "meta": meta,
        "diagnostics": {},
    }
    if prefix is None:
        out["files"] = files
    else:
        names = {"dg": f"{prefix}.dg", "bounds": f"{prefix}.bounds.json", "tags": f"{prefix}.tags.json"}
        for key, text in files.items():
            write_atomic(names[key], text)
        out["files"] = {k: names[k] for k in files}
    return out


def cmd_reduce(args: argparse.Namespace) -> dict[str, object]:
    name = args.construction
    if name in ("3xsat3", "nae-matching", "nae-perfect"):
        if args.cnf is None:
            raise UsageError(f"{name} needs --cnf")
        F = parse_dimacs_cnf(_read_text(args.cnf))
        build = {"3xsat3": gadget_3xsat3, "nae-matching": gadget_nae3sat_matching, "nae-perfect": gadget_nae3sat_perfect_matching}
        return _gadget_report(name, build[name](F), args.out_prefix)
    if args.graph is None:
        raise UsageError(f"{name} needs --graph")
    D = _load_graph(args)
    if name in ("is", "is-negw"):
        if args.k is None:
            raise UsageError(f"{name} needs --k")
        inst = gadget_independent_set_negweight(D, args.k) if name == "is-negw" else gadget_independent_set(D, args.k, simple=args.simple)
        return _gadget_report(name, inst, args.out_prefix)
    if name == "dist-lift":
        if args.d is None or args.l is None:
            raise UsageError("dist-lift needs --d and --l")
        return _gadget_report(name, gadget_distance_lift(D, args.d, args.l), args.out_prefix)
    build2 = {
        "split-arcs": gadget_split_arcs,
        "match-to-dipaths": gadget_matching_to_dipaths,
        "hampath-split": gadget_hampath_split,
        "1dist": gadget_1distance,
    }
    return _gadget_report(name, build2[name](D), args.out_prefix)


def cmd_rank(args: argparse.Namespace) -> dict[str, object]:
    profile = parse_rankings_csv(_read_text(args.rankings))
    names = list(profile.names or ())
    if args.mode == "penalty":
        D = build_penalty_digraph(profile)
        return {"schema": SCHEMA, "command": "rank penalty", "feasible": True, "names": names, "dg": format_dg(D), "diagnostics": {}}
    if args.mode == "minmax":
        order, value = minmax_unfairness_order(profile)
        D = build_penalty_digraph(profile)
        return report(
            "rank minmax",
            Feasible(order, D),
            value=value,
            names=names,
            ranking=[names[v] for v in order],
            unfairness=unfairness(profile, order),
            params={"problem": "minmax"},
        )
    D = build_disappointment_digraph(profile)
    g = _disappointment_caps(args, profile)
    res = bounded_disappointment_order(profile, g)
    extra: dict[str, object] = {"names": names, "params": {"problem": "upper", "g": _fmt(g)}}
    if isinstance(res, Feasible):
        extra["ranking"] = [names[v] for v in res.order]
    return report("rank disappointment", res, **extra)


def _disappointment_caps(args: argparse.Namespace, profile: RankingProfile) -> list[Number]:
    n = profile.num_candidates
    if args.bounds is not None:
        return parse_bounds(load_bounds_object(args.bounds), n).get("g") or [parse_extended("inf")] * n
    if args.g is None:
        raise UsageError("rank disappointment needs --g or --bounds")
    return [parse_extended(args.g)] * n


def cmd_activate(args: argparse.Namespace) -> dict[str, object]:
    D = _load_graph(args)
    net = parse_thresholds(json.loads(_read_text(args.thresholds)), D)
    act = check_activation(net)
    params = {"problem": "activate", "tau": list(net.tau), "seed": sorted(net.seed)}
    return report(
        "activate",
        None,
        feasible=act.fully_activates,
        order=None if act.order is None else list(act.order),
        blocked=None if act.blocked is None else list(act.blocked),
        params=params,
    )


def cmd_verify(args: argparse.Namespace) -> dict[str, object]:
    if args.claim is not None:
        try:
            claim = json.loads(_read_text(args.claim))
        except json.JSONDecodeError as exc:
            raise MalformedClaim(f"claim is not valid JSON: {exc}") from None
        D = _load_graph(args)
    else:
        claim = _claim_from_flags(args)
        D = _load_graph(args)
    rep = verify_report(D, claim)
    return {"schema": SCHEMA, "command": "verify", **rep.as_json(), "diagnostics": {}}


def _claim_from_flags(args: argparse.Namespace) -> dict[str, object]:
    raw = _load_bounds(args)
    params: dict[str, object] = {k: v for k, v in raw.items() if k != "w_default"}
    if args.roots is not None:
        params["roots"] = _ints(args.roots)
    if args.S is not None or args.T is not None:
        params.update(S=_ints(args.S), T=_ints(args.T))
    for key in ("s", "t", "k", "root", "d"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    if args.prec:
        params["prec"] = _pairs(args.prec)
    if args.witness is not None:
        text = args.witness if args.witness.lstrip().startswith("{") else _read_text(args.witness)
        if not args.problem:
            raise UsageError("--witness needs --problem")
        params["problem"] = args.problem
        return {"feasible": False, "witness": json.loads(text), "params": params}
    if args.partition is not None:
        if args.kind is None:
            raise UsageError("--partition needs --kind")
        params["problem"] = "partition"
        return {"feasible": True, "partition": {"family": _ints(args.partition), "kind": ArcFamilyKind.parse(args.kind).value}, "params": params}
    if args.order is None:
        raise UsageError("verify needs --claim, --order, --partition or --witness")
    if args.problem:
        params["problem"] = args.problem
    elif args.kind:
        params["problem"] = args.kind
    elif raw:
        params["problem"] = "bounds"
    else:
        raise UsageError("--order needs --kind, --bounds or --problem")
    return {"feasible": True, "order": _ints(args.order), "params": params}


def cmd_gen(args: argparse.Namespace) -> dict[str, object] | str:
    """Seeded random digraph: each ordered pair becomes an arc with probability ``p``.

    The generator is Python's ``random.Random`` (Mersenne Twister) seeded with
    ``--seed``, so the same flags give the same file everywhere.
    """
    rng = random.Random(args.seed)
    n = args.n
    if n < 0 or not 0 <= args.p <= 1:
        raise UsageError("need n >= 0 and 0 <= p <= 1")
    arcs: list[tuple[int, int, int]] = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < args.p:
                w = 1 if args.max_weight <= 1 else rng.randint(0, args.max_weight)
                arcs.append((u, v, w))
    D = Digraph(n, arcs)
    if args.bounds_out is not None:
        write_atomic(args.bounds_out, json.dumps(random_bounds(rng, D, args.problem)) + "\n")
    return format_dg(D)


def random_bounds(rng: random.Random, D: Digraph, problem: str) -> dict[str, object]:
    """Bounds drawn to be feasible about half of the time for ``problem``."""
    n = D.n
    out_deg, in_deg = D.outdegree, D.indegree
    wout = D.weighted_outdegree

    def upto(top: Number) -> object:
        if top == float("inf"):
            return "inf"
        return rng.randint(0, int(top)) if rng.random() < 0.85 else "inf"

    if problem in ("upper", "d-distance"):
        return {"g": [upto(wout[v]) for v in range(n)]}
    if problem == "lower":
        return {"f": [rng.randint(0, int(min(wout[v], 3))) if rng.random() < 0.9 else 0 for v in range(n)]}
    if problem == "minmax":
        return {}
    if problem == "mixed":
        f: list[object] = []
        g: list[object] = []
        for v in range(n):
            if rng.random() < 0.5:
                f.append(rng.randint(0, int(min(wout[v], 2))))
                g.append(None)
            else:
                f.append(None)
                g.append(upto(wout[v]))
        return {"f": f, "g": g}
    if problem == "out-upper-in-lower":
        return {"g_delta": [rng.randint(0, out_deg[v]) for v in range(n)], "f_rho": [rng.randint(0, in_deg[v]) for v in range(n)]}
    if problem == "out-lower-in-upper":
        return {"f_delta": [rng.randint(0, out_deg[v]) for v in range(n)], "g_rho": [rng.randint(0, in_deg[v]) for v in range(n)]}
    if problem == "exact":
        order = list(range(n))
        rng.shuffle(order)
        if rng.random() < 0.5:
            pos = {v: i for i, v in enumerate(order)}
            md = [0] * n
            mr = [0] * n
            for a in D.arcs:
                if pos[a.head] < pos[a.tail]:
                    md[a.tail] += 1
                    mr[a.head] += 1
            return {"m_delta": md, "m_rho": mr}
        return {"m_delta": [rng.randint(0, out_deg[v]) for v in range(n)], "m_rho": [rng.randint(0, in_deg[v]) for v in range(n)]}
    raise UsageError(f"no bounds generator for {problem!r}")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordo", description="Degree-bounded vertex orderings of digraphs.")
    p.add_argument("--out", help="write the report here (atomically) instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="bounded ordering problems")
    s.add_argument("problem", choices=SOLVE_PROBLEMS)
    s.add_argument("--graph", required=True, help=".dg file, or - for stdin")
    s.add_argument("--bounds", help="bounds JSON")
    s.add_argument("--prec", help="precedence pairs for 'upper', e.g. 0<2,1<3")
    s.add_argument("--d", type=int, help="window size for d-distance")
    s.set_defaults(run=cmd_solve)

    f = sub.add_parser(
        "order-family",
        help="orders whose left arcs form a given family",
        description="For 'dipaths', --k counts dipaths with at least one arc each.",
    )
    f.add_argument("problem", choices=FAMILY_PROBLEMS)
    f.add_argument("--graph", required=True)
    f.add_argument("--roots", help="forced roots for in-branching, e.g. 0,3")
    f.add_argument("--S", help="dipath start vertices")
    f.add_argument("--T", help="dipath end vertices")
    f.add_argument("--s", type=int, help="Hamiltonian dipath start")
    f.add_argument("--t", type=int, help="Hamiltonian dipath end")
    f.add_argument("--k", type=int, help="number of dipaths")
    f.add_argument("--root", type=int, help="arborescence root")
    f.set_defaults(run=cmd_order_family)

    pa = sub.add_parser("partition", help="split arcs into a family member and an acyclic rest")
    pa.add_argument("--graph", required=True)
    pa.add_argument("--kind", required=True, choices=[k.value for k in ArcFamilyKind])
    pa.add_argument("--roots")
    pa.add_argument("--cap", type=int, help="limit on arcs lying on cycles")
    pa.set_defaults(run=cmd_partition)

    o = sub.add_parser("oracle", help="exhaustive reference answers")
    o.add_argument("query", choices=("caps", "order", "partition", "min-cover", "min-fas", "minmax", "decreasing-min", "lex"))
    o.add_argument("--graph")
    o.add_argument("--bounds")
    o.add_argument("--kind", choices=[k.value for k in ArcFamilyKind])
    o.add_argument("--side", default="from-left", choices=[x.value for x in oracle.LexSide])
    o.add_argument("--sense", default="min", choices=[x.value for x in oracle.LexSense])
    o.add_argument("--cap", type=int)
    o.set_defaults(run=cmd_oracle)

    r = sub.add_parser("reduce", help="build hardness gadgets")
    r.add_argument("construction", choices=REDUCTIONS)
    r.add_argument("--graph")
    r.add_argument("--cnf", help="DIMACS CNF file")
    r.add_argument("--k", type=int)
    r.add_argument("--simple", action="store_true", help="split parallel arcs (is only)")
    r.add_argument("--d", type=int)
    r.add_argument("--l", type=int)
    r.add_argument("--out-prefix", help="write PREFIX.dg, PREFIX.bounds.json and PREFIX.tags.json")
    r.set_defaults(run=cmd_reduce)

    k = sub.add_parser(
        "rank",
        help="rank aggregation",
        description="Penalty arcs need a strict majority of judges; ties give no arc.",
    )
    k.add_argument("mode", choices=("penalty", "minmax", "disappointment"))
    k.add_argument("--rankings", required=True, help="CSV, one judge per line, best first")
    k.add_argument("--g", help="uniform disappointment cap")
    k.add_argument("--bounds", help="per-candidate caps as bounds JSON with key g")
    k.set_defaults(run=cmd_rank)

    a = sub.add_parser("activate", help="one-by-one threshold activation")
    a.add_argument("--graph", required=True)
    a.add_argument("--thresholds", required=True, help='JSON {"tau": ..., "seed": [...]}')
    a.set_defaults(run=cmd_activate)

    v = sub.add_parser("verify", help="re-check a claimed solution or witness")
    v.add_argument("--graph", required=True)
    v.add_argument("--claim", help="a report produced by another command")
    v.add_argument("--order")
    v.add_argument("--partition", help="family arc ids")
    v.add_argument("--witness", help="witness JSON (inline or a file)")
    v.add_argument("--problem", help="problem the order or witness refers to")
    v.add_argument("--kind", help="arc family for --order or --partition")
    v.add_argument("--bounds")
    v.add_argument("--roots")
    v.add_argument("--S")
    v.add_argument("--T")
    v.add_argument("--s", type=int)
    v.add_argument("--t", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--root", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--prec")
    v.set_defaults(run=cmd_verify)

    g = sub.add_parser("gen", help="seeded random digraph in .dg format")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-weight", type=int, default=1, help="weights drawn from 0..max when above 1")
    g.add_argument("--bounds-out", help="also write random bounds for --problem here")
    g.add_argument("--problem", default="upper", choices=SOLVE_PROBLEMS)
    g.set_defaults(run=cmd_gen)
    return p


def _emit(text: str, dest: str | None) -> None:
    if dest is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        write_atomic(dest, text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.run(args)
    except (OrdoError, OSError, json.JSONDecodeError) as exc:
        print(f"ordo: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(out, str):
        _emit(out, args.out)
        return 0
    _emit(dumps(out) + "\n", args.out)
    ok = out["valid"] if "valid" in out else out.get("feasible")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
