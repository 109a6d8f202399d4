"""Readers and writers for digraphs, bounds, tags, CNF, rankings, thresholds and result reports."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

from .applications import RankingProfile, ThresholdNetwork
from .digraph import NEG_INF, POS_INF, Digraph, Number, bound_vector, format_extended, parse_extended, parse_weight
from .errors import OrdoError, ParseError
from .reductions.base import CnfFormula, GadgetInstance
from .results import ArcPartition, CutSet, DegreeDeficit, Feasible, Infeasible, InducedSet, StuckSet, SumMismatch

SCHEMA = "ordo/1"

# ---------------------------------------------------------------------------
# digraphs


def parse_dg(text: str, default_weight: Number = 1) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``tail head [weight]``; ``#`` lines are comments.

    Arcs without a weight token get ``default_weight``.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        rows.append((lineno, s.split()))
    if not rows:
        raise ParseError("empty digraph file")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} arcs, found {len(body)}")
    arcs: list[tuple[int, int, Number]] = []
    for lineno, tok in body:
        if len(tok) not in (2, 3):
            raise ParseError("arc line must be 'tail head [weight]'", lineno)
        try:
            t, h = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError("arc endpoints must be integers", lineno) from None
        try:
            w = parse_weight(tok[2]) if len(tok) == 3 else default_weight
        except OrdoError as exc:
            raise ParseError(str(exc), lineno) from None
        if t == h:
            raise ParseError(f"loop at vertex {t}", lineno)
        if not (0 <= t < n and 0 <= h < n):
            raise ParseError(f"endpoint outside [0, {n})", lineno)
        arcs.append((t, h, w))
    return Digraph(n, arcs)


def format_dg(D: Digraph) -> str:
    lines = [f"{D.n} {D.m}"]
    for a in D.arcs:
        if a.weight == 1:
            lines.append(f"{a.tail} {a.head}")
        else:
            lines.append(f"{a.tail} {a.head} {format_extended(a.weight)}")
    return "\n".join(lines) + "\n"


def read_dg(path: str | os.PathLike[str], default_weight: Number = 1) -> Digraph:
    return parse_dg(Path(path).read_text(), default_weight)


def write_atomic(path: str | os.PathLike[str], text: str) -> None:
    p = Path(path)
    fd, tmp = tempfile.mkstemp(dir=p.parent or ".", prefix=f".{p.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, p)


# ---------------------------------------------------------------------------
# bounds

BOUND_KEYS = ("f", "g", "m_delta", "m_rho", "w_default", "f_delta", "g_delta", "f_rho", "g_rho", "weights")


def parse_bounds(obj: Mapping[str, Any], n: int) -> dict[str, Any]:
    """Expand a bounds object into full per-vertex vectors.

    Missing vertices default to ``-inf`` for lower-type keys (``f``,
    ``f_delta``, ``f_rho``), ``inf`` for upper-type keys and 0 for the exact
    keys. ``w_default`` is a single number: the weight of arcs whose line in
    the digraph file carries no weight. ``weights`` lists one weight per arc
    and overrides the file's weights; entries may be negative.
    """
    if not isinstance(obj, Mapping):
        raise ParseError("bounds must be a JSON object")
    unknown = set(obj) - set(BOUND_KEYS)
    if unknown:
        raise ParseError(f"unknown bounds keys {sorted(unknown)}")
    out: dict[str, Any] = {}
    for key in BOUND_KEYS:
        if key not in obj:
            continue
        spec = obj[key]
        try:
            if key == "w_default":
                out[key] = parse_weight(spec)
                continue
            if key == "weights":
                if isinstance(spec, (str, bytes, Mapping)) or not isinstance(spec, Sequence):
                    raise ParseError("'weights' must be a list with one entry per arc")
                out[key] = [parse_extended(x) for x in spec]
                continue
            default: Number = 0 if key.startswith("m_") else NEG_INF if key.startswith("f") else POS_INF
            if isinstance(spec, Mapping):
                out[key] = bound_vector({int(k): v for k, v in spec.items()}, n, default)
            else:
                out[key] = bound_vector(spec, n, default)
        except (OrdoError, ValueError) as exc:
            raise ParseError(f"bad bounds for {key!r}: {exc}") from None
    return out


def load_bounds_object(path: str | os.PathLike[str]) -> Mapping[str, Any]:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"bounds file is not valid JSON: {exc}") from None
    if not isinstance(obj, Mapping):
        raise ParseError("bounds must be a JSON object")
    return obj


def read_bounds(path: str | os.PathLike[str], n: int) -> dict[str, Any]:
    return parse_bounds(load_bounds_object(path), n)


def bounds_json(vectors: Mapping[str, Sequence[Number] | None]) -> dict[str, dict[str, object]]:
    return {k: {str(v): format_extended(x) for v, x in enumerate(vec)} for k, vec in vectors.items() if vec is not None}


def gadget_files(inst: GadgetInstance) -> dict[str, str]:
    """The ``.dg``, bounds and tags texts for a gadget."""
    bounds: dict[str, object] = bounds_json({"f": inst.f, "g": inst.g})
    if inst.weights is not None:
        bounds["weights"] = [format_extended(w) for w in inst.weights]
    return {
        "dg": format_dg(inst.digraph),
        "bounds": json.dumps(bounds, indent=2, sort_keys=True) + "\n",
        "tags": json.dumps({str(i): t for i, t in enumerate(inst.tags)}, indent=2) + "\n",
    }


# ---------------------------------------------------------------------------
# CNF, rankings, thresholds


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """DIMACS CNF: ``p cnf V C`` then clauses of literals terminated by 0."""
    num_vars = None
    expected = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("c") or s.startswith("%"):
            continue
        if s.startswith("p"):
            parts = s.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("problem line must be 'p cnf V C'", lineno)
            num_vars, expected = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ParseError("clause before problem line", lineno)
        for tok in s.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise ParseError("missing problem line")
    if expected is not None and expected != len(clauses):
        raise ParseError(f"problem line announces {expected} clauses, found {len(clauses)}")
    try:
        return CnfFormula(num_vars, tuple(clauses))
    except OrdoError as exc:
        raise ParseError(str(exc)) from None


def format_dimacs_cnf(F: CnfFormula) -> str:
    lines = [f"p cnf {F.num_vars} {len(F.clauses)}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in F.clauses]
    return "\n".join(lines) + "\n"


def parse_rankings_csv(text: str) -> RankingProfile:
    """One judge per line, candidate names comma-separated best first.

    Candidates are numbered in order of first appearance.
    """
    names: dict[str, int] = {}
    rows: list[list[str]] = []
    for row in csv.reader(io.StringIO(text)):
        cells = [c.strip() for c in row if c.strip()]
        if not cells or cells[0].startswith("#"):
            continue
        for c in cells:
            names.setdefault(c, len(names))
        rows.append(cells)
    if not rows:
        raise ParseError("no rankings found")
    for i, r in enumerate(rows, start=1):
        if len(r) != len(names) or len(set(r)) != len(r):
            raise ParseError(f"ranking {i} is not a complete ranking of all {len(names)} candidates")
    rankings = tuple(tuple(names[c] for c in r) for r in rows)
    return RankingProfile(len(names), rankings, tuple(names))


def parse_thresholds(obj: Mapping[str, Any], D: Digraph) -> ThresholdNetwork:
    if not isinstance(obj, Mapping) or "tau" not in obj:
        raise ParseError('thresholds must be an object with a "tau" key')
    tau_raw = obj["tau"]
    try:
        if isinstance(tau_raw, Mapping):
            tau = {int(k): int(v) for k, v in tau_raw.items()}
            tau_vec = [tau.get(v, 0) for v in range(D.n)]
        else:
            tau_vec = [int(x) for x in tau_raw]
        seed = [int(x) for x in obj.get("seed", [])]
        return ThresholdNetwork(D, tuple(tau_vec), frozenset(seed))
    except (OrdoError, ValueError, TypeError) as exc:
        raise ParseError(f"bad thresholds: {exc}") from None


# ---------------------------------------------------------------------------
# result reports


def witness_json(w: object) -> dict[str, object] | None:
    if w is None:
        return None
    if isinstance(w, InducedSet):
        return {"type": w.type, "vertices": list(w.vertices), "side": w.side}
    if isinstance(w, CutSet):
        return {"type": w.type, "vertices": list(w.vertices), "k": w.k}
    if isinstance(w, StuckSet):
        return {"type": w.type, "vertices": list(w.vertices), "validated": w.validated}
    if isinstance(w, SumMismatch):
        return {"type": w.type, "lhs": format_extended(w.lhs), "rhs": format_extended(w.rhs)}
    if isinstance(w, DegreeDeficit):
        return {"type": w.type, "vertices": list(w.vertices)}
    raise OrdoError(f"unknown witness {w!r}")


def witness_from_json(obj: Mapping[str, Any]) -> object:
    kind = obj.get("type")
    try:
        if kind == "induced-set":
            return InducedSet(tuple(int(v) for v in obj["vertices"]), str(obj.get("side", "upper")))
        if kind == "cut-set":
            return CutSet(tuple(int(v) for v in obj["vertices"]), int(obj["k"]))
        if kind == "stuck-set":
            return StuckSet(tuple(int(v) for v in obj["vertices"]), bool(obj.get("validated", False)))
        if kind == "sum-mismatch":
            return SumMismatch(parse_extended(obj["lhs"]), parse_extended(obj["rhs"]))
        if kind == "degree-deficit":
            return DegreeDeficit(tuple(int(v) for v in obj["vertices"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed witness: {exc}") from None
    raise ParseError(f"unknown witness type {kind!r}")


def partition_json(p: ArcPartition | None) -> dict[str, object] | None:
    if p is None:
        return None
    return {"kind": p.kind.value, "family": sorted(p.family_arcs), "acyclic": sorted(p.acyclic_arcs)}


def profile_json(res: Feasible) -> dict[str, list[object]]:
    prof = res.profile
    return {
        "delta_left": list(prof.delta_left),
        "delta_right": list(prof.delta_right),
        "rho_left": list(prof.rho_left),
        "rho_right": list(prof.rho_right),
        "delta_left_w": [format_extended(x) for x in prof.delta_left_w],
        "rho_right_w": [format_extended(x) for x in prof.rho_right_w],
    }


def report(command: str, res: Feasible | Infeasible | ArcPartition | None = None, **extra: object) -> dict[str, object]:
    """Assemble the versioned JSON report for a command outcome."""
    out: dict[str, object] = {"schema": SCHEMA, "command": command}
    if isinstance(res, Feasible):
        out["feasible"] = True
        out["order"] = list(res.order)
        out["profile"] = profile_json(res)
        out["witness"] = None
        out["partition"] = partition_json(res.partition)
    elif isinstance(res, ArcPartition):
        out["feasible"] = True
        out["order"] = None
        out["witness"] = None
        out["partition"] = partition_json(res)
    elif isinstance(res, Infeasible):
        out["feasible"] = False
        out["order"] = None
        out["witness"] = witness_json(res.witness)
        out["partition"] = None
        extra.setdefault("diagnostics", {"reason": res.reason})
    out.setdefault("value", None)
    out.setdefault("diagnostics", {})
    for k, v in extra.items():
        out[k] = v
    return out


def dumps(obj: object) -> str:
    return json.dumps(_jsonable(obj), indent=2, sort_keys=False)


def _jsonable(x: object) -> object:
    if isinstance(x, Mapping):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in seq]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, float)) or hasattr(x, "denominator"):
        return format_extended(x)  # type: ignore[arg-type]
    return x
