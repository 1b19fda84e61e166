"""Command-line front end.

Exit status: 0 when the condition holds / a certificate is found, 1 when it
is violated or no certificate was found, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .cluster import check_cluster, cluster_bound, find_y
from .graph import GraphFormatError, external, load_graph
from .numeric import DEFAULT_EPSILON, EXACT, NumericPolicy, format_scalar, parse_vector
from .oracle import (FiniteSpace, ShearerViolation, check_lopsided_condition, random_product_space,
                     tight_instance, verify_bound, verify_fundamental_inequality,
                     verify_shearer_chain)
from .shearer import check_shearer
from .symmetric import symmetric_thresholds
from .tables import ResourceLimitError

COMMANDS = ("check-shearer", "check-cluster", "find-y", "bound", "thresholds",
            "tight-instance", "verify", "compare")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lllcert", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--graph", help="graph file (JSON or edge list)")
    ap.add_argument("--p", help='probabilities: JSON {"uniform": ..} / {"values": [..]}, a file, '
                                'or comma-separated values')
    ap.add_argument("--y", help="weights, same formats as --p")
    ap.add_argument("--d", help="degree or range, e.g. 3 or 2..10")
    ap.add_argument("--space", help="finite-space JSON file (verify)")
    ap.add_argument("--mode", choices=("exact", "float"), default="exact")
    ap.add_argument("--eps", type=float, default=DEFAULT_EPSILON)
    ap.add_argument("--tol", type=float, default=1e-10)
    ap.add_argument("--cap", type=float, default=1e6)
    ap.add_argument("--max-iter", type=int, default=10000)
    ap.add_argument("--output", choices=("json", "table"), default="json")
    ap.add_argument("--seed", type=int, default=0)
    return ap


def _vector(spec: str | None, n: int, policy: NumericPolicy, flag: str):
    if spec is None:
        raise UsageError(f"{flag} is required for this command")
    text = spec
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        return parse_vector(text, n, policy)
    parts = [s for s in text.split(",") if s.strip()]
    if len(parts) == 1:
        return parse_vector({"uniform": parts[0]}, n, policy)
    return parse_vector({"values": parts}, n, policy)


def _graph(args):
    if not args.graph:
        raise UsageError("--graph is required for this command")
    return load_graph(args.graph)


def _degrees(spec: str | None) -> range:
    if spec is None:
        raise UsageError("--d is required for thresholds")
    try:
        if ".." in spec:
            lo, hi = (int(s) for s in spec.split("..", 1))
        else:
            lo = hi = int(spec)
    except ValueError:
        raise UsageError(f"bad --d value {spec!r}") from None
    if lo < 2 or hi < lo:
        raise UsageError(f"--d must describe degrees >= 2, got {spec!r}")
    return range(lo, hi + 1)


def _table(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    cells = [[_cell(r.get(k)) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return "-" if v is None else str(v)


def _emit(payload, output: str, rows: list[dict] | None = None) -> None:
    if output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(_table(rows if rows is not None else [payload]))


def _cmd_check_shearer(args, policy):
    G = _graph(args)
    rep = check_shearer(G, _vector(args.p, G.n, policy, "--p"), policy)
    _emit(rep.to_json(), args.output)
    return 0 if rep.holds else 1


def _cmd_check_cluster(args, policy):
    G = _graph(args)
    p = _vector(args.p, G.n, policy, "--p")
    y = _vector(args.y, G.n, policy, "--y")
    rep = check_cluster(G, p, y, policy)
    _emit(rep.to_json(), args.output)
    return 0 if rep.holds else 1


def _cmd_find_y(args, policy):
    G = _graph(args)
    p = _vector(args.p, G.n, EXACT, "--p")
    cert = find_y(G, p, tol=args.tol, cap=args.cap, max_iter=args.max_iter)
    _emit(cert.to_json(), args.output)
    return 0 if cert.converged else 1


def _cmd_bound(args, policy):
    G = _graph(args)
    y = _vector(args.y, G.n, policy, "--y")
    _emit({"bound": format_scalar(cluster_bound(G, y, policy)), "n": G.n, "mode": policy.mode},
          args.output)
    return 0


def _cmd_thresholds(args, policy):
    rows = [symmetric_thresholds(d).to_json() for d in _degrees(args.d)]
    _emit(rows, args.output, rows)
    return 0


def _cmd_tight_instance(args, policy):
    G = _graph(args)
    p = _vector(args.p, G.n, policy, "--p")
    try:
        space = tight_instance(G, p, policy)
    except ShearerViolation as exc:
        print(f"lllcert: {exc}", file=sys.stderr)
        return 1
    doc = space.to_json()
    _emit(doc, args.output, doc["atoms"])
    return 0


def _cmd_verify(args, policy):
    G = _graph(args)
    if args.space:
        with open(args.space, encoding="utf-8") as fh:
            space = FiniteSpace.from_json(fh.read())
        p = _vector(args.p, G.n, policy, "--p")
        source = "file"
    elif args.p:
        p = _vector(args.p, G.n, policy, "--p")
        try:
            space = tight_instance(G, p, policy)
        except ShearerViolation as exc:
            print(f"lllcert: {exc}", file=sys.stderr)
            return 1
        source = "tight-instance"
    else:
        space, p = random_product_space(G, args.seed)
        source = f"random-product(seed={args.seed})"
    lop = check_lopsided_condition(space, G, p, policy)
    checks = {"lopsided": lop.holds}
    result = {"source": source, "n": G.n, "mode": policy.mode, "lopsided": lop.to_json()}
    if lop.holds:
        bound = verify_bound(space, G, p, policy)
        shearer_holds = check_shearer(G, p, policy).holds
        checks["fundamental_inequality"] = verify_fundamental_inequality(space, G, p, policy)
        if shearer_holds:
            checks["bound"] = bound.all_hold
            checks["ratio_chain"] = verify_shearer_chain(space, G, p, policy)
        result["bound"] = bound.to_json()
        result["shearer_holds"] = shearer_holds
    result["checks"] = checks
    result["all_pass"] = all(checks.values())
    rows = [{"check": k, "pass": v} for k, v in checks.items()]
    _emit(result, args.output, rows)
    return 0 if result["all_pass"] else 1


def _cmd_compare(args, policy):
    G = _graph(args)
    p = _vector(args.p, G.n, policy, "--p")
    rows = []
    sh = check_shearer(G, p, policy)
    rows.append({"method": "shearer", "status": "holds" if sh.holds else "violated",
                 "bound": None if sh.bound is None else format_scalar(sh.bound)})
    cert = find_y(G, p, tol=args.tol, cap=args.cap, max_iter=args.max_iter)
    if cert.converged:
        rows.append({"method": "cluster", "status": f"certified ({cert.validation})",
                     "bound": format_scalar(cert.report.bound)})
    else:
        rows.append({"method": "cluster", "status": "not-certified", "bound": None})
    d = G.max_degree
    pmax = max(p)
    if d >= 2:
        th = symmetric_thresholds(d)
        for name in ("erdos_lovasz", "spencer", "shearer", "cluster_ed"):
            limit = getattr(th, name)
            ok = pmax <= limit if name != "cluster_ed" else float(pmax) <= limit
            rows.append({"method": f"symmetric:{name}(d={d})",
                         "status": "holds" if ok else "exceeds",
                         "bound": format_scalar(limit)})
    _emit({"n": G.n, "mode": policy.mode, "max_degree": d, "rows": rows}, args.output, rows)
    return 0


_DISPATCH = {
    "check-shearer": _cmd_check_shearer,
    "check-cluster": _cmd_check_cluster,
    "find-y": _cmd_find_y,
    "bound": _cmd_bound,
    "thresholds": _cmd_thresholds,
    "tight-instance": _cmd_tight_instance,
    "verify": _cmd_verify,
    "compare": _cmd_compare,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        policy = NumericPolicy(args.mode, args.eps)
        if not (math.isfinite(args.tol) and args.tol > 0):
            raise UsageError("--tol must be positive")
        return _DISPATCH[args.command](args, policy)
    except (UsageError, GraphFormatError, ValueError, OSError, ResourceLimitError,
            json.JSONDecodeError, KeyError) as exc:
        print(f"lllcert: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
