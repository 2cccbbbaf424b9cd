"""Command line front end: deterministic text or JSON reports.

Subcommands: scan, array, profile, bounds, verify, audit.  Reports are
byte-identical for identical inputs; wall-clock timing is attached in a
separate optional field and suppressed entirely under --deterministic.

Exit codes: 0 success, 1 audit or constraint failure findings, 2 usage
error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import at4, graphcheck, higman
from .exactnum import is_prime, prime_power_base
from .srg import (
    clique_bound,
    feasibility_basic,
    fixed_point_order_bound,
    local_family_params,
    srg_spectrum,
)

SCHEMA = "at4.report/1"

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _jsonable(value):
    """Normalize report values: Fractions to strings, sets sorted, tuples to lists."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (frozenset, set)):
        return [_jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _flatten(value, path, lines):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(value[key], f"{path}.{key}" if path else str(key), lines)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(v, f"{path}.{i}", lines)
    else:
        if isinstance(value, list):
            rendered = "[" + ", ".join(json.dumps(v) for v in value) + "]"
        else:
            rendered = json.dumps(value)
        lines.append(f"{path} = {rendered}")


def _emit(report: dict, fmt: str, out) -> None:
    report = _jsonable(report)
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        lines: list[str] = []
        _flatten(report, "", lines)
        out.write("\n".join(lines) + "\n")


def _array_payload(params: at4.At4Params) -> dict:
    arr = at4.intersection_array(params)
    antipodal, r_back = at4.antipodal_check(arr)
    dd = at4.derived(params)
    theta1 = -1 + arr.b[1] // (params.q - 1)
    theta4 = -1 - arr.b[1] // (1 + params.p)
    sub = at4.second_subconstituent_array(params)
    return {
        "b": list(arr.b),
        "c": list(arr.c),
        "a": list(arr.a),
        "layer_sizes": list(arr.layer_sizes),
        "vertices": dd.vertices,
        "antipodal_classes": dd.classes,
        "antipodal": antipodal,
        "recovered_r": r_back,
        "kernel_order_divides": dd.kernel_order_divides,
        "triple_constant": dd.triple_constant,
        "eigenvalues": list(at4.at4_eigenvalues(params)),
        "fundamental_bound": at4.fundamental_bound_check(
            arr.b[0], arr.a[1], arr.b[1], theta1, theta4
        ),
        "second_subconstituent": {"b": list(sub.b), "c": list(sub.c)},
    }


def _scan_entry(p: int) -> dict:
    base = prime_power_base(p)
    q = p + 2
    s = (p + 2) ** 2 - 2
    entry: dict = {
        "p": p,
        "prime_power": list(base) if base else None,
        "q": q,
        "q_prime": is_prime(q),
        "s": s,
        "s_prime": is_prime(s),
        "feasible_r": list(at4.feasible_r(p)),
        "local_srg": list(local_family_params(p).as_tuple()),
        "local_fix_bound": fixed_point_order_bound(local_family_params(p)),
        "clique_bound": clique_bound(p),
    }
    entry["arrays"] = [
        {"r": r, **_array_payload(at4.At4Params(p, r))} for r in at4.feasible_r(p)
    ]
    stab = higman.edge_stabilizer_primes(p)
    entry["edge_stabilizer_primes"] = sorted(stab) if stab is not None else "inapplicable"
    bounds = higman.spectrum_bounds(p)
    if bounds is None:
        entry["spectrum_lower"] = entry["spectrum_upper"] = "inapplicable"
    else:
        entry["spectrum_lower"] = sorted(bounds[0])
        entry["spectrum_upper"] = sorted(bounds[1])
    cf = higman.centralizer_filter(p) if p > 2 else None
    entry["centralizer_filter"] = (
        cf.to_dict() if cf is not None and cf.verdict != higman.INAPPLICABLE else "inapplicable"
    )
    return entry


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("AT4_JOBS", "")
    return max(1, int(env)) if env.isdigit() else 1


def _cmd_scan(args, out) -> int:
    if args.p_min < 2 or args.p_min > args.p_max:
        print(f"error: bad range {args.p_min}..{args.p_max} (need 2 <= p_min <= p_max)", file=sys.stderr)
        return EXIT_USAGE
    ps = range(args.p_min, args.p_max + 1)
    jobs = _jobs(args)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_scan_entry, ps))
    else:
        entries = [_scan_entry(p) for p in ps]
    report = {
        "schema": SCHEMA,
        "command": "scan",
        "inputs": {"p_min": args.p_min, "p_max": args.p_max},
        "entries": entries,
    }
    return _finish(report, args, out)


def _cmd_array(args, out) -> int:
    try:
        params = at4.At4Params(args.p, args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = _array_payload(params)
    payload["quotient_srg"] = list(at4.quotient_params(args.p).as_tuple())
    payload["second_subconstituent_quotient_srg"] = list(
        at4.second_subconstituent_quotient(args.p).as_tuple()
    )
    report = {
        "schema": SCHEMA,
        "command": "array",
        "inputs": {"p": args.p, "r": args.r},
        **payload,
    }
    return _finish(report, args, out)


def _cmd_profile(args, out) -> int:
    try:
        at4.At4Params(args.p, args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not is_prime(args.ell):
        print(f"error: order {args.ell} is not prime", file=sys.stderr)
        return EXIT_USAGE
    p, r, ell = args.p, args.r, args.ell
    classification = higman.cover_order_classification(p, r)
    report = {
        "schema": SCHEMA,
        "command": "profile",
        "inputs": {"p": p, "r": r, "ell": ell},
        "cover_congruences": list(higman.cover_congruences(p, r, ell)),
        "subconstituent_congruences": list(higman.subconstituent_congruences(p, r, ell)),
        "alpha1_fixed_point_free": (
            sorted(higman.alpha1_candidates(p, ell, 0)) if p > 2 else "inapplicable"
        ),
        "cover_fix_bound": higman.cover_fix_bound(p, r),
        "local_fix_bound": fixed_point_order_bound(local_family_params(p)),
        "order_classification": (
            classification.to_dict()
            if classification.verdict != higman.INAPPLICABLE
            else "inapplicable"
        ),
    }
    if classification.verdict != higman.INAPPLICABLE:
        report["order_admissible_with_fixed_points"] = (
            ell in classification.data["fixed_point_orders"]
        )
        report["order_admissible_fixed_point_free"] = (
            ell in classification.data["fixed_point_free_orders"]
        )
        report["local_fixed_structure"] = higman.local_fixed_structure(p, ell).to_dict()
    return _finish(report, args, out)


def _cmd_bounds(args, out) -> int:
    p = args.p
    if p < 2:
        print(f"error: p must be >= 2, got {p}", file=sys.stderr)
        return EXIT_USAGE
    params = local_family_params(p)
    spec = srg_spectrum(params)
    report = {
        "schema": SCHEMA,
        "command": "bounds",
        "inputs": {"p": p},
        "local_srg": list(params.as_tuple()),
        "spectrum": {
            "k": spec.k,
            "theta_pos": spec.theta_pos,
            "m_pos": spec.m_pos,
            "theta_neg": spec.theta_neg,
            "m_neg": spec.m_neg,
        },
        "feasibility": feasibility_basic(params).to_dict(),
        "clique_bound": clique_bound(p),
        "fix_bound": fixed_point_order_bound(params),
        "block_sizes": list(higman.block_size_filter(p)),
    }
    stab = higman.edge_stabilizer_primes(p)
    report["edge_stabilizer_primes"] = sorted(stab) if stab is not None else "inapplicable"
    bounds = higman.spectrum_bounds(p)
    if bounds is None:
        report["spectrum_lower"] = report["spectrum_upper"] = "inapplicable"
    else:
        report["spectrum_lower"] = sorted(bounds[0])
        report["spectrum_upper"] = sorted(bounds[1])
    report["exclusion"] = higman.exclusion_arithmetic(p).to_dict() if p > 2 else "inapplicable"
    return _finish(report, args, out)


def _cmd_verify(args, out) -> int:
    try:
        text = open(args.graph, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        g, warnings = graphcheck.parse_graph(text)
    except graphcheck.GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    srg_params = graphcheck.verify_srg(g)
    drg = graphcheck.verify_drg(g)
    report = {
        "schema": SCHEMA,
        "command": "verify",
        "inputs": {"graph": os.path.basename(args.graph)},
        "vertices": g.n,
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "warnings": list(warnings),
        "srg": list(srg_params.as_tuple()) if srg_params else None,
        "drg": {"b": list(drg.b), "c": list(drg.c)} if drg else None,
    }
    return _finish(report, args, out)


def _cmd_audit(args, out) -> int:
    try:
        graph_text = open(args.graph, encoding="utf-8").read()
        perm_text = open(args.perms, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        g = graphcheck.load_graph(graph_text)
        sigmas = graphcheck.parse_permutations(perm_text, g.n)
    except graphcheck.GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        audit = graphcheck.audit_family_graph(g, args.p, sigmas)
    except graphcheck.GraphError as exc:
        report = {
            "schema": SCHEMA,
            "command": "audit",
            "inputs": {"graph": os.path.basename(args.graph), "p": args.p},
            "error": str(exc),
        }
        _finish(report, args, out)
        return EXIT_FINDINGS
    report = {
        "schema": SCHEMA,
        "command": "audit",
        "inputs": {
            "graph": os.path.basename(args.graph),
            "perms": os.path.basename(args.perms),
            "p": args.p,
        },
        **audit.to_dict(),
    }
    _finish(report, args, out)
    return EXIT_OK if audit.ok else EXIT_FINDINGS


def _finish(report: dict, args, out) -> int:
    if not args.deterministic:
        report["timing_ms"] = round((time.perf_counter() - args._t0) * 1000, 3)
    _emit(report, args.format, out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="at4",
        description="Feasibility and automorphism-constraint reports for "
        "antipodal tight diameter-4 graph candidates with q = p + 2.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--deterministic", action="store_true", help="omit timing for reproducible output")
    parser.add_argument("--jobs", type=int, default=None, help="parallel workers for scan (env AT4_JOBS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="feasibility scan over a p range")
    p_scan.add_argument("p_min", type=int)
    p_scan.add_argument("p_max", type=int)
    p_scan.set_defaults(func=_cmd_scan)

    p_array = sub.add_parser("array", help="intersection array and derived data for (p, r)")
    p_array.add_argument("p", type=int)
    p_array.add_argument("r", type=int)
    p_array.set_defaults(func=_cmd_array)

    p_profile = sub.add_parser("profile", help="congruence profile for (p, r) and a prime order")
    p_profile.add_argument("p", type=int)
    p_profile.add_argument("r", type=int)
    p_profile.add_argument("ell", type=int)
    p_profile.set_defaults(func=_cmd_profile)

    p_bounds = sub.add_parser("bounds", help="spectrum and fixed-point bounds at p")
    p_bounds.add_argument("p", type=int)
    p_bounds.set_defaults(func=_cmd_bounds)

    p_verify = sub.add_parser("verify", help="SRG/DRG verification of a graph file")
    p_verify.add_argument("graph")
    p_verify.set_defaults(func=_cmd_verify)

    p_audit = sub.add_parser("audit", help="audit automorphism profiles of a family graph")
    p_audit.add_argument("graph")
    p_audit.add_argument("perms")
    p_audit.add_argument("p", type=int)
    p_audit.set_defaults(func=_cmd_audit)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    args._t0 = time.perf_counter()
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
