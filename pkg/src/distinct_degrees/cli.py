"""Command-line entry point (``distinct-degrees``).

Exit status: 0 on success, 1 when a verification report contains a failing
check, 2 on usage or input errors.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import io as gio
from .clustering import ClusterParams, partition
from .constructions import FamilySpec, disjoint_cliques, random_graph
from .degree_diversity import DEFAULT_ENUM_GUARD, f_exact, randomized_witness, theorem1_bound
from .errors import CapabilityExceeded, EdgeListError, InvalidSpecError
from .graph_core import distance_histogram
from .harness import (
    concentration_checks,
    degree_histogram_experiment,
    jsonable,
    verify_theorem1,
    verify_theorem2_construction,
)
from .homogeneous import DEFAULT_GUARD, hom_estimate
from .sweep import exhaustive_small_sweep

THREADS_ENV = "DISTINCT_DEGREES_THREADS"


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, help="master seed (required by randomized commands)")
    p.add_argument("--guard-n", type=int, default=DEFAULT_GUARD,
                   help="largest n for exact clique/independent-set search")
    p.add_argument("--enum-guard", type=int, default=DEFAULT_ENUM_GUARD,
                   help="largest n for exact subset enumeration of f(G)")
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--threads", type=int, default=int(os.environ.get(THREADS_ENV, "1")),
                   help=f"worker bound (default from ${THREADS_ENV}, else 1)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="distinct-degrees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="n, e, hom, f (or witness) and distance summary")
    p.add_argument("graph")
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("witness", parents=[common], help="randomized distinct-degree witness")
    p.add_argument("graph")
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("verify", help="verification campaigns")
    vsub = p.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("theorem1", parents=[common])
    v.add_argument("graph")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--target", dest="target_count", type=int, help="witness count the run must reach")
    v = vsub.add_parser("theorem2", parents=[common])
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v = vsub.add_parser("sweep", parents=[common])
    v.add_argument("--n-max", type=int, default=4)
    v = vsub.add_parser("concentration", parents=[common])
    v.add_argument("graph")
    v.add_argument("--trials", type=int, default=10_000)

    p = sub.add_parser("cluster", parents=[common], help="seed-and-grow partition by neighbourhood distance")
    p.add_argument("graph")
    p.add_argument("--d0", type=int, required=True, help="seed-ball radius (strict)")
    p.add_argument("--link-dist", type=int, required=True, help="growth distance (inclusive)")
    p.add_argument("--growth", type=float, default=0.5, help="minimum fringe/cluster ratio to keep growing")
    p.add_argument("--seed-frac", type=float, default=0.0)
    p.add_argument("--min-cluster-frac", type=float, default=0.0)

    p = sub.add_parser("generate", parents=[common], help="write a family member as an edge list")
    p.add_argument("--family", choices=("disjoint-cliques", "example3", "random"), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)

    p = sub.add_parser("experiment", help="Monte-Carlo experiments")
    esub = p.add_subparsers(dest="experiment", required=True)
    e = esub.add_parser("histogram", parents=[common], help="degree histogram of G[U] for disjoint cliques")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--trials", type=int, default=10_000)
    e = esub.add_parser("ratio", parents=[common],
                        help="exploratory: witness count against n/hom on random graphs (no pass/fail)")
    e.add_argument("--n", type=int, nargs="+", required=True)
    e.add_argument("--p", type=float, default=0.5)
    e.add_argument("--graphs", type=int, default=5)
    e.add_argument("--trials", type=int, default=100)
    return parser


def _need_seed(args) -> int:
    if args.seed is None:
        raise UsageError(f"'{args.command}' is randomized and needs an explicit --seed")
    return args.seed


def _load(path: str):
    try:
        return gio.read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _manifest(args) -> dict:
    keep = {k: v for k, v in vars(args).items() if k not in ("out", "format")}
    return {"command": " ".join(x for x in (args.command, getattr(args, "what", None),
                                            getattr(args, "experiment", None)) if x),
            "args": dict(sorted(keep.items()))}


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_out(args, report) -> int:
    fmt = args.format or "json"
    if fmt == "json":
        payload = report.to_dict()
        payload["manifest"] = jsonable(_manifest(args))
        _emit(args, gio.dump_json(payload))
    else:
        rows = [jsonable(c.__dict__) for c in report.checks]
        _emit(args, gio.dump_csv(rows, gio.CHECK_COLUMNS))
    return 0 if report.passed else 1


def cmd_stats(args) -> int:
    g = _load(args.graph)
    if (g.n > args.guard_n or g.n > args.enum_guard) and args.seed is None:
        raise UsageError("graph exceeds the exact guards; heuristics need an explicit --seed")
    seed = args.seed if args.seed is not None else 0
    est = hom_estimate(g, seed, args.guard_n)
    if g.n <= args.enum_guard:
        w = f_exact(g, guard=args.enum_guard)
        f_kind = "exact"
    else:
        w = randomized_witness(g, args.trials, seed)
        f_kind = "witness"
    hist = distance_histogram(g)
    pairs = sum(hist.values())
    out = {
        "n": g.n,
        "e": g.num_edges(),
        "hom": est.value,
        "hom_exact": est.exact,
        "f": w.distinct_count,
        "f_kind": f_kind,
        "witness_subset": w.subset.members(),
        "theorem1_bound": theorem1_bound(g.n, est.value) if g.n else None,
        "delta": {
            "min": min(hist) if hist else None,
            "max": max(hist) if hist else None,
            "mean": sum(d * c for d, c in hist.items()) / pairs if pairs else None,
            "histogram": dict(sorted(hist.items())),
        },
        "manifest": _manifest(args),
    }
    if (args.format or "json") == "csv":
        rows = [{"quantity": k, "value": out[k]} for k in ("n", "e", "hom", "hom_exact", "f", "f_kind")]
        _emit(args, gio.dump_csv(rows, ("quantity", "value")))
    else:
        _emit(args, gio.dump_json(jsonable(out)))
    return 0


def cmd_witness(args) -> int:
    seed = _need_seed(args)
    g = _load(args.graph)
    w = randomized_witness(g, args.trials, seed)
    out = {
        "distinct_count": w.distinct_count,
        "subset": w.subset.members(),
        "representatives": w.representatives.members(),
        "verified": w.verify(g),
        "manifest": _manifest(args),
    }
    _emit(args, gio.dump_json(jsonable(out)))
    return 0


def cmd_verify(args) -> int:
    if args.what == "theorem1":
        seed = _need_seed(args)
        g = _load(args.graph)
        report = verify_theorem1(g, args.trials, seed, subject=args.graph, hom_guard=args.guard_n,
                                 f_guard=args.enum_guard, witness_target=args.target_count)
    elif args.what == "theorem2":
        report = verify_theorem2_construction(args.k, args.m, guard=args.enum_guard)
    elif args.what == "sweep":
        report = exhaustive_small_sweep(args.n_max)
    else:
        seed = _need_seed(args)
        g = _load(args.graph)
        report = concentration_checks(g, args.trials, seed, subject=args.graph, hom_guard=args.guard_n)
    return _report_out(args, report)


def cmd_cluster(args) -> int:
    g = _load(args.graph)
    params = ClusterParams(args.d0, args.link_dist, args.growth, args.seed_frac, args.min_cluster_frac)
    r = partition(g, params)
    out = {
        "clusters": [c.members() for c in r.clusters],
        "leftover": r.leftover.members(),
        "max_intra": r.max_intra,
        "min_inter": r.min_inter,
        "manifest": _manifest(args),
    }
    _emit(args, gio.dump_json(jsonable(out)))
    return 0


def cmd_generate(args) -> int:
    fam = args.family
    try:
        if fam == "disjoint-cliques":
            spec = FamilySpec("disjoint_cliques", {"m": args.m, "k": args.k})
        elif fam == "example3":
            spec = FamilySpec("example3", {"k": args.k, "b": args.b, "n": args.n})
        else:
            spec = FamilySpec("random", {"n": args.n}, p=args.p, seed=_need_seed(args))
        if any(v is None for v in spec.params.values()):
            raise UsageError(f"family {fam} needs {', '.join('--' + k for k in spec.params)}")
        g = spec.build()
    except InvalidSpecError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, gio.serialize_edge_list(g))
    return 0


def cmd_experiment(args) -> int:
    seed = _need_seed(args)
    if args.experiment == "histogram":
        g = disjoint_cliques(args.m, args.k)
        rep = degree_histogram_experiment(g, args.k, args.trials, seed,
                                          subject=f"disjoint_cliques(m={args.m}, k={args.k})")
        if (args.format or "csv") == "csv":
            _emit(args, gio.dump_csv([jsonable(r) for r in rep.rows()], gio.HISTOGRAM_COLUMNS))
        else:
            payload = rep.to_dict()
            payload["manifest"] = jsonable(_manifest(args))
            _emit(args, gio.dump_json(payload))
        return 0 if rep.passed else 1
    rows = []
    for n in args.n:
        for i in range(args.graphs):
            g = random_graph(n, args.p, seed + i)
            est = hom_estimate(g, seed + i, args.guard_n)
            w = randomized_witness(g, args.trials, seed + i)
            rows.append({
                "n": n,
                "graph_seed": seed + i,
                "hom": est.value,
                "hom_exact": est.exact,
                "witness": w.distinct_count,
                "n_over_hom": n / est.value,
                "sqrt_n_over_hom": math.sqrt(n / est.value),
            })
    cols = ("n", "graph_seed", "hom", "hom_exact", "witness", "n_over_hom", "sqrt_n_over_hom")
    if (args.format or "csv") == "csv":
        _emit(args, gio.dump_csv(rows, cols))
    else:
        _emit(args, gio.dump_json(jsonable({"rows": rows, "manifest": _manifest(args)})))
    return 0


COMMANDS = {
    "stats": cmd_stats,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "cluster": cmd_cluster,
    "generate": cmd_generate,
    "experiment": cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"distinct-degrees: error: {exc}", file=sys.stderr)
        return 2
    except (EdgeListError, CapabilityExceeded, ValueError) as exc:
        print(f"distinct-degrees: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
