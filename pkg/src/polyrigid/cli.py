"""Command-line driver: analyze, global, sparsity, generate, witness.

Reports are JSON documents embedding the resolved input, so any run can
be reproduced from its own report.  Exit codes: 0 for any completed
verdict, 2 for parse or validation errors, 3 when a budget was exhausted
and --strict was requested.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .errors import FrameworkFileError, ParameterError, PolyrigidError
from . import fileformat as ff
from .framework import (
    edge_lengths,
    induced_colourings,
    is_infinitesimally_rigid,
    is_redundantly_rigid,
    is_well_positioned,
    induced_colouring,
    monochromatic_subgraphs,
    rank_exact,
    rigidity_matrix,
)
from .graph import connected_components, is_2_connected, complete_graph
from .global_rigidity import (
    BUDGET_EXCEEDED,
    GLOBALLY_RIGID,
    certify_generic_global,
    
    decide_global_rigidity,
    
)
from .norm import preset
from .oracle import SearchParams, numeric_witness_search
from .sparsity import SparsityParams, is_Mdd_connected, is_sparse, is_tight, pebble_rank
from . import constructions


def _faces_to_json(faces):
    return [[ff.format_rational(x) for x in f] for f in faces]


def _report(command, input_doc, results, meta=None):
    doc = {"command": command, "input": input_doc, "results": results}
    if meta:
        doc["meta"] = meta
    return doc


def cmd_analyze(args):
    fw = ff.load_framework(args.file)
    t0 = time.perf_counter()
    wp = is_well_positioned(fw)
    results = {
        "well_positioned": wp,
        "edge_lengths": [ff.format_rational(x) for x in edge_lengths(fw)],
        "edge_face_candidates": [_faces_to_json(c) for c in induced_colourings(fw)],
    }
    if wp:
        phi = induced_colouring(fw)
        rank = rank_exact(rigidity_matrix(fw))
        needed = fw.dim * len(fw.graph.vertices) - fw.dim
        results["induced_colouring"] = _faces_to_json(phi)
        results["rank"] = rank
        results["rank_required"] = needed
        results["infinitesimally_rigid"] = rank == needed
        results["redundantly_rigid"] = is_redundantly_rigid(fw)
        if fw.norm.is_linf:
            subs = monochromatic_subgraphs(fw.graph, phi)
            results["monochromatic_classes"] = [
                {
                    "edges": [[v, w] for v, w in sub.edges],
                    "connected": len(connected_components(sub)) == 1,
                    "two_connected": is_2_connected(sub),
                }
                for sub in subs
            ]
    results["elapsed_seconds"] = round(time.perf_counter() - t0, 6)
    return _report("analyze", ff.serialize_framework(fw), results)


def _verdict_to_json(fw, verdict):
    cert = dict(verdict.certificate)
    if "witness_colouring" in cert:
        cert["witness_colouring"] = _faces_to_json(cert["witness_colouring"])
    doc = {
        "outcome": verdict.outcome,
        "generic_caveat": verdict.generic_caveat,
        "certificate": cert,
    }
    if verdict.witness is not None:
        doc["witness_positions"] = ff.serialize_positions(
            verdict.witness, fw.graph.vertices
        )
    return doc


def cmd_global(args):
    fw = ff.load_framework(args.file)
    t0 = time.perf_counter()
    fast_paths = []
    wp = is_well_positioned(fw)
    if fw.norm.is_linf and wp:
        strong = certify_generic_global(fw)
        fast_paths.append(
            {
                "criterion": "strong colouring certificate "
                "(all colour classes 2-connected)",
                "holds": strong,
                "generic_caveat": True,
                "generic_verdict": GLOBALLY_RIGID if strong else None,
                "note": "certifies global rigidity of generic realisations "
                "sharing this colouring; silent about the converse",
            }
        )
    if fw.dim == 2 and (fw.norm.is_linf or fw.norm == preset("l1", 2)) and wp:
        rigid = is_infinitesimally_rigid(fw)
        mdd = is_Mdd_connected(fw.graph, 2)
        fast_paths.append(
            {
                "criterion": "planar matroid-connectivity characterisation "
                "(rigid + (2,2)-sparsity-matroid connected)",
                "holds": rigid and mdd,
                "generic_caveat": True,
                "generic_verdict": GLOBALLY_RIGID if (rigid and mdd) else "NotGloballyRigid",
                "note": "exact for generic realisations; this input is rational, "
                "so read it with the generic caveat",
            }
        )
    results = {"fast_paths": fast_paths}
    budget_hit = False
    if args.assume_generic:
        results["exact"] = None
    else:
        verdict = decide_global_rigidity(fw, budget=args.budget, threads=args.threads)
        results["exact"] = _verdict_to_json(fw, verdict)
        budget_hit = verdict.outcome == BUDGET_EXCEEDED
    results["elapsed_seconds"] = round(time.perf_counter() - t0, 6)
    meta = {
        "budget": args.budget,
        "threads": args.threads,
        "assume_generic": bool(args.assume_generic),
        "strict": bool(args.strict),
    }
    return _report("global", ff.serialize_framework(fw), results, meta), budget_hit


def cmd_sparsity(args):
    obj = ff.load_graph_or_framework(args.file)
    graph = obj.graph if hasattr(obj, "graph") else obj
    params = SparsityParams(args.d, args.k)
    rank = pebble_rank(graph, params)
    results = {
        "d": args.d,
        "k": args.k,
        "vertex_count": len(graph.vertices),
        "edge_count": len(graph.edges),
        "rank": rank,
        "sparse": is_sparse(graph, params),
        "tight": is_tight(graph, params),
    }
    if params.matroidal:
        per_edge = {}
        for v, w in graph.edges:
            reduced = pebble_rank(graph.without_edge(v, w), params)
            per_edge[f"{v}--{w}"] = reduced == rank
        results["edge_in_some_circuit"] = per_edge
    results["Mdd_connected"] = is_Mdd_connected(graph, args.d)
    input_doc = (
        ff.serialize_framework(obj)
        if hasattr(obj, "graph")
        else {"vertices": list(graph.vertices), "edges": [[v, w] for v, w in graph.edges]}
    )
    return _report("sparsity", input_doc, results)


def cmd_generate(args):
    kind = args.kind
    if kind == "octahedron":
        fw = constructions.build_octahedron()
    elif kind == "k2d":
        eps = Fraction(args.eps) if args.eps else Fraction(1, 4)
        fw = constructions.build_k2d(args.d, eps=eps, n=args.n)
    elif kind == "hypercube":
        fw = constructions.build_hypercube(args.d)
    elif kind == "np-gadget":
        if not args.seed_file:
            raise ParameterError("np-gadget needs --seed-file with a 1-dimensional framework")
        seed_fw = ff.load_framework(args.seed_file)
        gadget = constructions.build_np_gadget(
            constructions.GadgetSpec(seed_fw, args.d)
        )
        fw = gadget.framework
    elif kind == "flexible":
        if args.n is None:
            raise ParameterError("flexible needs --n (for the complete graph K_n)")
        norm = preset(args.norm, args.d)
        fw = constructions.build_flexible_open(
            complete_graph([f"v{i}" for i in range(1, args.n + 1)]), norm
        )
    elif kind == "random":
        if args.n is None:
            raise ParameterError("random needs --n (for the complete graph K_n)")
        norm = preset(args.norm, args.d)
        fw = constructions.randomize_realisation(
            complete_graph([f"v{i}" for i in range(1, args.n + 1)]),
            args.d,
            norm,
            seed=args.seed,
            denominator_bound=args.denominator_bound,
        )
    else:
        raise ParameterError(f"unknown generator {kind!r}")
    return ff.serialize_framework(fw)


def cmd_witness(args):
    fw = ff.load_framework(args.file)
    params = SearchParams(
        restarts=args.restarts, steps=args.steps, seed=args.seed
    )
    t0 = time.perf_counter()
    witness = numeric_witness_search(fw, params)
    results = {
        "witness_found": witness is not None,
        "restarts": args.restarts,
        "elapsed_seconds": round(time.perf_counter() - t0, 6),
    }
    if witness is not None:
        results["witness_positions"] = ff.serialize_positions(
            witness, fw.graph.vertices
        )
        results["note"] = (
            "witness verified exactly: equal edge lengths, not congruent"
        )
    else:
        results["note"] = "no witness found within budget; this proves nothing"
    meta = {"seed": args.seed, "steps": args.steps}
    return _report("witness", ff.serialize_framework(fw), results, meta)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polyrigid",
        description="Exact rigidity and global rigidity analysis of bar-joint "
        "frameworks in polyhedral normed spaces.",
    )
    parser.add_argument("--version", action="version", version=f"polyrigid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    default_threads = int(os.environ.get("POLYRIGID_THREADS", "1"))

    p = sub.add_parser("analyze", help="well-positionedness, colouring, rank, rigidity")
    p.add_argument("file")
    p.add_argument("--out", default=None)

    p = sub.add_parser("global", help="decide global rigidity")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None,
                   help="max colourings to examine before giving up")
    p.add_argument("--threads", type=int, default=default_threads)
    p.add_argument("--assume-generic", action="store_true",
                   help="report only the generic fast-path verdicts")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 if the exact engine exceeded its budget")
    p.add_argument("--out", default=None)

    p = sub.add_parser("sparsity", help="sparsity-matroid rank and connectivity")
    p.add_argument("file", help="framework or bare-graph JSON file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("generate", help="write a benchmark framework file")
    p.add_argument("kind", choices=["k2d", "hypercube", "octahedron", "np-gadget",
                                    "flexible", "random"])
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--eps", default=None, help="rational in (0,1/2) for k2d")
    p.add_argument("--norm", choices=["linf", "l1"], default="linf")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seed-file", default=None, help="1-d framework file for np-gadget")
    p.add_argument("--denominator-bound", type=int, default=10**6)
    p.add_argument("--out", default=None)

    p = sub.add_parser("witness", help="numeric search for a non-congruent equivalent realisation")
    p.add_argument("file")
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--steps", type=int, default=120)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        budget_hit = False
        if args.command == "analyze":
            report = cmd_analyze(args)
        elif args.command == "global":
            report, budget_hit = cmd_global(args)
        elif args.command == "sparsity":
            report = cmd_sparsity(args)
        elif args.command == "generate":
            report = cmd_generate(args)
        elif args.command == "witness":
            report = cmd_witness(args)
        else:  # pragma: no cover
            parser.error(f"unknown command {args.command!r}")
    except (FrameworkFileError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolyrigidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ff.save(args.out, report)
    if budget_hit and getattr(args, "strict", False):
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
