"""Command-line front end.

Every subcommand reads a `.hg` file, runs one library operation, and prints
a single JSON document. Exit codes: 0 success, 1 infeasible (certificate in
the output), 2 input error, 3 oracle-limit exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from . import matroid, measures, oracle, sfm, stochastic
from ._kernels import KERNEL_NAME
from .errors import InfeasibleError, LimitExceededError, ParseError
from .model import (
    Hedgegraph,
    Partition,
    cut_hedges,
    parse_hedgegraph,
    partition_boundary,
    serialize_hedgegraph,
    span,
)

SCHEMA_VERSION = 1


def _frac(x) -> str:
    return str(Fraction(x))


def _hedge_names(G: Hedgegraph, A) -> list:
    return [G.hedges[e].name for e in sorted(A)]


def _partition_json(G: Hedgegraph, P: Partition) -> list:
    return [[G.vertex_names[v] for v in sorted(b)] for b in P.blocks]


def _vertices_json(G: Hedgegraph, S) -> list:
    return [G.vertex_names[v] for v in sorted(S)]


def _trimming_json(G: Hedgegraph, t) -> list:
    return [
        {
            "hedge": G.hedges[e].name,
            "hyperedge": te.hyperedge,
            "pair": [G.vertex_names[te.pair[0]], G.vertex_names[te.pair[1]]],
        }
        for e, te in sorted(t.items())
    ]


def _orientation_json(G: Hedgegraph, O: measures.Orientation) -> dict:
    return {
        "root": G.vertex_names[O.root],
        "choices": [
            {
                "hedge": G.hedges[e].name,
                "hyperedge": hy,
                "head": G.vertex_names[head],
            }
            for e, (hy, head) in enumerate(O.choices)
        ],
    }


# ---------------------------------------------------------------------------
# subcommand handlers: return (payload dict, exit code)


def _cmd_info(G: Hedgegraph, args):
    return {
        "n": G.n,
        "m": G.m,
        "p": G.p,
        "vertices": list(G.vertex_names),
        "hedges": [
            {
                "name": h.name,
                "weight": _frac(h.weight),
                "hyperedges": [[G.vertex_names[v] for v in hy] for hy in h.hyperedges],
            }
            for h in G.hedges
        ],
        "connected": G.is_connected(),
        "kernel": KERNEL_NAME,
    }, 0


def _cmd_connectivity(G: Hedgegraph, args):
    if args.exact:
        lam, S = oracle.exact_connectivity(G)
        return {
            "value": lam,
            "witness_cut": _vertices_json(G, S),
            "cut_hedges": _hedge_names(G, cut_hedges(G, S)) if lam else [],
            "method": "exhaustive",
        }, 0
    rep = measures.approx_connectivity(G)
    if rep.value == 0:
        return {"value": 0, "witness_partition": _partition_json(G, rep.witness),
                "method": rep.method}, 0
    lo, hi = rep.value
    return {"band": [lo, hi], "method": rep.method}, 0


def _cmd_pc(G: Hedgegraph, args):
    rep = measures.partition_connectivity(G)
    out = {
        "value": rep.value,
        "witness_partition": _partition_json(G, rep.witness),
        "method": rep.method,
        "methods_agree": True,  # the packing cross-check runs inside
    }
    if args.exact:
        exact, _ = oracle.exact_pc(G)
        out["oracle_value"] = exact
        out["methods_agree"] = exact == rep.value
    return out, 0


def _cmd_wpc(G: Hedgegraph, args):
    rep = measures.weak_partition_connectivity(G)
    return {
        "value": rep.value,
        "witness_partition": _partition_json(G, rep.witness),
        "method": rep.method,
    }, 0


def _cmd_kstar(G: Hedgegraph, args):
    if args.exact:
        val, A = oracle.exact_kstar(G)
        out = {"value": val, "method": "exhaustive"}
        if A is not None:
            out["witness_set"] = _hedge_names(G, A)
        return out, 0
    rep = measures.kstar_approx(G)
    out = {"band": list(rep.value), "method": rep.method,
           "bases": [_hedge_names(G, b) for b in rep.witness]}
    if rep.details.get("exact") is not None:
        out["exact"] = rep.details["exact"]
    return out, 0


def _cmd_decompose(G: Hedgegraph, args):
    strengths = stochastic.hedge_strengths(G)
    kappa = sfm.hedgegraph_min_ratio(G)
    return {
        "kappa": _frac(kappa.value) if kappa.value is not None else None,
        "kappa_witness": _hedge_names(G, kappa.argmin),
        "strengths": {
            G.hedges[e].name: (_frac(s) if s is not None else None)
            for e, s in enumerate(strengths)
        },
    }, 0


def _cmd_cover(G: Hedgegraph, args):
    if args.k is not None:
        res = matroid.cover_acyclic_trimmable(G, args.k)
        if not res.feasible:
            return {
                "k": args.k,
                "feasible": False,
                "violating_partition": _partition_json(G, res.violation),
            }, 1
        return {
            "k": args.k,
            "feasible": True,
            "classes": [_hedge_names(G, c) for c in res.classes],
            "trimmings": [_trimming_json(G, t) for t in res.trimmings],
        }, 0
    k, cover, violation = matroid.min_cover_number(G)
    out = {
        "min_cover_number": k,
        "classes": [_hedge_names(G, c) for c in cover.classes],
        "trimmings": [_trimming_json(G, t) for t in cover.trimmings],
    }
    if violation is not None:
        out["violation_at_k_minus_1"] = _partition_json(G, violation)
    return out, 0


def _cmd_trim(G: Hedgegraph, args):
    if args.k is not None and args.k != 1:
        res = matroid.pack_bases(G, args.k)
        if not res.feasible:
            return {
                "k": args.k,
                "feasible": False,
                "certificate_partition": _partition_json(G, res.certificate),
            }, 1
        return {
            "k": args.k,
            "feasible": True,
            "classes": [_hedge_names(G, c) for c in res.classes],
            "trimmings": [_trimming_json(G, t) for t in res.trimmings],
            "leftover": _hedge_names(G, res.leftover),
        }, 0
    t, cert = matroid.spanning_tree_trimming(G)
    if t is None:
        return {"feasible": False,
                "certificate_partition": _partition_json(G, cert)}, 1
    return {"feasible": True, "trimming": _trimming_json(G, t)}, 0


def _cmd_orient(G: Hedgegraph, args):
    if args.root is None:
        raise ValueError("--root is required for orient")
    root = G.vertex_index(args.root)
    k = args.k if args.k is not None else 1
    O, cert = measures.orient(G, k, root)
    if O is None:
        return {"k": k, "feasible": False,
                "certificate_partition": _partition_json(G, cert)}, 1
    ok, bad = measures.verify_orientation(G, O, k, root)
    return {
        "k": k,
        "feasible": True,
        "orientation": _orientation_json(G, O),
        "verified": ok,
        "violating_set": _vertices_json(G, bad) if bad is not None else None,
    }, 0


def _cmd_sample(G: Hedgegraph, args):
    if args.experiment == "base":
        rep = stochastic.base_sampling_experiment(G, args.trials, args.seed)
    else:
        rep = stochastic.connectivity_sampling_experiment(G, args.trials, args.seed)
    return {
        "experiment": args.experiment,
        "trials": rep.trials,
        "successes": rep.successes,
        "empirical_probability": rep.empirical_probability,
        "parameters": rep.parameters,
        "seed": args.seed,
    }, 0


def _cmd_sparsify(G: Hedgegraph, args):
    res = stochastic.sparsify_partitions(
        G, epsilon=args.epsilon, seed=args.seed, c0=args.c0
    )
    return {
        "epsilon": args.epsilon,
        "seed": args.seed,
        "support_size": len(res.support),
        "weights": {G.hedges[e].name: _frac(w) for e, w in enumerate(res.weights)},
        "strengths": {
            G.hedges[e].name: (_frac(s) if s is not None else None)
            for e, s in enumerate(res.strengths)
        },
        "probabilities": {
            G.hedges[e].name: _frac(p) for e, p in enumerate(res.probabilities)
        },
    }, 0


def _cmd_verify(G: Hedgegraph, args):
    if args.artifact is None:
        raise ValueError("--artifact is required for verify")
    with open(args.artifact) as fh:
        doc = json.load(fh)
    command = doc.get("command")
    result = doc.get("result", {})
    if command == "orient":
        o = result["orientation"]
        choices = []
        for c in o["choices"]:
            e = G.hedge_index(c["hedge"])
            assert e == len(choices)
            choices.append((c["hyperedge"], G.vertex_index(c["head"])))
        O = measures.Orientation(G.vertex_index(o["root"]), tuple(choices))
        ok, bad = measures.verify_orientation(G, O, result["k"], O.root)
        return {
            "kind": "orientation",
            "ok": ok,
            "violating_set": _vertices_json(G, bad) if bad is not None else None,
        }, 0 if ok else 1
    if command == "sparsify":
        new_w = [Fraction(result["weights"][h.name]) for h in G.hedges]
        old_w = [h.weight for h in G.hedges]
        ok, err, worst = stochastic.verify_sparsifier(G, old_w, new_w, result["epsilon"])
        return {
            "kind": "sparsifier",
            "ok": ok,
            "max_relative_error": _frac(err),
            "worst_partition": _partition_json(G, worst) if worst else None,
        }, 0 if ok else 1
    raise ValueError(f"cannot verify artifact produced by {command!r}")


def _cmd_quotients(G: Hedgegraph, args):
    qs = oracle.enumerate_quotients(G)
    t = args.t if args.t is not None else 1
    return {
        "count": len(qs),
        "small_count": stochastic.count_small_quotients(G, t=t),
        "t": t,
        "quotients": sorted(
            ( _hedge_names(G, Q) for Q in qs), key=lambda q: (len(q), q)
        ),
    }, 0


_HANDLERS = {
    "info": _cmd_info,
    "connectivity": _cmd_connectivity,
    "pc": _cmd_pc,
    "wpc": _cmd_wpc,
    "kstar": _cmd_kstar,
    "decompose": _cmd_decompose,
    "cover": _cmd_cover,
    "trim": _cmd_trim,
    "orient": _cmd_orient,
    "sample": _cmd_sample,
    "sparsify": _cmd_sparsify,
    "verify": _cmd_verify,
    "quotients": _cmd_quotients,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hedgegraphs", description="Hedgegraph connectivity toolkit"
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        p = sub.add_parser(name)
        p.add_argument("--file", required=True, help="input .hg file")
        p.add_argument("--exact", action="store_true",
                       help="route to the exhaustive oracle (subject to limits)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=1000)
        p.add_argument("--epsilon", type=float, default=0.5)
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--root", type=str, default=None)
        p.add_argument("--t", type=int, default=None)
        p.add_argument("--c0", type=float, default=50.0)
        p.add_argument("--experiment", choices=["connectivity", "base"],
                       default="connectivity")
        p.add_argument("--artifact", type=str, default=None,
                       help="JSON output of a previous command to re-check")
    return parser


def run(argv) -> tuple[dict, int]:
    """Execute one command; returns (document, exit code)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "version": __version__,
    }
    try:
        with open(args.file, "rb") as fh:
            raw = fh.read()
        doc["input_digest"] = hashlib.sha256(raw).hexdigest()
        G = parse_hedgegraph(raw.decode("utf-8"))
        payload, code = _HANDLERS[args.command](G, args)
    except ParseError as exc:
        doc["error"] = {"kind": "parse", "message": str(exc), "line": exc.line}
        code = 2
    except LimitExceededError as exc:
        doc["error"] = {"kind": "oracle-limit", "message": str(exc)}
        code = 3
    except InfeasibleError as exc:
        doc["error"] = {"kind": "infeasible", "message": str(exc),
                        "certificate": sorted(exc.certificate)
                        if exc.certificate is not None else None}
        code = 1
    except (OSError, ValueError, KeyError) as exc:
        doc["error"] = {"kind": "input", "message": str(exc)}
        code = 2
    else:
        doc["result"] = payload
    doc["elapsed_seconds"] = round(time.perf_counter() - started, 6)
    doc["exit_code"] = code
    return doc, code


def main(argv=None) -> int:
    doc, code = run(sys.argv[1:] if argv is None else argv)
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
