"""Batch command line: ``tdom <command> ...``.

stdout carries JSON (or generated files for ``gen`` without ``--out``),
stderr carries log lines. Exit codes: 0 success, 1 failed verification,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import formats
from .bounds import check_thresholds2
from .counterexample import build_counterexample, nesting_level, oracle_min_halfgraph_distance
from .errors import InputError, InvariantError, ResourceError
from .generators import gen_perturbed, gen_stair, gen_t_restricted, gen_threshold
from .graph import FORBIDDEN, find_induced, is_split, is_threshold, min_domination
from .matrix import breadth, is_inclusive, min_restriction, sort_to_monotone
from .matrix_repair import line_bound, proof_bound, repair_matrix_stages, stated_bound
from .oracles import oracle_min_monotone_distance, oracle_min_threshold_distance
from .pipeline import VERIFY_LEVELS, repair_graph

log = logging.getLogger("tdom")

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2
AUTO_T_LIMIT = 2000


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def cmd_analyze(args: argparse.Namespace) -> int:
    g = formats.parse_graph(_read(args.graph))
    _emit(
        {
            "n": g.n,
            "m": g.num_edges(),
            "min_domination": min_domination(g),
            "is_threshold": is_threshold(g),
            "is_split": is_split(g) is not None,
            "forbidden_witnesses": {name: find_induced(g, make()) for name, make in FORBIDDEN.items()},
        }
    )
    return EXIT_OK


def cmd_repair(args: argparse.Namespace) -> int:
    g = formats.parse_graph(_read(args.graph))
    if args.t is None and g.n > AUTO_T_LIMIT:
        raise InputError(f"graphs with more than {AUTO_T_LIMIT} vertices need an explicit --t")
    h, report = repair_graph(g, args.t, verify=args.verify)
    payload = report.to_json()
    if args.out:
        _write(args.out, formats.format_graph(h))
        payload["output_file"] = args.out
    else:
        payload["output_edges"] = [list(e) for e in h.edges()]
    _emit(payload)
    log.info("local difference %d <= %d (t=%d)", report.total, report.total_bound, report.t)
    if args.verify != "off" and not report.verified:
        log.error("verification failed")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    a = formats.parse_matrix(_read(args.matrix))
    t = min_restriction(a) if args.t is None else args.t
    stages = repair_matrix_stages(a, t, verify=args.verify == "full")
    b = stages.result
    inclusive = is_inclusive(b)
    total = stages.total_difference
    _, rows, cols = sort_to_monotone(b) if inclusive else (None, [], [])
    payload = {
        "m": a.m,
        "n": a.n,
        "t": t,
        "min_restriction": min_restriction(a),
        "breadth": {"before": breadth(a), "after_reduce": breadth(stages.reduced)},
        "diffs": {
            "reduce": stages.reduce_difference,
            "repair": stages.repair_difference,
            "total": total,
        },
        "bounds": {
            "reduce": 4 * t,
            "repair": line_bound(t, 4 * t) if t else 0,
            "proof": proof_bound(t),
            "total": stated_bound(t),
        },
        "verified": {"inclusive": inclusive, "bounds_hold": total <= stated_bound(t)},
        "orders": {"rows": rows, "cols": cols},
    }
    if args.out:
        _write(args.out, formats.format_matrix(b))
        payload["output_file"] = args.out
    else:
        payload["output_rows"] = b.rows()
    _emit(payload)
    log.info("local difference %d <= %d", total, stated_bound(t))
    if args.verify != "off" and not (inclusive and total <= stated_bound(t)):
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "stair":
        _write(args.out, formats.format_matrix(gen_stair(args.n, tweaked=args.tweaked)))
        return EXIT_OK
    if args.seed is None:
        raise InputError(f"gen {kind} needs --seed")
    if kind == "threshold":
        _write(args.out, formats.format_graph(gen_threshold(args.n, args.seed)))
    elif kind == "perturbed":
        if args.input is None:
            raise InputError("gen perturbed needs --input")
        g = formats.parse_graph(_read(args.input))
        _write(args.out, formats.format_graph(gen_perturbed(g, args.d, args.seed)))
    elif kind == "restricted":
        m = args.m if args.m is not None else args.n
        _write(args.out, formats.format_matrix(gen_t_restricted(m, args.n, args.d, args.seed)))
    return EXIT_OK


def cmd_counterexample(args: argparse.Namespace) -> int:
    gk = build_counterexample(args.k)
    if args.out:
        _write(args.out, formats.format_bipartite(gk.graph))
    payload = {
        "k": gk.k,
        "sizes": gk.sizes(),
        "nested_t": nesting_level(gk.graph),
        "degree_bounds_ok": gk.degree_bounds_ok(),
        "private_witnesses_ok": gk.private_witnesses_ok(),
        "oracle_distance": oracle_min_halfgraph_distance(gk.graph) if args.oracle else None,
    }
    _emit(payload)
    ok = payload["nested_t"] <= 1 and payload["degree_bounds_ok"] and payload["private_witnesses_ok"]
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_bounds(args: argparse.Namespace) -> int:
    h1 = formats.parse_graph(_read(args.h1))
    h2 = formats.parse_graph(_read(args.h2))
    g = formats.parse_graph(_read(args.g))
    report = check_thresholds2(h1, h2, g)
    _emit(report.to_json())
    if not report.premises_met:
        log.error("premises not met: %s", {k: v for k, v in report.premises.items() if not v})
        return EXIT_INPUT
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    text = _read(args.file)
    if args.kind == "threshold":
        distance = oracle_min_threshold_distance(formats.parse_graph(text))
    elif args.kind == "monotone":
        distance = oracle_min_monotone_distance(formats.parse_matrix(text))
    else:
        distance = oracle_min_halfgraph_distance(formats.parse_bipartite(text))
    _emit({"kind": args.kind, "distance": distance})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdom", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="domination level and recognizers for a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("repair", help="repair a t-dominating graph into a threshold graph")
    p.add_argument("graph")
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.add_argument("--verify", choices=VERIFY_LEVELS, default="post")
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("matrix", help="repair a t-restricted matrix into an inclusive one")
    p.add_argument("matrix")
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.add_argument("--verify", choices=VERIFY_LEVELS, default="post")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("gen", help="seeded generators")
    p.add_argument("kind", choices=("threshold", "perturbed", "restricted", "stair"))
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--seed", type=int)
    p.add_argument("--input")
    p.add_argument("--tweaked", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("counterexample", help="build and check the tree counterexample")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("bounds", help="check the excluded-threshold-pair bound")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", help="exact brute-force distances")
    p.add_argument("kind", choices=("threshold", "monotone", "halfgraph"))
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (InputError, ResourceError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except InvariantError as exc:
        log.error("verification failed: %s", exc)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
