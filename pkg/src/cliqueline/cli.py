"""Command-line driver: graph construction, homology, collapsing, verification.

Exit codes for ``verify``: 0 all checks pass, 1 any failure, 2 configuration
error.  Other subcommands exit 0 on success and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .collapse import greedy_collapse, trace_to_json, wheel_free_collapse
from .complexes import (clique_complex, complex_from_json, complex_to_json,
                        line_clique_complex, skeleton)
from .graphs import (CirculantSpec, Graph, circulant, complete,
                     complete_multipartite, cone, cycle, disjoint_union,
                     format_edge_list, glue, line_graph, parse_edge_list, path,
                     suspension, wedge_at_vertex, wheel)
from .homology import reduced_homology
from .verify import SUITES, FUZZ_FAMILIES, SuiteConfigError, default_config, run_suite


def _load_graph(path_str: str) -> Graph:
    return parse_edge_list(Path(path_str).read_text())


def _emit_graph(g: Graph, out: str | None) -> None:
    text = format_edge_list(g)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _cmd_build(args: argparse.Namespace) -> int:
    kind = args.constructor
    params = args.args
    if kind == "complete":
        g = complete(int(params[0]))
    elif kind == "cycle":
        g = cycle(int(params[0]))
    elif kind == "path":
        g = path(int(params[0]))
    elif kind == "wheel":
        g = wheel(int(params[0]))
    elif kind == "complete-multipartite":
        g = complete_multipartite(_ints(params[0]))
    elif kind == "circulant":
        g = circulant(CirculantSpec.make(int(params[0]), _ints(params[1])))
    elif kind == "line-graph":
        g = line_graph(_load_graph(params[0]))
    elif kind == "cone":
        g = cone(_load_graph(params[0]))
    elif kind == "suspension":
        g = suspension(_load_graph(params[0]))
    elif kind == "disjoint-union":
        g = disjoint_union(_load_graph(params[0]), _load_graph(params[1]))
    elif kind == "wedge":
        v1, v2 = _ints(args.at or "0,0")
        g = wedge_at_vertex(_load_graph(params[0]), _load_graph(params[1]), v1, v2)
    elif kind == "glue":
        overlap = {}
        for piece in (args.map or "").split(","):
            if piece.strip():
                a, b = piece.split(":")
                overlap[int(a)] = int(b)
        g = glue(_load_graph(params[0]), _load_graph(params[1]), overlap)
    else:
        raise ValueError(f"unknown constructor {kind!r}")
    _emit_graph(g, args.out)
    return 0


def _cmd_homology(args: argparse.Namespace) -> int:
    source = Path(args.input)
    if source.suffix == ".json":
        k = complex_from_json(json.loads(source.read_text()))
    else:
        g = parse_edge_list(source.read_text())
        if args.of == "clique":
            k = clique_complex(g)
        elif args.of == "skeleton2":
            k = skeleton(clique_complex(g), 2)
        else:
            k = line_clique_complex(g)
    profile = reduced_homology(k)
    json.dump(profile.to_json(), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def _cmd_collapse(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    k = line_clique_complex(g)
    if args.strategy == "wheelfree":
        trace = wheel_free_collapse(g)
    else:
        trace = greedy_collapse(k, target_dim=args.target_dim)
    summary = {
        "strategy": args.strategy,
        "steps": len(trace.steps),
        "start_dim": trace.start.dim,
        "end_dim": trace.end.dim,
        "end_facets": len(trace.end.facets),
        "end_homology": reduced_homology(trace.end).to_json(),
    }
    if args.out:
        Path(args.out).write_text(json.dumps(trace_to_json(trace), indent=2, sort_keys=True) + "\n")
    json.dump(summary, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.config:
        cfg_path = Path(args.config)
        if cfg_path.suffix == ".toml":
            try:
                import tomllib  # Python 3.11+
            except ImportError:
                try:
                    import tomli as tomllib
                except ImportError:
                    raise SuiteConfigError("TOML configs need Python 3.11+ or tomli; use JSON")
            config = tomllib.loads(cfg_path.read_text())
        else:
            config = json.loads(cfg_path.read_text())
    else:
        config = default_config()
    if args.seed is not None:
        config["seed"] = args.seed
    if args.check:
        wanted = set(args.check)
        unknown = wanted - set(SUITES)
        if unknown:
            raise SuiteConfigError(f"unknown check name(s): {sorted(unknown)}")
        config["checks"] = [c for c in config["checks"] if c["name"] in wanted]
    if args.parts:
        for entry in config["checks"]:
            if entry["name"] == "multipartite":
                entry.setdefault("params", {})["parts"] = _ints(args.parts)
    if args.fuzz:
        family, _, count = args.fuzz.partition(":")
        if family not in FUZZ_FAMILIES:
            raise SuiteConfigError(f"unknown fuzz family {family!r}")
        name = FUZZ_FAMILIES[family]
        config["checks"] = [c for c in config["checks"] if c["name"] != name]
        config["checks"].append({"name": name, "enabled": True,
                                 "params": {"count": int(count or 10)}})
    code, reports = run_suite(config, args.out)
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        print(f"{status}  {rep.name}  {json.dumps(rep.params, sort_keys=True)[:100]}")
    print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliqueline",
        description="Clique complexes of line graphs: construction, collapse, "
                    "exact homology, and theorem verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="graph constructors, written as edge lists")
    p_build.add_argument("constructor",
                         choices=["complete", "cycle", "path", "wheel",
                                  "complete-multipartite", "circulant", "line-graph",
                                  "cone", "suspension", "disjoint-union", "wedge", "glue"])
    p_build.add_argument("args", nargs="*", help="constructor arguments")
    p_build.add_argument("--out", "-o", help="output edge-list file (default stdout)")
    p_build.add_argument("--at", help="wedge vertices as 'v1,v2'")
    p_build.add_argument("--map", help="glue map as 'g2v:g1v,...'")
    p_build.set_defaults(fn=_cmd_build)

    p_hom = sub.add_parser("homology", help="reduced integer homology profile")
    p_hom.add_argument("input", help="complex .json or graph edge-list file")
    p_hom.add_argument("--of", choices=["delta-line", "clique", "skeleton2"],
                       default="delta-line",
                       help="which complex to build from a graph input")
    p_hom.set_defaults(fn=_cmd_homology)

    p_col = sub.add_parser("collapse", help="collapse the line-clique complex")
    p_col.add_argument("input", help="graph edge-list file")
    p_col.add_argument("--strategy", choices=["wheelfree", "greedy"], default="wheelfree")
    p_col.add_argument("--target-dim", type=int, default=None)
    p_col.add_argument("--out", help="write the trace as JSON")
    p_col.set_defaults(fn=_cmd_collapse)

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--config", help="JSON or TOML config file")
    p_ver.add_argument("--check", action="append", help="run only this suite (repeatable)")
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--out", help="write the JSON report array here")
    p_ver.add_argument("--parts", help="part sizes for the multipartite check, e.g. 3,3,2")
    p_ver.add_argument("--fuzz", help="FAMILY:COUNT, e.g. chordal:50")
    p_ver.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SuiteConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
