"""``sumdex`` command line.

Exit codes: 0 success, 1 invalid input, 2 budget exceeded or unknown result,
3 internal validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import repro
from .bounds import sum_index_bounds
from .constructions import (
    extremal_construction,
    label_cluster,
    label_hypercube,
    label_join_family,
    label_multipartite,
)
from .errors import ConstructionError, InputError
from .extremal import MAX_EXACT_N, extremal_table, table_to_csv, table_to_json
from .graph import FAMILY_KINDS, FamilySpec, encode_graph6, format_edge_list, generate, read_graph
from .groups import AbelianGroup, group_sum_index, min_restricted_sumset_complete, zp2_construction
from .labeling import labeling_from_json, rank_sums
from .solver import DEFAULT_NODE_BUDGET, DEFAULT_SEED, sum_index_exact

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--nodes", type=int, default=DEFAULT_NODE_BUDGET, help="search node budget")
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("--out", type=Path, default=None, help="also write output to this file")
    return p


def _graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="inline graph6 text")
    src.add_argument("--file", type=Path, help="graph6 or edge-list file")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="sumdex", description="Graph sum index workbench")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a named graph")
    p.add_argument("kind", choices=FAMILY_KINDS)
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    p = sub.add_parser("exact", parents=[common], help="exact sum index with certificate")
    _graph_input(p)

    p = sub.add_parser("bounds", parents=[common], help="lower/upper bounds")
    _graph_input(p)

    p = sub.add_parser("construct", parents=[common], help="explicit labeling constructions")
    p.add_argument("family", choices=("multipartite", "join", "hypercube", "cluster", "extremal"))
    p.add_argument("params", type=int, nargs="+")

    p = sub.add_parser("verify", parents=[common], help="recheck a Labeling JSON file")
    p.add_argument("path", type=Path)

    p = sub.add_parser("extremal", parents=[common], help="max-edge table for small n")
    p.add_argument("--n-max", type=int, default=MAX_EXACT_N)
    p.add_argument("--out-dir", type=Path, default=None)

    p = sub.add_parser("group", parents=[common], help="group-valued sum index")
    p.add_argument("action", choices=("min-complete", "index", "zp2"))
    p.add_argument("--group", type=AbelianGroup.parse)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--graph6")
    p.add_argument("--exhaustive", action="store_true", help="visit every subset, no pruning")

    p = sub.add_parser("repro", parents=[common], help="regenerate report artifacts")
    p.add_argument("target", choices=repro.TARGETS + ("all",))
    p.add_argument("--out-dir", type=Path, default=Path("reports"))
    return parser


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) if args.json else text
    print(out)
    if args.out is not None:
        args.out.write_text(out + "\n")


def _load_graph(args):
    if args.graph6 is not None:
        return read_graph(args.graph6)
    try:
        return read_graph(args.file.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from None


def cmd_gen(args) -> int:
    g = generate(FamilySpec(args.kind, tuple(args.params)))
    text = encode_graph6(g) if args.format == "graph6" else format_edge_list(g).rstrip("\n")
    _emit(args, {"family": g.family_tag, "graph6": encode_graph6(g), "n": g.n, "m": g.m}, text)
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _load_graph(args)
    cert = sum_index_exact(g, node_budget=args.nodes, seed=args.seed, time_limit=args.time_limit)
    data = cert.to_json()
    if cert.status != "exact":
        lo, hi = cert.bracket
        _emit(args, data, f"sum_index unknown, in [{lo}, {hi}] (budget used {cert.budget_used})")
        return EXIT_UNKNOWN
    ranks = " ".join(map(str, cert.witness.ranks))
    _emit(args, data, f"sum_index {cert.value}\nwitness {ranks}\nevidence {cert.lower_evidence['method']}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    report = sum_index_bounds(g)
    text = "\n".join(f"{k} {v}" for k, v in report.to_dict().items())
    _emit(args, report.to_dict(), text)
    return EXIT_OK


def cmd_construct(args) -> int:
    fam, p = args.family, args.params
    if fam == "multipartite":
        res = label_multipartite(p)
    elif fam == "join":
        res = label_join_family(p)
    elif fam == "hypercube":
        res = label_hypercube(*p)
    elif fam == "cluster":
        if len(p) != 2:
            raise InputError("cluster takes two parameters: n k")
        res = label_cluster(*p)
    else:
        if len(p) != 2:
            raise InputError("extremal takes two parameters: n N")
        res = extremal_construction(*p)
    data = res.to_json()
    _emit(args, data, f"{res.graph.family_tag} sum_count {res.achieved}\nranks {' '.join(map(str, res.labeling.ranks))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        data = json.loads(args.path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read labeling {args.path}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("labeling file must hold a JSON object")
    if isinstance(data.get("witness"), dict):
        # a certificate: check its witness labeling
        data = data["witness"]
    g, f = labeling_from_json(data)
    recomputed = rank_sums(g, f)
    recorded = data.get("sum_count")
    ok = recorded == recomputed.count and data.get("sums", [str(s) for s in recomputed.sums]) == [
        str(s) for s in recomputed.sums
    ]
    payload = {"recorded": recorded, "recomputed": recomputed.count, "ok": ok}
    _emit(args, payload, f"{'ok' if ok else 'MISMATCH'} recorded={recorded} recomputed={recomputed.count}")
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_extremal(args) -> int:
    entries = extremal_table(args.n_max, args.threads, args.nodes)
    csv_text = table_to_csv(entries)
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        (args.out_dir / "extremal_table.csv").write_text(csv_text)
        (args.out_dir / "extremal_table.json").write_text(json.dumps(table_to_json(entries), indent=2) + "\n")
    _emit(args, {"entries": table_to_json(entries)}, csv_text.rstrip("\n"))
    return EXIT_UNKNOWN if any(e.status == "unknown" for e in entries) else EXIT_OK


def cmd_group(args) -> int:
    if args.action == "zp2":
        if args.p is None:
            raise InputError("zp2 needs --p")
        X, achieved, sums = zp2_construction(args.p)
        payload = {"p": args.p, "subset": [list(x) for x in X], "achieved": achieved}
        _emit(args, payload, str(achieved))
        return EXIT_OK
    if args.group is None:
        raise InputError(f"{args.action} needs --group")
    if args.action == "min-complete":
        if args.m is None:
            raise InputError("min-complete needs --m")
        scan = min_restricted_sumset_complete(
            args.group, args.m, exhaustive=args.exhaustive, workers=args.threads
        )
        if scan.status != "exact":
            _emit(args, {"status": scan.status, "total": scan.total}, "unknown: subset count over budget")
            return EXIT_UNKNOWN
        payload = {"group": list(args.group.moduli), "m": args.m, "value": scan.value,
                   "witness": [list(x) for x in scan.witness], "status": scan.status}
        if args.exhaustive:
            payload["subsets_examined"] = scan.examined
        _emit(args, payload, str(scan.value))
        return EXIT_OK
    if args.graph6 is None:
        raise InputError("index needs --graph6")
    g = read_graph(args.graph6)
    res = group_sum_index(g, args.group, node_budget=args.nodes, workers=args.threads)
    payload = {"group": list(args.group.moduli), "value": res.value, "status": res.status,
               "witness": [list(x) for x in res.witness] if res.witness else None}
    _emit(args, payload, f"{res.value}" if res.status == "exact" else f"unknown (best {res.value})")
    return EXIT_OK if res.status == "exact" else EXIT_UNKNOWN


def cmd_repro(args) -> int:
    checks = repro.run(args.target, args.out_dir, workers=args.threads, seed=args.seed)
    for c in checks:
        print(c.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed; reports in {args.out_dir}")
    return EXIT_OK if not failed else EXIT_INTERNAL


COMMANDS = {
    "gen": cmd_gen,
    "exact": cmd_exact,
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
    "group": cmd_group,
    "repro": cmd_repro,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except ConstructionError as exc:
        print(f"sumdex: validation failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, ValueError) as exc:
        print(f"sumdex: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
