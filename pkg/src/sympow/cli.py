"""Command-line front end.

Every command builds a JSON-serialisable report; ``--format text`` renders
that same report, so text output never carries information the JSON lacks.

Exit codes: 0 success, 1 input error, 2 size guard exceeded, 3 internal
cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import CrossCheckError, InputError, TooLarge
from .hypergraph import (
    Hypergraph,
    find_bad_subhypergraphs,
    find_r_partition,
    independence_number,
    is_uniform,
    is_vertex_transitive,
    load_hypergraph,
    minimal_vertex_covers,
)
from .mengerian import check_mengerian_upto
from .monomials import equals
from .paths import (
    check_t_partite_cycle,
    load_tree,
    path_hypergraph_cycle,
    path_hypergraph_tree,
    waldschmidt_cycle_path,
)
from .symbolic import (
    check_equality,
    classify_3partite_equality,
    second_symbolic_via_bad,
    symbolic_power,
)
from .waldschmidt import (
    alpha_sequence,
    fmt_rational,
    fractional_chromatic,
    waldschmidt_r_partite,
    waldschmidt_via_chi,
)

ENV_MAX_VERTICES = "SYMPOW_MAX_VERTICES"


def make_report(command: str, H: Hypergraph, payload: dict) -> dict:
    return {
        "command": command,
        "input_digest": H.digest(),
        "payload": payload,
        "version": __version__,
    }


def dump_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    lines = []

    def emit(key, value, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k in sorted(value):
                emit(k, value[k], depth + 1)
        elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
            lines.append(f"{pad}{key}:")
            for i, v in enumerate(value):
                emit(f"[{i}]", v, depth + 1)
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + (", ".join(str(v) for v in value) or "(none)"))
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  | {row}" for row in value.rstrip("\n").split("\n"))
        elif value is None:
            lines.append(f"{pad}{key}: -")
        elif isinstance(value, bool):
            lines.append(f"{pad}{key}: {'yes' if value else 'no'}")
        else:
            lines.append(f"{pad}{key}: {value}")

    for key in sorted(report):
        emit(key, report[key], 0)
    return "\n".join(lines) + "\n"


def _guards(args) -> dict:
    limit = args.max_vertices
    if limit is None and os.environ.get(ENV_MAX_VERTICES):
        try:
            limit = int(os.environ[ENV_MAX_VERTICES])
        except ValueError:
            raise InputError(f"{ENV_MAX_VERTICES} must be an integer") from None
    return {} if limit is None else {"max_vertices": limit}


def _uniform_rank(H: Hypergraph) -> int | None:
    sizes = set(H.edge_sizes())
    return sizes.pop() if len(sizes) == 1 else None


def _partition_info(H: Hypergraph, r: int | None):
    if r is None:
        return None
    P = find_r_partition(H, r)
    return None if P is None else P.named_blocks(H)


def cmd_analyze(H: Hypergraph, args) -> dict:
    r = _uniform_rank(H)
    a, witness = independence_number(H)
    blocks = _partition_info(H, r)
    return {
        "vertices": list(H.vertex_names),
        "num_vertices": H.num_vertices,
        "num_edges": H.num_edges,
        "edges": H.named_edges(),
        "uniform_rank": r,
        "r_partite": blocks is not None,
        "r_partition": blocks,
        "minimal_covers": len(minimal_vertex_covers(H)),
        "independence_number": a,
        "independence_witness": H.names(sorted(witness)),
        "bad_witnesses": [w.to_dict(H) for w in find_bad_subhypergraphs(H)],
    }


def cmd_symbolic(H: Hypergraph, args) -> dict:
    if args.n < 1:
        raise InputError("--n must be positive")
    guards = _guards(args)
    S = symbolic_power(H, args.n, **guards)
    payload = {"n": args.n, "generators": S.format(H.vertex_names)}
    if not args.compare:
        return payload
    payload["equality"] = check_equality(H, args.n, **guards).to_dict(H.vertex_names)
    payload["classification"] = None
    if is_uniform(H, 3) and find_r_partition(H, 3) is not None:
        cls = classify_3partite_equality(H)
        second = S if args.n == 2 else symbolic_power(H, 2, **guards)
        if not equals(second_symbolic_via_bad(H), second):
            raise CrossCheckError("I^(2) differs from I^2 plus the bad sextics")
        equal2 = payload["equality"]["equal"] if args.n == 2 else check_equality(H, 2, **guards).equal
        if cls.predicts_equal != equal2:
            raise CrossCheckError(
                f"classification {cls.verdict.value} predicts equal={cls.predicts_equal} "
                f"but I^(2) = I^2 is {equal2}"
            )
        payload["classification"] = cls.to_dict(H)
    return payload


def _waldschmidt_payload(H: Hypergraph, m_max: int, guards: dict, cycle=None) -> dict:
    lp_guards = {"max_vertices": guards["max_vertices"]} if guards else {}
    sol = fractional_chromatic(H, **lp_guards)
    chi = sol.optimum
    value = waldschmidt_via_chi(H, **lp_guards)
    seq = alpha_sequence(H, m_max, **guards)
    bounds = [Fraction(a, m) for m, a in seq]
    if any(b < value for b in bounds):
        raise CrossCheckError("an alpha(I^(m))/m bound lies below the Waldschmidt constant")
    checks = []
    r = _uniform_rank(H)
    if r is not None and r >= 2 and find_r_partition(H, r) is not None:
        checks.append({
            "name": "r_partite_waldschmidt",
            "value": fmt_rational(waldschmidt_r_partite(H, r)),
        })
        if chi != Fraction(r, r - 1):
            raise CrossCheckError(f"chi* = {chi} but an {r}-partite hypergraph needs {r}/{r - 1}")
    if H.num_vertices <= 10 and is_vertex_transitive(H):
        a, _ = independence_number(H)
        if chi != Fraction(H.num_vertices, a):
            raise CrossCheckError(f"vertex-transitive hypergraph but chi* = {chi} != |V|/a")
        checks.append({
            "name": "vertex_transitive_chi",
            "value": fmt_rational(Fraction(H.num_vertices, a)),
        })
    if cycle is not None:
        n, t = cycle
        closed = waldschmidt_cycle_path(n, t)
        if closed != value:
            raise CrossCheckError(f"cycle closed form {closed} disagrees with LP value {value}")
        checks.append({"name": "cycle_path_waldschmidt", "value": fmt_rational(closed)})
    return {
        "fractional_chromatic": sol.to_dict(H),
        "waldschmidt": fmt_rational(value),
        "alpha_sequence": [{"m": m, "alpha": a} for m, a in seq],
        "upper_bounds": [fmt_rational(b) for b in bounds],
        "cross_checks": checks,
    }


def cmd_waldschmidt(H: Hypergraph, args) -> dict:
    if args.m_max < 1:
        raise InputError("--m-max must be positive")
    cycle = (args.cycle, args.t) if args.cycle is not None else None
    return _waldschmidt_payload(H, args.m_max, _guards(args), cycle)


def cmd_paths(H: Hypergraph, args) -> dict:
    payload = {"t": args.t, "hypergraph": H.to_text(), "num_edges": H.num_edges}
    if args.cycle is not None:
        ok, P = check_t_partite_cycle(args.cycle, args.t, cross_check=True)
        payload["source"] = {"cycle": args.cycle}
        payload["t_partite"] = ok
        payload["partition"] = P.named_blocks(H) if P else None
        payload["waldschmidt"] = fmt_rational(waldschmidt_cycle_path(args.cycle, args.t))
    else:
        blocks = _partition_info(H, args.t)
        payload["source"] = {"tree": os.path.basename(args.tree)}
        payload["t_partite"] = blocks is not None
        payload["partition"] = blocks
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(H.to_text())
    return payload


def cmd_mengerian(H: Hypergraph, args) -> dict:
    guards = _guards(args)
    return check_mengerian_upto(H, args.c_max, **guards).to_dict()


def _input_hypergraph(args) -> Hypergraph:
    if getattr(args, "cycle", None) is not None:
        if args.t is None:
            raise InputError("--cycle requires --t")
        return path_hypergraph_cycle(args.cycle, args.t)
    if getattr(args, "tree", None) is not None:
        if args.t is None:
            raise InputError("--tree requires --t")
        return path_hypergraph_tree(load_tree(args.tree), args.t)
    if getattr(args, "file", None) is None:
        raise InputError("an input file is required")
    return load_hypergraph(args.file)


COMMANDS = {
    "analyze": cmd_analyze,
    "symbolic": cmd_symbolic,
    "waldschmidt": cmd_waldschmidt,
    "paths": cmd_paths,
    "mengerian": cmd_mengerian,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-vertices", type=int, default=None,
                        help=f"override size guards (also ${ENV_MAX_VERTICES})")

    parser = argparse.ArgumentParser(
        prog="sympow",
        description="Symbolic powers and Waldschmidt constants of hypergraph edge ideals.",
        epilog="exit codes: 0 ok, 1 input error, 2 size guard exceeded, 3 cross-check failed",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="combinatorial summary")
    p.add_argument("file")

    p = sub.add_parser("symbolic", parents=[common], help="symbolic power generators")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--compare", action="store_true", help="compare with the ordinary power")

    p = sub.add_parser("waldschmidt", parents=[common], help="Waldschmidt constant via chi*")
    p.add_argument("file", nargs="?")
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--cycle", type=int)
    p.add_argument("--t", type=int)

    p = sub.add_parser("paths", parents=[common], help="path hypergraphs of cycles and trees")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cycle", type=int)
    src.add_argument("--tree")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out", help="also write the hypergraph to this file")

    p = sub.add_parser("mengerian", parents=[common], help="bounded Mengerian check")
    p.add_argument("file")
    p.add_argument("--c-max", type=int, default=2)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Execute a command; returns (exit code, stdout text). Diagnostics go to stderr."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; here 2 is reserved for size guards
        return (1 if exc.code else 0), ""
    try:
        H = _input_hypergraph(args)
        report = make_report(args.command, H, COMMANDS[args.command](H, args))
    except (InputError, OSError) as exc:
        print(f"sympow: error: {exc}", file=sys.stderr)
        return 1, ""
    except TooLarge as exc:
        print(f"sympow: guard exceeded: {exc}", file=sys.stderr)
        return 2, ""
    except CrossCheckError as exc:
        print(f"sympow: internal cross-check failed: {exc}", file=sys.stderr)
        return 3, ""
    out = dump_json(report)
    if args.format == "text":
        out = render_text(json.loads(out))
    return 0, out


def main(argv=None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
