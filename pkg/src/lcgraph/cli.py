"""Command-line front end.

Exit codes: 0 = equivalent / success, 1 = not equivalent (or witness
invalid), 2 = usage or parse error.  On exit 2, stdout stays empty and
diagnostics go to stderr.  Set LC_EQUIV_THREADS to bound the number of
worker threads used for per-component solving (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .equivalence import Verdict, check_equivalence, verify_witness_stages
from .graphs import (
    Graph,
    GraphFormatError,
    apply_lc_sequence,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
)
from .orbit import DEFAULT_ORBIT_CAP, orbit_bfs
from .symplectic import LocalCliffordOp, StabilizerFormatError, parse_pauli_stabilizer, stabilizer_to_graph

WITNESS_SCHEMA = "lc-witness/1"


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"{path}: {exc.strerror or exc}") from exc


def _detect_format(path: str, text: str) -> str:
    if path.endswith(".g6"):
        return "graph6"
    if path.endswith((".edges", ".edgelist")):
        return "edges"
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        # graph6 bytes are 63..126 and never contain blanks or '#'
        if stripped.startswith("#") or any(ch.isspace() for ch in stripped):
            return "edges"
        return "graph6"
    return "graph6"


def _load_graph(path: str, fmt: str | None) -> tuple[Graph, str]:
    text = _read_text(path)
    fmt = fmt or _detect_format(path, text)
    try:
        if fmt == "graph6":
            return parse_graph6(text), fmt
        return parse_edge_list(text), fmt
    except GraphFormatError as exc:
        raise _UsageError(f"{path}: {exc}") from exc


def _serialize(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return serialize_graph6(g)
    return serialize_edge_list(g).rstrip("\n")


def _threads_from_env() -> int:
    raw = os.environ.get("LC_EQUIV_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"LC_EQUIV_THREADS must be an integer, got {raw!r}") from None
    return max(1, value)


def _witness_json(verdict: Verdict, n: int, elapsed: float) -> dict:
    doc = {
        "schema": WITNESS_SCHEMA,
        "verdict": "equivalent" if verdict.equivalent else "not_equivalent",
        "n": n,
        "witness": None,
        "components": [
            {
                "vertices": list(r.vertices),
                "dim_V": r.dim_v,
                "search_path": r.search_path,
                "admissible": r.admissible,
            }
            for r in verdict.per_component
        ],
        "time_seconds": elapsed,
    }
    if verdict.reason:
        doc["reason"] = verdict.reason
    if verdict.witness is not None:
        op = verdict.witness.op
        doc["witness"] = {
            "qubits": [
                {
                    "index": i,
                    "quadruple": list(op.quadruple(i)),
                    "class": op.class_name(i),
                }
                for i in range(op.n)
            ]
        }
    return doc


def _print_witness_text(op: LocalCliffordOp) -> None:
    for i in range(op.n):
        a, b, c, d = op.quadruple(i)
        print(f"qubit {i}: {op.class_name(i)} [{a},{b},{c},{d}]")


def _load_witness_op(path: str, n: int) -> LocalCliffordOp:
    try:
        doc = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("schema") != WITNESS_SCHEMA:
        raise _UsageError(f"{path}: expected a {WITNESS_SCHEMA!r} document")
    witness = doc.get("witness")
    if not witness or "qubits" not in witness:
        raise _UsageError(f"{path}: document carries no witness")
    entries = witness["qubits"]
    if len(entries) != n:
        raise _UsageError(f"{path}: witness is for {len(entries)} qubits, graphs have {n}")
    quads: list[tuple[int, int, int, int]] = [(1, 0, 0, 1)] * n
    try:
        for entry in entries:
            idx = entry["index"]
            a, b, c, d = entry["quadruple"]
            quads[idx] = (a, b, c, d)
        return LocalCliffordOp(quads)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise _UsageError(f"{path}: malformed witness: {exc}") from exc


def _cmd_check(args: argparse.Namespace) -> int:
    g1, _ = _load_graph(args.file1, args.format)
    g2, _ = _load_graph(args.file2, args.format)
    if g1.n == 0 or g2.n == 0:
        raise _UsageError("graphs must have at least one vertex")

    if args.verify_witness:
        op = _load_witness_op(args.verify_witness, g1.n)
        if g1.n != g2.n:
            print("witness invalid (graphs have different orders)")
            return 1
        ok, stage = verify_witness_stages(g1, g2, op)
        if args.json:
            print(
                json.dumps(
                    {
                        "schema": WITNESS_SCHEMA,
                        "verdict": "witness_valid" if ok else "witness_invalid",
                        "failed_stage": stage,
                    }
                )
            )
        else:
            print("witness valid" if ok else f"witness invalid (stage: {stage})")
        return 0 if ok else 1

    start = time.perf_counter()
    verdict = check_equivalence(g1, g2, threads=_threads_from_env())
    elapsed = time.perf_counter() - start

    if args.json:
        print(json.dumps(_witness_json(verdict, g1.n, elapsed), indent=2))
    elif verdict.equivalent:
        print("equivalent")
        if args.witness:
            _print_witness_text(verdict.witness.op)
    else:
        print("not equivalent" + (f" ({verdict.reason})" if verdict.reason else ""))
    return 0 if verdict.equivalent else 1


def _cmd_lc(args: argparse.Namespace) -> int:
    g, fmt = _load_graph(args.file, args.format)
    try:
        seq = [int(tok) for tok in args.at.split(",") if tok.strip() != ""]
    except ValueError:
        raise _UsageError(f"--at expects comma-separated integers, got {args.at!r}") from None
    for i in seq:
        if not 0 <= i < g.n:
            raise _UsageError(f"vertex {i} out of range for a graph on {g.n} vertices")
    print(_serialize(apply_lc_sequence(g, seq), fmt))
    return 0


def _cmd_orbit(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.file, args.format)
    if args.cap is not None and args.cap < 1:
        raise _UsageError("--cap must be at least 1")
    orbit = orbit_bfs(g, cap=args.cap)
    if orbit.truncated:
        print(f"truncated at {args.cap}")
        return 0
    print(f"orbit size: {orbit.size}")
    for member in sorted(orbit.members):
        print(member)
    return 0


def _cmd_from_stabilizer(args: argparse.Namespace) -> int:
    text = _read_text(args.file)
    try:
        s = parse_pauli_stabilizer(text)
    except StabilizerFormatError as exc:
        raise _UsageError(f"{args.file}: {exc}") from exc
    graph, op = stabilizer_to_graph(s)
    print(serialize_graph6(graph))
    if args.witness:
        _print_witness_text(op)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcgraph",
        description="Decide local Clifford equivalence of graph states, "
        "apply local complementations, explore orbits, and reduce "
        "stabilizers to graph states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide equivalence of two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--format", choices=["graph6", "edges"], default=None)
    p.add_argument("--witness", action="store_true", help="print the witness operator")
    p.add_argument("--json", action="store_true", help="emit a lc-witness/1 JSON report")
    p.add_argument(
        "--verify-witness",
        metavar="PATH",
        default=None,
        help="verify a previously emitted JSON witness instead of solving",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("lc", help="apply local complementations")
    p.add_argument("file")
    p.add_argument("--at", required=True, metavar="I[,J,...]")
    p.add_argument("--format", choices=["graph6", "edges"], default=None)
    p.set_defaults(func=_cmd_lc)

    p = sub.add_parser("orbit", help="enumerate a local-complementation orbit")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP, metavar="N")
    p.add_argument("--format", choices=["graph6", "edges"], default=None)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("from-stabilizer", help="reduce a Pauli stabilizer to a graph state")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true", help="print the reducing operator")
    p.set_defaults(func=_cmd_from_stabilizer)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, StabilizerFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
