"""Command-line client for the service.

By default every command runs the FastAPI app in-process (no network); pass
``--server URL`` to talk to a running instance instead.  Machine-readable
output goes to stdout and is byte-identical across identical invocations;
human-readable summaries go to stderr (suppressed by ``--quiet``).

Exit codes: 0 = success / all checks passed; 1 = a verification check failed
(counterexamples are in the emitted records); 2 = usage or parameter error.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from typing import Any

import httpx

from . import __version__
from .exports import ARC_FIELDS, DISTANCE_FIELDS, dumps_compact, render_csv, render_dot, render_jsonl
from .topology import NetworkParams
from .verify import SUITES


class UsageError(Exception):
    """Command-line usage problem (maps to exit code 2)."""


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--delta", type=int, help="max out-degree of the full network")
    common.add_argument("--dee", type=int, help="word length (= full-network diameter)")
    common.add_argument("--r", type=int, default=0, help="number of deleted rotations (default 0)")
    common.add_argument("--format", choices=("dot", "jsonl", "csv"), default="jsonl",
                        help="output format (default jsonl; dot/csv only for gen)")
    common.add_argument("--max-vertices", type=int, default=None,
                        help="instance-size guard for exhaustive work")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    common.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
    common.add_argument("--server", default=None,
                        help="base URL of a running service (default: in-process)")

    parser = argparse.ArgumentParser(
        prog="cycleprefix",
        description="Rotation/shift networks: generation, routing, containers, verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", parents=[common],
                           help="emit the arc table or a distance table")
    p_gen.add_argument("--table", choices=("arcs", "distances"), default="arcs")
    p_gen.add_argument("--source", default=None,
                       help="single source vertex for distance tables")

    p_route = sub.add_parser("route", parents=[common],
                             help="route between two vertices")
    p_route.add_argument("source", help="source vertex text")
    p_route.add_argument("target", help="target vertex text")
    p_route.add_argument("--mode", choices=("shortest", "restricted", "reach"),
                         default="shortest")

    p_cont = sub.add_parser("container", parents=[common],
                            help="build the disjoint-path container for a pair")
    p_cont.add_argument("source", help="source vertex text")
    p_cont.add_argument("target", help="target vertex text")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run a verification suite against the oracle")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--sample", type=int, default=None,
                          help="sample size for sampled checks (suite-specific default)")

    sub.add_parser("params", parents=[common],
                   help="derived facts about one instance")
    return parser


def _call_service(server: str | None, method: str, path: str, *,
                  json_body: dict | None = None,
                  query: dict | None = None) -> tuple[int, Any]:
    """One HTTP round-trip, in-process by default (ASGI transport)."""

    async def go() -> tuple[int, Any]:
        if server is None:
            from .service import app

            transport = httpx.ASGITransport(app=app)
            client = httpx.AsyncClient(transport=transport,
                                       base_url="http://cycleprefix.internal",
                                       timeout=None)
        else:
            client = httpx.AsyncClient(base_url=server, timeout=None)
        async with client:
            resp = await client.request(method, path, json=json_body, params=query)
            try:
                payload = resp.json()
            except ValueError:
                payload = {"detail": resp.text}
            return resp.status_code, payload

    return asyncio.run(go())


def _require_instance(args: argparse.Namespace) -> dict:
    if args.delta is None or args.dee is None:
        raise UsageError(f"{args.command} requires --delta and --dee")
    return {"delta": args.delta, "dee": args.dee, "r": args.r}


def _require_jsonl(args: argparse.Namespace) -> None:
    if args.format != "jsonl":
        raise UsageError(f"{args.command} supports only --format jsonl")


def _note(args: argparse.Namespace, text: str) -> None:
    if not args.quiet:
        print(text, file=sys.stderr)


def _cmd_gen(args: argparse.Namespace) -> int:
    body = _require_instance(args)
    body["table"] = args.table
    if args.source is not None:
        if args.table != "distances":
            raise UsageError("--source only applies to --table distances")
        body["source"] = args.source
    if args.max_vertices is not None:
        body["max_vertices"] = args.max_vertices
    if args.format == "dot" and args.table != "arcs":
        raise UsageError("dot output only applies to the arc table")
    status, payload = _call_service(args.server, "POST", "/gen", json_body=body)
    if status != 200:
        return _fail(status, payload)
    rows = payload["rows"]
    if args.format == "jsonl":
        sys.stdout.write(render_jsonl(rows))
    elif args.format == "csv":
        fields = ARC_FIELDS if args.table == "arcs" else DISTANCE_FIELDS
        sys.stdout.write(render_csv(rows, fields))
    else:
        p = NetworkParams(delta=args.delta, dee=args.dee, r=args.r)
        sys.stdout.write(render_dot(rows, p))
    _note(args, f"{args.table} table: {payload['row_count']} rows over "
                f"{payload['vertex_count']} vertices (delta={args.delta}, dee={args.dee}, r={args.r})")
    return 0


def _cmd_route(args: argparse.Namespace) -> int:
    _require_jsonl(args)
    body = _require_instance(args)
    body.update(source=args.source, target=args.target, mode=args.mode)
    status, payload = _call_service(args.server, "POST", "/route", json_body=body)
    if status != 200:
        return _fail(status, payload)
    sys.stdout.write(dumps_compact(payload) + "\n")
    walk_note = "" if payload["simple"] else " (walk: vertices repeat)"
    _note(args, f"{args.mode}: {args.source} -> {args.target}, "
                f"length {payload['length']}{walk_note}")
    return 0


def _cmd_container(args: argparse.Namespace) -> int:
    _require_jsonl(args)
    body = _require_instance(args)
    body.update(source=args.source, target=args.target)
    status, payload = _call_service(args.server, "POST", "/container", json_body=body)
    if status != 200:
        return _fail(status, payload)
    sys.stdout.write(dumps_compact(payload) + "\n")
    _note(args, f"container {args.source} -> {args.target}: width {payload['width']}, "
                f"length {payload['length']} (bound {payload['max_allowed']}), "
                f"disjoint={payload['disjoint']}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    _require_jsonl(args)
    body: dict[str, Any] = {"suite": args.suite, "seed": args.seed}
    if (args.delta is None) != (args.dee is None):
        raise UsageError("fix an instance with both --delta and --dee, or neither")
    if args.delta is not None:
        body.update(delta=args.delta, dee=args.dee, r=args.r)
    if args.max_vertices is not None:
        body["max_vertices"] = args.max_vertices
    if args.sample is not None:
        body["sample"] = args.sample
    status, payload = _call_service(args.server, "POST", "/verify", json_body=body)
    if status != 200:
        return _fail(status, payload)
    sys.stdout.write(render_jsonl(payload["records"]))
    summary = payload["summary"]
    verdict = "PASS" if payload["passed"] else "FAIL"
    _note(args, f"suite {args.suite}: {summary['records']} records, "
                f"{summary['failed']} failed -> {verdict}")
    return 0 if payload["passed"] else 1


def _cmd_params(args: argparse.Namespace) -> int:
    _require_jsonl(args)
    query = _require_instance(args)
    status, payload = _call_service(args.server, "GET", "/params", query=query)
    if status != 200:
        return _fail(status, payload)
    sys.stdout.write(dumps_compact(payload) + "\n")
    return 0


def _fail(status: int, payload: Any) -> int:
    detail = payload.get("detail", payload) if isinstance(payload, dict) else payload
    print(f"error (HTTP {status}): {dumps_compact(detail) if not isinstance(detail, str) else detail}",
          file=sys.stderr)
    return 2


_COMMANDS = {
    "gen": _cmd_gen,
    "route": _cmd_route,
    "container": _cmd_container,
    "verify": _cmd_verify,
    "params": _cmd_params,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"service unreachable: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
