"""Thin command-line client over the HTTP service.

By default every subcommand talks to an in-process instance of the FastAPI
app, so no server is required; --server URL targets a running one instead
(start it with `spanlab serve`).

Exit codes: 0 success, 1 usage/parse error, 2 precondition violation,
3 check failed.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_CHECK_FAILED = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise CliError(message, EXIT_USAGE)


class ServiceClient:
    """POSTs against a remote server or the in-process app."""

    def __init__(self, server: str | None = None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict[str, Any]) -> dict[str, Any]:
        response = self._client.post(path, json=payload)
        body = response.json()
        if response.status_code == 200:
            return body
        category = body.get("category") if isinstance(body, dict) else None
        message = body.get("message", body) if isinstance(body, dict) else body
        if response.status_code == 400 or category == "parse":
            raise CliError(f"parse error: {message}", EXIT_USAGE)
        if response.status_code == 422:
            raise CliError(f"precondition violated: {message}", EXIT_PRECONDITION)
        raise CliError(f"service error {response.status_code}: {message}", EXIT_USAGE)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_USAGE) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _kv_lines(pairs: list[tuple[str, Any]]) -> str:
    out = []
    for key, value in pairs:
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, float):
            value = format(value, ".12g")
        elif value is None:
            value = ""
        out.append(f"{key}={value}")
    return "\n".join(out) + "\n"


def _parse_params(items: list[str]) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for item in items:
        if "=" not in item:
            raise CliError(f"--param expects key=value, got {item!r}", EXIT_USAGE)
        key, _, value = item.partition("=")
        for cast in (int, float):
            try:
                params[key] = cast(value)
                break
            except ValueError:
                continue
        else:
            params[key] = value
    return params


def _cmd_generate(args, client: ServiceClient) -> int:
    body = client.post("/generate", {
        "family": args.family,
        "params": _parse_params(args.param),
        "seed": args.seed,
        "declared_h": args.declared_h,
    })
    _write(args.out, body["graph"])
    print(_kv_lines([("n", body["n"]), ("m", body["m"]),
                     ("declared_h", body["declared_h"])]), end="", file=sys.stderr)
    return EXIT_OK


def _cmd_spanner(args, client: ServiceClient) -> int:
    body = client.post("/spanner", {
        "graph": _read(args.graph),
        "k": args.k,
        "epsilon": args.epsilon,
        "s": args.s,
    })
    _write(args.out, body["spanner"])
    metrics = body["metrics"]
    print(_kv_lines([
        ("t", body["t"]),
        ("edges_examined", body["edges_examined"]),
        ("edges_kept", body["edges_kept"]),
        ("sparsity", metrics["sparsity"]),
        ("lightness", metrics["lightness"]),
        ("mst_weight", metrics["mst_weight"]),
        ("total_weight", metrics["total_weight"]),
    ]), end="")
    return EXIT_OK


def _cmd_verify(args, client: ServiceClient) -> int:
    body = client.post("/verify", {
        "graph": _read(args.graph),
        "spanner": _read(args.spanner),
        "t": args.t,
        "mode": args.mode,
    })
    print(_kv_lines([
        ("t", body["t"]),
        ("mode", body["mode"]),
        ("max_edge_stretch", "inf" if body["max_edge_stretch"] is None
         else body["max_edge_stretch"]),
        ("worst_edge", body["worst_edge"]),
        ("max_pair_stretch", body["max_pair_stretch"]),
        ("worst_pair", None if body["worst_pair"] is None
         else "%d,%d" % tuple(body["worst_pair"])),
        ("passed", body["passed"]),
    ]), end="")
    if not body["passed"]:
        print("check failed: stretch bound violated", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_girth(args, client: ServiceClient) -> int:
    body = client.post("/girth", {"graph": _read(args.graph)})
    print(_kv_lines([
        ("girth", "inf" if body["girth"] is None else body["girth"]),
        ("girth_witness", "" if body["girth_witness"] is None
         else ",".join(map(str, body["girth_witness"]))),
        ("weighted_girth", "inf" if body["weighted_girth"] is None
         else body["weighted_girth"]),
        ("weighted_girth_witness", "" if body["weighted_girth_witness"] is None
         else ",".join(map(str, body["weighted_girth_witness"]))),
    ]), end="")
    return EXIT_OK


def _cmd_density(args, client: ServiceClient) -> int:
    body = client.post("/density", {"graph": _read(args.graph), "h": args.clique_order})
    print(_kv_lines([
        ("n", body["n"]),
        ("m", body["m"]),
        ("avg_degree", body["avg_degree"]),
        ("clique_order", body["clique_order"]),
        ("subgraph_vertices", len(body["subgraph_vertices"])),
        ("subgraph_edges", body["subgraph_edges"]),
        ("subgraph_density", body["subgraph_density"]),
        ("vertex_ratio", body["vertex_ratio"]),
        ("density_ratio", body["density_ratio"]),
    ]), end="")
    return EXIT_OK


def _cmd_experiment(args, client: ServiceClient) -> int:
    config_text = _read(args.config)
    payload: dict[str, Any] = {"config": config_text}
    if args.checks is not None:
        payload["checks"] = [c.strip() for c in args.checks.split(",") if c.strip()]
    body = client.post("/experiment", payload)
    out = args.out
    if out is None:
        # fall back to the output path named inside the config, else stdout
        from .experiment import parse_experiment_config

        try:
            out = parse_experiment_config(config_text).output
        except Exception:
            out = None
    _write(out, body["csv"])
    if not body["all_checks_passed"]:
        print("check failed: at least one result row has a failing check", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_serve(args, _client_unused) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="spanlab", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--server", default=None,
                        help="base URL of a running spanlab service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a benchmark instance")
    p.add_argument("--family", required=True)
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--declared-h", type=int, default=None, dest="declared_h")
    p.add_argument("--out", default=None, help="graph file (default: stdout)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("spanner", help="build the greedy spanner of a graph file")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--s", type=int, default=200)
    p.add_argument("--out", default=None, help="spanner file (default: stdout)")
    p.set_defaults(func=_cmd_spanner)

    p = sub.add_parser("verify", help="verify a spanner file against a graph file")
    p.add_argument("graph")
    p.add_argument("spanner")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--mode", choices=["edges-only", "all-pairs"], default="edges-only")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("girth", help="girth and weighted girth of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_girth)

    p = sub.add_parser("density", help="density-increment probe of a graph file")
    p.add_argument("graph")
    p.add_argument("--h", type=int, required=True, dest="clique_order")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("experiment", help="run a sweep described by a config file")
    p.add_argument("config")
    p.add_argument("--out", default=None, help="override the config's output path")
    p.add_argument("--checks", default=None,
                   help="comma-separated list overriding the config's checks")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        client = None if args.command == "serve" else ServiceClient(args.server)
        return args.func(args, client)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
