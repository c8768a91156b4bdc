"""Command-line front end.

Subcommands map one-to-one onto service endpoints. By default requests are
dispatched in-process through the same handlers the HTTP app uses; with
--server URL they go over HTTP instead, and responses are validated against
the shared response models either way. `serve` starts the HTTP app.

The circuit argument is a path when it names an existing file, otherwise it
is taken as an inline expression. SOPFAULT_MAX_VARS overrides the default
variable cap; an explicit --max-vars beats both.
"""

import argparse
import json
import os
import sys

from pydantic import ValidationError

from .errors import SopFaultError
from .service.handlers import ENDPOINTS
from .sop_parser import DEFAULT_MAX_VARS

ENV_MAX_VARS = "SOPFAULT_MAX_VARS"


class RemoteError(Exception):
    """HTTP 400 from a server: carries the domain error name and detail."""

    def __init__(self, name: str, detail: str):
        super().__init__(f"{name}: {detail}")
        self.name = name
        self.detail = detail


class Client:
    """Dispatches one endpoint call, in-process or over HTTP."""

    def __init__(self, server: str | None):
        self.server = server

    def call(self, endpoint: str, payload: dict) -> dict:
        request_model, handler, response_model = ENDPOINTS[endpoint]
        if self.server is None:
            request = request_model.model_validate(payload)
            return handler(request).model_dump(mode="json")
        import httpx

        url = f"{self.server.rstrip('/')}/{endpoint}"
        reply = httpx.post(url, json=payload, timeout=600.0)
        if reply.status_code == 400:
            body = reply.json()
            raise RemoteError(body.get("error", "error"), body.get("detail", ""))
        reply.raise_for_status()
        return response_model.model_validate(reply.json()).model_dump(mode="json")


def _read_circuit(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg, "r", encoding="ascii") as fh:
            return fh.read()
    return arg


def _resolve_max_vars(args: argparse.Namespace) -> int:
    if args.max_vars is not None:
        return args.max_vars
    env = os.environ.get(ENV_MAX_VARS)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"error: {ENV_MAX_VARS}={env!r} is not an integer")
    return DEFAULT_MAX_VARS


def _emit(text: str, args: argparse.Namespace) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def cmd_dict(client: Client, args: argparse.Namespace) -> int:
    payload = {
        "expression": _read_circuit(args.circuit),
        "max_vars": _resolve_max_vars(args),
        "format": args.format,
    }
    resp = client.call("dict", payload)
    _emit(resp["csv"] if args.format == "csv" else _json(resp), args)
    return 0


def cmd_faults(client: Client, args: argparse.Namespace) -> int:
    payload = {
        "expression": _read_circuit(args.circuit),
        "max_vars": _resolve_max_vars(args),
    }
    resp = client.call("faults", payload)
    if args.format == "json":
        _emit(_json(resp), args)
        return 0
    lines = [
        f"expression: {resp['expression']}",
        f"variables: {', '.join(resp['variables'])}",
        f"faults: {resp['fault_count']}  classes: {resp['class_count']}  "
        f"undetectable: {len(resp['undetectable'])}",
    ]
    for cls in resp["classes"]:
        sites = ", ".join(
            f"{site} [id {fid}]"
            for fid, site in zip(cls["members"], cls["sites"])
        )
        lines.append(f"f{cls['class_id']}: {sites}")
    if resp["undetectable"]:
        sites = ", ".join(
            f"{resp['faults'][fid]['site']} s-a-{resp['faults'][fid]['stuck_value']} "
            f"[id {fid}]"
            for fid in resp["undetectable"]
        )
        lines.append(f"undetectable: {sites}")
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_minimize(client: Client, args: argparse.Namespace) -> int:
    payload = {
        "expression": _read_circuit(args.circuit),
        "max_vars": _resolve_max_vars(args),
        "include_timing": args.timing,
    }
    resp = client.call("minimize", payload)
    if not args.timing:
        resp.pop("elapsed_seconds", None)
    _emit(_json(resp), args)
    return 0


def cmd_tree(client: Client, args: argparse.Namespace) -> int:
    payload = {
        "expression": _read_circuit(args.circuit),
        "max_vars": _resolve_max_vars(args),
        "format": args.format,
    }
    resp = client.call("tree", payload)
    if args.format == "dot":
        _emit(resp["dot"], args)
    elif args.format == "ascii":
        _emit(resp["ascii_art"], args)
    else:
        _emit(_json(resp), args)
    return 0


def cmd_simulate(client: Client, args: argparse.Namespace) -> int:
    payload = {
        "expression": _read_circuit(args.circuit),
        "max_vars": _resolve_max_vars(args),
        "fault_id": args.fault,
    }
    resp = client.call("simulate", payload)
    if args.format == "json":
        _emit(_json(resp), args)
        return 0
    if resp["injected"] is None:
        lines = ["injected: none"]
    else:
        lines = [f"injected: id {resp['injected']} ({resp['injected_site']})"]
    for step in resp["steps"]:
        bits = "".join(str(b) for b in step["bits"])
        lines.append(
            f"apply T{step['test']} inputs={bits} expected={step['expected']} "
            f"observed={step['observed']} detection={step['detection']}"
        )
    verdict = resp["verdict"]
    if resp["class_id"] is not None:
        members = ", ".join(str(m) for m in resp["class_members"])
        lines.append(f"verdict: {verdict} (fault ids {members})")
    else:
        lines.append(f"verdict: {verdict}")
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_verify(client: Client, args: argparse.Namespace) -> int:
    payload = {
        "expression": _read_circuit(args.circuit),
        "max_vars": _resolve_max_vars(args),
        "limits": {
            "max_rows": args.max_rows,
            "max_columns": args.max_columns,
            "max_subset_size": args.max_subset_size,
        },
    }
    resp = client.call("verify", payload)
    if args.format == "json":
        _emit(_json(resp), args)
    else:
        lines = [
            f"heuristic_tests: {' '.join(str(t) for t in resp['heuristic_tests'])}",
            f"heuristic_size: {resp['heuristic_size']}",
            f"oracle_tests: {' '.join(str(t) for t in resp['oracle_tests'])}",
            f"oracle_size: {resp['oracle_size']}",
            f"gap: {resp['gap']}",
            f"heuristic_valid: {str(resp['heuristic_valid']).lower()}",
            f"ok: {str(resp['ok']).lower()}",
        ]
        _emit("\n".join(lines) + "\n", args)
    return 0 if resp["ok"] else 1


def cmd_gen(client: Client, args: argparse.Namespace) -> int:
    cap = _resolve_max_vars(args)
    if args.vars > cap:
        sys.stderr.write(f"error: {args.vars} variables exceed the cap {cap}\n")
        return 1
    payload = {
        "seed": args.seed,
        "n_vars": args.vars,
        "term_count": args.terms,
        "min_literals": args.min_literals,
        "max_literals": args.max_literals,
    }
    resp = client.call("gen", payload)
    _emit(_json(resp) if args.format == "json" else resp["sop_text"], args)
    return 0


def cmd_bench(client: Client, args: argparse.Namespace) -> int:
    names = sorted(
        name for name in os.listdir(args.directory) if name.endswith(".sop")
    )
    circuits = []
    for name in names:
        path = os.path.join(args.directory, name)
        with open(path, "r", encoding="ascii") as fh:
            circuits.append({"name": name, "expression": fh.read()})
    payload = {
        "circuits": circuits,
        "max_vars": _resolve_max_vars(args),
        "jobs": args.jobs,
    }
    resp = client.call("bench", payload)
    _emit(resp["csv"] if args.format == "csv" else _json(resp), args)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sopfault",
        description=(
            "Fault dictionaries, diagnosing trees, and minimized diagnostic "
            "test sets for two-level SOP circuits under single stuck-at faults."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-vars",
        type=int,
        default=None,
        help=f"variable cap (default {DEFAULT_MAX_VARS}, or ${ENV_MAX_VARS})",
    )
    common.add_argument(
        "--output", default=None, help="write output to this path instead of stdout"
    )
    common.add_argument(
        "--server",
        default=None,
        help="base URL of a running server; default is in-process execution",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "dict", parents=[common], help="dump the fault dictionary"
    )
    p.add_argument("circuit", help="expression text or path to a .sop file")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_dict)

    p = sub.add_parser(
        "faults", parents=[common], help="list faults, classes, undetectable faults"
    )
    p.add_argument("circuit", help="expression text or path to a .sop file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_faults)

    p = sub.add_parser(
        "minimize", parents=[common], help="minimized diagnostic test set report"
    )
    p.add_argument("circuit", help="expression text or path to a .sop file")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument(
        "--timing",
        action="store_true",
        help="include elapsed seconds (off by default so output is reproducible)",
    )
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("tree", parents=[common], help="render the diagnosing tree")
    p.add_argument("circuit", help="expression text or path to a .sop file")
    p.add_argument("--format", choices=["dot", "ascii", "json"], default="dot")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser(
        "simulate", parents=[common], help="walk the tree against a faulted circuit"
    )
    p.add_argument("circuit", help="expression text or path to a .sop file")
    p.add_argument(
        "--fault",
        type=_fault_id,
        default=None,
        metavar="ID|none",
        help="fault id to inject (default: fault-free)",
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser(
        "verify", parents=[common], help="compare the heuristic against the exact oracle"
    )
    p.add_argument("circuit", help="expression text or path to a .sop file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--max-rows", type=int, default=24)
    p.add_argument("--max-columns", type=int, default=16)
    p.add_argument("--max-subset-size", type=int, default=12)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="generate a random .sop circuit")
    p.add_argument("--seed", type=int, required=True, help="RNG seed (required)")
    p.add_argument("--vars", type=int, required=True, help="number of variables")
    p.add_argument("--terms", type=int, required=True, help="number of terms")
    p.add_argument("--min-literals", type=int, default=1)
    p.add_argument("--max-literals", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "bench", parents=[common], help="run the pipeline over a directory of .sop files"
    )
    p.add_argument("directory", help="directory containing .sop files")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="start the HTTP server")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=None)

    return parser


def _fault_id(text: str) -> int | None:
    if text.lower() == "none":
        return None
    return int(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    client = Client(args.server)
    try:
        return args.func(client, args)
    except SopFaultError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except RemoteError as exc:
        sys.stderr.write(f"error: {exc.name}: {exc.detail}\n")
        return 1
    except ValidationError as exc:
        sys.stderr.write(f"error: invalid request: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
