"""tridots command line: a thin client over the service operations.

By default every command computes in process through the same functions
the HTTP endpoints call; with --server URL the command is sent to a
running tridots server instead, and the bytes printed are identical
either way.  The CLI itself only parses arguments, moves payloads and
maps errors to exit codes:

    0  success (for certify: proof complete)
    1  user error (bad arguments, out-of-range sizes, refused caps)
    2  internal invariant violation (a bug, e.g. an infeasible certificate)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import httpx

from .errors import DomainError, SizeCapError, TridotsError
from .service import ops, schemas

_FORMATS = [f.value for f in schemas.OutputFormat]


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems with exit code 1, not 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="tridots", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send the command to a running tridots server instead of computing locally",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="dot maxima and exact LP optima for n = 3..MAX")
    p.add_argument("--max", type=int, default=12, dest="max_n", metavar="N")
    p.add_argument("--format", choices=_FORMATS, default="ascii")

    p = sub.add_parser("construct", help="the canonical maximum placement for one board")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=_FORMATS, default="ascii")

    p = sub.add_parser("certify", help="dual certificate and the proof that bounds meet")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=_FORMATS, default="ascii")

    p = sub.add_parser("solve", help="solve the LP (primal/dual) or the ILP exactly")
    p.add_argument("n", type=int)
    p.add_argument("--which", choices=[t.value for t in schemas.SolveTarget], required=True)
    p.add_argument("--format", choices=_FORMATS, default="ascii")

    p = sub.add_parser("export", help="write the LP in text format for external solvers")
    p.add_argument("n", type=int)
    p.add_argument("--which", choices=[t.value for t in schemas.ExportTarget], required=True)
    p.add_argument("--out", required=True, metavar="PATH")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dump(payload) -> str:
    return json.dumps(payload, indent=2)


def _export_path(out: str, n: int, which: schemas.ExportTarget) -> Path:
    path = Path(out)
    if path.is_dir() or out.endswith(os.sep):
        return path / ops.export_filename(n, which)
    return path


def _run_local(args: argparse.Namespace) -> int:
    fmt = schemas.OutputFormat(getattr(args, "format", "ascii"))
    if args.command == "table":
        ops.ensure_format(fmt, allow_csv=True)
        if fmt == schemas.OutputFormat.json:
            print(_dump(ops.op_table(args.max_n).model_dump()))
        else:
            print(ops.table_text(args.max_n, fmt))
        return 0
    if args.command == "construct":
        ops.ensure_format(fmt)
        if fmt == schemas.OutputFormat.json:
            print(_dump(ops.op_construct(args.n).model_dump()))
        else:
            print(ops.construct_text(args.n))
        return 0
    if args.command == "certify":
        ops.ensure_format(fmt)
        result = ops.op_certify(args.n)
        if fmt == schemas.OutputFormat.json:
            print(_dump(result.model_dump()))
        else:
            print(ops.render_certify(result))
        return 0 if result.proved else 1
    if args.command == "solve":
        ops.ensure_format(fmt)
        which = schemas.SolveTarget(args.which)
        if fmt == schemas.OutputFormat.json:
            print(_dump(ops.op_solve(args.n, which).model_dump()))
        else:
            print(ops.solve_text(args.n, which))
        return 0
    if args.command == "export":
        which = schemas.ExportTarget(args.which)
        path = _export_path(args.out, args.n, which)
        path.write_text(ops.op_export(args.n, which))
        print(path)
        return 0
    raise AssertionError(f"unhandled command {args.command}")


def _run_remote(args: argparse.Namespace, client: httpx.Client) -> int:
    fmt = getattr(args, "format", "ascii")
    if args.command == "table":
        response = client.get("/table", params={"max_n": args.max_n, "format": fmt})
    elif args.command == "construct":
        response = client.get(f"/placements/{args.n}", params={"format": fmt})
    elif args.command == "certify":
        response = client.get(f"/certificates/{args.n}", params={"format": fmt})
    elif args.command == "solve":
        response = client.get(
            f"/solutions/{args.n}", params={"which": args.which, "format": fmt}
        )
    elif args.command == "export":
        response = client.get(f"/lp-files/{args.n}", params={"which": args.which})
    else:
        raise AssertionError(f"unhandled command {args.command}")

    if response.status_code >= 500:
        print(_error_detail(response), file=sys.stderr)
        return 2
    if response.status_code >= 400:
        print(_error_detail(response), file=sys.stderr)
        return 1
    if args.command == "export":
        which = schemas.ExportTarget(args.which)
        path = _export_path(args.out, args.n, which)
        path.write_text(response.text)
        print(path)
        return 0
    if fmt == "json":
        payload = response.json()
        print(_dump(payload))
        if args.command == "certify" and not payload.get("proved", False):
            return 1
        return 0
    print(response.text)
    return 0


def _error_detail(response: httpx.Response) -> str:
    try:
        return str(response.json().get("detail", response.text))
    except ValueError:
        return response.text


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("tridots.service.app:app", host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None, client: httpx.Client | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "serve":
        return _serve(args)

    try:
        if args.server is None and client is None:
            return _run_local(args)
        http = client if client is not None else httpx.Client(base_url=args.server, timeout=300.0)
        try:
            return _run_remote(args, http)
        finally:
            if client is None:
                http.close()
    except (DomainError, SizeCapError) as exc:
        print(f"tridots: error: {exc}", file=sys.stderr)
        return 1
    except TridotsError as exc:
        print(f"tridots: internal error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"tridots: server error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
