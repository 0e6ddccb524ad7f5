"""Command-line front end.

A thin client of the HTTP service: by default the FastAPI app is
mounted in-process (no server needed, byte-identical output); pass
--url to talk to a remote spincalc server instead.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or validation error.  JSON artifacts are written atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import httpx


class _InProcessTransport(httpx.BaseTransport):
    """Run requests against the ASGI app without a server."""

    def __init__(self, app):
        self._transport = httpx.ASGITransport(app=app)

    def handle_request(self, request):
        import asyncio

        async def call():
            response = await self._transport.handle_async_request(request)
            body = await response.aread()
            await response.aclose()
            return response, body

        response, body = asyncio.run(call())
        headers = [
            (k, v) for k, v in response.headers.raw
            if k.lower() not in (b"content-length", b"transfer-encoding")
        ]
        return httpx.Response(response.status_code, headers=headers, content=body)


def _client(url):
    if url:
        return httpx.Client(base_url=url, timeout=600.0)
    from .service import create_app

    return httpx.Client(transport=_InProcessTransport(create_app()),
                        base_url="http://spincalc.local")


def _write_json(path, payload):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _write_text(path, text):
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


class _RequestError(Exception):
    pass


def _request(client, method, path, payload=None):
    response = client.request(method, path, json=payload)
    if response.status_code == 200:
        return response.json()
    try:
        detail = response.json().get("detail", response.text)
    except Exception:
        detail = response.text
    raise _RequestError(detail)


def _cmd_presets(client, args):
    data = _request(client, "GET", "/presets")
    print(f"{'name':6s} {'size':8s} {'validity':10s} description")
    for row in data["presets"]:
        print(f"{row['name']:6s} {row['size']:8s} {row['validity']:10s} {row['description']}")
    if args.json:
        _write_json(args.json, data)
    return 0


def _cmd_enumerate(client, args):
    data = _request(client, "POST", "/enumerate", {"genus": args.genus, "r": args.r})
    line = f"genus={data['genus']} r={data['r']} total={data['total']}"
    if data.get("even") is not None:
        line += f" even={data['even']} odd={data['odd']}"
    print(line)
    if args.json:
        _write_json(args.json, data)
    return 0


def _print_report(data):
    print(f"theorem {data['theorem']}: {data['verdict'].upper()}")
    print(f"  inputs:   {data['inputs']}")
    stab = data["stabilized_structure"]
    print(f"  structure: values={stab['basis_values']} parity={stab['parity']}")
    print(f"  order:    computed={data['order_computed']} expected={data['order_expected']}")
    print(f"  oracle:   {data['oracle']}")
    for name, ok in sorted(data["checks"].items()):
        print(f"  check {name}: {'pass' if ok else 'FAIL'}")


def _cmd_verify(client, args):
    if args.theorem == "main2":
        if args.genus is None or args.parity is None:
            print("error: verify main2 needs --genus and --parity", file=sys.stderr)
            return 2
        data = _request(client, "POST", "/verify/main2",
                        {"genus": args.genus, "parity": args.parity})
    else:
        data = _request(client, "POST", "/verify/main3", {})
    _print_report(data)
    if args.json:
        _write_json(args.json, data)
    return 0 if data["verdict"] == "pass" else 1


def _cmd_origami(client, args):
    data = _request(client, "POST", "/origami",
                    {"preset": args.preset, "genus": args.genus})
    print(f"preset {data['preset']}: {data['origami']['squares']} squares, "
          f"genus {data['genus']}, stratum {data['stratum']}")
    if args.report:
        if data["spin_parity"] is not None:
            print(f"  spin parity: {data['spin_parity']}")
        else:
            print(f"  spin parity: undefined ({data['spin_parity_error']})")
        print(f"  h = {data['origami']['h']}")
        print(f"  v = {data['origami']['v']}")
    if args.json:
        _write_json(args.json, data)
    return 0


def _cmd_graph(client, args):
    payload = {"kind": args.kind, "genus": args.genus, "parity": args.parity,
               "dot": bool(args.dot)}
    if args.max_vertices:
        payload["max_vertices"] = args.max_vertices
    data = _request(client, "POST", "/graph", payload)
    print(f"{data['kind']} g={data['genus']} parity={data['parity']}: "
          f"{data['vertex_count']} vertices, {data['edge_count']} edges, "
          f"{data['component_count']} component(s)"
          + (f", diameter {data['diameter_largest']}" if data['diameter_largest'] is not None else ""))
    print(f"  {data['consistency']}")
    dot = data.pop("dot", None)
    if args.dot:
        _write_text(args.dot, dot)
    if args.json:
        _write_json(args.json, data)
    return 0


def _cmd_serve(args):
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spincalc",
        description="spin-structure calculus: verifiers, censuses, origamis, graph shadows",
    )
    parser.add_argument("--url", help="remote service URL (default: in-process app)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker hint for graph/engine internals (results are "
                             "deterministic regardless)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized exploration (reserved; standard "
                             "runs are fully deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("presets", help="list available curve-system presets")
    p.add_argument("--json")

    p = sub.add_parser("enumerate", help="census of spin structures")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json")

    p = sub.add_parser("verify", help="run a theorem verifier")
    p.add_argument("theorem", choices=["main2", "main3"])
    p.add_argument("--genus", type=int)
    p.add_argument("--parity", choices=["odd", "even"])
    p.add_argument("--json")

    p = sub.add_parser("origami", help="build the Thurston-Veech origami of a preset")
    p.add_argument("--preset", required=True)
    p.add_argument("--genus", type=int)
    p.add_argument("--report", action="store_true")
    p.add_argument("--json")

    p = sub.add_parser("graph", help="build a shadow graph and report components")
    p.add_argument("--kind", required=True, choices=["CG0", "CG1", "CG1plus", "CG2plus"])
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--parity", choices=["odd", "even"], default="odd")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--json")
    p.add_argument("--dot")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    if args.command == "serve":
        return _cmd_serve(args)
    handlers = {
        "presets": _cmd_presets,
        "enumerate": _cmd_enumerate,
        "verify": _cmd_verify,
        "origami": _cmd_origami,
        "graph": _cmd_graph,
    }
    try:
        with _client(args.url) as client:
            return handlers[args.command](client, args)
    except _RequestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"transport error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
