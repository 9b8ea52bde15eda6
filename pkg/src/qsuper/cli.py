"""Command line front end.

Every subcommand sends one request to the service application and
renders the response.  By default the application runs inside the
calling process over an ASGI transport, so no server or network is
involved; set QSUPER_SERVER to a base URL to talk to a running instance
instead.  Exit status is 0 on success and 1 on a failed check or any
reported error.
"""

import argparse
import asyncio
import json
import os
import sys

import httpx

from .service import create_app


def _post(path, payload):
    server = os.environ.get("QSUPER_SERVER")
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)

    async def go():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://qsuper",
                                     timeout=None) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qsuper",
        description="exact computer algebra for quantum superalgebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, typed=True):
        p = sub.add_parser(name, help=help_text)
        if typed:
            p.add_argument("--type", required=True, metavar="DESC",
                           help="root datum descriptor, for example A(1,0)")
        p.add_argument("--json", action="store_true",
                       help="print the raw JSON response")
        return p

    add("root-datum", "describe a root datum")

    p = add("normalize", "bring an expression to normal form")
    p.add_argument("--expr", required=True)

    p = add("pair", "Rosso form of two expressions")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("dual-basis", "dual bases of a weight space of the pairing")
    p.add_argument("--weight", required=True,
                   help="comma-separated simple root coefficients")

    p = add("theta", "quasi-R-matrix truncated at a height")
    p.add_argument("--cutoff", type=int, required=True)

    p = add("casimir", "Casimir element built from a module")
    p.add_argument("--module", required=True,
                   help="vector, verma:<weight> or simple:<weight>")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--depth", type=int, default=None)

    p = add("z-element", "central z-element of a finite-dimensional module")
    p.add_argument("--module", required=True)
    p.add_argument("--depth", type=int, default=None)

    p = add("hc", "Harish-Chandra projection of an expression")
    p.add_argument("--expr", required=True)

    p = add("check-central", "test whether an expression is central")
    p.add_argument("--expr", required=True)

    p = add("check-wsup", "test membership in the W-supersymmetric image")
    p.add_argument("--expr", required=True)
    p.add_argument("--mode", choices=["A", "B", "both"], default="both")

    p = add("character", "weights of a module with dimensions")
    p.add_argument("--module", required=True)
    p.add_argument("--depth", type=int, default=None)

    p = add("verify", "run the acceptance checks", typed=False)
    p.add_argument("--type", default=None, metavar="DESC",
                   help="restrict the checks to one root datum")

    return parser


def _render_root_datum(body):
    print("type: %s" % body["type"])
    print("rank: %d" % body["rank"])
    print("parity: %s" % " ".join(str(x) for x in body["parity"]))
    width = max(len(x) for row in body["cartan"] for x in row)
    print("cartan:")
    for row in body["cartan"]:
        print("  " + " ".join(x.rjust(width) for x in row))
    print("simple roots: %s" % ", ".join(body["simple_roots"]))
    print("positive even roots: %s" % ", ".join(body["positive_even"]))
    print("positive odd roots: %s" % ", ".join(body["positive_odd"]))


def _render_dual_basis(body):
    print("weight: %s" % ",".join(str(x) for x in body["weight"]))
    print("rank: %d" % body["rank"])
    for n, (v, u) in enumerate(zip(body["lower"], body["upper"]), start=1):
        print("v%d = %s" % (n, v["text"]))
        print("u%d = %s" % (n, u["text"]))


def _render_theta(body):
    print("cutoff: %d" % body["cutoff"])
    for term in body["terms"]:
        print("%s (x) %s    %s"
              % (term["lower"], term["upper"], term["coefficient"]))


def _render_wsup(body):
    print("%s (mode %s)" % ("pass" if body["ok"] else "fail", body["mode"]))
    for reason in body["reasons"]:
        print("  reason: %s" % reason)


def _render_character(body):
    print("module: %s" % body["module"])
    print("status: %s" % body["status"])
    print("dim: %d" % body["dim"])
    for line in body["weights"]:
        print("%s  dim %d  sdim %d"
              % (line["weight"], line["dim"], line["sdim"]))


def _render_verify(body):
    print("scope: %s" % body["scope"])
    for row in body["rows"]:
        print("%2d %s  %s" % (row["id"],
                              "pass" if row["ok"] else "FAIL", row["title"]))
        print("        %s" % row["detail"])
    print("result: %s" % ("pass" if body["ok"] else "FAIL"))


COMMANDS = {
    "root-datum": ("/v1/root-datum", lambda a: {"type": a.type},
                   _render_root_datum, None),
    "normalize": ("/v1/normalize", lambda a: {"type": a.type, "expr": a.expr},
                  lambda b: print(b["text"]), None),
    "pair": ("/v1/pair",
             lambda a: {"type": a.type, "left": a.left, "right": a.right},
             lambda b: print(b["value"]), None),
    "dual-basis": ("/v1/dual-basis",
                   lambda a: {"type": a.type, "weight": a.weight},
                   _render_dual_basis, None),
    "theta": ("/v1/theta", lambda a: {"type": a.type, "cutoff": a.cutoff},
              _render_theta, None),
    "casimir": ("/v1/casimir",
                lambda a: {"type": a.type, "module": a.module, "k": a.k,
                           "depth": a.depth},
                lambda b: print(b["text"]), None),
    "z-element": ("/v1/z-element",
                  lambda a: {"type": a.type, "module": a.module,
                             "depth": a.depth},
                  lambda b: print(b["text"]), None),
    "hc": ("/v1/hc", lambda a: {"type": a.type, "expr": a.expr},
           lambda b: print(b["text"]), None),
    "check-central": ("/v1/check-central",
                      lambda a: {"type": a.type, "expr": a.expr},
                      lambda b: print("central" if b["central"]
                                      else "not central"),
                      lambda b: not b["central"]),
    "check-wsup": ("/v1/check-wsup",
                   lambda a: {"type": a.type, "expr": a.expr, "mode": a.mode},
                   _render_wsup, lambda b: not b["ok"]),
    "character": ("/v1/character",
                  lambda a: {"type": a.type, "module": a.module,
                             "depth": a.depth},
                  _render_character, None),
    "verify": ("/v1/verify", lambda a: {"type": a.type},
               _render_verify, lambda b: not b["ok"]),
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    path, build, render, failed = COMMANDS[args.command]
    try:
        resp = _post(path, build(args))
    except httpx.HTTPError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    try:
        body = resp.json()
    except ValueError:
        body = {"detail": resp.text}
    if resp.status_code != 200:
        print("error: %s" % body.get("detail", resp.text), file=sys.stderr)
        return 1
    for warning in body.get("cache_warnings") or []:
        print("warning: %s" % warning, file=sys.stderr)
    if args.json:
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        render(body)
    if failed is not None and failed(body):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
