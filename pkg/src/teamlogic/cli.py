"""Command-line client for the reasoning service.

Every subcommand builds a request against the HTTP API.  Without
``--server`` the service runs in-process over an ASGI transport, so no
daemon is needed; with ``--server URL`` the same requests go to a remote
instance.  ``serve`` starts one.

Exit codes: 0 for true/pass, 1 for false/fail, 2 for any error (parse
errors, malformed files, unreachable server).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teamlogic",
        description="Team-logic model checking and cumulative entailment.",
    )
    parser.add_argument("--server", metavar="URL", help="remote service to query")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--quiet", action="store_true", help="suppress normal output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a formula on a team")
    p_eval.add_argument("--vars", required=True, help="comma-separated variables")
    p_eval.add_argument(
        "--team",
        required=True,
        help="semicolon-separated bitstrings ('' for the empty team)",
    )
    p_eval.add_argument("--formula", required=True)
    p_eval.add_argument(
        "--engine", choices=("generic", "flat", "oracle"), default="generic"
    )

    p_entail = sub.add_parser("entail", help="cumulative entailment over a model file")
    p_entail.add_argument("model", help="model JSON file")
    p_entail.add_argument("phi")
    p_entail.add_argument("psi")
    p_entail.add_argument("--engine", choices=("direct", "oracle"), default="direct")
    p_entail.add_argument("--logic", choices=("pdl", "tpl"), default="pdl")
    p_entail.add_argument(
        "--verify",
        action="store_true",
        help="pre-check cumulativity over {phi, psi, phi & psi} and warn",
    )

    p_verify = sub.add_parser("verify", help="check structural model properties")
    p_verify.add_argument("model", help="model JSON file")
    p_verify.add_argument(
        "--mode", choices=("universe", "all-subsets"), default="universe"
    )
    p_verify.add_argument("--universe", help="formula file, one per line")
    p_verify.add_argument(
        "--strong", action="store_true", help="check strong cumulativity instead"
    )

    p_sysc = sub.add_parser("systemc", help="check the induced relation against System C")
    p_sysc.add_argument("model", help="model JSON file")
    p_sysc.add_argument("universe", help="formula file, one per line")
    p_sysc.add_argument("--logic", choices=("pdl", "tpl"), default="pdl")
    p_sysc.add_argument(
        "--close",
        type=int,
        default=0,
        metavar="DEPTH",
        help="close the universe under conjunction up to DEPTH rounds first",
    )

    p_succ = sub.add_parser("succ-entail", help="entailment over a circuit-encoded model")
    p_succ.add_argument("--label", required=True, help="label circuit netlist file")
    p_succ.add_argument("--order", required=True, help="order circuit netlist file")
    p_succ.add_argument("--vars", required=True, help="comma-separated variables")
    p_succ.add_argument("--state-bits", required=True, type=int)
    p_succ.add_argument("phi")
    p_succ.add_argument("psi")
    p_succ.add_argument(
        "--verify",
        action="store_true",
        help="also check cumulativity of the expanded model and warn",
    )

    p_bench = sub.add_parser("bench", help="evaluator scaling benchmark")
    p_bench.add_argument("--logic", choices=("tpl", "pdl"), default="tpl")
    p_bench.add_argument("--max-team-size", type=int, default=16)
    p_bench.add_argument("--trials", type=int, default=7)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--family", choices=("random", "split-hard"), default="random")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise RuntimeError(f"cannot read {path}: {exc.strerror}") from None


def _read_json_file(path: str) -> object:
    text = _read_file(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise RuntimeError(f"{path}: not valid JSON: {exc}") from None


def _post(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    if server:
        try:
            with httpx.Client(base_url=server, timeout=600.0) as client:
                resp = client.post(path, json=payload)
        except httpx.HTTPError as exc:
            raise RuntimeError(f"cannot reach {server}: {exc}") from None
        return resp.status_code, resp.json()

    async def go() -> tuple[int, dict]:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service.local", timeout=None
        ) as client:
            resp = await client.post(path, json=payload)
            return resp.status_code, resp.json()

    return asyncio.run(go())


def _fail(status: int, body: dict) -> int:
    detail = body.get("detail", body)
    print(f"error: {detail}", file=sys.stderr)
    return 2


def _emit(args, text: str) -> None:
    if not args.quiet:
        print(text)


def _universe_lines(path: str) -> list[str]:
    out = []
    for raw in _read_file(path).splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append(stripped)
    return out


def _decision_exit(args, body: dict) -> int:
    for warning in body.get("verify_warnings", []):
        print(f"warning: {warning}", file=sys.stderr)
    if args.json:
        _emit(args, json.dumps(body))
    else:
        _emit(args, "true" if body["result"] else "false")
        if not body["result"] and body.get("violating_state"):
            _emit(args, f"violating minimal state: {body['violating_state']}")
    return 0 if body["result"] else 1


def _report_exit(args, body: dict) -> int:
    if args.json:
        _emit(args, json.dumps(body))
    else:
        _emit(args, "pass" if body["passed"] else "fail")
        for w in body.get("witnesses", []):
            states = ", ".join(w["states"])
            line = f"witness {w['subject']}"
            if states:
                line += f": {states}"
            if w.get("detail"):
                line += f" ({w['detail']})"
            _emit(args, line)
        for v in body.get("violations", []):
            _emit(args, f"violation {v}")
        for n in body.get("notes", []):
            _emit(args, f"note {n}")
    return 0 if body["passed"] else 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "serve":
        import uvicorn

        uvicorn.run("teamlogic.service:app", host=args.host, port=args.port)
        return 0

    if args.command == "eval":
        payload = {
            "vars": [v.strip() for v in args.vars.split(",")],
            "team": args.team,
            "formula": args.formula,
            "engine": args.engine,
        }
        status, body = _post(args.server, "/eval", payload)
        if status != 200:
            return _fail(status, body)
        return _decision_exit(args, body)

    if args.command == "entail":
        payload = {
            "model": _read_json_file(args.model),
            "antecedent": args.phi,
            "consequent": args.psi,
            "engine": args.engine,
            "logic": args.logic,
            "verify": args.verify,
        }
        status, body = _post(args.server, "/entail", payload)
        if status != 200:
            return _fail(status, body)
        return _decision_exit(args, body)

    if args.command == "verify":
        payload = {
            "model": _read_json_file(args.model),
            "mode": args.mode,
            "strong": args.strong,
        }
        if args.universe:
            payload["universe"] = _universe_lines(args.universe)
        status, body = _post(args.server, "/verify", payload)
        if status != 200:
            return _fail(status, body)
        return _report_exit(args, body)

    if args.command == "systemc":
        payload = {
            "model": _read_json_file(args.model),
            "universe": _universe_lines(args.universe),
            "logic": args.logic,
            "close_depth": args.close,
        }
        status, body = _post(args.server, "/systemc", payload)
        if status != 200:
            return _fail(status, body)
        return _report_exit(args, body)

    if args.command == "succ-entail":
        payload = {
            "vars": [v.strip() for v in args.vars.split(",")],
            "state_bits": args.state_bits,
            "label_circuit": _read_file(args.label),
            "order_circuit": _read_file(args.order),
            "antecedent": args.phi,
            "consequent": args.psi,
            "verify": args.verify,
        }
        status, body = _post(args.server, "/succ-entail", payload)
        if status != 200:
            return _fail(status, body)
        return _decision_exit(args, body)

    if args.command == "bench":
        payload = {
            "logic": args.logic,
            "max_team_size": args.max_team_size,
            "trials": args.trials,
            "seed": args.seed,
            "family": args.family,
        }
        status, body = _post(args.server, "/bench", payload)
        if status != 200:
            return _fail(status, body)
        if args.json:
            _emit(args, json.dumps(body))
        else:
            header = f"{'logic':<6} {'team_size':>9} {'formula_size':>12} {'median_ns':>12}"
            lines = [header]
            for r in body["rows"]:
                lines.append(
                    f"{r['logic']:<6} {r['team_size']:>9} "
                    f"{r['formula_size']:>12} {r['median_ns']:>12}"
                )
            lines.append(f"# cases sha256 {body['cases_digest']}")
            _emit(args, "\n".join(lines))
        return 0

    raise RuntimeError(f"unknown command {args.command!r}")


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
