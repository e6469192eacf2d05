"""Command-line front end.

Exit codes: 0 success, 1 a catalog claim did not match, 2 invalid input.
LIEGEO_JOBS caps the number of worker processes used by ``catalog run``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import catalog
from .io import InputError, extension_to_json, load_extension, load_record, record_to_json
from .report import verify_extension, verify_record
from .salamon import SalamonError, emit_salamon, parse_salamon

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _params(items: Sequence[str] | None) -> dict[str, str]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise InputError(f"--param expects name=value, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def _emit(report, as_json: bool, out) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=False), file=out)
    else:
        print(report, file=out)


def _report_payload(rep) -> dict:
    payload = rep.to_json()
    errs = rep.consistency_errors()
    if errs:
        payload["consistency_errors"] = errs
    return payload


def cmd_verify(args, out) -> int:
    rec = load_record(args.file)
    rep = verify_record(rec)
    _emit(_report_payload(rep) if args.json else rep.to_text(), args.json, out)
    return EXIT_OK


def cmd_extend(args, out) -> int:
    ext = load_extension(args.file)
    rep = verify_extension(ext)
    if args.json:
        payload = _report_payload(rep)
        if args.emit_product:
            payload["product"] = record_to_json(ext.product)
        _emit(payload, True, out)
    else:
        _emit(rep.to_text(), False, out)
    return EXIT_OK


def cmd_catalog_list(args, out) -> int:
    rows = []
    for eid in catalog.ids():
        e = catalog.get(eid)
        rows.append({
            "id": eid,
            "title": e.title,
            "params": [p.name for p in e.params],
            "data_complete": e.data_complete,
            "note": e.note,
        })
    if args.json:
        _emit(rows, True, out)
    else:
        width = max(len(r["id"]) for r in rows)
        for r in rows:
            params = f"({', '.join(r['params'])})" if r["params"] else ""
            flag = "" if r["data_complete"] else "  [needs data]"
            print(f"{r['id'].ljust(width)}  {r['title']}{params and ' ' + params}{flag}", file=out)
    return EXIT_OK


def _run_one(job: tuple[str, dict]) -> dict:
    eid, bindings = job
    try:
        return catalog.run(eid, bindings).to_json()
    except catalog.CatalogError as exc:
        return {"id": eid, "bindings": {k: str(v) for k, v in bindings.items()}, "ok": None, "error": str(exc)}


def jobs_limit() -> int:
    raw = os.environ.get("LIEGEO_JOBS", "")
    cpus = os.cpu_count() or 1
    if not raw:
        return cpus
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"LIEGEO_JOBS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"LIEGEO_JOBS must be a positive integer, got {raw!r}")
    return min(n, cpus)


def _map(jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_run_one, jobs))


def cmd_catalog_run(args, out) -> int:
    params = _params(args.param)
    ids = args.id or catalog.ids(complete_only=not args.all)
    for eid in ids:
        catalog.get(eid)
    jobs: list[tuple[str, dict]] = []
    for eid in ids:
        if params or args.defaults:
            jobs.append((eid, dict(params)))
        else:
            jobs.extend((eid, dict(pt)) for pt in catalog.get(eid).grid)
    if params and len(ids) == 1:
        # surface binding errors as input errors before spawning anything
        entry = catalog.get(ids[0])
        entry.bind(params)
    results = _map(jobs, jobs_limit())
    failed = [r for r in results if r.get("ok") is False]
    errored = [r for r in results if r.get("ok") is None]
    if args.json:
        _emit({"results": results, "passed": len(results) - len(failed) - len(errored),
               "failed": len(failed), "errors": len(errored)}, True, out)
    else:
        for r in results:
            b = ", ".join(f"{k}={v}" for k, v in r["bindings"].items())
            label = f"{r['id']}({b})" if b else r["id"]
            if r.get("ok") is None:
                print(f"ERROR {label}: {r['error']}", file=out)
                continue
            print(f"{'PASS' if r['ok'] else 'FAIL'} {label}", file=out)
            for m in r["mismatches"] + r["consistency_errors"]:
                print(f"    {m}", file=out)
            for m in r["known_discrepancies"]:
                print(f"    known: {m}", file=out)
        print(f"{len(results) - len(failed) - len(errored)} passed, {len(failed)} failed, {len(errored)} errors", file=out)
    if errored:
        return EXIT_INPUT
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_parse(args, out) -> int:
    alg = parse_salamon(args.string, _params(args.param))
    if args.json:
        _emit(alg.to_json(), True, out)
    else:
        print(emit_salamon(alg), file=out)
        for (i, j), v in alg.nonzero_brackets().items():
            terms = " + ".join(f"{c}*e{k + 1}" for k, c in enumerate(v) if c).replace("+ -", "- ")
            print(f"[e{i + 1}, e{j + 1}] = {terms}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liegeo", description="Exact checks of pseudo-Kahler and hypersymplectic Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify a structure file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("extend", help="build and verify a semidirect extension file")
    e.add_argument("file")
    e.add_argument("--json", action="store_true")
    e.add_argument("--emit-product", action="store_true", help="include the product structure in JSON output")
    e.set_defaults(func=cmd_extend)

    c = sub.add_parser("catalog", help="list or run built-in examples")
    csub = c.add_subparsers(dest="action", required=True)
    cl = csub.add_parser("list")
    cl.add_argument("--json", action="store_true")
    cl.set_defaults(func=cmd_catalog_list)
    cr = csub.add_parser("run")
    cr.add_argument("--id", action="append", help="entry id (repeatable); default: every complete entry")
    cr.add_argument("--param", action="append", metavar="NAME=VALUE", help="parameter binding (repeatable)")
    cr.add_argument("--defaults", action="store_true", help="run default bindings instead of the grid")
    cr.add_argument("--all", action="store_true", help="include entries that need external data")
    cr.add_argument("--json", action="store_true")
    cr.set_defaults(func=cmd_catalog_run)

    s = sub.add_parser("parse", help="parse a structure-equation string such as '(-e23, e13, 0, 0)'")
    s.add_argument("string")
    s.add_argument("--param", action="append", metavar="NAME=VALUE")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_parse)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, SalamonError, catalog.CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
