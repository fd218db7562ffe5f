"""Command-line interface: ``onebridge <command> ...``.

Exit codes: 0 success, 1 verification or golden-table failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import difflib
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import census as census_mod
from .braids import AllowableTuple, Braid, Slope, component_count, is_knot
from .classify import Degenerate, fillings_of, knots_for_slope, tuple_parameters, tuple_to_braid
from .oracle import MAX_ORACLE_W, check_equivalence, diagram_sweep, phi_sweep

CACHE_ENV = "ONEBRIDGE_CACHE_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _slope_json(s: Slope) -> dict:
    return {"p": s.p, "q": s.q}


def _tuple_json(t: AllowableTuple) -> dict:
    return {"p": t.p, "q": t.q, "k": t.k, "x": t.x, "eps": t.eps}


def _braid_json(b: Braid) -> dict:
    return {"w": b.w, "b": b.b, "t": b.t}


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _make_braid(w: int, b: int, t: int) -> Braid:
    try:
        return Braid(w, b, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_fillings(args) -> tuple[str, int]:
    braid = _make_braid(args.w, args.b, args.t)
    fills = fillings_of(braid)
    comps = component_count(braid)
    if args.format == "json":
        doc = {
            "braid": _braid_json(braid),
            "knot": comps == 1,
            "components": comps,
            "fillings": [
                {
                    "slope": _slope_json(f.slope),
                    "cases": list(f.cases),
                    "witnesses": [
                        {"case": wit.case_id, "eps": wit.eps, "tuple": _tuple_json(wit.tuple)}
                        for wit in f.witnesses
                    ],
                }
                for f in fills
            ],
        }
        return _dump(doc), EXIT_OK
    if args.format == "csv":
        lines = ["slope,case,eps,tuple"]
        for f in fills:
            for wit in f.witnesses:
                lines.append(f"{f.slope},{wit.case_id},{wit.eps},{wit.tuple}")
        return "\n".join(lines), EXIT_OK
    lines = [str(braid) + ("" if comps == 1 else f"  closure is a link ({comps} components)")]
    if not fills:
        lines.append("(none)")
    for f in fills:
        tags = "  ".join(
            f"[case {wit.case_id}, eps={wit.eps:+d}, tuple {wit.tuple}]" for wit in f.witnesses
        )
        lines.append(f"{f.slope}  {tags}")
    return "\n".join(lines), EXIT_OK


def cmd_knots(args) -> tuple[str, int]:
    try:
        slope = Slope(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 3 <= args.max_w <= census_mod.MAX_CENSUS_W:
        raise UsageError(f"need 3 <= max_w <= {census_mod.MAX_CENSUS_W}, got {args.max_w}")
    found = knots_for_slope(slope, args.max_w)
    if args.format == "json":
        doc = {
            "slope": _slope_json(slope),
            "max_w": args.max_w,
            "braids": [
                {"braid": _braid_json(b), "knot": is_knot(b), "tuple": _tuple_json(t)}
                for b, t in found
            ],
        }
        return _dump(doc), EXIT_OK
    if args.format == "csv":
        lines = ["w,b,t,is_knot,tuple"]
        lines += [f"{b.w},{b.b},{b.t},{int(is_knot(b))},{t}" for b, t in found]
        return "\n".join(lines), EXIT_OK
    lines = [f"slope {slope}, w <= {args.max_w}: {len(found)} braids"]
    for b, t in found:
        note = "" if is_knot(b) else "  (link)"
        lines.append(f"({b.w}, {b.b}, {b.t})  tuple {t}{note}")
    return "\n".join(lines), EXIT_OK


def cmd_tuple(args) -> tuple[str, int]:
    try:
        tup = AllowableTuple(args.p, args.q, args.k, args.x, args.eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = tuple_to_braid(tup)
    if args.format == "json":
        w, b, t = tuple_parameters(tup)
        doc = {
            "tuple": _tuple_json(tup),
            "w": w,
            "b": b,
            "t": t,
            "valid": isinstance(result, Braid),
            "reason": result.reason if isinstance(result, Degenerate) else None,
        }
        return _dump(doc), EXIT_OK
    if isinstance(result, Degenerate):
        return str(result), EXIT_OK
    return f"({result.w}, {result.b}, {result.t})", EXIT_OK


def _cache_path(args) -> Path | None:
    if args.cache:
        return Path(args.cache)
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    if cache_dir:
        return Path(cache_dir) / f"census_w{args.max_w}.jsonl"
    return None


def cmd_census(args) -> tuple[str, int]:
    if not 3 <= args.max_w <= census_mod.MAX_CENSUS_W:
        raise UsageError(f"need 3 <= max_w <= {census_mod.MAX_CENSUS_W}, got {args.max_w}")
    records, summary = census_mod.run_census(args.max_w, jobs=args.jobs, cache_path=_cache_path(args))
    listed = records
    if args.dedup == "canonical":
        listed = [r for r in records if r.canonical]
    if args.format == "csv":
        return census_mod.records_to_csv(listed).rstrip("\n"), EXIT_OK
    if args.format == "json":
        doc = {"summary": summary.as_dict(), "dedup": args.dedup}
        if args.list:
            doc["records"] = [r.to_dict() for r in listed]
        return _dump(doc), EXIT_OK
    if args.dedup == "canonical":
        line = (
            f"knots: {summary.canonical_knot_count}, admitting: {summary.canonical_admitting_count}, "
            f"fillings: {summary.canonical_filling_count}"
        )
    else:
        line = (
            f"knots: {summary.knot_count}, admitting: {summary.admitting_count}, "
            f"fillings: {summary.filling_count}"
        )
    lines = [f"w <= {args.max_w}: triples: {summary.triple_count}", line]
    if args.list:
        for r in listed:
            w, b, t = r.braid.astuple()
            if r.knot:
                body = ", ".join(str(s) for s in r.fillings) or "-"
            else:
                body = "link"
            lines.append(f"({w}, {b}, {t}; {body})")
    return "\n".join(lines), EXIT_OK


def cmd_table1(args) -> tuple[str, int]:
    if args.max_w < 4:
        raise UsageError(f"need max_w >= 4, got {args.max_w}")
    rows = [str(r) for r in census_mod.table1(args.max_w)]
    if args.check:
        golden = [g for g in census_mod.golden_table1() if int(g[1:].split(",")[0]) <= args.max_w]
        if rows != golden:
            diff = difflib.unified_diff(golden, rows, "golden", "computed", lineterm="")
            return "\n".join(diff), EXIT_FAIL
    if args.format == "json":
        doc = {
            "max_w": args.max_w,
            "rows": [
                {"braid": _braid_json(r.braid), "slopes": [_slope_json(s) for s in r.slopes]}
                for r in census_mod.table1(args.max_w)
            ],
        }
        return _dump(doc), EXIT_OK
    return "\n".join(rows), EXIT_OK


def run_verify(max_w: int) -> dict:
    equivalence = check_equivalence(max_w)
    diagram = diagram_sweep(30, 3)
    phi = phi_sweep(200)
    mirror = census_mod.verify_mirror_pairs(max(max_w, 4))
    ok = equivalence.ok and not diagram["mismatches"] and not phi["mismatches"] and mirror.ok
    return {
        "max_w": max_w,
        "ok": ok,
        "equivalence": {
            "triples_checked": equivalence.triples_checked,
            "mismatches": equivalence.mismatches,
        },
        "diagram": diagram,
        "phi": phi,
        "mirror": {
            "pairs_checked": mirror.pairs_checked,
            "out_of_range": len(mirror.out_of_range),
            "mismatches": mirror.mismatches,
            "literal_formula": {
                "pairs_checked": mirror.literal_pairs_checked,
                "out_of_range": mirror.literal_out_of_range,
                "mismatches": len(mirror.literal_mismatches),
            },
        },
    }


def cmd_verify(args) -> tuple[str, int]:
    if not 3 <= args.max_w <= MAX_ORACLE_W:
        raise UsageError(f"need 3 <= max_w <= {MAX_ORACLE_W}, got {args.max_w}")
    report = run_verify(args.max_w)
    code = EXIT_OK if report["ok"] else EXIT_FAIL
    if args.format == "json":
        return _dump(report), code
    eq, dg, ph, mi = report["equivalence"], report["diagram"], report["phi"], report["mirror"]
    lines = [
        f"closed form vs tuple enumeration (w <= {args.max_w}): "
        f"{eq['triples_checked']} triples, {len(eq['mismatches'])} mismatches",
        f"spiral diagram w,t (p <= {dg['max_p']}, k <= {dg['max_k']}): "
        f"{dg['checked']} tuples, {len(dg['mismatches'])} mismatches",
        f"phi closed forms (p <= {ph['max_p']}): {ph['checked']} cases, {len(ph['mismatches'])} mismatches",
        f"mirror pairs (w <= {max(args.max_w, 4)}): {mi['pairs_checked']} pairs, "
        f"{len(mi['mismatches'])} mismatches, {mi['out_of_range']} without partner",
        f"  printed formula (w, w-b-1, t-b-1): {mi['literal_formula']['mismatches']} of "
        f"{mi['literal_formula']['pairs_checked']} pairs disagree (informational)",
        "PASS" if report["ok"] else "FAIL",
    ]
    if not report["ok"]:
        lines.append(_dump(report))
    return "\n".join(lines), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onebridge",
        description="Solid-torus Dehn fillings on the outer torus of 1-bridge braid exteriors.",
    )
    parser.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "json", "csv")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("fillings", help="filling slopes of K(w, b, t)")
    p.add_argument("w", type=int)
    p.add_argument("b", type=int)
    p.add_argument("t", type=int)
    add_format(p)
    p.set_defaults(func=cmd_fillings)

    p = sub.add_parser("knots", help="braids for which p/q fills to a solid torus")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--max-w", type=int, default=40)
    add_format(p)
    p.set_defaults(func=cmd_knots)

    p = sub.add_parser("tuple", help="braid parameters of an allowable 5-tuple")
    for name in ("p", "q", "k", "x", "eps"):
        p.add_argument(name, type=int)
    add_format(p, ("text", "json"))
    p.set_defaults(func=cmd_tuple)

    p = sub.add_parser("census", help="sweep all triples up to a winding bound")
    p.add_argument("--max-w", type=int, default=10)
    p.add_argument("--list", action="store_true", help="print every record")
    p.add_argument("--dedup", choices=("none", "canonical"), default="none")
    p.add_argument("--cache", help="JSONL cache file")
    p.add_argument("--cache-dir", help=f"cache directory (default ${CACHE_ENV})")
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("table1", help="canonical knots and their fillings")
    p.add_argument("--max-w", type=int, default=10)
    p.add_argument("--check", action="store_true", help="compare with the bundled golden table")
    add_format(p, ("text", "json"))
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", help="run the oracle cross-checks")
    p.add_argument("--max-w", type=int, default=25)
    add_format(p, ("text", "json"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    start = time.perf_counter()
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    if args.timing:
        print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
