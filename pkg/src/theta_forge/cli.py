"""theta-forge command line: expand, count, verify, maps, suite."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import __version__
from ._backend import default_order
from .errors import ThetaForgeError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PARAM_FLAGS = ("S", "R", "k", "m", "s")


class UsageError(Exception):
    pass


def _kv(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"expected key=value, got {item!r}")
        key, value = item.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _params(args, positional: dict) -> dict:
    params = dict(positional)
    for flag in PARAM_FLAGS:
        v = getattr(args, flag, None)
        if v is not None:
            params[flag] = v
    return params


def _order(args, params: dict) -> int:
    if "N" in params:
        raw = params.pop("N")
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"N must be an integer, got {raw!r}") from None
    return args.order if args.order is not None else default_order()


def _ints(params: dict, keep=("xi",)) -> dict:
    out = {}
    for k, v in params.items():
        if k in keep or not isinstance(v, str):
            out[k] = v
            continue
        try:
            out[k] = int(v)
        except ValueError:
            raise UsageError(f"parameter {k} must be an integer, got {v!r}") from None
    return out


def _emit(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _table(rows, header, fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        body = dict(meta or {})
        body["rows"] = [dict(zip(header, r)) for r in rows]
        return json.dumps(body, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    return "".join(" ".join(str(x) for x in r) + "\n" for r in rows)


# -- commands -------------------------------------------------------------------------

def cmd_expand(args) -> int:
    from .qseries import auxiliary_series

    name = args.series or args.name
    if not name:
        raise UsageError("expand needs a series name")
    params = _params(args, _kv(args.params))
    N = _order(args, params)
    s = auxiliary_series(name, _ints(params), N)
    rows = [(n, c) for n, c in enumerate(s.coeffs)]
    meta = {"series": name, "params": _ints(params), "order": N}
    if args.format == "json":
        meta["coeffs"] = list(s.coeffs)
        _emit(json.dumps(meta, sort_keys=True) + "\n", args.out)
    else:
        _emit(_table(rows, ["n", "coeff"], args.format), args.out)
    return EXIT_OK


def _constraint(args):
    from .partitions import Constraint

    kw = {"distinct": args.distinct}
    if args.mod is not None:
        if not args.residues:
            raise UsageError("--mod needs --residues")
        kw["modulus"] = args.mod
        kw["residues"] = {int(r) % args.mod for r in args.residues.split(",") if r.strip()}
    elif args.residues:
        raise UsageError("--residues needs --mod")
    if args.regular:
        kw["forbidden_divisor"] = tuple(args.regular)
    if args.min_part is not None:
        kw["min_part"] = args.min_part
    if args.max_part is not None:
        kw["max_part"] = args.max_part
    if args.max_mult:
        caps = {}
        for item in args.max_mult:
            v, _, c = item.partition(":")
            caps[int(v)] = int(c)
        kw["max_multiplicity"] = caps
    if args.require:
        kw["required_parts"] = tuple(int(x) for x in args.require.split(",") if x.strip())
    return Constraint(**kw)


def cmd_count(args) -> int:
    from .partitions import count, counts

    c = _constraint(args)
    if args.n is not None:
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        rows = [(args.n, count(args.n, c))]
    else:
        n_max = args.n_max if args.n_max is not None else 20
        if n_max < 0:
            raise UsageError("--n-max must be non-negative")
        rows = list(enumerate(counts(n_max, c)))
    if args.format == "plain" and args.n is not None:
        _emit(f"{rows[0][1]}\n", args.out)
    else:
        _emit(_table(rows, ["n", "count"], args.format, {"constraint": c.to_dict()}), args.out)
    return EXIT_OK


def _render_report(r, fmt: str) -> str:
    if fmt == "json":
        return r.to_json() + "\n"
    if fmt == "csv":
        from .report import CSV_HEADER

        return _table([r.csv_row()], CSV_HEADER, "csv")
    line = f"{r.name} {json.dumps(r.params, sort_keys=True)} range={r.range[0]}..{r.range[-1]} {r.status}"
    if r.threshold is not None:
        line += f" n0={r.threshold}"
    if r.witness:
        line += " witness=" + json.dumps(r.witness, sort_keys=True)
    if r.detail:
        line += f" ({r.detail})"
    return line + "\n"


def cmd_verify(args) -> int:
    from .identities import run_check

    name = args.check or args.name
    if not name:
        raise UsageError("verify needs a check name")
    params = _params(args, _kv(args.params))
    N = _order(args, params)
    r = run_check(name, params, N)
    _emit(_render_report(r, args.format), args.out)
    return EXIT_OK if r.passed else EXIT_FAIL


def cmd_maps(args) -> int:
    from functools import partial

    from . import bijections as B

    name = args.map or args.name
    if not name:
        raise UsageError("maps needs a map name")
    params = _ints(_params(args, _kv(args.params)))
    n_max = int(params.pop("n_max", args.n_max if args.n_max is not None else 20))
    if name in ("phi1", "phi2"):
        R, S = params.pop("R", None), params.pop("S", None)
        if R is None or S is None:
            raise UsageError(f"{name} needs R and S")
        B.injections.check_rs(R, S)
        if name == "phi1":
            fn, dom, ns = partial(B.phi1, R, S), partial(B.y_set, 0, R, S), range(1, n_max + 1)
        else:
            fn = partial(B.phi2, R, S)
            dom = partial(B.residual_set, 1, R, S)
            ns = [n for n in range(1, n_max + 1) if n not in (R, 2 * R)]
        kinds = ("injection",)
    elif name == "F":
        fn, dom, ns = B.F, B.qp_set, range(1, n_max + 1)
        kinds = ("involution", "sign_reversing")
    elif name == "tgen":
        m, s = params.pop("m", None), params.pop("s", None)
        if m is None or s is None:
            raise UsageError("tgen needs m and s")
        B.involution.check_ms(m, s)
        fn, dom, ns = partial(B.tgen_involution, m, s), partial(B.a_set, m, s), range(0, n_max + 1)
        kinds = ("involution", "sign_reversing")
    else:
        raise UsageError(f"unknown map {name!r}; choose phi1, phi2, F or tgen")
    if params:
        raise UsageError(f"unexpected parameters {sorted(params)}")

    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        if not args.summary_only:
            for n in ns:
                for x in dom(n):
                    r = fn(x)
                    sink.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
        verdicts = {}
        for kind in kinds:
            rep = B.verify_map(kind, fn, dom, ns)
            key = {"injection": "injective"}.get(kind, kind)
            verdicts[key] = rep.passed
            if rep.witness:
                verdicts[key + "_witness"] = rep.witness
        if name == "phi2":
            audit = B.audit_phi2(R, S, n_max)
            verdicts["total"] = audit["total"] is None
            verdicts["image_descriptions"] = audit["own_image"] is None
            verdicts["image_disjoint"] = audit["disjoint"] is None
        summary = {"map": name, "n_max": n_max, **verdicts}
        sink.write(json.dumps(summary, sort_keys=True) + "\n")
    finally:
        if sink is not sys.stdout:
            sink.close()
    ok = all(v for k, v in verdicts.items() if not k.endswith("_witness"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_suite(args) -> int:
    from .identities import CSV_HEADER, run_suite

    params = _kv(args.params)
    N = _order(args, params)
    if params:
        raise UsageError(f"suite takes no parameters, got {sorted(params)}")
    progress = None
    if args.progress:
        def progress(r):
            print(f"{r.name} {json.dumps(r.params, sort_keys=True)} {r.status}", file=sys.stderr)
    reports = run_suite(args.tag, N, progress)
    out_dir = Path(args.out or "reports")
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "reports.json").write_text(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=1) + "\n")
    with open(out_dir / "reports.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in reports:
            w.writerow(r.csv_row())
    failed = [r for r in reports if not r.passed]
    theorem_failed = [r for r in failed if r.tag == "theorem"]
    print(f"{len(reports)} checks, {len(failed)} failed ({len(theorem_failed)} theorem rows); reports in {out_dir}")
    for r in failed:
        sys.stdout.write(_render_report(r, "plain"))
    return EXIT_FAIL if theorem_failed else EXIT_OK


# -- parser ----------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, params=True):
    if params:
        p.add_argument("params", nargs="*", metavar="key=value", help="parameters such as k=3 or N=100")
        for flag in PARAM_FLAGS:
            p.add_argument(f"--{flag}", dest=flag, type=int)
    p.add_argument("--order", type=int, help="truncation order N (default 200 or $THETA_FORGE_ORDER)")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--out", help="output file (suite: output directory)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="theta-forge", allow_abbrev=False,
                                 description="Exact q-series, partition counts and identity checks.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", allow_abbrev=False, help="print coefficients of a named series")
    p.add_argument("name", nargs="?")
    p.add_argument("--series")
    _common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("count", allow_abbrev=False, help="count constrained partitions")
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--distinct", action="store_true")
    p.add_argument("--regular", type=int, action="append", help="forbid parts divisible by this")
    p.add_argument("--mod", type=int)
    p.add_argument("--residues", help="comma-separated residues for --mod")
    p.add_argument("--min-part", dest="min_part", type=int)
    p.add_argument("--max-part", dest="max_part", type=int)
    p.add_argument("--max-mult", dest="max_mult", action="append", metavar="VALUE:CAP")
    p.add_argument("--require", help="comma-separated parts that must occur")
    _common(p, params=False)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", allow_abbrev=False, help="run one registered check")
    p.add_argument("name", nargs="?")
    p.add_argument("--check")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("maps", allow_abbrev=False, help="audit a map exhaustively")
    p.add_argument("name", nargs="?")
    p.add_argument("--map")
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--summary-only", action="store_true", help="skip the per-element trace")
    _common(p)
    p.set_defaults(func=cmd_maps)

    p = sub.add_parser("suite", allow_abbrev=False, help="run the default grids and write reports")
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("--tag", default="all", help="theorems, conjectures, all or none")
    p.add_argument("--progress", action="store_true", help="per-row progress on stderr")
    p.add_argument("--order", type=int)
    p.add_argument("--out", help="output directory (default ./reports)")
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args, rest = parser.parse_known_args(argv)
    # key=value items may follow option flags; argparse leaves those over
    stray = [r for r in rest if "=" not in r or r.startswith("-") or not hasattr(args, "params")]
    if stray:
        parser.error(f"unrecognized arguments: {' '.join(stray)}")
    if rest:
        args.params = list(args.params or []) + rest
    try:
        return args.func(args)
    except (UsageError, ThetaForgeError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        kind = "" if isinstance(exc, UsageError) else f"{type(exc).__name__}: "
        print(f"theta-forge: error: {kind}{msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
