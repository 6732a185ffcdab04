"""Command-line interface: ``contyoung {eval,table,verify,sample}``.

stdout carries only JSON or CSV; diagnostics go to stderr.  Exit codes:
0 ok, 1 failed verification, 2 usage, 3 domain, 4 resource, 5 numeric.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from . import _kernels
from . import graded as gr
from . import montecarlo as mc
from . import simplex as sx
from . import verify as vf
from . import volume as vo
from . import zvolume as zv
from .errors import ContYoungError, DomainError, NumericError, ResourceError
from .series import SeriesValue

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_NUMERIC = 0, 1, 2, 3, 4, 5

TABLE_CELL_LIMIT = 20_000
TABLE_INDEX_LIMIT = 2_000
YOUNG_TABLE_LIMIT = 60


class UsageError(ContYoungError):
    exit_code = EXIT_USAGE


@dataclass
class CommandResult:
    status: str = "ok"
    payload: object = None
    diagnostics: list = field(default_factory=list)
    exit_code: int = EXIT_OK
    # table payloads: (header, rows)
    table: tuple | None = None


# --- value helpers ----------------------------------------------------------


def parse_number(text: str):
    """``"3"`` -> 3, ``"1/2"`` -> Fraction, anything else -> float."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def parse_seed(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= s < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return s


def parse_index(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def jsonable(v):
    """Exact rationals as ``"p/q"`` (integers stay integers)."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return {k: jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return v


def _real(v) -> float:
    return float(v)


def _series_payload(sv: SeriesValue, tol: float | None) -> dict:
    if tol is not None and sv.error_bound > tol:
        raise NumericError(f"error bound {sv.error_bound:.3e} exceeds --tol {tol:.3e}")
    out = sv.to_json()
    out["error_bound"] = sv.error_bound
    return out


# --- eval -------------------------------------------------------------------


def _qpoly(args):
    if args.kind == "young":
        if args.m is None or args.n is None:
            raise UsageError("qcard --kind young needs --m and --n")
        return gr.young_qcard(args.m, args.n)
    if args.n is None:
        raise UsageError(f"qcard --kind {args.kind} needs --n")
    return gr.q_factorial(args.n) if args.kind == "factorial" else gr.q_integer(args.n)


def run_eval(args) -> CommandResult:
    q, tol = args.quantity, args.tol

    def need(*names):
        missing = [f"--{nm}" for nm in names if getattr(args, nm) is None]
        if missing:
            raise UsageError(f"eval {q} needs {' '.join(missing)}")

    if q == "rho":
        need("x", "y")
        payload = _series_payload(vo.rho(_real(args.x), _real(args.y)), tol)
    elif q == "besseli":
        need("k", "t")
        payload = _series_payload(vo.bessel_i(args.k, _real(args.t)), tol)
    elif q == "voldn":
        need("n", "x", "y")
        payload = {"value": vo.vol_dn(args.n, args.x, args.y)}
    elif q == "volregion":
        need("x", "y")
        payload = _series_payload(vo.vol_region(args.region, _real(args.x), _real(args.y)), tol)
    elif q == "volz":
        need("x", "y", "z")
        payload = _series_payload(zv.vol_z_d(_real(args.x), _real(args.y), _real(args.z)), tol)
    elif q == "volzdn":
        need("n", "x", "y", "z")
        payload = _series_payload(zv.vol_z_dn(args.n, _real(args.x), _real(args.y), _real(args.z)), tol)
    elif q == "contbinom":
        need("x", "s")
        payload = {"value": vo.cont_binomial(_real(args.x), _real(args.s))}
    elif q == "kappa":
        need("x")
        payload = _series_payload(sx.kappa(_real(args.x)), tol)
    elif q == "qcard":
        payload = {"coeffs": list(_qpoly(args).coeffs)}
    elif q == "zcard":
        need("z")
        payload = {"value": gr.z_cardinality(_qpoly(args), _real(args.z))}
    elif q == "meanarea":
        need("n", "x", "y")
        payload = {"value": zv.mean_area(args.n, args.x, args.y)}
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown quantity {q}")
    return CommandResult(payload=jsonable(payload))


# --- table ------------------------------------------------------------------


def _guard(cells: int, what: str) -> None:
    if cells > TABLE_CELL_LIMIT:
        raise ResourceError(f"{what} would have {cells} cells (limit {TABLE_CELL_LIMIT})")


def run_table(args) -> CommandResult:
    t = args.table
    if t == "dnl":
        if args.nmax < 1 or args.lmax < 0:
            raise DomainError("need --nmax >= 1 and --lmax >= 0")
        _guard(args.nmax * (args.lmax + 1), "dnl table")
        header = ["l"] + [f"n={n}" for n in range(1, args.nmax + 1)]
        rows = [[l] + [zv.d_coeff(n, l) for n in range(1, args.nmax + 1)] for l in range(args.lmax + 1)]
    elif t in ("tnum", "unum"):
        if args.nmax > TABLE_INDEX_LIMIT:
            raise ResourceError(f"--nmax limited to {TABLE_INDEX_LIMIT}")
        fn = sx.t_number if t == "tnum" else sx.u_number
        name = "T" if t == "tnum" else "U"
        header = ["n", f"{name}_{args.k}"]
        if args.k < 1:
            raise DomainError(f"k must be >= 1, got {args.k}")
        rows = [[n, fn(args.k, n)] for n in range(args.k + 1, args.nmax + 1)]
    elif t == "ycoeffs":
        if max(args.m, args.n) > YOUNG_TABLE_LIMIT:
            raise ResourceError(f"--m and --n limited to {YOUNG_TABLE_LIMIT}")
        P = gr.young_qcard(args.m, args.n)
        header = ["a", "count"]
        rows = [[a, c] for a, c in enumerate(P.coeffs) if c]
    elif t == "powercoeffs":
        if args.nmax < 0 or args.k < 1:
            raise DomainError("need --k >= 1 and --nmax >= 0")
        _guard(args.k * (args.nmax + 1), "powercoeffs table")
        header = ["n", f"rho^{args.k}"]
        rows = [[n, c] for n, c in enumerate(vo.power_series_coeffs(args.k, args.nmax))]
    else:  # pragma: no cover
        raise UsageError(f"unknown table {t}")
    payload = {"columns": header, "rows": jsonable(rows)}
    return CommandResult(payload=payload, table=(header, rows))


# --- verify -----------------------------------------------------------------


def run_verify(args) -> CommandResult:
    seed = vf.DEFAULT_SEED if args.seed is None else args.seed
    report = vf.run_suite(args.suite, seed)
    report["seed"] = seed
    res = CommandResult(payload=report)
    if report["failed"]:
        res.status = "failed"
        res.exit_code = EXIT_FAILED
        res.diagnostics.append(f"{report['failed']} of {report['checks']} checks failed")
    return res


# --- sample -----------------------------------------------------------------


def run_sample(args) -> CommandResult:
    if args.seed is None:
        raise UsageError("sample needs an explicit --seed")
    if args.samples < mc.MIN_SAMPLES:
        raise UsageError(f"--samples must be at least {mc.MIN_SAMPLES}")
    if args.streams < 1:
        raise UsageError("--streams must be >= 1")
    workers = args.workers or args.streams
    common = dict(n_samples=args.samples, rng=mc.RngStream(args.seed), streams=args.streams, workers=workers)
    kind = args.kind
    x = _real(args.x) if args.x is not None else 1.0
    y = _real(args.y) if args.y is not None else 1.0
    if kind == "integral":
        if args.a is None:
            raise UsageError("sample integral needs --a")
        est = mc.mc_monomial_integral(args.a, x, **common)
        ref = float(sx.monomial_integral_coeff(args.a)) * x ** (sum(args.a) + len(args.a))
    else:
        if args.n is None:
            raise UsageError(f"sample {kind} needs --n")
        if kind == "volz":
            if args.z is None:
                raise UsageError("sample volz needs --z")
            est = mc.mc_vol_z(args.n, x, y, _real(args.z), **common)
            ref = zv.vol_z_dn(args.n, x, y, _real(args.z)).value
        elif kind == "vhat":
            if args.w is None:
                raise UsageError("sample vhat needs --w")
            est = mc.mc_vol_hat(args.n, x, y, _real(args.w), **common)
            ref = mc.vhat_reference(args.n, x, y, _real(args.w))
        else:
            est = mc.mc_mean_area(args.n, x, y, **common)
            ref = zv.mean_area(args.n, x, y)
    payload = est.to_json()
    payload.update(streams=args.streams, generator=mc.GENERATOR, backend=_kernels.backend())
    if ref is not None:
        payload["reference"] = ref
        payload["ratio"] = est.z_score(ref)
    return CommandResult(payload=payload)


# --- parser -------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    # accepted before or after the subcommand; SUPPRESS keeps the
    # subparser from overwriting a value given before it
    parser.add_argument("--format", choices=("json", "csv"), default=default)
    parser.add_argument("--tol", type=float, default=default)
    parser.add_argument("--seed", type=parse_seed, default=default)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="contyoung", description="Continuous Young diagram calculator.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(p, None)
    shared = argparse.ArgumentParser(add_help=False)
    _global_flags(shared, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[shared], help="evaluate a quantity")
    ev.add_argument(
        "quantity",
        choices=("rho", "besseli", "voldn", "volregion", "volz", "volzdn", "contbinom", "kappa", "qcard", "zcard", "meanarea"),
    )
    for name in ("x", "y", "z", "s", "t"):
        ev.add_argument(f"--{name}", type=parse_number)
    ev.add_argument("--n", type=int)
    ev.add_argument("--m", type=int)
    ev.add_argument("--k", type=int)
    ev.add_argument("--region", choices=vo.REGION_KINDS, default="D")
    ev.add_argument("--kind", choices=("young", "factorial", "integer"), default="young")
    ev.set_defaults(handler=run_eval, default_format="json")

    tb = sub.add_parser("table", parents=[shared], help="emit a coefficient table")
    tb.add_argument("table", choices=("dnl", "tnum", "unum", "ycoeffs", "powercoeffs"))
    tb.add_argument("--nmax", type=int, default=6)
    tb.add_argument("--lmax", type=int, default=6)
    tb.add_argument("--k", type=int, default=1)
    tb.add_argument("--m", type=int, default=2)
    tb.add_argument("--n", type=int, default=2)
    tb.set_defaults(handler=run_table, default_format="csv")

    vr = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    vr.add_argument("suite", choices=(*vf.SUITES, "all"))
    vr.set_defaults(handler=run_verify, default_format="json")

    sp = sub.add_parser("sample", parents=[shared], help="Monte Carlo estimate")
    sp.add_argument("kind", choices=("volz", "vhat", "meanarea", "integral"))
    for name in ("x", "y", "z", "w"):
        sp.add_argument(f"--{name}", type=parse_number)
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=parse_index, help="multi-index, e.g. 1,1")
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--streams", type=int, default=1)
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(handler=run_sample, default_format="json")
    return p


# --- output -------------------------------------------------------------------


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}.")
    elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def render(result: CommandResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.payload, allow_nan=True) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if result.table is not None:
        header, rows = result.table
        w.writerow(header)
        w.writerows(rows)
    elif isinstance(result.payload, dict) and "coeffs" in result.payload:
        w.writerow(["degree", "coeff"])
        w.writerows(enumerate(result.payload["coeffs"]))
    else:
        w.writerow(["key", "value"])
        for k, v in _flatten(result.payload):
            w.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
    return buf.getvalue()


def _error_status(exc: ContYoungError) -> str:
    if isinstance(exc, UsageError):
        return "usage_error"
    if isinstance(exc, DomainError):
        return "domain_error"
    if isinstance(exc, ResourceError):
        return "resource_error"
    return "numeric_error"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    fmt = args.format or args.default_format
    try:
        result = args.handler(args)
    except ContYoungError as exc:
        print(f"contyoung: {_error_status(exc)}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OverflowError as exc:
        print(f"contyoung: numeric_error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    for line in result.diagnostics:
        print(f"contyoung: {line}", file=sys.stderr)
    sys.stdout.write(render(result, fmt))
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
