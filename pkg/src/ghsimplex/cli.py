"""Command-line front end.

Subcommands: validate, distance, characteristics, sweep, oracle-check,
generate. Inputs come from --input (CSV or JSON file) or --preset. Output
formats: pretty (default for scalar commands), csv (default for sweep),
json. All numbers print with 12 significant digits, so identical
configurations produce byte-identical output; execution is sequential and
never depends on --threads.

Exit codes: 0 success, 1 usage, 2 invalid metric or characteristics,
3 I/O or parse failure, 4 enumeration over the cap, 5 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from .errors import (
    BadCardinalityError,
    BadParamsError,
    EnumerationTooLargeError,
    GhSimplexError,
    InvalidCharacteristicsError,
    MetricValidationError,
    NonPositiveLambdaError,
    ParseError,
    SizeThresholdExceededError,
    ZeroPointsError,
)
from .correspondences import gh_bruteforce
from .generate import generate_space
from .matrixio import load_input, save_space
from .metric import FiniteMetricSpace, simplex
from .presets import get_preset
from .simplex_distance import (
    Characteristics,
    alpha_plus_via_mst,
    characteristics,
    classify_case,
    gh_to_simplex,
    gh_to_simplex_detail,
    sweep,
)
from .tolerance import DEFAULT_TOLERANCE, close

DEFAULT_CAP = 10_000_000
CAP_ENV_VAR = "GH_SIMPLEX_CAP"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_METRIC = 2
EXIT_IO = 3
EXIT_TOO_LARGE = 4
EXIT_ORACLE_MISMATCH = 5


class UsageError(GhSimplexError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


@dataclass(frozen=True)
class RunConfig:
    """Everything a command run depends on; single source for cap/tolerance."""

    command: str
    input: str | None = None
    preset: str | None = None
    m: int | None = None
    lam: float | None = None
    lam_min: float | None = None
    lam_max: float | None = None
    lam_step: float | None = None
    fmt: str = "pretty"
    tolerance: float = DEFAULT_TOLERANCE
    cap: int = DEFAULT_CAP
    seed: int | None = None
    threads: int = 1
    triangle_check: bool = True
    out: str | None = None
    plot: str | None = None
    gen_kind: str | None = None
    gen_n: int | None = None
    gen_side: float | None = None
    gen_dim: int | None = None
    gen_p: float | None = None
    gen_geodesic: bool = False


def _fmt(x) -> str:
    return format(float(x), ".12g")


def _json_safe(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cap = getattr(args, "cap", None)
    if cap is None:
        cap = _default_cap()
    elif cap < 1:
        raise UsageError(f"--cap must be positive, got {cap}")
    tolerance = getattr(args, "tolerance", None)
    if tolerance is None:
        tolerance = DEFAULT_TOLERANCE
    elif not tolerance > 0:
        raise UsageError(f"--tolerance must be positive, got {tolerance}")
    threads = getattr(args, "threads", 1)
    if threads is None:
        threads = 1
    if threads < 1:
        raise UsageError(f"--threads must be at least 1, got {threads}")
    fmt = getattr(args, "format", None)
    if fmt is None:
        fmt = "csv" if args.command == "sweep" else "pretty"
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        preset=getattr(args, "preset", None),
        m=getattr(args, "m", None),
        lam=getattr(args, "lam", None),
        lam_min=getattr(args, "lambda_min", None),
        lam_max=getattr(args, "lambda_max", None),
        lam_step=getattr(args, "lambda_step", None),
        fmt=fmt,
        tolerance=tolerance,
        cap=cap,
        seed=getattr(args, "seed", None),
        threads=threads,
        triangle_check=not getattr(args, "no_triangle_check", False),
        out=getattr(args, "out", None),
        plot=getattr(args, "plot", None),
        gen_kind=getattr(args, "kind", None),
        gen_n=getattr(args, "n", None),
        gen_side=getattr(args, "gen_lambda", None),
        gen_dim=getattr(args, "dim", None),
        gen_p=getattr(args, "p", None),
        gen_geodesic=getattr(args, "geodesic", False),
    )


def _load_target(cfg: RunConfig) -> FiniteMetricSpace | Characteristics:
    if cfg.input and cfg.preset:
        raise UsageError("--input and --preset are mutually exclusive")
    if cfg.preset:
        return get_preset(cfg.preset)
    if cfg.input:
        return load_input(
            cfg.input, strict_triangle=cfg.triangle_check, tol=cfg.tolerance
        )
    raise UsageError("one of --input or --preset is required")


def _require_space(target, what: str) -> FiniteMetricSpace:
    if not isinstance(target, FiniteMetricSpace):
        raise UsageError(f"{what} needs a finite space, not a characteristics record")
    return target


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    return value


def cmd_validate(cfg: RunConfig) -> int:
    space = _require_space(_load_target(cfg), "validate")
    if cfg.fmt == "json":
        obj = {"n": space.n, "diam": space.diam, "eps": space.eps, "valid": True}
        _emit(cfg, json.dumps(obj) + "\n")
    elif cfg.fmt == "csv":
        _emit(cfg, "n,diam,eps,valid\n"
              f"{space.n},{_fmt(space.diam)},{_fmt(space.eps)},true\n")
    else:
        _emit(cfg, f"n={space.n} diam={_fmt(space.diam)} eps={_fmt(space.eps)} OK\n")
    return EXIT_OK


def cmd_distance(cfg: RunConfig) -> int:
    space = _require_space(_load_target(cfg), "distance")
    m = _require(cfg.m, "--m")
    lam = _require(cfg.lam, "--lambda")
    detail = gh_to_simplex_detail(space, m, lam, cap=cfg.cap)
    argmin_labels = (
        detail.argmin.label_blocks(space.labels) if detail.argmin is not None else None
    )
    if cfg.fmt == "json":
        obj = {
            "two_dgh": detail.value,
            "dgh": detail.half,
            "branch": detail.branch,
            "argmin": argmin_labels,
        }
        _emit(cfg, json.dumps(obj) + "\n")
    elif cfg.fmt == "csv":
        argmin_cell = detail.argmin.format(space.labels) if detail.argmin else ""
        _emit(cfg, "two_dgh,dgh,branch,argmin\n"
              f"{_fmt(detail.value)},{_fmt(detail.half)},{detail.branch},\"{argmin_cell}\"\n")
    else:
        line = f"2dGH={_fmt(detail.value)} dGH={_fmt(detail.half)} branch={detail.branch}"
        if detail.argmin is not None:
            line += f" argmin={detail.argmin.format(space.labels)}"
        _emit(cfg, line + "\n")
    return EXIT_OK


def cmd_characteristics(cfg: RunConfig) -> int:
    target = _load_target(cfg)
    if isinstance(target, FiniteMetricSpace):
        m = _require(cfg.m, "--m")
        chars = characteristics(target, m, cap=cfg.cap)
        mst_value = alpha_plus_via_mst(target, m)
        mst_check = "OK" if close(mst_value, chars.alpha_plus, cfg.tolerance) else "MISMATCH"
    else:
        chars = target
        if cfg.m is not None and cfg.m != chars.m:
            raise UsageError(
                f"--m {cfg.m} conflicts with m={chars.m} in the characteristics input"
            )
        mst_check = "n/a"
    case = classify_case(chars)
    if cfg.fmt == "json":
        obj = {
            "m": chars.m,
            "diam": chars.diam,
            "alpha_minus": _json_safe(chars.alpha_minus),
            "alpha_plus": _json_safe(chars.alpha_plus),
            "d_minus": chars.d_minus,
            "d_plus": chars.d_plus,
            "eps": chars.eps,
            "case": str(case),
            "mst_check": mst_check,
        }
        _emit(cfg, json.dumps(obj) + "\n")
    elif cfg.fmt == "csv":
        eps_cell = "" if chars.eps is None else _fmt(chars.eps)
        _emit(
            cfg,
            "m,diam,eps,alpha_minus,alpha_plus,d_minus,d_plus,case,mst_check\n"
            f"{chars.m},{_fmt(chars.diam)},{eps_cell},{_fmt(chars.alpha_minus)},"
            f"{_fmt(chars.alpha_plus)},{_fmt(chars.d_minus)},{_fmt(chars.d_plus)},"
            f"{case},{mst_check}\n",
        )
    else:
        eps_part = "" if chars.eps is None else f" eps={_fmt(chars.eps)}"
        _emit(
            cfg,
            f"m={chars.m} diam={_fmt(chars.diam)}{eps_part} "
            f"alpha-={_fmt(chars.alpha_minus)} alpha+={_fmt(chars.alpha_plus)} "
            f"d-={_fmt(chars.d_minus)} d+={_fmt(chars.d_plus)} "
            f"case={case} mst-check={mst_check}\n",
        )
    if mst_check == "MISMATCH":
        return EXIT_ORACLE_MISMATCH
    return EXIT_OK


def _build_grid(cfg: RunConfig) -> list[float]:
    lam_min = _require(cfg.lam_min, "--lambda-min")
    lam_max = _require(cfg.lam_max, "--lambda-max")
    step = _require(cfg.lam_step, "--lambda-step")
    if not lam_min > 0:
        raise UsageError(f"--lambda-min must be positive, got {lam_min}")
    if not step > 0:
        raise UsageError(f"--lambda-step must be positive, got {step}")
    if lam_max < lam_min:
        raise UsageError("empty grid: --lambda-max is below --lambda-min")
    values = []
    i = 0
    slack = 1e-12 * max(abs(lam_max), 1.0)
    while True:
        v = lam_min + i * step
        if v > lam_max + slack:
            break
        values.append(v)
        i += 1
    return values


def cmd_sweep(cfg: RunConfig) -> int:
    target = _load_target(cfg)
    grid = _build_grid(cfg)
    if isinstance(target, FiniteMetricSpace):
        m = _require(cfg.m, "--m")
        rows = sweep(target, grid, m=m, cap=cfg.cap, cross_check=False)
    else:
        if cfg.m is not None and cfg.m != target.m:
            raise UsageError(
                f"--m {cfg.m} conflicts with m={target.m} in the characteristics input"
            )
        rows = sweep(target, grid)
    if cfg.fmt == "json":
        payload = [
            {
                "lambda": row.lam,
                "lo": row.bound.lo,
                "hi": row.bound.hi,
                "exact": row.bound.exact,
                "case": str(row.bound.case),
                "region": row.bound.region,
            }
            for row in rows
        ]
        text = json.dumps({"rows": payload}) + "\n"
    elif cfg.fmt == "pretty":
        lines = [f"{'lambda':>12} {'lo':>12} {'hi':>12} {'exact':>5}  case  region"]
        for row in rows:
            lines.append(
                f"{_fmt(row.lam):>12} {_fmt(row.bound.lo):>12} {_fmt(row.bound.hi):>12} "
                f"{str(row.bound.exact).lower():>5}  {str(row.bound.case):<4}  {row.bound.region}"
            )
        text = "\n".join(lines) + "\n"
    else:
        lines = ["lambda,lo,hi,exact,case,region"]
        for row in rows:
            lines.append(
                f"{_fmt(row.lam)},{_fmt(row.bound.lo)},{_fmt(row.bound.hi)},"
                f"{str(row.bound.exact).lower()},{row.bound.case},{row.bound.region}"
            )
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    if cfg.plot is not None:
        plot_path = cfg.plot
        if plot_path == "":
            if not cfg.out:
                raise UsageError("--plot without a figure path requires --out")
            root, _ = os.path.splitext(cfg.out)
            plot_path = root + ".png"
        from .plotting import render_sweep_figure

        title = cfg.preset or cfg.input
        render_sweep_figure(rows, plot_path, title=title)
    return EXIT_OK


def cmd_oracle_check(cfg: RunConfig) -> int:
    space = _require_space(_load_target(cfg), "oracle-check")
    m = _require(cfg.m, "--m")
    lam = _require(cfg.lam, "--lambda")
    formula = gh_to_simplex(space, m, lam, cap=cfg.cap)
    oracle = 2.0 * gh_bruteforce(simplex(m, lam), space, cap=cfg.cap)
    delta = abs(formula - oracle)
    verdict = "PASS" if close(formula, oracle, cfg.tolerance) else "FAIL"
    if cfg.fmt == "json":
        obj = {"formula": formula, "oracle": oracle, "delta": delta, "verdict": verdict}
        _emit(cfg, json.dumps(obj) + "\n")
    elif cfg.fmt == "csv":
        _emit(cfg, "formula,oracle,delta,verdict\n"
              f"{_fmt(formula)},{_fmt(oracle)},{_fmt(delta)},{verdict}\n")
    else:
        _emit(cfg, f"formula={_fmt(formula)} oracle={_fmt(oracle)} "
              f"delta={_fmt(delta)} {verdict}\n")
    return EXIT_OK if verdict == "PASS" else EXIT_ORACLE_MISMATCH


def cmd_generate(cfg: RunConfig) -> int:
    out = _require(cfg.out, "--out")
    space = generate_space(
        cfg.gen_kind,
        n=cfg.gen_n,
        side=cfg.gen_side,
        dim=cfg.gen_dim,
        p=cfg.gen_p,
        seed=cfg.seed,
        geodesic=cfg.gen_geodesic,
    )
    save_space(space, out)
    if cfg.gen_kind == "circle-sample":
        sys.stderr.write(
            "note: finite circle sample, not the continuum circle; "
            "its characteristics differ from the circle-m2 preset\n"
        )
    sys.stdout.write(f"wrote {space.n}-point space to {out}\n")
    return EXIT_OK


_COMMANDS = {
    "validate": cmd_validate,
    "distance": cmd_distance,
    "characteristics": cmd_characteristics,
    "sweep": cmd_sweep,
    "oracle-check": cmd_oracle_check,
    "generate": cmd_generate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ghsimplex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p, with_m=False, with_lambda=False, with_grid=False, with_plot=False):
        p.add_argument("--input", help="distance matrix (CSV/JSON) or characteristics JSON")
        p.add_argument("--preset", help="named input: circle-m2 or simplex-N-S")
        if with_m:
            p.add_argument("--m", type=int, help="number of simplex vertices / blocks")
        if with_lambda:
            p.add_argument("--lambda", dest="lam", type=float, help="simplex side length")
        if with_grid:
            p.add_argument("--lambda-min", dest="lambda_min", type=float)
            p.add_argument("--lambda-max", dest="lambda_max", type=float)
            p.add_argument("--lambda-step", dest="lambda_step", type=float)
        p.add_argument("--format", choices=("csv", "json", "pretty"))
        p.add_argument("--tolerance", type=float, help="comparison tolerance (default 1e-9)")
        p.add_argument("--cap", type=int,
                       help=f"enumeration size cap (default {DEFAULT_CAP}, env {CAP_ENV_VAR})")
        p.add_argument("--seed", type=int, help="random seed where applicable")
        p.add_argument("--threads", type=int, default=1,
                       help="concurrency hint; output is identical for any value")
        p.add_argument("--no-triangle-check", action="store_true",
                       help="accept semimetrics (skip triangle validation)")
        p.add_argument("--out", help="write output to this file instead of stdout")
        if with_plot:
            p.add_argument(
                "--plot",
                nargs="?",
                const="",
                default=None,
                metavar="FIGURE",
                help="also render the curve to a figure file; without a "
                     "value, place it next to --out with a .png suffix",
            )

    add_common(sub.add_parser("validate", help="check the metric axioms"))
    add_common(sub.add_parser("distance", help="doubled distance at one lambda"),
               with_m=True, with_lambda=True)
    add_common(sub.add_parser("characteristics", help="partition-family summary"),
               with_m=True)
    add_common(sub.add_parser("sweep", help="bound curve over a lambda grid"),
               with_m=True, with_grid=True, with_plot=True)
    add_common(sub.add_parser("oracle-check", help="formula vs brute-force correspondence search"),
               with_m=True, with_lambda=True)
    gen = sub.add_parser("generate", help="write a sample distance matrix")
    gen.add_argument("kind", choices=("simplex", "random-metric", "lp-points", "circle-sample"))
    gen.add_argument("--n", type=int, help="number of points")
    gen.add_argument("--lambda", dest="gen_lambda", type=float, help="simplex side length")
    gen.add_argument("--dim", type=int, help="ambient dimension for lp-points")
    gen.add_argument("--p", type=float, help="exponent for lp-points")
    gen.add_argument("--seed", type=int, help="random seed")
    gen.add_argument("--geodesic", action="store_true",
                     help="arc-length distances for circle-sample (default chordal)")
    gen.add_argument("--format", choices=("csv", "json", "pretty"))
    gen.add_argument("--tolerance", type=float)
    gen.add_argument("--cap", type=int)
    gen.add_argument("--threads", type=int, default=1)
    gen.add_argument("--no-triangle-check", action="store_true")
    gen.add_argument("--out", help="output file (.csv or .json)", required=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (BadParamsError, NonPositiveLambdaError, BadCardinalityError, ZeroPointsError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (MetricValidationError, InvalidCharacteristicsError) as exc:
        sys.stderr.write(f"INVALID {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID_METRIC
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except (SizeThresholdExceededError, EnumerationTooLargeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
