"""Command-line interface for hyperalpha."""

from __future__ import annotations

import argparse
import logging
import shlex
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Sequence

from . import schema
from .bounds import best_bound, bound_strong_set, bound_subset, bound_vertex_pair
from .combinatorics import is_strong_independent
from .config import SPECTRAL
from .errors import HyperalphaError, PreconditionViolated
from .hypergraph import complete, degree_profile, is_connected, random_connected
from .pipelines.context import PipelineContext
from .pipelines.product_pipeline import run_product
from .pipelines.verify_pipeline import VerifySettings, run_verify
from .reports.json_render import report_payload, to_json_text, write_json
from .reports.registry import load_campaign
from .reports.table import render_table
from .spectral import combine_components, spectral_by_component
from .uhg import format_uhg, read_uhg, write_uhg

_LOG_FORMAT = "%(asctime)s.%(msecs)03d - %(levelname)s - %(message)s"
_LOG_DATEFMT = "%Y-%m-%dT%H:%M:%S"

BOUND_COLUMNS = ("bound", "value", "rho_lower", "rho_upper", "slack", "holds", "subset", "params")


def setup_logging(log_file: Path | None = None, *, debug: bool = False) -> None:
    """Console logging on standard error, plus an optional log file."""
    level = logging.DEBUG if debug else logging.INFO
    formatter = logging.Formatter(_LOG_FORMAT, datefmt=_LOG_DATEFMT)

    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if getattr(handler, "_hyperalpha", False):
            root_logger.removeHandler(handler)
            handler.close()

    handlers: list[logging.Handler] = []
    console_handler = logging.StreamHandler(sys.stderr)
    handlers.append(console_handler)
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        setattr(handler, "_hyperalpha", True)
        root_logger.addHandler(handler)
    root_logger.setLevel(level)

    if log_file is not None:
        logging.info(f"Logging to file: {log_file}")
    argv = " ".join(shlex.quote(a) for a in sys.argv)
    logging.debug(f"Invocation: {argv}")


# ----------------------------
# Argument parsing helpers
# ----------------------------


def _int_range(raw: str) -> tuple[int, int]:
    """'6' -> (6, 6); '4-9' -> (4, 9)."""
    try:
        parts = [int(p) for p in str(raw).split("-", 1)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or MIN-MAX, got {raw!r}") from None
    lo, hi = (parts[0], parts[0]) if len(parts) == 1 else (parts[0], parts[1])
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {raw!r}")
    return lo, hi


def _int_list(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in str(raw).split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {raw!r}"
        ) from None


def _float_list(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in str(raw).split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {raw!r}") from None


def _str_list(raw: str) -> tuple[str, ...]:
    return tuple(p.strip() for p in str(raw).split(",") if p.strip())


def _inflation(raw: str) -> tuple[str, float]:
    name, sep, delta = str(raw).partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"expected NAME=DELTA, got {raw!r}")
    try:
        return name.strip(), float(delta)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number after '=', got {raw!r}") from None


def _emit(
    payload: dict[str, Any], *, as_json: bool, out: Path | None = None, text: str = ""
) -> None:
    if out is not None:
        write_json(payload, out)
    if as_json:
        sys.stdout.write(to_json_text(payload))
    elif text:
        sys.stdout.write(text.rstrip("\n") + "\n")


# ----------------------------
# Commands
# ----------------------------


def _command_info(args: argparse.Namespace) -> int:
    g = read_uhg(args.path)
    prof = degree_profile(g)
    connected, parts = is_connected(g)
    headline = (
        f"k={g.k} n={g.n} m={g.m} Δ={prof.max_degree} δ={prof.min_degree} "
        f"connected={'true' if connected else 'false'}"
    )
    payload = report_payload(
        schema.KIND_INFO,
        {
            "k": g.k,
            "n": g.n,
            "m": g.m,
            "max_degree": prof.max_degree,
            "min_degree": prof.min_degree,
            "average_degree": str(prof.average_degree),
            "regular": prof.is_regular,
            "degrees": list(prof.degrees),
            "connected": connected,
            "components": parts,
        },
    )
    degrees = render_table(
        [{"vertex": v, "degree": d} for v, d in zip(g.vertices(), prof.degrees)],
        ("vertex", "degree"),
    )
    comps = "\n".join(f"component {i + 1}: {part}" for i, part in enumerate(parts))
    _emit(payload, as_json=args.json, text=f"{headline}\n\n{degrees}\n\n{comps}")
    return schema.EXIT_OK


def _command_spectral(args: argparse.Namespace) -> int:
    g = read_uhg(args.path)
    per_component = spectral_by_component(
        g, args.alpha, args.tol, args.max_iter, strict=args.strict
    )
    result = combine_components(g, args.alpha, per_component)
    rows = [
        {
            "component": i + 1,
            "vertices": c.vertices,
            "rho": c.result.rho,
            "lower": c.result.lower,
            "upper": c.result.upper,
            "iterations": c.result.iterations,
            "converged": c.result.converged,
        }
        for i, c in enumerate(per_component)
    ]
    payload = report_payload(
        schema.KIND_SPECTRAL,
        {
            **result.to_dict(),
            "components": [
                {"vertices": c.vertices, **c.result.to_dict(include_eigvec=False)}
                for c in per_component
            ],
        },
    )
    text = render_table(
        rows, ("component", "vertices", "rho", "lower", "upper", "iterations", "converged")
    )
    text += (
        f"\n\nrho_{args.alpha:g} = {result.rho:.12g}"
        f"  bracket=[{result.lower:.12g}, {result.upper:.12g}]"
        f"  residual={result.residual:.3e}"
    )
    _emit(payload, as_json=args.json, text=text)
    return schema.EXIT_OK


def _command_bounds(args: argparse.Namespace) -> int:
    g = read_uhg(args.path)
    alpha = args.alpha
    body: dict[str, Any] = {"alpha": alpha}
    if args.subset is not None:
        members = list(args.subset)
        if is_strong_independent(g, members):
            reports = [bound_strong_set(g, alpha, members)]
        else:
            reports = [bound_subset(g, alpha, members)]
    elif args.pair is not None:
        if len(args.pair) != 2:
            raise PreconditionViolated(f"--pair takes two vertices, got {list(args.pair)}")
        reports = [bound_vertex_pair(g, alpha, args.pair[0], args.pair[1])]
    else:
        best = best_bound(g, alpha)
        reports = best.reports
        body["rho"] = best.spectrum.to_dict(include_eigvec=False)
        body["skipped"] = dict(best.skipped)

    rows = [r.to_dict() for r in reports]
    body["bounds"] = rows
    payload = report_payload(schema.KIND_BOUNDS, body)
    text = render_table(rows, BOUND_COLUMNS)
    for name, reason in body.get("skipped", {}).items():
        text += f"\n(skipped {name}: {reason})"
    _emit(payload, as_json=args.json, text=text)

    failed = [r.bound for r in reports if not r.holds]
    if failed:
        logging.error(f"[BOUNDS] bound(s) above the spectral bracket: {', '.join(failed)}")
        return schema.EXIT_PROPERTY_FAILED
    return schema.EXIT_OK


def _verify_settings(args: argparse.Namespace) -> VerifySettings:
    campaign = load_campaign(args.config) if args.config is not None else None
    seed = args.seed
    if seed is None and (campaign is None or campaign.seed is None):
        raise PreconditionViolated("verify needs an explicit --seed (or 'seed' in --config)")
    settings = VerifySettings(seed=seed if seed is not None else 0)
    if campaign is not None:
        settings = settings.with_campaign(campaign)
        if seed is not None:
            settings = replace(settings, seed=seed)

    overrides: dict[str, Any] = {}
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.n is not None:
        overrides["n_range"] = args.n
    if args.k is not None:
        overrides["ks"] = args.k
    if args.m is not None:
        overrides["m_range"] = args.m
    if args.alphas is not None:
        overrides["alphas"] = args.alphas
    if args.suites is not None:
        overrides["suites"] = args.suites
    if args.inflate_bound:
        overrides["inflate"] = dict(args.inflate_bound)
    return replace(settings, **overrides)


def _command_verify(args: argparse.Namespace) -> int:
    settings = _verify_settings(args)
    ctx = PipelineContext.from_env()
    run = run_verify(settings, workers=ctx.workers)
    payload = report_payload(schema.KIND_VERIFY, run.to_dict())

    summary_rows = []
    for name in settings.suites:
        summary_rows.append(
            {
                "suite": name,
                "checks": sum(r.checks.get(name, 0) for r in run.results),
                "failures": sum(1 for f in run.failures if f.suite == name),
            }
        )
    text = render_table(summary_rows, ("suite", "checks", "failures"))
    if run.failures:
        text += "\n\n" + render_table(
            [f.to_dict() for f in run.failures],
            ("trial", "suite", "check", "alpha", "value", "reference", "slack"),
        )
    text += f"\n\n{'PASS' if run.passed else 'FAIL'} seed={settings.seed} trials={settings.trials}"
    _emit(payload, as_json=args.json, out=args.out, text=text)
    return schema.EXIT_OK if run.passed else schema.EXIT_PROPERTY_FAILED


def _command_product(args: argparse.Namespace) -> int:
    g = read_uhg(args.g_path)
    h = read_uhg(args.h_path)
    run = run_product(g, h, args.alpha, laplacian=args.laplacian, tol=args.tol)
    payload = report_payload(schema.KIND_PRODUCT, {"alpha": args.alpha, **run.to_dict()})
    rows = [
        {
            "check": c.kind,
            "factor": c.factor,
            "source": c.source_value,
            "expected": c.expected,
            "product": c.product_value,
            "difference": c.difference,
            "residual": c.residual,
            "passed": c.passed,
        }
        for c in run.checks
    ]
    text = render_table(
        rows,
        ("check", "factor", "source", "expected", "product", "difference", "residual", "passed"),
    )
    for c in run.checks:
        for reason in c.failures:
            text += f"\n{c.kind}: {reason}"
    _emit(payload, as_json=args.json, text=text)
    return schema.EXIT_OK if run.passed else schema.EXIT_PROPERTY_FAILED


def _command_gen(args: argparse.Namespace) -> int:
    if args.family == "complete":
        g = complete(args.n, args.k)
    else:
        if args.m is None or args.seed is None:
            raise PreconditionViolated("--family random needs --m and --seed")
        g = random_connected(args.n, args.k, args.m, args.seed)
    if args.out is not None:
        write_uhg(g, args.out)
        logging.info(f"✔ Hypergraph written: {args.out} (n={g.n} k={g.k} m={g.m})")
    else:
        sys.stdout.write(format_uhg(g))
    return schema.EXIT_OK


# ----------------------------
# Parser
# ----------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperalpha",
        description=(
            "A_alpha spectral radius, degree lower bounds and identity checks "
            "for uniform hypergraphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_common = argparse.ArgumentParser(add_help=False)
    p_common.add_argument(
        "--log-file", type=Path, help="Also write logs to this file (default: off)"
    )
    p_common.add_argument(
        "--debug", action="store_true", help="Enable DEBUG logging (default: INFO)"
    )

    p_json = argparse.ArgumentParser(add_help=False)
    p_json.add_argument(
        "--json", action="store_true", help="Emit the JSON report on stdout (default: table)"
    )

    p_alpha = argparse.ArgumentParser(add_help=False)
    p_alpha.add_argument("--alpha", type=float, default=0.0, help="alpha in [0, 1) (default: 0)")

    p_info = sub.add_parser(
        "info", help="Degree profile and connectivity of a .uhg file", parents=[p_common, p_json]
    )
    p_info.add_argument("path", type=Path)
    p_info.set_defaults(_fn=_command_info)

    p_spec = sub.add_parser(
        "spectral",
        help="A_alpha spectral radius with certified bracket",
        parents=[p_common, p_json, p_alpha],
    )
    p_spec.add_argument("path", type=Path)
    p_spec.add_argument(
        "--tol", type=float, default=SPECTRAL.tol, help=f"Bracket width (default: {SPECTRAL.tol})"
    )
    p_spec.add_argument(
        "--max-iter",
        type=int,
        default=SPECTRAL.max_iter,
        help=f"Iteration cap (default: {SPECTRAL.max_iter})",
    )
    p_spec.add_argument(
        "--strict", action="store_true", help="Fail instead of reporting an unconverged bracket"
    )
    p_spec.set_defaults(_fn=_command_spectral)

    p_bounds = sub.add_parser(
        "bounds", help="Evaluate degree lower bounds", parents=[p_common, p_json, p_alpha]
    )
    p_bounds.add_argument("path", type=Path)
    group = p_bounds.add_mutually_exclusive_group()
    group.add_argument("--subset", type=_int_list, help="Vertex subset S, e.g. '3,4'")
    group.add_argument("--pair", type=_int_list, help="Vertex pair i,j with d_i > d_j")
    group.add_argument("--all", action="store_true", help="All applicable bounds (default)")
    p_bounds.set_defaults(_fn=_command_bounds)

    p_verify = sub.add_parser("verify", help="Seeded property campaign", parents=[p_common, p_json])
    p_verify.add_argument(
        "--seed", type=int, help="Campaign seed (required unless set in --config)"
    )
    p_verify.add_argument("--trials", type=int, help="Number of random instances")
    p_verify.add_argument("--n", type=_int_range, help="Vertex count N or MIN-MAX")
    p_verify.add_argument("--k", type=_int_list, help="Edge size(s), e.g. '3,4'")
    p_verify.add_argument(
        "--m", type=_int_range, help="Edge count M or MIN-MAX (default: random headroom)"
    )
    p_verify.add_argument("--alphas", type=_float_list, help="Comma-separated alpha values")
    p_verify.add_argument(
        "--suites", type=_str_list, help=f"Subset of: {','.join(schema.ALL_SUITES)}"
    )
    p_verify.add_argument(
        "--config", type=Path, help="Campaign YAML (e.g. data/verify.example.yaml)"
    )
    p_verify.add_argument("--out", type=Path, help="Also write the JSON report to this file")
    p_verify.add_argument(
        "--inflate-bound", type=_inflation, action="append", default=[], help=argparse.SUPPRESS
    )
    p_verify.set_defaults(_fn=_command_verify)

    p_product = sub.add_parser(
        "product",
        help="Direct-product eigenvalue transport checks",
        parents=[p_common, p_json, p_alpha],
    )
    p_product.add_argument("g_path", type=Path, help="Connected G (.uhg)")
    p_product.add_argument("h_path", type=Path, help="Connected regular H (.uhg)")
    p_product.add_argument(
        "--laplacian", action="store_true", help="Also check Laplacian eigenpair transport"
    )
    p_product.add_argument(
        "--tol", type=float, default=1e-6, help="Relative tolerance (default: 1e-6)"
    )
    p_product.set_defaults(_fn=_command_product)

    p_gen = sub.add_parser("gen", help="Generate a .uhg hypergraph", parents=[p_common])
    p_gen.add_argument("--family", choices=("random", "complete"), default="random")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--k", type=int, required=True)
    p_gen.add_argument("--m", type=int, help="Edge count (random family)")
    p_gen.add_argument("--seed", type=int, help="Generator seed (random family)")
    p_gen.add_argument("--out", type=Path, help="Output .uhg path (default: stdout)")
    p_gen.set_defaults(_fn=_command_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    setup_logging(ns.log_file, debug=ns.debug)
    try:
        return int(ns._fn(ns))
    except HyperalphaError as e:
        logging.error(str(e))
        return schema.EXIT_USAGE
    except (OSError, ValueError) as e:
        # Campaign-file problems (missing file, bad YAML keys).
        logging.error(str(e))
        return schema.EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
