"""Command-line entry point for the polyharmonic toolkit."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import colorlog

from .cellgeom import classify, enumerate_cells
from .cellgeom.cells import CellPoint
from .config import RunConfig, load_run_config
from .const import (
    CONF_FORMAT,
    CONF_P_MAX,
    CONF_SEED,
    CONF_TOL,
    CONF_TRIALS,
    EXIT_OK,
    EXIT_PROPERTY_FAILURE,
    LOGGERS,
    OUTPUT_FORMATS,
    STARTUP_MESSAGE,
    TRACE_K_END,
    VERSION,
)
from .errors import BadIndex, ParseError, PolyharmError
from .export import (
    cells_document,
    curve_csv,
    curve_document,
    dumps_json,
    render_svg,
    scan_csv,
)
from .kernelnum import KernelSpec, annulus_scan, kernel_norm
from .randgen import make_rng, random_point
from .symcalc import (
    BiLaurent,
    LagrangeFrame,
    almansi_decompose,
    almansi_recompose,
    almansi_to_alternative,
    alternative_recompose,
    cellular_decompose,
    cellular_recompose,
    is_harmonic,
    lagrange_polys,
    lagrange_reconstruct,
    parse_fraction,
)
from .verify import SUITES, VerifyRunner

_LOGGER = logging.getLogger(__name__)

DECOMPOSE_MODES = ("almansi", "alternative", "cellular")
DEFAULT_FRAME = "1/2,5/8,3/4"
EXTENSION_POINTS = 20
EXTENSION_TOL = 1e-8
SCAN_K_MIN = 6
LOG_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"
NEGATIVE_VALUE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+)$")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite "--alpha -3/2" as "--alpha=-3/2"; argparse reads "-3/2" as a flag."""
    out: list[str] = []
    for token in argv:
        if out and NEGATIVE_VALUE.match(token) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def setup_logging(verbose: bool) -> None:
    """Colored stderr handler on the package loggers."""
    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT))
    for name in LOGGERS:
        logger = logging.getLogger(name)
        logger.handlers[:] = [handler]
        logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
        logger.propagate = False


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_polynomial(path: str) -> BiLaurent:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as err:
        raise ParseError(f"cannot read {path}: {err}") from err
    return BiLaurent.from_json(doc)


def _config(args: argparse.Namespace) -> RunConfig:
    return load_run_config(
        {
            CONF_SEED: getattr(args, "seed", None),
            CONF_TOL: getattr(args, "tol", None),
            CONF_P_MAX: getattr(args, "p_max", None),
            CONF_FORMAT: getattr(args, "format", None),
            CONF_TRIALS: getattr(args, "trials", None),
        }
    )


def cmd_beta_curve(args: argparse.Namespace, config: RunConfig) -> int:
    if args.n < 1:
        raise BadIndex(f"order N={args.n} < 1")
    if config.output_format == "csv":
        text = curve_csv(args.n, config.p_max)
    elif config.output_format == "svg":
        text = render_svg(args.n, config.p_max)
    else:
        text = dumps_json(curve_document(args.n, config.p_max))
    _emit(text, args.out)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, config: RunConfig) -> int:
    if args.n < 1:
        raise BadIndex(f"order N={args.n} < 1")
    desc = classify(args.n, CellPoint(parse_fraction(args.p), parse_fraction(args.alpha)))
    _emit(dumps_json(desc.to_json()), args.out)
    return EXIT_OK


def cmd_cells(args: argparse.Namespace, config: RunConfig) -> int:
    cells = enumerate_cells(args.n, config.p_max)
    if config.output_format == "svg":
        text = render_svg(args.n, config.p_max, cells)
    else:
        text = dumps_json(cells_document(args.n, config.p_max, cells))
    _emit(text, args.out)
    return EXIT_OK


def _decomposition(u: BiLaurent, n: int, mode: str) -> dict[str, Any]:
    if mode == "cellular":
        form = cellular_decompose(u, n)
        residual = cellular_recompose(form) - u
        checks = form.checks()
    else:
        form = almansi_decompose(u, n)
        if mode == "alternative":
            form = almansi_to_alternative(form)
            residual = alternative_recompose(form) - u
        else:
            residual = almansi_recompose(form) - u
        checks = [{"harmonic": is_harmonic(p), "piece": j} for j, p in enumerate(form.pieces)]
    return {
        "decomposition": form.to_json(),
        "mode": mode,
        "verification": {
            "checks": checks,
            "recomposition_residual": residual.to_json(),
            "residual_zero": residual.is_zero(),
        },
    }


def cmd_decompose(args: argparse.Namespace, config: RunConfig) -> int:
    u = _read_polynomial(args.input)
    doc = _decomposition(u, args.n, args.mode)
    _emit(dumps_json(doc), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    report = VerifyRunner(config).run(args.suite)
    _emit(dumps_json(report.to_json()), args.out)
    return EXIT_OK if report.passed else EXIT_PROPERTY_FAILURE


def cmd_kernel_norm(args: argparse.Namespace, config: RunConfig) -> int:
    verdict = kernel_norm(
        KernelSpec(args.j, args.n),
        parse_fraction(args.p),
        parse_fraction(args.alpha),
        tol=config.tol,
        term_cap=config.term_cap,
    )
    _emit(dumps_json(verdict.to_json()), args.out)
    return EXIT_OK


def cmd_annulus_scan(args: argparse.Namespace, config: RunConfig) -> int:
    if args.k_max < SCAN_K_MIN + 1:
        raise BadIndex(f"k_max={args.k_max} must exceed {SCAN_K_MIN}")
    scan = annulus_scan(args.n, parse_fraction(args.p), range(SCAN_K_MIN, args.k_max + 1))
    _emit(scan_csv(scan), args.out)
    return EXIT_OK


def cmd_extension_check(args: argparse.Namespace, config: RunConfig) -> int:
    u = _read_polynomial(args.input)
    radii = tuple(parse_fraction(r) for r in args.radii.split(","))[: args.n]
    frame = LagrangeFrame(radii)
    polys = lagrange_polys(frame)
    rng = make_rng(config.seed)
    rows = []
    for _ in range(EXTENSION_POINTS):
        z = random_point(rng, 0.99 * float(frame.radii[0]))
        got = lagrange_reconstruct(u, args.n, frame, z, polys=polys)
        want = complex(u.evaluate(z))
        rows.append({"error": abs(got - want), "z": [z.real, z.imag]})
    worst = max(r["error"] for r in rows)
    doc = {
        "max_error": worst,
        "passed": worst <= EXTENSION_TOL,
        "points": rows,
        "radii": [str(r) for r in frame.radii],
    }
    _emit(dumps_json(doc), args.out)
    return EXIT_OK if doc["passed"] else EXIT_PROPERTY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--format", choices=OUTPUT_FORMATS)
    common.add_argument("--tol", type=float)
    common.add_argument("--seed", type=int)
    common.add_argument("--trials", type=int)
    common.add_argument("--p-max", dest="p_max")

    parser = argparse.ArgumentParser(
        prog="polyharm", description="Polyharmonic calculus and integrability checks."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("beta-curve", parents=[common], help="curves beta, b_j and a_j")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_beta_curve)

    p = sub.add_parser("classify", parents=[common], help="classify a point (p, alpha)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("cells", parents=[common], help="cell tiling of the admissible strip")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_cells)

    p = sub.add_parser("decompose", parents=[common], help="decompose a polynomial")
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=DECOMPOSE_MODES, default="almansi")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=SUITES)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("kernel-norm", parents=[common], help="norm verdict for U_{j,N}")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=cmd_kernel_norm)

    p = sub.add_parser("annulus-scan", parents=[common], help="annulus asymptotics of U_{N,N}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--k-max", dest="k_max", type=int, default=TRACE_K_END)
    p.set_defaults(handler=cmd_annulus_scan)

    p = sub.add_parser("extension-check", parents=[common], help="Lagrange reconstruction check")
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--radii", default=DEFAULT_FRAME)
    p.set_defaults(handler=cmd_extension_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_attach_negative_values(argv))
    setup_logging(args.verbose)
    _LOGGER.info(STARTUP_MESSAGE)
    try:
        config = _config(args)
        return args.handler(args, config)
    except PolyharmError as err:
        _LOGGER.debug(f"main (ERROR): {type(err).__name__}: {err}")
        sys.stderr.write(f"polyharm: {type(err).__name__}: {err}\n")
        return err.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
