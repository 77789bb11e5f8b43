"""
Front-end de línea de órdenes.

Lee entradas JSON, despacha a los módulos de la librería y emite JSON o
tablas. Códigos de salida: 0 éxito, 1 error de dominio (con objeto de
error estructurado en stderr), 2 error de uso.
"""

import argparse
import asyncio
import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger
from rich.console import Console

from .. import __version__
from ..algebra.gring import parse_class
from ..algebra.powstruct import chi_exp_integral, power
from ..algebra.series import TruncSeries
from ..core.config import settings
from ..core.errors import MotivicError, NotEnumerable, TooLarge
from ..core.logger import setup_logging
from ..measures.genfun import BUILTIN_RESOLUTIONS, multiplicity_vectors, pgen, pgen_euler
from ..measures.strata import builtin_strata, ff_point_count, jet_class, measure
from ..measures.worked_examples import EXAMPLES, run_example
from ..singularities.curves import corpus, germ_invariants, mult_sequence, p_direct
from ..singularities.lifting import lift_arc, rotate_coords
from ..verification.coordinator import ALL, build_coordinator
from .render import emit, to_json
from .schemas import (
    CurveGermModel,
    JetStratumModel,
    LiftInputModel,
    PartitionModel,
    ResolutionModel,
    TruncSeriesModel,
    encode_class,
    encode_lift,
    encode_resolution,
    encode_series,
    load,
    poly_from,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

Result = Tuple[int, str, Dict[str, Any]]


class UsageError(Exception):
    """Error de uso atribuible a un flag concreto."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _read_json(path: str, flag: str) -> Any:
    file = Path(path)
    if not file.is_file():
        raise UsageError(flag, f"file not found: {path}")
    try:
        return json.loads(file.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise UsageError(flag, f"malformed JSON in {path}: {e}")


def _pick(table: Dict[str, Any], name: str, flag: str) -> Any:
    if name not in table:
        raise UsageError(flag, f"unknown name {name!r}; available: {sorted(table)}")
    return table[name]


def _series_payload(series: TruncSeries) -> Dict[str, Any]:
    return {"series": encode_series(series), "display": [str(c) for _, c in series.items()]}


# --- subcomandos --------------------------------------------------------


def cmd_invariants(args: argparse.Namespace) -> Result:
    if args.germ:
        germ = load(CurveGermModel, _read_json(args.germ, "--germ")).to_domain()
        equation = None
    else:
        entry = _pick(corpus(), args.corpus, "--corpus")
        germ, equation = entry.germ, entry.equation
    if args.equation:
        equation = poly_from(args.equation)

    inv = germ_invariants(germ)
    payload: Dict[str, Any] = {
        "v": inv.v,
        "k": inv.k,
        "delta": inv.delta,
        "mu": inv.milnor,
        "P": inv.p,
        "R": str(inv.correspondence),
        "arc_weight": str(inv.arc_weight),
        "mult_sequences": [mult_sequence(b) for b in germ.branches],
    }
    if equation is not None:
        payload["P_direct"] = p_direct(germ, equation)
    return EXIT_OK, "invariants", payload


def _ff_checks(stratum) -> List[Dict[str, Any]]:
    expected_class = jet_class(stratum)
    checks = []
    for q in settings.field_checks:
        if q ** len(stratum.constrained()) > settings.ff_enumeration_limit:
            logger.warning(f"measure: skipping F_{q} count, above enumeration limit")
            checks.append({"q": q, "skipped": "enumeration limit"})
            continue
        try:
            count = ff_point_count(stratum, q)
        except (TooLarge, NotEnumerable) as e:
            logger.warning(f"measure: skipping F_{q} count: {e.message}")
            checks.append({"q": q, "skipped": type(e).__name__})
            continue
        expected = expected_class.specialize(q)
        checks.append({"q": q, "count": count, "expected": str(expected), "passed": count == expected})
    return checks


def cmd_measure(args: argparse.Namespace) -> Result:
    if args.stratum:
        stratum = load(JetStratumModel, _read_json(args.stratum, "--stratum")).to_domain()
    else:
        stratum = _pick(builtin_strata(), args.builtin, "--builtin")

    value = measure(stratum)
    checks = _ff_checks(stratum)
    payload = {
        "ambient": str(stratum.ambient),
        "class": encode_class(value),
        "measure": str(value),
        "jet_class": str(jet_class(stratum)),
        "checks": checks,
    }
    failed = any(c.get("passed") is False for c in checks)
    return (EXIT_DOMAIN if failed else EXIT_OK), "measure", payload


def cmd_power(args: argparse.Namespace) -> Result:
    order = args.order or settings.default_precision
    if args.partition:
        data = _read_json(args.partition, "--partition")
        partition = load(PartitionModel, {"entries": data}).to_domain()
        return EXIT_OK, "exp-integral", _series_payload(chi_exp_integral(partition, order))

    if args.exponent is None:
        raise UsageError("--exponent", "required together with --series")
    series = load(TruncSeriesModel, _read_json(args.series, "--series")).to_domain()
    result = power(series, parse_class(args.exponent), order)
    return EXIT_OK, "power", _series_payload(result)


def cmd_lift(args: argparse.Namespace) -> Result:
    data = load(LiftInputModel, _read_json(args.input, "--input"))
    f = poly_from(data.f)
    g = data.branch.to_domain()
    shift = 0
    if args.rotate:
        rotation = rotate_coords(f, g)
        f, g, shift = rotation.f, rotation.branch, rotation.shift
    report = lift_arc(f, g, args.target or data.target, strict=args.strict)
    payload = encode_lift(report)
    payload["shift"] = shift
    return EXIT_OK, "lift", payload


def _parse_param(text: str) -> Tuple[str, Any]:
    if "=" not in text:
        raise UsageError("--param", f"expected key=value, got {text!r}")
    key, value = text.split("=", 1)
    return key, int(value) if value.lstrip("-").isdigit() else value


def cmd_example(args: argparse.Namespace) -> Result:
    params = dict(_parse_param(p) for p in args.param or [])
    result = run_example(args.name, **params)
    payload = {
        "name": result.name,
        "params": result.params,
        "values": {k: str(v) for k, v in result.values.items()},
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in result.checks],
        "passed": result.passed,
    }
    return (EXIT_OK if result.passed else EXIT_DOMAIN), f"example {args.name}", payload


def cmd_pgen(args: argparse.Namespace) -> Result:
    if args.resolution:
        res = load(ResolutionModel, _read_json(args.resolution, "--resolution")).to_domain()
    else:
        res = _pick(BUILTIN_RESOLUTIONS, args.builtin, "--builtin")()
    series = pgen_euler(res, args.order) if args.euler else pgen(res, args.order)
    payload = _series_payload(series)
    payload["exponent_vectors"] = [list(v) for v in multiplicity_vectors(res)]
    payload["resolution"] = encode_resolution(res)
    return EXIT_OK, "pgen", payload


def cmd_verify(args: argparse.Namespace) -> Result:
    coordinator = build_coordinator(seed=args.seed, field_checks=args.field_check)
    reports = asyncio.run(coordinator.run(args.suite or [ALL]))
    payload = {"passed": all(r.passed for r in reports), "suites": [r.to_dict() for r in reports]}
    return (EXIT_OK if payload["passed"] else EXIT_DOMAIN), "verify", payload


# --- parser -----------------------------------------------------------------


def _at_least(minimum: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_at_least(4), default=None, help="default truncation order")
    common.add_argument("--format", choices=("json", "table"), default=None, help="output format")
    common.add_argument(
        "--field-check",
        type=_at_least(2),
        action="append",
        default=None,
        help="prime for specialization oracles (repeatable)",
    )
    common.add_argument("--seed", type=int, default=None, help="seed of randomized suites")
    common.add_argument(
        "--log-level",
        choices=("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"),
        default=None,
        help="stderr log level",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="motivic",
        description="Exact motivic measures, power structures and plane-curve invariants.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="invariants of a curve germ")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--germ", help="CurveGerm JSON file")
    source.add_argument("--corpus", help="name of a built-in germ")
    p.add_argument("--equation", help="defining equation, e.g. 'y^2 - x^3'")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("measure", parents=[common], help="measure of a jet stratum")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--stratum", help="JetStratum JSON file")
    source.add_argument("--builtin", help="name of a built-in stratum")
    p.set_defaults(handler=cmd_measure)

    p = sub.add_parser("power", parents=[common], help="power structure A(t)^m")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--series", help="TruncSeries JSON file")
    source.add_argument("--partition", help="MeasuredPartition JSON file")
    p.add_argument("--exponent", help="exponent in L, e.g. 'L^2 - 1'")
    p.add_argument("--order", type=_at_least(0), default=None, help="truncation order")
    p.set_defaults(handler=cmd_power)

    p = sub.add_parser("lift", parents=[common], help="Newton lifting of an approximate arc")
    p.add_argument("--input", required=True, help="JSON file {f, branch, target}")
    p.add_argument("--target", type=_at_least(1), default=None, help="override the target order")
    p.add_argument("--strict", action="store_true", help="also require n > 4Q")
    p.add_argument("--rotate", action="store_true", help="search a shear before lifting")
    p.set_defaults(handler=cmd_lift)

    p = sub.add_parser("example", parents=[common], help="worked examples")
    p.add_argument("--name", required=True, choices=sorted(EXAMPLES))
    p.add_argument("--param", action="append", help="example parameter key=value (repeatable)")
    p.set_defaults(handler=cmd_example)

    p = sub.add_parser("pgen", parents=[common], help="generating series from resolution data")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--resolution", help="ResolutionData JSON file")
    source.add_argument("--builtin", help="name of a built-in resolution")
    p.add_argument("--order", type=_at_least(0), default=6, help="total truncation order")
    p.add_argument("--euler", action="store_true", help="Euler-characteristic version")
    p.set_defaults(handler=cmd_pgen)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", help="suite name or 'all' (repeatable)")
    p.set_defaults(handler=cmd_verify)

    return parser


@contextmanager
def _scoped_settings(args: argparse.Namespace) -> Iterator[None]:
    """Aplica los flags del subcomando sobre settings y los deshace al salir."""
    overrides: Dict[str, Any] = {}
    if args.precision is not None:
        overrides["default_precision"] = args.precision
    if args.field_check:
        overrides["field_checks"] = list(args.field_check)
    previous = {key: getattr(settings, key) for key in overrides}
    for key, value in overrides.items():
        setattr(settings, key, value)
    try:
        yield
    finally:
        for key, value in previous.items():
            setattr(settings, key, value)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Punto de entrada de la CLI.

    Los resultados van a stdout; los errores, en texto o JSON, a stderr.

    Args:
        argv: Argumentos sin el nombre del programa (por defecto sys.argv)

    Returns:
        Código de salida
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(args.log_level)
    console = Console(soft_wrap=True)
    errors = Console(stderr=True, soft_wrap=True)

    with _scoped_settings(args):
        fmt = args.format or settings.output_format
        try:
            code, title, payload = args.handler(args)
        except UsageError as e:
            parser.print_usage()
            errors.print(f"error: {e}", markup=False, highlight=False, style="red")
            return EXIT_USAGE
        except MotivicError as e:
            logger.error(f"{args.command} failed: {e.message}")
            errors.print(to_json({"error": e.to_dict()}), markup=False, highlight=False, emoji=False)
            return EXIT_DOMAIN

        emit(console, fmt, title, payload)
    return code
