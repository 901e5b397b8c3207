"""
Command-line interface: ``h10-iwasawa <command> [options]``.

Commands:
    check     H10-gen hypotheses for (E, p, Q(sqrt(d))) and the excluded line
    sprimes   Kriz-Li auxiliary primes below an exclusive bound
    density   Density of S (kriz-li) or of good twists (isogeny3)
    series    Power-series utilities: line, solve, specialize, invariants, excluded
    scan      Verdicts over a range of negative twists
    selmer    Selmer-ratio chain of an attested 3-isogeny on one twist
    fetch     Copy a record from LMFDB into the cache

Exit codes:
    0  satisfied, or the command completed
    2  completed, but a hypothesis failed or could not be established
    1  load, validation, network or input error

``--format json`` prints the same information as the table plus machine-readable
details; exit codes do not depend on the format.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from . import __version__
from .config import CliConfig
from .constants import (
    DEFAULT_SERIES_PRIME,
    EXIT_ERROR,
    EXIT_NOT_ESTABLISHED,
    EXIT_SATISFIED,
    FORMAT_JSON,
    MOD2_IMAGES,
    VALID_FORMATS,
)
from .criteria import (
    HypothesisStatus,
    h10_check,
    is_catalogued,
    isogeny3_density,
    kriz_li_density,
    kriz_li_density_formula,
    kriz_li_preconditions,
    kriz_li_twist_family,
    negative_squarefree_range,
    s_primes,
    scan,
    twist_selmer_report,
)
from .exceptions import (
    H10IwasawaError,
    InputValidationError,
    OfflineError,
    RecordNotFoundError,
    UnsupportedGaloisImageError,
)
from .ingest import LmfdbTransport, RecordStore, dump_record, fetch_remote, load_record
from .quad import ImagQuadField, field_from_discriminant, make_field
from .series import (
    BivariateSeries,
    excluded_line,
    implicit_solve,
    line_invariants,
    line_series,
    mu_lambda,
    specialize_line,
)
from .utils import configure_logging, format_user_error, format_user_warning, validate_input_path

logger = logging.getLogger(__name__)

__all__ = ["main", "build_parser"]

Handler = Callable[[argparse.Namespace, CliConfig], int]


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_ERROR; argparse's own 2 means not-established here."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# =============================================================================
# ARGUMENT HELPERS
# =============================================================================


def _scalar(text: str) -> Union[int, Fraction]:
    """Line coordinate: an integer or a p-integral rational such as 1/2."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e
    return value.numerator if value.denominator == 1 else value


def _field(value: int) -> ImagQuadField:
    """K0 from a fundamental discriminant (-7, -8, -4) or a negative d (-1, -2)."""
    try:
        return field_from_discriminant(value)
    except InputValidationError:
        return make_field(value)


def _load_series(path: str) -> BivariateSeries:
    source = validate_input_path(path, operation="read series")
    try:
        payload = json.loads(source.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InputValidationError(
            f"Cannot read series JSON from {source}: {e}", details={"path": str(source)}
        ) from e
    if not isinstance(payload, dict):
        raise InputValidationError("Series JSON must be an object", details={"path": str(source)})
    return BivariateSeries.from_json(payload)


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    config = CliConfig.from_env().with_overrides(
        precision=args.precision,
        cap=args.cap,
        cache_dir=args.cache_dir,
        offline=True if args.offline else None,
        output_format=args.format,
        jobs=args.jobs,
        record_dirs=args.records,
    )
    config.validate()
    return config


# =============================================================================
# OUTPUT
# =============================================================================


def _emit(config: CliConfig, payload: Dict[str, Any], text: str) -> None:
    if config.output_format == FORMAT_JSON:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _hypothesis_table(rows: Sequence[HypothesisStatus]) -> str:
    frame = pd.DataFrame.from_records(
        [row.model_dump() for row in rows], columns=["name", "status", "evidence"]
    )
    return frame.to_string(index=False)


def _key_values(pairs: Sequence[Tuple[str, Any]]) -> str:
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{key.ljust(width)}  {value}" for key, value in pairs)


def _density_text(value: Fraction) -> str:
    return f"{value} ≈ {float(value):.6f}"


def _density_payload(value: Fraction) -> Dict[str, Any]:
    return {"density": str(value), "decimal": round(float(value), 6)}


# =============================================================================
# COMMANDS
# =============================================================================


def cmd_check(args: argparse.Namespace, config: CliConfig) -> int:
    store = RecordStore.from_config(config)
    record = load_record(args.curve, store)
    twist = load_record(args.twist, store) if args.twist else store.find_twist(record, args.d)
    series = _load_series(args.series) if args.series else None
    verdict = h10_check(record, args.p, args.d, twist_record=twist, series=series)

    summary: List[Tuple[str, Any]] = [
        ("curve", record.label),
        ("twist", twist.label if twist is not None else "no record"),
        ("H10-gen", verdict.h10gen),
    ]
    if verdict.excluded_line is not None:
        summary.append(("excluded line", verdict.excluded_line))
    elif verdict.excluded_line_note:
        summary.append(("excluded line", verdict.excluded_line_note))
    if verdict.lambda_cyc_K is not None:
        summary.append(("lambda over K_cyc", verdict.lambda_cyc_K))

    payload = verdict.model_dump(mode="json")
    payload["twist_label"] = twist.label if twist is not None else None
    _emit(config, payload, f"{_hypothesis_table(verdict.hypotheses)}\n\n{_key_values(summary)}")
    return EXIT_SATISFIED if verdict.satisfied else EXIT_NOT_ESTABLISHED


def cmd_sprimes(args: argparse.Namespace, config: CliConfig) -> int:
    store = RecordStore.from_config(config)
    record = load_record(args.curve, store)
    K0 = _field(args.k0)
    preconditions = kriz_li_preconditions(record, K0, args.p)
    payload: Dict[str, Any] = {
        "curve": record.label,
        "K0": K0.to_dict(),
        "p": args.p,
        "bound": args.bound,
        "strict": args.strict,
        "catalogued": is_catalogued(record, K0, args.p),
        "preconditions": [row.model_dump() for row in preconditions],
        "primes": None,
    }

    if not all(row.passed for row in preconditions):
        _emit(config, payload, _hypothesis_table(preconditions))
        print(
            format_user_warning(
                f"Kriz-Li preconditions for {record.label}, {K0}, p = {args.p} not established",
                "Attest the missing fields in the curve record",
            ),
            file=sys.stderr,
        )
        return EXIT_NOT_ESTABLISHED

    primes = s_primes(record, K0, args.p, args.bound, include_p=args.strict)
    payload["primes"] = primes
    text = " ".join(str(ell) for ell in primes)
    if args.family:
        family = kriz_li_twist_family(record, K0, args.p, args.bound, include_p=args.strict)
        payload["twist_family"] = [{"m": m, "d": d} for m, d in family]
        text += "\n" + "\n".join(f"m = {m}, d = {d}" for m, d in family)
    _emit(config, payload, text)
    return EXIT_SATISFIED


def cmd_density(args: argparse.Namespace, config: CliConfig) -> int:
    store = RecordStore.from_config(config) if args.curve else None
    payload: Dict[str, Any] = {"mode": args.mode}
    lines: List[str] = []

    if args.mode == "isogeny3":
        if store is not None:
            record = load_record(args.curve, store)
            value = isogeny3_density(record.conductor, record.isogeny is not None)
            payload["N"] = record.conductor
        elif args.N is not None:
            value = isogeny3_density(args.N)
            payload["N"] = args.N
        else:
            raise InputValidationError("isogeny3 needs --N or --curve")
    elif store is not None:
        if args.k0 is None:
            raise InputValidationError("kriz-li with --curve needs --k0")
        record = load_record(args.curve, store)
        K0 = _field(args.k0)
        value = kriz_li_density(record, K0)
        payload.update(curve=record.label, K0=K0.to_dict())
        if args.p is not None and args.bound is not None:
            family = kriz_li_twist_family(record, K0, args.p, args.bound)
            payload["twist_family_size"] = len(family)
            lines.append(f"twists with |d| < {args.bound} inheriting H10-gen: {len(family)}")
    else:
        if args.image is None or args.k is None:
            raise InputValidationError("kriz-li needs --image and --k, or --curve and --k0")
        value = kriz_li_density_formula(args.image, args.k, gaussian=args.gaussian)
        payload.update(image=args.image, k=args.k, gaussian=args.gaussian)

    payload.update(_density_payload(value))
    _emit(config, payload, "\n".join([_density_text(value), *lines]))
    return EXIT_SATISFIED


def cmd_series_line(args: argparse.Namespace, config: CliConfig) -> int:
    prime = args.p or DEFAULT_SERIES_PRIME
    f = line_series(args.a, args.b, config.cap, prime=prime, precision=config.precision)
    _emit(config, f.to_json(), str(f))
    return EXIT_SATISFIED


def cmd_series_solve(args: argparse.Namespace, config: CliConfig) -> int:
    prime = args.p or DEFAULT_SERIES_PRIME
    g = implicit_solve(args.a, args.b, config.cap, prime=prime, precision=config.precision)
    _emit(config, g.to_json(), g.format("Y"))
    return EXIT_SATISFIED


def cmd_series_specialize(args: argparse.Namespace, config: CliConfig) -> int:
    h = specialize_line(_load_series(args.F), args.a, args.b)
    _emit(config, h.to_json(), h.format("T"))
    return EXIT_SATISFIED


def cmd_series_invariants(args: argparse.Namespace, config: CliConfig) -> int:
    F = _load_series(args.F)
    if args.all_lines:
        table = line_invariants(F)
        rows = [
            {
                "line": str(line),
                "mu": None if inv is None else inv.mu,
                "lambda": None if inv is None else inv.lambda_,
                "certified": None if inv is None else inv.certified,
            }
            for line, inv in table
        ]
        uncertified = any(inv is not None and not inv.certified for _, inv in table)
        frame = pd.DataFrame.from_records(rows, columns=["line", "mu", "lambda", "certified"])
        _emit(config, {"p": F.prime, "lines": rows}, frame.to_string(index=False))
    else:
        if args.a is None or args.b is None:
            raise InputValidationError("invariants needs --a and --b, or --all-lines")
        inv = mu_lambda(specialize_line(F, args.a, args.b))
        uncertified = not inv.certified
        _emit(config, inv.to_dict(), str(inv))
    if uncertified:
        print(
            format_user_warning(
                "some invariants are read at the degree cap and are not certified",
                "Provide the series to a higher cap",
            ),
            file=sys.stderr,
        )
    return EXIT_SATISFIED


def cmd_series_excluded(args: argparse.Namespace, config: CliConfig) -> int:
    F = _load_series(args.F)
    line = excluded_line(F)
    _emit(config, {"p": F.prime, "excluded_line": str(line)}, str(line))
    return EXIT_SATISFIED


def _scan_ds(args: argparse.Namespace) -> List[int]:
    if args.d:
        return list(args.d)
    if args.d_min is None or args.d_max is None:
        raise InputValidationError("scan needs --d values or both --d-min and --d-max")
    return negative_squarefree_range(args.d_min, args.d_max)


def cmd_scan(args: argparse.Namespace, config: CliConfig) -> int:
    store = RecordStore.from_config(config)
    record = load_record(args.curve, store)
    report = scan(
        record, args.p, _scan_ds(args), store=store, jobs=config.jobs, isogeny_mode=args.isogeny
    )
    summary = report.summary()
    text = report.to_dataframe().to_string(index=False) + "\n\n" + _key_values(
        [(key, "-" if value is None else value) for key, value in summary.items()]
    )
    _emit(config, report.to_dict(), text)
    return EXIT_SATISFIED


def cmd_selmer(args: argparse.Namespace, config: CliConfig) -> int:
    store = RecordStore.from_config(config)
    record = load_record(args.curve, store)
    parity = args.parity
    if parity is None:
        twist = store.find_twist(record, args.d)
        parity = twist.sel3_dim if twist is not None else None
    report = twist_selmer_report(record, args.d, parity=parity)

    ratios = pd.DataFrame.from_records(
        [
            {
                "place": row.place,
                "ratio": row.value if row.value is not None else " or ".join(row.candidates or []),
                "ord3": row.ord3,
            }
            for row in report.ratios
        ],
        columns=["place", "ratio", "ord3"],
    )
    pairs: List[Tuple[str, Any]] = [
        ("curve", report.curve),
        ("d", report.d),
        ("minimal model", report.minimal_model),
        ("conductor", report.conductor),
        ("a_3", report.a3 if report.a3 is not None else "bad reduction"),
        ("good ordinary at 3", report.good_ordinary_at_3),
        ("3 splits in Q(sqrt(d))", report.three_splits),
        ("global ratio candidates", ", ".join(report.global_candidates)),
        ("global ratio", report.global_ratio or "unresolved"),
        ("t", "unresolved" if report.t is None else report.t),
        ("in T_0", report.in_T0),
        ("in T_0'", report.in_T0prime),
    ]
    if report.note:
        pairs.append(("note", report.note))
    _emit(
        config,
        report.model_dump(mode="json"),
        f"{_key_values(pairs)}\n\n{ratios.to_string(index=False)}",
    )
    return EXIT_SATISFIED if report.t is not None else EXIT_NOT_ESTABLISHED


def cmd_fetch(args: argparse.Namespace, config: CliConfig) -> int:
    store = RecordStore.from_config(config)
    transport = store.transport or LmfdbTransport(base_url=config.base_url)
    record = fetch_remote(args.curve, transport, store.cache, offline=config.offline)
    path = store.cache.path_for(record.label)
    payload = {"label": record.label, "path": str(path), "record": json.loads(dump_record(record))}
    _emit(config, payload, f"{record.label} -> {path}")
    return EXIT_SATISFIED


# =============================================================================
# PARSER
# =============================================================================


def _common_options() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    group = common.add_argument_group("common options")
    group.add_argument("--precision", type=int, help="p-adic precision N (default 20)")
    group.add_argument("--cap", type=int, help="series degree cap D (default 12)")
    group.add_argument("--cache-dir", type=Path, help="record cache directory")
    group.add_argument("--offline", action="store_true", help="never touch the network")
    group.add_argument("--format", choices=VALID_FORMATS, help="output format (default table)")
    group.add_argument("--jobs", type=int, help="worker threads for scans")
    group.add_argument(
        "--records", type=Path, action="append", metavar="DIR",
        help="extra directory of <label>.json records (repeatable)",
    )
    group.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return common


def _add_command(
    subparsers: Any, name: str, handler: Handler, common: argparse.ArgumentParser, help: str
) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, parents=[common], help=help, description=help)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="h10-iwasawa",
        description="Iwasawa-theoretic criteria for Hilbert's tenth problem in Z_p-extensions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    check = _add_command(commands, "check", cmd_check, common, "check H10-gen for (E, p, d)")
    check.add_argument("--curve", required=True, help="label or path of E's record")
    check.add_argument("--p", type=int, required=True, help="odd prime p")
    check.add_argument("--d", type=int, required=True, help="negative squarefree d")
    check.add_argument("--twist", help="label or path of E^(d)'s record (default: search)")
    check.add_argument("--series", help="bivariate series JSON naming the excluded line")

    sprimes = _add_command(
        commands, "sprimes", cmd_sprimes, common, "Kriz-Li primes l < BOUND (exclusive)"
    )
    sprimes.add_argument("--curve", required=True)
    sprimes.add_argument("--k0", type=int, required=True, help="discriminant of K0, e.g. -7")
    sprimes.add_argument("--p", type=int, required=True)
    sprimes.add_argument("--bound", type=int, required=True, help="exclusive upper bound")
    sprimes.add_argument("--strict", action="store_true", help="also require l square mod p")
    sprimes.add_argument("--family", action="store_true", help="list the twist family too")

    density = _add_command(commands, "density", cmd_density, common, "density formulas")
    density.add_argument("mode", choices=("kriz-li", "isogeny3"))
    density.add_argument("--image", choices=MOD2_IMAGES)
    density.add_argument("--k", type=int, help="number of primes dividing N")
    density.add_argument("--gaussian", action="store_true", help="K0 = Q(i)")
    density.add_argument("--curve")
    density.add_argument("--k0", type=int)
    density.add_argument("--N", type=int, help="squarefree conductor (isogeny3)")
    density.add_argument("--p", type=int, help="with --bound: count the twist family")
    density.add_argument("--bound", type=int)

    series = commands.add_parser("series", help="power-series utilities")
    series_commands = series.add_subparsers(dest="series_command", required=True)
    line = _add_command(series_commands, "line", cmd_series_line, common, "emit f_{a,b}")
    solve = _add_command(series_commands, "solve", cmd_series_solve, common, "emit g(Y)")
    for sub in (line, solve):
        sub.add_argument("--a", type=_scalar, required=True)
        sub.add_argument("--b", type=_scalar, required=True)
        sub.add_argument("--p", type=int, help=f"prime (default {DEFAULT_SERIES_PRIME})")
    specialize = _add_command(
        series_commands, "specialize", cmd_series_specialize, common, "emit h_{a,b}"
    )
    specialize.add_argument("--F", required=True, help="bivariate series JSON")
    specialize.add_argument("--a", type=_scalar, required=True)
    specialize.add_argument("--b", type=_scalar, required=True)
    invariants = _add_command(
        series_commands, "invariants", cmd_series_invariants, common, "(mu, lambda) of h_{a,b}"
    )
    invariants.add_argument("--F", required=True)
    invariants.add_argument("--a", type=_scalar)
    invariants.add_argument("--b", type=_scalar)
    invariants.add_argument("--all-lines", action="store_true", help="every line of P^1(F_p)")
    excluded = _add_command(
        series_commands, "excluded", cmd_series_excluded, common, "the excluded line"
    )
    excluded.add_argument("--F", required=True)

    scan_parser = _add_command(commands, "scan", cmd_scan, common, "verdicts over many twists")
    scan_parser.add_argument("--curve", required=True)
    scan_parser.add_argument("--p", type=int, required=True)
    scan_parser.add_argument("--d", type=int, nargs="+", help="explicit twist parameters")
    scan_parser.add_argument("--d-min", type=int)
    scan_parser.add_argument("--d-max", type=int)
    scan_parser.add_argument("--isogeny", action="store_true", help="also compute t(phi_d)")

    selmer = _add_command(
        commands, "selmer", cmd_selmer, common, "Selmer-ratio chain of a 3-isogeny twist"
    )
    selmer.add_argument("--curve", required=True)
    selmer.add_argument("--d", type=int, required=True)
    selmer.add_argument("--parity", type=int, help="dim Sel_3(E^(d)) (default: twist record)")

    fetch = _add_command(commands, "fetch", cmd_fetch, common, "fetch a record into the cache")
    fetch.add_argument("--curve", required=True)

    return parser


def _suggestion(error: H10IwasawaError) -> Optional[str]:
    if isinstance(error, OfflineError):
        return "Run `h10-iwasawa fetch --curve LABEL` while online"
    if isinstance(error, RecordNotFoundError):
        return "Pass --records DIR or a path to a record file"
    if isinstance(error, UnsupportedGaloisImageError):
        return "The density formula covers the images Z/3 and S3 only"
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = _config_from_args(args)
        return args.handler(args, config)
    except H10IwasawaError as e:
        logger.debug(f"{args.command} failed: {e.details}")
        print(format_user_error(e.message, _suggestion(e)), file=sys.stderr)
        return EXIT_ERROR
    except ValueError as e:
        print(format_user_error(str(e)), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
