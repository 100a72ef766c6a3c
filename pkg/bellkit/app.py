"""Main app module running the bellkit command line."""
import argparse
import csv
import io
import logging
import sys

from bellkit import __version__, bell, congruence
from bellkit.arithfn import builtin_driver, list_drivers
from bellkit.data.file_parser import load_sequence_file
from bellkit.data.records import (
    DriverInfo,
    OutputRecord,
    PolynomialRecord,
    dump_json,
)
from bellkit.data.utils import (
    format_rational,
    format_value,
    parse_integer,
    parse_rational,
)
from bellkit.environment import COEFFICIENT_PATHS, EXIT_CODES, FAMILY_MAP
from bellkit.errors import (
    ConfigurationError,
    DomainError,
    DriverError,
    DriverFileError,
    PathMismatchError,
)
from bellkit.polyfam import FamilySpec, family_poly, family_table, family_via_bell
from bellkit.rings import FLOATS, RATIONALS

logger = logging.getLogger(__name__)

# Driver parameters accepted as --<name> options
DRIVER_PARAMS = ("k", "q", "c", "file")


def _write(text):
    sys.stdout.write(text)


def _write_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _write(buffer.getvalue())


def _render_param(value):
    return value if isinstance(value, str) else format_rational(value)


def _driver_from_args(args):
    """Build driver named by --driver with its parameters from the options."""
    if not args.driver:
        raise DomainError("--driver is required")
    info = {d["name"]: d for d in list_drivers()}.get(args.driver)
    if info is None:
        return builtin_driver(args.driver)
    params = []
    for name in info["params"]:
        value = getattr(args, name, None)
        if value is None:
            raise DomainError(f"driver {args.driver} needs --{name}")
        params.append(value)
    return builtin_driver(args.driver, params)


def _driver_params(g):
    info = {d["name"]: d for d in list_drivers()}[g.name]
    return {k: _render_param(v) for k, v in zip(info["params"], g.params)}


def _emit_sequence(args, record):
    if args.format == "csv":
        rows = [(record.start + i, v) for i, v in enumerate(record.values)]
        _write_csv(("index", "value"), rows)
    else:
        _write(dump_json(record))


def cmd_exponents(args):
    """Write Bell exponents beta(1..limit) of a driver."""
    if args.limit < 1:
        raise DomainError(f"--limit must be >= 1 for exponents, got {args.limit}")
    g = _driver_from_args(args)
    ring = RATIONALS if g.exact else FLOATS
    beta = bell.bell_exponents(g, args.limit, ring)
    record = OutputRecord(
        command="exponents",
        driver=g.name,
        params=_driver_params(g),
        limit=args.limit,
        start=1,
        values=[format_value(v) for v in beta.values],
    )
    _emit_sequence(args, record)
    return EXIT_CODES["ok"]


def cmd_coeffs(args):
    """Write coefficients a(0..limit) of a driver's Bell transform."""
    if args.limit < 0:
        raise DomainError(f"--limit must be >= 0 for coefficients, got {args.limit}")
    g = _driver_from_args(args)
    ring = RATIONALS if g.exact else FLOATS
    if args.check_all_paths:
        a = bell.check_all_paths(g, args.limit, ring)
        path = "all"
    else:
        a = bell.transform(g, args.limit, args.path, ring)
        path = args.path
    record = OutputRecord(
        command="coeffs",
        driver=g.name,
        params=_driver_params(g),
        path=path,
        limit=args.limit,
        start=0,
        values=[format_value(v) for v in a.values],
    )
    _emit_sequence(args, record)
    return EXIT_CODES["ok"]


def _preset_params(args):
    if args.preset == "colored":
        return {"k": parse_integer(args.k, 1)} if args.k is not None else {}
    if args.preset == "cyclotomic":
        return {"q": parse_integer(args.q, 1)} if args.q is not None else {}
    return {}


def cmd_verify(args):
    """Run a congruence or vanishing sweep and write the report."""
    p = parse_integer(args.p)
    if args.limit is not None and args.limit < 1:
        raise DomainError(f"--limit must be >= 1 for sweeps, got {args.limit}")

    if args.preset == "driver" or (args.preset is None and args.driver):
        g = _driver_from_args(args)
        preset = "driver"
        params = {"driver": g.name, **_driver_params(g)}
        a, beta = congruence.preset_sequence("driver", args.limit, driver=g)
    elif args.preset is None:
        raise DomainError("verify needs --preset or --driver")
    else:
        preset = args.preset
        raw = _preset_params(args)
        a, beta = congruence.preset_sequence(preset, args.limit, **raw)
        params = {k: str(v) for k, v in raw.items()}

    sweep = (
        congruence.verify_congruence
        if args.theorem == "congruence"
        else congruence.verify_vanishing
    )
    if beta is not None and args.theorem == "congruence":
        # Exponents that cannot be reduced mod p are an input error
        congruence.check_exponent_hypothesis(beta, p)
    report = sweep(a, p, beta=beta)
    note = congruence.CYCLOTOMIC_SIGN_NOTE if preset == "cyclotomic" else None
    report = report.model_copy(
        update={"preset": preset, "params": params, "note": note}
    )

    if args.format == "csv":
        _write_csv(("n", "residue"), [(v.n, v.residue) for v in report.violations])
    else:
        _write(dump_json(report))

    if not report.hypothesis_ok:
        logger.warning("Hypothesis of the %s sweep fails for p=%d", args.theorem, p)
    return EXIT_CODES["ok"] if report.verdict else EXIT_CODES["verdict_false"]


def _family_spec(args):
    params = {}
    for name in FAMILY_MAP[args.family]["params"]:
        value = getattr(args, name)
        params[name] = parse_rational(value) if value is not None else None
    return FamilySpec(args.family, **params)


def _polynomial_record(spec, n, poly):
    return PolynomialRecord(
        family=spec.family,
        n=n,
        params={k: format_rational(v) for k, v in spec.params.items()},
        coeffs=[format_rational(c) for c in poly.coeffs] or ["0"],
    )


def cmd_poly(args):
    """Write polynomial(s) of a family."""
    spec = _family_spec(args)
    if args.table:
        upto = args.upto if args.upto is not None else args.n
        if upto is None or upto < 0:
            raise DomainError("--table needs --upto >= 0")
        polys = family_table(spec, upto, via_bell=args.via_bell)
        records = [_polynomial_record(spec, n, p) for n, p in enumerate(polys)]
    else:
        if args.n is None or args.n < 0:
            raise DomainError("--n must be >= 0")
        compute = family_via_bell if args.via_bell else family_poly
        records = [_polynomial_record(spec, args.n, compute(spec, args.n))]

    if args.format == "csv":
        rows = [(r.n, d, c) for r in records for d, c in enumerate(r.coeffs)]
        _write_csv(("n", "degree", "coeff"), rows)
    else:
        _write(dump_json(records if args.table else records[0]))
    return EXIT_CODES["ok"]


def cmd_recover(args):
    """Recover driver g(1..N) from a coefficient file a(0..N)."""
    name, values = load_sequence_file(args.file)
    g = bell.recover_driver(values)
    record = OutputRecord(
        command="recover",
        driver=name,
        limit=len(g),
        start=1,
        values=[format_rational(v) for v in g],
    )
    _emit_sequence(args, record)
    return EXIT_CODES["ok"]


def cmd_drivers(args):
    """List registered drivers."""
    drivers = [DriverInfo(**d) for d in list_drivers()]
    if args.format == "csv":
        _write_csv(("name", "params"), [(d.name, " ".join(d.params)) for d in drivers])
    else:
        _write(dump_json(drivers))
    return EXIT_CODES["ok"]


def _add_driver_options(parser, required=True):
    parser.add_argument("--driver", required=required, help="driver name")
    for name in DRIVER_PARAMS:
        parser.add_argument(f"--{name}", help=f"driver parameter {name}")


def build_parser():
    """Build argument parser of the command line."""
    parser = argparse.ArgumentParser(
        prog="bellkit",
        description="Bell transforms of arithmetic functions.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log debug messages"
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponents", parents=[common], help="Bell exponents")
    _add_driver_options(p)
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(handler=cmd_exponents)

    p = sub.add_parser("coeffs", parents=[common], help="transform coefficients")
    _add_driver_options(p)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--path", choices=COEFFICIENT_PATHS, default="recurrence")
    p.add_argument("--check-all-paths", action="store_true")
    p.set_defaults(handler=cmd_coeffs)

    p = sub.add_parser("verify", parents=[common], help="congruence sweeps")
    p.add_argument("theorem", choices=("congruence", "vanishing"))
    p.add_argument("--preset", choices=congruence.PRESETS)
    _add_driver_options(p, required=False)
    p.add_argument("--p", required=True, help="prime modulus")
    p.add_argument("--limit", type=int)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("poly", parents=[common], help="polynomial families")
    p.add_argument("--family", choices=tuple(FAMILY_MAP), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", help="Laguerre parameter")
    p.add_argument("--a", help="Charlier parameter")
    p.add_argument("--table", action="store_true")
    p.add_argument("--upto", type=int)
    p.add_argument("--via-bell", action="store_true")
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("recover", parents=[common], help="driver from coefficients")
    p.add_argument("file", help="coefficient file a(0..N)")
    p.set_defaults(handler=cmd_recover)

    p = sub.add_parser("drivers", parents=[common], help="list drivers")
    p.set_defaults(handler=cmd_drivers)
    return parser


def run(argv=None):
    """Run command line and return exit code.

    Args:
        argv (list[str]): arguments (defaults to ``sys.argv[1:]``)

    Returns:
        int: exit code (see ``EXIT_CODES``)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CODES["usage"]

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )

    try:
        return args.handler(args)
    except DriverFileError as e:
        print(f"bellkit: {e}", file=sys.stderr)
        return EXIT_CODES["io"]
    except PathMismatchError as e:
        print(f"bellkit: {e}", file=sys.stderr)
        return EXIT_CODES["mismatch"]
    except (DriverError, ConfigurationError, ValueError) as e:
        print(f"bellkit: {e}", file=sys.stderr)
        return EXIT_CODES["usage"]
