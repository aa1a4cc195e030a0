# main.py
import argparse
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from core.config import DEFAULT_GRID_WORKERS, OUTPUT_FORMATS, load_settings
from core.errors import ClassParseError, ConfigError, HypothesisError, QuotNefError
from core.logging_setup import handle_global_exception, logger, set_log_level

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESES = 2

NEGATIVE_VALUE = re.compile(r"^-\.?\d")


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_int_range(text):
    """'3', '1:5' (inclusive) or '1,2,7'."""
    try:
        if ":" in text:
            start, _, stop = text.partition(":")
            start, stop = int(start), int(stop)
            if stop < start:
                raise ValueError
            return list(range(start, stop + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use N, A:B or A,B,C")


def parse_splitting(text):
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid splitting type {text!r}; use a1,a2,...")


def _settings_from_args(args):
    overrides = {
        "output_format": getattr(args, "format", None),
        "allow_conjectural_t": True if args.allow_conjectural_t else None,
        "config_path": args.config,
        "database_url": getattr(args, "db", None),
    }
    return load_settings(cli_overrides=overrides)


def _analyzer(args, settings):
    from services import QuotAnalyzer
    if args.splitting is not None and args.g != 0:
        raise ConfigError("--splitting implies --g 0.")
    return QuotAnalyzer(args.g, args.d, n=args.n, splitting=args.splitting, settings=settings)


def _write_output(text, out_path=None):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        logger.info(f"Wrote {len(text)} characters to {out_path}.")
    else:
        sys.stdout.write(text)


def cmd_cone(args, settings):
    from services.quot import HYPOTHESIS_FLAGS
    from services.rendering import RENDERERS, report_to_json, report_to_table

    analyzer = _analyzer(args, settings)
    report = analyzer.analyze()
    fmt = settings.output_format
    if fmt == "json":
        _write_output(report_to_json(report) + "\n")
    elif fmt == "table":
        _write_output(report_to_table(report))
    else:
        picture = analyzer.picture
        if picture is None:
            logger.error(f"No cross-section picture for g={args.g}, d={args.d}; use --format json or table.")
            return EXIT_USAGE
        _write_output(RENDERERS[fmt](picture))
    return EXIT_HYPOTHESES if HYPOTHESIS_FLAGS.intersection(report["flags"]) else EXIT_OK


def cmd_check(args, settings):
    from services.quot import decide_nef, parse_class_spec
    from services.rendering import report_to_json, verdict_dataframe

    analyzer = _analyzer(args, settings)
    params = analyzer.params
    divisor = parse_class_spec(args.class_spec, params, basis=args.basis)
    verdict = decide_nef(divisor, allow_conjectural_t=settings.allow_conjectural_t)
    payload = {"params": params.as_dict(), "class": divisor.as_dict(), **verdict.as_dict()}
    logger.info(f"Class {args.class_spec} at g={params.g}, d={params.d}, n={params.rank}: {verdict.verdict.value}.")
    if settings.output_format == "table":
        _write_output(verdict_dataframe(payload).to_string(index=False) + "\n")
    else:
        _write_output(report_to_json(payload) + "\n")
    return EXIT_OK


def cmd_render(args, settings):
    from services.rendering import RENDERERS

    analyzer = _analyzer(args, settings)
    picture = analyzer.picture
    if picture is None:
        raise ConfigError(f"The cross-section picture needs g >= 1 and d >= 2 (got g={args.g}, d={args.d}).")
    fmt = settings.output_format if settings.output_format in RENDERERS else "svg"
    if fmt not in RENDERERS:
        raise ConfigError(f"render supports {sorted(RENDERERS)}, not {fmt!r}.")
    try:
        _write_output(RENDERERS[fmt](picture), args.out)
    except OSError as e:
        logger.error(f"Cannot write picture to {args.out}: {e}")
        return EXIT_USAGE
    return EXIT_OK


def _grid_cell(g, d, n, settings):
    from services import QuotAnalyzer
    try:
        return QuotAnalyzer(g, d, n=n, settings=settings).analyze(), None
    except QuotNefError as e:
        logger.warning(f"Grid cell g={g}, d={d}, n={n} failed: {e}")
        return None, {"params": {"g": g, "d": d, "n": n}, "error": str(e)}
    except Exception as e:
        logger.error(f"Unexpected error in grid cell g={g}, d={d}, n={n}: {e}", exc_info=True)
        return None, {"params": {"g": g, "d": d, "n": n}, "error": str(e)}


def cmd_grid(args, settings):
    from services.quot import HYPOTHESIS_FLAGS
    from services.rendering import report_to_json_line

    cells = [(g, d, n) for g in args.g_range for d in args.d_range for n in args.n_range]
    logger.info(f"--- Starting grid over {len(cells)} cells with {args.workers} worker(s) ---")

    workers = max(1, args.workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda cell: _grid_cell(*cell, settings), cells))

    db_session = None
    if args.db:
        from database import SessionLocal, init_db
        from services.quot.db_handler import store_report
        init_db(settings.database_url)
        db_session = SessionLocal()

    exit_code = EXIT_OK
    try:
        for report, error in results:
            if error is not None:
                sys.stdout.write(report_to_json_line(error) + "\n")
                exit_code = EXIT_USAGE
                continue
            sys.stdout.write(report_to_json_line(report) + "\n")
            if HYPOTHESIS_FLAGS.intersection(report["flags"]) and exit_code == EXIT_OK:
                exit_code = EXIT_HYPOTHESES
            if db_session is not None and store_report(db_session, report) is None:
                exit_code = EXIT_USAGE
    finally:
        if db_session is not None:
            from database import SessionLocal
            SessionLocal.remove()
    logger.info("--- Grid finished. ---")
    return exit_code


def _add_common(parser, with_format=True, formats=OUTPUT_FORMATS):
    parser.add_argument("--config", default=None, help="TOML config file (default: $QUOTNEF_CONFIG).")
    parser.add_argument("--allow-conjectural-t", action="store_true",
                        help="Accept Nagata-conditional values of t in exact results.")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL.")
    if with_format:
        parser.add_argument("--format", choices=formats, default=None, help="Output format.")


def _add_params(parser):
    parser.add_argument("--g", type=int, required=True, help="Genus of the curve.")
    parser.add_argument("--d", type=int, required=True, help="Length of the torsion quotients.")
    parser.add_argument("--n", type=int, default=None, help="Rank of the trivial bundle.")
    parser.add_argument("--splitting", type=parse_splitting, default=None, metavar="a1,a2,...",
                        help="Splitting type of E over P^1 (implies --g 0).")


def build_parser():
    parser = CliParser(prog="quotnef", description="Nef cones of Quot schemes of torsion quotients over curves")
    sub = parser.add_subparsers(dest="command", parser_class=CliParser)
    sub.required = True

    cone = sub.add_parser("cone", help="Report bounds, exact cone and boundary certificates.")
    _add_params(cone)
    _add_common(cone)
    cone.set_defaults(handler=cmd_cone)

    check = sub.add_parser("check", help="Decide nefness of a class a[O(1)] + beta.")
    _add_params(check)
    _add_common(check, formats=("json", "table"))
    check.add_argument("--class", dest="class_spec", required=True, metavar="a;bx,btheta",
                       help="Class as 'a;c1,c2' with c1, c2 in --basis coordinates.")
    check.add_argument("--basis", default="X_THETA",
                       choices=("X_THETA", "X_DELTA", "THETA_L0", "X_L0", "ALPHA_L0"))
    check.set_defaults(handler=cmd_check)

    render = sub.add_parser("render", help="Draw the cross-section picture with points A-E.")
    _add_params(render)
    _add_common(render, formats=("svg", "tikz", "table"))
    render.add_argument("--out", default=None, help="Output file (default: stdout).")
    render.set_defaults(handler=cmd_render)

    grid = sub.add_parser("grid", help="Emit JSON-lines reports over ranges of g, d, n.")
    grid.add_argument("--g-range", type=parse_int_range, required=True, metavar="A:B")
    grid.add_argument("--d-range", type=parse_int_range, required=True, metavar="A:B")
    grid.add_argument("--n-range", type=parse_int_range, required=True, metavar="A:B")
    grid.add_argument("--workers", type=int, default=DEFAULT_GRID_WORKERS)
    grid.add_argument("--db", default=None, metavar="URL", help="Also store reports in this database.")
    _add_common(grid, with_format=False)
    grid.set_defaults(handler=cmd_grid)
    return parser


def _join_negative_values(argv):
    """Rewrites "--opt -1,2" as "--opt=-1,2"; argparse would read a leading -digit as an option."""
    joined = []
    index = 0
    while index < len(argv):
        token = argv[index]
        value = argv[index + 1] if index + 1 < len(argv) else None
        if (token.startswith("--") and "=" not in token and value is not None
                and NEGATIVE_VALUE.match(value)):
            joined.append(f"{token}={value}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    if args.log_level:
        set_log_level(args.log_level)

    try:
        settings = _settings_from_args(args)
        return args.handler(args, settings)
    except (ConfigError, ClassParseError) as e:
        logger.error(f"{e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except HypothesisError as e:
        logger.warning(f"Hypotheses not satisfied: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_HYPOTHESES
    except QuotNefError as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Unexpected error running {args.command}: {e}", exc_info=True)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.excepthook = handle_global_exception
    script_start_time = datetime.now(timezone.utc)
    logger.info("===================================================================")
    logger.info(f"Starting quotnef at {script_start_time.strftime('%Y-%m-%d %H:%M:%S %Z')}")
    logger.info("===================================================================")

    exit_status = main()

    script_end_time = datetime.now(timezone.utc)
    logger.info(f"quotnef finished at {script_end_time.strftime('%Y-%m-%d %H:%M:%S %Z')}")
    logger.info(f"Total execution time: {script_end_time - script_start_time}")
    sys.exit(exit_status)
