"""
Command line for the germ engine.

Every subcommand reads its inputs from a JobConfig, computes exactly and
prints canonical text, JSON or CSV on stdout (or --output). Progress goes to
stderr; failures print a JSON record on stderr and exit with the code listed
in --help.
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

import pandas as pd

from .config import EngineLimits, JobConfig
from .consts import (
    DEFAULT_ORDER,
    EXIT_CODE_HELP,
    EXIT_INVALID_SPEC,
    EXIT_INVARIANT_BREACH,
    EXIT_OK,
    EXIT_OUT_OF_RANGE,
    EXIT_PARSE_ERROR,
    EXIT_UNEXPECTED,
    EXIT_VERIFY_FAILED,
)
from .diagnostics import d_v, generator_on_axis, growth_report, hilbert_inverse_norm
from .diffeo import log_diffeo
from .enums import GrowthTarget, OutputFormat, Restriction
from .errors import ConfigError, GermError, InvalidSpec, InvariantBreach, OutOfRange, ParseError
from .export import growth_frame, hilbert_frame, series_frame, sweep_frame, to_csv
from .homological import GENERATOR_CACHE, check_izs, solve_difference, solve_differential
from .invariants import (
    GermSpec,
    build_phi,
    first_integral,
    l_field,
    line_spec,
    normalize_spec,
    parametric_first_integral,
    scaled_spec,
    transport,
)
from .series import (
    LambdaPoly,
    Series1,
    Series2,
    dump_json,
    parse_series2,
    render_series1,
    render_series2,
    series1_to_terms,
    series2_to_terms,
    to_fraction,
)
from .series.coeffs import to_literal
from .validation import display_validation_summary, run_all_validations


@dataclass
class Outcome:
    """What a subcommand produced, in each output format."""
    record: Dict[str, Any]
    text: str
    frame: Optional[pd.DataFrame] = None
    exit_code: int = EXIT_OK


# Rendering helpers

def series_record(s) -> Dict[str, Any]:
    if isinstance(s, Series2):
        return {'order': s.order, 'text': render_series2(s), 'terms': series2_to_terms(s)}
    return {'order': s.order, 'text': render_series1(s), 'terms': series1_to_terms(s)}


def components_frame(named: Dict[str, Series2]) -> pd.DataFrame:
    rows = []
    for name, s in named.items():
        for xk, yk, c in s.terms():
            rows.append({'component': name, 'xk': xk, 'yk': yk, 'c': str(to_literal(c))})
    return series_frame(rows)


def series1_frame(s: Series1) -> pd.DataFrame:
    return series_frame([{'k': k, 'c': str(to_literal(c))} for k, c in s.terms()])


def _coefficient_text(c) -> str:
    if isinstance(c, LambdaPoly):
        return c.render()
    return str(c)


# Inputs

def load_spec(config: JobConfig) -> GermSpec:
    """Read the spec from a path or inline JSON and fix its working order."""
    source = config.spec_source
    if source is None:
        raise ParseError("this command needs --spec", field='spec')
    if source.lstrip().startswith('{'):
        text = source
    else:
        try:
            with open(source, encoding='utf-8') as handle:
                text = handle.read()
        except OSError as exc:
            raise ParseError(f"cannot read spec file {source!r}: {exc.strerror}", field='spec') from exc
    spec = GermSpec.from_json(text, config.order)
    config.limits.check_order(spec.order)
    return spec


def working_order(config: JobConfig) -> int:
    return config.limits.check_order(config.order if config.order is not None else DEFAULT_ORDER)


def literal(config: JobConfig, name: str, order: int, default: Optional[str] = None) -> Series2:
    text = config.literals.get(name) or default
    if text is None:
        raise ParseError(f"this command needs --{name.replace('_', '-')}", field=name)
    try:
        return parse_series2(text, order)
    except ParseError as exc:
        raise ParseError(str(exc), field=name) from exc


# Subcommands

def cmd_log(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    X = log_diffeo(build_phi(spec))
    named = {'X(x)': X.ax, 'X(y)': X.ay}
    return Outcome(
        record={'command': 'log', 'order': spec.order, **{k: series_record(v) for k, v in named.items()}},
        text="\n".join(f"{k} = {render_series2(v)}" for k, v in named.items()),
        frame=components_frame(named),
    )


def cmd_lfield(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    L = l_field(spec)
    named = {'L(x)': L.ax, 'L(y)': L.ay}
    return Outcome(
        record={'command': 'lfield', 'order': L.order, **{k: series_record(v) for k, v in named.items()}},
        text="\n".join(f"{k} = {render_series2(v)}" for k, v in named.items()),
        frame=components_frame(named),
    )


def cmd_first_integral(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    f = first_integral(spec)
    return Outcome(
        record={'command': 'first-integral', 'f': series_record(f)},
        text=render_series2(f),
        frame=components_frame({'f': f}),
    )


def cmd_transport(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    tr = transport(spec)
    return Outcome(
        record={'command': 'transport', 'a': series_record(tr.a)},
        text=render_series1(tr.a),
        frame=series1_frame(tr.a),
    )


def cmd_param_family(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    pfi = parametric_first_integral(spec)
    entries = [{
        'j': j,
        'k': k,
        'f': to_literal(c),
        'text': _coefficient_text(c),
        'degree': c.degree if isinstance(c, LambdaPoly) else (0 if c else -1),
    } for j, k, c in pfi.entries()]
    lines = [f"f_{{{e['j']},{e['k']}}} = {e['text']}" for e in entries]
    lines.append(f"degree bound deg f_{{j,k}} <= j+k holds for {len(entries)} entries")
    return Outcome(
        record={'command': 'param-family', 'order': pfi.order, 'entries': entries, 'degree_bound': 'ok'},
        text="\n".join(lines),
        frame=series_frame([{**e, 'f': str(e['f'])} for e in entries]),
    )


def _homological_delta(config: JobConfig, spec: GermSpec) -> Series2:
    if config.literals.get('delta'):
        return literal(config, 'delta', spec.order)
    return spec.delta_at()


def cmd_homological(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    delta = _homological_delta(config, spec)
    solution = solve_difference(spec.w, delta, spec.order)
    by_difference = solution.s_w()
    by_differential = solve_differential(spec.w, delta, spec.order)
    if by_difference != by_differential:
        raise InvariantBreach("difference and differential routes give different S_w")
    return Outcome(
        record={
            'command': 'homological',
            'epsilon': series_record(solution.epsilon),
            'iterations': solution.iterations,
            's_w_difference': series_record(by_difference),
            's_w_differential': series_record(by_differential),
            'routes_agree': True,
        },
        text="\n".join([
            f"epsilon = {render_series2(solution.epsilon)}",
            f"S_w (difference)   = {render_series1(by_difference)}",
            f"S_w (differential) = {render_series1(by_differential)}",
            "routes agree",
        ]),
        frame=components_frame({'epsilon': solution.epsilon}),
    )


def cmd_izs_check(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    delta = _homological_delta(config, spec)
    value = check_izs(spec.w, delta, spec.order)
    if not value.is_zero():
        raise InvariantBreach(f"S_w vanishing check failed: {render_series1(value)}")
    return Outcome(
        record={'command': 'izs-check', 'value': series_record(value), 'zero': True},
        text=f"S_w(Delta') = {render_series1(value)}",
        frame=series1_frame(value),
    )


def cmd_dv(config: JobConfig) -> Outcome:
    order = working_order(config)
    v = literal(config, 'v', order)
    h = literal(config, 'h', order, default='1')
    value = d_v(v, h)
    return Outcome(
        record={'command': 'dv', 'value': series_record(value)},
        text=render_series1(value),
        frame=series1_frame(value),
    )


def _hilbert_task(args) -> Any:
    k, limits = args
    return hilbert_inverse_norm(k, limits)


def _ordered_map(fn: Callable, tasks: Sequence, workers: int) -> List[Any]:
    """Map in input order, across a process pool when workers > 1."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, tasks, chunksize=1))


def cmd_hilbert(config: JobConfig) -> Outcome:
    k_lo, k_hi = config.k_range
    reports = _ordered_map(_hilbert_task, [(k, config.limits) for k in range(k_lo, k_hi + 1)], config.workers)
    lines = []
    for report in reports:
        line = f"k={report.k} norm={report.inverse_spectral_norm:.17g}"
        if report.asymptotic_prediction is not None:
            line += f" prediction={report.asymptotic_prediction:.17g} ratio={report.ratio:.17g}"
        lines.append(line)
    return Outcome(
        record={'command': 'hilbert', 'reports': [report.to_record() for report in reports]},
        text="\n".join(lines),
        frame=hilbert_frame(reports),
    )


def growth_series(spec: GermSpec, target: GrowthTarget, restriction: Restriction):
    """The series a growth report is taken on."""
    if target is GrowthTarget.TRANSPORT:
        return transport(spec).a
    if target is GrowthTarget.WHAT:
        if restriction is Restriction.X0:
            return generator_on_axis(spec.w, spec.order)
        return GENERATOR_CACHE.get(spec.w, spec.order)
    return l_field(spec.at_order(spec.order + 2)).ay


def _growth_text(report) -> str:
    lines = [f"trend: {report.label}"]
    for start, value in zip(report.window_starts, report.window_max):
        lines.append(f"degrees {start}..{min(start + report.window - 1, report.degrees[-1])}: "
                     f"max root test {value:.17g}")
    return "\n".join(lines)


def cmd_growth(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    series = growth_series(spec, config.target, config.restriction)
    restriction = config.restriction if isinstance(series, Series2) else Restriction.NONE
    report = growth_report(series, restriction, config.limits.growth_window)
    return Outcome(
        record={
            'command': 'growth',
            'target': config.target.value,
            'restriction': config.restriction.value,
            'report': report.to_record(),
        },
        text=_growth_text(report),
        frame=growth_frame(report),
    )


def _sweep_one(task) -> Dict[str, Any]:
    """One lambda sample; module-level so process pools can pickle it."""
    spec_payload, delta_direction, w_direction, lam_text, window = task
    spec = GermSpec.from_dict(spec_payload)
    lam = to_fraction(lam_text)
    if delta_direction is None and w_direction is None:
        member = scaled_spec(spec, lam)
    else:
        zero = Series2.zero(spec.order)
        member = line_spec(
            spec,
            parse_series2(delta_direction, spec.order) if delta_direction else zero,
            parse_series2(w_direction, spec.order) if w_direction else zero,
            lam,
        )
    a = transport(member).a
    report = growth_report(a, Restriction.NONE, window)
    return {
        'lam': str(lam),
        'trend': report.label,
        'root_test_last': report.root_test[-1] if report.root_test else 0.0,
        'window_max_last': report.window_max[-1] if report.window_max else 0.0,
        'transport': render_series1(a),
        'report': report.to_record(),
    }


def cmd_sweep(config: JobConfig) -> Outcome:
    spec = load_spec(config)
    if not config.lambdas:
        raise ParseError("sweep needs --lambdas", field='lambdas')
    tasks = [(spec.to_dict(), config.literals.get('direction_delta'), config.literals.get('direction_w'),
              str(lam), config.limits.growth_window) for lam in config.lambdas]
    if config.verbose:
        print(f"📦 Sweeping {len(tasks)} lambda samples with {config.workers} worker(s)", file=sys.stderr)
    records = _ordered_map(_sweep_one, tasks, config.workers)
    return Outcome(
        record={'command': 'sweep', 'order': spec.order, 'samples': records},
        text="\n".join(f"lam={r['lam']}: {r['trend']} (last window max {r['window_max_last']:.17g})"
                       for r in records),
        frame=sweep_frame(records),
    )


def cmd_rescale(config: JobConfig) -> Outcome:
    spec = normalize_spec(load_spec(config))
    return Outcome(
        record={'command': 'rescale', 'spec': spec.to_dict()},
        text=f"delta = {render_series2(spec.delta)}\nw = {render_series2(spec.w)}",
        frame=components_frame({'delta': spec.delta, 'w': spec.w}),
    )


def cmd_verify(config: JobConfig) -> Outcome:
    order = working_order(config)
    results = run_all_validations(order, config.seed, config.limits, verbose=config.verbose)
    frame = pd.DataFrame(
        [{'suite': s['suite'], 'valid': s['valid'], 'checked': s['checked'], 'failures': len(s['failures'])}
         for s in results['suites']],
        columns=['suite', 'valid', 'checked', 'failures'],
    )
    lines = []
    for suite in results['suites']:
        status = "passed" if suite['valid'] else f"FAILED ({len(suite['failures'])})"
        lines.append(f"{suite['suite']}: {status} ({suite['checked']} checks)")
    return Outcome(
        record={'command': 'verify', **results},
        text="\n".join(lines),
        frame=frame,
        exit_code=EXIT_OK if results['valid'] else EXIT_VERIFY_FAILED,
    )


COMMANDS: Dict[str, Callable[[JobConfig], Outcome]] = {
    'log': cmd_log,
    'lfield': cmd_lfield,
    'first-integral': cmd_first_integral,
    'transport': cmd_transport,
    'param-family': cmd_param_family,
    'homological': cmd_homological,
    'izs-check': cmd_izs_check,
    'dv': cmd_dv,
    'hilbert': cmd_hilbert,
    'growth': cmd_growth,
    'sweep': cmd_sweep,
    'rescale': cmd_rescale,
    'verify': cmd_verify,
}


def emit(outcome: Outcome, config: JobConfig) -> str:
    if config.output is OutputFormat.JSON:
        text = dump_json(outcome.record) + "\n"
    elif config.output is OutputFormat.CSV:
        frame = outcome.frame if outcome.frame is not None else pd.DataFrame()
        text = to_csv(frame)
    else:
        text = outcome.text + "\n"
    if config.output_path:
        with open(config.output_path, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        if config.verbose:
            print(f"✅ Wrote {config.output_path}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return text


def run(config: JobConfig) -> int:
    """
    Execute one subcommand and write its output.

    Args:
        config: Resolved job configuration (command, spec source, order,
            output format and destination, engine limits)

    Returns:
        Process exit code; engine errors propagate to main()
    """
    handler = COMMANDS.get(config.command)
    if handler is None:
        raise ConfigError(f"unknown command {config.command!r}")
    outcome = handler(config)
    emit(outcome, config)
    if config.command == 'verify' and config.verbose:
        display_validation_summary(outcome.record, file=sys.stderr)
    return outcome.exit_code


# Argument parsing

def _exit_code_epilog() -> str:
    lines = ["exit codes:"]
    lines += [f"  {code}  {meaning}" for code, meaning in sorted(EXIT_CODE_HELP.items())]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None, help="Truncation order N (default: spec order or 10).")
    common.add_argument("--format", choices=OutputFormat.all_formats(), default=OutputFormat.TEXT.value)
    common.add_argument("--output", default=None, help="Write the result to this file instead of stdout.")
    common.add_argument("--verbose", action="store_true", help="Progress on stderr.")

    with_spec = argparse.ArgumentParser(add_help=False)
    with_spec.add_argument("--spec", default=None,
                           help='Spec JSON file or inline JSON {"delta": [...], "w": [...], "order": N}.')

    parser = argparse.ArgumentParser(
        prog="germs",
        description="Exact formal invariants of the unipotent germs "
                    "(x + y(y-x)Delta, y + y(y-x)w).",
        epilog=_exit_code_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("log", parents=[common, with_spec], help="Generator log(phi).")
    sub.add_parser("lfield", parents=[common, with_spec], help="L = log(phi)/(y(y-x)).")
    sub.add_parser("first-integral", parents=[common, with_spec], help="First integral with f(x,0) = x.")
    sub.add_parser("transport", parents=[common, with_spec], help="Transport mapping a(x).")
    sub.add_parser("param-family", parents=[common, with_spec],
                   help="Table f_{j,k}(lambda) with the degree bound checked.")
    for name, text in (("homological", "eps and S_w by both routes."),
                       ("izs-check", "S_w on the image of L_{0,w}; must vanish.")):
        p = sub.add_parser(name, parents=[common, with_spec], help=text)
        p.add_argument("--delta", default=None, help="Series text replacing the spec's Delta.")

    p = sub.add_parser("dv", parents=[common], help="D_v(H).")
    p.add_argument("--v", required=True, help="Series text for v.")
    p.add_argument("--h", default="1", help="Series text for H (default 1).")

    p = sub.add_parser("hilbert", parents=[common], help="Inverse spectral norm of Hilbert matrices.")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k", type=int, default=None)
    group.add_argument("--k-range", type=int, nargs=2, metavar=("FROM", "TO"), default=None)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("growth", parents=[common, with_spec], help="Coefficient growth report.")
    p.add_argument("--target", choices=GrowthTarget.all_targets(), default=GrowthTarget.GENERATOR.value)
    p.add_argument("--restrict", choices=Restriction.all_restrictions(), default=Restriction.NONE.value)

    p = sub.add_parser("sweep", parents=[common, with_spec], help="Transport growth per lambda sample.")
    p.add_argument("--lambdas", nargs="+", required=True, help="Exact rationals, e.g. 1/2 1 2.")
    p.add_argument("--direction-delta", default=None, help="Line direction A for Delta + lam*A.")
    p.add_argument("--direction-w", default=None, help="Line direction B for w + lam*B.")
    p.add_argument("--workers", type=int, default=None)

    sub.add_parser("rescale", parents=[common, with_spec], help="Normalize the spec to w(0,0) = 1.")

    p = sub.add_parser("verify", parents=[common], help="Run every invariant suite.")
    p.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(args: argparse.Namespace, limits: Optional[EngineLimits] = None) -> JobConfig:
    limits = limits or EngineLimits.from_env()
    k_range = (1, 1)
    if getattr(args, 'k', None) is not None:
        k_range = (args.k, args.k)
    elif getattr(args, 'k_range', None) is not None:
        k_range = tuple(args.k_range)
    literals = {name: getattr(args, name) for name in ('v', 'h', 'delta', 'direction_delta', 'direction_w')
                if getattr(args, name, None) is not None}
    workers = getattr(args, 'workers', None)
    return JobConfig(
        command=args.command,
        spec_source=getattr(args, 'spec', None),
        order=args.order,
        output=OutputFormat(args.format),
        lambdas=getattr(args, 'lambdas', None) or [],
        seed=getattr(args, 'seed', 0),
        k_range=k_range,
        target=GrowthTarget(getattr(args, 'target', GrowthTarget.GENERATOR.value)),
        restriction=Restriction(getattr(args, 'restrict', Restriction.NONE.value)),
        workers=limits.workers if workers is None else workers,
        output_path=args.output,
        verbose=args.verbose,
        literals=literals,
        limits=limits,
    )


def _fail(exc: BaseException, code: int) -> int:
    record = exc.record() if isinstance(exc, GermError) else {'error': type(exc).__name__, 'message': str(exc)}
    record['exit_code'] = code
    print(dump_json(record), file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except ParseError as exc:
        return _fail(exc, EXIT_PARSE_ERROR)
    except InvalidSpec as exc:
        return _fail(exc, EXIT_INVALID_SPEC)
    except (OutOfRange, ConfigError) as exc:
        return _fail(exc, EXIT_OUT_OF_RANGE)
    except InvariantBreach as exc:
        return _fail(exc, EXIT_INVARIANT_BREACH)
    except Exception as exc:  # noqa: BLE001
        return _fail(exc, EXIT_UNEXPECTED)


if __name__ == "__main__":
    raise SystemExit(main())
