"""
    Command line interface: curves, spectrum, simulate and oracle subcommands, each writing a CSV table, a
    metadata record and optional side files
"""
import argparse
import logging
import sys
from rdp import __version__
from rdp.cli.config import RunConfig, ConfigError, read_config_file, parse_bool, workers_override
from rdp.cli.output import output_stem, write_csv, write_metadata, write_lines, write_plot_script
from rdp.codec import build_codec, evaluate, m_for_rate, EXACT_CAP
from rdp.codec.lossy import LOSSY_METHODS, MAX_CODEBOOK
from rdp.oracle import enumerate_frontier
from rdp.oracle.heuristic import RESTARTS
from rdp.sources.model import SourceModel, PAPER_ALIAS
from rdp.spectra import exceedance_curve, asymptotic_spectral_cdf, sample_self_information, plimsup_estimate
from rdp.tradeoff import tradeoff_grid, discrepancy_report
from rdp.utils.errors import ResourceLimitError
from rdp.utils.grid import parse_grid
from rdp.utils.random import get_rng

logger = logging.getLogger(__name__)

# Options shared by all subcommands that are not echoed as parameters
_COMMON = ('command', 'source', 'output', 'workers', 'verbose', 'emit_plot_script')


def _argument_type(function, name):
    def convert(text):
        try:
            return function(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e))
    convert.__name__ = name
    return convert


def parse_budget(text):
    """
        Codeword budget as a decimal integer or a power 'b^e' (e.g. 2^900)
    """
    text = text.strip()
    if '^' in text:
        base, exponent = text.split('^', 1)
        value = int(base) ** int(exponent)
    else:
        value = int(text)
    if value < 1:
        raise ValueError('Codeword budget must be >= 1, got {}'.format(text))
    return value


def _parse_list(function):
    def parse(text):
        return [function(item) for item in str(text).split(',') if item.strip()]
    return parse


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise ValueError('Expected a positive integer, got {}'.format(text))
    return value


def _non_negative_int(text):
    value = int(text)
    if value < 0:
        raise ValueError('Expected a non-negative integer, got {}'.format(text))
    return value


source_type = _argument_type(SourceModel.parse, 'source')
grid_type = _argument_type(parse_grid, 'grid')
budget_type = _argument_type(parse_budget, 'budget')
lengths_type = _argument_type(_parse_list(_positive_int), 'lengths')
budgets_type = _argument_type(_parse_list(parse_budget), 'budgets')
rates_type = _argument_type(_parse_list(float), 'rates')
positive_type = _argument_type(_positive_int, 'positive integer')
count_type = _argument_type(_non_negative_int, 'non-negative integer')


def build_parser():
    """
        Returns the argument parser and a dict of its subcommand parsers
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=None, help='key=value file with defaults for the options')
    common.add_argument('--source', type=source_type, default=PAPER_ALIAS,
                        help="'bernoulli:p', 'mix:w1*p1,w2*p2,...' or '{}'".format(PAPER_ALIAS))
    common.add_argument('-o', '--output', default=None, help='CSV output path (default <subcommand>.csv)')
    common.add_argument('--workers', type=positive_type, default=1,
                        help='Worker processes (overridden by RDP_WORKERS)')
    common.add_argument('--emit-plot-script', action='store_true', help='Write <stem>.plot.py next to the CSV')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logs')

    parser = argparse.ArgumentParser(prog='rdp', description='Rate-distortion-perception tradeoff toolkit')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    commands = {}

    curves = subparsers.add_parser('curves', parents=[common], help='R(D, S) on a grid')
    curves.add_argument('--d-grid', type=grid_type, default='0:0.5:0.05', help='Distortion grid lo:hi:step')
    curves.add_argument('--s-grid', type=grid_type, default='0:1:0.25', help='Perception grid lo:hi:step')
    commands['curves'] = curves

    spectrum = subparsers.add_parser('spectrum', parents=[common], help='Spectral CDF at finite n')
    spectrum.add_argument('--n', type=lengths_type, default=None, help='Block lengths, comma separated')
    spectrum.add_argument('--r-grid', type=grid_type, default='0:1.2:0.01', help='Rate grid lo:hi:step')
    spectrum.add_argument('--samples', type=count_type, default=0,
                          help='Self-information samples per n for the p-limsup diagnostic')
    spectrum.add_argument('--tail', type=float, default=0.01, help='Tail probability of the diagnostic')
    spectrum.add_argument('--seed', type=count_type, default=102)
    commands['spectrum'] = spectrum

    simulate = subparsers.add_parser('simulate', parents=[common], help='Evaluate two-stage codes')
    simulate.add_argument('--n', type=lengths_type, default=None, help='Block lengths, comma separated')
    simulate.add_argument('--rate', type=rates_type, default=None, help='Rates R, M = floor(2^(nR))')
    simulate.add_argument('--m', type=budgets_type, default=None, help="Budgets M (integers or 'b^e')")
    simulate.add_argument('--lossy-method', choices=LOSSY_METHODS, default='random')
    simulate.add_argument('--samples', type=positive_type, default=10000)
    simulate.add_argument('--seed', type=count_type, default=102)
    simulate.add_argument('--exact-cap', type=count_type, default=EXACT_CAP)
    simulate.add_argument('--tail', type=float, default=0.01)
    simulate.add_argument('--max-codebook', type=positive_type, default=MAX_CODEBOOK)
    commands['simulate'] = simulate

    oracle = subparsers.add_parser('oracle', parents=[common], help='Exact (D, sigma) frontier at tiny n')
    oracle.add_argument('--n', type=positive_type, default=None)
    oracle.add_argument('--m', type=budget_type, default=None)
    oracle.add_argument('--heuristic', action='store_true', help='Local search at n=4 (non-exhaustive)')
    oracle.add_argument('--restarts', type=positive_type, default=RESTARTS)
    oracle.add_argument('--seed', type=count_type, default=102)
    commands['oracle'] = oracle
    return parser, commands


def _apply_config_file(argv, commands):
    """
        Installs the values of --config FILE as defaults of the selected subcommand, so that explicit flags
        override them
    """
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config', default=None)
    known, _ = pre.parse_known_args(argv)
    command = next((token for token in argv if token in commands), None)
    if known.config is None or command is None:
        return
    subparser = commands[command]
    actions = {action.dest: action for action in subparser._actions}
    defaults = {}
    for key, value in read_config_file(known.config).items():
        if key not in actions or key in ('help', 'config'):
            raise ConfigError('Unknown config key {!r} for {}'.format(key, command))
        action = actions[key]
        if isinstance(action, (argparse._StoreTrueAction, argparse._CountAction)):
            defaults[key] = parse_bool(value) if isinstance(action, argparse._StoreTrueAction) else int(value)
        else:
            defaults[key] = value
    subparser.set_defaults(**defaults)


def make_config(args):
    """
        RunConfig from the parsed arguments, with RDP_WORKERS applied
    """
    params = {key: value for key, value in vars(args).items() if key not in _COMMON}
    return RunConfig(command=args.command, source=args.source,
                     output=args.output or '{}.csv'.format(args.command),
                     workers=workers_override(args.workers), params=params)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ConfigError('{} requires --{}'.format(args.command, name.replace('_', '-')))


def _finish(config, args, csv_path, outputs, x, ys, extra=None):
    stem = output_stem(csv_path)
    if args.emit_plot_script:
        outputs.append(write_plot_script(stem + '.plot.py', csv_path, x, ys))
    write_metadata(stem + '.meta.jsonl', config, __version__, outputs, extra)
    logger.info('Wrote %s', ', '.join(outputs))


def run_curves(args, config):
    rows = tradeoff_grid(config.source, args.d_grid, args.s_grid)
    fields = ['D', 'S', 'rd_term', 'perception_term', 'R_theorem', 'R_paper', 'flagged']
    table = [dict(D=row.D, S=row.S, rd_term=row.rd_term, perception_term=row.perception_term,
                  R_theorem=row.theorem_value, R_paper=row.paper_value, flagged=row.flagged) for row in rows]
    outputs = [write_csv(config.output, fields, table)]
    extra = {}
    if config.source == SourceModel.paper():
        report = discrepancy_report(args.d_grid, args.s_grid)
        fields = ['D', 'S', 'R_theorem', 'R_paper', 'difference']
        outputs.append(write_csv(output_stem(config.output) + '.discrepancies.csv', fields,
                                 [dict(D=item.D, S=item.S, R_theorem=item.theorem_value,
                                       R_paper=item.paper_value, difference=item.difference) for item in report]))
        extra['discrepancies'] = len(report)
    _finish(config, args, config.output, outputs, 'D', ['R_theorem', 'R_paper'], extra)


def run_spectrum(args, config):
    _require(args, 'n')
    table = []
    samples = []
    for index, n in enumerate(args.n):
        curve = exceedance_curve(config.source, n, args.r_grid)
        table.extend(dict(n=n, R=R, F_exact=F) for R, F in curve.points)
        if args.samples > 0:
            samples.append((n, sample_self_information(config.source, n, args.samples, get_rng(args.seed, index))))
    outputs = [write_csv(config.output, ['n', 'R', 'F_exact'], table)]
    steps = asymptotic_spectral_cdf(config.source)
    bounds = [float('-inf')] + list(steps.thresholds) + [float('inf')]
    step_rows = [dict(R_lo=bounds[i], R_hi=bounds[i + 1], F_asymptotic=level) for i, level in enumerate(steps.levels)]
    outputs.append(write_csv(output_stem(config.output) + '.steps.csv', ['R_lo', 'R_hi', 'F_asymptotic'], step_rows))
    extra = {}
    if samples:
        extra['plimsup_self_information'] = plimsup_estimate(samples, args.tail)
    _finish(config, args, config.output, outputs, 'R', ['F_exact'], extra)


def run_simulate(args, config):
    _require(args, 'n')
    if (args.rate is None) == (args.m is None):
        raise ConfigError('simulate needs exactly one of --rate and --m')
    table = []
    for n in args.n:
        budgets = args.m if args.m is not None else [m_for_rate(R, n) for R in args.rate]
        for M in budgets:
            codec = build_codec(config.source, n, M, lossy_method=args.lossy_method, seed=args.seed,
                                max_codebook=args.max_codebook, verbose=args.verbose > 0)
            metrics = evaluate(codec, config.source, samples=args.samples, seed=args.seed,
                               exact_cap=args.exact_cap, tail=args.tail, workers=config.workers,
                               verbose=args.verbose > 0)
            row = dict(source=config.source.to_string(), lossy_method=args.lossy_method,
                       lossless_set_size=codec.lossless_set_size, codewords=len(codec.lossy_codebook))
            row.update(metrics.as_row())
            table.append(row)
    fields = ['source', 'lossy_method', 'n', 'M', 'rate', 'lossless_set_size', 'codewords', 'distortion',
              'distortion_stderr', 'distortion_exact', 'distortion_tail', 'sigma', 'sigma_exact', 'epsilon',
              'samples']
    outputs = [write_csv(config.output, fields, table)]
    _finish(config, args, config.output, outputs, 'rate', ['distortion', 'sigma', 'epsilon'])


def run_oracle(args, config):
    _require(args, 'n', 'm')
    frontier = enumerate_frontier(config.source, args.n, args.m, heuristic=args.heuristic,
                                  workers=config.workers, verbose=args.verbose > 0, seed=args.seed,
                                  restarts=args.restarts)
    table = [dict(M=p.M, D=p.D, sigma=p.sigma, exhaustive=p.exhaustive) for p in frontier]
    outputs = [write_csv(config.output, ['M', 'D', 'sigma', 'exhaustive'], table)]
    outputs.append(write_lines(output_stem(config.output) + '.witness.txt',
                               [p.witness_line(args.n) for p in frontier]))
    _finish(config, args, config.output, outputs, 'D', ['sigma'])


COMMANDS = dict(curves=run_curves, spectrum=run_spectrum, simulate=run_simulate, oracle=run_oracle)


def configure_logging(verbose):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def run(argv=None):
    """
        Runs one subcommand
    :param argv: Argument list without the program name (default sys.argv[1:])
    :return: exit code: 0 on success, 2 on argument errors, 1 on runtime errors
    """
    argv = sys.argv[1:] if argv is None else [str(item) for item in argv]
    parser, commands = build_parser()
    try:
        _apply_config_file(argv, commands)
        args = parser.parse_args(argv)
        config = make_config(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except ValueError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write('rdp: error: {}\n'.format(e))
        return 2
    configure_logging(args.verbose)
    logger.debug('Effective configuration: %s', config.as_dict())
    try:
        COMMANDS[config.command](args, config)
    except ConfigError as e:
        logger.error('%s: %s', config.command, e)
        return 2
    except (ResourceLimitError, ValueError, RuntimeError, OSError) as e:
        logger.error('%s failed: %s', config.command, e)
        return 1
    return 0


def main():
    sys.exit(run())
