# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
The qcollatz command line.

    qcollatz orbit --q 5 --n 7 --steps 5
    qcollatz cycles-search --q 5 --method orbit --n_max 10000
    qcollatz cycles-search --q 181 --method parity --p-max 15
    qcollatz stats-density --q 5 --k 100 --mode sampled --samples 100000 \\
        --seed 1

Flags are gflags; `--some-flag` is accepted for `--some_flag`. Caps,
budgets and chunk sizes not given on the command line come from the
config files (see qcollatz.job). Exit status: 0 success, 1 domain error,
2 usage error, 3 result limited by a cap or budget.
"""

import io
import sys

import gflags

from qcollatz import cycles
from qcollatz import logs
from qcollatz import maps
from qcollatz import parity
from qcollatz import stats
from qcollatz import trajectory
from qcollatz.job import CONFIGURABLE, ChunkSplitter, Job
from qcollatz.jobber import Jobber
from qcollatz.kvs import CheckpointError, load_checkpoint
from qcollatz.maps import DomainError, Multiplier
from qcollatz.output import CSV, FORMATS, JSON, PLAIN
from qcollatz.output.report import JsonWriter
from qcollatz.output.tabular import CsvWriter, PlainWriter
from qcollatz.parity import BudgetExceeded, ParityVector
from qcollatz.parser import catalog

LOG = logs.LOG

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_PARTIAL = 3

SUBCOMMANDS = ('orbit', 'parity', 'seed-of', 'cycles-search',
               'cycles-verify', 'trivial-search', 'stats-hist',
               'stats-density', 'bounds-check', 'verify-collatz')

REQUIRED = {
    'orbit': ('q', 'steps'),
    'parity': ('q', 'steps'),
    'seed-of': ('q', 'parity'),
    'cycles-search': ('q',),
    'cycles-verify': (),
    'trivial-search': ('total_parity', 'q_max', 'p_max'),
    'stats-hist': ('q', 'k'),
    'stats-density': ('q', 'k'),
    'bounds-check': ('q', 'steps'),
    'verify-collatz': ('max',),
}

CATALOG_COLUMNS = ('q', 'n0', 'x0', 'p', 'P_p', 's', 'h', 'lambda', 'parity')

USAGE = """usage: qcollatz SUBCOMMAND [--flag value ...]

subcommands: %s
""" % ", ".join(SUBCOMMANDS)


class UsageError(Exception):
    """A command line that does not name a valid command."""


def _define_flags(fv):
    """Every subcommand flag, on a fresh FlagValues."""
    gflags.DEFINE_integer('q', None, 'Odd multiplier q >= 3', flag_values=fv)
    gflags.DEFINE_integer('n', None, 'Seed as a positive integer n',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('x', None, 'Seed as an element of Z_cq',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('steps', None, 'Number of steps k',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_enum('method', cycles.ORBIT, list(cycles.METHODS),
                       'Cycle search method', flag_values=fv)
    gflags.DEFINE_integer('n_max', None, 'Largest seed n searched',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('p_max', None, 'Largest period enumerated',
                          lower_bound=2, flag_values=fv)
    gflags.DEFINE_integer('step_cap', 10000, 'Steps followed per orbit',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('size_cap_bits', 1000000,
                          'Iterate size, in bits, that caps an orbit',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('h', None, 'Residue class of the cycle minimum',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('lambda_max', 10000,
                          'Largest lambda of a class scan',
                          lower_bound=0, flag_values=fv)
    gflags.DEFINE_string('parity', None, 'Parity vector as a 0/1 string',
                         flag_values=fv)
    gflags.DEFINE_string('catalog', None,
                         'Cycle catalog to verify (the shipped one if unset)',
                         flag_values=fv)
    gflags.DEFINE_integer('total_parity', None,
                          'Total parity P of a trivial-cycle search',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('q_max', None, 'Largest multiplier searched',
                          lower_bound=3, flag_values=fv)
    gflags.DEFINE_integer('k', None, 'Parity vector length',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_enum('mode', stats.EXHAUSTIVE,
                       [stats.EXHAUSTIVE, stats.SAMPLED],
                       'Histogram over every seed or over sampled seeds',
                       flag_values=fv)
    gflags.DEFINE_integer('samples', None, 'Number of sampled seeds',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('seed', None, 'Generator seed for sampling',
                          lower_bound=0, flag_values=fv)
    gflags.DEFINE_integer('t', None, 'Density over seeds n in [1, t]',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('max', None, 'verify-collatz checks n <= max',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_enum('format', PLAIN, list(FORMATS), 'Output format',
                       flag_values=fv)
    gflags.DEFINE_enum('space', 'n', ['n', 'x'],
                       'Report values as n (T_q) or x (F_q)', flag_values=fv)
    gflags.DEFINE_integer('threads', None,
                          'Worker processes (default $QCOLLATZ_THREADS, '
                          'then the CPU count)',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_boolean('distribute', False,
                          'Run chunks on celery workers', flag_values=fv)
    gflags.DEFINE_string('checkpoint', None,
                         'Write search checkpoints to this file',
                         flag_values=fv)
    gflags.DEFINE_integer('checkpoint_every', 10,
                          'Chunks between two checkpoints',
                          lower_bound=0, flag_values=fv)
    gflags.DEFINE_string('resume', None,
                         'Continue the search saved in this checkpoint',
                         flag_values=fv)
    gflags.DEFINE_integer('chunk_size', 1000, 'Seeds or vectors per chunk',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_integer('enumeration_budget', 2 ** 24,
                          'Largest exhaustive enumeration allowed',
                          lower_bound=1, flag_values=fv)
    gflags.DEFINE_string('config', None, 'Extra config file', flag_values=fv)
    gflags.DEFINE_boolean('include_defaults', True,
                          'Read the default config files', flag_values=fv)
    gflags.DEFINE_string('debug', 'warn', 'Log level', flag_values=fv)
    gflags.DEFINE_boolean('job_log', False,
                          'Log verdicts to <job_id>.log', flag_values=fv)
    gflags.DEFINE_string('log_dir', None, 'Directory of the job log',
                         flag_values=fv)
    return fv


class Command(object):
    """A parsed invocation: subcommand, parameters and output format."""

    def __init__(self, subcommand, params, output_format=PLAIN, space='n'):
        self.subcommand = subcommand
        self.params = dict(params)
        self.output_format = output_format
        self.space = space

    @property
    def job_id(self):
        return Job(dict(self.params, subcommand=self.subcommand)).job_id

    def __getitem__(self, name):
        return self.params[name]

    def __eq__(self, other):
        return isinstance(other, Command) and \
            (self.subcommand, self.params, self.output_format, self.space) == \
            (other.subcommand, other.params, other.output_format, other.space)

    def __repr__(self):
        shown = ", ".join("%s=%s" % (k, v)
                          for k, v in sorted(self.params.items())
                          if v is not None)
        return "Command(%s, %s)" % (self.subcommand, shown)


def _normalize(arg):
    """--p-max=7 -> --p_max=7; values are left alone."""
    if not arg.startswith('--'):
        return arg
    name, sep, value = arg[2:].partition('=')
    return '--' + name.replace('-', '_') + sep + value


def _require(params, names, context):
    missing = ["--%s" % name for name in names if params.get(name) is None]
    if missing:
        raise UsageError("%s needs %s" % (context, ", ".join(missing)))


def _validate(subcommand, params):
    """Check flag values against the preconditions of the operation the
    subcommand runs."""
    _require(params, REQUIRED[subcommand], subcommand)
    if params['q'] is not None:
        try:
            Multiplier(params['q'])
        except DomainError as e:
            raise UsageError("--q: %s" % e)
    for name in ('step_cap', 'size_cap_bits', 'chunk_size',
                 'enumeration_budget'):
        if params[name] < 1:
            raise UsageError("--%s must be >= 1, got %s" % (
                    name, params[name]))

    if subcommand in ('orbit', 'parity') or \
            (subcommand == 'bounds-check' and params['n_max'] is None):
        if (params['n'] is None) == (params['x'] is None):
            raise UsageError("%s needs exactly one of --n, --x" % subcommand)
        if params['x'] is not None and \
                not maps.is_member(params['q'], params['x']):
            raise UsageError("--x: %s is not in Z_c%s" % (
                    params['x'], params['q']))
    if subcommand == 'seed-of':
        try:
            ParityVector.from_string(params['parity'])
        except DomainError as e:
            raise UsageError("--parity: %s" % e)
    if subcommand == 'cycles-search':
        needed = {cycles.ORBIT: ('n_max',), cycles.PARITY_ENUM: ('p_max',),
                  cycles.CLASS_SCAN: ('h', 'lambda_max')}[params['method']]
        _require(params, needed, "--method %s" % params['method'])
        if params['method'] == cycles.CLASS_SCAN:
            try:
                cycles.check_class(params['q'], params['h'])
            except DomainError as e:
                raise UsageError("--h: %s" % e)
    if subcommand in ('stats-hist', 'stats-density'):
        if params['mode'] == stats.SAMPLED:
            _require(params, ('samples', 'seed'), "--mode sampled")
        elif subcommand == 'stats-density':
            _require(params, ('t',), subcommand)
    if params['resume'] is not None and subcommand != 'cycles-search':
        raise UsageError("--resume applies to cycles-search only")


def parse(args):
    """Turn an argument list (without the program name) into a Command."""
    args = list(args)
    if not args or args[0].startswith('-'):
        raise UsageError("missing subcommand; one of %s" %
                         ", ".join(SUBCOMMANDS))
    subcommand = args[0]
    if subcommand not in SUBCOMMANDS:
        raise UsageError("unknown subcommand %r; one of %s" % (
                subcommand, ", ".join(SUBCOMMANDS)))

    fv = _define_flags(gflags.FlagValues())
    try:
        rest = fv(['qcollatz'] + [_normalize(a) for a in args[1:]])
    except gflags.FlagsError as e:
        raise UsageError(str(e))
    if len(rest) > 1:
        raise UsageError("unexpected arguments: %s" % " ".join(rest[1:]))

    params = dict((name, fv[name].value) for name in fv)
    try:
        job = Job.from_file(params['config'], params['include_defaults'])
        for key in CONFIGURABLE:
            name = key.lower()
            if not fv[name].present and job.has(key):
                params[name] = job.get_int(key)
    except (IOError, ValueError) as e:
        raise UsageError("--config: %s" % e)

    _validate(subcommand, params)
    return Command(subcommand, params, params['format'], params['space'])


class Rendering(object):
    """What a subcommand produced, ready for any output format."""

    def __init__(self, document, columns, rows, lines, status=EXIT_OK):
        self.document = document
        self.columns = columns
        self.rows = rows
        self.lines = lines
        self.status = status

    def render(self, output_format):
        stream = io.StringIO()
        if output_format == JSON:
            JsonWriter(stream).serialize(self.document)
        elif output_format == CSV:
            CsvWriter(stream, self.columns).serialize(enumerate(self.rows))
        else:
            PlainWriter(stream).serialize(enumerate(self.lines))
        return stream.getvalue()


def _seed(command):
    """The seed of orbit, parity and bounds-check, as an element of Z_cq."""
    q = Multiplier(command['q'])
    if command['x'] is not None:
        return maps.CqInt(q, command['x'])
    return maps.conjugate(q, command['n'])


def _in_space(q, value, space):
    if space == 'n':
        return (value - 1) // q.two_qm1
    return value


def _orbit(command, _jobber):
    q = Multiplier(command['q'])
    traj = trajectory.iterate(q, _seed(command), command['steps'],
                              command['size_cap_bits'])
    values = traj.values(command.space)
    document = {'q': q.q, 'space': command.space,
                'seed': _in_space(q, traj.seed, command.space),
                'steps': command['steps'], 'iterates': values,
                'parity': traj.parity,
                'final': _in_space(q, traj.final, command.space),
                'max_value': max(values), 'capped': traj.capped}
    rows = [(j, value, bit)
            for j, (value, bit) in enumerate(zip(values, traj.parity))]
    status = EXIT_PARTIAL if traj.capped else EXIT_OK
    return Rendering(document, ('step', 'value', 'parity'), rows, [values],
                     status)


def _parity(command, _jobber):
    q = Multiplier(command['q'])
    x0 = _seed(command)
    vector = parity.parity_vector(q, x0, command['steps'])
    document = {'q': q.q, 'seed': _in_space(q, x0, command.space),
                'space': command.space, 'k': len(vector), 'parity': vector,
                'total_parity': vector.total, 'mu': vector.coefficient}
    return Rendering(document, ('parity', 'P', 'mu'),
                     [(vector, vector.total, vector.coefficient)],
                     [str(vector)])


def _seed_of(command, _jobber):
    q = Multiplier(command['q'])
    vector = ParityVector.from_string(command['parity'])
    n0 = parity.seed_from_parity(q, vector)
    x0 = maps.conjugate(q, n0)
    document = {'q': q.q, 'parity': vector, 'n0': n0, 'x0': x0}
    return Rendering(document, ('parity', 'n0', 'x0'), [(vector, n0, x0)],
                     [n0 if command.space == 'n' else x0])


def _search_plan(command):
    """(kind, chunks, bounds, cut) of a cycles-search."""
    q = Multiplier(command['q'])
    method, size = command['method'], command['chunk_size']
    caps = (command['step_cap'], command['size_cap_bits'])
    if method == cycles.ORBIT:
        bounds = {'n_max': command['n_max'], 'step_cap': caps[0],
                  'size_cap_bits': caps[1], 'chunk_size': size}
        chunks = ChunkSplitter(1, command['n_max'] + 1, size).chunks(
            (q.q,), caps)
        return 'orbit', chunks, bounds, False
    if method == cycles.PARITY_ENUM:
        bounds = {'p_max': command['p_max'],
                  'enumeration_budget': command['enumeration_budget'],
                  'chunk_size': size}
        plan, cut = cycles.parity_chunks(q, command['p_max'],
                                         command['enumeration_budget'],
                                         size)
        return 'parity', [(q.q,) + chunk for chunk in plan], bounds, cut
    bounds = {'h': command['h'], 'lambda_max': command['lambda_max'],
              'step_cap': caps[0], 'size_cap_bits': caps[1],
              'chunk_size': size}
    chunks = ChunkSplitter(0, command['lambda_max'] + 1, size).chunks(
        (q.q, command['h']), caps)
    return 'class', chunks, bounds, False


def _cycles_search(command, jobber):
    q = Multiplier(command['q'])
    method = command['method']
    kind, chunks, bounds, cut = _search_plan(command)

    report, start = cycles.SearchReport(q, method, bounds), 0
    if command['resume']:
        state = load_checkpoint(command['resume'], q, method)
        report = cycles.SearchReport.from_dict(state['report'])
        if report.bounds != bounds:
            raise CheckpointError("checkpoint %s was written for %s" % (
                    command['resume'], report.bounds))
        start = min(state['next_chunk'], len(chunks))
        LOG.info("resuming %s search for q=%s at chunk %s of %s", method,
                 q.q, start, len(chunks))

    def describe(state):
        return {'q': q.q, 'method': method,
                'partial_counts': dict(state.scanned),
                'report': state.to_dict()}

    report = jobber.run(kind, chunks, lambda r, result: r.absorb(result),
                        report, start=start, describe=describe)
    if cut:
        LOG.warning("q=%s parity enumeration cut by the budget", q.q)
        report.partial = True
    report.checkpoint = {'chunks': len(chunks), 'resumed_at': start}

    document = report.to_dict()
    document['undetermined'] = report.undetermined
    rows = [c.to_dict() for c in report.sorted_cycles()]
    lines = [[row[name] for name in CATALOG_COLUMNS] for row in rows]
    lines.append("# pi=%s %s partial=%s" % (
            report.pi_count,
            " ".join("%s=%s" % item for item in sorted(report.scanned.items())),
            "true" if report.partial else "false"))
    status = EXIT_PARTIAL if report.partial or report.undetermined \
        else EXIT_OK
    return Rendering(document, CATALOG_COLUMNS, rows, lines, status)


def _cycles_verify(command, jobber):
    rows = catalog.read_catalog(command['catalog'], command['q'])
    if not rows:
        raise DomainError("no catalog rows%s" % (
                " for q=%s" % command['q'] if command['q'] else ""))
    verdicts = [catalog.verify_catalog_row(row) for row in rows]
    columns = CATALOG_COLUMNS + ('verified', 'failures', 'mismatches',
                                 'margin_low', 'margin_high', 'inverse_q')
    table, lines = [], []
    for verdict in verdicts:
        row = dict(verdict['row'])
        margin = verdict['margin'] or {}
        row.update({'verified': verdict['verified'],
                    'failures': verdict['failures'],
                    'mismatches': verdict['mismatches'],
                    'margin_low': margin.get('low'),
                    'margin_high': margin.get('high'),
                    'inverse_q': margin.get('inverse_q')})
        table.append(row)
        state = "confirmed" if verdict['verified'] else "FAILED %s" % \
            ",".join(verdict['failures'] + verdict['mismatches'])
        lines.append([row['q'], row['x0'], row['p'], state])
        if jobber.job_logger is not None:
            jobber.job_logger.report("q=%s x0=%s: %s", row['q'], row['x0'],
                                     state)
    all_verified = all(v['verified'] for v in verdicts)
    document = {'catalog': command['catalog'] or 'known_cycles.json',
                'rows': table, 'verified': all_verified}
    return Rendering(document, columns, table, lines,
                     EXIT_OK if all_verified else EXIT_DOMAIN)


def _trivial_search(command, _jobber):
    found = cycles.search_trivial_cycles(command['total_parity'],
                                         command['q_max'], command['p_max'])
    rows = [{'q': q, 'p': p, 'g': list(g),
             'parity': cycles.GFunction(g, p).vector()}
            for q, p, g in found]
    document = {'P': command['total_parity'], 'q_max': command['q_max'],
                'p_max': command['p_max'], 'solutions': rows}
    lines = [[row['q'], row['p'], row['g']] for row in rows]
    return Rendering(document, ('q', 'p', 'g', 'parity'), rows, lines)


def _histogram(command, jobber, seeds_hi):
    """P_k histogram over n in [1, seeds_hi) or over sampled seeds."""
    q, k = Multiplier(command['q']), command['k']
    budget, size = command['enumeration_budget'], command['chunk_size']
    if command['mode'] == stats.SAMPLED:
        samples, seed = command['samples'], command['seed']
        parity.check_budget("sampled histogram", samples, budget)
        chunks = ChunkSplitter(0, samples, size).chunks((q.q, k, seed))
        counts = jobber.run('sampled', chunks, stats.merge_counts, None)
        return stats.MuHistogram(q, k, stats.SAMPLED, counts, seed=seed,
                                 seeds=samples)
    parity.check_budget("histogram over %s seeds" % (seeds_hi - 1),
                        seeds_hi - 1, budget)
    chunks = ChunkSplitter(1, seeds_hi, size).chunks((q.q, k))
    counts = jobber.run('hist', chunks, stats.merge_counts, None)
    mode = stats.EXHAUSTIVE if seeds_hi == 2 ** k + 1 else stats.RANGE
    return stats.MuHistogram(q, k, mode, counts, seeds=seeds_hi - 1)


def _stats_hist(command, jobber):
    histogram = _histogram(command, jobber, 2 ** command['k'] + 1)
    document = histogram.to_dict()
    document['moments'] = stats.mk_moments(command['k'])
    return Rendering(document, ('m', 'count'), histogram.rows(),
                     histogram.rows())


def _stats_density(command, jobber):
    q, k = Multiplier(command['q']), command['k']
    if q.q < 5:
        raise DomainError("density of divergent seeds is defined for "
                          "q >= 5, got q=%s" % q.q)
    sampled = command['mode'] == stats.SAMPLED
    histogram = _histogram(command, jobber,
                           None if sampled else command['t'] + 1)
    estimate = stats.DensityEstimate(
        histogram, command['samples'] if sampled else command['t'])
    document = estimate.to_dict()
    document['binomial_probability'] = stats.divergence_probability(q, k)
    row = dict((name, document.get(name)) for name in (
            'q', 'k', 't', 'count', 'total', 'fraction', 'chebyshev_bound',
            'binomial_probability'))
    line = "count=%s total=%s fraction=%.6f binomial=%.6f" % (
        estimate.count, estimate.total, float(estimate.fraction),
        float(document['binomial_probability']))
    if 'chebyshev_bound' in document:
        line += " chebyshev_bound=%.6f" % document['chebyshev_bound']
    return Rendering(document, tuple(row), [row], [line])


def _bounds_check(command, jobber):
    q, k = Multiplier(command['q']), command['steps']
    cap = command['size_cap_bits']
    exponent = trajectory.upper_bound_exponent(q)
    if command['n_max'] is not None:
        chunks = ChunkSplitter(1, command['n_max'] + 1,
                               command['chunk_size']).chunks((q.q,), (k, cap))
        result = jobber.run('bounds', chunks, trajectory.merge_bounds, None)
        document = dict(result, q=q.q, k=k, n_max=command['n_max'],
                        upper_bound_exponent=exponent)
        columns = ('n0', 'upper_violations', 'absorbed_at')
        rows = result['violating_seeds']
        lines = ["seeds=%s lower_violations=%s upper_violations=%s "
                 "beyond_absorption=%s capped=%s" % (
                     result['seeds'], result['lower_violations'],
                     result['upper_violations'],
                     result['beyond_absorption'], result['capped'])]
        status = EXIT_PARTIAL if result['capped'] else EXIT_OK
        return Rendering(document, columns, rows, lines, status)

    traj = trajectory.iterate(q, _seed(command), k, cap)
    report = trajectory.check_growth_bounds(q, traj)
    document = report.to_dict()
    document.update({'q': q.q, 'seed': int(traj.seed),
                     'capped': traj.capped,
                     'absorbed_at': trajectory.absorption_step(q, traj),
                     'upper_bound_exponent': exponent})
    row = dict((name, document[name]) for name in (
            'q', 'seed', 'k', 'lower_ok', 'upper_checked',
            'upper_violations', 'absorbed_at'))
    lines = ["lower_ok=%s upper_checked=%s upper_violations=%s" % (
            report.lower_ok, report.upper_checked,
            len(report.upper_violations))]
    return Rendering(document, tuple(row), [row], lines,
                     EXIT_PARTIAL if traj.capped else EXIT_OK)


def _verify_collatz(command, jobber):
    chunks = ChunkSplitter(1, command['max'] + 1,
                           command['chunk_size']).chunks((),
                                                         (command['step_cap'],))
    result = jobber.run('collatz', chunks, trajectory.merge_convergence, None)
    done = not result['unresolved']
    document = dict(result, max=command['max'],
                    step_cap=command['step_cap'], all_reached_one=done)
    row = dict((name, document[name]) for name in (
            'max', 'seeds', 'resolved', 'all_reached_one'))
    if done:
        lines = ["all reached 1"]
    else:
        lines = ["unresolved: %s" % " ".join(
                str(n) for n in result['unresolved'])]
    return Rendering(document, tuple(row), [row], lines,
                     EXIT_OK if done else EXIT_PARTIAL)


HANDLERS = {
    'orbit': _orbit,
    'parity': _parity,
    'seed-of': _seed_of,
    'cycles-search': _cycles_search,
    'cycles-verify': _cycles_verify,
    'trivial-search': _trivial_search,
    'stats-hist': _stats_hist,
    'stats-density': _stats_density,
    'bounds-check': _bounds_check,
    'verify-collatz': _verify_collatz,
}


def execute(command):
    """Run a Command; returns (exit status, rendered output)."""
    job_logger = None
    if command['job_log']:
        job_logger = logs.make_job_logger(command.job_id, command['log_dir'])
    try:
        jobber = Jobber.from_params(command.params, job_logger)
        rendering = HANDLERS[command.subcommand](command, jobber)
    except UsageError as e:
        return EXIT_USAGE, "qcollatz: usage error: %s\n" % e
    except BudgetExceeded as e:
        LOG.warning("%s", e)
        return EXIT_PARTIAL, "qcollatz: budget exceeded: %s\n" % e
    except (DomainError, CheckpointError, catalog.CatalogError) as e:
        return EXIT_DOMAIN, "qcollatz: error: %s\n" % e
    finally:
        if job_logger is not None:
            logs.close_job_logger(command.job_id)
    return rendering.status, rendering.render(command.output_format)


def main(argv=None):
    """Entry point of bin/qcollatz; returns the exit status."""
    if argv is None:
        argv = sys.argv[1:]
    try:
        command = parse(argv)
    except UsageError as e:
        sys.stderr.write("qcollatz: usage error: %s\n%s" % (e, USAGE))
        return EXIT_USAGE
    logs.init_logs(command['debug'])
    status, text = execute(command)
    if status in (EXIT_OK, EXIT_PARTIAL) and not text.startswith("qcollatz:"):
        sys.stdout.write(text)
    else:
        sys.stderr.write(text)
    return status
