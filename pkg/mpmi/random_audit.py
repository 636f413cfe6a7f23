#!/usr/bin/env python
"""
Audit the entropy and correlation relations on an ensemble of seeded random
states and report the worst margin of each check.

The exit code is 0 if the minimum margins of all checks are within the
tolerances, 1 otherwise.
"""
from argparse import ArgumentParser, RawDescriptionHelpFormatter
import sys

from mpmi.base import output, run_main
from mpmi.errors import UsageError, EXIT_OK, EXIT_FAILURE
from mpmi.audit import (make_ensemble_config, run_ensemble,
                        ENSEMBLE_FAMILIES)
from mpmi.audit_state import add_tolerance_args, get_tolerances
from mpmi.formatting import format_float
from mpmi.ioutils import write_csv, save_options, edit_filename
from mpmi.parsing import parse_as_list
from mpmi.timing import get_timestamp

helps = {
    'shape' :
    'comma separated local dimensions [default: %(default)s]',
    'family' :
    """random state family: Ginibre mixed states, Haar pure states or
       classically correlated states with random distributions
       [default: %(default)s]""",
    'rank' :
    'rank of the Ginibre states [default: full]',
    'samples' :
    'number of random states [default: %(default)s]',
    'seed' :
    'random seed [default: %(default)s]',
    'n_workers' :
    'the number of dask workers [default: %(default)s]',
    'format' :
    'summary format on screen [default: %(default)s]',
    'out' :
    'if given, save the summary of worst margins as CSV into this file',
    'silent' :
    'do not print log messages to screen',
    'debug' :
    'automatically start debugger when an exception is raised',
}

def parse_args(args=None):
    parser = ArgumentParser(description=__doc__,
                            formatter_class=RawDescriptionHelpFormatter)
    parser.add_argument('--shape', metavar='d1,d2,...',
                        action='store', dest='shape',
                        default='2,2,2', help=helps['shape'])
    parser.add_argument('--family', action='store', dest='family',
                        choices=ENSEMBLE_FAMILIES,
                        default='ginibre', help=helps['family'])
    parser.add_argument('--rank', type=int, metavar='int',
                        action='store', dest='rank',
                        default=None, help=helps['rank'])
    parser.add_argument('--samples', type=int, metavar='int',
                        action='store', dest='samples',
                        default=1000, help=helps['samples'])
    parser.add_argument('--seed', type=int, metavar='int',
                        action='store', dest='seed',
                        default=0, help=helps['seed'])
    add_tolerance_args(parser)
    parser.add_argument('-n', '--n-workers', type=int, metavar='int',
                        action='store', dest='n_workers',
                        default=1, help=helps['n_workers'])
    parser.add_argument('--format', action='store', dest='format',
                        choices=['text', 'csv'],
                        default='text', help=helps['format'])
    parser.add_argument('-o', '--out', metavar='filename',
                        action='store', dest='out',
                        default=None, help=helps['out'])
    parser.add_argument('--silent',
                        action='store_false', dest='verbose',
                        default=True, help=helps['silent'])
    parser.add_argument('--debug',
                        action='store_true', dest='debug',
                        default=False, help=helps['debug'])
    options = parser.parse_args(args=args)

    options.shape = parse_as_list(options.shape)
    if not (len(options.shape)
            and all(isinstance(dim, int) for dim in options.shape)):
        raise UsageError('--shape must be a list of integers! ({})'
                         .format(options.shape))

    if options.samples < 1:
        raise UsageError('--samples must be >= 1! ({})'
                         .format(options.samples))

    options.tolerances = get_tolerances(options)

    return options

def run_random_audit(options):
    output.prefix = 'random:'
    screen = options.verbose and (options.format != 'csv')
    if options.out is None:
        output.set_output(quiet=not screen)

    else:
        output.set_output(filename=edit_filename(options.out, suffix='-log',
                                                 new_ext='.txt'),
                          combined=screen)

    config = make_ensemble_config(options.shape, options.samples,
                                  options.seed, family=options.family,
                                  rank=options.rank,
                                  tolerances=options.tolerances,
                                  n_workers=options.n_workers)
    summary = run_ensemble(config)

    if options.format == 'text':
        view = summary.copy()
        view['min_margin'] = [format_float(val) for val in view['min_margin']]
        print('ensemble: {} {} states of shape {}, seed {}'
              .format(config.samples, config.family, config.shape,
                      config.seed))
        print(view.to_string(index=False))
        if len(config.shape) != 3:
            print('note: three-party checks skipped (n = {})'
                  .format(len(config.shape)))

    else:
        write_csv(None, summary)

    if options.out is not None:
        write_csv(options.out, summary)
        save_options(edit_filename(options.out, suffix='-options',
                                   new_ext='.txt'),
                     [('options', vars(options)),
                      ('run', {'timestamp' : get_timestamp()})])
        output('summary saved to', options.out)

    ok = bool(summary['satisfied'].all())
    output('all minimum margins within tolerance:', 'yes' if ok else 'no')

    return EXIT_OK if ok else EXIT_FAILURE

def main(args=None):
    return run_main(parse_args, run_random_audit, args=args)

if __name__ == '__main__':
    sys.exit(main())
