#!/usr/bin/env python
"""
Audit the entropy and correlation relations on a single state.

The state is a qstate file or a builtin name (ghz2..ghz6, w3, bell,
chi-uniform-2, product-bell, wghz:p=<value>, chi:p=[...],d=<dim>). The exit
code is 0 if all applicable checks are satisfied, 1 otherwise.
"""
from argparse import ArgumentParser, RawDescriptionHelpFormatter
import sys

from mpmi.base import output, run_main
from mpmi.errors import UsageError, EXIT_OK, EXIT_FAILURE
from mpmi.audit import audit_state, make_tolerances
from mpmi.catalog import get_state
from mpmi.formatting import format_report, report_frame
from mpmi.ioutils import write_csv

helps = {
    'tolerance_ineq' :
    'inequality tolerance in bits [default: %(default)s]',
    'tolerance_eq' :
    'equality tolerance in bits [default: %(default)s]',
    'saturation' :
    'near-saturation threshold in bits [default: %(default)s]',
    'oracle_samples' :
    """if > 0, also check that none of this many random product states is
       closer to the state than the product of its marginals
       [default: %(default)s]""",
    'seed' :
    'random seed of the product state oracle [default: %(default)s]',
    'format' :
    'report format on screen [default: %(default)s]',
    'out' :
    'if given, save the check results as CSV into this file',
    'silent' :
    'do not print log messages to screen',
    'debug' :
    'automatically start debugger when an exception is raised',
    'state' :
    'qstate file name or builtin state name',
}

def add_tolerance_args(parser):
    parser.add_argument('--tolerance-ineq', type=float, metavar='float',
                        action='store', dest='tolerance_ineq',
                        default=1e-8, help=helps['tolerance_ineq'])
    parser.add_argument('--tolerance-eq', type=float, metavar='float',
                        action='store', dest='tolerance_eq',
                        default=1e-7, help=helps['tolerance_eq'])
    parser.add_argument('--saturation', type=float, metavar='float',
                        action='store', dest='saturation',
                        default=1e-6, help=helps['saturation'])

def get_tolerances(options):
    for key in ('tolerance_ineq', 'tolerance_eq', 'saturation'):
        if getattr(options, key) < 0.0:
            raise UsageError('--{} must be >= 0!'
                             .format(key.replace('_', '-')))

    return make_tolerances(ineq=options.tolerance_ineq,
                           eq=options.tolerance_eq,
                           saturation=options.saturation)

def parse_args(args=None):
    parser = ArgumentParser(description=__doc__,
                            formatter_class=RawDescriptionHelpFormatter)
    add_tolerance_args(parser)
    parser.add_argument('--oracle-samples', type=int, metavar='int',
                        action='store', dest='oracle_samples',
                        default=0, help=helps['oracle_samples'])
    parser.add_argument('--seed', type=int, metavar='int',
                        action='store', dest='seed',
                        default=0, help=helps['seed'])
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
    parser.add_argument('state', help=helps['state'])
    options = parser.parse_args(args=args)

    options.tolerances = get_tolerances(options)
    if options.oracle_samples < 0:
        raise UsageError('--oracle-samples must be >= 0!')

    return options

def run_audit(options):
    output.prefix = 'audit:'
    output.set_output(quiet=(not options.verbose)
                      or (options.format == 'csv'))

    rho = get_state(options.state)
    if rho.n < 2:
        raise UsageError('audit needs at least two subsystems! (n: {})'
                         .format(rho.n))

    output('auditing {} with shape {}...'
           .format(options.state, tuple(rho.shape)))
    report = audit_state(rho, descriptor=options.state,
                         tolerances=options.tolerances,
                         oracle_samples=options.oracle_samples,
                         oracle_seed=options.seed)
    output('...done')

    if options.format == 'text':
        print(format_report(report))

    else:
        write_csv(None, report_frame(report))

    if options.out is not None:
        write_csv(options.out, report_frame(report))
        output('check results saved to', options.out)

    return EXIT_OK if report.all_satisfied() else EXIT_FAILURE

def main(args=None):
    return run_main(parse_args, run_audit, args=args)

if __name__ == '__main__':
    sys.exit(main())
