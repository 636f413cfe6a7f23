#!/usr/bin/env python
"""
Sweep the mixture p |W3><W3| + (1 - p) |GHZ3><GHZ3| over a uniform grid of p
in [0, 1] and save the total correlation, the sum of the bipartite mutual
informations, their difference and the residual correlation as CSV.
"""
from argparse import ArgumentParser, RawDescriptionHelpFormatter
import sys

import numpy as np
import pandas as pd

from mpmi.base import output, run_main
from mpmi.errors import UsageError
from mpmi.correlations import retc, bipartite_mi_sum, residual_correlation
from mpmi.ioutils import write_csv, save_options, edit_filename
from mpmi.parallel import map_ordered
from mpmi.states import wghz_mixture
from mpmi.timing import Timer, get_timestamp

SWEEP_COLUMNS = ['p', 'retc', 'i2_sum', 'gap', 'residual']

def sweep_row(p):
    rho = wghz_mixture(p)
    value = retc(rho)
    i2_sum = bipartite_mi_sum(rho)
    return (p, value, i2_sum, value - i2_sum, residual_correlation(rho))

def sweep_wghz(steps, n_workers=1):
    """
    Return the sweep DataFrame with columns p, retc, i2_sum, gap, residual on
    the grid of `steps` points with spacing 1 / (steps - 1).
    """
    if steps < 2:
        raise UsageError('number of steps must be >= 2! ({})'.format(steps))

    ps = np.linspace(0.0, 1.0, steps)
    rows = map_ordered(sweep_row, ps, n_workers=n_workers, label='point')
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)

helps = {
    'steps' :
    'number of grid points including both endpoints [default: %(default)s]',
    'n_workers' :
    'the number of dask workers [default: %(default)s]',
    'out' :
    'output CSV file name, "-" means stdout [default: %(default)s]',
    'silent' :
    'do not print log messages to screen',
    'debug' :
    'automatically start debugger when an exception is raised',
}

def parse_args(args=None):
    parser = ArgumentParser(description=__doc__,
                            formatter_class=RawDescriptionHelpFormatter)
    parser.add_argument('--steps', type=int, metavar='int',
                        action='store', dest='steps',
                        default=101, help=helps['steps'])
    parser.add_argument('-n', '--n-workers', type=int, metavar='int',
                        action='store', dest='n_workers',
                        default=1, help=helps['n_workers'])
    parser.add_argument('-o', '--out', metavar='filename',
                        action='store', dest='out',
                        default='-', help=helps['out'])
    parser.add_argument('--silent',
                        action='store_false', dest='verbose',
                        default=True, help=helps['silent'])
    parser.add_argument('--debug',
                        action='store_true', dest='debug',
                        default=False, help=helps['debug'])
    options = parser.parse_args(args=args)

    if options.steps < 2:
        raise UsageError('--steps must be >= 2! ({})'.format(options.steps))

    return options

def run_sweep(options):
    output.prefix = 'sweep:'
    if options.out == '-':
        output.set_output(quiet=True)

    else:
        output.set_output(filename=edit_filename(options.out, suffix='-log',
                                                 new_ext='.txt'),
                          combined=options.verbose)

    output('sweeping {} mixing parameters...'.format(options.steps))
    with Timer('sweep') as timer:
        df = sweep_wghz(options.steps, n_workers=options.n_workers)
    output('...done in {:.2f} s'.format(timer.total))

    write_csv(options.out, df)
    if options.out != '-':
        save_options(edit_filename(options.out, suffix='-options',
                                   new_ext='.txt'),
                     [('options', vars(options)),
                      ('run', {'timestamp' : get_timestamp()})])
        output('sweep saved to', options.out)

    interior = df['gap'].iloc[1:-1]
    if len(interior):
        output('minimum interior gap: {:.6g}'.format(interior.min()))

def main(args=None):
    return run_main(parse_args, run_sweep, args=args)

if __name__ == '__main__':
    sys.exit(main())
