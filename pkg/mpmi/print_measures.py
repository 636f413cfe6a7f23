#!/usr/bin/env python
"""
Print the correlation measures of a state: entropies, the total correlation
I, the sums I_{n-k} of the (n-k)-partite total correlations, the sums S_k of
the k-partite entropies and, for three parties, the residual correlation I_r.
"""
from argparse import ArgumentParser, RawDescriptionHelpFormatter
import sys

import pandas as pd

from mpmi.base import output, run_main
from mpmi.errors import BadKError
from mpmi.catalog import get_state
from mpmi.correlations import correlation_profile
from mpmi.formatting import format_profile, profile_rows
from mpmi.ioutils import write_csv
from mpmi.parsing import parse_as_list

helps = {
    'k' :
    """comma separated k values of I_{n-k} (1 <= k <= n-2) and S_k
       (1 <= k <= n-1) to show [default: all]""",
    'format' :
    'output format [default: %(default)s]',
    'silent' :
    'do not print log messages to screen',
    'debug' :
    'automatically start debugger when an exception is raised',
    'state' :
    'qstate file name or builtin state name',
}

def parse_args(args=None):
    parser = ArgumentParser(description=__doc__,
                            formatter_class=RawDescriptionHelpFormatter)
    parser.add_argument('-k', '--k', metavar='k[,k,...]',
                        action='store', dest='k',
                        default=None, help=helps['k'])
    parser.add_argument('--format', action='store', dest='format',
                        choices=['text', 'csv'],
                        default='text', help=helps['format'])
    parser.add_argument('--silent',
                        action='store_false', dest='verbose',
                        default=True, help=helps['silent'])
    parser.add_argument('--debug',
                        action='store_true', dest='debug',
                        default=False, help=helps['debug'])
    parser.add_argument('state', help=helps['state'])
    options = parser.parse_args(args=args)

    options.k = parse_as_list(options.k)

    return options

def select_k(profile, ks):
    """
    Restrict the I_{n-k} and S_k entries of `profile` to `ks`.
    """
    n = profile.n
    for k in ks:
        if not (isinstance(k, int) and (1 <= k <= n - 1)):
            raise BadKError('k must be in 1..{} for n = {}! (k: {})'
                            .format(n - 1, n, k))

    profile = profile.copy()
    profile.marginal_mi_sums = {k : val
                                for k, val in profile.marginal_mi_sums.items()
                                if k in ks}
    profile.marginal_entropy_sums = {
        k : val for k, val in profile.marginal_entropy_sums.items()
        if k in ks
    }
    return profile

def run_measures(options):
    output.prefix = 'measures:'
    output.set_output(quiet=(not options.verbose)
                      or (options.format == 'csv'))

    rho = get_state(options.state)
    output('state {} with shape {}'.format(options.state, tuple(rho.shape)))
    profile = correlation_profile(rho)
    if len(options.k):
        profile = select_k(profile, options.k)

    if options.format == 'text':
        print(format_profile(profile))

    else:
        write_csv(None, pd.DataFrame(profile_rows(profile),
                                     columns=['measure', 'bits']))

def main(args=None):
    return run_main(parse_args, run_measures, args=args)

if __name__ == '__main__':
    sys.exit(main())
