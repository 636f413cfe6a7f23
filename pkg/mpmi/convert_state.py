#!/usr/bin/env python
"""
Print a state given by a qstate file or a builtin name as an aligned matrix
together with its shape and the measured invariant violations, or write it
into a qstate file.
"""
from argparse import ArgumentParser, RawDescriptionHelpFormatter
import sys

from mpmi.base import output, run_main
from mpmi.catalog import get_state
from mpmi.formatting import format_float, format_matrix
from mpmi.ioutils import save_state, dumps_state
from mpmi.states import measure_violations

helps = {
    'format' :
    'screen format: aligned matrix or qstate text [default: %(default)s]',
    'precision' :
    'number of digits of the aligned matrix [default: %(default)s]',
    'comment' :
    'comment line stored in the qstate file',
    'out' :
    'if given, save the state as a qstate file',
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
    parser.add_argument('--format', action='store', dest='format',
                        choices=['text', 'qstate'],
                        default='text', help=helps['format'])
    parser.add_argument('--precision', type=int, metavar='int',
                        action='store', dest='precision',
                        default=6, help=helps['precision'])
    parser.add_argument('--comment', metavar='str',
                        action='store', dest='comment',
                        default=None, help=helps['comment'])
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

    return options

def format_state(rho, prec=6):
    lines = ['shape: {}'.format(tuple(rho.shape))]
    violations = measure_violations(rho.matrix, rho.shape)
    lines.extend('{}: {}'.format(key, format_float(val, 3))
                 for key, val in violations.items())
    lines.append(format_matrix(rho.matrix, prec=prec))
    return '\n'.join(lines)

def run_convert(options):
    output.prefix = 'convert:'
    output.set_output(quiet=(not options.verbose)
                      or ((options.out is None)
                          and (options.format == 'qstate')))

    rho = get_state(options.state)
    comment = options.state if options.comment is None else options.comment

    if options.out is not None:
        save_state(options.out, rho, comment=comment)
        output('state {} saved to {}'.format(options.state, options.out))

    elif options.format == 'qstate':
        sys.stdout.write(dumps_state(rho, comment=comment))

    else:
        print(format_state(rho, prec=options.precision))

def main(args=None):
    return run_main(parse_args, run_convert, args=args)

if __name__ == '__main__':
    sys.exit(main())
