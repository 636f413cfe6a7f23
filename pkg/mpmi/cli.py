#!/usr/bin/env python
"""
mpmi command line: dispatch to the subcommand scripts.

Run ``mpmi <subcommand> -h`` for the options of a subcommand.
"""
from argparse import ArgumentParser, RawDescriptionHelpFormatter, REMAINDER
import sys

from mpmi.base import run_main
from mpmi.version import __version__
from mpmi import (audit_state, print_measures, sweep_wghz, random_audit,
                  convert_state)

subcommands = {
    'audit' : audit_state,
    'measures' : print_measures,
    'sweep-wghz' : sweep_wghz,
    'random-audit' : random_audit,
    'convert' : convert_state,
}

helps = {
    'subcommand' :
    'the subcommand to run',
    'args' :
    'the subcommand arguments',
}

def parse_args(args=None):
    parser = ArgumentParser(description=__doc__,
                            formatter_class=RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('subcommand', choices=sorted(subcommands),
                        help=helps['subcommand'])
    parser.add_argument('args', nargs=REMAINDER, help=helps['args'])
    options = parser.parse_args(args=args)

    return options

def run_subcommand(options):
    return subcommands[options.subcommand].main(args=options.args)

def main(args=None):
    try:
        return run_main(parse_args, run_subcommand, args=args)

    except SystemExit as exc:
        # argparse exits with 2 on bad usage and 0 on --help/--version.
        return exc.code

if __name__ == '__main__':
    sys.exit(main())
