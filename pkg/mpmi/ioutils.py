import sys
import os

import numpy as np

from mpmi.base import ordered_iteritems
from mpmi.errors import StateParseError
from mpmi.parsing import (qstate_header, qstate_dims, qstate_row,
                          parse_line)
from mpmi.states import DensityOperator

QSTATE_HEADER = 'qstate v1'

def ensure_path(filename):
    """
    Check if path to `filename` exists and if not, create the necessary
    intermediate directories.
    """
    dirname = os.path.dirname(filename)
    if dirname:
        if not os.path.exists(dirname):
            os.makedirs(dirname)

        if not os.path.isdir(dirname):
            raise IOError('cannot ensure path for "%s"!' % filename)

def edit_filename(filename, prefix='', suffix='', new_dir=None, new_ext=None):
    """
    Edit a file name by adding a prefix, by inserting a suffix in front of the
    extension or by replacing the extension.
    """
    path, filename = os.path.split(filename)
    base, ext = os.path.splitext(filename)

    new_filename = prefix + base + suffix + (ext if new_ext is None
                                             else new_ext)

    return os.path.join(path if new_dir is None else new_dir, new_filename)

def save_options(filename, options_groups, save_command_line=True):
    """
    Save groups of options/parameters into a file.

    Each option group has to be a sequence with two items: the group name and
    the options in ``{key : value}`` form.
    """
    with open(filename, 'w', newline='\n') as fd:
        if save_command_line:
            fd.write('command line\n')
            fd.write('------------\n\n')
            fd.write(' '.join('"%s"' % ii for ii in sys.argv) + '\n')

        for name, options in options_groups:
            fd.write('\n%s\n' % name)
            fd.write(('-' * len(name)) + '\n\n')
            for key, val in ordered_iteritems(options):
                fd.write('%s: %s\n' % (key, val))

def format_entry(val):
    """
    Format a complex matrix entry as 're,im' with 17 significant digits.
    """
    # Adding 0.0 turns negative zeros into zeros.
    return '{:.17g},{:.17g}'.format(val.real + 0.0, val.imag + 0.0)

def dumps_state(rho, comment=None):
    """
    Return the qstate text of `rho`.
    """
    lines = [QSTATE_HEADER]
    if comment:
        lines.extend('# ' + line for line in comment.splitlines())

    lines.append('dims: ' + ' '.join(str(dim) for dim in rho.shape))
    lines.extend(' '.join(format_entry(val) for val in row)
                 for row in rho.matrix)
    return '\n'.join(lines) + '\n'

def save_state(filename, rho, comment=None):
    ensure_path(filename)
    with open(filename, 'w', newline='\n') as fd:
        fd.write(dumps_state(rho, comment=comment))

def loads_state(text, filename=None):
    """
    Parse qstate `text` and return the validated DensityOperator.

    Raises
    ------
    StateParseError
        With the line and column of the failure.
    InvariantViolationError
        When the parsed matrix is not a density operator.
    """
    lines = [(ii + 1, line) for ii, line in enumerate(text.splitlines())
             if line.strip() and not line.lstrip().startswith('#')]

    def parse(element, lineno, line, what):
        toks, col, msg = parse_line(element, line)
        if toks is None:
            raise StateParseError('invalid {}: {}'.format(what, msg),
                                  lineno, col, filename)
        return toks

    if not len(lines):
        raise StateParseError('empty state file', 1, 1, filename)

    parse(qstate_header, *lines[0], what='header')
    if len(lines) < 2:
        raise StateParseError('missing dims line', lines[0][0] + 1, 1,
                              filename)

    dims = parse(qstate_dims, *lines[1], what='dims line')
    if min(dims) < 2:
        raise StateParseError('local dimensions must be >= 2', lines[1][0],
                              1, filename)

    dim = int(np.prod(dims))
    rows = lines[2:]
    if len(rows) != dim:
        lineno = rows[-1][0] + 1 if len(rows) else lines[1][0] + 1
        raise StateParseError('expected {} matrix rows, got {}'
                              .format(dim, len(rows)), lineno, 1, filename)

    matrix = np.empty((dim, dim), dtype=np.complex128)
    for ir, (lineno, line) in enumerate(rows):
        row = parse(qstate_row, lineno, line, what='matrix row')
        if len(row) != dim:
            raise StateParseError('expected {} entries, got {}'
                                  .format(dim, len(row)), lineno, 1,
                                  filename)
        matrix[ir] = row

    return DensityOperator(matrix, dims)

def load_state(filename):
    with open(filename, 'r') as fd:
        text = fd.read()

    return loads_state(text, filename=filename)

def write_csv(filename, df, float_format='%.17g'):
    """
    Write `df` as CSV with '.' decimals and '\\n' line endings; `filename`
    None or '-' means stdout.
    """
    if filename in (None, '-'):
        sys.stdout.write(df.to_csv(index=False, float_format=float_format,
                                   lineterminator='\n'))
        return

    ensure_path(filename)
    df.to_csv(filename, index=False, float_format=float_format,
              lineterminator='\n')
