import os
import sys

from mpmi.errors import MPMIError, EXIT_OK

class AttrDict(dict):
    """
    A dict with the attribute access to its items.
    """

    def __getattr__(self, name):
        try:
            return self[name]

        except KeyError:
            raise AttributeError(name)

    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__

    def __str__(self):
        if self.keys():
            return '\n'.join(
                [self.__class__.__name__ + ':'] +
                self.format_items()
            )

        else:
            return self.__class__.__name__

    def __repr__(self):
        return self.__class__.__name__

    def __dir__(self):
        return list(self.keys())

    def copy(self):
        return type(self)(self)

    def format_items(self):
        num = max(map(len, list(self.keys()))) + 1
        return [key.rjust(num) + ': ' + repr(val)
                for key, val in sorted(self.items())]

class Struct(AttrDict):
    pass

class Output(Struct):
    """
    Prefixed message printing to screen and/or into a log file.

    A message ending with '...' indents the following messages, a message
    starting with '...' removes one indentation level.
    """

    def __init__(self, prefix, filename=None, quiet=False, combined=False):
        Struct.__init__(self, prefix=prefix)
        self.set_output(filename=filename, quiet=quiet, combined=combined)

    def __call__(self, *args, **kwargs):
        """
        Print `args` separated by spaces. No output with `verbose=False`.
        """
        if not kwargs.get('verbose', True):
            return

        msg = ' '.join(str(arg) for arg in args)
        if msg.startswith('...'):
            self.level = max(self.level - 1, 0)

        line = self.get_prefix() + msg
        if self.to_screen:
            print(line)

        if self.filename is not None:
            with open(self.filename, 'a') as fd:
                print(line, file=fd)

        if msg.endswith('...'):
            self.level += 1

    def get_prefix(self):
        indent = '  ' * self.level
        return (self.prefix + ' ' + indent) if len(self.prefix) else indent

    def set_output(self, filename=None, quiet=False, combined=False):
        """
        Set the output mode.

        Parameters
        ----------
        filename : str, optional
            If given, log the messages into the file, overwriting it.
        quiet : bool
            Do not print anything to screen.
        combined : bool
            With `filename`, print both on screen and into the file.
        """
        self.level = 0
        self.filename = filename
        self.to_screen = (not quiet) and ((filename is None) or combined)

        if filename is not None:
            dirname = os.path.dirname(filename)
            if dirname and not os.path.exists(dirname):
                os.makedirs(dirname)

            open(filename, 'w').close()

output = Output('mpmi:')

def ordered_iteritems(adict):
    keys = sorted(adict.keys())
    for key in keys:
        yield key, adict[key]

def debug_on_error():
    """
    Start the post-mortem debugger at the line where an exception was raised.
    """
    def except_hook(etype, value, tb):
        if hasattr(sys, 'ps1') or not sys.stderr.isatty():
            sys.__excepthook__(etype, value, tb)

        else:
            import traceback, pdb
            traceback.print_exception(etype, value, tb)
            print()
            pdb.post_mortem(tb)

    sys.excepthook = except_hook

def report_error(*args):
    """
    Print an error message with the current prefix to stderr, regardless of
    the output mode.
    """
    print(output.get_prefix() + ' '.join(str(arg) for arg in args),
          file=sys.stderr)

def run_main(parse_args, run, args=None):
    """
    Parse command line `args` and call `run(options)`, mapping mpmi errors
    to exit codes. With the `--debug` option, errors propagate.
    """
    try:
        options = parse_args(args=args)

    except MPMIError as exc:
        report_error('usage error:', exc)
        return exc.exit_code

    if getattr(options, 'debug', False):
        debug_on_error()
        status = run(options)

    else:
        try:
            status = run(options)

        except MPMIError as exc:
            report_error('{}: {}'.format(exc.__class__.__name__, exc))
            return exc.exit_code

        except OSError as exc:
            report_error('IO error:', exc)
            return MPMIError.exit_code

    return EXIT_OK if status is None else status
