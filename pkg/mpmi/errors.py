"""
Exceptions raised by mpmi and the exit codes of the command line scripts.
"""

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3

class MPMIError(ValueError):
    """
    Base class of all mpmi errors. `exit_code` is used by the scripts.
    """
    exit_code = EXIT_USAGE

class UsageError(MPMIError):
    pass

class NonSquareError(MPMIError):
    pass

class NonHermitianError(MPMIError):
    pass

class NegativeEigenvalueError(MPMIError):
    pass

class DimensionMismatchError(MPMIError):
    pass

class ShapeMismatchError(MPMIError):
    pass

class BadNormError(MPMIError):
    pass

class LengthMismatchError(MPMIError):
    pass

class BadShapeError(MPMIError):
    pass

class BadSubsystemSetError(MPMIError):
    pass

class BadArityError(MPMIError):
    pass

class BadParameterError(MPMIError):
    pass

class BadDistributionError(MPMIError):
    pass

class TooManyOutcomesError(MPMIError):
    pass

class BadRankError(MPMIError):
    pass

class BadCutError(MPMIError):
    pass

class SinglePartySystemError(MPMIError):
    pass

class BadKError(MPMIError):
    pass

class NotPureError(MPMIError):
    pass

class WrongArityError(MPMIError):
    pass

class InfiniteTermError(MPMIError):
    pass

class MeasureRangeError(MPMIError):
    """
    A correlation measure fell outside of its range by more than the clamping
    slack.
    """
    pass

class InvariantViolationError(MPMIError):
    """
    A matrix does not satisfy a density operator invariant.

    Parameters
    ----------
    invariant : str
        The violated invariant: 'finite', 'dimension', 'hermitian', 'trace'
        or 'positivity'.
    magnitude : float
        The measured violation.
    """
    exit_code = EXIT_INVARIANT

    def __init__(self, invariant, magnitude, msg=None):
        self.invariant = invariant
        self.magnitude = magnitude
        if msg is None:
            msg = ('density operator violates the {} invariant!'
                   ' (violation: {:.3e})'.format(invariant, magnitude))
        MPMIError.__init__(self, msg)

class StateParseError(MPMIError):
    """
    A state file could not be parsed. `lineno` and `col` are 1-based.
    """

    def __init__(self, msg, lineno, col=1, filename=None):
        self.lineno = lineno
        self.col = col
        self.filename = filename
        where = '{}:{}:{}'.format(filename or '<string>', lineno, col)
        MPMIError.__init__(self, '{}: {}'.format(where, msg))
