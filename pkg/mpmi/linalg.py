"""
Dense complex matrix kernel: Hermitian eigendecomposition, operator functions,
Kronecker products and traces.

Matrices are plain two-dimensional numpy arrays; all functions are pure and
never modify their arguments.
"""
from functools import reduce

import numpy as np

from mpmi.base import Struct
from mpmi.errors import (NonSquareError, NonHermitianError,
                         NegativeEigenvalueError, DimensionMismatchError)

HERMITIAN_TOL = 1e-9
ZERO_THRESHOLD = 1e-12

class Spectrum(Struct):
    """
    Eigenvalues sorted in descending order and the unitary matrix of the
    corresponding eigenvectors (columns).
    """

    def __init__(self, eigenvalues, eigenvectors):
        Struct.__init__(self, eigenvalues=eigenvalues,
                        eigenvectors=eigenvectors)

    def reconstruct(self):
        vecs = self.eigenvectors
        return (vecs * self.eigenvalues) @ vecs.conj().T

def as_matrix(mtx, name='matrix'):
    """
    Return `mtx` as a finite two-dimensional complex array.
    """
    mtx = np.asarray(mtx, dtype=np.complex128)
    if mtx.ndim != 2:
        raise DimensionMismatchError('{} must be two-dimensional! (ndim: {})'
                                     .format(name, mtx.ndim))

    if not np.all(np.isfinite(mtx)):
        raise DimensionMismatchError('{} has non-finite entries!'
                                     .format(name))

    return mtx

def check_square(mtx):
    if mtx.shape[0] != mtx.shape[1]:
        raise NonSquareError('matrix is not square! (shape: {})'
                             .format(mtx.shape))

def hermitian_deviation(mtx):
    """
    Return the max-abs entrywise deviation of `mtx` from its adjoint.
    """
    return float(np.max(np.abs(mtx - mtx.conj().T))) if mtx.size else 0.0

def _symmetrized(mtx, tol):
    mtx = as_matrix(mtx)
    check_square(mtx)
    dev = hermitian_deviation(mtx)
    if dev > tol:
        raise NonHermitianError('matrix is not Hermitian!'
                                ' (max deviation: {:.3e})'.format(dev))

    return 0.5 * (mtx + mtx.conj().T)

def hermitian_eig(mtx, tol=HERMITIAN_TOL):
    """
    Eigendecomposition of a Hermitian matrix.

    The eigenvalues are sorted in descending order; ties keep the order of
    the solver.

    Parameters
    ----------
    mtx : array_like
        The square matrix, Hermitian within `tol` (max-abs).
    tol : float
        The symmetry tolerance.

    Returns
    -------
    spectrum : Spectrum
        The eigenvalues and eigenvectors.
    """
    herm = _symmetrized(mtx, tol)
    vals, vecs = np.linalg.eigh(herm)
    ii = np.argsort(-vals, kind='stable')

    return Spectrum(vals[ii], vecs[:, ii])

def hermitian_eigvals(mtx, tol=HERMITIAN_TOL):
    """
    Descending eigenvalues of a Hermitian matrix, see :func:`hermitian_eig()`.
    """
    herm = _symmetrized(mtx, tol)
    return np.linalg.eigvalsh(herm)[::-1]

def matrix_function(spectrum, fun):
    """
    Apply the scalar function `fun` to the operator with the given spectrum:
    f(O) = sum_i f(o_i) |o_i><o_i|. `fun` is called with the eigenvalue
    array.
    """
    vecs = spectrum.eigenvectors
    vals = np.asarray(fun(spectrum.eigenvalues))
    return (vecs * vals) @ vecs.conj().T

def matrix_log2(spectrum, zero_threshold=ZERO_THRESHOLD):
    """
    Base-2 logarithm of the operator with the given spectrum.

    Eigenvalues not larger than `zero_threshold` map to zero (the 0 log 0 = 0
    convention applied at the operator level).
    """
    vals = spectrum.eigenvalues
    if len(vals) and (vals.min() < -zero_threshold):
        raise NegativeEigenvalueError('negative eigenvalue! ({:.3e})'
                                      .format(vals.min()))

    def log2_or_zero(vals):
        out = np.zeros_like(vals)
        ii = vals > zero_threshold
        out[ii] = np.log2(vals[ii])
        return out

    return matrix_function(spectrum, log2_or_zero)

def kron(a, b, *others):
    """
    Kronecker product of two or more matrices.
    """
    mtxs = [as_matrix(mtx) for mtx in (a, b) + others]
    return reduce(np.kron, mtxs)

def trace(mtx):
    mtx = as_matrix(mtx)
    check_square(mtx)
    return complex(np.trace(mtx))

def frobenius_distance(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError('matrix shapes differ! ({} != {})'
                                     .format(a.shape, b.shape))

    return float(np.linalg.norm(a - b))

def max_abs_distance(a, b):
    return float(np.max(np.abs(as_matrix(a) - as_matrix(b))))
