"""
Multipartite density operators: validation, partial traces, tensor products
and the state families used throughout mpmi.

Subsystems are labelled 1..n in all public interfaces.
"""
from functools import reduce
from math import prod

import numpy as np

from mpmi.errors import (InvariantViolationError, BadShapeError,
                         BadSubsystemSetError, BadNormError,
                         LengthMismatchError, BadArityError,
                         BadParameterError, BadDistributionError,
                         TooManyOutcomesError, BadRankError,
                         ShapeMismatchError)
from mpmi.linalg import hermitian_deviation, hermitian_eigvals

STATE_TOL = 1e-9
DISTRIBUTION_TOL = 1e-12

class SystemShape(tuple):
    """
    The ordered local dimensions d_1, ..., d_n of a multipartite system.
    """

    def __new__(cls, dims):
        if isinstance(dims, (int, np.integer)):
            dims = (dims,)

        dims = tuple(int(dim) for dim in dims)
        if not len(dims):
            raise BadShapeError('system shape must have at least one'
                                ' subsystem!')

        if min(dims) < 2:
            raise BadShapeError('local dimensions must be >= 2! ({})'
                                .format(dims))

        return tuple.__new__(cls, dims)

    @property
    def n(self):
        return len(self)

    @property
    def dim(self):
        return prod(self)

    def __repr__(self):
        return 'SystemShape({})'.format(tuple(self))

def make_subsystem_set(indices, n):
    """
    Validate 1-based subsystem labels and return them as a sorted tuple.
    """
    if isinstance(indices, (int, np.integer)):
        indices = (indices,)

    indices = [int(ii) for ii in indices]
    if not len(indices):
        raise BadSubsystemSetError('subsystem set must not be empty!')

    if len(set(indices)) != len(indices):
        raise BadSubsystemSetError('duplicate subsystems! ({})'
                                   .format(indices))

    if (min(indices) < 1) or (max(indices) > n):
        raise BadSubsystemSetError('subsystems must be in 1..{}! ({})'
                                   .format(n, indices))

    return tuple(sorted(indices))

def complement(indices, n):
    return tuple(ii for ii in range(1, n + 1) if ii not in indices)

def measure_violations(matrix, shape):
    """
    Return the measured violations of the density operator invariants as a
    dict (zero means satisfied).
    """
    dim = shape.dim
    if matrix.shape != (dim, dim):
        return {'dimension' : float(abs(matrix.shape[0] - dim)
                                    + abs(matrix.shape[-1] - dim))}

    if not np.all(np.isfinite(matrix)):
        return {'finite' : float(np.sum(~np.isfinite(matrix)))}

    out = {
        'hermitian' : hermitian_deviation(matrix),
        'trace' : abs(np.trace(matrix) - 1.0),
    }
    vals = hermitian_eigvals(matrix, tol=np.inf)
    out['positivity'] = max(-float(vals[-1]), 0.0)

    return out

class DensityOperator:
    """
    A Hermitian, positive semidefinite, unit-trace matrix on the tensor
    product of the subsystems given by `shape`.

    The invariants are checked on construction, within `tol`; the matrix is
    stored read-only. `factors` holds the single-party states of a product
    state built by :func:`tensor()`, otherwise None.
    """

    def __init__(self, matrix, shape, tol=STATE_TOL, factors=None):
        shape = SystemShape(shape)
        matrix = np.array(matrix, dtype=np.complex128)
        if matrix.ndim != 2:
            raise InvariantViolationError('dimension', float(matrix.ndim),
                                          'density matrix must be'
                                          ' two-dimensional!')

        for invariant, magnitude in measure_violations(matrix,
                                                       shape).items():
            if magnitude > tol:
                raise InvariantViolationError(invariant, magnitude)

        matrix.flags.writeable = False
        self.matrix = matrix
        self.shape = shape
        self.factors = factors

    @property
    def n(self):
        return self.shape.n

    @property
    def dim(self):
        return self.shape.dim

    def __repr__(self):
        return 'DensityOperator(shape={})'.format(tuple(self.shape))

def from_pure(shape, amplitudes, tol=STATE_TOL):
    """
    Return |psi><psi| for the state vector with the given `amplitudes`.
    """
    shape = SystemShape(shape)
    psi = np.asarray(amplitudes, dtype=np.complex128).ravel()
    if len(psi) != shape.dim:
        raise LengthMismatchError('expected {} amplitudes, got {}!'
                                  .format(shape.dim, len(psi)))

    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > tol:
        raise BadNormError('state vector norm must be 1! (norm: {:.12g})'
                           .format(norm))

    return DensityOperator(np.outer(psi, psi.conj()), shape)

def partial_trace(rho, keep):
    """
    Reduced state on the subsystems `keep` (1-based), in their original order.
    """
    keep = make_subsystem_set(keep, rho.n)
    if len(keep) == rho.n:
        return rho

    dims = list(rho.shape)
    n = rho.n
    ik = [ii - 1 for ii in keep]
    io = [ii for ii in range(n) if ii not in ik]
    dk = prod(dims[ii] for ii in ik)
    do = prod(dims[ii] for ii in io)

    arr = rho.matrix.reshape(dims + dims)
    arr = arr.transpose(ik + io + [n + ii for ii in ik]
                        + [n + ii for ii in io])
    reduced = np.trace(arr.reshape(dk, do, dk, do), axis1=1, axis2=3)

    return DensityOperator(reduced, [dims[ii] for ii in ik])

def trace_out(rho, remove):
    """
    Trace out the subsystems `remove` (1-based), i.e. the complement form of
    :func:`partial_trace()`.
    """
    remove = make_subsystem_set(remove, rho.n)
    keep = complement(remove, rho.n)
    if not len(keep):
        raise BadSubsystemSetError('cannot trace out all subsystems!')

    return partial_trace(rho, keep)

def marginals(rho):
    """
    The single-party reduced states rho_1, ..., rho_n.
    """
    return [partial_trace(rho, ii) for ii in range(1, rho.n + 1)]

def tensor(parts):
    """
    Tensor product of density operators, with the concatenated shape.
    """
    parts = list(parts)
    if not len(parts):
        raise BadArityError('tensor() needs at least one state!')

    matrix = reduce(np.kron, [part.matrix for part in parts])
    shape = sum((tuple(part.shape) for part in parts), ())

    factors = []
    for part in parts:
        if part.n == 1:
            factors.append(part)

        elif part.factors is not None:
            factors.extend(part.factors)

        else:
            factors = None
            break

    return DensityOperator(matrix, shape,
                           factors=None if factors is None else tuple(factors))

def maximally_mixed(shape):
    shape = SystemShape(shape)
    return DensityOperator(np.eye(shape.dim) / shape.dim, shape)

def ghz(n):
    """
    The n-qubit GHZ state (|0...0> + |1...1>) / sqrt(2).
    """
    if n < 2:
        raise BadArityError('GHZ state needs n >= 2! ({})'.format(n))

    psi = np.zeros(2**n)
    psi[0] = psi[-1] = 2**-0.5
    return from_pure((2,) * n, psi)

def bell():
    return ghz(2)

def w3():
    """
    The three-qubit W state (|001> + |010> + |100>) / sqrt(3).
    """
    psi = np.zeros(8)
    psi[[1, 2, 4]] = 3**-0.5
    return from_pure((2, 2, 2), psi)

def wghz_mixture(p):
    """
    p |W3><W3| + (1 - p) |GHZ3><GHZ3|, 0 <= p <= 1.
    """
    if not (0.0 <= p <= 1.0):
        raise BadParameterError('mixing parameter must be in [0, 1]! ({})'
                                .format(p))

    matrix = p * w3().matrix + (1.0 - p) * ghz(3).matrix
    return DensityOperator(matrix, (2, 2, 2))

def product_bell():
    """
    The state I/2 (x) Bell_23 without genuine three-partite correlation.
    """
    return tensor([maximally_mixed(2), bell()])

def classical_chi(probabilities, local_dims):
    """
    The perfectly correlated classical state sum_i p_i |i...i><i...i| in the
    computational bases, with one factor per entry of `local_dims`.
    """
    shape = SystemShape(local_dims)
    probs = np.asarray(probabilities, dtype=np.float64).ravel()
    if (not len(probs)) or np.any(probs < 0.0):
        raise BadDistributionError('probabilities must be nonnegative!'
                                   ' ({})'.format(probs))

    if abs(probs.sum() - 1.0) > DISTRIBUTION_TOL:
        raise BadDistributionError('probabilities must sum to 1! (sum: {!r})'
                                   .format(probs.sum()))

    if len(probs) > min(shape):
        raise TooManyOutcomesError('{} outcomes do not fit local dimensions'
                                   ' {}!'.format(len(probs), tuple(shape)))

    diag = np.zeros(shape.dim)
    for ii, prob in enumerate(probs):
        diag[np.ravel_multi_index((ii,) * shape.n, shape)] = prob

    return DensityOperator(np.diag(diag), shape)

def complex_gaussian(rng, size):
    return (rng.standard_normal(size)
            + 1j * rng.standard_normal(size)) / np.sqrt(2.0)

def random_pure(shape, seed):
    """
    Haar random pure state: a normalized complex Gaussian vector.

    `seed` is anything accepted by ``numpy.random.default_rng()``, including
    a Generator.
    """
    shape = SystemShape(shape)
    rng = np.random.default_rng(seed)
    psi = complex_gaussian(rng, shape.dim)
    return from_pure(shape, psi / np.linalg.norm(psi))

def random_mixed(shape, rank, seed):
    """
    Ginibre random mixed state G G^+ / tr(G G^+) with G of size D x `rank`.
    """
    shape = SystemShape(shape)
    if not (1 <= rank <= shape.dim):
        raise BadRankError('rank must be in 1..{}! ({})'
                           .format(shape.dim, rank))

    rng = np.random.default_rng(seed)
    gmat = complex_gaussian(rng, (shape.dim, rank))
    matrix = gmat @ gmat.conj().T
    return DensityOperator(matrix / np.trace(matrix).real, shape)

def random_product(shape, seed):
    """
    Product of full-rank Ginibre states, one per subsystem.
    """
    shape = SystemShape(shape)
    rng = np.random.default_rng(seed)
    return tensor([random_mixed(dim, dim, rng) for dim in shape])

def apply_local_channel(rho, kraus, party):
    """
    Apply the channel with Kraus operators `kraus` to the subsystem `party`
    (1-based): rho -> sum_k K_k rho K_k^+, K_k acting on `party` only.
    """
    (party,) = make_subsystem_set(party, rho.n)
    dim = rho.shape[party - 1]
    left = prod(rho.shape[:party - 1])
    right = prod(rho.shape[party:])

    matrix = np.zeros_like(rho.matrix)
    for kop in kraus:
        kop = np.asarray(kop, dtype=np.complex128)
        if kop.shape != (dim, dim):
            raise ShapeMismatchError('Kraus operator shape {} does not match'
                                     ' subsystem {} dimension {}!'
                                     .format(kop.shape, party, dim))

        full = np.kron(np.kron(np.eye(left), kop), np.eye(right))
        matrix += full @ rho.matrix @ full.conj().T

    return DensityOperator(matrix, rho.shape)
