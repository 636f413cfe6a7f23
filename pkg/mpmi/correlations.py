"""
Entropies and total correlation measures of multipartite states, in bits.

All measures are computed from eigenvalues. Values that should be
nonnegative are clamped to zero when they fall below zero by no more than
the clamping slack, otherwise :class:`MeasureRangeError` is raised.
"""
from itertools import combinations
from math import factorial, prod

import numpy as np

from mpmi.base import Struct
from mpmi.errors import (ShapeMismatchError, BadCutError, BadKError,
                         SinglePartySystemError, NotPureError,
                         WrongArityError, InfiniteTermError,
                         MeasureRangeError)
from mpmi.linalg import hermitian_eig, hermitian_eigvals, ZERO_THRESHOLD
from mpmi.states import (partial_trace, marginals, tensor,
                         make_subsystem_set, complement)

CLAMP_SLACK = 1e-9
RESIDUAL_SLACK = 1e-8
PURITY_TOL = 1e-8
# Minimal weight of rho in an eigenspace of sigma that counts as support.
WEIGHT_THRESHOLD = 1e-10

# The marker of an infinite relative entropy.
INFINITE = np.inf

def clamp(value, name, lower=0.0, upper=None, slack=CLAMP_SLACK):
    """
    Clamp `value` into [lower, upper], tolerating violations up to `slack`.
    """
    if value < lower - slack:
        raise MeasureRangeError('{} below {}! ({!r})'
                                .format(name, lower, value))

    if upper is not None:
        if value > upper + slack:
            raise MeasureRangeError('{} above {}! ({!r})'
                                    .format(name, upper, value))
        value = min(value, upper)

    return max(value, lower)

def _entropy_of(vals, zero_threshold=ZERO_THRESHOLD):
    vals = vals[vals > zero_threshold]
    return float(-np.sum(vals * np.log2(vals)))

def shannon_entropy(probabilities):
    """
    Shannon entropy in bits of a probability vector, 0 log 0 = 0.
    """
    return _entropy_of(np.asarray(probabilities, dtype=np.float64), 0.0)

def von_neumann_entropy(rho):
    """
    S(rho) = -tr(rho log2 rho), clamped into [0, log2 D].
    """
    value = _entropy_of(hermitian_eigvals(rho.matrix))
    return clamp(value, 'entropy', upper=np.log2(rho.dim))

def relative_entropy(rho, sigma, zero_threshold=ZERO_THRESHOLD,
                     weight_threshold=WEIGHT_THRESHOLD):
    """
    Quantum relative entropy S(rho||sigma) = tr(rho log2 rho)
    - tr(rho log2 sigma).

    When `sigma` is a product state with known factors (see
    :func:`mpmi.states.tensor()`), tr(rho log2 (x)sigma_s) is computed as
    sum_s tr(rho_s log2 sigma_s), so that the support of each marginal is
    tested against the spectrum of its own factor.

    Returns
    -------
    value : float
        The relative entropy in bits, or :data:`INFINITE` when the support of
        `rho` is not contained in the support of `sigma`.
    """
    if tuple(rho.shape) != tuple(sigma.shape):
        raise ShapeMismatchError('state shapes differ! ({} != {})'
                                 .format(tuple(rho.shape),
                                         tuple(sigma.shape)))

    if sigma.factors is not None:
        cross = sum(_cross_entropy(marginal, factor, zero_threshold,
                                   weight_threshold)
                    for marginal, factor in zip(marginals(rho),
                                                sigma.factors))

    else:
        cross = _cross_entropy(rho, sigma, zero_threshold, weight_threshold)

    if not np.isfinite(cross):
        return INFINITE

    neg_entropy = -_entropy_of(hermitian_eigvals(rho.matrix))
    return clamp(neg_entropy - cross, 'relative entropy')

def _cross_entropy(rho, sigma, zero_threshold, weight_threshold):
    """
    tr(rho log2 sigma), or -:data:`INFINITE` when the support of `rho` is not
    contained in the support of `sigma`.
    """
    spectrum = hermitian_eig(sigma.matrix)
    vecs = spectrum.eigenvectors
    vals = spectrum.eigenvalues
    # Weights of rho in the eigenbasis of sigma.
    weights = np.einsum('ji,jk,ki->i', vecs.conj(), rho.matrix, vecs).real

    inside = vals > zero_threshold
    if np.any(weights[~inside] > weight_threshold):
        return -INFINITE

    return float(np.sum(weights[inside] * np.log2(vals[inside])))

def mutual_information(rho, cut):
    """
    Bipartite mutual information S(rho_cut) + S(rho_rest) - S(rho) across the
    bipartition given by the subsystems `cut` (1-based) and its complement.
    """
    try:
        cut = make_subsystem_set(cut, rho.n)

    except ValueError as exc:
        raise BadCutError(str(exc))

    rest = complement(cut, rho.n)
    if not len(rest):
        raise BadCutError('cut must be a proper subset of 1..{}! ({})'
                          .format(rho.n, cut))

    value = (von_neumann_entropy(partial_trace(rho, cut))
             + von_neumann_entropy(partial_trace(rho, rest))
             - von_neumann_entropy(rho))
    return clamp(value, 'mutual information')

def retc(rho):
    """
    Relative entropy of total correlation sum_s S(rho_s) - S(rho).
    """
    if rho.n < 2:
        raise SinglePartySystemError('total correlation needs at least two'
                                     ' subsystems!')

    value = (sum(von_neumann_entropy(marginal) for marginal in marginals(rho))
             - von_neumann_entropy(rho))
    return clamp(value, 'total correlation')

def _check_k(k, n, kmax, what):
    if not (1 <= k <= kmax):
        raise BadKError('{} needs k in 1..{} for n = {}! (k: {})'
                        .format(what, kmax, n, k))

def marginal_mi_sum(rho, k):
    """
    Sum of the total correlations of all (n - k)-partite reductions,
    1 <= k <= n - 2.
    """
    _check_k(k, rho.n, rho.n - 2, 'sum of reduced mutual informations')
    return sum(retc(partial_trace(rho, keep))
               for keep in combinations(range(1, rho.n + 1), rho.n - k))

def marginal_entropy_sum(rho, k):
    """
    Sum of the entropies of all k-partite reductions, 1 <= k <= n - 1.
    """
    _check_k(k, rho.n, rho.n - 1, 'sum of reduced entropies')
    return sum(von_neumann_entropy(partial_trace(rho, keep))
               for keep in combinations(range(1, rho.n + 1), k))

def bipartite_mi_sum(rho):
    """
    Sum of the mutual informations of the two-party reductions of a
    three-party state.
    """
    if rho.n != 3:
        raise WrongArityError('bipartite sum needs three subsystems! (n: {})'
                              .format(rho.n))

    return marginal_mi_sum(rho, 1)

def pure_distribution_rhs(rho, k):
    """
    k! (I_{n-k} + S_k) / prod_{i=1}^k (n - i): equal to the total correlation
    of a pure state for every 1 <= k <= n - 2.
    """
    _check_k(k, rho.n, rho.n - 2, 'pure state distribution')
    entropy = von_neumann_entropy(rho)
    if entropy > PURITY_TOL:
        raise NotPureError('state is not pure! (entropy: {:.3e})'
                           .format(entropy))

    n = rho.n
    return (factorial(k)
            * (marginal_mi_sum(rho, k) + marginal_entropy_sum(rho, k))
            / prod(n - ii for ii in range(1, k + 1)))

def residual_correlation(rho):
    """
    Residual three-partite total correlation I(rho) - 2/3 I_2(rho).
    """
    if rho.n != 3:
        raise WrongArityError('residual correlation needs three subsystems!'
                              ' (n: {})'.format(rho.n))

    value = retc(rho) - 2.0 * marginal_mi_sum(rho, 1) / 3.0
    return clamp(value, 'residual correlation', slack=RESIDUAL_SLACK)

def closest_product_state(rho):
    """
    The product of the single-party marginals of `rho`.
    """
    if rho.n < 2:
        raise SinglePartySystemError('product state needs at least two'
                                     ' subsystems!')

    return tensor(marginals(rho))

def decomposition_identity_gap(rho, sigmas):
    """
    |S(rho||(x)sigma_s) - S(rho||(x)rho_s) - sum_s S(rho_s||sigma_s)|.
    """
    sigmas = list(sigmas)
    if len(sigmas) != rho.n:
        raise ShapeMismatchError('expected {} single-party states, got {}!'
                                 .format(rho.n, len(sigmas)))

    rhos = marginals(rho)
    for ii, (marginal, sigma) in enumerate(zip(rhos, sigmas)):
        if tuple(sigma.shape) != tuple(marginal.shape):
            raise ShapeMismatchError('state {} has shape {}, expected {}!'
                                     .format(ii + 1, tuple(sigma.shape),
                                             tuple(marginal.shape)))

    terms = ([relative_entropy(rho, tensor(sigmas)),
              relative_entropy(rho, tensor(rhos))]
             + [relative_entropy(marginal, sigma)
                for marginal, sigma in zip(rhos, sigmas)])
    if not np.all(np.isfinite(terms)):
        raise InfiniteTermError('infinite relative entropy term! ({})'
                                .format(terms))

    return abs(terms[0] - terms[1] - sum(terms[2:]))

class CorrelationProfile(Struct):
    pass

def correlation_profile(rho):
    """
    Collect all scalar measures of `rho` into a :class:`CorrelationProfile`.

    `bipartite_mi_sum` and `residual` are None unless n = 3.
    """
    n = rho.n
    entropies = [von_neumann_entropy(marginal) for marginal in marginals(rho)]
    total = von_neumann_entropy(rho)
    profile = CorrelationProfile(
        n=n,
        total_entropy=total,
        marginal_entropies=entropies,
        retc=clamp(sum(entropies) - total, 'total correlation')
        if n >= 2 else 0.0,
        bipartite_mi_sum=None,
        residual=None,
        marginal_mi_sums={k : marginal_mi_sum(rho, k)
                          for k in range(1, n - 1)},
        marginal_entropy_sums={k : marginal_entropy_sum(rho, k)
                               for k in range(1, n)},
    )
    if n == 3:
        profile.bipartite_mi_sum = profile.marginal_mi_sums[1]
        profile.residual = residual_correlation(rho)

    return profile
