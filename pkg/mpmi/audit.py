"""
Evaluation of the entropy and correlation equalities and inequalities on
given states, and randomized ensemble campaigns.

Every check returns a :class:`CheckResult` with a signed margin in bits:
margin >= 0 means satisfied, equality checks report -|difference|.
"""
from functools import partial
from itertools import combinations

import numpy as np
import pandas as pd

from mpmi.base import Struct, output
from mpmi.errors import (WrongArityError, BadSubsystemSetError,
                         BadParameterError, BadKError)
from mpmi.linalg import ZERO_THRESHOLD
from mpmi.states import (SystemShape, partial_trace, complement,
                         classical_chi, random_mixed, random_pure,
                         complex_gaussian)
from mpmi.correlations import (von_neumann_entropy, relative_entropy, retc,
                               closest_product_state, pure_distribution_rhs,
                               marginal_mi_sum, correlation_profile,
                               PURITY_TOL, WEIGHT_THRESHOLD)
from mpmi.parallel import map_ordered
from mpmi.timing import Timer

# Both printed orders pick each party once as the pivot s.
SSA_PERMUTATIONS = ((1, 2, 3), (2, 3, 1), (3, 2, 1))
LOWER_BOUND_PERMUTATIONS = ((1, 2, 3), (2, 3, 1), (3, 1, 2))

CHECKS = {
    'ssa' : 'strong subadditivity',
    'essa' : 'extended strong subadditivity',
    'monogamy_strong' : 'generalized monogamy (strong form)',
    'monogamy_weak' : 'generalized monogamy (weak form)',
    'lower_bound' : 'total correlation >= 2/3 bipartite sum',
    'pure_identity' : 'pure state distribution identity',
    'retc_divergence' : 'total correlation = divergence to marginal product',
    'subadditivity' : 'bipartite mutual information >= 0',
    'schmidt_symmetry' : 'pure state bipartition entropies agree',
    'closest_product' : 'marginal product is the closest product state',
}

ENSEMBLE_FAMILIES = ('ginibre', 'pure', 'chi')

def make_tolerances(ineq=1e-8, eq=1e-7, saturation=1e-6):
    """
    Inequality and equality tolerances and the near-saturation threshold, in
    bits.
    """
    return Struct(ineq=ineq, eq=eq, saturation=saturation)

class CheckResult(Struct):
    pass

def make_result(check_id, margin, tolerance, kind='ineq', permutation=None,
                label='', aux=None, errored=False):
    margin = float(margin)
    return CheckResult(
        check_id=check_id,
        margin=margin,
        tolerance=tolerance,
        satisfied=(not errored) and (margin >= -tolerance),
        kind=kind,
        permutation=permutation,
        label=label,
        aux=aux,
        errored=errored,
    )

class AuditReport(Struct):

    def all_satisfied(self):
        return all(result.satisfied for result in self.results)

    def failed(self):
        return [result for result in self.results if not result.satisfied]

class EntropyTable(dict):
    """
    Lazily computed entropies of the reductions of a state, keyed by sorted
    tuples of 1-based subsystem labels.
    """

    def __init__(self, rho):
        dict.__init__(self)
        self.rho = rho

    def __missing__(self, key):
        value = von_neumann_entropy(partial_trace(self.rho, key))
        self[key] = value
        return value

    def get_entropy(self, *parties):
        return self[tuple(sorted(parties))]

    def mi(self, *parties):
        """
        Total correlation of the reduction to `parties`.
        """
        return (sum(self.get_entropy(ii) for ii in parties)
                - self.get_entropy(*parties))

def _get_table(rho, entropies):
    return EntropyTable(rho) if entropies is None else entropies

def _check_three_party(rho, perm=None):
    if rho.n != 3:
        raise WrongArityError('three-party check needs n = 3! (n: {})'
                              .format(rho.n))

    if (perm is not None) and (sorted(perm) != [1, 2, 3]):
        raise BadSubsystemSetError('not a permutation of (1, 2, 3)! ({})'
                                   .format(perm))

def _tolerances(tolerances):
    return make_tolerances() if tolerances is None else tolerances

def _label(perm):
    return ''.join(str(ii) for ii in perm)

def _ssa_bracket(ent, perm):
    s, s1, s2 = perm
    return (ent.get_entropy(s, s1) + ent.get_entropy(s, s2)
            - ent.get_entropy(s) - ent.get_entropy(1, 2, 3))

def check_ssa(rho, perm, tolerances=None, entropies=None):
    """
    S(ss') + S(ss'') - S(s) - S(123) >= 0.
    """
    _check_three_party(rho, perm)
    ent = _get_table(rho, entropies)
    tol = _tolerances(tolerances).ineq
    return make_result('ssa', _ssa_bracket(ent, perm), tol,
                       permutation=tuple(perm), label=_label(perm))

def check_essa(rho, perm, tolerances=None, entropies=None):
    """
    The strong subadditivity bracket bounded from below by
    2 max{S(s') - S(s's''), S(s'') - S(s's''), 0}.
    """
    _check_three_party(rho, perm)
    ent = _get_table(rho, entropies)
    tol = _tolerances(tolerances).ineq
    s, s1, s2 = perm
    pair = ent.get_entropy(s1, s2)
    bound = 2.0 * max(ent.get_entropy(s1) - pair,
                      ent.get_entropy(s2) - pair, 0.0)
    return make_result('essa', _ssa_bracket(ent, perm) - bound, tol,
                       permutation=tuple(perm), label=_label(perm))

def check_monogamy_strong(rho, perm, tolerances=None, entropies=None):
    """
    I(123) >= I(ss') + I(ss'') + 2 max{I(s's'') - S(s'), I(s's'') - S(s''),
    0}.
    """
    _check_three_party(rho, perm)
    ent = _get_table(rho, entropies)
    tol = _tolerances(tolerances).ineq
    s, s1, s2 = perm
    mi_pair = ent.mi(s1, s2)
    bound = 2.0 * max(mi_pair - ent.get_entropy(s1),
                      mi_pair - ent.get_entropy(s2), 0.0)
    margin = ent.mi(1, 2, 3) - ent.mi(s, s1) - ent.mi(s, s2) - bound
    return make_result('monogamy_strong', margin, tol,
                       permutation=tuple(perm), label=_label(perm))

def check_monogamy_weak(rho, perm, tolerances=None, entropies=None):
    """
    I(123) >= I(ss') + I(ss'').
    """
    _check_three_party(rho, perm)
    ent = _get_table(rho, entropies)
    tol = _tolerances(tolerances).ineq
    s, s1, s2 = perm
    margin = ent.mi(1, 2, 3) - ent.mi(s, s1) - ent.mi(s, s2)
    return make_result('monogamy_weak', margin, tol,
                       permutation=tuple(perm), label=_label(perm))

def check_lower_bound(rho, tolerances=None, entropies=None):
    """
    I(123) >= 2/3 (I(12) + I(13) + I(23)). The margin is the unclamped
    residual correlation.
    """
    _check_three_party(rho)
    ent = _get_table(rho, entropies)
    tol = _tolerances(tolerances).ineq
    pairs = ent.mi(1, 2) + ent.mi(1, 3) + ent.mi(2, 3)
    return make_result('lower_bound', ent.mi(1, 2, 3) - 2.0 * pairs / 3.0,
                       tol)

def check_pure_identity(rho, k, tolerances=None):
    """
    Total correlation of a pure state versus k! (I_{n-k} + S_k)
    / prod_{i=1}^k (n - i).

    For n >= 4 and k = 1, `aux` holds I_{n-1} - I, positive for correlated
    states.
    """
    if rho.n < 3:
        raise BadKError('pure state identity needs n >= 3! (n: {})'
                        .format(rho.n))

    tol = _tolerances(tolerances).eq
    rhs = pure_distribution_rhs(rho, k)
    value = retc(rho)
    aux = None
    if (rho.n >= 4) and (k == 1):
        aux = marginal_mi_sum(rho, 1) - value

    return make_result('pure_identity', -abs(value - rhs), tol, kind='eq',
                       label='k={}'.format(k), aux=aux)

def check_retc_divergence(rho, tolerances=None):
    """
    Sum of marginal entropies minus total entropy versus the relative entropy
    to the product of marginals.
    """
    tol = _tolerances(tolerances).eq
    div = relative_entropy(rho, closest_product_state(rho))
    if not np.isfinite(div):
        return make_result('retc_divergence', -np.inf, tol, kind='eq',
                           errored=True)

    return make_result('retc_divergence', -abs(retc(rho) - div), tol,
                       kind='eq')

def _cut_label(cut, n):
    return '{}|{}'.format(_label(cut), _label(complement(cut, n)))

def get_bipartitions(n):
    """
    All bipartitions of 1..n, each given by the part containing subsystem 1.
    """
    rest = range(2, n + 1)
    return [(1,) + extra
            for size in range(0, n - 1)
            for extra in combinations(rest, size)]

def check_subadditivity(rho, cut, tolerances=None, entropies=None):
    ent = _get_table(rho, entropies)
    tol = _tolerances(tolerances).ineq
    rest = complement(cut, rho.n)
    margin = (ent.get_entropy(*cut) + ent.get_entropy(*rest)
              - ent.get_entropy(*range(1, rho.n + 1)))
    return make_result('subadditivity', margin, tol,
                       label=_cut_label(cut, rho.n))

def check_schmidt_symmetry(rho, cut, tolerances=None, entropies=None):
    ent = _get_table(rho, entropies)
    tol = _tolerances(tolerances).eq
    rest = complement(cut, rho.n)
    margin = -abs(ent.get_entropy(*cut) - ent.get_entropy(*rest))
    return make_result('schmidt_symmetry', margin, tol, kind='eq',
                       label=_cut_label(cut, rho.n))

def sample_product_divergences(rho, samples, seed, batch_size=4096):
    """
    Relative entropies S(rho||sigma) for `samples` random product states
    sigma, each factor a full-rank Ginibre state.

    Infinite divergences are returned as ``numpy.inf``.
    """
    rng = np.random.default_rng(seed)
    neg_entropy = -von_neumann_entropy(rho)

    out = []
    for i0 in range(0, samples, batch_size):
        num = min(batch_size, samples - i0)
        sigma = np.ones((num, 1, 1), dtype=np.complex128)
        for dim in rho.shape:
            gmat = complex_gaussian(rng, (num, dim, dim))
            local = gmat @ gmat.conj().transpose(0, 2, 1)
            local /= np.trace(local, axis1=1, axis2=2).real[:, None, None]
            size = sigma.shape[1] * dim
            sigma = np.einsum('sab,scd->sacbd', sigma,
                              local).reshape(num, size, size)

        vals, vecs = np.linalg.eigh(sigma)
        weights = np.einsum('sji,jk,ski->si', vecs.conj(), rho.matrix,
                            vecs).real
        inside = vals > ZERO_THRESHOLD
        logs = np.log2(np.where(inside, vals, 1.0))
        div = neg_entropy - np.sum(weights * logs, axis=1)
        div[np.any(~inside & (weights > WEIGHT_THRESHOLD), axis=1)] = np.inf
        out.append(div)

    return np.concatenate(out) if len(out) else np.zeros(0)

def check_closest_product(rho, samples, seed, tolerances=None):
    """
    Sampling oracle: no sampled product state is closer to `rho` than the
    product of its marginals. `aux` is the divergence to the marginal
    product minus the total correlation.
    """
    tol = _tolerances(tolerances).ineq
    value = retc(rho)
    divs = sample_product_divergences(rho, samples, seed)
    aux = relative_entropy(rho, closest_product_state(rho)) - value
    return make_result('closest_product', divs.min() - value, tol,
                       label='samples={}'.format(samples), aux=aux)

def evaluate_checks(rho, tolerances=None, oracle_samples=0, oracle_seed=0):
    """
    Evaluate all checks applicable to `rho`.

    Returns
    -------
    results : list of CheckResult
        The results, in a fixed order.
    notes : list of str
        Notes on skipped check groups.
    """
    tolerances = _tolerances(tolerances)
    ent = EntropyTable(rho)
    n = rho.n
    notes = []
    results = []
    if n < 2:
        notes.append('single-party state: no correlation checks')
        return results, notes

    results.append(check_retc_divergence(rho, tolerances))
    cuts = get_bipartitions(n)
    results.extend(check_subadditivity(rho, cut, tolerances, ent)
                   for cut in cuts)

    pure = ent.get_entropy(*range(1, n + 1)) <= PURITY_TOL
    if pure:
        results.extend(check_schmidt_symmetry(rho, cut, tolerances, ent)
                       for cut in cuts)

    if n == 3:
        for fun in (check_ssa, check_essa, check_monogamy_strong):
            results.extend(fun(rho, perm, tolerances, ent)
                           for perm in SSA_PERMUTATIONS)
        results.extend(check_monogamy_weak(rho, perm, tolerances, ent)
                       for perm in LOWER_BOUND_PERMUTATIONS)
        results.append(check_lower_bound(rho, tolerances, ent))

    else:
        notes.append('three-party checks skipped (n = {})'.format(n))

    if pure and (n >= 3):
        results.extend(check_pure_identity(rho, k, tolerances)
                       for k in range(1, n - 1))

    elif not pure:
        notes.append('pure state checks skipped (mixed state)')

    else:
        notes.append('pure state identity skipped (n = {})'.format(n))

    if oracle_samples > 0:
        results.append(check_closest_product(rho, oracle_samples,
                                             oracle_seed, tolerances))

    return results, notes

def is_saturating(kind, margin, tolerances):
    """
    An inequality holding with equality within the saturation threshold.
    """
    return (kind == 'ineq') and (abs(margin) <= tolerances.saturation)

def audit_state(rho, descriptor='', tolerances=None, oracle_samples=0,
                oracle_seed=0):
    """
    Evaluate all applicable checks and the correlation profile of `rho`.
    """
    tolerances = _tolerances(tolerances)
    results, notes = evaluate_checks(rho, tolerances,
                                     oracle_samples=oracle_samples,
                                     oracle_seed=oracle_seed)
    saturating = [result for result in results
                  if is_saturating(result.kind, result.margin, tolerances)]
    return AuditReport(
        state_descriptor=descriptor,
        shape=tuple(rho.shape),
        results=results,
        notes=notes,
        saturating=saturating,
        tolerances=tolerances,
        profile=correlation_profile(rho),
    )

def make_ensemble_config(shape, samples, seed, family='ginibre', rank=None,
                         tolerances=None, n_workers=1):
    """
    Validated sampler settings of :func:`run_ensemble()`. `rank` defaults to
    the full dimension for the 'ginibre' family.
    """
    shape = SystemShape(shape)
    if family not in ENSEMBLE_FAMILIES:
        raise BadParameterError('unknown ensemble family! ({}, use one of'
                                ' {})'.format(family, ENSEMBLE_FAMILIES))

    if samples < 1:
        raise BadParameterError('number of samples must be >= 1! ({})'
                                .format(samples))

    if seed < 0:
        raise BadParameterError('seed must be >= 0! ({})'.format(seed))

    if rank is None:
        rank = shape.dim

    if not (1 <= rank <= shape.dim):
        raise BadParameterError('rank must be in 1..{}! ({})'
                                .format(shape.dim, rank))

    return Struct(shape=tuple(shape), samples=samples, seed=seed,
                  family=family, rank=rank,
                  tolerances=_tolerances(tolerances), n_workers=n_workers)

def make_sample(config, index):
    """
    The state number `index` of the ensemble, independent of the evaluation
    order.
    """
    rng = np.random.default_rng([config.seed, index])
    if config.family == 'ginibre':
        return random_mixed(config.shape, config.rank, rng)

    elif config.family == 'pure':
        return random_pure(config.shape, rng)

    else:
        probs = rng.dirichlet(np.ones(min(config.shape)))
        return classical_chi(probs / probs.sum(), config.shape)

def evaluate_sample(config, index):
    """
    Return (check_id, label, margin, satisfied, errored, kind) tuples for the
    sample `index`.
    """
    rho = make_sample(config, index)
    results, _ = evaluate_checks(rho, config.tolerances)
    return [(result.check_id, result.label, result.margin, result.satisfied,
             result.errored, result.kind)
            for result in results]

def summarize_ensemble(config, evaluations):
    """
    Fold per-sample evaluations (in sample order) into one row per check:
    the minimum margin, the sample index and label attaining it, the number
    of near-saturations of inequalities and of violations.
    """
    tols = config.tolerances
    rows = {}
    for index, evaluation in enumerate(evaluations):
        for check_id, label, margin, satisfied, errored, kind in evaluation:
            row = rows.get(check_id)
            if row is None:
                row = rows[check_id] = {
                    'check' : check_id, 'evaluations' : 0,
                    'min_margin' : np.inf, 'argmin_sample' : -1,
                    'argmin_label' : '', 'near_saturations' : 0,
                    'violations' : 0, 'errored' : 0,
                }

            row['evaluations'] += 1
            if margin < row['min_margin']:
                row.update(min_margin=margin, argmin_sample=index,
                           argmin_label=label)

            row['near_saturations'] += int(is_saturating(kind, margin, tols))
            row['violations'] += int(not satisfied)
            row['errored'] += int(errored)

    df = pd.DataFrame(list(rows.values()),
                      columns=['check', 'evaluations', 'min_margin',
                               'argmin_sample', 'argmin_label',
                               'near_saturations', 'violations', 'errored'])
    df['satisfied'] = (df['violations'] == 0)
    return df

def run_ensemble(config):
    """
    Evaluate all applicable checks on `config.samples` random states.

    Returns
    -------
    summary : pandas.DataFrame
        One row per check, see :func:`summarize_ensemble()`.
    """
    output('evaluating {} {} states of shape {}...'
           .format(config.samples, config.family, config.shape))
    with Timer('ensemble') as timer:
        evaluations = map_ordered(partial(evaluate_sample, config),
                                  range(config.samples),
                                  n_workers=config.n_workers,
                                  label='sample')
    output('...done in {:.2f} s'.format(timer.total))

    return summarize_ensemble(config, evaluations)
