"""
Builtin states addressed by name on the command line.

Names: ghz2, ..., ghz6, w3, bell, chi-uniform-2, product-bell,
wghz:p=<value> and chi:p=[p1,p2,...],d=<local dimension>,n=<parties>.
"""
import os.path as op

from pyparsing import ParseBaseException

from mpmi.errors import UsageError
from mpmi.ioutils import load_state
from mpmi.parsing import parse_as_dict
from mpmi.states import (ghz, w3, bell, classical_chi, product_bell,
                         wghz_mixture)

def _check_keys(base, pars, allowed):
    unknown = sorted(str(key) for key in set(pars) - set(allowed))
    if unknown:
        raise UsageError('unknown {} parameters! ({}, use {})'
                         .format(base, unknown, list(allowed)))

def _get_number(base, pars, key, default=None, integer=False):
    value = pars.get(key, default)
    kinds = (int,) if integer else (int, float)
    if isinstance(value, bool) or not isinstance(value, kinds):
        raise UsageError('{} parameter {} must be {}! ({}={!r})'
                         .format(base, key,
                                 'an integer' if integer else 'a number',
                                 key, value))

    return value

def _make_chi(pars):
    _check_keys('chi', pars, ('p', 'd', 'n'))
    probs = pars.get('p', [0.5, 0.5])
    if not isinstance(probs, list):
        probs = [probs]

    probs = [_get_number('chi', {'p' : prob}, 'p') for prob in probs]
    dim = _get_number('chi', pars, 'd', max(len(probs), 2), integer=True)
    n = _get_number('chi', pars, 'n', 3, integer=True)
    return classical_chi(probs, (dim,) * max(n, 0))

def _make_wghz(pars):
    _check_keys('wghz', pars, ('p',))
    if 'p' not in pars:
        raise UsageError('wghz needs the mixing parameter! (wghz:p=<value>)')

    return wghz_mixture(float(_get_number('wghz', pars, 'p')))

builtin_states = {
    'w3' : lambda pars: w3(),
    'bell' : lambda pars: bell(),
    'chi-uniform-2' : lambda pars: classical_chi([0.5, 0.5], (2, 2, 2)),
    'product-bell' : lambda pars: product_bell(),
    'wghz' : _make_wghz,
    'chi' : _make_chi,
}
builtin_states.update({'ghz{}'.format(n) : (lambda pars, n=n: ghz(n))
                       for n in range(2, 7)})

def split_name(name):
    """
    Split 'base:pars' into the base name and the parsed parameters dict.
    """
    base, _, spars = name.partition(':')
    try:
        pars = parse_as_dict(spars) if spars else {}

    except ParseBaseException as exc:
        raise UsageError('cannot parse builtin state parameters! ({}: {})'
                         .format(spars, exc))

    return base, pars

def make_builtin(name):
    base, pars = split_name(name)
    if base not in builtin_states:
        raise UsageError('unknown builtin state! ({}, use one of {})'
                         .format(base, sorted(builtin_states)))

    return builtin_states[base](pars)

def get_state(source):
    """
    Return the state given by a qstate file path or a builtin name.
    """
    if op.isfile(source):
        return load_state(source)

    return make_builtin(source)
