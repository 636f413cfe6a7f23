import os

import numpy as np
import pandas as pd
import pytest

from mpmi.errors import StateParseError, InvariantViolationError, UsageError
from mpmi.parsing import parse_as_list, parse_as_dict
import mpmi.states as st
import mpmi.correlations as co
import mpmi.ioutils as io
from mpmi.catalog import get_state, make_builtin

@pytest.fixture(scope='session')
def data_dir():
    return os.path.join(os.path.dirname(__file__), 'data')

@pytest.fixture(scope='session')
def output_dir(tmpdir_factory):
    return tmpdir_factory.mktemp('output')

def test_parse_options():
    assert parse_as_list('2,2,2') == [2, 2, 2]
    assert parse_as_list('1') == [1]
    assert parse_as_list(None) == []
    assert parse_as_list([2, 3]) == [2, 3]

    assert parse_as_dict('p=0.25') == {'p' : 0.25}
    assert parse_as_dict('p=[0.5,0.25,0.25],d=3') == {'p' : [0.5, 0.25, 0.25],
                                                      'd' : 3}
    assert parse_as_dict('') == {}

def test_load_fixture(data_dir):
    rho = io.load_state(os.path.join(data_dir, 'ghz3.qstate'))
    assert tuple(rho.shape) == (2, 2, 2)
    assert abs(co.retc(rho) - 3.0) < 1e-9

def test_loads_state():
    rho = io.loads_state('qstate v1\ndims: 2\n1,0 0,0\n0,0 0,0\n')
    assert np.array_equal(rho.matrix, np.diag([1.0, 0.0]))

    text = """
# comments and blank lines are skipped
qstate v1

dims: 2
0.5,0 0,-0.5
# inside the matrix too
0,0.5 0.5,0
"""
    rho = io.loads_state(text)
    assert rho.matrix[0, 1] == -0.5j

def test_loads_state_errors():
    with pytest.raises(InvariantViolationError) as exc:
        io.loads_state('qstate v1\ndims: 2\n0.49,0 0,0\n0,0 0.49,0\n')
    assert exc.value.invariant == 'trace'
    assert abs(exc.value.magnitude - 0.02) < 1e-12
    assert exc.value.exit_code == 3

    with pytest.raises(StateParseError) as exc:
        io.loads_state('qstate v2\ndims: 2\n1,0 0,0\n0,0 0,0\n')
    assert exc.value.lineno == 1

    with pytest.raises(StateParseError) as exc:
        io.loads_state('qstate v1\ndims: 2\n1,0 0,0\n0,0 x,0\n')
    assert exc.value.lineno == 4
    assert exc.value.col > 1
    assert exc.value.exit_code == 2

    with pytest.raises(StateParseError) as exc:
        io.loads_state('qstate v1\ndims: 2\n1,0 0,0\n')
    assert exc.value.lineno == 4

    with pytest.raises(StateParseError) as exc:
        io.loads_state('qstate v1\ndims: 2\n1,0 0,0 0,0\n0,0 0,0\n')
    assert exc.value.lineno == 3

    with pytest.raises(StateParseError):
        io.loads_state('qstate v1\ndims: 1\n1,0\n')

    with pytest.raises(StateParseError):
        io.loads_state('')

def test_save_load_state(output_dir):
    for seed, shape in enumerate([(2,), (2, 3), (2, 2, 2)]):
        rho = st.random_mixed(shape, int(np.prod(shape)), seed)
        filename = os.path.join(output_dir, 'states', 'rho{}.qstate'
                                .format(seed))
        io.save_state(filename, rho, comment='seed {}'.format(seed))
        rho2 = io.load_state(filename)
        assert tuple(rho2.shape) == shape
        assert np.max(np.abs(rho2.matrix - rho.matrix)) <= 1e-15

        text = io.dumps_state(rho2, comment='seed {}'.format(seed))
        with open(filename) as fd:
            assert fd.read() == text

def test_write_csv(output_dir, capsys):
    df = pd.DataFrame({'p' : [0.0, 1.0 / 3.0], 'value' : [2.0, 0.1]})
    filename = os.path.join(output_dir, 'table.csv')
    io.write_csv(filename, df)
    with open(filename, 'rb') as fd:
        data = fd.read()

    assert data == (b'p,value\n0,2\n0.33333333333333331,'
                    b'0.10000000000000001\n')

    io.write_csv('-', df)
    assert capsys.readouterr().out == data.decode()

def test_edit_filename():
    assert (io.edit_filename('out/sweep.csv', suffix='-options',
                             new_ext='.txt')
            == os.path.join('out', 'sweep-options.txt'))

def test_builtin_states():
    rho = make_builtin('wghz:p=0.25')
    assert np.allclose(rho.matrix, st.wghz_mixture(0.25).matrix)

    rho = make_builtin('chi:p=[0.5,0.25,0.25],d=3')
    assert tuple(rho.shape) == (3, 3, 3)

    rho = make_builtin('chi:p=[0.5,0.5],n=4')
    assert tuple(rho.shape) == (2, 2, 2, 2)

    rho = make_builtin('chi-uniform-2')
    assert abs(co.retc(rho) - 2.0) < 1e-9

    assert tuple(get_state('product-bell').shape) == (2, 2, 2)

    for name in ('ghz7', 'wghz', 'wghz:p=[', 'foo.qstate', 'wghz:p=abc',
                 'wghz:q=0.3', 'wghz:p=True', 'chi:p=[0.5,x]',
                 'chi:d=2.5', 'chi:n=abc', 'chi:p=0.5,m=2'):
        with pytest.raises(UsageError):
            get_state(name)
