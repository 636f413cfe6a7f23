from io import StringIO
import os

import numpy as np
import pandas as pd
import pytest

cmd_audit = r"""{data_dir}/ghz3.qstate --out {output_dir}/audit/ghz3.csv --silent"""

cmd_measures = r"""--k 1 --format csv --silent ghz4"""

cmd_sweep = r"""--steps 101 -o {output_dir}/sweep/wghz.csv --silent"""

cmd_random = r"""--shape 2,2,2 --rank 8 --samples 1000 --seed 42 -o {output_dir}/random/ginibre.csv --silent"""

cmd_convert = r"""ghz3 -o {output_dir}/convert/ghz3.qstate --silent"""

@pytest.fixture(scope='session')
def data_dir():
    return os.path.join(os.path.dirname(__file__), 'data')

@pytest.fixture(scope='session')
def output_dir(tmpdir_factory):
    return tmpdir_factory.mktemp('output')

def read_bytes(filename):
    with open(filename, 'rb') as fd:
        return fd.read()

def test_audit_state(data_dir, output_dir):
    import mpmi.audit_state as ast

    options = ast.parse_args(args=cmd_audit
                             .format(data_dir=data_dir,
                                     output_dir=output_dir).split())
    status = ast.run_audit(options)
    assert status == 0

    df = pd.read_csv(os.path.join(output_dir, 'audit/ghz3.csv'))
    assert (df['status'] == 'ok').all()
    bound = df.loc[df['check'] == 'lower_bound', 'margin'].iloc[0]
    assert abs(bound - 1.0) < 1e-9

def test_audit_builtins(capsys):
    import mpmi.audit_state as ast

    assert ast.main(['--silent', 'chi-uniform-2']) == 0
    out = capsys.readouterr().out
    assert 'saturating: ssa[123]' in out
    assert 'all checks satisfied: yes' in out

    assert ast.main(['--silent', 'w3']) == 0
    out = capsys.readouterr().out
    assert 'pure_identity' in out

    assert ast.main(['--silent', '--format', 'csv', 'bell']) == 0
    df = pd.read_csv(StringIO(capsys.readouterr().out))
    assert 'ssa' not in set(df['check'])

def test_audit_failure(monkeypatch, capsys):
    import mpmi.audit_state as ast
    from mpmi.audit import AuditReport, make_result, make_tolerances

    def audit_state(rho, descriptor='', **kwargs):
        result = make_result('ssa', -1e-3, 1e-8, permutation=(1, 2, 3),
                             label='123')
        return AuditReport(state_descriptor=descriptor,
                           shape=tuple(rho.shape), results=[result],
                           notes=[], saturating=[],
                           tolerances=make_tolerances(), profile=None)

    monkeypatch.setattr(ast, 'audit_state', audit_state)
    assert ast.main(['--silent', 'ghz3']) == 1
    out = capsys.readouterr().out
    assert 'FAILED' in out
    assert 'all checks satisfied: no' in out

def test_audit_errors(output_dir):
    import mpmi.audit_state as ast

    assert ast.main(['--silent', 'ghz9']) == 2
    assert ast.main(['--silent', '--tolerance-ineq=-1', 'ghz3']) == 2

    filename = os.path.join(output_dir, 'bad-trace.qstate')
    with open(filename, 'w') as fd:
        fd.write('qstate v1\ndims: 2\n0.49,0 0,0\n0,0 0.49,0\n')
    assert ast.main(['--silent', filename]) == 3

    filename = os.path.join(output_dir, 'bad-syntax.qstate')
    with open(filename, 'w') as fd:
        fd.write('qstate v1\ndims: 2\n1;0 0,0\n0,0 0,0\n')
    assert ast.main(['--silent', filename]) == 2

def test_audit_builtin_parameters(capsys):
    import mpmi.audit_state as ast

    assert ast.main(['--silent', 'chi:p=[0.99999,0.00001]']) == 0
    assert 'all checks satisfied: yes' in capsys.readouterr().out

    assert ast.main(['--silent', 'wghz:p=abc']) == 2
    assert 'wghz parameter p must be a number' in capsys.readouterr().err

    assert ast.main(['--silent', 'chi:d=2.5']) == 2
    assert 'chi parameter d must be an integer' in capsys.readouterr().err

    assert ast.main(['--silent', 'chi:n=1']) == 2
    assert 'audit needs at least two subsystems' in capsys.readouterr().err

def get_measures(out):
    df = pd.read_csv(StringIO(out))
    return dict(zip(df['measure'], df['bits']))

def test_print_measures(capsys):
    import mpmi.print_measures as pm

    options = pm.parse_args(args=cmd_measures.split())
    pm.run_measures(options)
    measures = get_measures(capsys.readouterr().out)
    assert abs(measures['I(rho)'] - 4.0) < 1e-9
    assert abs(measures['I_3'] - 8.0) < 1e-9
    assert abs(measures['S_1'] - 4.0) < 1e-9
    assert 'I_2' not in measures

    assert pm.main(['--format', 'csv', 'ghz3']) == 0
    measures = get_measures(capsys.readouterr().out)
    assert abs(measures['I_r'] - 1.0) < 1e-9

    assert pm.main(['--format', 'csv', 'product-bell']) == 0
    measures = get_measures(capsys.readouterr().out)
    assert abs(measures['I(rho)'] - 2.0) < 1e-9
    assert abs(measures['I_2'] - 2.0) < 1e-9
    assert abs(measures['I_r'] - 2.0 / 3.0) < 1e-9

    assert pm.main(['--silent', 'wghz:p=0.5']) == 0
    assert 'I_r' in capsys.readouterr().out

def test_print_measures_bad_k(capsys):
    import mpmi.print_measures as pm

    assert pm.main(['--silent', '--k', '5', 'ghz3']) == 2
    assert 'k must be in 1..2' in capsys.readouterr().err

def test_sweep_wghz(output_dir):
    import mpmi.sweep_wghz as sw

    options = sw.parse_args(args=cmd_sweep
                            .format(output_dir=output_dir).split())
    sw.run_sweep(options)

    filename = os.path.join(output_dir, 'sweep/wghz.csv')
    with open(filename) as fd:
        assert fd.readline() == 'p,retc,i2_sum,gap,residual\n'

    df = pd.read_csv(filename)
    assert len(df) == 101
    assert np.allclose(df['p'], np.linspace(0, 1, 101), rtol=0, atol=1e-15)
    assert np.all(np.abs(df['gap'] - (df['retc'] - df['i2_sum'])) <= 1e-12)

    assert abs(df['gap'].iloc[0]) <= 1e-7
    assert abs(df['gap'].iloc[-1]) <= 1e-7
    assert (df['gap'].iloc[1:-1] > 1e-4).all()
    assert (df['residual'] >= 0.0).all()

    assert abs(df['retc'].iloc[0] - 3.0) < 1e-9
    assert abs(df['i2_sum'].iloc[0] - 3.0) < 1e-9

    with open(os.path.join(output_dir, 'sweep/wghz-options.txt')) as fd:
        text = fd.read()
    assert 'steps: 101' in text
    assert 'timestamp: ' in text

    with open(os.path.join(output_dir, 'sweep/wghz-log.txt')) as fd:
        lines = fd.read().splitlines()
    assert lines[0] == 'sweep: sweeping 101 mixing parameters...'
    assert any(line.startswith('sweep: sweep saved to') for line in lines)

    # Byte-identical output on a rerun.
    options.out = os.path.join(output_dir, 'sweep/wghz2.csv')
    sw.run_sweep(options)
    assert read_bytes(filename) == read_bytes(options.out)

def test_sweep_wghz_steps(capsys):
    import mpmi.sweep_wghz as sw

    assert sw.main(['--steps', '2']) == 0
    df = pd.read_csv(StringIO(capsys.readouterr().out))
    assert list(df['p']) == [0.0, 1.0]
    assert (np.abs(df['gap']) <= 1e-7).all()

    assert sw.main(['--steps', '1', '--silent']) == 2

def test_random_audit(output_dir):
    import mpmi.random_audit as ra

    options = ra.parse_args(args=cmd_random
                            .format(output_dir=output_dir).split())
    status = ra.run_random_audit(options)
    assert status == 0

    df = pd.read_csv(os.path.join(output_dir, 'random/ginibre.csv'))
    assert df['satisfied'].all()
    assert (df['min_margin'] >= -1e-8).all()

    with open(os.path.join(output_dir, 'random/ginibre-log.txt')) as fd:
        text = fd.read()
    assert 'random: evaluating 1000 ginibre states' in text
    assert 'random: all minimum margins within tolerance: yes' in text

def test_random_audit_options(output_dir, capsys):
    import mpmi.random_audit as ra

    assert ra.main(['--silent', '--samples', '0']) == 2
    assert ra.main(['--silent', '--shape', '2,a']) == 2
    assert ra.main(['--silent', '--rank', '9']) == 2
    capsys.readouterr()

    assert ra.main(['--silent', '--shape', '2,2', '--samples', '10']) == 0
    out = capsys.readouterr().out
    assert 'three-party checks skipped' in out
    assert 'ssa' not in out

    filenames = [os.path.join(output_dir, 'random/pure{}.csv'.format(ii))
                 for ii in range(2)]
    for filename in filenames:
        assert ra.main(['--silent', '--family', 'pure', '--samples', '20',
                        '--seed', '3', '-o', filename]) == 0
    assert read_bytes(filenames[0]) == read_bytes(filenames[1])

def test_convert_state(data_dir, output_dir, capsys):
    import mpmi.convert_state as cs
    from mpmi.ioutils import load_state, loads_state
    from mpmi.states import ghz

    options = cs.parse_args(args=cmd_convert
                            .format(output_dir=output_dir).split())
    cs.run_convert(options)
    rho = load_state(os.path.join(output_dir, 'convert/ghz3.qstate'))
    assert np.max(np.abs(rho.matrix - ghz(3).matrix)) <= 1e-15

    assert cs.main(['--silent', os.path.join(data_dir, 'ghz3.qstate')]) == 0
    out = capsys.readouterr().out
    assert 'shape: (2, 2, 2)' in out
    assert 'trace: 0' in out

    assert cs.main(['--format', 'qstate', 'wghz:p=0.25']) == 0
    rho = loads_state(capsys.readouterr().out)
    assert tuple(rho.shape) == (2, 2, 2)

def test_cli(capsys):
    from mpmi.cli import main

    assert main(['measures', 'ghz3', '--silent']) == 0
    assert 'I(rho)' in capsys.readouterr().out

    assert main(['audit', '--silent', 'ghz9']) == 2
    assert main(['bogus']) == 2
